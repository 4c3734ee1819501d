#include "cvd/kempe.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace cvd {

namespace {

template <typename T>
T pick_uniform(const std::vector<T>& items, Rng& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, items.size() - 1);
    return items[pick(rng)];
}

}  // namespace

KempeNextResult kempe_next(Graph& g, ConflictDictionary& cd, VertexId last, VertexId node,
                           Color new_color, Rng& rng) {
    std::vector<VertexId> candidates;
    for (const Incidence& inc : g.incident(node))
        if (inc.neighbor != last && g.color(inc.edge) == new_color)
            candidates.push_back(inc.neighbor);

    std::optional<VertexId> next;
    if (!candidates.empty()) next = pick_uniform(candidates, rng);

    const Color old_color = g.color(g.edge_id(last, node));
    const int variation = color_edge_and_update(g, cd, last, node, new_color);
    return {variation, old_color, next};
}

KempeStepResult kempe_step(Graph& g, ConflictDictionary& cd, VertexId last, VertexId node,
                           Color new_color, Rng& rng) {
    const KempeNextResult r = kempe_next(g, cd, last, node, new_color, rng);
    if (r.variation < 0 || !r.next) return {node, std::nullopt, std::nullopt};
    return {node, r.next, r.old_color};
}

std::size_t kempe_process(Graph& g, ConflictDictionary& cd, VertexId start, VertexId node,
                          Color new_color, Rng& rng) {
    std::unordered_set<VertexId> chain;
    std::size_t recolorings = 0;
    VertexId last = start;
    std::optional<Color> carry = new_color;
    while (carry && !chain.contains(last)) {
        chain.insert(last);
        const KempeStepResult step = kempe_step(g, cd, last, node, *carry, rng);
        ++recolorings;
        last = step.last;
        carry = step.carry_color;
        if (step.next) node = *step.next;
    }
    return recolorings;
}

std::size_t kempe_start(Graph& g, ConflictDictionary& cd, VertexId v, Rng& rng) {
    const Color num_colors = cd.num_colors();
    std::vector<std::size_t> count(static_cast<std::size_t>(num_colors), 0);
    const auto incident = g.incident(v);
    for (const Incidence& inc : incident) {
        const Color c = g.color(inc.edge);
        if (c < 0 || c >= num_colors)
            throw std::logic_error("edge at vertex " + std::to_string(v) +
                                   " carries color outside [0,D)");
        ++count[static_cast<std::size_t>(c)];
    }

    std::vector<VertexId> repeated;
    for (const Incidence& inc : incident)
        if (count[static_cast<std::size_t>(g.color(inc.edge))] > 1) repeated.push_back(inc.neighbor);
    if (repeated.empty()) return 0;

    std::vector<Color> available;
    for (Color c = 0; c < num_colors; ++c)
        if (count[static_cast<std::size_t>(c)] == 0) available.push_back(c);
    if (available.empty())
        throw std::logic_error("no free color at vertex " + std::to_string(v) +
                               "; degree exceeds the number of colors");

    const VertexId second = pick_uniform(repeated, rng);
    const Color new_color = pick_uniform(available, rng);
    return kempe_process(g, cd, v, second, new_color, rng);
}

}  // namespace cvd

#include "cvd/precolor.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cvd {

std::string_view to_string(PrecolorMode mode) {
    return mode == PrecolorMode::greedy ? "greedy" : "random";
}

PrecolorMode parse_precolor_mode(std::string_view text) {
    if (text == "greedy") return PrecolorMode::greedy;
    if (text == "random") return PrecolorMode::random;
    throw std::invalid_argument("unknown precolor mode '" + std::string(text) + "'");
}

namespace {

void require_colors(const Graph& g, Color num_colors) {
    if (num_colors < 1 && g.num_edges() > 0)
        throw std::invalid_argument("pre-coloring needs at least one color");
}

std::vector<EdgeId> canonical_edge_order(const Graph& g) {
    std::vector<EdgeId> order(g.num_edges());
    std::iota(order.begin(), order.end(), EdgeId{0});
    auto key = [&](EdgeId e) {
        const Edge& ed = g.edge(e);
        return std::pair{std::min(ed.u, ed.v), std::max(ed.u, ed.v)};
    };
    std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return key(a) < key(b); });
    return order;
}

}  // namespace

std::size_t greedy_precolor(Graph& g, Color num_colors, Rng& rng) {
    require_colors(g, num_colors);
    g.clear_colors();
    std::uniform_int_distribution<Color> any(0, std::max<Color>(num_colors - 1, 0));
    std::vector<char> used(static_cast<std::size_t>(std::max<Color>(num_colors, 0)));
    std::vector<Color> available;
    std::size_t fallbacks = 0;

    for (EdgeId e : canonical_edge_order(g)) {
        std::fill(used.begin(), used.end(), 0);
        for (VertexId end : {g.edge(e).u, g.edge(e).v})
            for (const Incidence& inc : g.incident(end))
                if (const Color c = g.color(inc.edge); c != kUncolored)
                    used[static_cast<std::size_t>(c)] = 1;

        available.clear();
        for (Color c = 0; c < num_colors; ++c)
            if (!used[static_cast<std::size_t>(c)]) available.push_back(c);

        if (available.empty()) {
            g.set_color(e, any(rng));
            ++fallbacks;
        } else {
            std::uniform_int_distribution<std::size_t> pick(0, available.size() - 1);
            const Color c = available[pick(rng)];
            assert(!used[static_cast<std::size_t>(c)]);
            g.set_color(e, c);
        }
    }
    return fallbacks;
}

void random_precolor(Graph& g, Color num_colors, Rng& rng) {
    require_colors(g, num_colors);
    std::uniform_int_distribution<Color> any(0, std::max<Color>(num_colors - 1, 0));
    for (EdgeId e = 0; e < g.num_edges(); ++e) g.set_color(e, any(rng));
}

void precolor(Graph& g, Color num_colors, PrecolorMode mode, Rng& rng) {
    if (mode == PrecolorMode::greedy)
        greedy_precolor(g, num_colors, rng);
    else
        random_precolor(g, num_colors, rng);
}

}  // namespace cvd

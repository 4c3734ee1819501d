#include "cvd/graph.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace cvd {

namespace {

std::string pair_text(const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

std::uint64_t pair_key(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t{a} << 32) | b;
}

}  // namespace

Graph::Graph(std::size_t n, std::span<const Edge> edges)
    : adjacency_(n) {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n)
            throw GraphError("edge " + pair_text(e) + " has an endpoint outside [0," +
                             std::to_string(n) + ")");
        if (e.u == e.v) throw GraphError("edge " + pair_text(e) + " is a self-loop");
        if (!seen.insert(pair_key(e.u, e.v)).second)
            throw GraphError("edge " + pair_text(e) + " is repeated");
        const auto id = static_cast<EdgeId>(edges_.size());
        edges_.push_back(e);
        adjacency_[e.u].push_back({e.v, id});
        adjacency_[e.v].push_back({e.u, id});
    }
    colors_.assign(edges_.size(), kUncolored);
    for (const auto& adj : adjacency_) max_degree_ = std::max(max_degree_, adj.size());
}

void Graph::check_vertex(VertexId v) const {
    if (v >= adjacency_.size())
        throw GraphError("vertex " + std::to_string(v) + " out of range [0," +
                         std::to_string(adjacency_.size()) + ")");
}

std::size_t Graph::degree(VertexId v) const {
    check_vertex(v);
    return adjacency_[v].size();
}

std::span<const Incidence> Graph::incident(VertexId v) const {
    check_vertex(v);
    return adjacency_[v];
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
    const VertexId other = &a == &adjacency_[u] ? v : u;
    for (const Incidence& inc : a)
        if (inc.neighbor == other) return inc.edge;
    return std::nullopt;
}

EdgeId Graph::edge_id(VertexId u, VertexId v) const {
    if (auto e = find_edge(u, v)) return *e;
    throw GraphError("no edge " + pair_text({u, v}));
}

std::optional<Color> Graph::edge_color(VertexId u, VertexId v) const {
    const Color c = colors_[edge_id(u, v)];
    if (c == kUncolored) return std::nullopt;
    return c;
}

void Graph::clear_colors() { std::fill(colors_.begin(), colors_.end(), kUncolored); }

bool Graph::fully_colored() const {
    return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c == kUncolored; });
}

std::size_t Graph::distinct_incident_colors(VertexId v) const {
    check_vertex(v);
    std::uint64_t mask = 0;
    bool wide = false;
    for (const Incidence& inc : adjacency_[v]) {
        const Color c = colors_[inc.edge];
        if (c == kUncolored)
            throw GraphError("vertex " + std::to_string(v) + " has an uncolored incident edge");
        if (c < 0 || c >= 64) {
            wide = true;
            break;
        }
        mask |= std::uint64_t{1} << c;
    }
    if (!wide) return static_cast<std::size_t>(std::popcount(mask));

    std::vector<Color> cs;
    cs.reserve(adjacency_[v].size());
    for (const Incidence& inc : adjacency_[v]) {
        if (colors_[inc.edge] == kUncolored)
            throw GraphError("vertex " + std::to_string(v) + " has an uncolored incident edge");
        cs.push_back(colors_[inc.edge]);
    }
    return count_distinct(cs);
}

std::size_t count_distinct(std::span<const Color> colors) {
    std::vector<Color> cs(colors.begin(), colors.end());
    std::sort(cs.begin(), cs.end());
    return static_cast<std::size_t>(std::unique(cs.begin(), cs.end()) - cs.begin());
}

}  // namespace cvd

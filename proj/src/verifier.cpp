#include "cvd/verifier.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cvd {

bool properly_colored(const Graph& g, VertexId v, Color colors) {
    const std::size_t distinct = g.distinct_incident_colors(v);
    if (distinct != g.degree(v)) return false;
    for (const Incidence& inc : g.incident(v)) {
        const Color c = g.color(inc.edge);
        if (c < 0 || c >= colors) return false;
    }
    return true;
}

bool check_edge_coloring_serial(const Graph& g, Color colors) {
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (!properly_colored(g, v, colors)) return false;
    return true;
}

bool check_edge_coloring(const Graph& g, Color colors) {
    if (!g.fully_colored()) throw GraphError("coloring is not total");
    const auto n = static_cast<std::int64_t>(g.num_vertices());
    bool ok = true;
#pragma omp parallel for reduction(&& : ok) schedule(static)
    for (std::int64_t v = 0; v < n; ++v)
        ok = ok && properly_colored(g, static_cast<VertexId>(v), colors);
    return ok;
}

namespace {

class Backtracker {
public:
    Backtracker(const Graph& g, Color colors) : colors_(colors), used_(g.num_vertices(), 0) {
        order_.resize(g.num_edges());
        for (EdgeId e = 0; e < g.num_edges(); ++e) order_[e] = g.edge(e);
        std::sort(order_.begin(), order_.end(), [](const Edge& a, const Edge& b) {
            return std::pair{std::min(a.u, a.v), std::max(a.u, a.v)} <
                   std::pair{std::min(b.u, b.v), std::max(b.u, b.v)};
        });
    }

    bool solve() {
        if (order_.empty()) return true;
        if (colors_ < 1) return false;
        // First edge is fixed to color 0; any solution can be relabelled.
        return place(0, 0, 0);
    }

private:
    bool place(std::size_t i, Color first, Color last) {
        const Edge& e = order_[i];
        for (Color c = first; c <= last; ++c) {
            const std::uint64_t bit = std::uint64_t{1} << c;
            if ((used_[e.u] | used_[e.v]) & bit) continue;
            used_[e.u] |= bit;
            used_[e.v] |= bit;
            const bool done = i + 1 == order_.size() || place(i + 1, 0, colors_ - 1);
            used_[e.u] &= ~bit;
            used_[e.v] &= ~bit;
            if (done) return true;
        }
        return false;
    }

    Color colors_;
    std::vector<std::uint64_t> used_;
    std::vector<Edge> order_;
};

}  // namespace

bool edge_colorable(const Graph& g, Color colors, std::size_t max_edges) {
    if (g.num_edges() > max_edges)
        throw std::invalid_argument("brute-force edge coloring capped at " +
                                    std::to_string(max_edges) + " edges, graph has " +
                                    std::to_string(g.num_edges()));
    if (colors > 63) throw std::invalid_argument("brute-force edge coloring supports D <= 63");
    return Backtracker(g, colors).solve();
}

std::size_t brute_force_chromatic_index(const Graph& g, std::size_t max_edges) {
    const auto delta = static_cast<Color>(g.max_degree());
    if (edge_colorable(g, delta, max_edges)) return static_cast<std::size_t>(delta);
    if (edge_colorable(g, delta + 1, max_edges)) return static_cast<std::size_t>(delta + 1);
    throw std::logic_error("no edge coloring with max degree + 1 colors; graph is not simple");
}

}  // namespace cvd

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cvd {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Color = std::int32_t;

/// Sentinel for an edge that has not been assigned a color yet.
inline constexpr Color kUncolored = -1;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Incidence {
    VertexId neighbor;
    EdgeId edge;

    friend bool operator==(const Incidence&, const Incidence&) = default;
};

struct Edge {
    VertexId u;
    VertexId v;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/**
 * Simple undirected graph with one color slot per edge.
 *
 * Vertices are the dense range [0, n). Both orientations of an edge share
 * the same slot, so edge_color(u, v) == edge_color(v, u) always holds.
 * The vertex/edge structure is fixed after construction; only colors change.
 */
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on a self-loop, a repeated pair or an endpoint >= n.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t num_vertices() const { return adjacency_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    std::size_t degree(VertexId v) const;
    std::size_t max_degree() const { return max_degree_; }

    std::span<const Incidence> incident(VertexId v) const;
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    std::span<const Edge> edges() const { return edges_; }

    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;
    /// Like find_edge but throws GraphError when {u,v} is not an edge.
    EdgeId edge_id(VertexId u, VertexId v) const;

    std::optional<Color> edge_color(VertexId u, VertexId v) const;
    Color color(EdgeId e) const { return colors_[e]; }
    void set_color(EdgeId e, Color c) { colors_[e] = c; }
    void set_edge_color(VertexId u, VertexId v, Color c) { colors_[edge_id(u, v)] = c; }
    void clear_colors();
    bool fully_colored() const;

    /// Number of distinct colors on the edges at v; throws if any is uncolored.
    std::size_t distinct_incident_colors(VertexId v) const;

    std::span<const Color> colors() const { return colors_; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(VertexId v) const;

    std::vector<std::vector<Incidence>> adjacency_;
    std::vector<Edge> edges_;
    std::vector<Color> colors_;
    std::size_t max_degree_ = 0;
};

/// Count distinct values in a small list of colors (all >= 0).
std::size_t count_distinct(std::span<const Color> colors);

}  // namespace cvd

#include "cvd/generators.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

namespace cvd {

namespace {

std::uint64_t key(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t{a} << 32) | b;
}

// Some pair of distinct leftover vertices is not yet an edge.
bool can_continue(const std::map<VertexId, std::size_t>& leftover,
                  const std::unordered_set<std::uint64_t>& edges) {
    for (auto a = leftover.begin(); a != leftover.end(); ++a)
        for (auto b = std::next(a); b != leftover.end(); ++b)
            if (!edges.contains(key(a->first, b->first))) return true;
    return false;
}

std::optional<std::vector<Edge>> try_pairing(std::size_t n, std::size_t d, Rng& rng) {
    std::vector<VertexId> stubs;
    stubs.reserve(n * d);
    for (VertexId v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(n * d);
    std::vector<Edge> edges;
    edges.reserve(n * d / 2);

    while (!stubs.empty()) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::map<VertexId, std::size_t> leftover;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            const VertexId a = stubs[i], b = stubs[i + 1];
            if (a != b && seen.insert(key(a, b)).second) {
                edges.push_back({std::min(a, b), std::max(a, b)});
            } else {
                ++leftover[a];
                ++leftover[b];
            }
        }
        if (leftover.empty()) break;
        if (!can_continue(leftover, seen)) return std::nullopt;
        stubs.clear();
        for (const auto& [v, count] : leftover) stubs.insert(stubs.end(), count, v);
    }
    return edges;
}

}  // namespace

Graph random_regular_graph(std::size_t n, std::size_t d, Rng& rng) {
    if ((n * d) % 2 != 0)
        throw GraphError("n*d must be even (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
    if (d >= n && !(n == 0 && d == 0))
        throw GraphError("degree " + std::to_string(d) + " must be below n=" + std::to_string(n));

    const std::size_t max_attempts = std::max<std::size_t>(10 * n, 1);
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        if (auto edges = try_pairing(n, d, rng)) {
            std::sort(edges->begin(), edges->end(), [](const Edge& a, const Edge& b) {
                return std::pair{a.u, a.v} < std::pair{b.u, b.v};
            });
            return Graph(n, *edges);
        }
    }
    throw GraphError("random regular generation gave up after " + std::to_string(max_attempts) +
                     " attempts");
}

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

void check_odd_k(unsigned k) {
    if (k < 2) throw GraphError("odd graph needs k >= 2, got " + std::to_string(k));
    if (k > 16) throw GraphError("odd graph supports k <= 16, got " + std::to_string(k));
}

// Colex rank of a subset: sum of C(position_i, i+1) over its elements in ascending order.
std::uint64_t colex_rank(std::uint32_t mask) {
    std::uint64_t rank = 0;
    unsigned i = 0;
    while (mask != 0) {
        const auto pos = static_cast<unsigned>(std::countr_zero(mask));
        rank += binomial(pos, ++i);
        mask &= mask - 1;
    }
    return rank;
}

// Next larger integer with the same popcount.
std::uint32_t next_same_popcount(std::uint32_t x) {
    const std::uint32_t low = x & (~x + 1);
    const std::uint32_t ripple = x + low;
    return ripple | (((x ^ ripple) >> 2) / low);
}

}  // namespace

std::uint32_t odd_graph_subset(unsigned k, VertexId id) {
    check_odd_k(k);
    const unsigned ground = 2 * k - 1;
    if (id >= binomial(ground, k - 1)) throw GraphError("vertex id outside odd graph");
    // Unrank greedily from the largest element down.
    std::uint32_t mask = 0;
    std::uint64_t r = id;
    for (unsigned i = k - 1; i >= 1; --i) {
        unsigned pos = i - 1;
        while (binomial(pos + 1, i) <= r) ++pos;
        r -= binomial(pos, i);
        mask |= std::uint32_t{1} << pos;
    }
    return mask;
}

Graph odd_graph(unsigned k) {
    check_odd_k(k);
    const unsigned ground = 2 * k - 1;
    const std::uint32_t full = (std::uint32_t{1} << ground) - 1;
    const auto n = static_cast<std::size_t>(binomial(ground, k - 1));

    std::vector<Edge> edges;
    edges.reserve(n * k / 2);
    std::uint32_t subset = (std::uint32_t{1} << (k - 1)) - 1;
    for (VertexId id = 0; id < n; ++id, subset = next_same_popcount(subset)) {
        const std::uint32_t complement = full & ~subset;
        for (std::uint32_t rest = complement; rest != 0; rest &= rest - 1) {
            const std::uint32_t neighbor = complement & ~(rest & (~rest + 1));
            const auto nid = static_cast<VertexId>(colex_rank(neighbor));
            if (id < nid) edges.push_back({id, nid});
        }
    }
    return Graph(n, edges);
}

}  // namespace cvd

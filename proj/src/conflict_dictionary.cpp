#include "cvd/conflict_dictionary.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace cvd {

std::size_t conflict_level(const Graph& g, VertexId v) {
    const std::size_t deg = g.degree(v);
    if (deg == 0) return 0;
    return deg - g.distinct_incident_colors(v);
}

std::int64_t total_conflicts_from_scratch(const Graph& g) {
    std::int64_t total = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        total += static_cast<std::int64_t>(conflict_level(g, v));
    return total;
}

ConflictDictionary ConflictDictionary::create(const Graph& g, Color num_colors) {
    ConflictDictionary cd;
    cd.num_colors_ = num_colors;
    cd.buckets_.resize(std::max<std::size_t>(g.max_degree(), 1));
    cd.level_.assign(g.num_vertices(), 0);
    cd.position_.assign(g.num_vertices(), 0);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const std::size_t l = conflict_level(g, v);
        if (l > 0) cd.insert(v, l);
    }
    return cd;
}

std::span<const VertexId> ConflictDictionary::bucket(std::size_t level) const {
    if (level == 0 || level >= buckets_.size()) return {};
    return buckets_[level];
}

std::size_t ConflictDictionary::max_level() const {
    for (std::size_t l = buckets_.size(); l-- > 1;)
        if (!buckets_[l].empty()) return l;
    throw std::logic_error("max_level on a conflict dictionary with no conflicting vertex");
}

VertexId ConflictDictionary::sample_max_level(Rng& rng) const {
    const auto& b = buckets_[max_level()];
    std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
    return b[pick(rng)];
}

void ConflictDictionary::insert(VertexId v, std::size_t level) {
    level_[v] = level;
    position_[v] = buckets_[level].size();
    buckets_[level].push_back(v);
    total_ += static_cast<std::int64_t>(level);
}

void ConflictDictionary::erase(VertexId v) {
    const std::size_t l = level_[v];
    auto& b = buckets_[l];
    const std::size_t pos = position_[v];
    b[pos] = b.back();
    position_[b[pos]] = pos;
    b.pop_back();
    level_[v] = 0;
    total_ -= static_cast<std::int64_t>(l);
}

int ConflictDictionary::refresh(const Graph& g, VertexId v) {
    const std::size_t old_level = level_[v];
    const std::size_t new_level = conflict_level(g, v);
    if (new_level != old_level) {
        if (old_level > 0) erase(v);
        if (new_level > 0) insert(v, new_level);
    }
    return static_cast<int>(new_level) - static_cast<int>(old_level);
}

bool ConflictDictionary::same_contents(const ConflictDictionary& other) const {
    if (total_ != other.total_ || level_ != other.level_) return false;
    const std::size_t levels = std::max(buckets_.size(), other.buckets_.size());
    for (std::size_t l = 1; l < levels; ++l) {
        auto a = std::vector<VertexId>(bucket(l).begin(), bucket(l).end());
        auto b = std::vector<VertexId>(other.bucket(l).begin(), other.bucket(l).end());
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    return true;
}

int color_edge_and_update(Graph& g, ConflictDictionary& cd, VertexId u, VertexId v, Color c) {
    const EdgeId e = g.edge_id(u, v);
    if (c < 0 || c >= cd.num_colors())
        throw std::out_of_range("color " + std::to_string(c) + " outside [0," +
                                std::to_string(cd.num_colors()) + ")");
    g.set_color(e, c);
    cd.refresh(g, u);
    return cd.refresh(g, v);
}

}  // namespace cvd

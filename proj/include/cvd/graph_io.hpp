#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>

#include "cvd/graph.hpp"

namespace cvd {

/// Malformed text input or an unreadable/unwritable file.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Coloring lines do not cover the graph's edges exactly once.
class ColoringMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A coloring line names a color outside [0, D).
class ColorOutOfRange : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Edge list: "n m" followed by m lines "u v", 0-based.
Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const Graph& g);

// Coloring: one "u v c" line per edge, in edge order.
void write_coloring(std::ostream& out, const Graph& g);

/**
 * Parse a coloring and store it on g's edges. Every edge must appear exactly
 * once, in either orientation. Colors must lie in [0, colors).
 */
void read_coloring(std::istream& in, Graph& g, Color colors);
void read_coloring(const std::filesystem::path& path, Graph& g, Color colors);

}  // namespace cvd

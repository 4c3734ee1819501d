#include "cvd/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace cvd {

namespace {

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

template <typename T>
T parse_number(std::string_view token, std::size_t line_no) {
    T value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("line " + std::to_string(line_no) + ": '" + std::string(token) +
                         "' is not a valid number");
    return value;
}

// Next line with content; false at end of input.
bool next_tokens(std::istream& in, std::size_t& line_no, std::vector<std::string_view>& tokens,
                 std::string& buffer) {
    while (std::getline(in, buffer)) {
        ++line_no;
        tokens = split(buffer);
        if (!tokens.empty()) return true;
    }
    return false;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    return in;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string buffer;
    std::vector<std::string_view> tokens;
    std::size_t line_no = 0;
    if (!next_tokens(in, line_no, tokens, buffer)) throw ParseError("empty edge list");
    if (tokens.size() != 2) throw ParseError("line 1: expected 'n m'");
    const auto n = parse_number<std::size_t>(tokens[0], line_no);
    const auto m = parse_number<std::size_t>(tokens[1], line_no);

    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!next_tokens(in, line_no, tokens, buffer))
            throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        if (tokens.size() != 2)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
        edges.push_back({parse_number<VertexId>(tokens[0], line_no),
                         parse_number<VertexId>(tokens[1], line_no)});
    }
    if (next_tokens(in, line_no, tokens, buffer))
        throw ParseError("line " + std::to_string(line_no) + ": content after the last edge");

    try {
        return Graph(n, edges);
    } catch (const GraphError& e) {
        throw ParseError(e.what());
    }
}

Graph read_edge_list(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_coloring(std::ostream& out, const Graph& g) {
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        out << g.edge(e).u << ' ' << g.edge(e).v << ' ' << g.color(e) << '\n';
}

void read_coloring(std::istream& in, Graph& g, Color colors) {
    std::string buffer;
    std::vector<std::string_view> tokens;
    std::size_t line_no = 0;
    std::vector<Color> assigned(g.num_edges(), kUncolored);
    while (next_tokens(in, line_no, tokens, buffer)) {
        if (tokens.size() != 3)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'u v c'");
        const auto u = parse_number<VertexId>(tokens[0], line_no);
        const auto v = parse_number<VertexId>(tokens[1], line_no);
        const auto c = parse_number<Color>(tokens[2], line_no);
        if (u >= g.num_vertices() || v >= g.num_vertices())
            throw ColoringMismatch("line " + std::to_string(line_no) + ": vertex out of range");
        const auto e = g.find_edge(u, v);
        if (!e)
            throw ColoringMismatch("line " + std::to_string(line_no) + ": (" + std::to_string(u) +
                                   "," + std::to_string(v) + ") is not an edge");
        if (assigned[*e] != kUncolored)
            throw ColoringMismatch("line " + std::to_string(line_no) + ": edge colored twice");
        if (c < 0 || c >= colors)
            throw ColorOutOfRange("line " + std::to_string(line_no) + ": color " +
                                  std::to_string(c) + " outside [0," + std::to_string(colors) + ")");
        assigned[*e] = c;
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (assigned[e] == kUncolored)
            throw ColoringMismatch("edge (" + std::to_string(g.edge(e).u) + "," +
                                   std::to_string(g.edge(e).v) + ") has no color");
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e) g.set_color(e, assigned[e]);
}

void read_coloring(const std::filesystem::path& path, Graph& g, Color colors) {
    auto in = open_input(path);
    read_coloring(in, g, colors);
}

}  // namespace cvd

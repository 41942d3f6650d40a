#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "egk/graph.hpp"
#include "egk/graph6.hpp"

namespace egk {

namespace detail {

// Reads a base-10 nonnegative integer, advancing pos past it.
inline long long read_uint(std::string_view text, std::size_t& pos, const char* what) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError(pos, std::string("expected ") + what);
    if (pos - start > 12) throw ParseError(start, std::string(what) + " out of range");
    long long v = 0;
    for (std::size_t i = start; i < pos; ++i) v = v * 10 + (text[i] - '0');
    return v;
}

inline void skip_blanks(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
}

inline void expect_newline(std::string_view text, std::size_t& pos, const char* where) {
    skip_blanks(text, pos);
    if (pos >= text.size()) return;  // missing final newline is tolerated
    if (text[pos] == '\r') ++pos;
    if (pos >= text.size() || text[pos] != '\n')
        throw ParseError(pos, std::string("expected end of line after ") + where);
    ++pos;
}

}  // namespace detail

// Plain-text edge list: header line "n m", then m lines "u v", 0-based
// ids. Rejects out-of-range ids, self-loops, duplicate edges (in either
// orientation), wrong edge counts and trailing garbage.
inline Graph parse_edge_list(std::string_view text) {
    std::size_t pos = 0;
    detail::skip_blanks(text, pos);
    long long n = detail::read_uint(text, pos, "vertex count");
    detail::skip_blanks(text, pos);
    long long m = detail::read_uint(text, pos, "edge count");
    detail::expect_newline(text, pos, "header");
    if (n > 100000000) throw ParseError(0, "vertex count too large: " + std::to_string(n));

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        detail::skip_blanks(text, pos);
        if (pos >= text.size())
            throw ParseError(pos, "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        std::size_t line_start = pos;
        long long u = detail::read_uint(text, pos, "edge endpoint");
        detail::skip_blanks(text, pos);
        long long v = detail::read_uint(text, pos, "edge endpoint");
        if (u >= n || v >= n)
            throw ParseError(line_start, "vertex id out of range [0," + std::to_string(n) + ")");
        if (u == v) throw ParseError(line_start, "self-loop at vertex " + std::to_string(u));
        detail::expect_newline(text, pos, "edge");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
        ++pos;
    if (pos < text.size()) throw ParseError(pos, "trailing data after last edge");

    try {
        return Graph::from_edges(static_cast<int>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());  // duplicate edges are caught here
    }
}

// Inverse of parse_edge_list: "n m\n" then edges as "u v\n", u < v,
// lexicographically sorted.
inline std::string serialize_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace egk

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "egk/graph.hpp"

namespace egk {

// Parse failure with the 0-based byte offset of the offending byte.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error("byte " + std::to_string(offset) + ": " + what), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

namespace detail {

inline int g6_byte(std::string_view text, std::size_t pos, const char* context) {
    if (pos >= text.size())
        throw ParseError(text.size(), std::string("unexpected end of input while reading ") + context);
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
        throw ParseError(pos, std::string("byte out of graph6 range 63..126 in ") + context);
    return static_cast<int>(c) - 63;
}

}  // namespace detail

// Decode one graph6 line (optionally prefixed with ">>graph6<<"). The
// whole string must be consumed: trailing bytes, short input, bytes
// outside 63..126 and nonzero padding bits are all parse errors.
inline Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();

    if (pos >= text.size()) throw ParseError(pos, "empty graph6 string");

    // Vertex count: one byte for n <= 62, '~' + 3 bytes, or '~~' + 6 bytes.
    std::uint64_t n64 = 0;
    int first = detail::g6_byte(text, pos, "vertex count");
    if (first < 63) {
        n64 = static_cast<std::uint64_t>(first);
        ++pos;
    } else {
        int second = detail::g6_byte(text, pos + 1, "vertex count");
        if (second < 63) {
            for (std::size_t i = 1; i <= 3; ++i)
                n64 = (n64 << 6) | static_cast<std::uint64_t>(detail::g6_byte(text, pos + i, "vertex count"));
            pos += 4;
        } else {
            for (std::size_t i = 2; i <= 7; ++i)
                n64 = (n64 << 6) | static_cast<std::uint64_t>(detail::g6_byte(text, pos + i, "vertex count"));
            pos += 8;
        }
    }
    // This library only ever materialises small graphs; anything beyond
    // int range is rejected rather than silently truncated.
    if (n64 > 100000000) throw ParseError(0, "vertex count too large: " + std::to_string(n64));
    const int n = static_cast<int>(n64);

    const std::uint64_t nbits = static_cast<std::uint64_t>(n) * (static_cast<std::uint64_t>(n) - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() - pos < nbytes)
        throw ParseError(text.size(), "graph6 data truncated: expected " + std::to_string(nbytes) +
                                          " edge bytes, got " + std::to_string(text.size() - pos));
    if (text.size() - pos > nbytes)
        throw ParseError(pos + nbytes, "trailing bytes after graph6 data");

    std::vector<Edge> edges;
    std::uint64_t bit = 0;
    // Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    int col = 1, row = 0;
    for (std::size_t i = 0; i < nbytes; ++i) {
        int val = detail::g6_byte(text, pos + i, "edge data");
        for (int b = 5; b >= 0; --b, ++bit) {
            bool set = (val >> b) & 1;
            if (bit >= nbits) {
                if (set) throw ParseError(pos + i, "nonzero padding bit in final graph6 byte");
                continue;
            }
            if (set) edges.emplace_back(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return Graph::from_edges(n, edges);
}

// Canonical (minimal-length) graph6 encoding, no trailing newline.
inline std::string serialize_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    auto push6 = [&out](std::uint64_t v, int words) {
        for (int i = words - 1; i >= 0; --i)
            out.push_back(static_cast<char>(((v >> (6 * i)) & 63) + 63));
    };
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        push6(static_cast<std::uint64_t>(n), 3);
    } else {
        out.push_back('~');
        out.push_back('~');
        push6(static_cast<std::uint64_t>(n), 6);
    }
    int acc = 0, nb = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return out;
}

}  // namespace egk

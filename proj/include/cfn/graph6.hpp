#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cfn/graph.hpp"

namespace cfn {

/// Parse failure with the byte offset into the offending line.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

namespace detail {

constexpr std::string_view graph6_header = ">>graph6<<";

inline int g6_byte(std::string_view s, std::size_t i) {
    if (i >= s.size()) throw Graph6Error("graph6: truncated input", i);
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw Graph6Error("graph6: byte out of printable range", i);
    return c - 63;
}

}  // namespace detail

/// Decode one graph6 line (optionally prefixed by the ">>graph6<<" header).
/// Supports the 1-byte and 4-byte vertex-count forms, i.e. n < 258048.
inline Graph parse_graph6(std::string_view line) {
    using detail::g6_byte;
    std::string_view s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    std::size_t base = 0;
    if (s.substr(0, detail::graph6_header.size()) == detail::graph6_header) {
        base = detail::graph6_header.size();
        s.remove_prefix(base);
    }
    if (s.empty()) throw Graph6Error("graph6: empty line", base);

    std::size_t pos = 0;
    long long n = 0;
    int first = g6_byte(s, pos);
    if (first < 63) {
        n = first;
        pos = 1;
    } else {
        // 126 introduces the 18-bit form; a second 126 would be the
        // 36-bit form, which is out of scope here.
        if (pos + 1 < s.size() && static_cast<unsigned char>(s[pos + 1]) == 126)
            throw Graph6Error("graph6: 8-byte vertex count form not supported", base + pos);
        n = 0;
        for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | g6_byte(s, pos + k);
        if (n < 63)
            throw Graph6Error("graph6: non-minimal vertex count encoding", base + pos);
        pos = 4;
    }
    if (n >= 258048) throw Graph6Error("graph6: vertex count too large", base);

    const long long bits = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() - pos != need)
        throw Graph6Error("graph6: adjacency data has wrong length", base + s.size());

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    int cur = 0, left = 0;
    std::size_t at = pos;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            if (left == 0) {
                cur = g6_byte(s, at);
                ++at;
                left = 6;
            }
            --left;
            if (cur & (1 << left)) edges.emplace_back(row, col);
        }
    }
    // Padding bits must be zero.
    if (left > 0 && (cur & ((1 << left) - 1)) != 0)
        throw Graph6Error("graph6: nonzero trailing bits", base + at - 1);

    return Graph(static_cast<int>(n), std::move(edges));
}

/// Encode under the current labeling; inverse of parse_graph6 on
/// header-free lines. No trailing newline is appended.
inline std::string write_graph6(const Graph& g) {
    const int n = g.n();
    if (n >= 258048) throw std::invalid_argument("write_graph6: vertex count too large");

    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
        out.push_back(static_cast<char>((n & 0x3f) + 63));
    }

    std::vector<bool> adj(static_cast<std::size_t>(n) * n, false);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u) * n + v] = true;
        adj[static_cast<std::size_t>(v) * n + u] = true;
    }

    int cur = 0, used = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            cur = (cur << 1) | (adj[static_cast<std::size_t>(row) * n + col] ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                used = 0;
            }
        }
    }
    if (used > 0) out.push_back(static_cast<char>((cur << (6 - used)) + 63));
    return out;
}

}  // namespace cfn

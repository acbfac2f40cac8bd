#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cfn/graph.hpp"

namespace cfn {

enum class Color : std::uint8_t { Black, White };

/// Balanced black/white vertex 2-coloring in which every monochromatic
/// component has at most 2 vertices.
struct Bisection {
    std::vector<Color> colors;

    Bisection() = default;
    explicit Bisection(std::vector<Color> c) : colors(std::move(c)) {}

    /// Build from a black-vertex mask (n <= 64).
    Bisection(int n, std::uint64_t black) : colors(static_cast<std::size_t>(n)) {
        for (int v = 0; v < n; ++v)
            colors[static_cast<std::size_t>(v)] =
                (black >> v) & 1 ? Color::Black : Color::White;
    }

    std::uint64_t black_mask() const {
        std::uint64_t m = 0;
        for (std::size_t v = 0; v < colors.size(); ++v)
            if (colors[v] == Color::Black) m |= std::uint64_t{1} << v;
        return m;
    }

    Bisection swapped() const {
        Bisection b = *this;
        for (auto& c : b.colors) c = (c == Color::Black) ? Color::White : Color::Black;
        return b;
    }
};

/// Balanced, and no monochromatic component with more than 2 vertices.
inline bool is_valid_bisection(const Graph& g, const Bisection& b) {
    if (static_cast<int>(b.colors.size()) != g.n())
        throw std::invalid_argument("is_valid_bisection: color count != vertex count");
    const int n = g.n();
    int black = 0;
    for (auto c : b.colors)
        if (c == Color::Black) ++black;
    if (2 * black != n) return false;

    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        seen[static_cast<std::size_t>(s)] = true;
        stack.assign(1, s);
        int size = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            if (++size > 2) return false;
            for (int w : g.neighbors(u))
                if (!seen[static_cast<std::size_t>(w)] &&
                    b.colors[static_cast<std::size_t>(w)] == b.colors[static_cast<std::size_t>(s)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
        }
    }
    return true;
}

namespace detail {

/// Depth-first enumeration of all 2-bisections with vertex 0 black, in
/// vertex-id order. Coloring vertex v checks already-colored same-color
/// neighbors: two of them would close a component of 3, and one of them
/// must still be unpaired. Balance is pruned through remaining counts.
/// `visit` gets the black mask; a false return aborts the enumeration.
template <class Visit>
std::uint64_t enumerate_bisection_masks(const MaskGraph& g, Visit&& visit) {
    const int n = g.n;
    if (n == 0 || n % 2 != 0) return 0;
    const int half = n / 2;

    std::vector<int> partner(static_cast<std::size_t>(n), -1);
    std::uint64_t black = 0, white = 0;
    int black_count = 0, white_count = 0;
    std::uint64_t count = 0;
    bool stop = false;

    // partner bookkeeping is undone on backtrack; paired[] is implicit in
    // partner[v] != -1.
    auto rec = [&](auto&& self, int v) -> void {
        if (stop) return;
        if (v == n) {
            ++count;
            if (!visit(black)) stop = true;
            return;
        }
        std::uint64_t done = (std::uint64_t{1} << v) - 1;
        for (int c = 0; c < 2 && !stop; ++c) {
            bool is_black = (c == 0);
            if (v == 0 && !is_black) continue;  // fix vertex 0 black
            int& cnt = is_black ? black_count : white_count;
            if (cnt == half) continue;
            std::uint64_t same = (is_black ? black : white) & g.nbr[static_cast<std::size_t>(v)] & done;
            if (same) {
                if (same & (same - 1)) continue;  // two colored neighbors
                int u = __builtin_ctzll(same);
                if (partner[static_cast<std::size_t>(u)] != -1) continue;
                partner[static_cast<std::size_t>(u)] = v;
                partner[static_cast<std::size_t>(v)] = u;
            }
            (is_black ? black : white) |= std::uint64_t{1} << v;
            ++cnt;
            self(self, v + 1);
            --cnt;
            (is_black ? black : white) &= ~(std::uint64_t{1} << v);
            if (same) {
                int u = __builtin_ctzll(same);
                partner[static_cast<std::size_t>(u)] = -1;
                partner[static_cast<std::size_t>(v)] = -1;
            }
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace detail

/// Visits every 2-bisection with vertex 0 black exactly once (the global
/// color swap is factored out; the max-min statistic is invariant under
/// it). Returns the number of bisections visited.
template <class Visit>
std::uint64_t enumerate_bisections(const Graph& g, Visit&& visit) {
    MaskGraph mg(g);
    return detail::enumerate_bisection_masks(mg, [&](std::uint64_t black) {
        visit(Bisection(g.n(), black));
        return true;
    });
}

}  // namespace cfn

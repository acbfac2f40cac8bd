#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cfn/graph.hpp"

namespace cfn {

namespace detail {

/// Duplicate-free enumeration of connected vertex sets by canonical rooted
/// growth: for each root r, all connected sets whose minimum vertex is r,
/// grown through a candidate frontier with a forbidden-set discipline.
/// Children exclude the candidates their elder siblings consumed, so each
/// set is reached along exactly one path.
///
/// `visit(mask, neighborhood_union)` is called for every connected set with
/// min_size <= |set| <= max_size; a false return aborts the walk.
template <class Visit>
std::uint64_t enumerate_connected_masks(const MaskGraph& g, int min_size, int max_size,
                                        Visit&& visit) {
    const int n = g.n;
    if (max_size <= 0) return 0;
    std::uint64_t count = 0;
    bool stop = false;

    // S: current set; NU: union of neighborhoods of S; X: forbidden.
    auto rec = [&](auto&& self, std::uint64_t S, std::uint64_t NU, std::uint64_t X,
                   int size) -> void {
        if (stop) return;
        if (size >= min_size) {
            ++count;
            if (!visit(S, NU)) {
                stop = true;
                return;
            }
        }
        if (size == max_size) return;
        std::uint64_t cand = NU & ~S & ~X;
        std::uint64_t taken = 0;
        while (cand && !stop) {
            int u = __builtin_ctzll(cand);
            std::uint64_t ubit = std::uint64_t{1} << u;
            cand ^= ubit;
            self(self, S | ubit, NU | g.nbr[static_cast<std::size_t>(u)], X | taken, size + 1);
            taken |= ubit;
        }
    };

    for (int r = 0; r < n && !stop; ++r) {
        std::uint64_t rbit = std::uint64_t{1} << r;
        rec(rec, rbit, g.nbr[static_cast<std::size_t>(r)], rbit - 1, 1);
    }
    return count;
}

}  // namespace detail

/// Visits every vertex set X with 2 <= |X| <= max_size whose induced
/// subgraph is connected, exactly once. Returns the number visited.
template <class Visit>
std::uint64_t enumerate_connected_subsets(const Graph& g, int max_size, Visit&& visit) {
    if (max_size > g.n()) throw std::invalid_argument("enumerate_connected_subsets: max_size > n");
    MaskGraph mg(g);
    return detail::enumerate_connected_masks(mg, 2, max_size,
                                             [&](std::uint64_t mask, std::uint64_t) {
                                                 visit(mask_to_vertices(mask));
                                                 return true;
                                             });
}

}  // namespace cfn

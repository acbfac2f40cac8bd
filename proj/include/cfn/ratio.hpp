#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cfn/bisection.hpp"
#include "cfn/graph.hpp"
#include "cfn/rational.hpp"
#include "cfn/subsets.hpp"

namespace cfn {

/// |boundary| / delta data of one vertex set under a fixed bisection.
/// ratio is empty exactly when delta = 0 (the "infinite ratio" case).
struct SubsetEvaluation {
    std::vector<int> subset;
    int boundary_size = 0;
    int delta = 0;
    std::optional<Rational> ratio;
};

inline SubsetEvaluation evaluate_subset(const Graph& g, const Bisection& b,
                                        const std::vector<int>& X) {
    if (static_cast<int>(b.colors.size()) != g.n())
        throw std::invalid_argument("evaluate_subset: color count != vertex count");
    std::vector<bool> in(static_cast<std::size_t>(g.n()), false);
    for (int v : X) in.at(static_cast<std::size_t>(v)) = true;

    SubsetEvaluation ev;
    ev.subset = X;
    for (auto [u, v] : g.edges())
        if (in[static_cast<std::size_t>(u)] != in[static_cast<std::size_t>(v)]) ++ev.boundary_size;
    int black = 0, white = 0;
    for (int v : X)
        (b.colors[static_cast<std::size_t>(v)] == Color::Black ? black : white) += 1;
    ev.delta = black > white ? black - white : white - black;
    if (ev.delta > 0) ev.ratio = Rational(ev.boundary_size, ev.delta);
    return ev;
}

/// Vertices of X with a neighbor outside X.
inline std::vector<int> vertex_boundary(const Graph& g, const std::vector<int>& X) {
    std::vector<bool> in(static_cast<std::size_t>(g.n()), false);
    for (int v : X) in.at(static_cast<std::size_t>(v)) = true;
    std::vector<int> out;
    for (int v : X)
        for (int w : g.neighbors(v))
            if (!in[static_cast<std::size_t>(w)]) {
                out.push_back(v);
                break;
            }
    return out;
}

/// Minimum of |boundary|/delta over all subsets with delta > 0, compared
/// against 1. Unpruned brute force over the full power set; meant for
/// small graphs (it is exponential and gets slow past ~20 vertices).
inline bool is_orientable(const Graph& g, const Bisection& b) {
    if (g.n() > 32) throw std::invalid_argument("is_orientable: brute force limited to 32 vertices");
    MaskGraph mg(g);
    const std::uint64_t black = b.black_mask();
    const std::uint64_t full = mg.full_mask();
    for (std::uint64_t X = 1; X < full; ++X) {
        int size = __builtin_popcountll(X);
        int b_in = __builtin_popcountll(X & black);
        int delta = 2 * b_in - size;
        if (delta < 0) delta = -delta;
        if (delta == 0) continue;
        int bnd = 0;
        std::uint64_t rest = X;
        while (rest) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            bnd += __builtin_popcountll(mg.nbr[static_cast<std::size_t>(v)] & ~X);
        }
        if (bnd < delta) return false;  // ratio < 1
    }
    return true;
}

namespace detail {

struct RestrictedScan {
    long long min_num = 3;  // running minimum; starts at the singleton
    long long min_den = 1;  // ratio 3 of a cubic graph ("the floor")
    std::optional<std::uint64_t> witness;  // empty: the floor stands
    bool aborted = false;
};

/// Minimum ratio over the restricted family of Algorithm-style subsets:
/// 2 <= |X| <= n/2, G[X] connected, delta(X) > 0, and both vertex
/// boundaries monochromatic of different colors. Color conditions are
/// evaluated on completed sets only; growing a set can change its
/// boundary, so pruning on partial colors would be unsound.
///
/// When `abort_num/abort_den` is supplied (abort_den > 0), the scan stops
/// as soon as the running minimum is <= that threshold.
inline RestrictedScan restricted_min_scan(const MaskGraph& g, std::uint64_t black,
                                          long long abort_num = -1, long long abort_den = 0) {
    RestrictedScan r;
    const bool has_abort = abort_den > 0;
    if (has_abort && r.min_num * abort_den <= abort_num * r.min_den) {
        r.aborted = true;
        return r;
    }
    const std::uint64_t all = g.full_mask();

    enumerate_connected_masks(g, 2, g.n / 2, [&](std::uint64_t X, std::uint64_t NU) {
        // Outside vertex boundary must be monochromatic; it fixes the
        // required color inside.
        std::uint64_t outside = NU & ~X;
        std::uint64_t out_black = outside & black;
        bool need_black_inside;
        if (out_black == 0)
            need_black_inside = true;  // outside all white
        else if (out_black == outside)
            need_black_inside = false;  // outside all black
        else
            return true;

        int size = __builtin_popcountll(X);
        int delta = 2 * __builtin_popcountll(X & black) - size;
        if (delta < 0) delta = -delta;
        if (delta == 0) return true;

        // Inside boundary check fused with the boundary-edge count.
        int bnd = 0;
        std::uint64_t rest = X;
        while (rest) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            std::uint64_t leaving = g.nbr[static_cast<std::size_t>(v)] & ~X;
            if (leaving) {
                bool v_black = (black >> v) & 1;
                if (v_black != need_black_inside) return true;
                bnd += __builtin_popcountll(leaving);
            }
        }

        if (static_cast<long long>(bnd) * r.min_den < r.min_num * delta) {
            r.min_num = bnd;
            r.min_den = delta;
            r.witness = X;
            if (has_abort && r.min_num * abort_den <= abort_num * r.min_den) {
                r.aborted = true;
                return false;
            }
        }
        return true;
    });
    (void)all;
    return r;
}

}  // namespace detail

/// Restricted-family minimum ratio of a bisection, floored at 3 (every
/// singleton of a cubic graph has ratio exactly 3, so the floor preserves
/// the max-min statistic while keeping size-1 sets out of the scan).
/// With abort_at set, any value <= abort_at may be returned as soon as
/// the running minimum reaches it.
inline Rational min_restricted_ratio(const Graph& g, const Bisection& b,
                                     std::optional<Rational> abort_at = std::nullopt) {
    MaskGraph mg(g);
    auto scan = abort_at
                    ? detail::restricted_min_scan(mg, b.black_mask(), abort_at->num(), abort_at->den())
                    : detail::restricted_min_scan(mg, b.black_mask());
    return Rational(scan.min_num, scan.min_den);
}

}  // namespace cfn

#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "cfn/bisection.hpp"
#include "cfn/graph.hpp"
#include "cfn/ratio.hpp"
#include "cfn/rational.hpp"
#include "cfn/structure.hpp"

namespace cfn {

struct SolveOptions {
    int jobs = 1;
    const std::atomic<bool>* cancel = nullptr;  // cooperative cancellation
};

/// Optimal bisection, its restricted minimum (the max-min fraction), and a
/// witness subset reproducing that minimum. An empty witness means the
/// singleton floor 3 was never beaten.
struct MaxMinCertificate {
    Bisection best_bisection;
    Rational best_min;
    std::optional<std::vector<int>> witness_subset;
};

/// Either an exact circular flow number in [3, 5) or the statement that it
/// is at least 5 (the search cannot distinguish values from 5 up).
struct CfnResult {
    std::optional<Rational> exact;
    std::optional<MaxMinCertificate> certificate;  // present iff exact

    bool at_least_five() const { return !exact.has_value(); }
    const Rational& value() const {
        if (!exact) throw std::logic_error("CfnResult: no exact value (>= 5)");
        return *exact;
    }
};

/// Conversion m -> 2m/(m-1) from the max-min fraction to the circular
/// flow number; inverse of m = r/(r-2). Requires m > 5/3.
inline Rational fraction_to_cfn(const Rational& m) {
    if (!(m > Rational(5, 3)))
        throw std::invalid_argument("fraction_to_cfn: fraction <= 5/3 means the flow number is >= 5");
    return Rational(2) * m / (m - Rational(1));
}

namespace detail {

inline void require_solver_input(const Graph& g) {
    if (!g.is_cubic()) throw std::invalid_argument("solver: graph is not cubic");
    if (!is_connected(g)) throw std::invalid_argument("solver: graph is not connected");
    if (!find_bridges(g).empty())
        throw std::invalid_argument("solver: graph has a bridge (circular flow number is infinite)");
    if (g.n() > MaskGraph::max_vertices)
        throw std::invalid_argument("solver: graphs over 64 vertices are not supported");
}

/// Valid partial colorings of vertices 0..depth-1 under the bisection
/// constraints, as (black, white) mask pairs. Used to split the bisection
/// search across workers; each prefix extends independently.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> bisection_prefixes(
    const MaskGraph& g, int depth) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    const int n = g.n;
    const int half = n / 2;
    std::vector<int> partner(static_cast<std::size_t>(n), -1);
    std::uint64_t black = 0, white = 0;
    int bc = 0, wc = 0;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == depth) {
            out.emplace_back(black, white);
            return;
        }
        std::uint64_t done = (std::uint64_t{1} << v) - 1;
        for (int c = 0; c < 2; ++c) {
            bool is_black = (c == 0);
            if (v == 0 && !is_black) continue;
            int& cnt = is_black ? bc : wc;
            if (cnt == half) continue;
            std::uint64_t same = (is_black ? black : white) & g.nbr[static_cast<std::size_t>(v)] & done;
            int u = -1;
            if (same) {
                if (same & (same - 1)) continue;
                u = __builtin_ctzll(same);
                if (partner[static_cast<std::size_t>(u)] != -1) continue;
                partner[static_cast<std::size_t>(u)] = v;
                partner[static_cast<std::size_t>(v)] = u;
            }
            (is_black ? black : white) |= std::uint64_t{1} << v;
            ++cnt;
            self(self, v + 1);
            --cnt;
            (is_black ? black : white) &= ~(std::uint64_t{1} << v);
            if (u != -1) {
                partner[static_cast<std::size_t>(u)] = -1;
                partner[static_cast<std::size_t>(v)] = -1;
            }
        }
    };
    rec(rec, 0);
    return out;
}

/// Continue the bisection DFS from `depth` with the prefix already colored.
/// The partner state is replayed from the prefix masks deterministically.
template <class Visit>
void enumerate_bisections_from_prefix(const MaskGraph& g, std::uint64_t black0,
                                      std::uint64_t white0, int depth, Visit&& visit) {
    const int n = g.n;
    const int half = n / 2;
    std::vector<int> partner(static_cast<std::size_t>(n), -1);
    std::uint64_t black = 0, white = 0;
    int bc = 0, wc = 0;
    for (int v = 0; v < depth; ++v) {
        bool is_black = (black0 >> v) & 1;
        std::uint64_t done = (std::uint64_t{1} << v) - 1;
        std::uint64_t same = (is_black ? black : white) & g.nbr[static_cast<std::size_t>(v)] & done;
        if (same) {
            int u = __builtin_ctzll(same);
            partner[static_cast<std::size_t>(u)] = v;
            partner[static_cast<std::size_t>(v)] = u;
        }
        (is_black ? black : white) |= std::uint64_t{1} << v;
        (is_black ? bc : wc) += 1;
    }
    (void)white0;

    bool stop = false;
    auto rec = [&](auto&& self, int v) -> void {
        if (stop) return;
        if (v == n) {
            if (!visit(black)) stop = true;
            return;
        }
        std::uint64_t done = (std::uint64_t{1} << v) - 1;
        for (int c = 0; c < 2 && !stop; ++c) {
            bool is_black = (c == 0);
            int& cnt = is_black ? bc : wc;
            if (cnt == half) continue;
            std::uint64_t same = (is_black ? black : white) & g.nbr[static_cast<std::size_t>(v)] & done;
            int u = -1;
            if (same) {
                if (same & (same - 1)) continue;
                u = __builtin_ctzll(same);
                if (partner[static_cast<std::size_t>(u)] != -1) continue;
                partner[static_cast<std::size_t>(u)] = v;
                partner[static_cast<std::size_t>(v)] = u;
            }
            (is_black ? black : white) |= std::uint64_t{1} << v;
            ++cnt;
            self(self, v + 1);
            --cnt;
            (is_black ? black : white) &= ~(std::uint64_t{1} << v);
            if (u != -1) {
                partner[static_cast<std::size_t>(u)] = -1;
                partner[static_cast<std::size_t>(v)] = -1;
            }
        }
    };
    rec(rec, depth);
}

/// Shared running maximum, packed (num << 16 | den) for lock-free reads.
/// Values stay tiny: numerators are boundary sizes, denominators deltas.
struct SharedMax {
    std::atomic<std::uint64_t> packed{0};  // 0 = none yet
    std::mutex mu;

    static std::uint64_t pack(long long p, long long q) {
        return (static_cast<std::uint64_t>(p) << 16) | static_cast<std::uint64_t>(q);
    }
    // Returns current (p, q) or (0, 0).
    std::pair<long long, long long> load() const {
        std::uint64_t v = packed.load(std::memory_order_relaxed);
        return {static_cast<long long>(v >> 16), static_cast<long long>(v & 0xffff)};
    }
};

struct ExactScanState {
    SharedMax best;
    std::mutex cert_mu;
    std::uint64_t best_black = 0;
    std::optional<std::uint64_t> best_witness;
    bool have_best = false;
};

}  // namespace detail

/// Max over all 2-bisections of the restricted minimum ratio, or an empty
/// value when the graph has no 2-bisection or the maximum is <= 5/3; both
/// mean the circular flow number is at least 5. Subset searches abort
/// against the running maximum (and against 5/3), which never changes the
/// reported maximum in the regime where it matters.
inline std::optional<Rational> pruned_max_min_fraction(
    const Graph& g, const SolveOptions& opts = {},
    Bisection* best_bisection_out = nullptr,
    std::optional<std::vector<int>>* witness_out = nullptr) {
    detail::require_solver_input(g);
    MaskGraph mg(g);
    detail::ExactScanState st;

    auto handle_bisection = [&](std::uint64_t black) -> bool {
        if (opts.cancel && opts.cancel->load(std::memory_order_relaxed)) return false;
        auto [bp, bq] = st.best.load();
        long long ap = 5, aq = 3;  // at-least-five floor for the abort
        if (bq != 0 && bp * aq > ap * bq) {
            ap = bp;
            aq = bq;
        }
        auto scan = detail::restricted_min_scan(mg, black, ap, aq);
        if (scan.aborted) return true;
        std::lock_guard<std::mutex> lk(st.cert_mu);
        auto [cp, cq] = st.best.load();
        if (cq == 0 || scan.min_num * cq > cp * scan.min_den) {
            st.best.packed.store(detail::SharedMax::pack(scan.min_num, scan.min_den),
                                 std::memory_order_relaxed);
            st.best_black = black;
            st.best_witness = scan.witness;
            st.have_best = true;
        }
        return true;
    };

    int jobs = opts.jobs > 0 ? opts.jobs : 1;
    if (jobs == 1) {
        detail::enumerate_bisection_masks(mg, handle_bisection);
    } else {
        int depth = std::min(g.n(), 14);
        auto prefixes = detail::bisection_prefixes(mg, depth);
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            while (true) {
                std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= prefixes.size()) return;
                if (opts.cancel && opts.cancel->load(std::memory_order_relaxed)) return;
                detail::enumerate_bisections_from_prefix(mg, prefixes[i].first,
                                                         prefixes[i].second, depth,
                                                         handle_bisection);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    if (opts.cancel && opts.cancel->load(std::memory_order_relaxed))
        throw std::runtime_error("solver: cancelled");

    if (!st.have_best) return std::nullopt;
    auto [p, q] = st.best.load();
    Rational m(p, q);
    if (!(m > Rational(5, 3))) return std::nullopt;
    if (best_bisection_out) *best_bisection_out = Bisection(g.n(), st.best_black);
    if (witness_out)
        *witness_out = st.best_witness ? std::optional<std::vector<int>>(mask_to_vertices(*st.best_witness))
                                       : std::nullopt;
    return m;
}

/// Exact circular flow number of a connected bridgeless cubic graph when
/// it is below 5, with a certificate; otherwise the at-least-5 statement.
inline CfnResult circular_flow_number(const Graph& g, const SolveOptions& opts = {}) {
    Bisection best;
    std::optional<std::vector<int>> witness;
    auto m = pruned_max_min_fraction(g, opts, &best, &witness);
    CfnResult r;
    if (!m) return r;
    r.exact = fraction_to_cfn(*m);
    r.certificate = MaxMinCertificate{best, *m, witness};
    return r;
}

/// Bound mode: true iff the circular flow number is >= r, for 2 < r <= 5.
/// A single bisection whose restricted minimum exceeds r/(r-2) certifies
/// the opposite; ties at exactly r/(r-2) report ">= r".
inline bool phi_at_least(const Graph& g, const Rational& r, const SolveOptions& opts = {}) {
    if (!(r > Rational(2)) || !(r <= Rational(5)))
        throw std::invalid_argument("phi_at_least: bound must satisfy 2 < r <= 5");
    detail::require_solver_input(g);
    MaskGraph mg(g);
    const Rational threshold = r / (r - Rational(2));
    const long long tp = threshold.num(), tq = threshold.den();

    std::atomic<bool> counterexample{false};
    auto handle_bisection = [&](std::uint64_t black) -> bool {
        if (opts.cancel && opts.cancel->load(std::memory_order_relaxed)) return false;
        if (counterexample.load(std::memory_order_relaxed)) return false;
        auto scan = detail::restricted_min_scan(mg, black, tp, tq);
        if (!scan.aborted && scan.min_num * tq > tp * scan.min_den) {
            counterexample.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    };

    int jobs = opts.jobs > 0 ? opts.jobs : 1;
    if (jobs == 1) {
        detail::enumerate_bisection_masks(mg, handle_bisection);
    } else {
        int depth = std::min(g.n(), 14);
        auto prefixes = detail::bisection_prefixes(mg, depth);
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            while (true) {
                std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= prefixes.size()) return;
                if (counterexample.load(std::memory_order_relaxed)) return;
                if (opts.cancel && opts.cancel->load(std::memory_order_relaxed)) return;
                detail::enumerate_bisections_from_prefix(mg, prefixes[i].first,
                                                         prefixes[i].second, depth,
                                                         handle_bisection);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    if (opts.cancel && opts.cancel->load(std::memory_order_relaxed))
        throw std::runtime_error("solver: cancelled");
    return !counterexample.load();
}

/// Unpruned reference: max over all 2-bisections of the minimum ratio over
/// ALL subsets with delta > 0 (every size, no connectivity, no boundary
/// colors). Exponential; guarded at 20 vertices. Empty result means no
/// 2-bisection exists or the maximum is <= 5/3, as in the pruned solver.
inline std::optional<Rational> naive_max_min_fraction(const Graph& g) {
    detail::require_solver_input(g);
    if (g.n() > 20) throw std::invalid_argument("naive_max_min_fraction: guarded at 20 vertices");
    MaskGraph mg(g);
    const std::uint64_t full = mg.full_mask();

    bool any = false;
    long long mp = 0, mq = 1;  // running max
    detail::enumerate_bisection_masks(mg, [&](std::uint64_t black) {
        long long p = 0, q = 0;  // running min for this bisection (none yet)
        for (std::uint64_t X = 1; X < full; ++X) {
            int size = __builtin_popcountll(X);
            int delta = 2 * __builtin_popcountll(X & black) - size;
            if (delta < 0) delta = -delta;
            if (delta == 0) continue;
            int bnd = 0;
            std::uint64_t rest = X;
            while (rest) {
                int v = __builtin_ctzll(rest);
                rest &= rest - 1;
                bnd += __builtin_popcountll(mg.nbr[static_cast<std::size_t>(v)] & ~X);
            }
            if (q == 0 || static_cast<long long>(bnd) * q < p * delta) {
                p = bnd;
                q = delta;
            }
        }
        if (q != 0 && (!any || p * mq > mp * q)) {
            mp = p;
            mq = q;
            any = true;
        }
        return true;
    });
    if (!any) return std::nullopt;
    Rational m(mp, mq);
    if (!(m > Rational(5, 3))) return std::nullopt;
    return m;
}

/// Orientation plus positive flow values, one per edge id.
struct FlowAssignment {
    std::vector<std::pair<int, int>> orientation;  // (from, to) per edge
    std::vector<Rational> values;
};

/// True iff every value lies in [1, r-1] and flow is conserved at every
/// vertex. Works for arbitrary graphs; arithmetic is exact.
inline bool verify_circular_flow(const Graph& g, const FlowAssignment& fa, const Rational& r) {
    const int m = g.edge_count();
    if (static_cast<int>(fa.orientation.size()) != m || static_cast<int>(fa.values.size()) != m)
        throw std::invalid_argument("verify_circular_flow: assignment does not cover every edge");
    for (EdgeId e = 0; e < m; ++e) {
        auto [from, to] = fa.orientation[static_cast<std::size_t>(e)];
        if (ordered_pair(from, to) != g.edge(e))
            throw std::invalid_argument("verify_circular_flow: orientation does not match edge " +
                                        std::to_string(e));
    }
    const Rational upper = r - Rational(1);
    for (EdgeId e = 0; e < m; ++e) {
        const Rational& f = fa.values[static_cast<std::size_t>(e)];
        if (f < Rational(1) || f > upper) return false;
    }
    std::vector<Rational> net(static_cast<std::size_t>(g.n()), Rational(0));
    for (EdgeId e = 0; e < m; ++e) {
        auto [from, to] = fa.orientation[static_cast<std::size_t>(e)];
        net[static_cast<std::size_t>(from)] -= fa.values[static_cast<std::size_t>(e)];
        net[static_cast<std::size_t>(to)] += fa.values[static_cast<std::size_t>(e)];
    }
    for (const auto& x : net)
        if (!(x == Rational(0))) return false;
    return true;
}

/// The bisection a positive r-flow (r < 5) induces on a cubic graph:
/// in-degree 1 colors a vertex white, in-degree 2 black.
inline Bisection bisection_from_flow(const Graph& g, const FlowAssignment& fa, const Rational& r) {
    if (!g.is_cubic()) throw std::invalid_argument("bisection_from_flow: graph is not cubic");
    if (!(r < Rational(5)))
        throw std::invalid_argument("bisection_from_flow: flows with r >= 5 need not induce a 2-bisection");
    if (!verify_circular_flow(g, fa, r))
        throw std::invalid_argument("bisection_from_flow: assignment is not a valid r-flow");
    std::vector<int> indeg(static_cast<std::size_t>(g.n()), 0);
    for (auto [from, to] : fa.orientation) indeg[static_cast<std::size_t>(to)] += 1;
    Bisection b;
    b.colors.resize(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        int d = indeg[static_cast<std::size_t>(v)];
        if (d != 1 && d != 2)
            throw std::logic_error("bisection_from_flow: in-degree outside {1,2} under a positive flow");
        b.colors[static_cast<std::size_t>(v)] = (d == 2) ? Color::Black : Color::White;
    }
    return b;
}

}  // namespace cfn

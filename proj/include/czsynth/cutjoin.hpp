#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "czsynth/bitvec.hpp"
#include "czsynth/graph.hpp"
#include "czsynth/opseq.hpp"

namespace czsynth {

/// A low-cut-rank partition witness: X, an ordered list A of vertices outside
/// X whose X-neighborhoods span the cut space, and for each remaining vertex
/// y the subset A_y of A whose X-rows XOR to y's X-neighborhood.
struct CutWitness {
    VertexSet x;
    std::vector<std::size_t> a;
    std::vector<std::pair<std::size_t, VertexSet>> a_y; // (y, subset of V flagging members of A)
};

/// Build a witness for the cut at X. |A| always equals cut_rank(X); the
/// linear solves for the A_y cannot fail because A is chosen as a row basis.
inline CutWitness find_spanning_rows(const Graph& g, const VertexSet& x) {
    if (x.size() != g.n()) throw std::invalid_argument("vertex set size mismatch");
    const std::size_t nx = x.count();
    if (nx == 0 || nx == g.n())
        throw std::invalid_argument("find_spanning_rows needs a proper nonempty subset");

    CutWitness w;
    w.x = x;

    // reduce candidate rows (restricted to X) into an echelon basis, tracking
    // which A-members combine into each reduced row
    struct BasisRow {
        BitVec row;     // reduced X-restricted neighborhood
        BitVec members; // subset of A composing it
    };
    std::vector<BasisRow> basis;

    auto reduce = [&](BitVec row) {
        BitVec members(g.n());
        for (const auto& b : basis) {
            std::size_t piv = b.row.find_first();
            if (piv < g.n() && row.test(piv)) {
                row ^= b.row;
                members ^= b.members;
            }
        }
        return std::make_pair(row, members);
    };

    for (std::size_t v = 0; v < g.n(); ++v) {
        if (x.test(v)) continue;
        BitVec row = g.neighbors(v);
        row &= x;
        auto [red, members] = reduce(row);
        if (red.any()) {
            w.a.push_back(v);
            BitVec m = members;
            m.set(v);
            basis.push_back({red, m});
        }
    }

    for (std::size_t v = 0; v < g.n(); ++v) {
        if (x.test(v)) continue;
        if (std::find(w.a.begin(), w.a.end(), v) != w.a.end()) continue;
        BitVec row = g.neighbors(v);
        row &= x;
        auto [red, members] = reduce(row);
        if (red.any())
            throw std::logic_error("spanning rows do not span the cut space");
        w.a_y.emplace_back(v, members);
    }
    return w;
}

/// Check a witness against its graph: A rows independent, |A| = cut_rank, and
/// each stored A_y reproduces y's X-neighborhood by symmetric difference.
inline bool witness_valid(const Graph& g, const CutWitness& w) {
    if (w.x.size() != g.n()) return false;
    if (w.a.size() != cut_rank(g, w.x)) return false;
    for (const auto& [y, ay] : w.a_y) {
        BitVec want = g.neighbors(y);
        want &= w.x;
        BitVec got(g.n());
        ay.for_each_set([&](std::size_t a) {
            BitVec r = g.neighbors(a);
            r &= w.x;
            got ^= r;
        });
        if (!(got == want)) return false;
    }
    return true;
}

/// The disjoint starting point of the join: G[X u A] and G[Y] side by side,
/// with the A-A edges removed.
inline Graph cut_join_start(const Graph& g, const CutWitness& w) {
    VertexSet xa = w.x;
    for (std::size_t a : w.a) xa.set(a);
    VertexSet in_a(g.n());
    for (std::size_t a : w.a) in_a.set(a);

    Graph g0(g.n());
    for (auto [u, v] : g.edges()) {
        const bool both_xa = xa.test(u) && xa.test(v);
        const bool both_y = !xa.test(u) && !xa.test(v);
        const bool both_a = in_a.test(u) && in_a.test(v);
        if ((both_xa && !both_a) || both_y) g0.add_edge(u, v);
    }
    return g0;
}

struct CutJoinResult {
    OperationSequence seq;
    std::size_t toggle_bound = 0; // 2k|Y| + k^2 + k|Y| + k(k-1)/2
};

/// Sequence from cut_join_start(g, w) to g. Each y first gains its
/// X-neighborhood by |A_y| neighborhood pushes through members of A (whose
/// neighborhoods stay inside X throughout), then the A-incident edges inside
/// A u Y are toggled directly.
inline CutJoinResult join_across_cut(const Graph& g, const CutWitness& w) {
    if (!witness_valid(g, w)) throw std::invalid_argument("invalid cut witness");
    const std::size_t k = w.a.size();

    CutJoinResult out;
    out.seq = OperationSequence(g.n());

    Graph cur = cut_join_start(g, w);
    for (const auto& [y, ay] : w.a_y) {
        ay.for_each_set([&](std::size_t a) {
            PushResult pr = push_neighborhood(cur, y, a);
            cur = std::move(pr.graph);
            out.seq.append(pr.seq);
        });
    }

    std::size_t ny = 0;
    for (std::size_t v = 0; v < g.n(); ++v)
        if (!w.x.test(v) && std::find(w.a.begin(), w.a.end(), v) == w.a.end()) ++ny;

    // part (ii): restore A-A edges and fix A-Y edges
    for (std::size_t i = 0; i < w.a.size(); ++i) {
        const std::size_t a = w.a[i];
        for (std::size_t v = 0; v < g.n(); ++v) {
            if (v == a || w.x.test(v)) continue;
            // handle each A-A pair once
            auto it = std::find(w.a.begin(), w.a.end(), v);
            if (it != w.a.end() && static_cast<std::size_t>(it - w.a.begin()) < i) continue;
            if (cur.has_edge(a, v) != g.has_edge(a, v)) {
                cur.toggle_edge_inplace(a, v);
                out.seq.push_toggle(a, v);
            }
        }
    }
    if (!(cur == g)) throw std::logic_error("cut join did not reach the target graph");

    out.toggle_bound = 2 * k * ny + k * k + k * ny + k * (k - 1) / 2;
    return out;
}

/// How synth_by_cuts looks for cuts.
struct CutFinderPolicy {
    enum class Kind {
        None,       // only the user-supplied cut (top level), no recursion search
        Greedy,     // sampled bisections, best cut-rank wins
        Exhaustive, // all subsets; n <= 16
    };
    Kind kind = Kind::Greedy;
    std::size_t trial_budget = 200; // greedy samples
    std::uint64_t seed = 1;
};

namespace detail {

inline bool useful_cut(const Graph& g, const VertexSet& x) {
    const std::size_t nx = x.count();
    if (nx == 0 || nx >= g.n()) return false;
    return cut_rank(g, x) < std::min(nx, g.n() - nx);
}

inline std::optional<VertexSet> find_cut(const Graph& g, const CutFinderPolicy& pol,
                                         std::uint64_t branch_seed) {
    const std::size_t n = g.n();
    if (pol.kind == CutFinderPolicy::Kind::None) return std::nullopt;
    if (pol.kind == CutFinderPolicy::Kind::Exhaustive) {
        if (n > 16) throw std::invalid_argument("exhaustive cut finder capped at n <= 16");
        std::optional<VertexSet> best;
        std::size_t best_rank = SIZE_MAX;
        for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
            VertexSet x(n);
            for (std::size_t v = 0; v < n; ++v)
                if ((mask >> v) & 1) x.set(v);
            if (!useful_cut(g, x)) continue;
            std::size_t r = cut_rank(g, x);
            if (r < best_rank) {
                best_rank = r;
                best = x;
            }
        }
        return best;
    }
    // greedy: sampled near-bisections, keep the best useful one
    std::mt19937_64 rng(pol.seed ^ branch_seed * 0x9e3779b97f4a7c15ull);
    std::optional<VertexSet> best;
    std::size_t best_rank = SIZE_MAX;
    std::vector<std::size_t> verts(n);
    for (std::size_t v = 0; v < n; ++v) verts[v] = v;
    for (std::size_t t = 0; t < pol.trial_budget; ++t) {
        std::shuffle(verts.begin(), verts.end(), rng);
        std::size_t half = n / 2;
        if (half == 0) break;
        VertexSet x(n);
        for (std::size_t i = 0; i < half; ++i) x.set(verts[i]);
        if (!useful_cut(g, x)) continue;
        std::size_t r = cut_rank(g, x);
        if (r < best_rank) {
            best_rank = r;
            best = x;
        }
    }
    return best;
}

} // namespace detail

/// Fallback synthesizer for graphs where no useful cut turns up; takes the
/// graph, returns a preparation sequence from edgeless.
using FallbackSynth = std::function<OperationSequence(const Graph&)>;

inline OperationSequence synth_naive(const Graph& g) {
    OperationSequence seq(g.n());
    for (auto [u, v] : g.edges()) seq.push_toggle(u, v);
    return seq;
}

/// Recursive cut-based synthesis. Correctness never depends on the finder:
/// whatever cut comes back, the join step is exact; only cost varies. The
/// top-level cut may be supplied by the caller.
inline OperationSequence synth_by_cuts(const Graph& g, const CutFinderPolicy& policy,
                                       const FallbackSynth& fallback = synth_naive,
                                       const std::optional<VertexSet>& user_cut = std::nullopt,
                                       std::uint64_t branch_seed = 0) {
    const std::size_t n = g.n();
    if (n <= 4) return synth_naive(g);

    std::optional<VertexSet> cut = user_cut;
    if (cut && !detail::useful_cut(g, *cut)) cut = std::nullopt;
    if (!cut) cut = detail::find_cut(g, policy, branch_seed);
    if (!cut) return fallback(g);

    CutWitness w = find_spanning_rows(g, *cut);

    // recurse on G[X u A] minus the A-A edges, and on G[Y]
    VertexSet xa = w.x;
    VertexSet in_a(n);
    for (std::size_t a : w.a) {
        xa.set(a);
        in_a.set(a);
    }
    VertexSet y(n);
    for (std::size_t v = 0; v < n; ++v)
        if (!xa.test(v)) y.set(v);

    Graph g0 = cut_join_start(g, w);
    auto left = induced_subgraph(g0, xa);
    auto right = induced_subgraph(g0, y);

    OperationSequence left_seq =
        synth_by_cuts(left.graph, policy, fallback, std::nullopt, branch_seed * 2 + 1);
    OperationSequence right_seq =
        synth_by_cuts(right.graph, policy, fallback, std::nullopt, branch_seed * 2 + 2);

    OperationSequence seq(n);
    auto remap = [&](const OperationSequence& sub, const std::vector<std::size_t>& map) {
        for (const auto& op : sub.ops) {
            if (op.kind == Operation::Kind::LC)
                seq.push_lc(map[op.u]);
            else
                seq.push_toggle(map[op.u], map[op.v]);
        }
    };
    remap(left_seq, left.original_index);
    remap(right_seq, right.original_index);

    seq.append(join_across_cut(g, w).seq);
    return seq;
}

} // namespace czsynth

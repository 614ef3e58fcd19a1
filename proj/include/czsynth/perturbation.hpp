#pragma once

#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

#include "czsynth/bitvec.hpp"
#include "czsynth/graph.hpp"
#include "czsynth/opseq.hpp"

namespace czsynth {

/// Off-diagonal part of a symmetric GF(2) matrix; the diagonal is free (a
/// perturbation zeroes it), so factorizations may choose diagonal entries at
/// will.
class SymmetricDelta {
public:
    SymmetricDelta() = default;
    explicit SymmetricDelta(std::size_t n) : n_(n), rows_(n, BitVec(n)) {}

    /// Adjacency difference of two graphs on the same vertex set.
    static SymmetricDelta between(const Graph& g, const Graph& h) {
        if (g.n() != h.n()) throw std::invalid_argument("delta: vertex count mismatch");
        SymmetricDelta d(g.n());
        for (std::size_t v = 0; v < g.n(); ++v) {
            d.rows_[v] = g.neighbors(v) ^ h.neighbors(v);
            d.rows_[v].reset(v);
        }
        return d;
    }

    std::size_t n() const { return n_; }
    bool at(std::size_t i, std::size_t j) const { return i != j && rows_[i].test(j); }
    const BitVec& row(std::size_t i) const { return rows_[i]; }

    void set(std::size_t i, std::size_t j) {
        if (i == j) throw std::invalid_argument("delta diagonal is fixed to zero");
        rows_[i].set(j);
        rows_[j].set(i);
    }

    bool is_zero() const {
        for (const auto& r : rows_)
            if (r.any()) return false;
        return true;
    }

    /// GF(2) rank with the diagonal taken as zero (as stored).
    std::size_t rank() const {
        std::vector<BitVec> rows = rows_;
        std::size_t r = 0;
        for (std::size_t col = 0; col < n_ && r < rows.size(); ++col) {
            std::size_t piv = r;
            while (piv < rows.size() && !rows[piv].test(col)) ++piv;
            if (piv == rows.size()) continue;
            std::swap(rows[r], rows[piv]);
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (i != r && rows[i].test(col)) rows[i] ^= rows[r];
            ++r;
        }
        return r;
    }

private:
    std::size_t n_ = 0;
    std::vector<BitVec> rows_;
};

/// Ordered complementation sets: complementing on each set in turn realizes
/// the delta off-diagonally.
using ComplementationList = std::vector<VertexSet>;

namespace detail {

// residual state for the peeling: off-diagonal rows only
struct PeelState {
    std::vector<BitVec> rows;

    explicit PeelState(const SymmetricDelta& d) {
        rows.reserve(d.n());
        for (std::size_t i = 0; i < d.n(); ++i) rows.push_back(d.row(i));
    }

    std::size_t n() const { return rows.size(); }

    bool row_nonzero(std::size_t i) const { return rows[i].any(); }

    std::size_t nonzero_rows() const {
        std::size_t c = 0;
        for (const auto& r : rows)
            if (r.any()) ++c;
        return c;
    }

    // subtract the off-diagonal of v v^T
    void peel(const BitVec& v) {
        v.for_each_set([&](std::size_t i) {
            rows[i] ^= v;
            rows[i].reset(i);
        });
    }

    BitVec pivot_vector(std::size_t i) const {
        BitVec v = rows[i];
        v.set(i); // diagonal chosen 1 so the peel clears row i
        return v;
    }
};

// one full peeling pass; pick_row selects the pivot among nonzero rows
template <typename Picker>
ComplementationList peel_all(const SymmetricDelta& d, Picker&& pick_row) {
    PeelState st(d);
    ComplementationList sets;
    for (;;) {
        std::vector<std::size_t> cands;
        for (std::size_t i = 0; i < st.n(); ++i)
            if (st.row_nonzero(i)) cands.push_back(i);
        if (cands.empty()) break;
        BitVec v = st.pivot_vector(pick_row(st, cands));
        st.peel(v);
        sets.push_back(v);
    }
    return sets;
}

} // namespace detail

/// Factor the delta into complementation sets X_i with
/// xor_i offdiag(x_i x_i^T) = D. Greedy symmetric peeling: each pivot row is
/// peeled with its diagonal forced to 1, which clears the row for good.
/// Pivot choice is a one-step lookahead minimizing the residual's nonzero
/// rows, plus seeded random restarts; the smallest factorization wins.
/// Reconstruction is exact by construction; the set count is reported, not
/// minimized.
inline ComplementationList factor_symmetric(const SymmetricDelta& d,
                                            std::size_t restarts = 32,
                                            std::uint64_t seed = 0x5eed) {
    // lookahead pass
    ComplementationList best = detail::peel_all(
        d, [](const detail::PeelState& st, const std::vector<std::size_t>& cands) {
            std::size_t best_i = cands.front();
            std::size_t best_score = SIZE_MAX;
            for (std::size_t i : cands) {
                detail::PeelState trial = st;
                trial.peel(st.pivot_vector(i));
                std::size_t score = trial.nonzero_rows();
                if (score < best_score) {
                    best_score = score;
                    best_i = i;
                }
            }
            return best_i;
        });

    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < restarts; ++t) {
        ComplementationList cur = detail::peel_all(
            d, [&](const detail::PeelState&, const std::vector<std::size_t>& cands) {
                return cands[rng() % cands.size()];
            });
        if (cur.size() < best.size()) best = cur;
    }
    return best;
}

/// Verify a factorization by direct XOR of the rank-one terms.
inline bool factorization_matches(const SymmetricDelta& d, const ComplementationList& sets) {
    std::vector<BitVec> rows(d.n(), BitVec(d.n()));
    for (const auto& x : sets)
        x.for_each_set([&](std::size_t i) {
            rows[i] ^= x;
            rows[i].reset(i);
        });
    for (std::size_t i = 0; i < d.n(); ++i)
        if (!(rows[i] == d.row(i))) return false;
    return true;
}

/// Realize complementing on X as an operation sequence with at most 2n-2
/// toggles: rewire a helper vertex u so N(u) = X \ {u}, locally complement at
/// u, then rewire u's edges to what complement_on(g, X) requires.
inline OperationSequence realize_complementation(const Graph& g, const VertexSet& x) {
    if (x.size() != g.n()) throw std::invalid_argument("vertex set size mismatch");
    const std::size_t n = g.n();
    OperationSequence seq(n);
    if (x.count() <= 1) return seq; // complementing a single vertex is a no-op

    const std::size_t u = 0; // lowest-index helper

    Graph target = complement_on(g, x);

    BitVec want = x;
    want.reset(u);
    BitVec cur = g.neighbors(u);
    (cur ^ want).for_each_set([&](std::size_t w) { seq.push_toggle(u, w); });

    seq.push_lc(u);

    // replay so far to know u's neighborhood after the complementation at u
    Graph mid = apply(seq, g);
    (mid.neighbors(u) ^ target.neighbors(u))
        .for_each_set([&](std::size_t w) { seq.push_toggle(u, w); });
    return seq;
}

struct PerturbationSynthesis {
    OperationSequence seq;
    std::size_t set_count = 0;
    std::size_t delta_rank = 0; // GF(2) rank of the delta with zero diagonal
};

/// Sequence from g to h: factor the adjacency difference into complementation
/// sets, realize each in turn. Toggle count is at most set_count * (2n - 2).
inline PerturbationSynthesis synth_perturbation(const Graph& g, const Graph& h) {
    if (g.n() != h.n()) throw std::invalid_argument("vertex count mismatch");
    SymmetricDelta d = SymmetricDelta::between(g, h);
    ComplementationList sets = factor_symmetric(d);

    PerturbationSynthesis out;
    out.seq = OperationSequence(g.n());
    out.set_count = sets.size();
    out.delta_rank = d.rank();

    Graph cur = g;
    for (const auto& x : sets) {
        OperationSequence step = realize_complementation(cur, x);
        cur = apply(step, cur);
        out.seq.append(step);
    }
    return out;
}

} // namespace czsynth

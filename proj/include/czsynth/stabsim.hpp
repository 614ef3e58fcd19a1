#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "czsynth/bitvec.hpp"
#include "czsynth/graph.hpp"
#include "czsynth/opseq.hpp"

namespace czsynth {

/// One stabilizer generator: a Pauli string in binary symplectic form with a
/// +/-1 sign (imaginary phases never survive on Hermitian generators; the
/// multiplication below asserts this).
struct PauliRow {
    BitVec x;
    BitVec z;
    bool negative = false;

    bool operator==(const PauliRow&) const = default;
};

namespace detail {

// exponent of i contributed by multiplying single-qubit Paulis (x1,z1)*(x2,z2)
inline int phase_exponent(bool x1, bool z1, bool x2, bool z2) {
    if (!x1 && !z1) return 0;
    if (x1 && z1) return (z2 ? 1 : 0) - (x2 ? 1 : 0);           // Y * P
    if (x1) return z2 ? (x2 ? 1 : -1) : 0;                      // X * P
    return x2 ? (z2 ? -1 : 1) : 0;                              // Z * P
}

} // namespace detail

/// Stabilizer tableau over GF(2): n generators for an n-qubit state, evolved
/// by conjugation under H, S, CZ.
class StabilizerTableau {
public:
    explicit StabilizerTableau(std::size_t n) : n_(n) {}

    /// |+>^n : generators X_i with + signs.
    static StabilizerTableau plus_states(std::size_t n) {
        StabilizerTableau t(n);
        for (std::size_t i = 0; i < n; ++i) {
            PauliRow r{BitVec(n), BitVec(n), false};
            r.x.set(i);
            t.rows_.push_back(std::move(r));
        }
        return t;
    }

    /// Graph-state generators X_i Z_N(i) with + signs: X part identity,
    /// Z part the adjacency matrix.
    static StabilizerTableau graph_state(const Graph& g) {
        StabilizerTableau t(g.n());
        for (std::size_t i = 0; i < g.n(); ++i) {
            PauliRow r{BitVec(g.n()), g.neighbors(i), false};
            r.x.set(i);
            t.rows_.push_back(std::move(r));
        }
        return t;
    }

    std::size_t n() const { return n_; }
    const std::vector<PauliRow>& rows() const { return rows_; }
    std::vector<PauliRow>& rows() { return rows_; }

    void apply_gate(const Gate& g) {
        switch (g.kind) {
        case Gate::Kind::H: apply_h(g.q1); break;
        case Gate::Kind::S: apply_s(g.q1); break;
        case Gate::Kind::CZ: apply_cz(g.q1, g.q2); break;
        }
    }

    void apply_gates(const GateList& gl) {
        if (gl.n != n_) throw std::invalid_argument("qubit count mismatch");
        for (const auto& g : gl.gates) apply_gate(g);
    }

    void apply_h(std::size_t q) {
        check(q);
        for (auto& r : rows_) {
            const bool xb = r.x.test(q), zb = r.z.test(q);
            if (xb && zb) r.negative = !r.negative;
            r.x.set(q, zb);
            r.z.set(q, xb);
        }
    }

    void apply_s(std::size_t q) {
        check(q);
        for (auto& r : rows_) {
            if (r.x.test(q) && r.z.test(q)) r.negative = !r.negative;
            if (r.x.test(q)) r.z.flip(q);
        }
    }

    void apply_cz(std::size_t a, std::size_t b) {
        check(a);
        check(b);
        if (a == b) throw std::invalid_argument("cz endpoints must be distinct");
        for (auto& r : rows_) {
            const bool xa = r.x.test(a), xb = r.x.test(b);
            if (xa && xb && (r.z.test(a) != r.z.test(b))) r.negative = !r.negative;
            if (xb) r.z.flip(a);
            if (xa) r.z.flip(b);
        }
    }

    /// Multiply row i by row j (generator product with sign bookkeeping).
    void multiply_rows(std::size_t i, std::size_t j) {
        rows_[i] = product(rows_[i], rows_[j], n_);
    }

    static PauliRow product(const PauliRow& a, const PauliRow& b, std::size_t n) {
        int e = 2 * (a.negative ? 1 : 0) + 2 * (b.negative ? 1 : 0);
        for (std::size_t q = 0; q < n; ++q)
            e += detail::phase_exponent(a.x.test(q), a.z.test(q), b.x.test(q), b.z.test(q));
        e = ((e % 4) + 4) % 4;
        if (e % 2 != 0)
            throw std::logic_error("non-Hermitian product of stabilizer generators");
        return {a.x ^ b.x, a.z ^ b.z, e == 2};
    }

    /// Pairwise commutation and GF(2) independence of the generators.
    bool invariants_hold() const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = i + 1; j < rows_.size(); ++j) {
                // symplectic inner product
                std::size_t anti = 0;
                for (std::size_t q = 0; q < n_; ++q) {
                    const bool a = rows_[i].x.test(q) && rows_[j].z.test(q);
                    const bool b = rows_[i].z.test(q) && rows_[j].x.test(q);
                    if (a != b) ++anti;
                }
                if (anti % 2 != 0) return false;
            }
        return canonical_copy().rows_.size() == rows_.size();
    }

    /// Sign-tracking reduced form: Gaussian elimination over the 2n-bit rows
    /// (X block first), signs propagated through every row combination.
    /// Groups are equal iff their canonical forms compare bit-exact.
    StabilizerTableau canonical_copy() const {
        StabilizerTableau t = *this;
        std::size_t pivot_row = 0;
        for (std::size_t col = 0; col < 2 * n_ && pivot_row < t.rows_.size(); ++col) {
            auto bit = [&](const PauliRow& r) {
                return col < n_ ? r.x.test(col) : r.z.test(col - n_);
            };
            std::size_t sel = pivot_row;
            while (sel < t.rows_.size() && !bit(t.rows_[sel])) ++sel;
            if (sel == t.rows_.size()) continue;
            std::swap(t.rows_[pivot_row], t.rows_[sel]);
            for (std::size_t i = 0; i < t.rows_.size(); ++i)
                if (i != pivot_row && bit(t.rows_[i])) t.multiply_rows(i, pivot_row);
            ++pivot_row;
        }
        t.rows_.resize(pivot_row); // drop identity rows (dependent generators)
        return t;
    }

    bool same_group(const StabilizerTableau& other) const {
        if (other.n_ != n_) return false;
        return canonical_copy().rows_ == other.canonical_copy().rows_;
    }

private:
    void check(std::size_t q) const {
        if (q >= n_) throw std::out_of_range("qubit out of range");
    }

    std::size_t n_ = 0;
    std::vector<PauliRow> rows_;
};

/// Gate-level check that `gates` prepares |g> from |+>^n.
inline bool verify_graph_state(const GateList& gates, const Graph& g) {
    if (gates.n != g.n()) return false;
    StabilizerTableau t = StabilizerTableau::plus_states(g.n());
    t.apply_gates(gates);
    return t.same_group(StabilizerTableau::graph_state(g));
}

/// Gate-level check that `gates` maps |from> to |to>.
inline bool verify_graph_transform(const GateList& gates, const Graph& from, const Graph& to) {
    if (gates.n != from.n() || from.n() != to.n()) return false;
    StabilizerTableau t = StabilizerTableau::graph_state(from);
    t.apply_gates(gates);
    return t.same_group(StabilizerTableau::graph_state(to));
}

} // namespace czsynth

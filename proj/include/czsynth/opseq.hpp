#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "czsynth/graph.hpp"

namespace czsynth {

/// One rewrite step: a free local complementation or a costed edge toggle
/// (one CZ gate).
struct Operation {
    enum class Kind { LC, Toggle };
    Kind kind;
    std::size_t u; // LC vertex, or first toggle endpoint
    std::size_t v; // second toggle endpoint (unused for LC)

    static Operation lc(std::size_t v) { return {Kind::LC, v, v}; }
    static Operation toggle(std::size_t u, std::size_t v) {
        if (u == v) throw std::invalid_argument("toggle endpoints must be distinct");
        return {Kind::Toggle, u, v};
    }
    bool operator==(const Operation&) const = default;
};

/// An ordered list of operations on a fixed vertex count. Replays
/// left-to-right; CZ cost is the number of toggles, always recomputed.
struct OperationSequence {
    std::size_t n = 0;
    std::vector<Operation> ops;

    explicit OperationSequence(std::size_t n = 0) : n(n) {}

    std::size_t cz_cost() const {
        std::size_t c = 0;
        for (const auto& op : ops)
            if (op.kind == Operation::Kind::Toggle) ++c;
        return c;
    }

    void push_lc(std::size_t v) {
        check(v);
        ops.push_back(Operation::lc(v));
    }
    void push_toggle(std::size_t u, std::size_t v) {
        check(u);
        check(v);
        ops.push_back(Operation::toggle(u, v));
    }
    void append(const OperationSequence& o) {
        if (o.n != n) throw std::invalid_argument("vertex count mismatch in append");
        ops.insert(ops.end(), o.ops.begin(), o.ops.end());
    }

private:
    void check(std::size_t v) const {
        if (v >= n) throw std::out_of_range("operation vertex out of range");
    }
};

inline void apply_inplace(const OperationSequence& seq, Graph& g) {
    if (g.n() != seq.n) throw std::invalid_argument("vertex count mismatch in apply");
    for (const auto& op : seq.ops) {
        if (op.kind == Operation::Kind::LC)
            g.local_complement_inplace(op.u);
        else
            g.toggle_edge_inplace(op.u, op.v);
    }
}

inline Graph apply(const OperationSequence& seq, Graph start) {
    apply_inplace(seq, start);
    return start;
}

/// True iff replaying seq from the edgeless graph lands exactly on target.
/// Exact equality: trailing free LCs must be part of the sequence.
inline bool verify_prepares(const OperationSequence& seq, const Graph& target) {
    if (seq.n != target.n()) return false;
    return apply(seq, Graph(target.n())) == target;
}

inline OperationSequence concat(const OperationSequence& a, const OperationSequence& b) {
    OperationSequence out = a;
    out.append(b);
    return out;
}

/// The inverse rewrite: LC and toggle are self-inverse, so reversing the
/// order undoes the sequence.
inline OperationSequence reverse(const OperationSequence& seq) {
    OperationSequence out(seq.n);
    out.ops.assign(seq.ops.rbegin(), seq.ops.rend());
    return out;
}

/// Two-toggle composite: H = (((G*v) d {uv})*v) d {uv}. Rewrites u's edges only:
/// edges into N(u) n N(v) are removed, edges into N(v) \ (N(u) u {u}) are
/// added. Exactly two toggles.
struct PushResult {
    Graph graph;
    OperationSequence seq;
};

inline PushResult push_neighborhood(const Graph& g, std::size_t u, std::size_t v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("push_neighborhood needs distinct vertices");
    OperationSequence seq(g.n());
    seq.push_lc(v);
    seq.push_toggle(u, v);
    seq.push_lc(v);
    seq.push_toggle(u, v);
    return {apply(seq, g), std::move(seq)};
}

/// Single-qubit H/S and two-qubit CZ.
struct Gate {
    enum class Kind { H, S, CZ };
    Kind kind;
    std::size_t q1;
    std::size_t q2; // CZ only

    static Gate h(std::size_t q) { return {Kind::H, q, q}; }
    static Gate s(std::size_t q) { return {Kind::S, q, q}; }
    static Gate cz(std::size_t a, std::size_t b) {
        if (a == b) throw std::invalid_argument("cz endpoints must be distinct");
        return {Kind::CZ, a, b};
    }
    bool operator==(const Gate&) const = default;
};

struct GateList {
    std::size_t n = 0;
    std::vector<Gate> gates;

    explicit GateList(std::size_t n = 0) : n(n) {}

    std::size_t cz_count() const {
        std::size_t c = 0;
        for (const auto& g : gates)
            if (g.kind == Gate::Kind::CZ) ++c;
        return c;
    }
};

/// Compile a sequence to H/S/CZ gates, tracking the evolving graph so each
/// local complementation sees its current neighborhood.
///
/// LC(v) on graph g becomes S,H,S on v plus S on every current neighbor of v,
/// which realizes sqrt(iX)_v times sqrt(iZ) on N_g(v) up to global phase and
/// maps the stabilizer group of |g> onto that of |g*v> sign-exactly. A toggle
/// becomes CZ.
inline GateList compile_gates(const OperationSequence& seq, Graph start) {
    if (start.n() != seq.n) throw std::invalid_argument("vertex count mismatch in compile");
    GateList out(seq.n);
    for (const auto& op : seq.ops) {
        if (op.kind == Operation::Kind::LC) {
            out.gates.push_back(Gate::s(op.u));
            out.gates.push_back(Gate::h(op.u));
            out.gates.push_back(Gate::s(op.u));
            start.neighbors(op.u).for_each_set(
                [&](std::size_t w) { out.gates.push_back(Gate::s(w)); });
            start.local_complement_inplace(op.u);
        } else {
            out.gates.push_back(Gate::cz(op.u, op.v));
            start.toggle_edge_inplace(op.u, op.v);
        }
    }
    return out;
}

inline GateList compile_gates(const OperationSequence& seq) {
    return compile_gates(seq, Graph(seq.n));
}

} // namespace czsynth

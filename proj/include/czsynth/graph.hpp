#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "czsynth/bitvec.hpp"

namespace czsynth {

/// Simple graph over GF(2): a symmetric adjacency bit-matrix with zero
/// diagonal. Rows are packed machine words so a local complementation is a
/// masked row-XOR loop.
///
/// Graphs are value types; the *_inplace mutators exist for hot loops (the
/// oracle, sequence replay) and leave the instance in a consistent state.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : n_(n), rows_(n, BitVec(n)) {}

    std::size_t n() const { return n_; }

    bool has_edge(std::size_t u, std::size_t v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && rows_[u].test(v);
    }

    const BitVec& neighbors(std::size_t v) const {
        check_vertex(v);
        return rows_[v];
    }

    std::size_t degree(std::size_t v) const { return neighbors(v).count(); }

    std::size_t edge_count() const {
        std::size_t c = 0;
        for (const auto& r : rows_) c += r.count();
        return c / 2;
    }

    void add_edge(std::size_t u, std::size_t v) {
        check_edge_ends(u, v);
        rows_[u].set(v);
        rows_[v].set(u);
    }

    void toggle_edge_inplace(std::size_t u, std::size_t v) {
        check_edge_ends(u, v);
        rows_[u].flip(v);
        rows_[v].flip(u);
    }

    void local_complement_inplace(std::size_t v) {
        check_vertex(v);
        const BitVec nbhd = rows_[v];
        nbhd.for_each_set([&](std::size_t u) {
            rows_[u] ^= nbhd;
            rows_[u].reset(u); // keep the diagonal zero
        });
    }

    /// Complement the induced subgraph on X, leaving everything else alone.
    void complement_on_inplace(const VertexSet& x) {
        check_set(x);
        x.for_each_set([&](std::size_t u) {
            rows_[u] ^= x;
            rows_[u].reset(u);
        });
    }

    std::vector<std::pair<std::size_t, std::size_t>> edges() const {
        std::vector<std::pair<std::size_t, std::size_t>> es;
        for (std::size_t u = 0; u < n_; ++u)
            rows_[u].for_each_set([&](std::size_t v) {
                if (u < v) es.emplace_back(u, v);
            });
        return es;
    }

    bool operator==(const Graph& o) const = default;

    std::size_t hash() const {
        std::size_t h = n_;
        for (const auto& r : rows_) h = h * 0x100000001b3ull ^ r.hash();
        return h;
    }

    void check_vertex(std::size_t v) const {
        if (v >= n_) throw std::out_of_range("vertex " + std::to_string(v) +
                                             " out of range (n=" + std::to_string(n_) + ")");
    }

private:
    void check_edge_ends(std::size_t u, std::size_t v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("edge endpoints must be distinct");
    }
    void check_set(const VertexSet& x) const {
        if (x.size() != n_) throw std::invalid_argument("vertex set size mismatch");
    }

    std::size_t n_ = 0;
    std::vector<BitVec> rows_;
};

inline Graph local_complement(Graph g, std::size_t v) {
    g.local_complement_inplace(v);
    return g;
}

inline Graph toggle_edge(Graph g, std::size_t u, std::size_t v) {
    g.toggle_edge_inplace(u, v);
    return g;
}

inline Graph complement_on(Graph g, const VertexSet& x) {
    g.complement_on_inplace(x);
    return g;
}

/// Induced subgraph on S. Vertices are renumbered to 0..|S|-1 in increasing
/// original order; the returned mapping lists the original index of each new
/// vertex, so results can be recombined into the host graph.
struct InducedSubgraph {
    Graph graph;
    std::vector<std::size_t> original_index;
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.size() != g.n()) throw std::invalid_argument("vertex set size mismatch");
    std::vector<std::size_t> orig;
    s.for_each_set([&](std::size_t v) { orig.push_back(v); });
    Graph sub(orig.size());
    for (std::size_t i = 0; i < orig.size(); ++i)
        for (std::size_t j = i + 1; j < orig.size(); ++j)
            if (g.has_edge(orig[i], orig[j])) sub.add_edge(i, j);
    return {std::move(sub), std::move(orig)};
}

/// GF(2) rank of the X x (V-X) bipartite adjacency submatrix. Symmetric in X
/// versus its complement.
inline std::size_t cut_rank(const Graph& g, const VertexSet& x) {
    if (x.size() != g.n()) throw std::invalid_argument("vertex set size mismatch");
    const std::size_t nx = x.count();
    if (nx == 0 || nx == g.n())
        throw std::invalid_argument("cut_rank needs a proper nonempty subset");
    VertexSet comp(g.n());
    for (std::size_t v = 0; v < g.n(); ++v)
        if (!x.test(v)) comp.set(v);

    std::vector<BitVec> rows;
    x.for_each_set([&](std::size_t v) {
        BitVec r = g.neighbors(v);
        r &= comp;
        if (r.any()) rows.push_back(std::move(r));
    });
    std::size_t rank = 0;
    for (std::size_t col = 0; col < g.n() && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && !rows[piv].test(col)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rank && rows[i].test(col)) rows[i] ^= rows[rank];
        ++rank;
    }
    return rank;
}

/// Connected components as vertex sets.
inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<bool> seen(g.n(), false);
    for (std::size_t s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        VertexSet comp(g.n());
        std::vector<std::size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            comp.set(v);
            g.neighbors(v).for_each_set([&](std::size_t u) {
                if (!seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
            });
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

} // namespace czsynth

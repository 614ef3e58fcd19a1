#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "czsynth/graph.hpp"
#include "czsynth/opseq.hpp"

namespace czsynth {

/// A closed interval with integer endpoints.
struct Interval {
    std::int64_t left;
    std::int64_t right;

    bool overlaps(const Interval& o) const {
        // intersect, neither contained in the other
        return (left < o.left && o.left < right && right < o.right) ||
               (o.left < left && left < o.right && o.right < right);
    }
};

/// An interval overlap representation: one interval per vertex, all 2n
/// endpoints pairwise distinct. Witnesses that the overlap graph is a circle
/// graph.
class IntervalSystem {
public:
    IntervalSystem() = default;
    explicit IntervalSystem(std::vector<Interval> intervals)
        : intervals_(std::move(intervals)) {
        std::vector<std::int64_t> eps;
        for (const auto& iv : intervals_) {
            if (iv.left >= iv.right)
                throw std::invalid_argument("interval needs left < right");
            eps.push_back(iv.left);
            eps.push_back(iv.right);
        }
        std::sort(eps.begin(), eps.end());
        if (std::adjacent_find(eps.begin(), eps.end()) != eps.end())
            throw std::invalid_argument("interval endpoints must be pairwise distinct");
    }

    std::size_t n() const { return intervals_.size(); }
    const Interval& at(std::size_t v) const { return intervals_.at(v); }
    const std::vector<Interval>& intervals() const { return intervals_; }

private:
    std::vector<Interval> intervals_;
};

inline Graph overlap_graph(const IntervalSystem& sys) {
    Graph g(sys.n());
    for (std::size_t i = 0; i < sys.n(); ++i)
        for (std::size_t j = i + 1; j < sys.n(); ++j)
            if (sys.at(i).overlaps(sys.at(j))) g.add_edge(i, j);
    return g;
}

/// Endpoint sweep: a sequence turning H into H d F, where F is the set of
/// A-B edges of the circle graph represented by sys. Visits the endpoints of
/// the A u B intervals in increasing order; an A endpoint emits LC(u),
/// TOGGLE(u,.), LC(u), a B endpoint emits a bare toggle. All toggles are
/// incident to the helper u, at most 2|A u B| of them.
inline OperationSequence sweep_toggle_bipartite(const Graph& h, const IntervalSystem& sys,
                                                const VertexSet& a, const VertexSet& b,
                                                std::size_t u) {
    if (h.n() != sys.n() || a.size() != h.n() || b.size() != h.n())
        throw std::invalid_argument("sweep: size mismatch");
    h.check_vertex(u);
    if (h.degree(u) != 0)
        throw std::invalid_argument("sweep: helper vertex must be isolated");
    if ((a & b).any())
        throw std::invalid_argument("sweep: A and B must be disjoint");
    if (a.test(u) || b.test(u))
        throw std::invalid_argument("sweep: A and B must exclude the helper");

    struct Event {
        std::int64_t pos;
        std::size_t vertex;
        bool in_a;
    };
    std::vector<Event> events;
    a.for_each_set([&](std::size_t v) {
        events.push_back({sys.at(v).left, v, true});
        events.push_back({sys.at(v).right, v, true});
    });
    b.for_each_set([&](std::size_t v) {
        events.push_back({sys.at(v).left, v, false});
        events.push_back({sys.at(v).right, v, false});
    });
    std::sort(events.begin(), events.end(),
              [](const Event& x, const Event& y) { return x.pos < y.pos; });

    OperationSequence seq(h.n());
    for (const auto& ev : events) {
        if (ev.in_a) {
            seq.push_lc(u);
            seq.push_toggle(u, ev.vertex);
            seq.push_lc(u);
        } else {
            seq.push_toggle(u, ev.vertex);
        }
    }
    return seq;
}

/// Greedy proper coloring in the given vertex order. Colors are 0-based;
/// vertices not in the order are left uncolored (-1).
struct Coloring {
    std::vector<int> color;
    std::size_t count = 0;
};

inline Coloring greedy_color(const Graph& g, const std::vector<std::size_t>& order) {
    Coloring col;
    col.color.assign(g.n(), -1);
    for (std::size_t v : order) {
        g.check_vertex(v);
        std::vector<bool> used(g.n() + 1, false);
        g.neighbors(v).for_each_set([&](std::size_t w) {
            if (col.color[w] >= 0) used[static_cast<std::size_t>(col.color[w])] = true;
        });
        std::size_t c = 0;
        while (used[c]) ++c;
        col.color[v] = static_cast<int>(c);
        col.count = std::max(col.count, c + 1);
    }
    return col;
}

struct CircleSynthesis {
    OperationSequence seq;
    std::size_t color_count = 0;    // k used in the bound
    std::size_t cost_bound = 0;     // (2n-2)*ceil(log2 k) + n - 1
};

inline std::size_t ceil_log2(std::size_t k) {
    std::size_t r = 0;
    while ((std::size_t{1} << r) < k) ++r;
    return r;
}

/// Synthesize a circle graph from its interval representation: strip the
/// edges at a helper vertex u, prepare the rest by color-class bisection with
/// the endpoint sweep joining the halves, then toggle u's edges directly.
/// Cost is at most (2n-2)*ceil(log2 k) + n - 1 with k the greedy color count.
inline CircleSynthesis synth_circle(const Graph& g, const IntervalSystem& sys) {
    if (overlap_graph(sys) != g)
        throw std::invalid_argument("interval system does not represent the graph");
    const std::size_t n = g.n();
    CircleSynthesis out;
    out.seq = OperationSequence(n);
    if (n == 0) return out;

    const std::size_t u = 0; // fixed helper at every recursion level

    // color V \ {u} greedily in left-endpoint order
    std::vector<std::size_t> order;
    for (std::size_t v = 1; v < n; ++v) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return sys.at(x).left < sys.at(y).left;
    });
    Coloring col = greedy_color(g, order);
    const std::size_t k = col.count;

    std::vector<std::vector<std::size_t>> classes(k);
    for (std::size_t v : order) classes[static_cast<std::size_t>(col.color[v])].push_back(v);

    // recursive bisection over color classes; each node's sweep complements
    // exactly the A-B edges of g, so replay builds g minus u's edges
    auto rec = [&](auto&& self, std::size_t lo, std::size_t hi) -> void {
        if (hi - lo <= 1) return;
        const std::size_t mid = lo + (hi - lo) / 2;
        self(self, lo, mid);
        self(self, mid, hi);
        VertexSet a(n), b(n);
        for (std::size_t c = lo; c < mid; ++c)
            for (std::size_t v : classes[c]) a.set(v);
        for (std::size_t c = mid; c < hi; ++c)
            for (std::size_t v : classes[c]) b.set(v);
        out.seq.append(sweep_toggle_bipartite(Graph(n), sys, a, b, u));
    };
    rec(rec, 0, k);

    g.neighbors(u).for_each_set([&](std::size_t v) { out.seq.push_toggle(u, v); });

    out.color_count = k;
    out.cost_bound = (k <= 1 ? 0 : (2 * n - 2) * ceil_log2(k)) + (n - 1);
    return out;
}

} // namespace czsynth

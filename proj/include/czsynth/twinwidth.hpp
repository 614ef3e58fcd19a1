#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "czsynth/graph.hpp"
#include "czsynth/opseq.hpp"

namespace czsynth {

/// Relation between two trigraph classes.
enum class EdgeColor : std::uint8_t { None, Black, Red };

/// A trigraph arising while contracting a host graph: classes of original
/// vertices with black (complete), red (mixed), or absent relations. A class
/// is addressed by its label, the original index of the vertex it grew from.
struct Trigraph {
    std::vector<std::size_t> labels;              // active class labels, sorted
    std::vector<VertexSet> members;               // parallel to labels
    std::vector<std::vector<EdgeColor>> relation; // relation[i][j] between labels[i], labels[j]

    std::size_t class_count() const { return labels.size(); }

    std::size_t index_of(std::size_t label) const {
        auto it = std::lower_bound(labels.begin(), labels.end(), label);
        if (it == labels.end() || *it != label)
            throw std::invalid_argument("unknown class label " + std::to_string(label));
        return static_cast<std::size_t>(it - labels.begin());
    }

    std::size_t red_degree(std::size_t idx) const {
        std::size_t d = 0;
        for (std::size_t j = 0; j < class_count(); ++j)
            if (j != idx && relation[idx][j] == EdgeColor::Red) ++d;
        return d;
    }

    std::size_t max_red_degree() const {
        std::size_t m = 0;
        for (std::size_t i = 0; i < class_count(); ++i) m = std::max(m, red_degree(i));
        return m;
    }

    static Trigraph singletons(const Graph& g) {
        Trigraph t;
        for (std::size_t v = 0; v < g.n(); ++v) {
            t.labels.push_back(v);
            VertexSet m(g.n());
            m.set(v);
            t.members.push_back(m);
        }
        t.relation.assign(g.n(), std::vector<EdgeColor>(g.n(), EdgeColor::None));
        for (std::size_t i = 0; i < g.n(); ++i)
            for (std::size_t j = i + 1; j < g.n(); ++j)
                if (g.has_edge(i, j)) t.relation[i][j] = t.relation[j][i] = EdgeColor::Black;
        return t;
    }

    /// Merge v's class into u's class. Symmetric-difference neighbors of the
    /// pair go red; common neighbors stay black only when both sides were
    /// black.
    Trigraph contract(std::size_t u, std::size_t v) const {
        if (u == v) throw std::invalid_argument("cannot merge a class with itself");
        const std::size_t iu = index_of(u), iv = index_of(v);
        Trigraph next;
        for (std::size_t i = 0; i < class_count(); ++i) {
            if (i == iv) continue;
            next.labels.push_back(labels[i]);
            VertexSet m = members[i];
            if (i == iu) m |= members[iv];
            next.members.push_back(m);
        }
        const std::size_t m = next.class_count();
        next.relation.assign(m, std::vector<EdgeColor>(m, EdgeColor::None));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                EdgeColor c;
                if (next.labels[i] == u || next.labels[j] == u) {
                    const std::size_t other =
                        index_of(next.labels[i] == u ? next.labels[j] : next.labels[i]);
                    const EdgeColor a = relation[iu][other];
                    const EdgeColor b = relation[iv][other];
                    if (a == EdgeColor::Black && b == EdgeColor::Black)
                        c = EdgeColor::Black;
                    else if (a == EdgeColor::None && b == EdgeColor::None)
                        c = EdgeColor::None;
                    else
                        c = EdgeColor::Red;
                } else {
                    c = relation[index_of(next.labels[i])][index_of(next.labels[j])];
                }
                next.relation[i][j] = next.relation[j][i] = c;
            }
        return next;
    }
};

/// An ordered list of merges (u, v): v's class is absorbed into u's class,
/// which keeps the label u. n-1 merges contract the graph to one class.
struct ContractionSequence {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> merges;
    std::size_t declared_width = 0;
};

namespace detail {

inline EdgeColor classify(const Graph& g, const VertexSet& p, const VertexSet& q) {
    std::size_t edges = 0, pairs = 0;
    p.for_each_set([&](std::size_t a) {
        q.for_each_set([&](std::size_t b) {
            ++pairs;
            if (g.has_edge(a, b)) ++edges;
        });
    });
    if (edges == 0) return EdgeColor::None;
    return edges == pairs ? EdgeColor::Black : EdgeColor::Red;
}

} // namespace detail

struct ContractionReplay {
    std::vector<Trigraph> levels; // levels[0] = singletons ... back() = one class
    std::size_t width = 0;        // max red degree observed
};

/// Replay a contraction sequence on g, producing every intermediate trigraph
/// and the measured width. Every level's colors are re-checked against g, so
/// a black relation really is a complete bipartite pattern and an absent one
/// really is empty.
inline ContractionReplay replay_contractions(const Graph& g, const ContractionSequence& cs) {
    if (cs.n != g.n()) throw std::invalid_argument("vertex count mismatch");
    if (g.n() == 0) throw std::invalid_argument("empty graph");
    if (cs.merges.size() != g.n() - 1)
        throw std::invalid_argument("contraction sequence must have n-1 merges");

    ContractionReplay out;
    Trigraph t = Trigraph::singletons(g);
    out.levels.push_back(t);

    for (auto [u, v] : cs.merges) {
        t = t.contract(u, v);
        for (std::size_t i = 0; i < t.class_count(); ++i)
            for (std::size_t j = i + 1; j < t.class_count(); ++j) {
                EdgeColor truth = detail::classify(g, t.members[i], t.members[j]);
                if (t.relation[i][j] == EdgeColor::Black && truth != EdgeColor::Black)
                    throw std::logic_error("black relation not complete in host graph");
                if (t.relation[i][j] == EdgeColor::None && truth != EdgeColor::None)
                    throw std::logic_error("absent relation has host edges");
            }
        out.width = std::max(out.width, t.max_red_degree());
        out.levels.push_back(t);
    }
    return out;
}

struct TwinWidthSynthesis {
    OperationSequence seq;
    std::size_t width = 0;      // measured width k
    std::size_t cost_bound = 0; // (k+2) * n
};

/// Synthesize g from the edgeless graph by undoing the contraction sequence.
/// The realized graph keeps one representative per class (the minimum
/// original index), wired exactly as g between representatives; a split
/// introduces an isolated representative, copies the sibling's neighborhood
/// through the two-toggle composite (one toggle when the two representatives are
/// adjacent in g, two otherwise), then toggles the red-correction edges. Each
/// split costs at most k+2 toggles.
inline TwinWidthSynthesis synth_twinwidth(const Graph& g, const ContractionSequence& cs) {
    ContractionReplay rep = replay_contractions(g, cs);
    const std::size_t n = g.n();
    const std::size_t k = rep.width;

    TwinWidthSynthesis out;
    out.seq = OperationSequence(n);
    out.width = k;
    out.cost_bound = (k + 2) * n;

    Graph realized(n);
    for (std::size_t step = cs.merges.size(); step-- > 0;) {
        const Trigraph& before = rep.levels[step];    // finer partition
        const Trigraph& after = rep.levels[step + 1]; // merged partition
        const auto [u, v] = cs.merges[step];

        const std::size_t rep_merged = after.members[after.index_of(u)].find_first();
        const std::size_t r1 = before.members[before.index_of(u)].find_first();
        const std::size_t r2 = before.members[before.index_of(v)].find_first();
        const std::size_t r_keep = rep_merged;
        const std::size_t r_new = (r1 == rep_merged) ? r2 : r1;

        if (realized.degree(r_new) != 0)
            throw std::logic_error("split representative not isolated");

        const std::size_t toggles_before = out.seq.cz_cost();

        if (g.has_edge(r_new, r_keep)) {
            // ((R*v) d {uv})*v : copies the neighborhood and adds the uv edge
            out.seq.push_lc(r_keep);
            out.seq.push_toggle(r_new, r_keep);
            out.seq.push_lc(r_keep);
            realized.local_complement_inplace(r_keep);
            realized.toggle_edge_inplace(r_new, r_keep);
            realized.local_complement_inplace(r_keep);
        } else if (realized.degree(r_keep) != 0) { // copying an empty neighborhood is a no-op
            PushResult pr = push_neighborhood(realized, r_new, r_keep);
            realized = std::move(pr.graph);
            out.seq.append(pr.seq);
        }

        // red corrections: representatives where r_new's host adjacency
        // disagrees with the copied neighborhood
        std::size_t corrections = 0;
        for (std::size_t i = 0; i < before.class_count(); ++i) {
            const std::size_t r = before.members[i].find_first();
            if (r == r_new || r == r_keep) continue;
            if (realized.has_edge(r_new, r) != g.has_edge(r_new, r)) {
                realized.toggle_edge_inplace(r_new, r);
                out.seq.push_toggle(r_new, r);
                ++corrections;
            }
        }
        if (corrections > k)
            throw std::logic_error("correction count exceeds measured width");
        if (out.seq.cz_cost() - toggles_before > k + 2)
            throw std::logic_error("split exceeded the per-step toggle budget");
    }

    if (!(realized == g)) throw std::logic_error("uncontraction did not reach the target");
    return out;
}

/// Heuristic witness generator: greedy pair selection minimizing the merged
/// trigraph's max red degree, with seeded random restarts; the best observed
/// sequence wins. Width is measured, never assumed optimal.
inline ContractionSequence greedy_contraction_sequence(const Graph& g,
                                                       std::size_t trial_budget = 4,
                                                       std::uint64_t seed = 1) {
    const std::size_t n = g.n();
    if (n == 0) throw std::invalid_argument("empty graph");

    std::mt19937_64 rng(seed);
    ContractionSequence best;
    std::size_t best_width = SIZE_MAX;

    for (std::size_t trial = 0; trial < std::max<std::size_t>(trial_budget, 1); ++trial) {
        ContractionSequence cs;
        cs.n = n;
        Trigraph t = Trigraph::singletons(g);
        std::size_t width_so_far = 0;

        while (t.class_count() > 1) {
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            for (std::size_t i = 0; i < t.class_count(); ++i)
                for (std::size_t j = i + 1; j < t.class_count(); ++j)
                    pairs.emplace_back(t.labels[i], t.labels[j]);
            std::shuffle(pairs.begin(), pairs.end(), rng);
            const std::size_t scan = std::min<std::size_t>(pairs.size(), 64);

            std::pair<std::size_t, std::size_t> pick = pairs.front();
            Trigraph picked;
            std::size_t pick_width = SIZE_MAX;
            for (std::size_t p = 0; p < scan; ++p) {
                Trigraph cand = t.contract(pairs[p].first, pairs[p].second);
                std::size_t w = cand.max_red_degree();
                if (w < pick_width) {
                    pick_width = w;
                    pick = pairs[p];
                    picked = std::move(cand);
                    if (w <= width_so_far) break; // no increase; good enough
                }
            }
            cs.merges.push_back(pick);
            width_so_far = std::max(width_so_far, pick_width);
            t = std::move(picked);
        }

        if (width_so_far < best_width) {
            best_width = width_so_far;
            best = cs;
            best.declared_width = width_so_far;
        }
    }
    return best;
}

/// Exhaustive minimum-width search over all contraction sequences; tiny n
/// only (used as a test baseline).
inline ContractionSequence exhaustive_contraction_sequence(const Graph& g) {
    const std::size_t n = g.n();
    if (n == 0) throw std::invalid_argument("empty graph");
    if (n > 8) throw std::invalid_argument("exhaustive contraction search capped at n <= 8");

    ContractionSequence best;
    std::size_t best_width = SIZE_MAX;
    std::vector<std::pair<std::size_t, std::size_t>> merges;

    auto rec = [&](auto&& self, const Trigraph& t, std::size_t width) -> void {
        if (width >= best_width) return; // prune
        if (t.class_count() == 1) {
            best_width = width;
            best.n = n;
            best.merges = merges;
            best.declared_width = width;
            return;
        }
        for (std::size_t i = 0; i < t.class_count(); ++i)
            for (std::size_t j = i + 1; j < t.class_count(); ++j) {
                Trigraph cand = t.contract(t.labels[i], t.labels[j]);
                merges.emplace_back(t.labels[i], t.labels[j]);
                self(self, cand, std::max(width, cand.max_red_degree()));
                merges.pop_back();
            }
    };
    rec(rec, Trigraph::singletons(g), 0);
    return best;
}

} // namespace czsynth

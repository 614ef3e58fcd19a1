#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "czsynth/graph.hpp"
#include "czsynth/opseq.hpp"

namespace czsynth {

/// Raised when an exact computation would exceed its configured size cap.
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// n-1 per connected component: a lower bound on exact_cz valid at any size.
inline std::size_t certify_lower_bound(const Graph& g) {
    std::size_t lb = 0;
    for (const auto& comp : connected_components(g)) lb += comp.count() - 1;
    return lb;
}

/// Exact CZ-distance by breadth-first search over local-complementation
/// orbits. LC moves are free, so the BFS arena is the quotient of graphs by
/// local equivalence: states are canonical orbit keys (the lexicographically
/// minimal packed adjacency in the orbit), one move is a single-edge toggle
/// applied to any orbit member.
///
/// Graphs are packed into a 32-bit word (upper-triangle bits), so the caps
/// top out at n = 8.
class Oracle {
public:
    explicit Oracle(std::size_t orbit_cap = 8, std::size_t distance_cap = 7)
        : orbit_cap_(orbit_cap), distance_cap_(distance_cap) {
        if (orbit_cap_ > 8 || distance_cap_ > 8)
            throw std::invalid_argument("oracle packing supports n <= 8");
    }

    std::size_t orbit_cap() const { return orbit_cap_; }
    std::size_t distance_cap() const { return distance_cap_; }

    /// Closure of {g} under local complementation at every vertex.
    std::vector<Graph> orbit(const Graph& g) {
        if (g.n() > orbit_cap_)
            throw cap_exceeded("orbit enumeration capped at n = " + std::to_string(orbit_cap_));
        std::vector<Graph> out;
        for (std::uint32_t bits : orbit_codes(pack(g), g.n())) out.push_back(unpack(bits, g.n()));
        return out;
    }

    bool locally_equivalent(const Graph& g, const Graph& h) {
        require_same_n(g, h);
        return canonical(pack(g), g.n()) == canonical(pack(h), g.n());
    }

    std::size_t exact_cz_distance(const Graph& g, const Graph& h) {
        require_same_n(g, h);
        check_distance_cap(g.n());
        return bfs(g, h).distance;
    }

    /// Distance from the edgeless graph.
    std::size_t exact_cz(const Graph& g) { return exact_cz_distance(g, Graph(g.n())); }

    struct Witness {
        std::size_t distance = 0;
        OperationSequence seq; // replays g into h exactly
    };

    Witness exact_cz_distance_witness(const Graph& g, const Graph& h) {
        require_same_n(g, h);
        check_distance_cap(g.n());
        BfsResult r = bfs(g, h);

        // chain of (orbit member toggled on, toggle endpoints) from start key
        struct Hop {
            std::uint32_t member;
            std::size_t u, v;
        };
        std::vector<Hop> hops;
        std::uint32_t key = canonical(pack(h), h.n());
        const std::uint32_t start_key = canonical(pack(g), g.n());
        while (key != start_key) {
            const Node& node = r.nodes.at(key);
            hops.push_back({node.parent_member, node.u, node.v});
            key = node.parent_key;
        }

        Witness w;
        w.distance = r.distance;
        w.seq = OperationSequence(g.n());
        std::uint32_t cur = pack(g);
        for (auto it = hops.rbegin(); it != hops.rend(); ++it) {
            for (std::size_t v : lc_path(cur, it->member, g.n())) w.seq.push_lc(v);
            w.seq.push_toggle(it->u, it->v);
            cur = toggled(it->member, it->u, it->v, g.n());
        }
        for (std::size_t v : lc_path(cur, pack(h), g.n())) w.seq.push_lc(v);
        return w;
    }

    /// One BFS from `from`, mapping each reachable canonical key to its
    /// distance. exact_cz of every same-size graph can be read off with
    /// canonical_key().
    std::unordered_map<std::uint32_t, std::size_t> all_distances(const Graph& from) {
        check_distance_cap(from.n());
        return bfs(from, std::nullopt).all;
    }

    std::uint32_t canonical_key(const Graph& g) { return canonical(pack(g), g.n()); }

    static std::uint32_t pack(const Graph& g) {
        std::uint32_t bits = 0;
        std::size_t idx = 0;
        for (std::size_t i = 0; i < g.n(); ++i)
            for (std::size_t j = i + 1; j < g.n(); ++j, ++idx)
                if (g.has_edge(i, j)) bits |= std::uint32_t{1} << idx;
        return bits;
    }

    static Graph unpack(std::uint32_t bits, std::size_t n) {
        Graph g(n);
        std::size_t idx = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j, ++idx)
                if ((bits >> idx) & 1) g.add_edge(i, j);
        return g;
    }

private:
    struct Node {
        std::uint32_t parent_key;
        std::uint32_t parent_member;
        std::size_t u, v;
    };
    struct BfsResult {
        std::size_t distance = 0;
        std::unordered_map<std::uint32_t, Node> nodes;
        std::unordered_map<std::uint32_t, std::size_t> all;
    };

    static void require_same_n(const Graph& g, const Graph& h) {
        if (g.n() != h.n()) throw std::invalid_argument("vertex count mismatch");
    }
    void check_distance_cap(std::size_t n) const {
        if (n > distance_cap_)
            throw cap_exceeded("exact distance capped at n = " + std::to_string(distance_cap_));
    }

    // ---- packed-graph primitives ----

    static std::array<std::uint8_t, 8> rows_of(std::uint32_t bits, std::size_t n) {
        std::array<std::uint8_t, 8> rows{};
        std::size_t idx = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j, ++idx)
                if ((bits >> idx) & 1) {
                    rows[i] |= std::uint8_t(1u << j);
                    rows[j] |= std::uint8_t(1u << i);
                }
        return rows;
    }

    static std::uint32_t pack_rows(const std::array<std::uint8_t, 8>& rows, std::size_t n) {
        std::uint32_t bits = 0;
        std::size_t idx = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j, ++idx)
                if ((rows[i] >> j) & 1) bits |= std::uint32_t{1} << idx;
        return bits;
    }

    static std::uint32_t lc(std::uint32_t bits, std::size_t v, std::size_t n) {
        auto rows = rows_of(bits, n);
        const std::uint8_t m = rows[v];
        for (std::size_t u = 0; u < n; ++u)
            if ((m >> u) & 1) {
                rows[u] ^= m;
                rows[u] &= std::uint8_t(~(1u << u));
            }
        return pack_rows(rows, n);
    }

    static std::uint32_t toggled(std::uint32_t bits, std::size_t u, std::size_t v, std::size_t n) {
        if (u > v) std::swap(u, v);
        std::size_t idx = u * n - u * (u + 1) / 2 + (v - u - 1);
        return bits ^ (std::uint32_t{1} << idx);
    }

    std::vector<std::uint32_t> orbit_codes(std::uint32_t bits, std::size_t n) {
        std::vector<std::uint32_t> out{bits};
        std::unordered_set<std::uint32_t> seen{bits};
        for (std::size_t head = 0; head < out.size(); ++head)
            for (std::size_t v = 0; v < n; ++v) {
                std::uint32_t next = lc(out[head], v, n);
                if (seen.insert(next).second) out.push_back(next);
            }
        return out;
    }

    std::uint32_t canonical(std::uint32_t bits, std::size_t n) {
        const std::uint64_t memo_key = (std::uint64_t(n) << 32) | bits;
        if (auto it = canon_memo_.find(memo_key); it != canon_memo_.end()) return it->second;
        std::uint32_t best = bits;
        std::vector<std::uint32_t> codes = orbit_codes(bits, n);
        for (std::uint32_t c : codes) best = std::min(best, c);
        for (std::uint32_t c : codes) canon_memo_.emplace((std::uint64_t(n) << 32) | c, best);
        return best;
    }

    /// LC vertices leading from one orbit member to another.
    std::vector<std::size_t> lc_path(std::uint32_t from, std::uint32_t to, std::size_t n) {
        if (from == to) return {};
        std::unordered_map<std::uint32_t, std::pair<std::uint32_t, std::size_t>> parent;
        std::deque<std::uint32_t> queue{from};
        parent.emplace(from, std::make_pair(from, SIZE_MAX));
        while (!queue.empty()) {
            std::uint32_t cur = queue.front();
            queue.pop_front();
            for (std::size_t v = 0; v < n; ++v) {
                std::uint32_t next = lc(cur, v, n);
                if (parent.emplace(next, std::make_pair(cur, v)).second) {
                    if (next == to) {
                        std::vector<std::size_t> path;
                        for (std::uint32_t b = to; b != from; b = parent.at(b).first)
                            path.push_back(parent.at(b).second);
                        std::reverse(path.begin(), path.end());
                        return path;
                    }
                    queue.push_back(next);
                }
            }
        }
        throw std::logic_error("graphs not in the same orbit");
    }

    BfsResult bfs(const Graph& g, std::optional<Graph> target) {
        const std::size_t n = g.n();
        const std::uint32_t start = canonical(pack(g), n);
        std::optional<std::uint32_t> goal;
        if (target) goal = canonical(pack(*target), n);

        BfsResult r;
        r.all.emplace(start, 0);
        if (goal && *goal == start) {
            r.distance = 0;
            return r;
        }
        std::deque<std::uint32_t> queue{start};
        while (!queue.empty()) {
            const std::uint32_t key = queue.front();
            queue.pop_front();
            const std::size_t d = r.all.at(key);
            for (std::uint32_t member : orbit_codes(key, n)) {
                for (std::size_t u = 0; u < n; ++u)
                    for (std::size_t v = u + 1; v < n; ++v) {
                        const std::uint32_t moved = toggled(member, u, v, n);
                        const std::uint32_t mkey = canonical(moved, n);
                        if (r.all.emplace(mkey, d + 1).second) {
                            r.nodes.emplace(mkey, Node{key, member, u, v});
                            if (goal && mkey == *goal) {
                                r.distance = d + 1;
                                return r;
                            }
                            queue.push_back(mkey);
                        }
                    }
            }
        }
        if (goal) throw std::logic_error("target unreachable"); // cannot happen
        return r;
    }

    std::size_t orbit_cap_;
    std::size_t distance_cap_;
    std::unordered_map<std::uint64_t, std::uint32_t> canon_memo_;
};

} // namespace czsynth

#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "czsynth/circle.hpp"
#include "czsynth/cutjoin.hpp"
#include "czsynth/graph.hpp"
#include "czsynth/opseq.hpp"
#include "czsynth/twinwidth.hpp"

namespace czsynth {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string> data_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

} // namespace detail

/// Graph text format: first line n, then one "u v" edge per line with
/// 0 <= u < v < n. '#' lines are comments; duplicate edges are rejected.
inline Graph read_graph(std::istream& in) {
    auto lines = detail::data_lines(in);
    if (lines.empty()) throw parse_error("graph file: missing vertex count");
    long long n;
    {
        std::istringstream ss(lines[0]);
        std::string extra;
        if (!(ss >> n) || n < 0 || (ss >> extra))
            throw parse_error("graph file: bad vertex count line");
    }
    Graph g(static_cast<std::size_t>(n));
    for (std::size_t li = 1; li < lines.size(); ++li) {
        std::istringstream ss(lines[li]);
        long long u, v;
        std::string extra;
        if (!(ss >> u >> v) || (ss >> extra))
            throw parse_error("graph file: bad edge line: " + lines[li]);
        if (u < 0 || v < 0 || u >= v || v >= n)
            throw parse_error("graph file: edge needs 0 <= u < v < n: " + lines[li]);
        if (g.has_edge(u, v)) throw parse_error("graph file: duplicate edge: " + lines[li]);
        g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
    return g;
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << g.n() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

/// Interval file: one "v left right" line per vertex, integer endpoints.
inline IntervalSystem read_intervals(std::istream& in, std::size_t n) {
    auto lines = detail::data_lines(in);
    std::vector<Interval> ivs(n, Interval{0, 0});
    std::vector<bool> seen(n, false);
    for (const auto& line : lines) {
        std::istringstream ss(line);
        long long v, l, r;
        std::string extra;
        if (!(ss >> v >> l >> r) || (ss >> extra))
            throw parse_error("interval file: bad line: " + line);
        if (v < 0 || static_cast<std::size_t>(v) >= n)
            throw parse_error("interval file: vertex out of range: " + line);
        if (seen[v]) throw parse_error("interval file: duplicate vertex: " + line);
        seen[v] = true;
        ivs[v] = Interval{l, r};
    }
    for (std::size_t v = 0; v < n; ++v)
        if (!seen[v]) throw parse_error("interval file: missing vertex " + std::to_string(v));
    try {
        return IntervalSystem(std::move(ivs));
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("interval file: ") + e.what());
    }
}

/// Contraction file: n-1 "u v" lines meaning merge v's class into u's class.
inline ContractionSequence read_contractions(std::istream& in, std::size_t n) {
    auto lines = detail::data_lines(in);
    ContractionSequence cs;
    cs.n = n;
    for (const auto& line : lines) {
        std::istringstream ss(line);
        long long u, v;
        std::string extra;
        if (!(ss >> u >> v) || (ss >> extra))
            throw parse_error("contraction file: bad line: " + line);
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
            static_cast<std::size_t>(v) >= n || u == v)
            throw parse_error("contraction file: bad merge: " + line);
        cs.merges.emplace_back(u, v);
    }
    if (cs.merges.size() != (n == 0 ? 0 : n - 1))
        throw parse_error("contraction file: expected n-1 merges");
    return cs;
}

/// Cut file: one line listing the vertex indices of X.
inline VertexSet read_cut(std::istream& in, std::size_t n) {
    auto lines = detail::data_lines(in);
    if (lines.size() != 1) throw parse_error("cut file: expected one line of indices");
    std::istringstream ss(lines[0]);
    VertexSet x(n);
    long long v;
    while (ss >> v) {
        if (v < 0 || static_cast<std::size_t>(v) >= n)
            throw parse_error("cut file: vertex out of range");
        x.set(static_cast<std::size_t>(v));
    }
    if (!ss.eof()) throw parse_error("cut file: bad token");
    return x;
}

// ---- JSON: operation sequences and gate lists ----

inline nlohmann::json ops_to_json(const OperationSequence& seq) {
    nlohmann::json ops = nlohmann::json::array();
    for (const auto& op : seq.ops) {
        if (op.kind == Operation::Kind::LC)
            ops.push_back({{"op", "LC"}, {"v", op.u}});
        else
            ops.push_back({{"op", "CZ"}, {"u", op.u}, {"v", op.v}});
    }
    return nlohmann::json{{"n", seq.n}, {"ops", std::move(ops)}};
}

inline OperationSequence ops_from_json(const nlohmann::json& j) {
    try {
        OperationSequence seq(j.at("n").get<std::size_t>());
        for (const auto& op : j.at("ops")) {
            const std::string kind = op.at("op").get<std::string>();
            if (kind == "LC")
                seq.push_lc(op.at("v").get<std::size_t>());
            else if (kind == "CZ")
                seq.push_toggle(op.at("u").get<std::size_t>(), op.at("v").get<std::size_t>());
            else
                throw parse_error("ops json: unknown op kind: " + kind);
        }
        return seq;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("ops json: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw parse_error(std::string("ops json: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("ops json: ") + e.what());
    }
}

inline nlohmann::json gates_to_json(const GateList& gl) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& g : gl.gates) {
        switch (g.kind) {
        case Gate::Kind::H: arr.push_back({{"g", "H"}, {"q", g.q1}}); break;
        case Gate::Kind::S: arr.push_back({{"g", "S"}, {"q", g.q1}}); break;
        case Gate::Kind::CZ: arr.push_back({{"g", "CZ"}, {"q", {g.q1, g.q2}}}); break;
        }
    }
    return arr;
}

inline GateList gates_from_json(const nlohmann::json& j, std::size_t n) {
    try {
        GateList gl(n);
        for (const auto& g : j) {
            const std::string kind = g.at("g").get<std::string>();
            if (kind == "H")
                gl.gates.push_back(Gate::h(g.at("q").get<std::size_t>()));
            else if (kind == "S")
                gl.gates.push_back(Gate::s(g.at("q").get<std::size_t>()));
            else if (kind == "CZ") {
                auto q = g.at("q");
                if (!q.is_array() || q.size() != 2)
                    throw parse_error("gates json: CZ needs two qubits");
                gl.gates.push_back(Gate::cz(q[0].get<std::size_t>(), q[1].get<std::size_t>()));
            } else
                throw parse_error("gates json: unknown gate: " + kind);
        }
        for (const auto& g : gl.gates)
            if (g.q1 >= n || g.q2 >= n) throw parse_error("gates json: qubit out of range");
        return gl;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("gates json: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("gates json: ") + e.what());
    }
}

// file-path conveniences

template <typename Reader>
auto read_file(const std::string& path, Reader&& reader) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    return reader(in);
}

inline Graph read_graph_file(const std::string& path) {
    return read_file(path, [](std::istream& in) { return read_graph(in); });
}

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error("invalid json in " + path + ": " + e.what());
    }
}

} // namespace czsynth

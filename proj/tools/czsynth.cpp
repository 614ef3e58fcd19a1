// czsynth: synthesize, cost, and verify preparation sequences for graph
// states, where local complementations are free and each edge toggle costs
// one CZ gate.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage/parse error, 3 cap
// exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "czsynth/circle.hpp"
#include "czsynth/cutjoin.hpp"
#include "czsynth/formats.hpp"
#include "czsynth/graph.hpp"
#include "czsynth/opseq.hpp"
#include "czsynth/oracle.hpp"
#include "czsynth/perturbation.hpp"
#include "czsynth/stabsim.hpp"
#include "czsynth/twinwidth.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

void emit(const nlohmann::json& j, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw czsynth::parse_error("cannot open output file: " + output_path);
    out << j.dump(2) << "\n";
}

struct Candidate {
    std::string strategy;
    czsynth::OperationSequence seq;
    std::string bound_note;
};

struct SynthOptions {
    std::vector<std::string> inputs;
    std::string intervals_path;
    std::string contraction_path;
    std::string cut_path;
    std::string strategy = "auto";
    std::string emit_kind = "ops";
    std::string output_path;
    std::uint64_t seed = 1;
};

int run_synth(const SynthOptions& opt) {
    using namespace czsynth;

    if (opt.inputs.empty() || opt.inputs.size() > 2) {
        std::cerr << "synth: --input takes one graph file (or two for perturb: "
                     "start then target)\n";
        return kExitUsage;
    }
    if (opt.inputs.size() == 2 && opt.strategy != "perturb") {
        std::cerr << "synth: only the perturb strategy accepts two input graphs\n";
        return kExitUsage;
    }

    const Graph target = read_graph_file(opt.inputs.back());
    const Graph start =
        opt.inputs.size() == 2 ? read_graph_file(opt.inputs.front()) : Graph(target.n());
    if (start.n() != target.n())
        throw parse_error("start and target graphs must have the same vertex count");
    const std::size_t n = target.n();

    std::optional<IntervalSystem> intervals;
    if (!opt.intervals_path.empty()) {
        intervals = read_file(opt.intervals_path,
                              [&](std::istream& in) { return read_intervals(in, n); });
        if (overlap_graph(*intervals) != target)
            throw parse_error("interval system does not represent the input graph");
    }
    std::optional<ContractionSequence> contraction;
    if (!opt.contraction_path.empty())
        contraction = read_file(opt.contraction_path,
                                [&](std::istream& in) { return read_contractions(in, n); });
    std::optional<VertexSet> cut;
    if (!opt.cut_path.empty())
        cut = read_file(opt.cut_path, [&](std::istream& in) { return read_cut(in, n); });

    const bool from_edgeless = opt.inputs.size() == 1;
    std::vector<Candidate> candidates;

    auto want = [&](const std::string& s) {
        return opt.strategy == s || opt.strategy == "auto";
    };

    if (want("naive") && from_edgeless)
        candidates.push_back({"naive", synth_naive(target),
                              "cost = |E| = " + std::to_string(target.edge_count())});

    if (want("circle") && from_edgeless && intervals) {
        CircleSynthesis cs = synth_circle(target, *intervals);
        candidates.push_back({"circle", cs.seq,
                              "bound (2n-2)ceil(log2 k)+n-1 = " +
                                  std::to_string(cs.cost_bound) +
                                  " with k = " + std::to_string(cs.color_count)});
    }

    if (want("perturb")) {
        PerturbationSynthesis ps = synth_perturbation(start, target);
        candidates.push_back({"perturb", ps.seq,
                              "bound sets*(2n-2) = " +
                                  std::to_string(ps.set_count * (n > 0 ? 2 * n - 2 : 0)) +
                                  " with sets = " + std::to_string(ps.set_count) +
                                  ", delta rank = " + std::to_string(ps.delta_rank)});
    }

    if (want("cutjoin") && from_edgeless) {
        CutFinderPolicy pol;
        pol.kind = cut && opt.strategy == "cutjoin" ? CutFinderPolicy::Kind::None
                                                    : CutFinderPolicy::Kind::Greedy;
        pol.seed = opt.seed;
        candidates.push_back(
            {"cutjoin", synth_by_cuts(target, pol, synth_naive, cut), "cost varies with cuts found"});
    }

    if (want("twinwidth") && from_edgeless && n > 0) {
        ContractionSequence cs =
            contraction ? *contraction : greedy_contraction_sequence(target, 4, opt.seed);
        TwinWidthSynthesis ts = synth_twinwidth(target, cs);
        candidates.push_back({"twinwidth", ts.seq,
                              std::string("bound (k+2)n = ") + std::to_string(ts.cost_bound) +
                                  " with measured width k = " + std::to_string(ts.width) +
                                  (contraction ? "" : " (heuristic witness)")});
    }

    if (candidates.empty()) {
        std::cerr << "synth: no applicable strategy";
        if (opt.strategy == "circle") std::cerr << " (circle needs --intervals)";
        if (!from_edgeless) std::cerr << " (two inputs require --strategy perturb)";
        std::cerr << "\n";
        return kExitUsage;
    }

    // min cost wins; earlier strategy wins ties (fixed priority order)
    const Candidate* best = &candidates.front();
    for (const auto& c : candidates)
        if (c.seq.cz_cost() < best->seq.cz_cost()) best = &c;

    // verify by replay and by tableau before emitting anything
    const bool replay_ok = apply(best->seq, start) == target;
    const GateList gates = compile_gates(best->seq, start);
    const bool tableau_ok = verify_graph_transform(gates, start, target);
    for (const auto& c : candidates)
        std::cerr << ((&c == best) ? "* " : "  ") << c.strategy
                  << ": cost " << c.seq.cz_cost() << " (" << c.bound_note << ")\n";
    std::cerr << "selected " << best->strategy << ", cost " << best->seq.cz_cost()
              << ", replay " << (replay_ok ? "ok" : "FAIL") << ", tableau "
              << (tableau_ok ? "ok" : "FAIL") << "\n";
    if (!replay_ok || !tableau_ok) {
        std::cerr << "synth: internal verification failed; nothing emitted\n";
        return kExitVerification;
    }

    if (opt.emit_kind == "gates")
        emit(gates_to_json(gates), opt.output_path);
    else
        emit(ops_to_json(best->seq), opt.output_path);
    return kExitOk;
}

int run_verify(const std::string& graph_path, const std::string& ops_path,
               const std::string& gates_path) {
    using namespace czsynth;
    if (ops_path.empty() == gates_path.empty()) {
        std::cerr << "verify: pass exactly one of --ops / --gates\n";
        return kExitUsage;
    }
    const Graph g = read_graph_file(graph_path);
    bool ok;
    if (!ops_path.empty()) {
        OperationSequence seq = ops_from_json(read_json_file(ops_path));
        ok = verify_prepares(seq, g);
    } else {
        GateList gates = gates_from_json(read_json_file(gates_path), g.n());
        ok = verify_graph_state(gates, g);
    }
    std::cerr << (ok ? "verification passed\n" : "verification FAILED\n");
    return ok ? kExitOk : kExitVerification;
}

int run_oracle(const std::string& graph_path, std::size_t cap,
               const std::string& output_path) {
    using namespace czsynth;
    const Graph g = read_graph_file(graph_path);
    Oracle oracle(std::min<std::size_t>(cap, 8), cap);
    auto w = oracle.exact_cz_distance_witness(g, Graph(g.n()));
    // witness maps g -> edgeless; reverse it into a preparation sequence
    OperationSequence prep = reverse(w.seq);
    if (!verify_prepares(prep, g)) {
        std::cerr << "oracle: witness failed verification\n";
        return kExitVerification;
    }
    std::cerr << "exact cz = " << w.distance << "\n";
    nlohmann::json j = ops_to_json(prep);
    j["exact_cz"] = w.distance;
    emit(j, output_path);
    return kExitOk;
}

int run_cost(const std::string& input_path) {
    using namespace czsynth;
    nlohmann::json j = read_json_file(input_path);
    nlohmann::json report;
    if (j.is_array()) {
        GateList gl = gates_from_json(j, SIZE_MAX); // counts only; no range check needed
        report["gates"] = gl.gates.size();
        report["cz_count"] = gl.cz_count();
    } else {
        OperationSequence seq = ops_from_json(j);
        report["n"] = seq.n;
        report["ops"] = seq.ops.size();
        report["cz_cost"] = seq.cz_cost();
    }
    std::cout << report.dump(2) << "\n";
    return kExitOk;
}

int run_orbit(const std::string& graph_path, std::size_t cap,
              const std::string& output_path) {
    using namespace czsynth;
    const Graph g = read_graph_file(graph_path);
    Oracle oracle(cap, cap);
    auto orbit = oracle.orbit(g);
    nlohmann::json members = nlohmann::json::array();
    for (const Graph& m : orbit) {
        nlohmann::json edges = nlohmann::json::array();
        for (auto [u, v] : m.edges()) edges.push_back({u, v});
        members.push_back(std::move(edges));
    }
    nlohmann::json j{{"n", g.n()}, {"orbit_size", orbit.size()}, {"members", members}};
    std::cerr << "orbit size " << orbit.size() << "\n";
    emit(j, output_path);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-state preparation sequences: free local complementations, costed CZ toggles"};
    app.require_subcommand(1);

    SynthOptions synth_opt;
    auto* synth = app.add_subcommand("synth", "synthesize a preparation sequence");
    synth->add_option("--input", synth_opt.inputs, "graph file (twice for perturb: start, target)")
        ->required();
    synth->add_option("--intervals", synth_opt.intervals_path, "interval overlap witness file");
    synth->add_option("--contraction", synth_opt.contraction_path, "contraction sequence file");
    synth->add_option("--cut", synth_opt.cut_path, "cut file (vertex indices of X)");
    synth->add_option("--strategy", synth_opt.strategy, "naive|circle|perturb|cutjoin|twinwidth|auto")
        ->check(CLI::IsMember({"naive", "circle", "perturb", "cutjoin", "twinwidth", "auto"}));
    synth->add_option("--emit", synth_opt.emit_kind, "ops|gates")
        ->check(CLI::IsMember({"ops", "gates"}));
    synth->add_option("--seed", synth_opt.seed, "seed for randomized strategies");
    synth->add_option("--output", synth_opt.output_path, "write JSON here instead of stdout");

    std::string verify_input, verify_ops, verify_gates;
    auto* verify = app.add_subcommand("verify", "verify a sequence or gate list against a graph");
    verify->add_option("--input", verify_input, "target graph file")->required();
    verify->add_option("--ops", verify_ops, "Ops JSON to replay");
    verify->add_option("--gates", verify_gates, "Gates JSON for tableau verification");

    std::string oracle_input, oracle_output;
    std::size_t oracle_cap = 7;
    auto* oracle = app.add_subcommand("oracle", "exact CZ-distance with an optimal witness");
    oracle->add_option("--input", oracle_input, "graph file")->required();
    oracle->add_option("--cap", oracle_cap, "vertex-count cap (default 7)");
    oracle->add_option("--output", oracle_output, "write JSON here instead of stdout");

    std::string cost_input;
    auto* cost = app.add_subcommand("cost", "report costs of an Ops or Gates JSON file");
    cost->add_option("--input", cost_input, "Ops or Gates JSON file")->required();

    std::string orbit_input, orbit_output;
    std::size_t orbit_cap = 8;
    auto* orbit = app.add_subcommand("orbit", "enumerate the local-complementation orbit");
    orbit->add_option("--input", orbit_input, "graph file")->required();
    orbit->add_option("--cap", orbit_cap, "vertex-count cap (default 8)");
    orbit->add_option("--output", orbit_output, "write JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (synth->parsed()) return run_synth(synth_opt);
        if (verify->parsed()) return run_verify(verify_input, verify_ops, verify_gates);
        if (oracle->parsed()) return run_oracle(oracle_input, oracle_cap, oracle_output);
        if (cost->parsed()) return run_cost(cost_input);
        if (orbit->parsed()) return run_orbit(orbit_input, orbit_cap, orbit_output);
    } catch (const czsynth::cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const czsynth::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}

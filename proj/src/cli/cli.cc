// Copyright 2026 The clusterqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/cli.h"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "clusterqec/encoding.h"
#include "clusterqec/errors.h"
#include "clusterqec/noisesim.h"
#include "clusterqec/parallel.h"
#include "clusterqec/serialization.h"
#include "clusterqec/syndrome.h"
#include "clusterqec/uniformity.h"
#include "verify/acceptance.h"

namespace clusterqec::cli {
namespace {

struct StateOptions {
    size_t dimension = 1;
    size_t length = 0;
    std::string lengths;
    bool pbc = false;
    bool obc = false;
    std::string state = "cluster";
    size_t range = 1;
    std::string edges_file;
    std::string generators_file;
};

struct CommonOptions {
    unsigned threads = 0;
    std::string out_file;
    bool timing = false;
};

struct Instance {
    std::optional<Lattice> lattice;
    std::optional<Graph> graph;
    std::vector<PauliString> generators;
    size_t num_qubits = 0;
    Json config;
};

std::vector<size_t> parse_index_list(const std::string& text, const std::string& what) {
    std::vector<size_t> out;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        size_t b = cell.find_first_not_of(" \t");
        size_t e = cell.find_last_not_of(" \t");
        if (b == std::string::npos) {
            continue;
        }
        std::string t = cell.substr(b, e - b + 1);
        if (t.find_first_not_of("0123456789") != std::string::npos) {
            throw InvalidInput("cannot parse " + what + " entry '" + t + "' as a non-negative integer");
        }
        out.push_back(std::stoull(t));
    }
    return out;
}

Boundary resolve_boundary(const StateOptions& o, Boundary fallback) {
    if (o.pbc) {
        return Boundary::kPeriodic;
    }
    if (o.obc) {
        return Boundary::kOpen;
    }
    return fallback;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Instance build_instance(const StateOptions& o) {
    Instance inst;
    const Boundary boundary = resolve_boundary(o, Boundary::kPeriodic);
    Json cfg;
    if (!o.generators_file.empty()) {
        Json j;
        try {
            j = Json::parse(read_file(o.generators_file));
        } catch (const Json::parse_error& e) {
            throw InvalidInput("generators file is not valid JSON: " + std::string(e.what()));
        }
        inst.generators = generators_from_json(j);
        if (inst.generators.empty()) {
            throw InvalidInput("generators file lists no generators");
        }
        inst.num_qubits = inst.generators.front().num_qubits();
        cfg["source"] = "generators";
        cfg["generators_file"] = o.generators_file;
        inst.config = cfg;
        return inst;
    }
    if (!o.edges_file.empty()) {
        std::istringstream in(read_file(o.edges_file));
        std::optional<size_t> n;
        if (o.length > 0) {
            n = o.length;
        }
        inst.graph = read_edge_list(in, n);
        inst.generators = graph_generators(*inst.graph);
        inst.num_qubits = inst.graph->num_vertices();
        cfg["source"] = "edge-list";
        cfg["edges_file"] = o.edges_file;
        cfg["num_qubits"] = inst.num_qubits;
        inst.config = cfg;
        return inst;
    }

    std::vector<size_t> lengths;
    if (!o.lengths.empty()) {
        lengths = parse_index_list(o.lengths, "--lengths");
    } else {
        if (o.length == 0) {
            throw InvalidInput("give --L (with --D), --lengths, --edges or --generators");
        }
        lengths.assign(o.dimension, o.length);
    }
    if (lengths.empty()) {
        throw InvalidInput("lattice needs at least one axis");
    }
    cfg["source"] = o.state;
    cfg["lengths"] = lengths;
    cfg["boundary"] = boundary_name(boundary);

    if (o.state == "cluster") {
        inst.lattice = Lattice(lengths, boundary);
        inst.graph = Graph::from_lattice(*inst.lattice);
        inst.generators = cluster_generators(*inst.lattice);
    } else if (o.state == "extended") {
        if (lengths.size() != 1) {
            throw InvalidInput("extended states are one-dimensional");
        }
        inst.graph = extended_graph(lengths[0], o.range, boundary);
        inst.generators = graph_generators(*inst.graph);
        inst.lattice = Lattice(lengths, boundary);
        cfg["range"] = o.range;
    } else if (o.state == "ghz") {
        if (lengths.size() != 1) {
            throw InvalidInput("GHZ states take a single length");
        }
        inst.generators = ghz_generators(lengths[0]);
        cfg.erase("boundary");
    } else {
        throw InvalidInput("unknown state '" + o.state + "' (expected cluster, extended or ghz)");
    }
    inst.num_qubits = inst.generators.empty() ? 0 : inst.generators.front().num_qubits();
    inst.config = cfg;
    return inst;
}

void add_state_options(CLI::App* sub, StateOptions& o) {
    sub->add_option("--D", o.dimension, "Lattice dimension")->capture_default_str();
    sub->add_option("--L", o.length, "Side length (or qubit count for ghz/extended)");
    sub->add_option("--lengths", o.lengths, "Comma-separated side lengths, overriding --D/--L");
    auto* p = sub->add_flag("--pbc", o.pbc, "Periodic boundaries");
    auto* q = sub->add_flag("--obc", o.obc, "Open boundaries");
    p->excludes(q);
    sub->add_option("--state", o.state, "cluster | extended | ghz")->capture_default_str();
    sub->add_option("--range", o.range, "Range p of the extended state")->capture_default_str();
    sub->add_option("--edges", o.edges_file, "Graph edge list: one 0-based 'u v' pair per line");
    sub->add_option("--generators", o.generators_file, "JSON array of Pauli strings");
}

void add_common_options(CLI::App* sub, CommonOptions& c) {
    sub->add_option("--threads", c.threads, "Worker threads (0 = default)");
    sub->add_option("--out", c.out_file, "Write the result here instead of stdout");
    sub->add_flag("--timing", c.timing, "Include wall-clock timings in the output");
}

Json envelope(const std::string& command, Json config, Json result) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["config"] = std::move(config);
    j["result"] = std::move(result);
    return j;
}

void emit(const std::string& text, const CommonOptions& c, std::ostream& out) {
    if (c.out_file.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out_file, std::ios::binary);
    if (!f) {
        throw InvalidInput("cannot write '" + c.out_file + "'");
    }
    f << text;
}

void emit_json(const Json& j, const CommonOptions& c, std::ostream& out) { emit(j.dump(2) + "\n", c, out); }

SearchOptions search_options(const CommonOptions& c, unsigned max_log2) {
    SearchOptions s;
    s.threads = c.threads;
    s.max_log2 = max_log2;
    return s;
}

StabilizerGroup group_of(const Instance& inst) {
    return StabilizerGroup::from_generators(inst.num_qubits, inst.generators);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stabilizer-state uniformity, syndrome and noise-benchmark toolkit"};
    app.require_subcommand(1);

    StateOptions st;
    CommonOptions common;
    unsigned max_log2 = kDefaultMaxEnumerationLog2;

    auto* lattice_cmd = app.add_subcommand("lattice", "Emit lattice, graph and stabilizer generators");
    add_state_options(lattice_cmd, st);
    add_common_options(lattice_cmd, common);

    size_t m = 0;
    std::string method = "brute";
    size_t radius = 4;
    bool assert_result = false;
    auto* uniformity_cmd = app.add_subcommand("uniformity", "Decide m-uniformity");
    add_state_options(uniformity_cmd, st);
    add_common_options(uniformity_cmd, common);
    uniformity_cmd->add_option("--m", m, "Uniformity order")->required();
    uniformity_cmd->add_option("--method", method, "brute | subset-sweep | windowed")->capture_default_str();
    uniformity_cmd->add_option("--radius", radius, "Window radius for --method windowed")->capture_default_str();
    uniformity_cmd->add_option("--max-log2", max_log2, "Brute-force cap on log2 of the group size")
        ->capture_default_str();
    uniformity_cmd->add_flag("--assert", assert_result, "Exit 1 when the state is not m-uniform");

    std::optional<size_t> stop_at;
    auto* minweight_cmd = app.add_subcommand("minweight", "Minimum support over S \\ {I}");
    add_state_options(minweight_cmd, st);
    add_common_options(minweight_cmd, common);
    minweight_cmd->add_option("--method", method, "brute | windowed")->capture_default_str();
    minweight_cmd->add_option("--radius", radius, "Window radius")->capture_default_str();
    minweight_cmd->add_option("--max-log2", max_log2, "Brute-force cap on log2 of the group size")
        ->capture_default_str();
    minweight_cmd->add_option("--stop-at", stop_at, "Stop at the first element with support <= this");

    size_t max_support = 1;
    std::optional<size_t> assume_qubit;
    std::vector<std::string> identify_bits;
    auto* syndromes_cmd = app.add_subcommand("syndromes", "Syndrome table and identification");
    add_state_options(syndromes_cmd, st);
    add_common_options(syndromes_cmd, common);
    syndromes_cmd->add_option("--t", max_support, "Largest error support to tabulate")->capture_default_str();
    syndromes_cmd->add_option("--assume-qubit", assume_qubit, "Only consider errors on this 0-based qubit");
    syndromes_cmd->add_option("--identify", identify_bits, "Syndrome bitstring(s) to look up (bit 0 first)");
    syndromes_cmd->add_flag("--assert", assert_result, "Exit 1 when the table is not pure");

    size_t bench_n = 5;
    double t1 = 100.0;
    double t2 = 30.0;
    double readout = 0.0;
    std::string delays = "0:400:20";
    uint64_t shots = 20000;
    uint64_t realizations = 5;
    std::string variant = "zxz";
    std::string engine = "sampled";
    std::string channel = "exact";
    uint64_t seed = 7;
    std::optional<size_t> probe;
    bool allow_edge = false;
    auto* bench_cmd = app.add_subcommand("bench", "Simulate the benchmarking protocol and write rate CSV");
    add_common_options(bench_cmd, common);
    bench_cmd->add_option("--n", bench_n, "Chain length")->capture_default_str();
    auto* bp = bench_cmd->add_flag("--pbc", st.pbc, "Periodic chain");
    auto* bo = bench_cmd->add_flag("--obc", st.obc, "Open chain (default)");
    bp->excludes(bo);
    bench_cmd->add_option("--t1", t1, "T1 in microseconds (inf allowed)")->capture_default_str();
    bench_cmd->add_option("--t2", t2, "T2 in microseconds (inf allowed)")->capture_default_str();
    bench_cmd->add_option("--readout", readout, "Per-qubit readout flip probability")->capture_default_str();
    bench_cmd->add_option("--delays", delays, "start:stop:step or comma list, microseconds")->capture_default_str();
    bench_cmd->add_option("--shots", shots, "Shots per delay and realization")->capture_default_str();
    bench_cmd->add_option("--realizations", realizations, "Independent realizations")->capture_default_str();
    bench_cmd->add_option("--variant", variant, "zxz | xzx")->capture_default_str();
    bench_cmd->add_option("--engine", engine, "sampled | exact")->capture_default_str();
    bench_cmd->add_option("--channel", channel, "Idle channel for the exact engine: exact | twirled")
        ->capture_default_str();
    bench_cmd->add_option("--seed", seed, "Sampler seed")->capture_default_str();
    bench_cmd->add_option("--probe", probe, "0-based probe qubit (default: middle)");
    bench_cmd->add_flag("--allow-edge", allow_edge, "Permit an end-of-chain probe on an open chain");

    std::string in_file;
    auto* fit_cmd = app.add_subcommand("fit", "Fit error rates from a bench CSV");
    add_common_options(fit_cmd, common);
    fit_cmd->add_option("--in", in_file, "Rate CSV written by bench")->required();

    std::string subset_text;
    std::string search_family;
    double alpha = 1.0 / std::sqrt(2.0);
    double beta = 1.0 / std::sqrt(2.0);
    bool with_statevector = false;
    auto* encode_cmd = app.add_subcommand("encode", "Logical encoding checks");
    add_state_options(encode_cmd, st);
    add_common_options(encode_cmd, common);
    encode_cmd->add_option("--A", subset_text, "Comma-separated 0-based qubits of A");
    encode_cmd->add_option("--m", m, "Uniformity order")->required();
    encode_cmd->add_option("--search", search_family, "Find the minimal A instead: contiguous | all-subsets");
    encode_cmd->add_option("--alpha", alpha, "Real amplitude alpha")->capture_default_str();
    encode_cmd->add_option("--beta", beta, "Real amplitude beta")->capture_default_str();
    encode_cmd->add_flag("--statevector", with_statevector, "Also compare circuit and formula states (n <= 10)");
    encode_cmd->add_option("--max-log2", max_log2, "Brute-force cap on log2 of the group size")
        ->capture_default_str();
    encode_cmd->add_flag("--assert", assert_result, "Exit 1 when the logical space is not m-uniform");

    std::vector<std::string> only;
    auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance suite and print a pass/fail table");
    verify_cmd->add_option("--threads", common.threads, "Worker threads (0 = default)");
    verify_cmd->add_option("--seed", seed, "Seed for randomized checks")->capture_default_str();
    verify_cmd->add_option("--only", only, "Criterion numbers to run");
    verify_cmd->add_flag("--timing", common.timing, "Append elapsed time to each line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (common.threads > 0) {
            set_default_threads(common.threads);
        }
        if (*lattice_cmd) {
            Instance inst = build_instance(st);
            Json result;
            if (inst.lattice) {
                result["lattice"] = to_json(*inst.lattice);
            }
            if (inst.graph) {
                result["graph"] = to_json(*inst.graph);
            }
            result["group"] = to_json(group_of(inst));
            emit_json(envelope("lattice", inst.config, result), common, out);
            return kExitOk;
        }
        if (*uniformity_cmd) {
            Instance inst = build_instance(st);
            auto group = group_of(inst);
            Json cfg = inst.config;
            cfg["m"] = m;
            cfg["method"] = method;
            Json result;
            bool uniform = false;
            if (method == "brute") {
                cfg["max_log2"] = max_log2;
                auto v = is_m_uniform(group, m, search_options(common, max_log2));
                uniform = v.uniform;
                result["report"] = to_json(v.report, common.timing);
                result["min_support"] = v.report.min_support;
                result["min_support_exact"] = v.report.exhaustive;
            } else if (method == "subset-sweep") {
                if (!group.is_state()) {
                    throw InvalidInput("m-uniformity needs a stabilizer state (q == n)");
                }
                auto sweep = subset_sweep_check(group, m);
                uniform = sweep.passed;
                result["sweep"] = to_json(sweep);
            } else if (method == "windowed") {
                if (!inst.lattice) {
                    throw InvalidInput("windowed search needs a lattice state");
                }
                cfg["radius"] = radius;
                auto rep = min_weight_windowed(group, *inst.lattice, radius, search_options(common, max_log2));
                uniform = rep.min_support > m;
                result["report"] = to_json(rep, common.timing);
                result["min_support"] = rep.min_support;
            } else {
                throw InvalidInput("unknown method '" + method + "'");
            }
            result["m"] = m;
            result["uniform"] = uniform;
            result["verdict"] = uniform ? "pass" : "fail";
            emit_json(envelope("uniformity", cfg, result), common, out);
            return assert_result && !uniform ? kExitCheckFailed : kExitOk;
        }
        if (*minweight_cmd) {
            Instance inst = build_instance(st);
            auto group = group_of(inst);
            Json cfg = inst.config;
            cfg["method"] = method;
            SearchOptions so = search_options(common, max_log2);
            so.stop_at_or_below = stop_at;
            WeightReport rep;
            if (method == "brute") {
                cfg["max_log2"] = max_log2;
                if (stop_at) {
                    cfg["stop_at"] = *stop_at;
                }
                rep = min_weight_bruteforce(group, so);
            } else if (method == "windowed") {
                if (!inst.lattice) {
                    throw InvalidInput("windowed search needs a lattice state");
                }
                cfg["radius"] = radius;
                rep = min_weight_windowed(group, *inst.lattice, radius, so);
            } else {
                throw InvalidInput("unknown method '" + method + "'");
            }
            emit_json(envelope("minweight", cfg, to_json(rep, common.timing)), common, out);
            return kExitOk;
        }
        if (*syndromes_cmd) {
            Instance inst = build_instance(st);
            auto group = group_of(inst);
            Json cfg = inst.config;
            cfg["t"] = max_support;
            cfg["assume_qubit"] = assume_qubit ? Json(*assume_qubit) : Json(nullptr);
            auto table = build_table(group, max_support, assume_qubit);
            Json result;
            result["table"] = to_json(table);
            Json ids = Json::array();
            for (const auto& bits : identify_bits) {
                if (bits.find_first_not_of("01") != std::string::npos) {
                    throw InvalidInput("syndrome '" + bits + "' must contain only 0 and 1");
                }
                Json entry = to_json(identify(table, BitVector::from_string(bits)));
                entry["syndrome"] = bits;
                ids.push_back(entry);
            }
            cfg["identify"] = identify_bits;
            result["identifications"] = ids;
            emit_json(envelope("syndromes", cfg, result), common, out);
            return assert_result && !table.pure ? kExitCheckFailed : kExitOk;
        }
        if (*bench_cmd) {
            BenchmarkSetup setup;
            setup.num_qubits = bench_n;
            setup.boundary = resolve_boundary(st, Boundary::kOpen);
            setup.probe = probe.value_or(bench_n / 2);
            setup.allow_edge = allow_edge;
            NoiseModel noise;
            noise.t1_us = t1;
            noise.t2_us = t2;
            noise.readout_p = readout;
            noise.delays_us = parse_delay_grid(delays);
            noise.variant = parse_variant(variant);
            noise.channel = parse_channel(channel);
            noise.validate();
            setup.validate();

            Json cfg;
            cfg["n"] = bench_n;
            cfg["boundary"] = boundary_name(setup.boundary);
            cfg["probe"] = setup.probe;
            cfg["t1_us"] = t1;
            cfg["t2_us"] = t2;
            cfg["readout_p"] = readout;
            cfg["delays_us"] = noise.delays_us;
            cfg["variant"] = variant_name(noise.variant);
            cfg["engine"] = engine;
            RateSeries series;
            if (engine == "exact") {
                cfg["channel"] = channel_name(noise.channel);
                series = summarize(run_exact(setup, noise));
            } else if (engine == "sampled") {
                if (realizations == 0 || shots == 0) {
                    throw InvalidInput("shots and realizations must be positive");
                }
                cfg["channel"] = "twirled";
                cfg["shots"] = shots;
                cfg["realizations"] = realizations;
                cfg["seed"] = seed;
                std::vector<SyndromeCounts> runs;
                for (uint64_t r = 0; r < realizations; r++) {
                    runs.push_back(run_sampled(setup, noise, shots, seed, r, common.threads));
                }
                series = summarize(runs, error_patterns(setup, noise.variant));
            } else {
                throw InvalidInput("unknown engine '" + engine + "' (expected sampled or exact)");
            }
            std::ostringstream csv;
            csv << "# clusterqec bench schema_version=" << kSchemaVersion << "\n";
            csv << "# config " << cfg.dump() << "\n";
            write_rate_csv(csv, series);
            emit(csv.str(), common, out);
            return kExitOk;
        }
        if (*fit_cmd) {
            std::istringstream in(read_file(in_file));
            RateFit fit = fit_error_rates(read_rate_csv(in));
            Json cfg;
            cfg["in"] = in_file;
            emit_json(envelope("fit", cfg, to_json(fit)), common, out);
            return kExitOk;
        }
        if (*encode_cmd) {
            Instance inst = build_instance(st);
            Json cfg = inst.config;
            cfg["m"] = m;
            SearchOptions so = search_options(common, max_log2);
            if (!search_family.empty()) {
                if (!inst.lattice || st.state != "cluster") {
                    throw InvalidInput("--search needs a cluster lattice");
                }
                SubsetFamily family = parse_family(search_family);
                cfg["search"] = family_name(family);
                auto res = minimal_A_search(*inst.lattice, m, family, so);
                emit_json(envelope("encode", cfg, to_json(res, common.timing)), common, out);
                return assert_result && !res.witness ? kExitCheckFailed : kExitOk;
            }
            if (subset_text.empty()) {
                throw InvalidInput("give --A or --search");
            }
            QubitSubset a(parse_index_list(subset_text, "--A"), inst.num_qubits);
            cfg["A"] = a.qubits();
            cfg["alpha"] = alpha;
            cfg["beta"] = beta;
            LogicalEncoding enc = inst.graph ? LogicalEncoding::from_graph(*inst.graph, a, alpha, beta)
                                             : LogicalEncoding::from_group(group_of(inst), a, alpha, beta);
            auto verdict = logical_space_is_m_uniform(enc, m, so);
            Json result = to_json(verdict, common.timing);
            result["logical_z"] = enc.logical_z().to_string();
            if (with_statevector) {
                auto states = encode_statevector(enc);
                Json sv;
                sv["max_abs_difference"] = (states.circuit_state - states.formula_state).cwiseAbs().maxCoeff();
                sv["postselection_probability"] = states.postselection_probability;
                result["statevector"] = sv;
            }
            emit_json(envelope("encode", cfg, result), common, out);
            return assert_result && !verdict.uniform ? kExitCheckFailed : kExitOk;
        }
        if (*verify_cmd) {
            acceptance::Options opts;
            opts.seed = seed;
            opts.threads = common.threads;
            opts.only = only;
            out << "# clusterqec verify seed=" << seed << "\n";
            auto results = acceptance::run(opts, [&](const acceptance::CriterionResult& r) {
                out << acceptance::format_line(r, common.timing) << "\n";
                out.flush();
            });
            bool ok = acceptance::all_passed(results);
            out << (ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << "\n";
            return ok ? kExitOk : kExitCheckFailed;
        }
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const DimensionError& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitOk;
}

}  // namespace clusterqec::cli

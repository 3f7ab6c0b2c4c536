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

#include "verify/acceptance.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "clusterqec/encoding.h"
#include "clusterqec/noisesim.h"
#include "clusterqec/parallel.h"
#include "clusterqec/serialization.h"
#include "clusterqec/stabilizer_group.h"
#include "clusterqec/syndrome.h"
#include "clusterqec/uniformity.h"
#include "verify/oracles.h"

namespace clusterqec::acceptance {
namespace {

// Tolerances and workload sizes, fixed here so every run checks the same thing.
constexpr double kDensityTol = 1e-12;
constexpr double kOracleTol = 1e-10;
constexpr double kEncodeTol = 1e-12;
constexpr size_t kOraclePairs = 30;
constexpr size_t kMaxOracleQubits = 10;
constexpr size_t kMaxProjectorQubits = 6;
constexpr size_t kEncodeInstancesPerLattice = 50;

constexpr double kBenchT1 = 100.0;
constexpr double kBenchT2 = 30.0;
constexpr double kBenchReadout = 0.02;
constexpr const char* kBenchGrid = "0:400:20";
constexpr const char* kSupplementaryGrid = "0:0.4:0.02";
constexpr uint64_t kBenchShots = 20000;
constexpr uint64_t kBenchRealizations = 5;
constexpr double kSamplerSigmas = 5.0;
constexpr double kT2Factor = 2.0;
constexpr double kDerivativeStep = 1e-4;

using Clock = std::chrono::steady_clock;

std::string num(double v, const char* fmt = "%.4g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

std::string sci(double v) { return num(v, "%.1e"); }

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return INFINITY;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
    if (a.size() != b.size()) {
        return INFINITY;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

double uniform53(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

StabilizerGroup cluster_group(const Lattice& lat) {
    return StabilizerGroup::from_generators(lat.num_vertices(), cluster_generators(lat));
}

class Runner {
   public:
    Runner(const Options& options, const Sink& sink) : options_(options), sink_(sink) {
        search_.threads = options.threads;
    }

    bool selected(const std::string& criterion) const {
        return options_.only.empty() ||
               std::find(options_.only.begin(), options_.only.end(), criterion) != options_.only.end();
    }

    void start() { mark_ = Clock::now(); }

    void report(std::string id, std::string title, bool passed, std::string detail, bool supplementary = false) {
        CriterionResult r;
        r.id = std::move(id);
        r.title = std::move(title);
        r.passed = passed;
        r.detail = std::move(detail);
        r.supplementary = supplementary;
        auto now = Clock::now();
        r.seconds = std::chrono::duration<double>(now - mark_).count();
        mark_ = now;
        if (sink_) {
            sink_(r);
        }
        results_.push_back(std::move(r));
    }

    const Options& options() const { return options_; }
    const SearchOptions& search() const { return search_; }
    std::vector<CriterionResult>& results() { return results_; }

   private:
    Options options_;
    Sink sink_;
    SearchOptions search_;
    Clock::time_point mark_ = Clock::now();
    std::vector<CriterionResult> results_;
};

// ---------------------------------------------------------------------------

std::string criterion1_detail(const SearchOptions& search, bool* ok) {
    Lattice lat({3}, Boundary::kPeriodic);
    auto group = cluster_group(lat);
    auto elements = enumerate_elements(group);
    std::set<std::string> names;
    for (const auto& e : elements) {
        names.insert(e.to_string());
    }
    bool has_minus_xxx = names.count("-XXX") == 1;

    QubitSubset a({0, 2}, 3);
    auto sub = restrict_to_subset(group, a);
    std::set<std::string> sub_names;
    for (const auto& e : enumerate_elements(sub)) {
        sub_names.insert(compress_to_subset(e, a).to_string());
    }
    bool sub_ok = sub_names == std::set<std::string>{"+II", "+YY"};

    DenseMatrix expected = (DenseMatrix::Identity(4, 4) + dense_matrix(PauliString::parse("YY"))) / 4.0;
    double dev = max_abs_diff(reduced_density_matrix(group, a), expected);

    bool one = is_m_uniform(group, 1, search).uniform;
    bool two = is_m_uniform(group, 2, search).uniform;

    *ok = elements.size() == 8 && names.size() == 8 && has_minus_xxx && sub_ok && dev < kDensityTol && one && !two;
    std::string sub_list;
    for (const auto& s : sub_names) {
        sub_list += (sub_list.empty() ? "" : ", ") + s;
    }
    return std::to_string(elements.size()) + " elements" + (has_minus_xxx ? " incl -XXX" : " (no -XXX)") +
           "; S_A for A={0,2} = {" + sub_list + "}; max|rho_A - (I+YY)/4| = " + sci(dev) +
           "; 1-uniform=" + (one ? "yes" : "no") + ", 2-uniform=" + (two ? "yes" : "no");
}

void criterion1(Runner& r) {
    bool ok = false;
    std::string detail = criterion1_detail(r.search(), &ok);
    r.report("1", "3-qubit worked example", ok, detail);
}

void criterion2(Runner& r) {
    const auto& s = r.search();
    std::vector<size_t> bad_1d;
    for (size_t n = 5; n <= 24; n++) {
        auto rep = min_weight_bruteforce(cluster_group(Lattice({n}, Boundary::kPeriodic)), s);
        if (rep.min_support != 3) {
            bad_1d.push_back(n);
        }
    }
    auto lat5 = Lattice::cubic(2, 5);
    auto g5 = cluster_group(lat5);
    size_t d5_brute = min_weight_bruteforce(g5, s).min_support;
    size_t d5_window = min_weight_windowed(g5, lat5, 4, s).min_support;

    auto lat6 = Lattice::cubic(2, 6);
    auto w6 = min_weight_windowed(cluster_group(lat6), lat6, 4, s);
    auto lat8 = Lattice::cubic(2, 8);
    auto w8 = min_weight_windowed(cluster_group(lat8), lat8, 4, s);
    auto lat3d = Lattice::cubic(3, 5);
    auto w3d = min_weight_windowed(cluster_group(lat3d), lat3d, 4, s);

    bool ok = bad_1d.empty() && d5_brute == 5 && d5_window == 5 && w6.min_support == 5 && w8.min_support == 5 &&
              w3d.min_support == 7;
    std::string bad;
    for (size_t n : bad_1d) {
        bad += " " + std::to_string(n);
    }
    std::string detail = std::string("1D n=5..24 d=3 ") + (bad_1d.empty() ? "all" : "fails at" + bad) +
                         "; 5x5 brute d=" + std::to_string(d5_brute) + ", windowed d=" + std::to_string(d5_window) +
                         "; 6x6 windowed d=" + std::to_string(w6.min_support) + (w6.heuristic ? " (heuristic)" : "") +
                         "; 8x8 windowed d=" + std::to_string(w8.min_support) + (w8.heuristic ? " (heuristic)" : "") +
                         "; 5^3 windowed d=" + std::to_string(w3d.min_support) +
                         (w3d.heuristic ? " (heuristic)" : "");
    r.report("2", "Cluster-state distance at desk scale", ok, detail);
}

void criterion3(Runner& r) {
    const auto& s = r.search();
    size_t d3 = min_weight_bruteforce(cluster_group(Lattice({3}, Boundary::kPeriodic)), s).min_support;
    size_t d4 = min_weight_bruteforce(cluster_group(Lattice({4}, Boundary::kPeriodic)), s).min_support;
    auto rep44 = min_weight_bruteforce(cluster_group(Lattice::cubic(2, 4)), s);
    bool ok = d3 == 2 && d4 == 2 && rep44.min_support < 5;
    std::string detail = "1D n=3 d=" + std::to_string(d3) + "; 1D n=4 d=" + std::to_string(d4) +
                         "; 4x4 d=" + std::to_string(rep44.min_support) + " witness " + rep44.witness.to_string();
    r.report("3", "Finite-size failure below L=5", ok, detail);
}

void criterion4(Runner& r) {
    const auto& s = r.search();
    std::string p2;
    bool ok = true;
    for (size_t n = 10; n <= 20; n++) {
        auto g = StabilizerGroup::from_generators(n, extended_generators(n, 2, Boundary::kPeriodic));
        size_t d = min_weight_bruteforce(g, s).min_support;
        ok = ok && d == 4;
        if (d != 4) {
            p2 += " n=" + std::to_string(n) + ":d=" + std::to_string(d);
        }
    }
    std::string p1;
    for (size_t n = 5; n <= 24; n++) {
        auto gens = extended_generators(n, 1, Boundary::kPeriodic);
        bool same = gens == cluster_generators(Lattice({n}, Boundary::kPeriodic));
        size_t d = min_weight_bruteforce(StabilizerGroup::from_generators(n, gens), s).min_support;
        ok = ok && same && d == 3;
        if (!same || d != 3) {
            p1 += " n=" + std::to_string(n) + ":d=" + std::to_string(d) + (same ? "" : ",differs");
        }
    }
    std::string detail = std::string("p=2 n=10..20 d=4 ") + (p2.empty() ? "all" : "fails:" + p2) +
                         "; p=1 n=5..24 equals cluster with d=3 " + (p1.empty() ? "all" : "fails:" + p1);
    r.report("4", "Extended next-nearest-neighbour states", ok, detail);
}

void criterion5(Runner& r) {
    const auto& s = r.search();
    bool ok = true;
    std::string fails;
    for (size_t n = 3; n <= 10; n++) {
        auto g = StabilizerGroup::from_generators(n, ghz_generators(n));
        auto one = is_m_uniform(g, 1, s);
        auto two = is_m_uniform(g, 2, s);
        bool good = one.uniform && !two.uniform && two.report.witness.weight() == 2;
        ok = ok && good;
        if (!good) {
            fails += " n=" + std::to_string(n);
        }
    }
    r.report("5", "GHZ control", ok,
             std::string("GHZ n=3..10 1-uniform, not 2-uniform with a weight-2 witness: ") +
                 (fails.empty() ? "all" : "fails at" + fails));
}

void criterion6(Runner& r) {
    std::mt19937_64 rng(r.options().seed);
    double worst_rdm = 0.0;
    double worst_proj = 0.0;
    size_t projector_cases = 0;
    for (size_t i = 0; i < kOraclePairs; i++) {
        size_t n = 2 + i % (kMaxOracleQubits - 1);
        auto group = StabilizerGroup::from_generators(n, oracle::random_lc_graph_generators(n, rng));
        auto subset = oracle::random_subset(n, rng);
        StateVector psi = state_vector(group);
        worst_rdm =
            std::max(worst_rdm, max_abs_diff(reduced_density_matrix(group, subset), oracle::partial_trace(psi, subset)));
        if (n <= kMaxProjectorQubits) {
            projector_cases++;
            DenseMatrix pure = psi * psi.adjoint();
            DenseMatrix sum = oracle::projector_sum(group);
            DenseMatrix prod = oracle::projector_product(group);
            worst_proj = std::max({worst_proj, max_abs_diff(sum, pure), max_abs_diff(prod, pure)});
        }
    }
    bool ok = worst_rdm < kOracleTol && worst_proj < kOracleTol && projector_cases > 0;
    r.report("6", "Oracle equivalence", ok,
             std::to_string(kOraclePairs) + " random pairs n<=10: max rdm deviation " + sci(worst_rdm) + "; " +
                 std::to_string(projector_cases) + " projector cases n<=6: max deviation " + sci(worst_proj));
}

std::string criterion7_detail(bool* ok) {
    auto pbc = cluster_group(Lattice({5}, Boundary::kPeriodic));
    auto table = build_table(pbc, 1);
    std::string z = syndrome(pbc, PauliString::single(5, 2, Pauli::Z)).to_string();
    std::string x = syndrome(pbc, PauliString::single(5, 2, Pauli::X)).to_string();
    std::string y = syndrome(pbc, PauliString::single(5, 2, Pauli::Y)).to_string();
    bool pbc_ok = table.num_errors == 15 && table.entries.size() == 15 && table.pure && z == "00100" &&
                  x == "01010" && y == "01110";

    auto obc = cluster_group(Lattice({5}, Boundary::kOpen));
    auto obc_table = build_table(obc, 1);
    std::string x0 = syndrome(obc, PauliString::single(5, 0, Pauli::X)).to_string();
    std::string z1 = syndrome(obc, PauliString::single(5, 1, Pauli::Z)).to_string();
    auto id = identify(obc_table, BitVector::from_string("01000"));
    bool lists_both = false;
    if (id.status == IdentifyStatus::kAmbiguous) {
        std::set<std::string> c;
        for (const auto& e : id.candidates) {
            c.insert(e.letters());
        }
        lists_both = c.count("XIIII") && c.count("IZIII");
    }
    bool obc_ok = x0 == "01000" && z1 == "01000" && !obc_table.pure && lists_both;

    auto table2d = build_table(cluster_group(Lattice::cubic(2, 5)), 2);

    *ok = pbc_ok && obc_ok && table2d.pure;
    return "PBC n=5: " + std::to_string(table.num_errors) + " errors -> " + std::to_string(table.entries.size()) +
           " syndromes, Z2=" + z + " X2=" + x + " Y2=" + y + "; OBC n=5: X0=" + x0 + " Z1=" + z1 +
           " pure=" + (obc_table.pure ? "true" : "false") + " 01000 " + identify_status_name(id.status) +
           "; 5x5 t=2: " + std::to_string(table2d.num_errors) + " errors, pure=" + (table2d.pure ? "true" : "false");
}

void criterion7(Runner& r) {
    bool ok = false;
    std::string detail = criterion7_detail(&ok);
    r.report("7", "Syndrome identification", ok, detail);
}

struct BenchOutcome {
    RateFit zxz;
    RateFit xzx;
    std::vector<SyndromeCounts> zxz_runs;
    std::vector<SyndromeCounts> xzx_runs;
};

NoiseModel bench_noise(const std::string& grid, BenchVariant variant, ChannelModel channel) {
    NoiseModel noise;
    noise.t1_us = kBenchT1;
    noise.t2_us = kBenchT2;
    noise.readout_p = kBenchReadout;
    noise.delays_us = parse_delay_grid(grid);
    noise.variant = variant;
    noise.channel = channel;
    return noise;
}

BenchOutcome run_bench(const BenchmarkSetup& setup, const std::string& grid, uint64_t seed, unsigned threads) {
    BenchOutcome out;
    for (BenchVariant v : {BenchVariant::kZXZ, BenchVariant::kXZX}) {
        NoiseModel noise = bench_noise(grid, v, ChannelModel::kTwirled);
        std::vector<SyndromeCounts> runs;
        for (uint64_t k = 0; k < kBenchRealizations; k++) {
            runs.push_back(run_sampled(setup, noise, kBenchShots, seed, k, threads));
        }
        RateFit fit = fit_error_rates(summarize(runs, error_patterns(setup, v)));
        if (v == BenchVariant::kZXZ) {
            out.zxz = fit;
            out.zxz_runs = std::move(runs);
        } else {
            out.xzx = fit;
            out.xzx_runs = std::move(runs);
        }
    }
    return out;
}

// 1 / (dp_Z/dt at t = 0) for the exact channel without readout error.
double effective_t2(const BenchmarkSetup& setup) {
    NoiseModel noise = bench_noise("0", BenchVariant::kZXZ, ChannelModel::kExact);
    noise.readout_p = 0.0;
    noise.delays_us = {0.0, kDerivativeStep};
    auto pts = run_exact(setup, noise);
    double slope = (pts[1].rates.p_z - pts[0].rates.p_z) / kDerivativeStep;
    return 1.0 / slope;
}

struct BenchVerdicts {
    bool a, b, c, d;
    std::string da, db, dc, dd;
};

BenchVerdicts judge(const BenchOutcome& o, double t2_eff) {
    BenchVerdicts v;
    const auto& f = o.zxz;
    v.a = f.z.slope > f.x.slope && f.z.slope > f.y.slope;
    v.da = "slope Z=" + num(f.z.slope) + " X=" + num(f.x.slope) + " Y=" + num(f.y.slope) + " per us";
    v.b = f.t2_est_us && *f.t2_est_us >= t2_eff / kT2Factor && *f.t2_est_us <= t2_eff * kT2Factor;
    v.db = "T2_est=" + (f.t2_est_us ? num(*f.t2_est_us) : std::string("none (slope <= 0)")) +
           " us vs effective " + num(t2_eff) + " us";
    v.c = f.z.intercept >= 0.5 * kBenchReadout && f.z.intercept <= 2 * kBenchReadout &&
          f.x.intercept < 0.25 * f.z.intercept;
    v.dc = "intercept Z=" + num(f.z.intercept) + " (range " + num(0.5 * kBenchReadout) + ".." +
           num(2 * kBenchReadout) + "), X=" + num(f.x.intercept) + " (limit " + num(0.25 * f.z.intercept) + ")";
    const auto& g = o.xzx;
    v.d = f.z.intercept > f.x.intercept && g.x.intercept > g.z.intercept;
    v.dd = "ZXZ intercepts Z=" + num(f.z.intercept) + " X=" + num(f.x.intercept) + "; XZX intercepts Z=" +
           num(g.z.intercept) + " X=" + num(g.x.intercept);
    return v;
}

// Largest deviation, in binomial standard deviations of the exact twirled
// probability, over the all-zero, X, Y, Z and other outcome classes.
double sampler_max_sigma(const BenchmarkSetup& setup, BenchVariant variant, const std::vector<SyndromeCounts>& runs,
                         const std::string& grid) {
    NoiseModel noise = bench_noise(grid, variant, ChannelModel::kTwirled);
    auto exact = run_exact(setup, noise);
    auto pat = error_patterns(setup, variant);
    double worst = 0.0;
    for (const auto& run : runs) {
        for (size_t d = 0; d < exact.size(); d++) {
            PatternRates sampled = rates_from_counts(run.counts[d], run.shots, pat);
            const PatternRates& ex = exact[d].rates;
            double ex_none = exact[d].distribution[0];
            double sampled_none = 1.0 - sampled.p_x - sampled.p_y - sampled.p_z - sampled.p_other;
            const double pairs[5][2] = {{sampled.p_x, ex.p_x},
                                        {sampled.p_y, ex.p_y},
                                        {sampled.p_z, ex.p_z},
                                        {sampled.p_other, ex.p_other},
                                        {sampled_none, ex_none}};
            for (const auto& pr : pairs) {
                double sigma = std::sqrt(pr[1] * (1 - pr[1]) / static_cast<double>(run.shots));
                double dev = std::abs(pr[0] - pr[1]);
                if (sigma == 0.0) {
                    worst = std::max(worst, dev == 0.0 ? 0.0 : INFINITY);
                } else {
                    worst = std::max(worst, dev / sigma);
                }
            }
        }
    }
    return worst;
}

void criterion8(Runner& r) {
    BenchmarkSetup setup;
    const double t2_eff = effective_t2(setup);
    const std::string title = "Benchmark simulation";

    BenchOutcome main = run_bench(setup, kBenchGrid, r.options().seed, r.options().threads);
    BenchVerdicts v = judge(main, t2_eff);
    r.report("8a", title + ", Z slope exceeds X and Y (0..400 us)", v.a, v.da);
    r.report("8b", title + ", T2 estimate within factor 2 (0..400 us)", v.b, v.db);
    r.report("8c", title + ", SPAM intercepts (0..400 us)", v.c, v.dc);
    r.report("8d", title + ", XZX swaps X/Z intercepts (0..400 us)", v.d, v.dd);

    double zs = sampler_max_sigma(setup, BenchVariant::kZXZ, main.zxz_runs, kBenchGrid);
    double xs = sampler_max_sigma(setup, BenchVariant::kXZX, main.xzx_runs, kBenchGrid);
    double worst = std::max(zs, xs);
    r.report("8s", title + ", sampler vs exact twirled engine", worst <= kSamplerSigmas,
             "max deviation " + num(worst, "%.2f") + " sigma over 5 realizations x 21 delays x 5 outcome classes x 2 "
                                                    "variants (limit " +
                 num(kSamplerSigmas, "%.0f") + ")");

    BenchOutcome fast = run_bench(setup, kSupplementaryGrid, r.options().seed, r.options().threads);
    BenchVerdicts s = judge(fast, t2_eff);
    r.report("8x", title + ", same checks on a 0..0.4 us grid", s.a && s.b && s.c && s.d,
             std::string(s.a ? "a ok" : "a FAIL") + ", " + (s.b ? "b ok" : "b FAIL") + ", " +
                 (s.c ? "c ok" : "c FAIL") + ", " + (s.d ? "d ok" : "d FAIL") + "; " + s.da + "; " + s.db + "; " +
                 s.dc + "; " + s.dd,
             true);
}

void criterion9(Runner& r) {
    const auto& s = r.search();
    Lattice lat({20}, Boundary::kPeriodic);
    Graph graph = Graph::from_lattice(lat);
    const Complex amp(1.0 / std::sqrt(2.0), 0.0);
    auto check = [&](std::vector<size_t> a) {
        auto enc = LogicalEncoding::from_graph(graph, QubitSubset(std::move(a), 20), amp, amp);
        return logical_space_is_m_uniform(enc, 2, s);
    };
    auto seven = check({0, 1, 2, 3, 4, 5, 6});
    auto one = check({0});
    auto two = check({0, 1});

    std::mt19937_64 rng(r.options().seed);
    double worst = 0.0;
    size_t instances = 0;
    for (size_t n = 3; n <= 8; n++) {
        Graph g = Graph::from_lattice(Lattice({n}, Boundary::kPeriodic));
        for (size_t i = 0; i < kEncodeInstancesPerLattice; i++) {
            double theta = uniform53(rng) * M_PI / 2;
            double phi = uniform53(rng) * 2 * M_PI;
            auto enc = LogicalEncoding::from_graph(g, oracle::random_subset(n, rng), std::cos(theta),
                                                   std::polar(std::sin(theta), phi));
            auto states = encode_statevector(enc);
            worst = std::max(worst, max_abs_diff(states.circuit_state, states.formula_state));
            instances++;
        }
    }

    auto search = minimal_A_search(lat, 2, SubsetFamily::kContiguous, s);
    size_t minimal = search.witness ? search.witness->size() : 0;
    std::string witness;
    if (search.witness) {
        for (size_t q : search.witness->qubits()) {
            witness += (witness.empty() ? "" : ",") + std::to_string(q);
        }
    }
    bool ok = seven.uniform && !one.uniform && !two.uniform && worst < kEncodeTol && search.witness && minimal <= 7;
    std::string detail = "n=20 |A|=7: stabilizer d=" + std::to_string(seven.stabilizer_report.min_support) +
                         ", coset d=" + std::to_string(seven.coset_report.min_support) +
                         (seven.uniform ? " (2-uniform)" : " (not 2-uniform)") +
                         "; |A|=1 coset d=" + std::to_string(one.coset_report.min_support) +
                         "; |A|=2 coset d=" + std::to_string(two.coset_report.min_support) + "; circuit vs formula max " +
                         sci(worst) + " over " + std::to_string(instances) + " instances; minimal contiguous |A|=" +
                         (search.witness ? std::to_string(minimal) + " at {" + witness + "}" : std::string("none"));
    r.report("9", "Encoding bound", ok, detail);
}

std::string csv_of(const RateSeries& series) {
    std::ostringstream os;
    write_rate_csv(os, series);
    return os.str();
}

void criterion10(Runner& r) {
    const uint64_t seed = r.options().seed;
    std::vector<std::string> mismatches;
    auto compare = [&](const std::string& what, const std::string& a, const std::string& b) {
        if (a != b) {
            mismatches.push_back(what);
        }
    };

    SearchOptions one_thread;
    one_thread.threads = 1;
    SearchOptions four_threads;
    four_threads.threads = 4;

    auto g5 = cluster_group(Lattice::cubic(2, 5));
    compare("brute 5x5 (1 vs 4 threads)", to_json(min_weight_bruteforce(g5, one_thread), false).dump(),
            to_json(min_weight_bruteforce(g5, four_threads), false).dump());
    SearchOptions early_one = one_thread;
    early_one.stop_at_or_below = 4;
    SearchOptions early_four = four_threads;
    early_four.stop_at_or_below = 4;
    auto g44 = cluster_group(Lattice::cubic(2, 4));
    compare("early-stop 4x4 (1 vs 4 threads)", to_json(min_weight_bruteforce(g44, early_one), false).dump(),
            to_json(min_weight_bruteforce(g44, early_four), false).dump());
    auto lat8 = Lattice::cubic(2, 8);
    auto g8 = cluster_group(lat8);
    compare("windowed 8x8 (1 vs 4 threads)", to_json(min_weight_windowed(g8, lat8, 4, one_thread), false).dump(),
            to_json(min_weight_windowed(g8, lat8, 4, four_threads), false).dump());

    BenchmarkSetup setup;
    NoiseModel noise = bench_noise("0:40:10", BenchVariant::kZXZ, ChannelModel::kTwirled);
    auto pat = error_patterns(setup, noise.variant);
    auto bench_series = [&](unsigned threads) {
        std::vector<SyndromeCounts> runs;
        for (uint64_t k = 0; k < 3; k++) {
            runs.push_back(run_sampled(setup, noise, 2000, seed, k, threads));
        }
        return summarize(runs, pat);
    };
    RateSeries series = bench_series(1);
    std::string csv_a = csv_of(series);
    compare("bench CSV rerun", csv_a, csv_of(bench_series(1)));
    compare("bench CSV (1 vs 4 threads)", csv_a, csv_of(bench_series(4)));

    std::istringstream in(csv_a);
    compare("fit via CSV round trip", to_json(fit_error_rates(read_rate_csv(in))).dump(),
            to_json(fit_error_rates(series)).dump());

    auto table_json = [] { return to_json(build_table(cluster_group(Lattice({5}, Boundary::kOpen)), 2)).dump(); };
    compare("syndrome table rerun", table_json(), table_json());

    Lattice chain({12}, Boundary::kPeriodic);
    compare("minimal-A search (1 vs 4 threads)",
            to_json(minimal_A_search(chain, 2, SubsetFamily::kContiguous, one_thread), false).dump(),
            to_json(minimal_A_search(chain, 2, SubsetFamily::kContiguous, four_threads), false).dump());

    bool ok1a = false, ok1b = false, ok7a = false, ok7b = false;
    compare("criterion 1 rerun", criterion1_detail(r.search(), &ok1a), criterion1_detail(r.search(), &ok1b));
    compare("criterion 7 rerun", criterion7_detail(&ok7a), criterion7_detail(&ok7b));

    std::string detail = mismatches.empty() ? "10 artifact pairs byte-identical" : "mismatch:";
    for (const auto& m : mismatches) {
        detail += " [" + m + "]";
    }
    r.report("10", "Determinism", mismatches.empty(), detail);
}

}  // namespace

std::vector<CriterionResult> run(const Options& options, const Sink& sink) {
    Runner r(options, sink);
    using Fn = void (*)(Runner&);
    const std::pair<const char*, Fn> steps[] = {
        {"1", criterion1}, {"2", criterion2}, {"3", criterion3}, {"4", criterion4},  {"5", criterion5},
        {"6", criterion6}, {"7", criterion7}, {"8", criterion8}, {"9", criterion9}, {"10", criterion10},
    };
    for (const auto& [id, fn] : steps) {
        if (!r.selected(id)) {
            continue;
        }
        r.start();
        try {
            fn(r);
        } catch (const std::exception& e) {
            r.report(id, "criterion " + std::string(id), false, std::string("threw: ") + e.what());
        }
    }
    return r.results();
}

std::string format_line(const CriterionResult& r, bool with_timing) {
    std::string line = r.passed ? "PASS  " : "FAIL  ";
    std::string id = r.id;
    id.resize(std::max<size_t>(id.size(), 4), ' ');
    line += id + " ";
    if (r.supplementary) {
        line += "[supplementary] ";
    }
    line += r.title + ": " + r.detail;
    if (with_timing) {
        line += " (" + num(r.seconds, "%.2f") + " s)";
    }
    return line;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.supplementary || r.passed; });
}

}  // namespace clusterqec::acceptance

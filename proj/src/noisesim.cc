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

#include "clusterqec/noisesim.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include "clusterqec/errors.h"
#include "clusterqec/parallel.h"

namespace clusterqec {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Lattice chain(const BenchmarkSetup& setup) { return Lattice({setup.num_qubits}, setup.boundary); }

double uniform53(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// rho <- G rho G^dagger, with G given by its action on state vectors.
template <typename Gate>
void conjugate(DenseMatrix& rho, Gate&& gate) {
    for (int pass = 0; pass < 2; pass++) {
        for (Eigen::Index c = 0; c < rho.cols(); c++) {
            StateVector col = rho.col(c);
            gate(col);
            rho.col(c) = col;
        }
        rho.adjointInPlace();
    }
}

void apply_h_layer(DenseMatrix& rho, size_t n) {
    for (size_t q = 0; q < n; q++) {
        conjugate(rho, [q](StateVector& v) { apply_h(v, q); });
    }
}

// U^dagger for U = (CZ layer)(H layer).
void apply_unprepare(DenseMatrix& rho, const Circuit& prep) {
    for (auto it = prep.gates().rbegin(); it != prep.gates().rend(); ++it) {
        if (const auto* h = std::get_if<HGate>(&*it)) {
            size_t q = h->qubit;
            conjugate(rho, [q](StateVector& v) { apply_h(v, q); });
        } else if (const auto* cz = std::get_if<CZGate>(&*it)) {
            size_t a = cz->a;
            size_t b = cz->b;
            conjugate(rho, [a, b](StateVector& v) { apply_cz(v, a, b); });
        }
    }
}

void apply_pauli_channel(DenseMatrix& rho, size_t qubit, const TwirlProbabilities& p) {
    const Eigen::Index m = Eigen::Index{1} << qubit;
    const double keep = 1.0 - p.p_x - p.p_y - p.p_z;
    for (Eigen::Index r = 0; r < rho.rows(); r++) {
        if (r & m) {
            continue;
        }
        for (Eigen::Index c = 0; c < rho.cols(); c++) {
            if (c & m) {
                continue;
            }
            // Block entries indexed by (row bit, column bit) of this qubit.
            Complex e00 = rho(r, c), e01 = rho(r, c | m), e10 = rho(r | m, c), e11 = rho(r | m, c | m);
            // X.X swaps both bits; Z.Z signs off-diagonal entries; Y.Y does both.
            rho(r, c) = (keep + p.p_z) * e00 + (p.p_x + p.p_y) * e11;
            rho(r | m, c | m) = (keep + p.p_z) * e11 + (p.p_x + p.p_y) * e00;
            rho(r, c | m) = (keep - p.p_z) * e01 + (p.p_x - p.p_y) * e10;
            rho(r | m, c) = (keep - p.p_z) * e10 + (p.p_x - p.p_y) * e01;
        }
    }
}

void apply_damping_dephasing(DenseMatrix& rho, size_t qubit, double gamma, double coherence) {
    const Eigen::Index m = Eigen::Index{1} << qubit;
    const double off = std::sqrt(1.0 - gamma) * coherence;
    for (Eigen::Index r = 0; r < rho.rows(); r++) {
        if (r & m) {
            continue;
        }
        for (Eigen::Index c = 0; c < rho.cols(); c++) {
            if (c & m) {
                continue;
            }
            rho(r, c) += gamma * rho(r | m, c | m);
            rho(r | m, c | m) *= 1.0 - gamma;
            rho(r, c | m) *= off;
            rho(r | m, c) *= off;
        }
    }
}

void apply_readout(std::vector<double>& dist, size_t n, double p) {
    if (p == 0.0) {
        return;
    }
    for (size_t q = 0; q < n; q++) {
        const size_t m = size_t{1} << q;
        for (size_t b = 0; b < dist.size(); b++) {
            if (b & m) {
                continue;
            }
            double p0 = dist[b];
            double p1 = dist[b | m];
            dist[b] = (1 - p) * p0 + p * p1;
            dist[b | m] = p * p0 + (1 - p) * p1;
        }
    }
}

PatternRates rates_from_distribution(const std::vector<double>& dist, const ErrorPatterns& pat) {
    PatternRates r;
    r.p_x = dist[pat.x];
    r.p_y = dist[pat.y];
    r.p_z = dist[pat.z];
    for (size_t b = 1; b < dist.size(); b++) {
        if (b != pat.x && b != pat.y && b != pat.z) {
            r.p_other += dist[b];
        }
    }
    return r;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    size_t e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

double parse_double(const std::string& s, const std::string& what) {
    std::string t = trim(s);
    try {
        size_t used = 0;
        double v = std::stod(t, &used);
        if (used != t.size()) {
            throw std::invalid_argument(t);
        }
        return v;
    } catch (const std::exception&) {
        throw InvalidInput("cannot parse " + what + " '" + t + "' as a number");
    }
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string variant_name(BenchVariant v) { return v == BenchVariant::kZXZ ? "zxz" : "xzx"; }

BenchVariant parse_variant(const std::string& name) {
    if (name == "zxz" || name == "ZXZ") {
        return BenchVariant::kZXZ;
    }
    if (name == "xzx" || name == "XZX") {
        return BenchVariant::kXZX;
    }
    throw InvalidInput("unknown variant '" + name + "' (expected zxz or xzx)");
}

std::string channel_name(ChannelModel c) { return c == ChannelModel::kExact ? "exact" : "twirled"; }

ChannelModel parse_channel(const std::string& name) {
    if (name == "exact") {
        return ChannelModel::kExact;
    }
    if (name == "twirled") {
        return ChannelModel::kTwirled;
    }
    throw InvalidInput("unknown channel '" + name + "' (expected exact or twirled)");
}

void NoiseModel::validate() const {
    if (!(t1_us > 0) || !(t2_us > 0)) {
        throw InvalidInput("T1 and T2 must be positive");
    }
    if (t2_us > 2 * t1_us) {
        throw InvalidInput("unphysical noise: T2 = " + format_double(t2_us) + " exceeds 2*T1 = " +
                           format_double(2 * t1_us));
    }
    if (!(readout_p >= 0 && readout_p < 1)) {
        throw InvalidInput("readout probability must lie in [0, 1)");
    }
    if (delays_us.empty()) {
        throw InvalidInput("delay grid is empty");
    }
    for (size_t i = 0; i < delays_us.size(); i++) {
        if (!(delays_us[i] >= 0) || !std::isfinite(delays_us[i])) {
            throw InvalidInput("delays must be finite and nonnegative");
        }
        if (i > 0 && !(delays_us[i] > delays_us[i - 1])) {
            throw InvalidInput("delays must be strictly increasing");
        }
    }
}

double pure_dephasing_time(double t1_us, double t2_us) {
    double rate = 1.0 / t2_us - 1.0 / (2.0 * t1_us);
    if (rate < 0) {
        throw InvalidInput("unphysical noise: T2 exceeds 2*T1");
    }
    return rate == 0 ? kInf : 1.0 / rate;
}

TwirlProbabilities twirl_probabilities(double t1_us, double t2_us, double t_us) {
    double relax = -std::expm1(-t_us / t1_us);
    double dephase = -std::expm1(-t_us / t2_us);
    TwirlProbabilities p;
    p.p_x = relax / 4;
    p.p_y = relax / 4;
    p.p_z = dephase / 2 - relax / 4;
    if (p.p_z < 0) {
        throw InvalidInput("negative twirled Z probability at t = " + format_double(t_us) +
                           " (unphysical T1/T2 combination)");
    }
    return p;
}

void BenchmarkSetup::validate() const {
    if (num_qubits < 3) {
        throw InvalidInput("benchmark chain needs at least 3 qubits");
    }
    if (probe >= num_qubits) {
        throw InvalidInput("probe qubit " + std::to_string(probe) + " out of range");
    }
    if (boundary == Boundary::kOpen && !allow_edge && (probe == 0 || probe + 1 == num_qubits)) {
        throw InvalidInput("probe qubit " + std::to_string(probe) +
                           " is at the end of an open chain; pass --allow-edge to permit it");
    }
}

ErrorPatterns error_patterns(const BenchmarkSetup& setup, BenchVariant variant) {
    const size_t n = setup.num_qubits;
    if (n > kMaxSampledQubits) {
        throw ResourceLimit("benchmark patterns support at most 64 qubits");
    }
    auto gens = cluster_generators(chain(setup));
    ErrorPatterns pat;
    pat.flips.resize(n);
    constexpr Pauli kOrder[3] = {Pauli::X, Pauli::Y, Pauli::Z};
    for (size_t q = 0; q < n; q++) {
        for (size_t k = 0; k < 3; k++) {
            Pauli p = kOrder[k];
            // The Hadamard layer after the delay exchanges X and Z errors.
            if (variant == BenchVariant::kXZX && p != Pauli::Y) {
                p = p == Pauli::X ? Pauli::Z : Pauli::X;
            }
            PauliString e = PauliString::single(n, q, p);
            uint64_t bits = 0;
            for (size_t g = 0; g < n; g++) {
                if (!commutes(e, gens[g])) {
                    bits |= uint64_t{1} << g;
                }
            }
            pat.flips[q][k] = bits;
        }
    }
    pat.x = pat.flips[setup.probe][0];
    pat.y = pat.flips[setup.probe][1];
    pat.z = pat.flips[setup.probe][2];
    return pat;
}

Circuit benchmark_preparation(const BenchmarkSetup& setup) {
    return graph_state_circuit(Graph::from_lattice(chain(setup)));
}

void apply_idle_channel(DenseMatrix& rho, const NoiseModel& noise, double t_us) {
    const size_t n = static_cast<size_t>(std::countr_zero(static_cast<uint64_t>(rho.rows())));
    if (noise.channel == ChannelModel::kTwirled) {
        TwirlProbabilities p = twirl_probabilities(noise.t1_us, noise.t2_us, t_us);
        for (size_t q = 0; q < n; q++) {
            apply_pauli_channel(rho, q, p);
        }
        return;
    }
    const double gamma = -std::expm1(-t_us / noise.t1_us);
    const double coherence = std::exp(-t_us / pure_dephasing_time(noise.t1_us, noise.t2_us));
    for (size_t q = 0; q < n; q++) {
        apply_damping_dephasing(rho, q, gamma, coherence);
    }
}

std::vector<ExactPoint> run_exact(const BenchmarkSetup& setup, const NoiseModel& noise) {
    setup.validate();
    noise.validate();
    const size_t n = setup.num_qubits;
    if (n > kMaxExactBenchQubits) {
        throw ResourceLimit("exact engine supports at most " + std::to_string(kMaxExactBenchQubits) + " qubits");
    }
    const Circuit prep = benchmark_preparation(setup);
    const ErrorPatterns pat = error_patterns(setup, noise.variant);

    StateVector psi = simulate(prep, zero_state(n)).state;
    if (noise.variant == BenchVariant::kXZX) {
        for (size_t q = 0; q < n; q++) {
            apply_h(psi, q);
        }
    }
    const DenseMatrix rho0 = psi * psi.adjoint();

    std::vector<ExactPoint> out;
    for (double t : noise.delays_us) {
        DenseMatrix rho = rho0;
        apply_idle_channel(rho, noise, t);
        if (noise.variant == BenchVariant::kXZX) {
            apply_h_layer(rho, n);
        }
        apply_unprepare(rho, prep);
        ExactPoint point;
        point.t_us = t;
        point.distribution.resize(size_t{1} << n);
        for (size_t b = 0; b < point.distribution.size(); b++) {
            point.distribution[b] = rho(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)).real();
        }
        apply_readout(point.distribution, n, noise.readout_p);
        point.rates = rates_from_distribution(point.distribution, pat);
        out.push_back(std::move(point));
    }
    return out;
}

SyndromeCounts run_sampled(const BenchmarkSetup& setup, const NoiseModel& noise, uint64_t shots, uint64_t seed,
                           uint64_t realization, unsigned threads) {
    setup.validate();
    noise.validate();
    const size_t n = setup.num_qubits;
    const ErrorPatterns pat = error_patterns(setup, noise.variant);

    SyndromeCounts result;
    result.seed = seed;
    result.realization = realization;
    result.shots = shots;
    result.delays_us = noise.delays_us;
    result.counts.resize(noise.delays_us.size());

    parallel_for(noise.delays_us.size(), threads, [&](size_t d) {
        const TwirlProbabilities p = twirl_probabilities(noise.t1_us, noise.t2_us, noise.delays_us[d]);
        const double cx = p.p_x;
        const double cy = cx + p.p_y;
        const double cz = cy + p.p_z;
        std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                          static_cast<uint32_t>(realization), static_cast<uint32_t>(realization >> 32),
                          static_cast<uint32_t>(d)};
        std::mt19937_64 rng(seq);
        auto& tally = result.counts[d];
        for (uint64_t s = 0; s < shots; s++) {
            uint64_t frame = 0;
            for (size_t q = 0; q < n; q++) {
                double u = uniform53(rng);
                if (u < cx) {
                    frame ^= pat.flips[q][0];
                } else if (u < cy) {
                    frame ^= pat.flips[q][1];
                } else if (u < cz) {
                    frame ^= pat.flips[q][2];
                }
            }
            if (noise.readout_p > 0) {
                for (size_t q = 0; q < n; q++) {
                    if (uniform53(rng) < noise.readout_p) {
                        frame ^= uint64_t{1} << q;
                    }
                }
            }
            tally[frame]++;
        }
    });
    return result;
}

PatternRates rates_from_counts(const std::map<uint64_t, uint64_t>& counts, uint64_t shots,
                               const ErrorPatterns& patterns) {
    if (shots == 0) {
        throw InvalidInput("no shots recorded");
    }
    PatternRates r;
    const double inv = 1.0 / static_cast<double>(shots);
    for (const auto& [bits, c] : counts) {
        double f = static_cast<double>(c) * inv;
        if (bits == patterns.x) {
            r.p_x += f;
        } else if (bits == patterns.y) {
            r.p_y += f;
        } else if (bits == patterns.z) {
            r.p_z += f;
        } else if (bits != 0) {
            r.p_other += f;
        }
    }
    return r;
}

RateSeries summarize(const std::vector<SyndromeCounts>& realizations, const ErrorPatterns& patterns) {
    if (realizations.empty()) {
        throw InvalidInput("no realizations to summarize");
    }
    const auto& first = realizations.front();
    for (const auto& r : realizations) {
        if (r.delays_us != first.delays_us || r.shots != first.shots) {
            throw InvalidInput("realizations disagree on delays or shot count");
        }
    }
    const double R = static_cast<double>(realizations.size());
    RateSeries series;
    for (size_t d = 0; d < first.delays_us.size(); d++) {
        std::vector<PatternRates> rs;
        for (const auto& r : realizations) {
            rs.push_back(rates_from_counts(r.counts[d], r.shots, patterns));
        }
        RatePoint pt;
        pt.t_us = first.delays_us[d];
        auto stat = [&](double PatternRates::*field, double& mean, double& se) {
            double sum = 0;
            for (const auto& x : rs) {
                sum += x.*field;
            }
            mean = sum / R;
            if (rs.size() == 1) {
                se = std::sqrt(mean * (1 - mean) / static_cast<double>(first.shots));
                return;
            }
            double ss = 0;
            for (const auto& x : rs) {
                ss += (x.*field - mean) * (x.*field - mean);
            }
            se = std::sqrt(ss / (R - 1)) / std::sqrt(R);
        };
        stat(&PatternRates::p_x, pt.rates.p_x, pt.se.p_x);
        stat(&PatternRates::p_y, pt.rates.p_y, pt.se.p_y);
        stat(&PatternRates::p_z, pt.rates.p_z, pt.se.p_z);
        stat(&PatternRates::p_other, pt.rates.p_other, pt.se.p_other);
        series.push_back(pt);
    }
    return series;
}

RateSeries summarize(const std::vector<ExactPoint>& points) {
    RateSeries series;
    for (const auto& p : points) {
        RatePoint pt;
        pt.t_us = p.t_us;
        pt.rates = p.rates;
        series.push_back(pt);
    }
    return series;
}

LineFit fit_line(const std::vector<double>& t, const std::vector<double>& p, const std::vector<double>& stderrs) {
    const size_t n = t.size();
    if (p.size() != n || (!stderrs.empty() && stderrs.size() != n)) {
        throw DimensionError("fit inputs have mismatched lengths");
    }
    if (n < 3) {
        throw InvalidInput("fit needs at least 3 delay points, got " + std::to_string(n));
    }
    bool weighted = !stderrs.empty();
    for (double s : stderrs) {
        weighted = weighted && s > 0 && std::isfinite(s);
    }
    std::vector<double> w(n, 1.0);
    if (weighted) {
        for (size_t i = 0; i < n; i++) {
            w[i] = 1.0 / (stderrs[i] * stderrs[i]);
        }
    }
    double sw = 0, st = 0, sp = 0;
    for (size_t i = 0; i < n; i++) {
        sw += w[i];
        st += w[i] * t[i];
        sp += w[i] * p[i];
    }
    const double tbar = st / sw;
    const double pbar = sp / sw;
    double stt = 0, stp = 0;
    for (size_t i = 0; i < n; i++) {
        stt += w[i] * (t[i] - tbar) * (t[i] - tbar);
        stp += w[i] * (t[i] - tbar) * (p[i] - pbar);
    }
    if (!(stt > 0)) {
        throw InvalidInput("singular fit: all delays are equal");
    }
    LineFit fit;
    fit.slope = stp / stt;
    fit.intercept = pbar - fit.slope * tbar;
    double scale = 1.0;
    if (!weighted) {
        double rss = 0;
        for (size_t i = 0; i < n; i++) {
            double r = p[i] - (fit.intercept + fit.slope * t[i]);
            rss += r * r;
        }
        scale = rss / static_cast<double>(n - 2);
    }
    const double var_slope = scale / stt;
    fit.slope_stderr = std::sqrt(var_slope);
    fit.intercept_stderr = std::sqrt(scale / sw + tbar * tbar * var_slope);
    return fit;
}

RateFit fit_error_rates(const RateSeries& series) {
    std::vector<double> t, px, py, pz, pxy, sx, sy, sz, sxy;
    for (const auto& pt : series) {
        t.push_back(pt.t_us);
        px.push_back(pt.rates.p_x);
        py.push_back(pt.rates.p_y);
        pz.push_back(pt.rates.p_z);
        pxy.push_back(pt.rates.p_x + pt.rates.p_y);
        sx.push_back(pt.se.p_x);
        sy.push_back(pt.se.p_y);
        sz.push_back(pt.se.p_z);
        sxy.push_back(std::hypot(pt.se.p_x, pt.se.p_y));
    }
    RateFit fit;
    fit.x = fit_line(t, px, sx);
    fit.y = fit_line(t, py, sy);
    fit.z = fit_line(t, pz, sz);
    fit.xy = fit_line(t, pxy, sxy);
    fit.num_points = series.size();
    fit.weighted = true;
    for (const auto& pt : series) {
        fit.weighted = fit.weighted && pt.se.p_x > 0 && pt.se.p_y > 0 && pt.se.p_z > 0;
    }
    if (fit.xy.slope > 0) {
        fit.t1_est_us = 1.0 / fit.xy.slope;
    }
    if (fit.z.slope > 0) {
        fit.t2_est_us = 1.0 / fit.z.slope;
    }
    return fit;
}

void write_rate_csv(std::ostream& out, const RateSeries& series) {
    out << "t,p_X,p_Y,p_Z,p_other,se_X,se_Y,se_Z,se_other\n";
    for (const auto& pt : series) {
        out << format_double(pt.t_us) << ',' << format_double(pt.rates.p_x) << ',' << format_double(pt.rates.p_y)
            << ',' << format_double(pt.rates.p_z) << ',' << format_double(pt.rates.p_other) << ','
            << format_double(pt.se.p_x) << ',' << format_double(pt.se.p_y) << ',' << format_double(pt.se.p_z) << ','
            << format_double(pt.se.p_other) << '\n';
    }
}

RateSeries read_rate_csv(std::istream& in) {
    static const std::vector<std::string> kHeader = {"t",    "p_X",  "p_Y",  "p_Z",     "p_other",
                                                     "se_X", "se_Y", "se_Z", "se_other"};
    auto split = [](const std::string& line) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cells.push_back(trim(cell));
        }
        return cells;
    };
    std::string line;
    size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        line_no++;
        std::string t = trim(line);
        if (!t.empty() && t[0] != '#') {
            have_header = true;
            break;
        }
    }
    if (!have_header) {
        throw InvalidInput("rate CSV is empty");
    }
    auto header = split(line);
    if (header.size() < 5 || !std::equal(header.begin(), header.begin() + 5, kHeader.begin())) {
        throw InvalidInput("rate CSV header must start with t,p_X,p_Y,p_Z,p_other");
    }
    const bool has_se = header.size() == kHeader.size() && header == kHeader;
    if (header.size() != 5 && !has_se) {
        throw InvalidInput("unrecognized rate CSV header '" + line + "'");
    }
    RateSeries series;
    while (std::getline(in, line)) {
        line_no++;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') {
            continue;
        }
        auto cells = split(line);
        if (cells.size() != header.size()) {
            throw InvalidInput("rate CSV line " + std::to_string(line_no) + " has " + std::to_string(cells.size()) +
                               " fields, expected " + std::to_string(header.size()));
        }
        std::vector<double> v;
        for (size_t i = 0; i < cells.size(); i++) {
            v.push_back(parse_double(cells[i], header[i] + " on line " + std::to_string(line_no)));
        }
        RatePoint pt;
        pt.t_us = v[0];
        pt.rates = {v[1], v[2], v[3], v[4]};
        if (has_se) {
            pt.se = {v[5], v[6], v[7], v[8]};
        }
        series.push_back(pt);
    }
    return series;
}

std::vector<double> parse_delay_grid(const std::string& text) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ':')) {
            parts.push_back(part);
        }
        if (parts.size() != 3) {
            throw InvalidInput("delay range must look like start:stop:step, got '" + text + "'");
        }
        double start = parse_double(parts[0], "delay start");
        double stop = parse_double(parts[1], "delay stop");
        double step = parse_double(parts[2], "delay step");
        if (!(step > 0) || stop < start) {
            throw InvalidInput("delay range needs step > 0 and stop >= start");
        }
        const auto count = static_cast<size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
        for (size_t k = 0; k < count; k++) {
            out.push_back(start + static_cast<double>(k) * step);
        }
        return out;
    }
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        out.push_back(parse_double(cell, "delay"));
    }
    if (out.empty()) {
        throw InvalidInput("empty delay list");
    }
    return out;
}

}  // namespace clusterqec

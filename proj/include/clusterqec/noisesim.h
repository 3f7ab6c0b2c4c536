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

#ifndef CLUSTERQEC_NOISESIM_H
#define CLUSTERQEC_NOISESIM_H

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clusterqec/dense.h"
#include "clusterqec/lattice.h"

// Cluster-state error benchmarking: prepare |cs> = U|0>, idle for t, undo U and
// read out. An error E during the idle period leaves the bit pattern of its
// syndrome with respect to the chain's cluster generators. All times in
// microseconds.

namespace clusterqec {

enum class BenchVariant {
    kZXZ,  ///< Plain cluster state.
    kXZX,  ///< Hadamard layers before and after the delay.
};

std::string variant_name(BenchVariant v);
BenchVariant parse_variant(const std::string& name);

enum class ChannelModel {
    kExact,    ///< Amplitude damping followed by pure dephasing.
    kTwirled,  ///< The Pauli twirl of the exact channel.
};

std::string channel_name(ChannelModel c);
ChannelModel parse_channel(const std::string& name);

struct NoiseModel {
    /// Use std::numeric_limits<double>::infinity() to switch a process off.
    double t1_us = 100.0;
    double t2_us = 30.0;
    double readout_p = 0.0;
    std::vector<double> delays_us;
    BenchVariant variant = BenchVariant::kZXZ;
    ChannelModel channel = ChannelModel::kExact;

    /// Throws InvalidInput unless T1, T2 > 0, T2 <= 2 T1, readout_p in [0, 1),
    /// and the delays are nonnegative and strictly increasing.
    void validate() const;
};

/// 1 / T_phi = 1 / T2 - 1 / (2 T1); infinite when the two cancel.
double pure_dephasing_time(double t1_us, double t2_us);

struct TwirlProbabilities {
    double p_x = 0;
    double p_y = 0;
    double p_z = 0;
};

/// p_x = p_y = (1 - e^{-t/T1}) / 4, p_z = (1 - e^{-t/T2}) / 2 - (1 - e^{-t/T1}) / 4.
/// Throws InvalidInput if p_z comes out negative.
TwirlProbabilities twirl_probabilities(double t1_us, double t2_us, double t_us);

struct BenchmarkSetup {
    size_t num_qubits = 5;
    Boundary boundary = Boundary::kOpen;
    size_t probe = 2;
    /// Permits an end-of-chain probe under open boundaries.
    bool allow_edge = false;

    void validate() const;
};

/// Output bitstrings (bit j = qubit j) flagging X, Y, Z on the probe qubit, and
/// the one-qubit patterns for every qubit used by the sampler.
struct ErrorPatterns {
    uint64_t x = 0;
    uint64_t y = 0;
    uint64_t z = 0;
    /// flips[q][k] for k = 0, 1, 2 meaning X, Y, Z on qubit q during the delay.
    std::vector<std::array<uint64_t, 3>> flips;
};

ErrorPatterns error_patterns(const BenchmarkSetup& setup, BenchVariant variant);

/// The state preparation circuit U: H on every qubit then CZ along the chain.
Circuit benchmark_preparation(const BenchmarkSetup& setup);

/// Probabilities of the probe patterns at one delay.
struct PatternRates {
    double p_x = 0;
    double p_y = 0;
    double p_z = 0;
    /// Everything other than all-zeros and the three probe patterns.
    double p_other = 0;
};

struct ExactPoint {
    double t_us = 0;
    /// Outcome distribution over the 2^n bitstrings.
    std::vector<double> distribution;
    PatternRates rates;
};

inline constexpr size_t kMaxExactBenchQubits = 7;

/// Density-matrix evolution of the full protocol, one entry per delay.
std::vector<ExactPoint> run_exact(const BenchmarkSetup& setup, const NoiseModel& noise);

/// Applies the idle channel of duration t to every qubit of `rho`.
void apply_idle_channel(DenseMatrix& rho, const NoiseModel& noise, double t_us);

struct SyndromeCounts {
    uint64_t seed = 0;
    uint64_t realization = 0;
    uint64_t shots = 0;
    std::vector<double> delays_us;
    /// counts[d] maps an output bitstring (bit j = qubit j) to its tally at delay d.
    std::vector<std::map<uint64_t, uint64_t>> counts;
};

inline constexpr size_t kMaxSampledQubits = 64;

/// Pauli-frame sampling with the twirled idle channel. Each (seed, realization,
/// delay index) owns its own generator, so results do not depend on threads.
SyndromeCounts run_sampled(const BenchmarkSetup& setup, const NoiseModel& noise, uint64_t shots, uint64_t seed,
                           uint64_t realization = 0, unsigned threads = 0);

PatternRates rates_from_counts(const std::map<uint64_t, uint64_t>& counts, uint64_t shots,
                               const ErrorPatterns& patterns);

/// One row of a benchmark curve: mean rates and their standard errors.
struct RatePoint {
    double t_us = 0;
    PatternRates rates;
    PatternRates se;
};

using RateSeries = std::vector<RatePoint>;

/// Mean over realizations, standard error std / sqrt(R). With a single
/// realization the binomial error sqrt(p (1 - p) / shots) is used.
RateSeries summarize(const std::vector<SyndromeCounts>& realizations, const ErrorPatterns& patterns);

/// Exact rates with zero standard errors.
RateSeries summarize(const std::vector<ExactPoint>& points);

struct LineFit {
    double slope = 0;
    double intercept = 0;
    double slope_stderr = 0;
    double intercept_stderr = 0;
};

struct RateFit {
    LineFit x;
    LineFit y;
    LineFit z;
    /// Fit of p_X + p_Y.
    LineFit xy;
    /// 1 / slope of p_X + p_Y; empty when that slope is not positive.
    std::optional<double> t1_est_us;
    /// 1 / slope of p_Z; empty when that slope is not positive.
    std::optional<double> t2_est_us;
    size_t num_points = 0;
    bool weighted = false;
};

/// Weighted least squares with weights 1 / stderr^2 when every stderr is
/// positive, ordinary least squares otherwise (including an empty list).
LineFit fit_line(const std::vector<double>& t, const std::vector<double>& p, const std::vector<double>& stderrs);

RateFit fit_error_rates(const RateSeries& series);

/// CSV with header t,p_X,p_Y,p_Z,p_other,se_X,se_Y,se_Z,se_other.
void write_rate_csv(std::ostream& out, const RateSeries& series);
/// Accepts the 9-column header or the first 5 columns. Lines starting with # are skipped.
RateSeries read_rate_csv(std::istream& in);

/// Parses "start:stop:step" (inclusive stop) or a comma-separated list.
std::vector<double> parse_delay_grid(const std::string& text);

}  // namespace clusterqec

#endif

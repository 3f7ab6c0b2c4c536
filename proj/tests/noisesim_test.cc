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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "clusterqec/errors.h"
#include "verify/oracles.h"

namespace clusterqec {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

NoiseModel model(double t1, double t2, double readout, std::vector<double> delays, BenchVariant v, ChannelModel c) {
    NoiseModel m;
    m.t1_us = t1;
    m.t2_us = t2;
    m.readout_p = readout;
    m.delays_us = std::move(delays);
    m.variant = v;
    m.channel = c;
    return m;
}

TEST(NoiseSimTest, TwirlProbabilitiesLimits) {
    auto zero = twirl_probabilities(100, 30, 0);
    EXPECT_DOUBLE_EQ(zero.p_x + zero.p_y + zero.p_z, 0.0);
    auto late = twirl_probabilities(100, 30, 1e6);
    EXPECT_NEAR(late.p_x, 0.25, 1e-12);
    EXPECT_NEAR(late.p_y, 0.25, 1e-12);
    EXPECT_NEAR(late.p_z, 0.25, 1e-12);
    auto deph = twirl_probabilities(kInf, 30, 10);
    EXPECT_EQ(deph.p_x, 0.0);
    EXPECT_NEAR(deph.p_z, 0.5 * (1 - std::exp(-10.0 / 30)), 1e-15);
    EXPECT_THROW(twirl_probabilities(10, 30, 5), InvalidInput);
}

TEST(NoiseSimTest, PureDephasingTime) {
    EXPECT_NEAR(pure_dephasing_time(100, 30), 1 / (1 / 30.0 - 1 / 200.0), 1e-12);
    EXPECT_EQ(pure_dephasing_time(100, 200), kInf);
}

TEST(NoiseSimTest, ValidationRejectsBadModels) {
    auto ok = model(100, 30, 0.01, {0, 1, 2}, BenchVariant::kZXZ, ChannelModel::kExact);
    EXPECT_NO_THROW(ok.validate());
    auto bad = ok;
    bad.t2_us = 250;
    EXPECT_THROW(bad.validate(), InvalidInput);
    bad = ok;
    bad.delays_us = {0, 2, 1};
    EXPECT_THROW(bad.validate(), InvalidInput);
    bad = ok;
    bad.readout_p = 1.0;
    EXPECT_THROW(bad.validate(), InvalidInput);
    BenchmarkSetup edge;
    edge.probe = 0;
    EXPECT_THROW(edge.validate(), InvalidInput);
    edge.allow_edge = true;
    EXPECT_NO_THROW(edge.validate());
}

TEST(NoiseSimTest, PatternsOnOpenChain) {
    BenchmarkSetup setup;
    auto zxz = error_patterns(setup, BenchVariant::kZXZ);
    EXPECT_EQ(zxz.z, uint64_t{1} << 2);
    EXPECT_EQ(zxz.x, (uint64_t{1} << 1) | (uint64_t{1} << 3));
    EXPECT_EQ(zxz.y, zxz.x | zxz.z);
    auto xzx = error_patterns(setup, BenchVariant::kXZX);
    EXPECT_EQ(xzx.x, zxz.z);
    EXPECT_EQ(xzx.z, zxz.x);
}

TEST(NoiseSimTest, ExactEngineMatchesKrausTrajectories) {
    BenchmarkSetup setup;
    for (auto v : {BenchVariant::kZXZ, BenchVariant::kXZX}) {
        auto noise = model(100, 30, 0.02, {0, 7, 40}, v, ChannelModel::kExact);
        auto points = run_exact(setup, noise);
        for (const auto& pt : points) {
            auto ref = oracle::kraus_trajectory_distribution(setup, noise, pt.t_us);
            ASSERT_EQ(ref.size(), pt.distribution.size());
            for (size_t i = 0; i < ref.size(); i++) {
                EXPECT_NEAR(pt.distribution[i], ref[i], 1e-12);
            }
        }
    }
}

TEST(NoiseSimTest, TwirledEngineMatchesPauliSum) {
    BenchmarkSetup setup;
    setup.num_qubits = 4;
    setup.probe = 1;
    for (auto v : {BenchVariant::kZXZ, BenchVariant::kXZX}) {
        auto noise = model(80, 50, 0.03, {0, 12.5}, v, ChannelModel::kTwirled);
        for (const auto& pt : run_exact(setup, noise)) {
            auto ref = oracle::twirl_sum_distribution(setup, noise, pt.t_us);
            for (size_t i = 0; i < ref.size(); i++) {
                EXPECT_NEAR(pt.distribution[i], ref[i], 1e-12);
            }
        }
    }
}

TEST(NoiseSimTest, PureDephasingClosedForm) {
    BenchmarkSetup setup;
    auto noise = model(kInf, 30, 0, {0, 5, 15, 60}, BenchVariant::kZXZ, ChannelModel::kExact);
    for (const auto& pt : run_exact(setup, noise)) {
        const double p = 0.5 * (1 - std::exp(-pt.t_us / 30));
        // Z errors flip only their own syndrome bit, so X and Y patterns need Z pairs and triples.
        EXPECT_NEAR(pt.rates.p_z, p * std::pow(1 - p, 4), 1e-12);
        EXPECT_NEAR(pt.rates.p_x, p * p * std::pow(1 - p, 3), 1e-12);
        EXPECT_NEAR(pt.rates.p_y, p * p * p * (1 - p) * (1 - p), 1e-12);
    }
}

TEST(NoiseSimTest, NoiselessRunIsTrivial) {
    BenchmarkSetup setup;
    auto noise = model(kInf, kInf, 0, {0, 100}, BenchVariant::kXZX, ChannelModel::kExact);
    for (const auto& pt : run_exact(setup, noise)) {
        EXPECT_NEAR(pt.distribution[0], 1.0, 1e-12);
    }
}

TEST(NoiseSimTest, SamplerIsDeterministicAcrossThreads) {
    BenchmarkSetup setup;
    auto noise = model(100, 30, 0.02, {0, 10, 20, 30}, BenchVariant::kZXZ, ChannelModel::kTwirled);
    auto a = run_sampled(setup, noise, 5000, 42, 1, 1);
    auto b = run_sampled(setup, noise, 5000, 42, 1, 4);
    auto c = run_sampled(setup, noise, 5000, 42, 2, 1);
    EXPECT_EQ(a.counts, b.counts);
    EXPECT_NE(a.counts, c.counts);
}

TEST(NoiseSimTest, SamplerAgreesWithExactTwirled) {
    BenchmarkSetup setup;
    auto noise = model(100, 30, 0.02, {0, 10, 25}, BenchVariant::kZXZ, ChannelModel::kTwirled);
    const uint64_t shots = 200000;
    auto counts = run_sampled(setup, noise, shots, 9);
    auto exact = run_exact(setup, noise);
    for (size_t d = 0; d < exact.size(); d++) {
        for (const auto& [outcome, n] : counts.counts[d]) {
            const double p = exact[d].distribution[outcome];
            const double freq = double(n) / shots;
            const double sigma = std::sqrt(std::max(p * (1 - p), 1e-12) / shots);
            EXPECT_LT(std::abs(freq - p), 6 * sigma + 1e-9) << "delay " << d << " outcome " << outcome;
        }
    }
}

TEST(NoiseSimTest, SummarizeUsesSpreadAcrossRealizations) {
    BenchmarkSetup setup;
    auto noise = model(100, 30, 0, {5}, BenchVariant::kZXZ, ChannelModel::kTwirled);
    auto patterns = error_patterns(setup, noise.variant);
    std::vector<SyndromeCounts> runs;
    for (uint64_t r = 0; r < 4; r++) {
        runs.push_back(run_sampled(setup, noise, 1000, 3, r));
    }
    auto series = summarize(runs, patterns);
    ASSERT_EQ(series.size(), 1u);
    std::vector<double> zs;
    for (const auto& run : runs) {
        zs.push_back(rates_from_counts(run.counts[0], run.shots, patterns).p_z);
    }
    double mean = 0;
    for (double z : zs) {
        mean += z / 4;
    }
    double var = 0;
    for (double z : zs) {
        var += (z - mean) * (z - mean) / 3;
    }
    EXPECT_NEAR(series[0].rates.p_z, mean, 1e-15);
    EXPECT_NEAR(series[0].se.p_z, std::sqrt(var / 4), 1e-15);
}

TEST(NoiseSimTest, LineFitRecoversExactLine) {
    std::vector<double> t = {0, 1, 2, 3, 4, 5};
    std::vector<double> p;
    for (double x : t) {
        p.push_back(0.01 + 0.002 * x);
    }
    auto ols = fit_line(t, p, {});
    EXPECT_NEAR(ols.slope, 0.002, 1e-15);
    EXPECT_NEAR(ols.intercept, 0.01, 1e-15);
    EXPECT_NEAR(ols.slope_stderr, 0.0, 1e-12);
    auto wls = fit_line(t, p, std::vector<double>(6, 0.001));
    EXPECT_NEAR(wls.slope, 0.002, 1e-15);
    EXPECT_THROW(fit_line({1, 1, 1}, {0, 1, 2}, {}), InvalidInput);
    EXPECT_THROW(fit_line({0, 1}, {0, 1}, {}), InvalidInput);
    EXPECT_THROW(fit_line({0, 1, 2}, {0, 1, 2}, {1, 1}), DimensionError);
}

TEST(NoiseSimTest, FitEstimatesTimesFromSlopes) {
    RateSeries series;
    for (double t : {0.0, 1.0, 2.0, 3.0}) {
        RatePoint pt;
        pt.t_us = t;
        pt.rates.p_x = 0.001 * t;
        pt.rates.p_y = 0.001 * t;
        pt.rates.p_z = 0.01 * t;
        series.push_back(pt);
    }
    auto fit = fit_error_rates(series);
    ASSERT_TRUE(fit.t1_est_us.has_value());
    ASSERT_TRUE(fit.t2_est_us.has_value());
    EXPECT_NEAR(*fit.t1_est_us, 500.0, 1e-9);
    EXPECT_NEAR(*fit.t2_est_us, 100.0, 1e-9);
    for (auto& pt : series) {
        pt.rates.p_z = 0.05 - 0.01 * pt.t_us;
    }
    EXPECT_FALSE(fit_error_rates(series).t2_est_us.has_value());
}

TEST(NoiseSimTest, CsvRoundTripIsExact) {
    BenchmarkSetup setup;
    auto noise = model(100, 30, 0.02, {0, 0.1, 1.0 / 3}, BenchVariant::kZXZ, ChannelModel::kExact);
    auto series = summarize(run_exact(setup, noise));
    std::stringstream ss;
    ss << "# leading comment\n";
    write_rate_csv(ss, series);
    auto back = read_rate_csv(ss);
    ASSERT_EQ(back.size(), series.size());
    for (size_t i = 0; i < series.size(); i++) {
        EXPECT_EQ(back[i].t_us, series[i].t_us);
        EXPECT_EQ(back[i].rates.p_z, series[i].rates.p_z);
        EXPECT_EQ(back[i].rates.p_other, series[i].rates.p_other);
    }
    std::istringstream five("t,p_X,p_Y,p_Z,p_other\n0,0,0,0,0\n1,0.1,0.1,0.1,0\n");
    EXPECT_EQ(read_rate_csv(five).size(), 2u);
    std::istringstream bad("t,p_X,p_Y\n");
    EXPECT_THROW(read_rate_csv(bad), InvalidInput);
    std::istringstream ragged("t,p_X,p_Y,p_Z,p_other\n0,0,0\n");
    EXPECT_THROW(read_rate_csv(ragged), InvalidInput);
}

TEST(NoiseSimTest, DelayGridParsing) {
    auto grid = parse_delay_grid("0:400:20");
    ASSERT_EQ(grid.size(), 21u);
    EXPECT_DOUBLE_EQ(grid.back(), 400.0);
    EXPECT_EQ(parse_delay_grid("0, 1.5,3"), (std::vector<double>{0, 1.5, 3}));
    EXPECT_THROW(parse_delay_grid("0:1:0"), InvalidInput);
    EXPECT_THROW(parse_delay_grid("a,b"), InvalidInput);
}

}  // namespace
}  // namespace clusterqec

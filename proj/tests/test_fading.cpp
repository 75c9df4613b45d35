// a2gchan - UAV air-to-ground channel models and Manhattan-grid LoS simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "a2g/fading.hpp"

#include "a2g/stats.hpp"

#include "support.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <limits>

using namespace a2g;
using namespace a2g::fading;

TEST_CASE("shadow sigma: tabulated height dependence")
{
    CHECK(shadow_sigma_db(pathloss::Scenario::UMa, pathloss::Condition::LoS, 100.0) ==
          doctest::Approx(2.398190192041484).epsilon(1e-12));
    CHECK(shadow_sigma_db(pathloss::Scenario::UMa, pathloss::Condition::NLoS, 100.0) == 6.0);
    CHECK(shadow_sigma_db(pathloss::Scenario::UMi, pathloss::Condition::LoS, 200.0) == 2.0);
    CHECK(shadow_sigma_db(pathloss::Scenario::UMi, pathloss::Condition::NLoS, 50.0) == 8.0);
    CHECK(shadow_sigma_db(pathloss::Scenario::RMa, pathloss::Condition::LoS, 100.0) ==
          doctest::Approx(4.2 * std::exp(-0.46)).epsilon(1e-12));
    CHECK_THROWS_AS(shadow_sigma_db(pathloss::Scenario::UMa, pathloss::Condition::LoS, 500.0),
                    std::invalid_argument);
}

TEST_CASE("shadow rows: range midpoints and decorrelation defaults")
{
    bool checked_range = false;
    bool checked_default = false;
    for (const auto& row : tables::shadow_rows())
    {
        if (row.study == "Urban-meas") // 2 - 4 dB, 9.5 - 12.9 m
        {
            CHECK(fading::shadow_row_sigma_db(row, 100.0) == doctest::Approx(3.0));
            CHECK(fading::shadow_row_decorr_m(row) == doctest::Approx(11.2));
            checked_range = true;
        }
        if (row.study == "TR36777") // no reported decorrelation distance
        {
            CHECK(fading::shadow_row_decorr_m(row) == fading::kDefaultDecorrM);
            checked_default = true;
        }
    }
    CHECK(checked_range);
    CHECK(checked_default);
}

TEST_CASE("shadow trace: stationary std and zero-sigma degenerate")
{
    const ShadowConfig cfg{4.0, 20.0, 1.0};
    const auto trace = shadow_trace(cfg, 1000000, 8);
    CHECK(std::sqrt(stats::variance(trace)) == doctest::Approx(4.0).epsilon(0.01));

    const auto zeros = shadow_trace({0.0, 20.0, 1.0}, 1000, 8);
    for (double v : zeros)
        CHECK(v == 0.0);

    CHECK_THROWS_AS(shadow_trace({4.0, 0.0, 1.0}, 100, 1), std::invalid_argument);
    CHECK_THROWS_AS(shadow_trace({4.0, 20.0, 1.0}, 1, 1), std::invalid_argument);
}

TEST_CASE("shadow trace: autocorrelation decays to 1/e at the decorrelation lag")
{
    const double d_decorr = 25.0;
    const double step = 1.0;
    const std::size_t lag = 25;
    const std::size_t n = 4000;

    // Ensemble estimate over 100 independent traces.
    double num = 0.0;
    double den = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed)
    {
        const auto trace = shadow_trace({6.0, d_decorr, step}, n, seed);
        for (std::size_t k = 0; k + lag < n; ++k)
        {
            num += trace[k] * trace[k + lag];
            den += trace[k] * trace[k];
        }
    }
    CHECK(num / den == doctest::Approx(std::exp(-1.0)).epsilon(0.05 / std::exp(-1.0)));
}

TEST_CASE("shadow trace: marginal is gaussian (KS at 1%)")
{
    const auto trace = shadow_trace({3.0, 10.0, 1.0}, 100000, 17);
    // Thin to roughly independent samples before the KS test.
    std::vector<double> thinned;
    for (std::size_t k = 0; k < trace.size(); k += 50)
        thinned.push_back(trace[k]);
    CHECK(test::ks_statistic(thinned, [](double x) { return test::normal_cdf(x, 3.0); }) <
          test::ks_critical(thinned.size(), 0.01));
}

TEST_CASE("shadow trace: deterministic per seed")
{
    const auto a = shadow_trace({5.0, 10.0, 0.5}, 5000, 99);
    const auto b = shadow_trace({5.0, 10.0, 0.5}, 5000, 99);
    for (std::size_t k = 0; k < a.size(); ++k)
        CHECK(a[k] == b[k]);
}

TEST_CASE("small-scale gains: unit mean and K recovery")
{
    const std::size_t n = 1000000;
    const double k_db = 10.0;
    const auto gains = small_scale_gain(RicianConfig::rician(k_db), n, 3);

    for (std::size_t k = 0; k < n; k += 997)
        REQUIRE(gains[k] >= 0.0);

    const double mean = stats::mean(gains);
    CHECK(mean == doctest::Approx(1.0).epsilon(0.005));

    // Moment-based estimator: v = Var/E^2 = (2K+1)/(K+1)^2.
    const double v = stats::variance(gains) / (mean * mean);
    const double k_est = (std::sqrt(1.0 - v) + (1.0 - v)) / v;
    const double k_est_db = 10.0 * std::log10(k_est);
    CHECK(std::abs(k_est_db - k_db) < 0.5);
}

TEST_CASE("small-scale gains: rayleigh tag gives unit-mean exponential power")
{
    const std::size_t n = 200000;
    const auto gains = small_scale_gain(RicianConfig::rayleigh_tag(), n, 5);
    CHECK(stats::mean(gains) == doctest::Approx(1.0).epsilon(0.01));
    CHECK(test::ks_statistic(gains, [](double g) {
              return g <= 0.0 ? 0.0 : 1.0 - std::exp(-g);
          }) < test::ks_critical(n, 0.01));
}

TEST_CASE("small-scale gains: infinite K collapses to the direct path")
{
    const auto gains =
        small_scale_gain(RicianConfig::rician(std::numeric_limits<double>::infinity()), 100, 1);
    for (double g : gains)
        CHECK(g == 1.0);

    // Very large finite K approaches 1 as well.
    const auto near = small_scale_gain(RicianConfig::rician(60.0), 1000, 2);
    for (double g : near)
        CHECK(g == doctest::Approx(1.0).epsilon(0.1));
}

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

#include "a2g/pathloss.hpp"

#include "a2g/csv.hpp"
#include "a2g/geometry.hpp"
#include "a2g/tables.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

using namespace a2g;
using namespace a2g::pathloss;

TEST_CASE("fspl: pinned values and the doubling law")
{
    CHECK(fspl_db(100.0, 5.9e9) == doctest::Approx(87.86482345472626).epsilon(1e-12));
    CHECK(fspl_db(1.0, 2.4e9) == doctest::Approx(40.05200805611548).epsilon(1e-12));
    CHECK(fspl_db(200.0, 5.9e9) - fspl_db(100.0, 5.9e9) ==
          doctest::Approx(20.0 * std::log10(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(fspl_db(0.0, 1e9), std::invalid_argument);
    CHECK_THROWS_AS(fspl_db(10.0, 0.0), std::invalid_argument);
}

TEST_CASE("3gpp path loss: uma los pin and nlos dominance where guarded")
{
    CHECK(gpp_db(Scenario::UMa, Condition::LoS, 100.0, 100.0, 2.0) ==
          doctest::Approx(78.02059991327963).epsilon(1e-12));

    for (double d : {50.0, 200.0, 1000.0, 5000.0})
    {
        for (double h : {30.0, 100.0, 250.0})
        {
            CHECK(gpp_db(Scenario::RMa, Condition::NLoS, d, h, 2.0) >=
                  gpp_db(Scenario::RMa, Condition::LoS, d, h, 2.0));
            CHECK(gpp_db(Scenario::UMi, Condition::NLoS, d, h, 2.0) >=
                  gpp_db(Scenario::UMi, Condition::LoS, d, h, 2.0));
        }
    }
    CHECK_THROWS_AS(scenario_from_string("nosuch"), std::invalid_argument);
    CHECK_THROWS_AS(condition_from_string("nosuch"), std::invalid_argument);
}

TEST_CASE("every non-oscillatory model is non-decreasing on a 1 m grid to 10 km")
{
    std::vector<std::pair<const char*, std::function<double(double)>>> models;
    models.emplace_back("fspl", [](double d) { return fspl_db(d, 2.4e9); });
    models.emplace_back("log-distance",
                        [](double d) { return log_distance_db({2.2, 1.0, 2.4e9, 0.0}, d); });
    models.emplace_back("ab", [](double d) { return ab_db({61.4, 2.0}, d); });
    for (auto scenario : {Scenario::RMa, Scenario::UMa, Scenario::UMi})
        for (auto condition : {Condition::LoS, Condition::NLoS})
            models.emplace_back("3gpp", [scenario, condition](double d) {
                return gpp_db(scenario, condition, d, 100.0, 2.4);
            });

    for (const auto& [name, model] : models)
    {
        CAPTURE(name);
        double prev = -1e9;
        int violations = 0;
        for (double d = 1.0; d <= 10000.0; d += 1.0)
        {
            const double pl = model(d);
            violations += pl < prev ? 1 : 0;
            prev = pl;
        }
        CHECK(violations == 0);
    }
}

TEST_CASE("log-distance: anchor and excess slope")
{
    const LogDistanceParams open_field{2.01, 1.0, 5.0e9, 0.0};
    CHECK(log_distance_db(open_field, 1.0) == doctest::Approx(fspl_db(1.0, 5.0e9)));
    CHECK(log_distance_db(open_field, 10.0) ==
          doctest::Approx(fspl_db(1.0, 5.0e9) + 20.1).epsilon(1e-12));

    // n = 2 with a 1 m anchor reproduces free space exactly.
    const LogDistanceParams freespace{2.0, 1.0, 2.4e9, 0.0};
    for (double d : {1.0, 10.0, 123.0, 4000.0})
        CHECK(log_distance_db(freespace, d) == doctest::Approx(fspl_db(d, 2.4e9)).epsilon(1e-12));

    CHECK_THROWS_AS(log_distance_db(open_field, 0.5), std::invalid_argument);
}

TEST_CASE("ab model: tabulated mmWave fits")
{
    CHECK(ab_db({61.4, 2.0}, 100.0) == doctest::Approx(101.4).epsilon(1e-12));
    CHECK(ab_db({61.4, 2.0}, 1.0) == doctest::Approx(61.4).epsilon(1e-12));
    CHECK(ab_db({88.76, 2.22}, 100.0) == doctest::Approx(133.16).epsilon(1e-12));
}

TEST_CASE("two-ray: first maximum, null, and far-field slope")
{
    const double f = 1e9;
    const double lambda = kSpeedOfLight / f;
    const double h1 = 30.0;
    const double h2 = 1.5;

    // |2 sin| = 2 at the first maximum: 6.02 dB under free space.
    const double r_max = 2.0 * kPi * h1 * h2 / (lambda * kPi / 2.0);
    CHECK(two_ray_db(r_max, h1, h2, f) ==
          doctest::Approx(fspl_db(r_max, f) - 20.0 * std::log10(2.0)).epsilon(1e-9));

    // Perfect cancellation at phase pi.
    const double r_null = 2.0 * kPi * h1 * h2 / (lambda * kPi);
    CHECK(std::isinf(two_ray_db(r_null, h1, h2, f)));

    // Large-r asymptote: 40log10(r) - 20log10(h1 h2), within 0.1 dB.
    const double r_far = 1e6 * h1 * h2 / lambda;
    const double asymptote = 40.0 * std::log10(r_far) - 20.0 * std::log10(h1 * h2);
    CHECK(std::abs(two_ray_db(r_far, h1, h2, f) - asymptote) < 0.1);

    // 40 dB per decade in the asymptotic regime.
    const double slope = two_ray_db(10.0 * r_far, h1, h2, f) - two_ray_db(r_far, h1, h2, f);
    CHECK(std::abs(slope - 40.0) < 0.2);
}

TEST_CASE("combined loss: convex mixture in dB")
{
    CHECK(combined_db(1.0, 80.0, 100.0) == 80.0);
    CHECK(combined_db(0.0, 80.0, 100.0) == 100.0);
    CHECK(combined_db(0.5, 80.0, 100.0) == doctest::Approx(90.0));
    for (double p : {0.1, 0.25, 0.5, 0.9})
    {
        const double v = combined_db(p, 80.0, 100.0);
        CHECK(v >= 80.0);
        CHECK(v <= 100.0);
        const double lin = combined_expected_power_db(p, 80.0, 100.0);
        CHECK(lin >= 80.0);
        CHECK(lin <= 100.0);
    }
    CHECK_THROWS_AS(combined_db(1.5, 80.0, 100.0), std::invalid_argument);
}

TEST_CASE("embedded tables reproduce every cited constant bit-exactly")
{
    auto find_ab = [](const std::string& study, const std::string& env, double f,
                      const std::string& cond) -> const tables::AbRow& {
        for (const auto& row : tables::ab_rows())
            if (row.study == study && row.environment == env && row.freq_ghz == f &&
                row.condition == cond)
                return row;
        throw std::runtime_error("ab row not found");
    };

    const auto& dense28 = find_ab("Akdeniz2014", "dense-urban", 28.0, "los");
    CHECK(dense28.a_db == 61.4);
    CHECK(dense28.b == 2.0);
    const auto& nyc73 = find_ab("G2A-mmWave", "high-rise-nyc", 73.0, "nlos");
    CHECK(nyc73.a_db == 88.76);
    CHECK(nyc73.b == 2.22);
    // Both variants of the conflicting 73 GHz NLoS row ship; table is default.
    const auto& table_row = find_ab("Akdeniz2014", "dense-urban", 73.0, "nlos");
    CHECK(table_row.a_db == 86.6);
    CHECK(table_row.b == 2.45);
    const auto& text_row = find_ab("Akdeniz2014-text", "dense-urban", 73.0, "nlos");
    CHECK(text_row.a_db == 82.7);
    CHECK(text_row.b == 2.69);

    bool found_u2g = false;
    for (const auto& row : tables::log_distance_rows())
        if (row.link == "U2G")
        {
            CHECK(row.pl_d0_db == 46.4);
            CHECK(row.n_min == 2.01);
            found_u2g = true;
        }
    CHECK(found_u2g);
}

TEST_CASE("csv helpers round-trip numbers")
{
    for (double v : {0.0034, -2.397e-5, 86.6, 1350.8, 0.5, 1e-300})
        CHECK(csv::parse_double(csv::format_double(v)) == v);
    CHECK_THROWS_AS(csv::parse_double("12x"), std::invalid_argument);
    const auto rows = csv::parse("a,b\n# comment\n1,2\r\n\n3,4\n");
    REQUIRE(rows.size() == 3);
    CHECK(rows[1][1] == "2");
}

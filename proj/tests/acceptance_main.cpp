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
//
// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "a2g/city.hpp"
#include "a2g/environment.hpp"
#include "a2g/fading.hpp"
#include "a2g/localization.hpp"
#include "a2g/mc.hpp"
#include "a2g/pathloss.hpp"
#include "a2g/plos.hpp"
#include "a2g/rng.hpp"
#include "a2g/stats.hpp"
#include "a2g/tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

namespace {

using namespace a2g;

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail)
{
    std::printf("CRITERION %d %s - %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass)
        ++g_failures;
}

bool near(double value, double expected, double tol)
{
    return std::abs(value - expected) <= tol;
}

// 1. Every constant cited from the embedded coefficient tables round-trips
//    bit-exactly against its source.
void criterion_1()
{
    bool ok = true;
    std::string detail = "table fidelity";

    auto expect = [&](bool cond, const char* what) {
        if (!cond)
        {
            ok = false;
            detail += std::string("; mismatch: ") + what;
        }
    };

    // Built-up parameters.
    const auto& envs = tables::environment_rows();
    expect(envs.size() == 4, "environment count");
    expect(envs[0].name == "suburban" && envs[0].alpha == 0.1 && envs[0].beta_per_km2 == 750.0 &&
               envs[0].gamma_m == 8.0,
           "suburban row");
    expect(envs[1].name == "urban" && envs[1].alpha == 0.3 && envs[1].beta_per_km2 == 500.0 &&
               envs[1].gamma_m == 15.0,
           "urban row");
    expect(envs[2].name == "dense-urban" && envs[2].alpha == 0.5 &&
               envs[2].beta_per_km2 == 300.0 && envs[2].gamma_m == 20.0,
           "dense-urban row");
    expect(envs[3].name == "high-rise" && envs[3].alpha == 0.5 && envs[3].beta_per_km2 == 300.0 &&
               envs[3].gamma_m == 50.0,
           "high-rise row");

    // Cubic S-curve coefficients.
    const auto& urban_row = tables::scurve_for("urban");
    expect(urban_row.a == -2.397e-5 && urban_row.b == 0.0034 && urban_row.c == -0.1985 &&
               urban_row.d == 3.7876,
           "scurve urban");
    const auto& sub_row = tables::scurve_for("suburban");
    expect(sub_row.a == -2.791e-5 && sub_row.b == 0.004 && sub_row.c == -0.2193 &&
               sub_row.d == 2.2839,
           "scurve suburban");
    const auto& dense_row = tables::scurve_for("dense-urban");
    expect(dense_row.a == -1.984e-5 && dense_row.b == 0.0026 && dense_row.c == -0.1583 &&
               dense_row.d == 4.0667,
           "scurve dense-urban");
    const auto& hr_row = tables::scurve_for("high-rise");
    expect(hr_row.a == -1.130e-5 && hr_row.b == 0.000947 && hr_row.c == -0.0596 &&
               hr_row.d == 3.5939,
           "scurve high-rise");

    // Distance/height LoS parameters at h = 100 m.
    const auto uma = plos::gpp_params(plos::GppScenario::UMa, 100.0);
    expect(uma.p1 == 4800.0 && uma.d1 == 220.0, "uma p1/d1 at 100 m");
    const auto rma = plos::gpp_params(plos::GppScenario::RMa, 100.0);
    expect(near(rma.p1, 15201.0 * 2.0 - 16053.0, 1e-9) &&
               near(rma.d1, 1350.8 * 2.0 - 1602.0, 1e-9),
           "rma p1/d1 at 100 m");

    // Path-loss fits.
    auto ab = [&](const std::string& study, const std::string& env, double f,
                  const std::string& cond) -> const tables::AbRow* {
        for (const auto& row : tables::ab_rows())
            if (row.study == study && row.environment == env && row.freq_ghz == f &&
                row.condition == cond)
                return &row;
        return nullptr;
    };
    const auto* dense28 = ab("Akdeniz2014", "dense-urban", 28.0, "los");
    expect(dense28 && dense28->a_db == 61.4 && dense28->b == 2.0, "ab 28 GHz dense los");
    const auto* dense28n = ab("Akdeniz2014", "dense-urban", 28.0, "nlos");
    expect(dense28n && dense28n->a_db == 72.0 && dense28n->b == 2.92, "ab 28 GHz dense nlos");
    const auto* nyc73 = ab("G2A-mmWave", "high-rise-nyc", 73.0, "nlos");
    expect(nyc73 && nyc73->a_db == 88.76 && nyc73->b == 2.22, "ab 73 GHz nyc nlos");
    const auto* table73 = ab("Akdeniz2014", "dense-urban", 73.0, "nlos");
    expect(table73 && table73->a_db == 86.6 && table73->b == 2.45, "ab 73 GHz table default");
    const auto* text73 = ab("Akdeniz2014-text", "dense-urban", 73.0, "nlos");
    expect(text73 && text73->a_db == 82.7 && text73->b == 2.69, "ab 73 GHz text variant");

    bool u2g = false;
    for (const auto& row : tables::log_distance_rows())
        if (row.link == "U2G" && row.pl_d0_db == 46.4 && row.n_min == 2.01)
            u2g = true;
    expect(u2g, "log-distance U2G");

    // Shadow-fading rows, exercised through the lookup.
    expect(near(fading::shadow_sigma_db(pathloss::Scenario::UMa, pathloss::Condition::LoS, 100.0),
                4.64 * std::exp(-0.66), 1e-12),
           "uma los sigma");
    expect(fading::shadow_sigma_db(pathloss::Scenario::UMa, pathloss::Condition::NLoS, 100.0) ==
               6.0,
           "uma nlos sigma");
    expect(fading::shadow_sigma_db(pathloss::Scenario::UMi, pathloss::Condition::LoS, 200.0) ==
               2.0,
           "umi los floor");
    expect(fading::shadow_sigma_db(pathloss::Scenario::UMi, pathloss::Condition::NLoS, 100.0) ==
               8.0,
           "umi nlos sigma");
    expect(near(fading::shadow_sigma_db(pathloss::Scenario::RMa, pathloss::Condition::LoS, 100.0),
                4.2 * std::exp(-0.46), 1e-12),
           "rma los sigma");

    report(1, ok, detail);
}

// 2. Single-building blocking from the geometric oracle matches the Rayleigh
//    CDF within +-0.01 for 10 random (h, gamma) pairs, 1e5 draws each.
void criterion_2()
{
    rng::Xoshiro256pp gen(20260810);
    bool ok = true;
    double worst = 0.0;
    for (int pair = 0; pair < 10; ++pair)
    {
        const double gamma = gen.uniform(6.0, 45.0);
        const double h_ray = gen.uniform(0.3, 2.2) * gamma;
        const Environment env(0.3, 500.0, gamma, "acceptance");
        const auto city =
            CityRealization::generate(env, 14500.0, rng::derive_seed(7, pair));
        const double pitch = env.pitch_m();

        std::uint64_t blocked = 0;
        std::uint64_t total = 0;
        for (std::int64_t i = city.index_lo(); i <= city.index_hi() && total < 100000; ++i)
        {
            for (std::int64_t j = city.index_lo(); j <= city.index_hi() && total < 100000; ++j)
            {
                const double cx = (static_cast<double>(i) + 0.5) * pitch;
                const double cy = (static_cast<double>(j) + 0.5) * pitch;
                if (!city.inside_extent(cx - pitch / 2.0, cy) ||
                    !city.inside_extent(cx + pitch / 2.0, cy))
                    continue;
                const auto link =
                    make_link({cx + pitch / 2.0, cy, h_ray}, {cx - pitch / 2.0, cy, h_ray});
                blocked += city.los_blocked(link) ? 1 : 0;
                ++total;
            }
        }
        const double p_unblocked = 1.0 - static_cast<double>(blocked) / total;
        const double cdf = 1.0 - std::exp(-h_ray * h_ray / (2.0 * gamma * gamma));
        worst = std::max(worst, std::abs(p_unblocked - cdf));
        if (total < 100000 || std::abs(p_unblocked - cdf) > 0.01)
            ok = false;
    }
    std::ostringstream detail;
    detail << "oracle vs Rayleigh CDF, 10 pairs, worst |diff| = " << worst;
    report(2, ok, detail.str());
}

// 3. Qualitative curve reproduction in all four environments.
void criterion_3()
{
    std::vector<mc::ComparisonReport> reports;
    std::vector<std::string> names;
    bool in_range = true;
    bool region3d_first = true;
    std::string rank_detail;

    for (const auto& env : standard_environments())
    {
        mc::CampaignConfig cfg;
        cfg.env = env;
        for (double t = 10.0; t <= 85.0; t += 5.0)
            cfg.theta_grid_deg.push_back(t);
        cfg.trials_per_point = 2000;
        cfg.master_seed = 314159;
        cfg.workers = 8;
        cfg.models = {"itu", "sigmoid", "scurve3", "region3d"};
        reports.push_back(mc::compare_models(cfg));
        names.push_back(env.name());

        const auto& report = reports.back();
        for (const auto& p : report.empirical.points)
            if (!p.valid || p.value < 0.0 || p.value > 1.0)
                in_range = false;
        for (const auto& curve : report.model_curves)
            for (double v : curve.values)
                if (!(v >= 0.0 && v <= 1.0))
                    in_range = false;
        for (const auto& row : report.ranking)
        {
            if (row.model == "region3d")
            {
                rank_detail += env.name() + ":rmse=" +
                               std::to_string(row.rmse).substr(0, 6) + ",rank=" +
                               std::to_string(row.rank) + " ";
                if (row.rank != 1)
                    region3d_first = false;
            }
        }
    }

    // (b) pointwise environment ordering within the binomial CIs.
    bool ordered = true;
    for (std::size_t k = 0; k < reports[0].empirical.points.size(); ++k)
    {
        for (std::size_t e = 0; e + 1 < reports.size(); ++e)
        {
            const auto& hi = reports[e].empirical.points[k];
            const auto& lo = reports[e + 1].empirical.points[k];
            if (hi.value < lo.value && hi.ci_hi < lo.ci_lo)
                ordered = false;
        }
    }

    report(3, in_range && ordered && region3d_first,
           std::string("curves in [0,1]; env ordering within CI; region-mixture model ranks: ") +
               rank_detail);
}

// 4. Sigmoid reconstruction tracks the product model within 0.05 RMSE.
void criterion_4()
{
    bool ok = true;
    std::string detail = "sigmoid fit rmse:";
    for (const auto& env : standard_environments())
    {
        const auto& fit = plos::fitted_sigmoid_for(env);
        detail += " " + env.name() + "=" + std::to_string(fit.rmse).substr(0, 6);
        if (!fit.converged || fit.degenerate || !(fit.rmse <= 0.05))
            ok = false;
    }
    report(4, ok, detail);
}

// 5. Path-loss pins.
void criterion_5()
{
    const double fspl_pin = pathloss::fspl_db(100.0, 5.9e9);
    const double uma_pin =
        pathloss::gpp_db(pathloss::Scenario::UMa, pathloss::Condition::LoS, 100.0, 100.0, 2.0);
    const double ab_pin = pathloss::ab_db({61.4, 2.0}, 100.0);

    const double h1 = 30.0;
    const double h2 = 1.5;
    const double f = 1e9;
    const double lambda = kSpeedOfLight / f;
    const double r_far = 1e6 * h1 * h2 / lambda;
    const double slope =
        pathloss::two_ray_db(10.0 * r_far, h1, h2, f) - pathloss::two_ray_db(r_far, h1, h2, f);

    const bool ok = near(fspl_pin, 87.87, 0.01) && near(uma_pin, 78.02, 0.01) &&
                    near(ab_pin, 101.4, 0.01) && near(slope, 40.0, 0.2);
    std::ostringstream detail;
    detail << "fspl=" << fspl_pin << " uma=" << uma_pin << " ab=" << ab_pin
           << " two-ray slope=" << slope << " dB/decade";
    report(5, ok, detail.str());
}

// 6. Fading statistics.
void criterion_6()
{
    // Shadow autocorrelation at the decorrelation lag, 100-trace ensemble.
    const double d_decorr = 25.0;
    const std::size_t lag = 25;
    double num = 0.0;
    double den = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed)
    {
        const auto trace = fading::shadow_trace({6.0, d_decorr, 1.0}, 4000, seed);
        for (std::size_t k = 0; k + lag < trace.size(); ++k)
        {
            num += trace[k] * trace[k + lag];
            den += trace[k] * trace[k];
        }
    }
    const double acf = num / den;

    // Rician K recovery and unit mean at 1e6 samples.
    const auto gains = fading::small_scale_gain(fading::RicianConfig::rician(10.0), 1000000, 3);
    const double mean = stats::mean(gains);
    const double v = stats::variance(gains) / (mean * mean);
    const double k_est_db = 10.0 * std::log10((std::sqrt(1.0 - v) + (1.0 - v)) / v);

    const bool ok = near(acf, std::exp(-1.0), 0.05) && near(k_est_db, 10.0, 0.5) &&
                    near(mean, 1.0, 0.005);
    std::ostringstream detail;
    detail << "acf(lag=d_decorr)=" << acf << " (target 1/e), K_est=" << k_est_db
           << " dB (target 10), mean gain=" << mean;
    report(6, ok, detail.str());
}

// 7. Localization: noiseless recovery within one cell at 0.5 m; noisy
//    (sigma = 6 dB) median error over 100 seeds <= 10 m at 1 m resolution.
void criterion_7()
{
    const localization::RssiModel noiseless_model{-40.0, 1.0, 2.0};
    const Vec3 emitter{12.3, -7.7, 0.0};
    std::vector<localization::RssiMeasurement> noiseless;
    for (const Vec3 uav : {Vec3{-60.0, -40.0, 80.0}, Vec3{70.0, -30.0, 90.0},
                           Vec3{10.0, 80.0, 70.0}})
        noiseless.push_back(
            {uav, localization::rssi_forward_dbm(noiseless_model, emitter, uav), 3.0});
    const auto exact = localization::mle_localize(
        noiseless_model, noiseless, {-50.0, 50.0, -50.0, 50.0, 0.0}, 0.5, 8);
    const bool exact_ok = std::abs(exact.estimate.x - emitter.x) <= 0.5 &&
                          std::abs(exact.estimate.y - emitter.y) <= 0.5;

    const localization::RssiModel model{-40.0, 1.0, 3.0};
    const Vec3 truth{37.0, -22.0, 0.0};
    std::vector<Vec3> poses;
    for (int k = 0; k < 50; ++k)
    {
        if (k < 25)
        {
            const double u = static_cast<double>(k) / 24.0;
            poses.push_back({-80.0 + 160.0 * u, 50.0 * std::sin(3.0 * kPi * u), 25.0});
        }
        else
        {
            const double u = static_cast<double>(k - 25) / 24.0;
            poses.push_back({50.0 * std::sin(3.0 * kPi * u), -80.0 + 160.0 * u, 25.0});
        }
    }
    std::vector<double> errors;
    for (std::uint64_t seed = 0; seed < 100; ++seed)
    {
        rng::Xoshiro256pp gen(rng::derive_seed(777, seed));
        std::vector<localization::RssiMeasurement> measurements;
        for (const auto& uav : poses)
            measurements.push_back(
                {uav, localization::rssi_forward_dbm(model, truth, uav) + 6.0 * gen.normal(),
                 6.0});
        const auto result = localization::mle_localize(
            model, measurements, {-100.0, 100.0, -100.0, 100.0, 0.0}, 1.0, 8);
        errors.push_back(std::hypot(result.estimate.x - truth.x, result.estimate.y - truth.y));
    }
    std::sort(errors.begin(), errors.end());
    const double median = errors[errors.size() / 2];

    std::ostringstream detail;
    detail << "noiseless within one 0.5 m cell: " << (exact_ok ? "yes" : "no")
           << "; noisy median error = " << median << " m (limit 10)";
    report(7, exact_ok && median <= 10.0, detail.str());
}

// 8. Campaign reruns at worker counts {1, 4, 16} produce byte-identical CSVs
//    through the CLI.
void criterion_8()
{
    namespace fs = std::filesystem;
    const fs::path tmp =
        fs::temp_directory_path() / ("a2gchan_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(tmp);
    const fs::path config = tmp / "campaign.ini";
    std::ofstream(config) << "env = dense-urban\n"
                             "theta_grid = 10:80:10\n"
                             "trials = 400\n"
                             "h_tx = 100\n"
                             "h_rx = 1.5\n"
                             "models = itu,sigmoid,scurve3,region3d\n"
                             "seed = 424242\n";

    auto run = [&](int workers) {
        const std::string cmd = std::string(A2G_CLI_PATH) + " sim --config " + config.string() +
                                " --out-dir " + (tmp / std::to_string(workers)).string() +
                                " --workers " + std::to_string(workers) + " > /dev/null 2>&1";
        return std::system(cmd.c_str()) == 0;
    };
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };

    bool ok = run(1) && run(4) && run(16);
    if (ok)
    {
        const auto curves = slurp(tmp / "1/curves.csv");
        const auto report_text = slurp(tmp / "1/report.csv");
        ok = !curves.empty() && curves == slurp(tmp / "4/curves.csv") &&
             curves == slurp(tmp / "16/curves.csv") &&
             report_text == slurp(tmp / "4/report.csv") &&
             report_text == slurp(tmp / "16/report.csv");
    }
    fs::remove_all(tmp);
    report(8, ok, "CLI campaign byte-identical at worker counts {1, 4, 16}");
}

} // namespace

int main()
{
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (g_failures == 0)
        std::printf("ACCEPTANCE: all 8 criteria passed\n");
    else
        std::printf("ACCEPTANCE: %d criterion(s) FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}

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

#include "a2g/mc.hpp"

#include "a2g/city.hpp"
#include "a2g/csv.hpp"
#include "a2g/errors.hpp"
#include "a2g/plos.hpp"
#include "a2g/rng.hpp"
#include "a2g/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

namespace a2g::mc {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kMaxRangeM = 20000.0; // resource guard for theta -> 0

void validate(const CampaignConfig& cfg)
{
    if (cfg.theta_grid_deg.empty())
        throw std::invalid_argument("campaign: empty theta grid");
    if (!std::is_sorted(cfg.theta_grid_deg.begin(), cfg.theta_grid_deg.end()))
        throw std::invalid_argument("campaign: theta grid must be sorted ascending");
    if (cfg.trials_per_point < 100)
        throw std::invalid_argument("campaign: need at least 100 trials per point");
    if (!(cfg.h_rx_m >= 0.0))
        throw std::invalid_argument("campaign: h_rx must be >= 0");
}

struct PointGeometry
{
    double r;
    double h_tx;
};

std::optional<PointGeometry> point_geometry(const CampaignConfig& cfg, double theta_deg)
{
    if (!(theta_deg > 0.0) || theta_deg > 90.0)
        return std::nullopt;
    const double tan_theta = std::tan(deg2rad(theta_deg));
    if (cfg.placement == PlacementRule::FixedHeight)
    {
        if (!(cfg.h_tx_m > cfg.h_rx_m))
            return std::nullopt;
        const double r = theta_deg == 90.0 ? 0.0 : (cfg.h_tx_m - cfg.h_rx_m) / tan_theta;
        if (r > kMaxRangeM)
            return std::nullopt;
        return PointGeometry{r, cfg.h_tx_m};
    }
    if (!(cfg.range_m > 0.0) || cfg.range_m > kMaxRangeM)
        return std::nullopt;
    return PointGeometry{cfg.range_m, cfg.h_rx_m + cfg.range_m * tan_theta};
}

// Samples a street position in the central cell: uniform over the cell minus
// the building footprint.
void sample_street_position(const CityRealization& city, rng::Xoshiro256pp& gen, double& x,
                            double& y)
{
    const double half = city.env().pitch_m() / 2.0;
    for (int attempt = 0; attempt < 10000; ++attempt)
    {
        x = gen.uniform(-half, half);
        y = gen.uniform(-half, half);
        if (!city.footprint_at(x, y).has_value())
            return;
    }
    throw numerical_error("street sampling failed (building area ratio too close to 1?)");
}

bool geometric_trial(const CampaignConfig& cfg, const PointGeometry& geom,
                     const CityRealization* shared_city, double extent,
                     rng::Xoshiro256pp& gen)
{
    std::optional<CityRealization> fresh;
    if (!shared_city)
    {
        fresh = CityRealization::generate(cfg.env, extent, gen.next_u64());
        shared_city = &*fresh;
    }
    const CityRealization& city = *shared_city;

    for (int attempt = 0; attempt < 1000; ++attempt)
    {
        double ux = 0.0;
        double uy = 0.0;
        sample_street_position(city, gen, ux, uy);
        const double phi = gen.uniform(0.0, 2.0 * kPi);
        const Vec3 rx{ux, uy, cfg.h_rx_m};
        const Vec3 tx{ux + geom.r * std::cos(phi), uy + geom.r * std::sin(phi), geom.h_tx};
        const auto under_tx = city.footprint_at(tx.x, tx.y);
        if (under_tx && geom.h_tx <= city.height_m(static_cast<std::size_t>(*under_tx)))
            continue; // UAV inside a building: resample
        return !city.los_blocked(make_link(tx, rx));
    }
    throw numerical_error("trial placement failed after 1000 attempts");
}

bool itu_assumption_trial(const CampaignConfig& cfg, const PointGeometry& geom,
                          rng::Xoshiro256pp& gen)
{
    const int m = plos::itu_obstruction_count(cfg.env, geom.r);
    if (m < 0)
        return true;
    for (int n = 0; n <= m; ++n)
    {
        const double ladder =
            geom.h_tx - (n + 0.5) * (geom.h_tx - cfg.h_rx_m) / (m + 1);
        if (gen.rayleigh(cfg.env.gamma_m()) >= ladder)
            return false;
    }
    return true;
}

} // namespace

PlosCurve empirical_plos(const CampaignConfig& cfg)
{
    validate(cfg);
    PlosCurve curve;
    curve.points.resize(cfg.theta_grid_deg.size());

    for (std::size_t g = 0; g < cfg.theta_grid_deg.size(); ++g)
    {
        const double theta = cfg.theta_grid_deg[g];
        auto& point = curve.points[g];
        point.theta_deg = theta;
        const auto geom = point_geometry(cfg, theta);
        if (!geom)
        {
            point.value = point.ci_lo = point.ci_hi = kNan;
            point.valid = false;
            continue;
        }

        const double pitch = cfg.env.pitch_m();
        const double extent = std::max(2.0 * (geom->r + pitch / 2.0) +
                                           2.0 * cfg.extent_margin_pitches * pitch,
                                       10.0 * pitch);
        std::optional<CityRealization> shared;
        if (!cfg.fresh_city && cfg.oracle == OracleKind::Geometric)
            shared = CityRealization::generate(
                cfg.env, extent, rng::derive_seed(cfg.master_seed, g, 0xFFFFFFFFULL));

        const int trials = cfg.trials_per_point;
        const unsigned workers = std::max(1u, cfg.workers);
        std::vector<std::uint64_t> counts(workers, 0);
        std::exception_ptr error;
        std::mutex error_mutex;

        auto run_range = [&](unsigned worker, int begin, int end) {
            try
            {
                std::uint64_t local = 0;
                for (int t = begin; t < end; ++t)
                {
                    rng::Xoshiro256pp gen(rng::derive_seed(cfg.master_seed, g,
                                                           static_cast<std::uint64_t>(t)));
                    const bool los = cfg.oracle == OracleKind::Geometric
                                         ? geometric_trial(cfg, *geom,
                                                           shared ? &*shared : nullptr, extent,
                                                           gen)
                                         : itu_assumption_trial(cfg, *geom, gen);
                    local += los ? 1 : 0;
                }
                counts[worker] = local;
            }
            catch (...)
            {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        };

        if (workers == 1)
        {
            run_range(0, 0, trials);
        }
        else
        {
            std::vector<std::thread> threads;
            const int chunk = (trials + static_cast<int>(workers) - 1) / static_cast<int>(workers);
            for (unsigned w = 0; w < workers; ++w)
            {
                const int begin = std::min<int>(static_cast<int>(w) * chunk, trials);
                const int end = std::min<int>(begin + chunk, trials);
                if (begin < end)
                    threads.emplace_back(run_range, w, begin, end);
            }
            for (auto& t : threads)
                t.join();
        }
        if (error)
            std::rethrow_exception(error);

        std::uint64_t los_count = 0;
        for (auto c : counts)
            los_count += c;
        point.value = static_cast<double>(los_count) / static_cast<double>(trials);
        const auto [lo, hi] = stats::wilson_interval(los_count, static_cast<std::uint64_t>(trials));
        point.ci_lo = lo;
        point.ci_hi = hi;
        point.valid = true;
    }
    return curve;
}

double evaluate_model(const std::string& model, const CampaignConfig& cfg, double theta_deg)
{
    const auto geom = point_geometry(cfg, theta_deg);
    if (!geom)
        return kNan;
    const double r = geom->r;
    const double h_tx = geom->h_tx;
    const double h_rx = cfg.h_rx_m;

    if (model == "itu")
        return plos::itu(cfg.env, h_tx, h_rx, r).p;
    if (model == "sigmoid")
    {
        const auto& fit = plos::fitted_sigmoid_for(cfg.env);
        if (!fit.converged)
            throw numerical_error("sigmoid fit did not converge (rmse " +
                                  std::to_string(fit.rmse) + ")");
        return plos::sigmoid(fit.a, fit.b, theta_deg).p;
    }
    if (model == "fresnel")
        return plos::fresnel(cfg.env, h_tx, h_rx, r, kSpeedOfLight / (cfg.freq_ghz * 1e9)).p;
    if (model == "scurve3")
        return plos::scurve3(cfg.env.name(), theta_deg).p;
    if (model == "first-building")
        return r > 0.0 ? plos::first_building(cfg.env, r, h_tx).p : 1.0;
    if (model == "region3d")
    {
        plos::Region3dOptions opts;
        opts.user_height_m = h_rx;
        opts.max_range_m = r > 0.0 ? r : 1e-6;
        return plos::region3d_avg(cfg.env, theta_deg, opts).p;
    }
    if (model == "3gpp-rma")
        return plos::gpp(plos::GppScenario::RMa, r, h_tx).p;
    if (model == "3gpp-uma")
        return plos::gpp(plos::GppScenario::UMa, r, h_tx).p;
    if (model == "3gpp-umi")
        return plos::gpp(plos::GppScenario::UMi, r, h_tx).p;
    throw std::invalid_argument("unknown P_LoS model '" + model + "'");
}

ComparisonReport compare_models(const CampaignConfig& cfg)
{
    if (cfg.models.empty())
        throw std::invalid_argument("compare_models: empty model set");
    ComparisonReport report;
    report.theta_grid_deg = cfg.theta_grid_deg;
    report.empirical = empirical_plos(cfg);

    for (const auto& model : cfg.models)
    {
        ModelCurve mc_curve;
        mc_curve.model = model;
        for (double theta : cfg.theta_grid_deg)
            mc_curve.values.push_back(evaluate_model(model, cfg, theta));
        report.model_curves.push_back(std::move(mc_curve));
    }

    for (const auto& mcurve : report.model_curves)
    {
        double sum = 0.0;
        std::size_t count = 0;
        for (std::size_t k = 0; k < mcurve.values.size(); ++k)
        {
            if (!report.empirical.points[k].valid || std::isnan(mcurve.values[k]))
                continue;
            const double d = mcurve.values[k] - report.empirical.points[k].value;
            sum += d * d;
            ++count;
        }
        if (count == 0)
            throw std::invalid_argument("compare_models: no valid grid points");
        report.ranking.push_back({mcurve.model, std::sqrt(sum / static_cast<double>(count)), 0});
    }
    std::vector<std::size_t> order(report.ranking.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        order[k] = k;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return report.ranking[a].rmse < report.ranking[b].rmse;
    });
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        report.ranking[order[pos]].rank = static_cast<int>(pos) + 1;
    return report;
}

std::string curve_csv(const PlosCurve& curve)
{
    std::string out = "theta_deg,model,value,ci_lo,ci_hi\n";
    for (const auto& p : curve.points)
        out += csv::join_row({csv::format_double(p.theta_deg), "empirical",
                              csv::format_double(p.value), csv::format_double(p.ci_lo),
                              csv::format_double(p.ci_hi)});
    return out;
}

std::string curves_csv(const ComparisonReport& report)
{
    std::string out = curve_csv(report.empirical);
    for (const auto& mcurve : report.model_curves)
        for (std::size_t k = 0; k < mcurve.values.size(); ++k)
            out += csv::join_row({csv::format_double(report.theta_grid_deg[k]), mcurve.model,
                                  csv::format_double(mcurve.values[k]),
                                  csv::format_double(mcurve.values[k]),
                                  csv::format_double(mcurve.values[k])});
    return out;
}

std::string report_csv(const ComparisonReport& report)
{
    std::string out = "model,rmse,rank\n";
    for (const auto& row : report.ranking)
        out += csv::join_row(
            {row.model, csv::format_double(row.rmse), std::to_string(row.rank)});
    return out;
}

ChannelSample sample_channel(const ChannelSpec& spec, std::uint64_t seed)
{
    if (!(spec.plos >= 0.0) || !(spec.plos <= 1.0))
        throw std::invalid_argument("sample_channel: plos must be in [0, 1]");
    if (!(spec.sigma_los_db >= 0.0) || !(spec.sigma_nlos_db >= 0.0))
        throw std::invalid_argument("sample_channel: sigma must be >= 0");

    rng::Xoshiro256pp gen(rng::derive_seed(seed, /*stream_id=*/0x4348414EULL)); // "CHAN"
    ChannelSample sample{};
    sample.plos = spec.plos;
    const bool los = gen.uniform() < spec.plos;
    sample.condition = los ? pathloss::Condition::LoS : pathloss::Condition::NLoS;
    sample.pl_det_db = los ? spec.pl_los_db : spec.pl_nlos_db;
    const double sigma = los ? spec.sigma_los_db : spec.sigma_nlos_db;
    sample.shadow_db = sigma == 0.0 ? 0.0 : sigma * gen.normal();

    const double k_db = los ? spec.k_los_db : spec.k_nlos_db;
    if (std::isinf(k_db) && k_db > 0.0)
    {
        sample.small_scale_gain = 1.0;
    }
    else
    {
        double los_amp = 0.0;
        double scatter_power = 1.0;
        if (!std::isinf(k_db)) // -inf tags Rayleigh
        {
            const double k = std::pow(10.0, k_db / 10.0);
            los_amp = std::sqrt(k / (k + 1.0));
            scatter_power = 1.0 / (k + 1.0);
        }
        const double amp = std::sqrt(scatter_power / 2.0);
        const double re = los_amp + amp * gen.normal();
        const double im = amp * gen.normal();
        sample.small_scale_gain = re * re + im * im;
    }
    sample.total_db = sample.pl_det_db + sample.shadow_db -
                      10.0 * std::log10(sample.small_scale_gain);
    return sample;
}

} // namespace a2g::mc

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

#ifndef A2G_MC_HPP
#define A2G_MC_HPP

#include "a2g/environment.hpp"
#include "a2g/fading.hpp"
#include "a2g/pathloss.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace a2g::mc {

enum class PlacementRule
{
    FixedHeight, // h_tx fixed, r = (h_tx - h_rx) / tan(theta)
    FixedRange   // r fixed, h_tx = h_rx + r * tan(theta)
};

enum class OracleKind
{
    Geometric,      // full Manhattan-grid ray tracing
    ItuAssumptions  // single ray against i.i.d. Rayleigh heights at the ITU midpoints
};

struct CampaignConfig
{
    Environment env = environment_by_name("urban");
    std::vector<double> theta_grid_deg;
    int trials_per_point = 2000;
    double h_rx_m = 1.5;
    PlacementRule placement = PlacementRule::FixedHeight;
    double h_tx_m = 100.0;
    double range_m = 500.0;
    std::uint64_t master_seed = 1;
    std::vector<std::string> models = {"itu", "sigmoid", "scurve3", "region3d"};
    bool fresh_city = true; // new realization per trial (expectation over heights)
    OracleKind oracle = OracleKind::Geometric;
    double extent_margin_pitches = 3.0;
    unsigned workers = 1;
    double freq_ghz = 2.4; // only the Fresnel-aware model consumes this
};

struct CurvePoint
{
    double theta_deg = 0.0;
    double value = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    bool valid = false; // false: unreachable geometry at this grid point
};

struct PlosCurve
{
    std::vector<CurvePoint> points;
};

/// Empirical LoS probability per grid point with 95% Wilson intervals.
/// Per-trial seeds derive from (master_seed, grid index, trial index), so the
/// result is identical at any worker count.
PlosCurve empirical_plos(const CampaignConfig& cfg);

struct ModelCurve
{
    std::string model;
    std::vector<double> values; // aligned with the theta grid; NaN where invalid
};

struct RankingRow
{
    std::string model;
    double rmse;
    int rank;
};

struct ComparisonReport
{
    std::vector<double> theta_grid_deg;
    PlosCurve empirical;
    std::vector<ModelCurve> model_curves;
    std::vector<RankingRow> ranking;
};

/// Evaluates one analytical model at a single campaign grid point.
double evaluate_model(const std::string& model, const CampaignConfig& cfg, double theta_deg);

/// Analytical curves vs the empirical oracle, with per-model RMSE and rank.
ComparisonReport compare_models(const CampaignConfig& cfg);

/// CSV renderings (LF line endings, '.' decimal separator).
std::string curves_csv(const ComparisonReport& report);
std::string report_csv(const ComparisonReport& report);
std::string curve_csv(const PlosCurve& curve);

struct ChannelSample
{
    pathloss::Condition condition;
    double plos;
    double pl_det_db;
    double shadow_db;
    double small_scale_gain;
    double total_db; // pl_det + shadow - 10 log10(gain)
};

struct ChannelSpec
{
    double plos;
    double pl_los_db;
    double pl_nlos_db;
    double sigma_los_db = 0.0;
    double sigma_nlos_db = 0.0;
    double k_los_db = fading::kDefaultKLosDb;   // +inf = no scatter
    double k_nlos_db = fading::kDefaultKNlosDb; // -inf = Rayleigh
};

/// Draws the LoS state, the condition-matched shadow value and a small-scale
/// gain, and composes the total loss. Deterministic per seed.
ChannelSample sample_channel(const ChannelSpec& spec, std::uint64_t seed);

} // namespace a2g::mc

#endif

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

#ifndef A2G_FADING_HPP
#define A2G_FADING_HPP

#include "a2g/pathloss.hpp"
#include "a2g/tables.hpp"

#include <cstdint>
#include <vector>

namespace a2g::fading {

/// TR 36.777 defaults for the fixed Rician K-factor approach.
inline constexpr double kDefaultKLosDb = 20.0;
inline constexpr double kDefaultKNlosDb = 10.0;

/// Default decorrelation distance where a study reports none.
inline constexpr double kDefaultDecorrM = 5.0;

/// Shadow-fading standard deviation per the tabulated TR 36.777 rows
/// (height-dependent formulas for LoS, constants for NLoS).
double shadow_sigma_db(pathloss::Scenario scenario, pathloss::Condition condition,
                       double h_tx_m);

/// Default sigma for an arbitrary tabulated row: constants as-is, formulas
/// evaluated at h_tx, reported ranges at their midpoint.
double shadow_row_sigma_db(const tables::ShadowRow& row, double h_tx_m);

/// Decorrelation distance for a tabulated row: the reported range midpoint,
/// or kDefaultDecorrM where the study reports none.
double shadow_row_decorr_m(const tables::ShadowRow& row);

struct ShadowConfig
{
    double sigma_db;
    double d_decorr_m = kDefaultDecorrM;
    double step_m = 1.0;
};

/// Zero-mean Gaussian sequence with autocorrelation exp(-lag/d_decorr),
/// realized by the exact first-order Gauss-Markov recursion
///   x[k+1] = a x[k] + sigma sqrt(1-a^2) w[k],  a = exp(-step/d_decorr),
/// started from the stationary distribution. Deterministic per seed.
std::vector<double> shadow_trace(const ShadowConfig& cfg, std::size_t n, std::uint64_t seed);

struct RicianConfig
{
    double k_db = kDefaultKLosDb;
    bool rayleigh = false; // K = -inf

    static RicianConfig rician(double k_db) { return {k_db, false}; }
    static RicianConfig rayleigh_tag() { return {0.0, true}; }
};

/// Unit-mean linear power gains |h|^2 with
/// h = sqrt(K/(K+1)) + sqrt(1/(K+1)) * CN(0,1); Rayleigh when tagged.
/// k_db = +inf yields gains exactly 1.
std::vector<double> small_scale_gain(const RicianConfig& cfg, std::size_t n, std::uint64_t seed);

} // namespace a2g::fading

#endif

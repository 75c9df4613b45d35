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

#ifndef A2G_PATHLOSS_HPP
#define A2G_PATHLOSS_HPP

#include <string>

namespace a2g::pathloss {

enum class Scenario
{
    RMa,
    UMa,
    UMi
};

enum class Condition
{
    LoS,
    NLoS
};

Scenario scenario_from_string(const std::string& name);
Condition condition_from_string(const std::string& name);
std::string to_string(Scenario scenario);
std::string to_string(Condition condition);

/// Free-space path loss: 20log10(d) + 20log10(f_c) + 20log10(4 pi / c). f in Hz.
double fspl_db(double d_m, double f_hz);

/// 3GPP TR 36.777 aerial path loss. f_c in GHz, d3d in meters.
double gpp_db(Scenario scenario, Condition condition, double d3d_m, double h_tx_m,
              double f_ghz);

struct LogDistanceParams
{
    double n;        // path-loss exponent
    double d0_m;     // reference distance
    double f_hz;     // carrier used for the FSPL anchor at d0
    double sigma_db; // shadow std; not applied here (fading owns draws)
};

/// FSPL(d0) + 10 n log10(d/d0); deterministic part only.
double log_distance_db(const LogDistanceParams& params, double d_m);

struct AbParams
{
    double a_db; // intercept
    double b;    // slope
};

/// A + B * 10log10(d); deterministic part only.
double ab_db(const AbParams& params, double d_m);

/// Two-ray ground-reflection loss; +inf at perfect cancellation nulls.
double two_ray_db(double d_m, double h_tx_m, double h_rx_m, double f_hz);

/// LoS/NLoS mixture combined in the dB domain, as published.
double combined_db(double plos, double pl_los_db, double pl_nlos_db);

/// Non-published alternative: mixture of linear received powers, returned in dB.
double combined_expected_power_db(double plos, double pl_los_db, double pl_nlos_db);

} // namespace a2g::pathloss

#endif

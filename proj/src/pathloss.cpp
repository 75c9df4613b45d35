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

#include "a2g/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace a2g::pathloss {

Scenario scenario_from_string(const std::string& name)
{
    if (name == "rma")
        return Scenario::RMa;
    if (name == "uma")
        return Scenario::UMa;
    if (name == "umi")
        return Scenario::UMi;
    throw std::invalid_argument("unknown scenario '" + name + "' (rma, uma or umi)");
}

Condition condition_from_string(const std::string& name)
{
    if (name == "los")
        return Condition::LoS;
    if (name == "nlos")
        return Condition::NLoS;
    throw std::invalid_argument("unknown condition '" + name + "' (los or nlos)");
}

std::string to_string(Scenario scenario)
{
    switch (scenario)
    {
        case Scenario::RMa: return "rma";
        case Scenario::UMa: return "uma";
        case Scenario::UMi: return "umi";
    }
    throw std::logic_error("bad scenario");
}

std::string to_string(Condition condition)
{
    return condition == Condition::LoS ? "los" : "nlos";
}

double fspl_db(double d_m, double f_hz)
{
    if (!(d_m > 0.0) || !(f_hz > 0.0))
        throw std::invalid_argument("fspl requires d > 0 and f > 0");
    return 20.0 * std::log10(d_m) + 20.0 * std::log10(f_hz) +
           20.0 * std::log10(4.0 * kPi / kSpeedOfLight);
}

double gpp_db(Scenario scenario, Condition condition, double d3d_m, double h_tx_m, double f_ghz)
{
    if (!(d3d_m > 0.0) || !(h_tx_m > 0.0) || !(f_ghz > 0.0))
        throw std::invalid_argument("gpp_db requires positive inputs");
    const double log_d = std::log10(d3d_m);
    const double log_h = std::log10(h_tx_m);
    // 20log10(40 pi f / 3), the anchor shared by the RMa/UMa-NLoS forms.
    const double anchor = 20.0 * std::log10(40.0 * kPi * f_ghz / 3.0);

    switch (scenario)
    {
        case Scenario::RMa:
        {
            const double los = std::max(23.9 - 1.8 * log_h, 20.0) * log_d + anchor;
            if (condition == Condition::LoS)
                return los;
            return std::max(los, -12.0 + (35.0 - 5.3 * log_h) * log_d + anchor);
        }
        case Scenario::UMa:
        {
            if (condition == Condition::LoS)
                return 28.0 + 22.0 * log_d + 20.0 * std::log10(f_ghz);
            return -17.5 + (46.0 - 7.0 * log_h) * log_d + anchor;
        }
        case Scenario::UMi:
        {
            const double los = std::max(
                fspl_db(d3d_m, f_ghz * 1e9),
                30.9 + (22.25 - 0.5 * log_h) * log_d + 20.0 * std::log10(f_ghz));
            if (condition == Condition::LoS)
                return los;
            return std::max(los,
                            32.4 + (43.2 - 7.6 * log_h) * log_d + 20.0 * std::log10(f_ghz));
        }
    }
    throw std::logic_error("bad scenario");
}

double log_distance_db(const LogDistanceParams& params, double d_m)
{
    if (!(params.n > 0.0) || !(params.d0_m > 0.0))
        throw std::invalid_argument("log_distance: n and d0 must be positive");
    if (!(d_m >= params.d0_m))
        throw std::invalid_argument("log_distance: d below the reference distance d0");
    return fspl_db(params.d0_m, params.f_hz) + 10.0 * params.n * std::log10(d_m / params.d0_m);
}

double ab_db(const AbParams& params, double d_m)
{
    if (!(d_m > 0.0))
        throw std::invalid_argument("ab_db requires d > 0");
    return params.a_db + params.b * 10.0 * std::log10(d_m);
}

double two_ray_db(double d_m, double h_tx_m, double h_rx_m, double f_hz)
{
    if (!(d_m > 0.0) || !(h_tx_m > 0.0) || !(h_rx_m > 0.0) || !(f_hz > 0.0))
        throw std::invalid_argument("two_ray requires positive inputs");
    const double lambda = kSpeedOfLight / f_hz;
    // Reduce the phase argument first; sin() of a huge argument is noise.
    const double raw_phase = 2.0 * kPi * h_rx_m * h_tx_m / (lambda * d_m);
    const double phase = std::fmod(raw_phase, 2.0 * kPi);
    // Cancellation null: the reflected path wipes out the direct one. Snap
    // phases within 1e-9 rad of a multiple of pi, where the rounded sin()
    // would otherwise report a few hundred dB of numerical fiction.
    if (std::abs(std::remainder(raw_phase, kPi)) < 1e-9)
        return std::numeric_limits<double>::infinity();
    const double amplitude = lambda / (4.0 * kPi * d_m) * 2.0 * std::sin(phase);
    return -10.0 * std::log10(amplitude * amplitude);
}

double combined_db(double plos, double pl_los_db, double pl_nlos_db)
{
    if (!(plos >= 0.0) || !(plos <= 1.0))
        throw std::invalid_argument("combined_db requires plos in [0, 1]");
    return plos * pl_los_db + (1.0 - plos) * pl_nlos_db;
}

double combined_expected_power_db(double plos, double pl_los_db, double pl_nlos_db)
{
    if (!(plos >= 0.0) || !(plos <= 1.0))
        throw std::invalid_argument("combined_expected_power_db requires plos in [0, 1]");
    const double mean_gain =
        plos * std::pow(10.0, -pl_los_db / 10.0) + (1.0 - plos) * std::pow(10.0, -pl_nlos_db / 10.0);
    return -10.0 * std::log10(mean_gain);
}

} // namespace a2g::pathloss

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

#include "a2g/rng.hpp"
#include "a2g/tables.hpp"

#include <cmath>
#include <stdexcept>

namespace a2g::fading {

double shadow_sigma_db(pathloss::Scenario scenario, pathloss::Condition condition, double h_tx_m)
{
    if (!(h_tx_m >= 1.5) || !(h_tx_m <= 300.0))
        throw std::invalid_argument("shadow_sigma: h_tx outside the 1.5-300 m validity range");
    const std::string scen = pathloss::to_string(scenario);
    const std::string cond = pathloss::to_string(condition);
    for (const auto& row : tables::shadow_rows())
    {
        if (row.study != "TR36777" || row.environment != scen || row.condition != cond)
            continue;
        if (row.sigma_kind == "const")
            return row.p1;
        if (row.sigma_kind == "exp")
            return row.p1 * std::exp(row.p2 * h_tx_m);
        if (row.sigma_kind == "exp_floor")
            return std::max(row.p3, row.p1 * std::exp(row.p2 * h_tx_m));
        break;
    }
    throw std::logic_error("shadow_sigma: no tabulated row for " + scen + "/" + cond);
}

double shadow_row_sigma_db(const tables::ShadowRow& row, double h_tx_m)
{
    if (row.sigma_kind == "const")
        return row.p1;
    if (row.sigma_kind == "exp")
        return row.p1 * std::exp(row.p2 * h_tx_m);
    if (row.sigma_kind == "exp_floor")
        return std::max(row.p3, row.p1 * std::exp(row.p2 * h_tx_m));
    if (row.sigma_kind == "range")
        return (row.p1 + row.p2) / 2.0;
    throw std::logic_error("unknown sigma kind '" + row.sigma_kind + "'");
}

double shadow_row_decorr_m(const tables::ShadowRow& row)
{
    if (std::isnan(row.decorr_lo_m) || std::isnan(row.decorr_hi_m))
        return kDefaultDecorrM;
    return (row.decorr_lo_m + row.decorr_hi_m) / 2.0;
}

std::vector<double> shadow_trace(const ShadowConfig& cfg, std::size_t n, std::uint64_t seed)
{
    if (!(cfg.sigma_db >= 0.0))
        throw std::invalid_argument("shadow_trace: sigma must be >= 0");
    if (!(cfg.d_decorr_m > 0.0) || !(cfg.step_m > 0.0))
        throw std::invalid_argument("shadow_trace: d_decorr and step must be positive");
    if (n < 2)
        throw std::invalid_argument("shadow_trace: need at least 2 samples");

    std::vector<double> trace(n);
    if (cfg.sigma_db == 0.0)
        return trace;

    rng::Xoshiro256pp gen(rng::derive_seed(seed, /*stream_id=*/0x53484144)); // "SHAD"
    const double a = std::exp(-cfg.step_m / cfg.d_decorr_m);
    const double innovation = cfg.sigma_db * std::sqrt(1.0 - a * a);
    trace[0] = cfg.sigma_db * gen.normal(); // stationary start
    for (std::size_t k = 1; k < n; ++k)
        trace[k] = a * trace[k - 1] + innovation * gen.normal();
    return trace;
}

std::vector<double> small_scale_gain(const RicianConfig& cfg, std::size_t n, std::uint64_t seed)
{
    if (n < 1)
        throw std::invalid_argument("small_scale_gain: need at least 1 sample");
    std::vector<double> gains(n);
    rng::Xoshiro256pp gen(rng::derive_seed(seed, /*stream_id=*/0x52494345)); // "RICE"

    if (!cfg.rayleigh && std::isinf(cfg.k_db) && cfg.k_db > 0.0)
    {
        for (auto& g : gains)
            g = 1.0; // pure dominant path
        return gains;
    }

    double los_amp = 0.0;
    double scatter_power = 1.0;
    if (!cfg.rayleigh)
    {
        const double k = std::pow(10.0, cfg.k_db / 10.0);
        los_amp = std::sqrt(k / (k + 1.0));
        scatter_power = 1.0 / (k + 1.0);
    }
    const double scatter_amp = std::sqrt(scatter_power / 2.0); // per I/Q component
    for (auto& g : gains)
    {
        const double re = los_amp + scatter_amp * gen.normal();
        const double im = scatter_amp * gen.normal();
        g = re * re + im * im;
    }
    return gains;
}

} // namespace a2g::fading

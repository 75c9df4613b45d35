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

#include "a2g/environment.hpp"

#include "a2g/tables.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace a2g {

Environment::Environment(double alpha, double beta_per_km2, double gamma_m, std::string name)
    : alpha_(alpha), beta_(beta_per_km2), gamma_(gamma_m), name_(std::move(name))
{
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("environment: alpha must be in (0,1), got " +
                                    std::to_string(alpha));
    if (!(beta_per_km2 > 0.0))
        throw std::invalid_argument("environment: beta must be positive");
    if (!(gamma_m > 0.0))
        throw std::invalid_argument("environment: gamma must be positive");

    width_ = 1000.0 * std::sqrt(alpha_ / beta_);
    street_ = 1000.0 / std::sqrt(beta_) - width_;
    if (!(width_ > 0.0) || !(street_ > 0.0))
        throw std::invalid_argument("environment: degenerate geometry (W or S not positive)");
}

std::span<const Environment> standard_environments()
{
    static const std::vector<Environment> envs = [] {
        std::vector<Environment> out;
        for (const auto& row : tables::environment_rows())
            out.emplace_back(row.alpha, row.beta_per_km2, row.gamma_m, row.name);
        return out;
    }();
    return envs;
}

const Environment& environment_by_name(const std::string& name)
{
    for (const auto& env : standard_environments())
        if (env.name() == name)
            return env;
    throw std::invalid_argument("unknown environment '" + name +
                                "' (expected suburban, urban, dense-urban or high-rise)");
}

} // namespace a2g

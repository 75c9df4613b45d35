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

#ifndef A2G_ENVIRONMENT_HPP
#define A2G_ENVIRONMENT_HPP

#include <span>
#include <string>

namespace a2g {

/// ITU built-up description of an urban area: building area ratio alpha,
/// building density beta (per km^2) and Rayleigh height scale gamma (m).
/// Building width W and street width S for the equal-pitch square lattice
/// follow from alpha and beta:
///
///   W = 1000 * sqrt(alpha / beta),   W + S = 1000 / sqrt(beta)
///
/// which is the unique choice with alpha = W^2/(W+S)^2 and beta buildings
/// per km^2 on a (W+S)-pitch lattice.
class Environment
{
  public:
    Environment(double alpha, double beta_per_km2, double gamma_m, std::string name = "custom");

    double alpha() const { return alpha_; }
    double beta_per_km2() const { return beta_; }
    double gamma_m() const { return gamma_; }
    const std::string& name() const { return name_; }

    double building_width_m() const { return width_; }  // W
    double street_width_m() const { return street_; }   // S
    double pitch_m() const { return width_ + street_; } // W + S

  private:
    double alpha_;
    double beta_;
    double gamma_;
    double width_;
    double street_;
    std::string name_;
};

/// The four standard ITU environments (suburban, urban, dense-urban, high-rise).
std::span<const Environment> standard_environments();

/// Lookup by name; accepts the hyphenated names above. Throws std::invalid_argument.
const Environment& environment_by_name(const std::string& name);

} // namespace a2g

#endif

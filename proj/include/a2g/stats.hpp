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

#ifndef A2G_STATS_HPP
#define A2G_STATS_HPP

#include <cstdint>
#include <span>
#include <utility>

namespace a2g::stats {

double mean(std::span<const double> values);
double variance(std::span<const double> values); // unbiased

/// Wilson score interval for a binomial proportion (default 95%).
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials,
                                          double z = 1.959963984540054);

double rmse(std::span<const double> a, std::span<const double> b);

} // namespace a2g::stats

#endif

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

#ifndef A2G_LOCALIZATION_HPP
#define A2G_LOCALIZATION_HPP

#include "a2g/geometry.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace a2g::localization {

/// Log-distance RSSI observation model.
struct RssiModel
{
    double p_ref_dbm; // power at the reference distance
    double d_ref_m = 1.0;
    double n_p = 2.0; // path-loss exponent, typically in [2, 4]
};

struct RssiMeasurement
{
    Vec3 uav;
    double rssi_dbm;
    double sigma_db;
};

/// Noiseless mean RSSI of an emitter at u observed from uav_position.
/// Distances below d_ref are clamped to d_ref (the model is undefined there).
double rssi_forward_dbm(const RssiModel& model, const Vec3& emitter, const Vec3& uav_position);

/// Sum of -(rho_i - h(u, s_i))^2 / (2 sigma_i^2); constants dropped.
double log_likelihood(const RssiModel& model, std::span<const RssiMeasurement> measurements,
                      const Vec3& emitter);

/// Planar search window; the emitter height is fixed at emitter_z.
struct SearchRegion
{
    double x0;
    double x1;
    double y0;
    double y1;
    double emitter_z = 0.0;
};

struct LikelihoodMap
{
    std::size_t nx = 0;
    std::size_t ny = 0;
    double x0 = 0.0;
    double y0 = 0.0;
    double resolution_m = 1.0;
    std::vector<double> loglik; // row-major, iy * nx + ix

    double x_of(std::size_t ix) const { return x0 + static_cast<double>(ix) * resolution_m; }
    double y_of(std::size_t iy) const { return y0 + static_cast<double>(iy) * resolution_m; }
    double at(std::size_t ix, std::size_t iy) const { return loglik[iy * nx + ix]; }
};

struct LocalizeResult
{
    Vec3 estimate;
    std::size_t argmax_ix = 0;
    std::size_t argmax_iy = 0;
    LikelihoodMap map;
};

/// Exhaustive grid-search maximizer of the log-likelihood. Rows are evaluated
/// in parallel; the argmax scan is sequential with ties broken by the
/// smallest grid index, so the result does not depend on the worker count.
LocalizeResult mle_localize(const RssiModel& model,
                            std::span<const RssiMeasurement> measurements,
                            const SearchRegion& region, double resolution_m,
                            unsigned workers = 1);

} // namespace a2g::localization

#endif

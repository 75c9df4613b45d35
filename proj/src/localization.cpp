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

#include "a2g/localization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace a2g::localization {

double rssi_forward_dbm(const RssiModel& model, const Vec3& emitter, const Vec3& uav_position)
{
    if (!(model.d_ref_m > 0.0))
        throw std::invalid_argument("rssi model: d_ref must be positive");
    const double dx = emitter.x - uav_position.x;
    const double dy = emitter.y - uav_position.y;
    const double dz = emitter.z - uav_position.z;
    const double d = std::max(std::sqrt(dx * dx + dy * dy + dz * dz), model.d_ref_m);
    return model.p_ref_dbm - 10.0 * model.n_p * std::log10(d / model.d_ref_m);
}

double log_likelihood(const RssiModel& model, std::span<const RssiMeasurement> measurements,
                      const Vec3& emitter)
{
    double sum = 0.0;
    for (const auto& m : measurements)
    {
        const double r = m.rssi_dbm - rssi_forward_dbm(model, emitter, m.uav);
        sum -= r * r / (2.0 * m.sigma_db * m.sigma_db);
    }
    return sum;
}

LocalizeResult mle_localize(const RssiModel& model, std::span<const RssiMeasurement> measurements,
                            const SearchRegion& region, double resolution_m, unsigned workers)
{
    if (measurements.empty())
        throw std::invalid_argument("mle_localize: no measurements");
    for (const auto& m : measurements)
        if (!(m.sigma_db > 0.0))
            throw std::invalid_argument("mle_localize: sigma must be positive");
    if (!(resolution_m > 0.0))
        throw std::invalid_argument("mle_localize: resolution must be positive");
    if (!(region.x1 >= region.x0) || !(region.y1 >= region.y0))
        throw std::invalid_argument("mle_localize: empty search region");

    LocalizeResult result;
    auto& map = result.map;
    map.x0 = region.x0;
    map.y0 = region.y0;
    map.resolution_m = resolution_m;
    map.nx = static_cast<std::size_t>(std::floor((region.x1 - region.x0) / resolution_m)) + 1;
    map.ny = static_cast<std::size_t>(std::floor((region.y1 - region.y0) / resolution_m)) + 1;
    map.loglik.resize(map.nx * map.ny);

    auto eval_rows = [&](std::size_t row_begin, std::size_t row_end) {
        for (std::size_t iy = row_begin; iy < row_end; ++iy)
        {
            const double y = map.y_of(iy);
            for (std::size_t ix = 0; ix < map.nx; ++ix)
            {
                const Vec3 u{map.x_of(ix), y, region.emitter_z};
                map.loglik[iy * map.nx + ix] = log_likelihood(model, measurements, u);
            }
        }
    };

    workers = std::max(1u, workers);
    if (workers == 1 || map.ny < 2 * workers)
    {
        eval_rows(0, map.ny);
    }
    else
    {
        std::vector<std::thread> threads;
        const std::size_t chunk = (map.ny + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w)
        {
            const std::size_t begin = std::min<std::size_t>(w * chunk, map.ny);
            const std::size_t end = std::min<std::size_t>(begin + chunk, map.ny);
            if (begin < end)
                threads.emplace_back(eval_rows, begin, end);
        }
        for (auto& t : threads)
            t.join();
    }

    // Sequential argmax; the first (smallest flat index) maximum wins.
    std::size_t best = 0;
    for (std::size_t k = 1; k < map.loglik.size(); ++k)
        if (map.loglik[k] > map.loglik[best])
            best = k;
    result.argmax_ix = best % map.nx;
    result.argmax_iy = best / map.nx;
    result.estimate = {map.x_of(result.argmax_ix), map.y_of(result.argmax_iy), region.emitter_z};
    return result;
}

} // namespace a2g::localization

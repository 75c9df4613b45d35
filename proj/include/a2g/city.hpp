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

#ifndef A2G_CITY_HPP
#define A2G_CITY_HPP

#include "a2g/environment.hpp"
#include "a2g/geometry.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace a2g {

/// One building overflown by a link, with entry/exit measured as horizontal
/// distance from the rx end along the 2D projection of the ray.
struct BuildingCrossing
{
    double entry_m = 0.0;
    double exit_m = 0.0;
    std::int64_t building_index = -1;
};

/// Walks the square-footprint crossings of a ray through the infinite
/// Manhattan lattice: footprints of side `width` centered at
/// ((i+1/2)*pitch, (j+1/2)*pitch). Calls `visit(entry, exit, i, j)` for each
/// positive-measure crossing, ordered by entry distance, until `visit`
/// returns false or `max_dist` is exhausted. Grazing contacts (zero-measure)
/// are skipped. Pure lattice geometry; no extent or height checks.
void walk_lattice_crossings(
    double pitch, double width, double x0, double y0, double dir_x, double dir_y,
    double max_dist,
    const std::function<bool(double entry, double exit, std::int64_t i, std::int64_t j)>& visit);

/// A sampled Manhattan grid: square footprints of side W on a (W+S)-pitch
/// lattice covering [-extent/2, extent/2]^2, centered so that the origin is
/// the middle of a street intersection, with i.i.d. Rayleigh(gamma) heights.
/// Immutable after construction; all queries are pure and thread-safe.
class CityRealization
{
  public:
    static CityRealization generate(const Environment& env, double extent_m, std::uint64_t seed);

    const Environment& env() const { return env_; }
    double extent_m() const { return extent_; }
    std::uint64_t seed() const { return seed_; }

    /// Buildings per axis and index helpers. Building (i, j) with
    /// i, j in [index_lo, index_hi] has center ((i+1/2)*pitch, (j+1/2)*pitch).
    std::int64_t index_lo() const { return idx_lo_; }
    std::int64_t index_hi() const { return idx_hi_; }
    std::size_t building_count() const { return heights_.size(); }
    double height_m(std::int64_t i, std::int64_t j) const;
    double height_m(std::size_t flat_index) const { return heights_[flat_index]; }
    std::int64_t flat_index(std::int64_t i, std::int64_t j) const;

    bool inside_extent(double x, double y) const;
    /// Index of the building whose open footprint contains (x, y), if any.
    std::optional<std::int64_t> footprint_at(double x, double y) const;

    /// True iff the tx->rx segment passes over at least one footprint at a
    /// point where the interpolated ray height is at or below the building
    /// height. Endpoints must be inside the extent and not inside a building
    /// (over a footprint is fine if the endpoint clears the roof).
    bool los_blocked(const LinkGeometry& link) const;

    /// All footprints overflown by the link, ordered by entry distance from rx.
    std::vector<BuildingCrossing> crossed_buildings(const LinkGeometry& link) const;

    /// JSON round-trip for reproducibility. Heights are regenerated from the
    /// seed unless include_heights was set on export.
    std::string to_json(bool include_heights = false) const;
    static CityRealization from_json(const std::string& text);

  private:
    CityRealization(Environment env, double extent_m, std::uint64_t seed,
                    std::vector<double> heights);

    void check_endpoint(const Vec3& p) const;

    Environment env_;
    double extent_;
    std::uint64_t seed_;
    std::int64_t idx_lo_ = 0;
    std::int64_t idx_hi_ = -1;
    std::int64_t per_axis_ = 0;
    std::vector<double> heights_;
};

} // namespace a2g

#endif

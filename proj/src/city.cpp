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

#include "a2g/city.hpp"

#include "a2g/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace a2g {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Slab interval of a unit-direction ray against [lo, hi] on one axis.
// Returns {-inf, +inf} for a parallel ray strictly inside the slab and an
// empty interval (in > out) for a parallel ray on or outside the boundary:
// running along a face is a grazing contact and never counts as a crossing.
inline void axis_interval(double origin, double dir, double lo, double hi, double& t_in,
                          double& t_out)
{
    if (dir == 0.0)
    {
        if (origin > lo && origin < hi)
        {
            t_in = -kInf;
            t_out = kInf;
        }
        else
        {
            t_in = kInf;
            t_out = -kInf;
        }
        return;
    }
    const double a = (lo - origin) / dir;
    const double b = (hi - origin) / dir;
    t_in = std::min(a, b);
    t_out = std::max(a, b);
}

} // namespace

void walk_lattice_crossings(
    double pitch, double width, double x0, double y0, double dir_x, double dir_y,
    double max_dist,
    const std::function<bool(double entry, double exit, std::int64_t i, std::int64_t j)>& visit)
{
    const double len = std::hypot(dir_x, dir_y);
    if (!(max_dist > 0.0) || len == 0.0)
        return;
    const double ux = dir_x / len;
    const double uy = dir_y / len;
    const double half = width / 2.0;

    auto cell_of = [pitch](double v) {
        return static_cast<std::int64_t>(std::floor(v / pitch));
    };
    std::int64_t ci = cell_of(x0);
    std::int64_t cj = cell_of(y0);

    const std::int64_t step_x = ux > 0.0 ? 1 : (ux < 0.0 ? -1 : 0);
    const std::int64_t step_y = uy > 0.0 ? 1 : (uy < 0.0 ? -1 : 0);

    double t_max_x = kInf;
    double t_max_y = kInf;
    double t_delta_x = kInf;
    double t_delta_y = kInf;
    if (step_x != 0)
    {
        const double boundary = (step_x > 0 ? ci + 1 : ci) * pitch;
        t_max_x = (boundary - x0) / ux;
        t_delta_x = pitch / std::abs(ux);
    }
    if (step_y != 0)
    {
        const double boundary = (step_y > 0 ? cj + 1 : cj) * pitch;
        t_max_y = (boundary - y0) / uy;
        t_delta_y = pitch / std::abs(uy);
    }

    const std::int64_t max_cells = static_cast<std::int64_t>(2.0 * max_dist / pitch) + 4;
    for (std::int64_t n = 0; n < max_cells; ++n)
    {
        const double cx = (static_cast<double>(ci) + 0.5) * pitch;
        const double cy = (static_cast<double>(cj) + 0.5) * pitch;
        double tx_in;
        double tx_out;
        double ty_in;
        double ty_out;
        axis_interval(x0, ux, cx - half, cx + half, tx_in, tx_out);
        axis_interval(y0, uy, cy - half, cy + half, ty_in, ty_out);
        const double t_in = std::max({tx_in, ty_in, 0.0});
        const double t_out = std::min({tx_out, ty_out, max_dist});
        if (t_out > t_in)
        {
            if (!visit(t_in, t_out, ci, cj))
                return;
        }

        const double t_next = std::min(t_max_x, t_max_y);
        if (t_next > max_dist)
            return;
        // Passing exactly through a lattice corner only grazes the two
        // diagonal neighbors; stepping both axes at once skips them.
        if (t_max_x <= t_next)
        {
            ci += step_x;
            t_max_x += t_delta_x;
        }
        if (t_max_y <= t_next)
        {
            cj += step_y;
            t_max_y += t_delta_y;
        }
    }
}

CityRealization::CityRealization(Environment env, double extent_m, std::uint64_t seed,
                                 std::vector<double> heights)
    : env_(std::move(env)), extent_(extent_m), seed_(seed), heights_(std::move(heights))
{
    const double pitch = env_.pitch_m();
    idx_hi_ = static_cast<std::int64_t>(
        std::floor((extent_ - env_.building_width_m()) / (2.0 * pitch) - 0.5));
    idx_lo_ = -1 - idx_hi_;
    per_axis_ = idx_hi_ - idx_lo_ + 1;
}

CityRealization CityRealization::generate(const Environment& env, double extent_m,
                                          std::uint64_t seed)
{
    if (!(extent_m >= 10.0 * env.pitch_m()))
        throw std::invalid_argument("city extent must be at least 10*(W+S) = " +
                                    std::to_string(10.0 * env.pitch_m()) + " m");
    CityRealization city(env, extent_m, seed, {});
    rng::Xoshiro256pp gen(rng::derive_seed(seed, /*stream_id=*/0x43495459)); // "CITY"
    const std::size_t count =
        static_cast<std::size_t>(city.per_axis_) * static_cast<std::size_t>(city.per_axis_);
    city.heights_.resize(count);
    for (auto& h : city.heights_)
        h = gen.rayleigh(env.gamma_m());
    return city;
}

std::int64_t CityRealization::flat_index(std::int64_t i, std::int64_t j) const
{
    return (i - idx_lo_) * per_axis_ + (j - idx_lo_);
}

double CityRealization::height_m(std::int64_t i, std::int64_t j) const
{
    return heights_[static_cast<std::size_t>(flat_index(i, j))];
}

bool CityRealization::inside_extent(double x, double y) const
{
    const double h = extent_ / 2.0;
    return x >= -h && x <= h && y >= -h && y <= h;
}

std::optional<std::int64_t> CityRealization::footprint_at(double x, double y) const
{
    const double pitch = env_.pitch_m();
    const double half = env_.building_width_m() / 2.0;
    const auto i = static_cast<std::int64_t>(std::floor(x / pitch));
    const auto j = static_cast<std::int64_t>(std::floor(y / pitch));
    if (i < idx_lo_ || i > idx_hi_ || j < idx_lo_ || j > idx_hi_)
        return std::nullopt;
    const double cx = (static_cast<double>(i) + 0.5) * pitch;
    const double cy = (static_cast<double>(j) + 0.5) * pitch;
    if (std::abs(x - cx) < half && std::abs(y - cy) < half)
        return flat_index(i, j);
    return std::nullopt;
}

void CityRealization::check_endpoint(const Vec3& p) const
{
    if (!inside_extent(p.x, p.y))
        throw std::invalid_argument("link endpoint outside city extent");
    // Inside the solid building, not merely over its footprint: an endpoint
    // above the roof is a legal placement and the crossing walk handles the
    // partial overflight.
    const auto idx = footprint_at(p.x, p.y);
    if (idx && p.z <= height_m(static_cast<std::size_t>(*idx)))
        throw std::invalid_argument("link endpoint inside a building; resample");
}

bool CityRealization::los_blocked(const LinkGeometry& link) const
{
    check_endpoint(link.tx);
    check_endpoint(link.rx);
    if (link.r == 0.0)
        return false;

    const double dz = link.tx.z - link.rx.z;
    bool blocked = false;
    walk_lattice_crossings(
        env_.pitch_m(), env_.building_width_m(), link.rx.x, link.rx.y, link.tx.x - link.rx.x,
        link.tx.y - link.rx.y, link.r,
        [&](double entry, double exit, std::int64_t i, std::int64_t j) {
            if (i < idx_lo_ || i > idx_hi_ || j < idx_lo_ || j > idx_hi_)
                return true;
            const double z_entry = link.rx.z + entry / link.r * dz;
            const double z_exit = link.rx.z + exit / link.r * dz;
            if (height_m(i, j) >= std::min(z_entry, z_exit))
            {
                blocked = true;
                return false;
            }
            return true;
        });
    return blocked;
}

std::vector<BuildingCrossing> CityRealization::crossed_buildings(const LinkGeometry& link) const
{
    check_endpoint(link.tx);
    check_endpoint(link.rx);
    std::vector<BuildingCrossing> crossings;
    if (link.r == 0.0)
        return crossings;

    walk_lattice_crossings(env_.pitch_m(), env_.building_width_m(), link.rx.x, link.rx.y,
                           link.tx.x - link.rx.x, link.tx.y - link.rx.y, link.r,
                           [&](double entry, double exit, std::int64_t i, std::int64_t j) {
                               if (i < idx_lo_ || i > idx_hi_ || j < idx_lo_ || j > idx_hi_)
                                   return true;
                               crossings.push_back({entry, exit, flat_index(i, j)});
                               return true;
                           });
    return crossings;
}

std::string CityRealization::to_json(bool include_heights) const
{
    nlohmann::json doc;
    doc["environment"] = {{"name", env_.name()},
                          {"alpha", env_.alpha()},
                          {"beta_per_km2", env_.beta_per_km2()},
                          {"gamma_m", env_.gamma_m()}};
    doc["extent_m"] = extent_;
    doc["seed"] = seed_;
    doc["pitch_m"] = env_.pitch_m();
    doc["building_width_m"] = env_.building_width_m();
    doc["index_lo"] = idx_lo_;
    doc["index_hi"] = idx_hi_;
    if (include_heights)
        doc["heights_m"] = heights_;
    return doc.dump(2);
}

CityRealization CityRealization::from_json(const std::string& text)
{
    const auto doc = nlohmann::json::parse(text);
    const auto& e = doc.at("environment");
    Environment env(e.at("alpha").get<double>(), e.at("beta_per_km2").get<double>(),
                    e.at("gamma_m").get<double>(), e.value("name", std::string("custom")));
    const double extent = doc.at("extent_m").get<double>();
    const auto seed = doc.at("seed").get<std::uint64_t>();
    if (!doc.contains("heights_m"))
        return generate(env, extent, seed);

    CityRealization city(env, extent, seed, doc.at("heights_m").get<std::vector<double>>());
    const auto expected =
        static_cast<std::size_t>(city.per_axis_) * static_cast<std::size_t>(city.per_axis_);
    if (city.heights_.size() != expected)
        throw std::invalid_argument("city json: heights_m count " +
                                    std::to_string(city.heights_.size()) + " does not match grid " +
                                    std::to_string(expected));
    return city;
}

} // namespace a2g

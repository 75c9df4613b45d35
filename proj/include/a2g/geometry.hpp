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

#ifndef A2G_GEOMETRY_HPP
#define A2G_GEOMETRY_HPP

#include <cmath>

namespace a2g {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSpeedOfLight = 299792458.0; // m/s

constexpr double deg2rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad2deg(double rad) { return rad * 180.0 / kPi; }

struct Vec3
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// One UAV-to-ground link. tx is the airborne end, rx the ground end.
/// r is the horizontal (2D) distance, theta the elevation of tx as seen
/// from rx, phi the azimuth of the horizontal projection in [0, 360).
struct LinkGeometry
{
    Vec3 tx;
    Vec3 rx;
    double r = 0.0;
    double d3d = 0.0;
    double theta_deg = 0.0;
    double phi_deg = 0.0;
};

inline LinkGeometry make_link(const Vec3& tx, const Vec3& rx)
{
    LinkGeometry link;
    link.tx = tx;
    link.rx = rx;
    const double dx = tx.x - rx.x;
    const double dy = tx.y - rx.y;
    const double dz = tx.z - rx.z;
    link.r = std::hypot(dx, dy);
    link.d3d = std::sqrt(link.r * link.r + dz * dz);
    link.theta_deg = rad2deg(std::atan2(dz, link.r));
    double phi = rad2deg(std::atan2(dy, dx));
    if (phi < 0.0)
        phi += 360.0;
    link.phi_deg = phi;
    return link;
}

} // namespace a2g

#endif

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

#include "a2g/plos.hpp"

#include "a2g/city.hpp"
#include "a2g/geometry.hpp"
#include "a2g/quadrature.hpp"
#include "a2g/tables.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace a2g::plos {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kSqrt2 = 1.4142135623730950488;

PlosResult clamped(double raw)
{
    return {std::clamp(raw, 0.0, 1.0), raw};
}

// Obstruction walk stops once the per-building blocking tail is below this;
// exp(-h^2/(2 gamma^2)) < 1e-15 at h/gamma = sqrt(2*ln(1e15)) ~ 8.32.
constexpr double kTailHeightRatio = 8.32;

double rayleigh_cdf(double h, double gamma)
{
    return 1.0 - std::exp(-h * h / (2.0 * gamma * gamma));
}

/// Scaled complementary error function exp(x^2) * erfc(x) for x >= 0.
double erfcx_pos(double x)
{
    if (x < 20.0)
        return std::exp(x * x) * std::erfc(x);
    // Asymptotic series; relative error < 1e-9 at x = 20.
    const double ix2 = 1.0 / (x * x);
    return (1.0 - 0.5 * ix2 * (1.0 - 1.5 * ix2 * (1.0 - 2.5 * ix2))) / (x * kSqrtPi);
}

} // namespace

// --- ITU ------------------------------------------------------------------

int itu_obstruction_count(const Environment& env, double r_m)
{
    const double r_km = r_m / 1000.0;
    return static_cast<int>(
        std::floor(r_km * std::sqrt(env.alpha() * env.beta_per_km2()) - 1.0));
}

PlosResult itu(const Environment& env, double h_tx, double h_rx, double r_m)
{
    if (!(h_rx >= 0.0) || !(h_tx > h_rx))
        throw std::invalid_argument("plos::itu requires h_tx > h_rx >= 0");
    if (r_m < 0.0)
        throw std::invalid_argument("plos::itu requires r >= 0");
    if (r_m == 0.0)
        return {1.0, 1.0}; // overhead
    const int m = itu_obstruction_count(env, r_m);
    if (m < 0)
        return {1.0, 1.0}; // empty product
    const double gamma = env.gamma_m();
    double raw = 1.0;
    for (int n = 0; n <= m; ++n)
    {
        const double h = h_tx - (n + 0.5) * (h_tx - h_rx) / (m + 1);
        raw *= rayleigh_cdf(h, gamma);
    }
    return clamped(raw);
}

PlosResult itu_limit(const Environment& env, double theta_deg)
{
    if (!(theta_deg > 0.0) || !(theta_deg <= 90.0))
        throw std::invalid_argument("plos::itu_limit requires theta in (0, 90] degrees");
    // In the product model, m+1 obstructions over range r put the midpoint
    // spacing at 1000/sqrt(alpha*beta) meters; at fixed elevation the ladder
    // heights relative to gamma no longer depend on the scale.
    const double spacing = 1000.0 / std::sqrt(env.alpha() * env.beta_per_km2());
    const double tan_theta = std::tan(deg2rad(theta_deg));
    const double gamma = env.gamma_m();
    double raw = 1.0;
    for (int k = 0; k < 1000000; ++k)
    {
        const double h = tan_theta * spacing * (k + 0.5);
        if (h >= kTailHeightRatio * gamma || raw <= 1e-300)
            break;
        raw *= rayleigh_cdf(h, gamma);
    }
    return clamped(raw);
}

// --- Sigmoid ----------------------------------------------------------------

PlosResult sigmoid(double a, double b, double theta_deg)
{
    if (!(a > 0.0))
        throw std::invalid_argument("plos::sigmoid requires a > 0");
    if (!(theta_deg > 0.0) || !(theta_deg <= 90.0))
        throw std::invalid_argument("plos::sigmoid requires theta in (0, 90] degrees");
    const double raw = 1.0 / (1.0 + a * std::exp(-b * (theta_deg - a)));
    return clamped(raw);
}

namespace {

double sigmoid_value(double a, double b, double theta)
{
    return 1.0 / (1.0 + a * std::exp(-b * (theta - a)));
}

struct LmState
{
    double u; // ln a
    double v; // ln b
    double sse;
};

double sigmoid_sse(double a, double b, std::span<const double> theta,
                   std::span<const double> y)
{
    double sse = 0.0;
    for (std::size_t k = 0; k < theta.size(); ++k)
    {
        const double r = sigmoid_value(a, b, theta[k]) - y[k];
        sse += r * r;
    }
    return sse;
}

SigmoidFit lm_run(double a0, double b0, std::span<const double> theta, std::span<const double> y,
                  int max_iters)
{
    LmState st{std::log(a0), std::log(b0), sigmoid_sse(a0, b0, theta, y)};
    double lambda = 1e-3;
    SigmoidFit fit;
    int iter = 0;
    for (; iter < max_iters && !fit.converged; ++iter)
    {
        const double a = std::exp(st.u);
        const double b = std::exp(st.v);
        // Normal equations for the 2-parameter Gauss-Newton step.
        double jtj00 = 0.0;
        double jtj01 = 0.0;
        double jtj11 = 0.0;
        double jtr0 = 0.0;
        double jtr1 = 0.0;
        for (std::size_t k = 0; k < theta.size(); ++k)
        {
            const double e = a * std::exp(-b * (theta[k] - a));
            const double f = 1.0 / (1.0 + e);
            const double r = f - y[k];
            const double denom = (1.0 + e) * (1.0 + e);
            const double dfdu = -e * (1.0 + a * b) / denom; // df/d(ln a)
            const double dfdv = e * (theta[k] - a) * b / denom; // df/d(ln b)
            jtj00 += dfdu * dfdu;
            jtj01 += dfdu * dfdv;
            jtj11 += dfdv * dfdv;
            jtr0 += dfdu * r;
            jtr1 += dfdv * r;
        }
        bool accepted = false;
        for (int attempt = 0; attempt < 40; ++attempt)
        {
            const double m00 = jtj00 * (1.0 + lambda);
            const double m11 = jtj11 * (1.0 + lambda);
            const double det = m00 * m11 - jtj01 * jtj01;
            if (det == 0.0 || !std::isfinite(det))
                break;
            const double du = (-jtr0 * m11 + jtr1 * jtj01) / det;
            const double dv = (-jtr1 * m00 + jtr0 * jtj01) / det;
            const double nu = st.u + du;
            const double nv = st.v + dv;
            const double nsse = sigmoid_sse(std::exp(nu), std::exp(nv), theta, y);
            if (std::isfinite(nsse) && nsse <= st.sse)
            {
                const double step = std::max(std::abs(du), std::abs(dv));
                st = {nu, nv, nsse};
                lambda = std::max(lambda / 3.0, 1e-12);
                accepted = true;
                if (step < 1e-11)
                    fit.converged = true;
                break;
            }
            lambda *= 4.0;
        }
        if (!accepted)
            break;
    }
    fit.a = std::exp(st.u);
    fit.b = std::exp(st.v);
    fit.rmse = std::sqrt(st.sse / static_cast<double>(theta.size()));
    fit.iterations = iter;
    return fit;
}

} // namespace

SigmoidFit fit_sigmoid(std::span<const double> theta_deg, std::span<const double> reference)
{
    if (theta_deg.size() != reference.size())
        throw std::invalid_argument("fit_sigmoid: grid/curve size mismatch");
    if (theta_deg.size() < 8)
        throw std::invalid_argument("fit_sigmoid: need at least 8 grid points");
    const auto [lo, hi] = std::minmax_element(theta_deg.begin(), theta_deg.end());
    if (*hi - *lo < 40.0)
        throw std::invalid_argument("fit_sigmoid: grid must span at least 40 degrees");

    static constexpr double kStartA[] = {2.0, 5.0, 10.0, 20.0, 40.0};
    static constexpr double kStartB[] = {0.05, 0.1, 0.2, 0.5};
    SigmoidFit best;
    double best_sse = std::numeric_limits<double>::infinity();
    for (double a0 : kStartA)
    {
        for (double b0 : kStartB)
        {
            const SigmoidFit fit = lm_run(a0, b0, theta_deg, reference, 300);
            const double sse = fit.rmse * fit.rmse;
            if (sse < best_sse || (sse == best_sse && fit.converged && !best.converged))
            {
                best = fit;
                best_sse = sse;
            }
        }
    }
    // A flat target cannot pin (a, b): any small enough a fits.
    const auto [ref_lo, ref_hi] = std::minmax_element(reference.begin(), reference.end());
    best.degenerate = *ref_hi - *ref_lo < 1e-3;
    return best;
}

const SigmoidFit& fitted_sigmoid_for(const Environment& env)
{
    using Key = std::tuple<double, double, double>;
    static std::mutex mutex;
    static std::map<Key, SigmoidFit> cache;

    const Key key{env.alpha(), env.beta_per_km2(), env.gamma_m()};
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end())
    {
        std::vector<double> grid;
        std::vector<double> curve;
        for (int t = 10; t <= 85; ++t)
        {
            grid.push_back(static_cast<double>(t));
            curve.push_back(itu_limit(env, grid.back()).p);
        }
        it = cache.emplace(key, fit_sigmoid(grid, curve)).first;
    }
    return it->second;
}

// --- Fresnel-corrected ITU ----------------------------------------------------

PlosResult fresnel(const Environment& env, double h_tx, double h_rx, double r_m,
                   double wavelength_m)
{
    if (!(wavelength_m > 0.0))
        throw std::invalid_argument("plos::fresnel requires wavelength > 0");
    if (!(h_rx >= 0.0) || !(h_tx > h_rx))
        throw std::invalid_argument("plos::fresnel requires h_tx > h_rx >= 0");
    if (r_m < 0.0)
        throw std::invalid_argument("plos::fresnel requires r >= 0");
    if (r_m == 0.0)
        return {1.0, 1.0};
    const int m = itu_obstruction_count(env, r_m);
    if (m < 0)
        return {1.0, 1.0};
    const double gamma = env.gamma_m();
    const double dh = h_tx - h_rx;
    const double d3d = std::sqrt(r_m * r_m + dh * dh);
    const double sqrt_lr = std::sqrt(wavelength_m * r_m);
    double raw = 1.0;
    for (int i = 0; i <= m; ++i)
    {
        const double di = (i + 0.5) * r_m / (m + 1);
        const double clearance =
            h_tx - di * dh / r_m - sqrt_lr * std::min(di, r_m - di) / d3d;
        raw *= 1.0 - std::exp(-clearance * clearance / (2.0 * gamma * gamma));
    }
    return clamped(raw);
}

// --- Cubic S-curve --------------------------------------------------------------

PlosResult scurve3(const std::string& environment, double theta_deg)
{
    if (!(theta_deg > 0.0) || !(theta_deg <= 90.0))
        throw std::invalid_argument("plos::scurve3 requires theta in (0, 90] degrees");
    const auto& row = tables::scurve_for(environment);
    const double t = theta_deg;
    const double poly = row.a * t * t * t + row.b * t * t + row.c * t + row.d;
    return clamped(1.0 / (1.0 + std::exp(poly)));
}

// --- First obstruction ------------------------------------------------------------

double first_building_rate_per_m(const Environment& env)
{
    const double x = env.street_width_m() / env.building_width_m();
    const double poly = 613.0 / 753.0 - (901.0 / 2116.0) * x + (1258.0 / 8477.0) * x * x -
                        (239.0 / 10712.0) * x * x * x;
    return poly / env.street_width_m();
}

PlosResult first_building(const Environment& env, double r_m, double h_tx)
{
    if (!(r_m > 0.0) || !(h_tx > 0.0))
        throw std::invalid_argument("plos::first_building requires r > 0 and h_tx > 0");
    const double rate = first_building_rate_per_m(env);
    if (!(rate > 0.0))
        throw std::invalid_argument("plos::first_building: S/W outside the fit's sane range");
    const double gamma = env.gamma_m();
    const double rho = h_tx * h_tx / (2.0 * gamma * gamma * r_m * r_m);
    const double sqrt_rho = std::sqrt(rho);
    const double a = rate / (2.0 * sqrt_rho);
    const double b = a + sqrt_rho * r_m;
    // exp(a^2) * (erf(b) - erf(a)) = erfcx(a) - exp(a^2-b^2) * erfcx(b),
    // evaluated in scaled form so small rho does not overflow.
    const double scaled = erfcx_pos(a) - std::exp(a * a - b * b) * erfcx_pos(b);
    const double raw = 1.0 - rate * kSqrtPi / (2.0 * sqrt_rho) * scaled;
    return clamped(raw);
}

// --- Region mixture ---------------------------------------------------------------

double region3d_single_factor(double gamma, double h_min, double h_max, bool span_normalization)
{
    if (!(gamma > 0.0) || !(h_min >= 0.0) || !(h_max >= h_min) || !(h_max > 0.0))
        throw std::invalid_argument("region3d_single_factor: need 0 <= h_min <= h_max, h_max > 0");
    const double scale = kSqrt2 * gamma;
    const double integral =
        gamma * std::sqrt(kPi / 2.0) * (std::erf(h_max / scale) - std::erf(h_min / scale));
    if (span_normalization)
    {
        const double span = h_max - h_min;
        if (span <= 1e-12 * h_max)
            return rayleigh_cdf(h_min, gamma); // point limit
        return 1.0 - integral / span;
    }
    return 1.0 - integral / h_max;
}

namespace {

struct RegionTrace
{
    double x0;      // region center
    double y0;
    double extent_x; // full region extents; the user is uniform over the box
    double extent_y;
};

// Per-region obstruction product, averaged over a midpoint sub-grid of user
// positions in the region box. Each sub-cell traces its own crossing
// sequence; every crossed building contributes a factor over the span of
// near-face distances the sub-cell projects onto the ray. In the
// axis-aligned single-grid case this is exactly the tabulated interval
// construction (street-width span, (S+W) pitch).
double region_product(const Environment& env, double tan_theta, double phi_deg,
                      const RegionTrace& region, const Region3dOptions& opts)
{
    const double pitch = env.pitch_m();
    const double side = opts.swap_sw ? env.street_width_m() : env.building_width_m();
    const double gamma = env.gamma_m();
    const double phi = deg2rad(phi_deg);
    const double dir_x = std::cos(phi);
    const double dir_y = std::sin(phi);
    const int n = std::max(1, opts.pos_grid);
    const double cell_x = region.extent_x / n;
    const double cell_y = region.extent_y / n;
    // Half-span of one sub-cell along the ray direction.
    const double half_span = (cell_x * std::abs(dir_x) + cell_y * std::abs(dir_y)) / 2.0;

    // Walk far enough that the remaining blocking tail is negligible.
    const double stop_height = kTailHeightRatio * gamma;
    double max_dist = (stop_height - opts.user_height_m) / tan_theta + half_span + 3.0 * pitch;
    max_dist = std::min(max_dist, opts.max_range_m);
    if (!(max_dist > 0.0))
        return 1.0;

    double sum = 0.0;
    for (int ix = 0; ix < n; ++ix)
    {
        for (int iy = 0; iy < n; ++iy)
        {
            const double x0 =
                region.x0 + (ix + 0.5) * cell_x - region.extent_x / 2.0;
            const double y0 =
                region.y0 + (iy + 0.5) * cell_y - region.extent_y / 2.0;
            double product = 1.0;
            walk_lattice_crossings(
                pitch, side, x0, y0, dir_x, dir_y, max_dist,
                [&](double entry, double exit, std::int64_t, std::int64_t) {
                    (void)exit;
                    if (entry > opts.max_range_m)
                        return false; // beyond the transmitter's ground range
                    const double lo = std::max(0.0, entry - half_span);
                    const double hi = entry + half_span;
                    const double h_min = opts.user_height_m + lo * tan_theta;
                    const double h_max = opts.user_height_m + hi * tan_theta;
                    if (h_min >= stop_height)
                        return false;
                    if (h_max > 0.0)
                        product *= region3d_single_factor(gamma, h_min, h_max,
                                                          opts.span_normalization);
                    return product > 1e-14;
                });
            sum += product;
        }
    }
    return sum / static_cast<double>(n * n);
}

} // namespace

PlosResult region3d(const Environment& env, double theta_deg, double phi_deg,
                    const Region3dOptions& opts)
{
    if (!(theta_deg > 0.0) || !(theta_deg <= 90.0))
        throw std::invalid_argument("plos::region3d requires theta in (0, 90] degrees");
    double phi = std::fmod(phi_deg, 90.0);
    if (phi < 0.0)
        phi += 90.0;

    const double w = env.building_width_m();
    const double s = env.street_width_m();
    const double pitch = env.pitch_m();
    const double area = (s + w) * (s + w) - w * w;
    const double w_street = s * w / area;
    const double w_cross = s * s / area;
    if (std::abs(2.0 * w_street + w_cross - 1.0) > 1e-12)
        throw std::logic_error("region3d: region weights do not sum to 1");

    const double tan_theta = std::tan(deg2rad(theta_deg));
    // Region boxes in the canonical cell: the two street strips flanking the
    // building at (pitch/2, pitch/2), and the intersection square.
    const RegionTrace r1{pitch, pitch / 2.0, s, w};
    const RegionTrace r2{pitch / 2.0, pitch, w, s};
    const RegionTrace r3{pitch, pitch, s, s};

    const double p1 = region_product(env, tan_theta, phi, r1, opts);
    const double p2 = region_product(env, tan_theta, phi, r2, opts);
    const double p3 = region_product(env, tan_theta, phi, r3, opts);
    const double raw = w_street * (p1 + p2) + w_cross * p3;
    return clamped(raw);
}

PlosResult region3d_avg(const Environment& env, double theta_deg, const Region3dOptions& opts)
{
    const double integral = quadrature::integrate_gl(
        [&](double phi) { return region3d(env, theta_deg, phi, opts).raw; }, 0.0, 90.0,
        opts.phi_order);
    return clamped(integral / 90.0);
}

PlosResult region3d_ladder(const Environment& env, double theta_deg, bool swap_sw,
                           bool span_normalization)
{
    if (!(theta_deg > 0.0) || !(theta_deg <= 90.0))
        throw std::invalid_argument("plos::region3d_ladder requires theta in (0, 90] degrees");
    const double pitch = env.pitch_m();
    const double depth = swap_sw ? env.building_width_m() : env.street_width_m();
    const double gamma = env.gamma_m();
    const double tan_theta = std::tan(deg2rad(theta_deg));
    const double stop_height = kTailHeightRatio * gamma;

    double raw = 1.0;
    for (int i = 1; i < 1000000; ++i)
    {
        const double k1 = (i - 1) * pitch;
        const double k2 = k1 + depth;
        const double h_min = k1 * tan_theta;
        const double h_max = k2 * tan_theta;
        if (h_min >= stop_height || raw <= 1e-14)
            break;
        raw *= region3d_single_factor(gamma, h_min, h_max, span_normalization);
    }
    return clamped(raw);
}

// --- 3GPP ---------------------------------------------------------------------------

GppScenario gpp_scenario_from_string(const std::string& name)
{
    if (name == "rma")
        return GppScenario::RMa;
    if (name == "uma")
        return GppScenario::UMa;
    if (name == "umi")
        return GppScenario::UMi;
    throw std::invalid_argument("unknown 3GPP scenario '" + name + "' (rma, uma or umi)");
}

std::string to_string(GppScenario scenario)
{
    switch (scenario)
    {
        case GppScenario::RMa: return "rma";
        case GppScenario::UMa: return "uma";
        case GppScenario::UMi: return "umi";
    }
    throw std::logic_error("bad scenario");
}

GppPlosParams gpp_params(GppScenario scenario, double h_tx)
{
    if (!(h_tx >= 1.5) || !(h_tx <= 300.0))
        throw std::invalid_argument("plos::gpp: h_tx outside the 1.5-300 m validity range");
    const std::string name = to_string(scenario);
    auto value = [h_tx](const tables::GppPlosCoeffRow& row) {
        double v = row.scale * std::log10(h_tx) + row.offset;
        if (row.has_floor)
            v = std::max(v, row.floor);
        return v;
    };
    GppPlosParams params{value(tables::gpp_plos_coeff(name, "p1")),
                         value(tables::gpp_plos_coeff(name, "d1"))};
    if (!(params.p1 > 0.0))
        throw std::invalid_argument("plos::gpp: h_tx below the scenario's validity sub-range");
    return params;
}

PlosResult gpp(GppScenario scenario, double r_m, double h_tx)
{
    if (r_m < 0.0)
        throw std::invalid_argument("plos::gpp requires r >= 0");
    const GppPlosParams params = gpp_params(scenario, h_tx);
    if (r_m <= params.d1)
        return {1.0, 1.0};
    const double ratio = params.d1 / r_m;
    const double raw = ratio + std::exp(-r_m / params.p1) * (1.0 - ratio);
    return clamped(raw);
}

// --- Cylinder -------------------------------------------------------------------------

double lognormal_tail(double h, double mu, double sigma)
{
    if (h <= 0.0)
        return 1.0;
    return 0.5 * std::erfc((std::log(h) - mu) / (kSqrt2 * sigma));
}

PlosResult cylinder(const CylinderParams& params, double r_m, double h1_m, double h2_m)
{
    if (!(params.r_o_m > 0.0) || !(params.sigma_o > 0.0) || !(params.lambda_o_per_m2 >= 0.0))
        throw std::invalid_argument("plos::cylinder: invalid building parameters");
    if (!(r_m > 0.0) || !(h1_m >= 0.0) || !(h2_m >= 0.0))
        throw std::invalid_argument("plos::cylinder requires r > 0 and nonnegative heights");
    const double limit = r_m - kPi / 2.0 * params.r_o_m;
    if (limit <= 0.0)
        return {1.0, 1.0}; // empty integration range
    const auto [lo, hi] = std::minmax(h1_m, h2_m);
    const double integral = quadrature::adaptive_simpson(
        [&](double x) {
            const double h = lo + x / r_m * (hi - lo);
            return lognormal_tail(h, params.mu_o, params.sigma_o);
        },
        0.0, limit, 1e-8);
    const double raw = std::exp(-2.0 * params.r_o_m * params.lambda_o_per_m2 * integral);
    return clamped(raw);
}

} // namespace a2g::plos

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

#ifndef A2G_PLOS_HPP
#define A2G_PLOS_HPP

#include "a2g/environment.hpp"

#include <limits>
#include <span>
#include <string>

namespace a2g::plos {

/// LoS probability with the raw pre-clamp value kept for diagnostics.
struct PlosResult
{
    double p;
    double raw;
};

// --- ITU Manhattan product model -----------------------------------------

/// Number of potential obstructions m = floor(r_km * sqrt(alpha*beta) - 1).
/// r is interpreted in km; beta is per km^2, so this is the only
/// dimensionally consistent reading.
int itu_obstruction_count(const Environment& env, double r_m);

/// Product over evenly spaced obstruction midpoints of the Rayleigh height CDF.
PlosResult itu(const Environment& env, double h_tx, double h_rx, double r_m);

/// Scale-converged elevation curve of the product model: obstructions at the
/// effective spacing 1000/sqrt(alpha*beta) sampled at midpoints, with the
/// transmitter taken to infinity along the elevation ray. Smooth in theta
/// (no finite-m staircase); this is the curve the sigmoid approximates.
PlosResult itu_limit(const Environment& env, double theta_deg);

// --- Sigmoid S-curve -------------------------------------------------------

/// 1 / (1 + a*exp(-b*(theta - a))), theta in degrees.
PlosResult sigmoid(double a, double b, double theta_deg);

struct SigmoidFit
{
    double a = 0.0;
    double b = 0.0;
    double rmse = std::numeric_limits<double>::quiet_NaN();
    int iterations = 0;
    bool converged = false;
    bool degenerate = false; // saturated target: (a, b) not identifiable
};

/// Least-squares (a, b) against a reference curve sampled on theta_deg.
/// Deterministic multi-start Levenberg-Marquardt in log-parameter space.
/// Requires >= 8 points spanning >= 40 degrees. Non-convergence and
/// degeneracy are reported on the result, with the residual, not thrown.
SigmoidFit fit_sigmoid(std::span<const double> theta_deg, std::span<const double> reference);

/// Per-environment (a, b): least squares against itu_limit on theta
/// 10..85 deg, 1 deg steps. Computed once and cached; safe for concurrent
/// readers.
const SigmoidFit& fitted_sigmoid_for(const Environment& env);

// --- Fresnel-zone corrected ITU variant ------------------------------------

/// ITU product with the obstruction clearance reduced by the Fresnel-radius
/// term at wavelength lambda. d_i = (i+1/2)*r/(m+1) (the ITU midpoints) and
/// d_TR = r, so the lambda -> 0 limit reproduces itu() exactly.
PlosResult fresnel(const Environment& env, double h_tx, double h_rx, double r_m,
                   double wavelength_m);

// --- Cubic-exponent S-curve (tabulated) -------------------------------------

/// 1 / (1 + exp(a t^3 + b t^2 + c t + d)) with per-environment coefficients.
/// Only the four standard environment names are valid.
PlosResult scurve3(const std::string& environment, double theta_deg);

// --- First-obstruction exponential model -------------------------------------

/// Rate of the exponential distance to the first obstruction (per meter).
double first_building_rate_per_m(const Environment& env);

/// Closed-form LoS probability considering only the first obstruction,
/// with rho = h_tx^2 / (2 gamma^2 r^2).
PlosResult first_building(const Environment& env, double r_m, double h_tx);

// --- Elevation/azimuth region-mixture model ----------------------------------

struct Region3dOptions
{
    /// Gauss-Legendre order for the azimuth average.
    int phi_order = 32;
    /// Midpoint sub-grid (per axis) of user positions within each region;
    /// 1 traces the region center only.
    int pos_grid = 4;
    /// Normalize each factor by the face-distance span (h_max - h_min). This
    /// is the average of the Rayleigh height CDF over the user's position
    /// range, the construction the tabulated intervals encode; the published
    /// h_max divisor only coincides with it when h_min = 0 and is kept as a
    /// sensitivity option (false) and in region3d_ladder.
    bool span_normalization = true;
    /// Swap the S/W roles (sensitivity analysis).
    bool swap_sw = false;
    /// Ray height above ground at the user (0 = user on the ground plane).
    double user_height_m = 0.0;
    /// Truncate the building walk at this horizontal range (UAV distance).
    double max_range_m = std::numeric_limits<double>::infinity();
};

/// Single-obstruction factor: 1 - sqrt(pi/2) * gamma / h_max *
/// (erf(h_max/(sqrt2 gamma)) - erf(h_min/(sqrt2 gamma))).
double region3d_single_factor(double gamma, double h_min, double h_max,
                              bool span_normalization = false);

/// Region-weighted LoS probability at elevation theta and lattice-relative
/// azimuth phi. Streets and intersection weights SW/A, SW/A, S^2/A with
/// A = (S+W)^2 - W^2; the per-region obstruction sequence comes from exact
/// lattice ray tracing from the region center.
PlosResult region3d(const Environment& env, double theta_deg, double phi_deg,
                    const Region3dOptions& opts = {});

/// Azimuth-averaged variant (Gauss-Legendre over [0, 90) degrees).
PlosResult region3d_avg(const Environment& env, double theta_deg,
                        const Region3dOptions& opts = {});

/// The tabular obstruction ladder exactly as published: interval
/// [(i-1)(S+W), (i-1)(S+W)+S] (or +W with swap_sw), heights via tan(theta).
PlosResult region3d_ladder(const Environment& env, double theta_deg, bool swap_sw = false,
                           bool span_normalization = false);

// --- 3GPP TR 36.777 model ----------------------------------------------------

enum class GppScenario
{
    RMa,
    UMa,
    UMi
};

GppScenario gpp_scenario_from_string(const std::string& name);
std::string to_string(GppScenario scenario);

struct GppPlosParams
{
    double p1;
    double d1;
};

/// Height-dependent (p1, d1); h_tx must be in [1.5, 300] m and within the
/// sub-range where p1 is positive for the scenario.
GppPlosParams gpp_params(GppScenario scenario, double h_tx);

/// 1 for r <= d1, else d1/r + exp(-r/p1) * (1 - d1/r).
PlosResult gpp(GppScenario scenario, double r_m, double h_tx);

// --- Stochastic-geometry cylinder model ----------------------------------------

struct CylinderParams
{
    double r_o_m;          // mean building radius
    double lambda_o_per_m2; // building density
    double mu_o;           // log-normal location of heights
    double sigma_o;        // log-normal scale of heights
};

/// Log-normal height tail G(h) = 1/2 - 1/2 erf((ln h - mu)/(sqrt2 sigma)).
double lognormal_tail(double h, double mu, double sigma);

/// exp(-2 r_o lambda_o * integral of G along the ray), integrated over
/// [0, r - (pi/2) r_o] by adaptive Simpson (1e-8 absolute). The endpoint
/// heights are canonicalized to (min, max), which makes the result
/// symmetric under swapping h1 and h2.
PlosResult cylinder(const CylinderParams& params, double r_m, double h1_m, double h2_m);

} // namespace a2g::plos

#endif

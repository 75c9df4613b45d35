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

#ifndef A2G_TABLES_HPP
#define A2G_TABLES_HPP

#include <string>
#include <utility>
#include <vector>

// Model coefficients from the published measurement and standards literature, embedded
// as CSV so every constant stays auditable against its source. Parsed once on first use.

namespace a2g::tables {

struct EnvironmentRow
{
    std::string name;
    double alpha;
    double beta_per_km2;
    double gamma_m;
};

struct ScurveRow
{
    std::string environment;
    double a;
    double b;
    double c;
    double d;
};

/// One coefficient set: value(h) = scale * log10(h) + offset, optionally
/// floored: max(value, floor).
struct GppPlosCoeffRow
{
    std::string scenario; // rma | uma | umi
    std::string param;    // p1 | d1
    double scale;
    double offset;
    double floor;
    bool has_floor;
};

struct AbRow
{
    std::string study;
    std::string environment;
    double freq_ghz;
    std::string condition; // los | nlos | no-trees | trees
    double a_db;
    double b;
    std::string note;
};

struct LogDistanceRow
{
    std::string study;
    std::string environment;
    std::string freq_ghz; // label; may be a band like "2-6"
    double pl_d0_db;      // NaN where the study reports none
    std::string link;     // U2G | U2U | LoS | NLoS | L-band | C-band
    double n_min;
    double n_max;
};

struct ShadowRow
{
    std::string study;
    std::string environment;
    std::string freq_ghz;
    std::string condition;  // los | nlos | any
    std::string sigma_kind; // const | exp | exp_floor | range
    double p1;              // const value, exp amplitude, or range min
    double p2;              // exp coefficient or range max (NaN otherwise)
    double p3;              // floor for exp_floor (NaN otherwise)
    double decorr_lo_m;     // NaN where the study reports none
    double decorr_hi_m;
};

const std::vector<EnvironmentRow>& environment_rows();
const std::vector<ScurveRow>& scurve_rows();
const std::vector<GppPlosCoeffRow>& gpp_plos_coeff_rows();
const std::vector<AbRow>& ab_rows();
const std::vector<LogDistanceRow>& log_distance_rows();
const std::vector<ShadowRow>& shadow_rows();

const ScurveRow& scurve_for(const std::string& environment);
const GppPlosCoeffRow& gpp_plos_coeff(const std::string& scenario, const std::string& param);

/// (file name, raw CSV text) for every embedded table, for auditing/dumping.
std::vector<std::pair<std::string, std::string>> raw_tables();

} // namespace a2g::tables

#endif

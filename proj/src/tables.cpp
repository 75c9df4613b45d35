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

#include "a2g/tables.hpp"

#include "a2g/csv.hpp"

#include <cmath>
#include <stdexcept>

namespace a2g::tables {

namespace {

// ITU-R built-up parameters for the standard environments.
const char* const kEnvironmentsCsv =
    "name,alpha,beta_per_km2,gamma_m\n"
    "suburban,0.1,750,8\n"
    "urban,0.3,500,15\n"
    "dense-urban,0.5,300,20\n"
    "high-rise,0.5,300,50\n";

// Cubic S-curve fitting parameters per standard environment (Imran et al.).
const char* const kScurveCsv =
    "environment,a,b,c,d\n"
    "suburban,-2.791e-5,0.004,-0.2193,2.2839\n"
    "urban,-2.397e-5,0.0034,-0.1985,3.7876\n"
    "dense-urban,-1.984e-5,0.0026,-0.1583,4.0667\n"
    "high-rise,-1.130e-5,0.000947,-0.0596,3.5939\n";

// 3GPP TR 36.777 aerial P_LoS coefficients: value(h) = scale*log10(h)+offset,
// floored where a floor is listed.
const char* const kGppPlosCsv =
    "scenario,param,scale,offset,floor\n"
    "rma,p1,15201,-16053,1000\n"
    "rma,d1,1350.8,-1602,18\n"
    "uma,p1,4300,-3800,\n"
    "uma,d1,460,-700,18\n"
    "umi,p1,233.98,-0.95,\n"
    "umi,d1,294.05,-432.94,18\n";

// Alpha-Beta path-loss fits. The Akdeniz2014 73 GHz NLoS values differ between
// the source's table (86.6/2.45) and its running text (82.7/2.69); the table
// row is the default and the text variant is kept with an explicit note.
const char* const kAbPathlossCsv =
    "study,environment,freq_ghz,condition,a_db,b,note\n"
    "Akdeniz2014,dense-urban,28,los,61.4,2.0,\n"
    "Akdeniz2014,dense-urban,28,nlos,72.0,2.92,\n"
    "Akdeniz2014,dense-urban,73,los,69.8,2.0,\n"
    "Akdeniz2014,dense-urban,73,nlos,86.6,2.45,default\n"
    "Akdeniz2014-text,dense-urban,73,nlos,82.7,2.69,text variant\n"
    "G2A-mmWave,suburban-victoria,28,los,84.64,1.55,\n"
    "G2A-mmWave,suburban-victoria,28,nlos,113.63,1.16,\n"
    "G2A-mmWave,suburban-victoria,73,los,93.63,1.52,\n"
    "G2A-mmWave,suburban-victoria,73,nlos,115.40,1.43,\n"
    "G2A-mmWave,urban-paris,28,los,82.54,1.68,\n"
    "G2A-mmWave,urban-paris,28,nlos,97.81,1.87,\n"
    "G2A-mmWave,urban-paris,73,los,90.86,1.69,\n"
    "G2A-mmWave,urban-paris,73,nlos,100.83,2.09,\n"
    "G2A-mmWave,dense-urban-mumbai,28,los,78.58,1.85,\n"
    "G2A-mmWave,dense-urban-mumbai,28,nlos,98.05,1.86,\n"
    "G2A-mmWave,dense-urban-mumbai,73,los,85.71,1.90,\n"
    "G2A-mmWave,dense-urban-mumbai,73,nlos,105.37,1.91,\n"
    "G2A-mmWave,high-rise-nyc,28,los,88.76,1.68,\n"
    "G2A-mmWave,high-rise-nyc,28,nlos,66.25,3.30,\n"
    "G2A-mmWave,high-rise-nyc,73,los,102.10,1.92,\n"
    "G2A-mmWave,high-rise-nyc,73,nlos,88.76,2.22,\n"
    "Irregular-layout,urban,28,no-trees,43.90,3.38,\n"
    "Irregular-layout,urban,28,trees,46.55,3.38,\n"
    "Irregular-layout,dense-urban,28,no-trees,40.83,3.75,\n"
    "Irregular-layout,dense-urban,28,trees,43.52,3.75,\n"
    "Irregular-layout,high-rise,28,no-trees,38.64,4.26,\n"
    "Irregular-layout,high-rise,28,trees,40.26,4.26,\n";

// Log-distance path-loss exponents.
const char* const kLogDistanceCsv =
    "study,environment,freq_ghz,pl_d0_db,link,n_min,n_max\n"
    "Yanmaz2011,open-field,5,46.4,U2G,2.01,2.01\n"
    "Yanmaz2011,open-field,5,46.4,U2U,2.03,2.03\n"
    "RayTracing-urban,urban,2-6,,LoS,2.2,2.2\n"
    "RayTracing-urban,urban,2-6,,NLoS,6,6\n"
    "NASA-terrain,hilly-mountainous,0.968,,L-band,1.6,2.2\n"
    "NASA-terrain,hilly-mountainous,5.060,,C-band,1.5,2.2\n";

// Reported shadow-fading parameters. sigma kinds: const -> p1;
// exp -> p1*exp(p2*h_tx); exp_floor -> max(p3, p1*exp(p2*h_tx));
// range -> [p1, p2]. Decorrelation columns empty where not reported.
const char* const kShadowCsv =
    "study,environment,freq_ghz,condition,sigma_kind,p1,p2,p3,decorr_lo_m,decorr_hi_m\n"
    "TR36777,rma,0.5-100,los,exp,4.2,-0.0046,,,\n"
    "TR36777,rma,0.5-100,nlos,const,6,,,,\n"
    "TR36777,uma,0.5-100,los,exp,4.64,-0.0066,,,\n"
    "TR36777,uma,0.5-100,nlos,const,6,,,,\n"
    "TR36777,umi,0.5-100,los,exp_floor,5,-0.01,2,,\n"
    "TR36777,umi,0.5-100,nlos,const,8,,,,\n"
    "NASA-terrain,hilly-mountainous,0.968,any,range,3.2,3.9,,,\n"
    "NASA-terrain,hilly-mountainous,5.060,any,range,2.2,2.8,,,\n"
    "Suburban-meas,suburban,2.4,los,range,2.13,2.71,,2.32,5.15\n"
    "Suburban-meas,suburban,2.4,nlos,range,2.54,3.29,,0.79,1.38\n"
    "Suburban-meas,suburban,5.9,los,range,2.42,3.5,,1.31,1.92\n"
    "Suburban-meas,suburban,5.9,nlos,range,2.19,2.58,,0.54,0.62\n"
    "Suburban-meas,urban,2.4,nlos,range,3.17,3.4,,59.1,65.2\n"
    "Urban-meas,urban,1.8,any,range,2,4,,9.5,12.9\n";

double field_or_nan(const std::string& field)
{
    return field.empty() ? std::nan("") : csv::parse_double(field);
}

std::vector<std::vector<std::string>> body(const char* text, std::size_t expected_fields)
{
    auto rows = csv::parse(text);
    if (rows.empty())
        throw std::logic_error("embedded table is empty");
    for (const auto& row : rows)
        if (row.size() != expected_fields)
            throw std::logic_error("embedded table row has wrong field count");
    rows.erase(rows.begin()); // header
    return rows;
}

} // namespace

const std::vector<EnvironmentRow>& environment_rows()
{
    static const std::vector<EnvironmentRow> rows = [] {
        std::vector<EnvironmentRow> out;
        for (const auto& r : body(kEnvironmentsCsv, 4))
            out.push_back({r[0], csv::parse_double(r[1]), csv::parse_double(r[2]),
                           csv::parse_double(r[3])});
        return out;
    }();
    return rows;
}

const std::vector<ScurveRow>& scurve_rows()
{
    static const std::vector<ScurveRow> rows = [] {
        std::vector<ScurveRow> out;
        for (const auto& r : body(kScurveCsv, 5))
            out.push_back({r[0], csv::parse_double(r[1]), csv::parse_double(r[2]),
                           csv::parse_double(r[3]), csv::parse_double(r[4])});
        return out;
    }();
    return rows;
}

const std::vector<GppPlosCoeffRow>& gpp_plos_coeff_rows()
{
    static const std::vector<GppPlosCoeffRow> rows = [] {
        std::vector<GppPlosCoeffRow> out;
        for (const auto& r : body(kGppPlosCsv, 5))
        {
            GppPlosCoeffRow row{r[0],
                                r[1],
                                csv::parse_double(r[2]),
                                csv::parse_double(r[3]),
                                0.0,
                                !r[4].empty()};
            if (row.has_floor)
                row.floor = csv::parse_double(r[4]);
            out.push_back(row);
        }
        return out;
    }();
    return rows;
}

const std::vector<AbRow>& ab_rows()
{
    static const std::vector<AbRow> rows = [] {
        std::vector<AbRow> out;
        for (const auto& r : body(kAbPathlossCsv, 7))
            out.push_back({r[0], r[1], csv::parse_double(r[2]), r[3], csv::parse_double(r[4]),
                           csv::parse_double(r[5]), r[6]});
        return out;
    }();
    return rows;
}

const std::vector<LogDistanceRow>& log_distance_rows()
{
    static const std::vector<LogDistanceRow> rows = [] {
        std::vector<LogDistanceRow> out;
        for (const auto& r : body(kLogDistanceCsv, 7))
            out.push_back({r[0], r[1], r[2], field_or_nan(r[3]), r[4], csv::parse_double(r[5]),
                           csv::parse_double(r[6])});
        return out;
    }();
    return rows;
}

const std::vector<ShadowRow>& shadow_rows()
{
    static const std::vector<ShadowRow> rows = [] {
        std::vector<ShadowRow> out;
        for (const auto& r : body(kShadowCsv, 10))
            out.push_back({r[0], r[1], r[2], r[3], r[4], csv::parse_double(r[5]),
                           field_or_nan(r[6]), field_or_nan(r[7]), field_or_nan(r[8]),
                           field_or_nan(r[9])});
        return out;
    }();
    return rows;
}

const ScurveRow& scurve_for(const std::string& environment)
{
    for (const auto& row : scurve_rows())
        if (row.environment == environment)
            return row;
    throw std::invalid_argument("no S-curve coefficients for environment '" + environment + "'");
}

const GppPlosCoeffRow& gpp_plos_coeff(const std::string& scenario, const std::string& param)
{
    for (const auto& row : gpp_plos_coeff_rows())
        if (row.scenario == scenario && row.param == param)
            return row;
    throw std::invalid_argument("no 3GPP P_LoS coefficients for " + scenario + "/" + param);
}

std::vector<std::pair<std::string, std::string>> raw_tables()
{
    return {
        {"environments.csv", kEnvironmentsCsv},   {"plos_scurve.csv", kScurveCsv},
        {"plos_3gpp.csv", kGppPlosCsv},           {"pathloss_ab.csv", kAbPathlossCsv},
        {"pathloss_logdist.csv", kLogDistanceCsv}, {"shadow_fading.csv", kShadowCsv},
    };
}

} // namespace a2g::tables

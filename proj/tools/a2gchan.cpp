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
#include "a2g/csv.hpp"
#include "a2g/environment.hpp"
#include "a2g/errors.hpp"
#include "a2g/fading.hpp"
#include "a2g/geometry.hpp"
#include "a2g/localization.hpp"
#include "a2g/mc.hpp"
#include "a2g/pathloss.hpp"
#include "a2g/plos.hpp"
#include "a2g/tables.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr const char* kToolVersion = "0.1.0";

struct io_error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// Exit codes: 0 ok, 2 usage/config, 3 numerical failure, 4 I/O.
enum ExitCode
{
    kOk = 0,
    kUsage = 2,
    kNumerical = 3,
    kIo = 4
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error("cannot write '" + path + "'");
    out << content;
    if (!out)
        throw io_error("write failed for '" + path + "'");
}

std::string utc_timestamp()
{
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

/// Reproducibility sidecar written next to the first file output.
void write_manifest(const std::string& command, const std::vector<std::string>& argv,
                    std::uint64_t seed, const std::vector<std::string>& outputs,
                    double wall_clock_s)
{
    if (outputs.empty())
        return;
    nlohmann::json doc;
    doc["tool"] = "a2gchan";
    doc["version"] = kToolVersion;
    doc["command"] = command;
    doc["argv"] = argv;
    doc["seed"] = seed;
    doc["outputs"] = outputs;
    doc["wall_clock_s"] = wall_clock_s;
    doc["created_utc"] = utc_timestamp();
    write_file(outputs.front() + ".manifest.json", doc.dump(2) + "\n");
}

std::vector<double> parse_grid(const std::string& spec)
{
    std::vector<double> grid;
    if (spec.find(':') != std::string::npos)
    {
        double lo = 0.0;
        double hi = 0.0;
        double step = 0.0;
        char c1 = 0;
        char c2 = 0;
        std::istringstream in(spec);
        if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || !(step > 0.0) ||
            hi < lo || !in.eof())
            throw std::invalid_argument("bad grid '" + spec + "' (expected lo:hi:step)");
        for (double v = lo; v <= hi + 1e-9; v += step)
            grid.push_back(v);
        return grid;
    }
    for (const auto& row : a2g::csv::parse(spec))
        for (const auto& field : row)
            grid.push_back(a2g::csv::parse_double(field));
    if (grid.empty())
        throw std::invalid_argument("empty grid '" + spec + "'");
    return grid;
}

a2g::Environment parse_environment(const std::string& spec)
{
    if (spec.find(',') == std::string::npos)
        return a2g::environment_by_name(spec);
    const auto rows = a2g::csv::parse(spec);
    if (rows.size() != 1 || rows[0].size() != 3)
        throw std::invalid_argument("bad environment '" + spec +
                                    "' (expected a name or alpha,beta,gamma)");
    return a2g::Environment(a2g::csv::parse_double(rows[0][0]),
                            a2g::csv::parse_double(rows[0][1]),
                            a2g::csv::parse_double(rows[0][2]), "custom");
}

/// A2G_SEED (CI hook) overrides any seed flag or config value.
std::uint64_t resolve_seed(std::uint64_t seed)
{
    if (const char* env = std::getenv("A2G_SEED"))
        return static_cast<std::uint64_t>(std::strtoull(env, nullptr, 10));
    return seed;
}

void emit(const std::string& content, const std::string& out_path, const std::string& command,
          const std::vector<std::string>& argv, std::uint64_t seed, double wall_clock_s)
{
    if (out_path.empty())
    {
        std::cout << content;
        return;
    }
    write_file(out_path, content);
    write_manifest(command, argv, seed, {out_path}, wall_clock_s);
}

int run_cli(const std::vector<std::string>& argv);

// --- plos -------------------------------------------------------------------

struct PlosArgs
{
    std::string env = "urban";
    std::string models = "itu";
    std::string theta_grid;
    std::string r_grid;
    double h_tx = 100.0;
    double h_rx = 1.5;
    double freq_ghz = 2.4;
    std::string out;
    std::uint64_t seed = 1;
    // region-mixture knobs
    bool swap_sw = false;
    bool printed_norm = false;
    int phi_order = 32;
    int pos_grid = 4;
    double phi_deg = std::numeric_limits<double>::quiet_NaN();
    bool free_range = false;
    // cylinder knobs
    double cyl_radius = 10.0;
    double cyl_density = 1e-4;
    double cyl_mu = 3.0;
    double cyl_sigma = 0.5;
};

double eval_plos_model(const std::string& model, const PlosArgs& args,
                       const a2g::Environment& env, double theta, double r)
{
    using namespace a2g;
    if (model == "itu")
        return plos::itu(env, args.h_tx, args.h_rx, r).p;
    if (model == "sigmoid")
    {
        const auto& fit = plos::fitted_sigmoid_for(env);
        if (!fit.converged || fit.degenerate)
            throw numerical_error("sigmoid fit failed (rmse " + std::to_string(fit.rmse) + ")");
        return plos::sigmoid(fit.a, fit.b, theta).p;
    }
    if (model == "fresnel")
        return plos::fresnel(env, args.h_tx, args.h_rx, r, kSpeedOfLight / (args.freq_ghz * 1e9))
            .p;
    if (model == "scurve3")
        return plos::scurve3(env.name(), theta).p;
    if (model == "first-building")
        return r > 0.0 ? plos::first_building(env, r, args.h_tx).p : 1.0;
    if (model == "region3d-ladder")
        return plos::region3d_ladder(env, theta, args.swap_sw, !args.printed_norm).p;
    if (model == "region3d")
    {
        plos::Region3dOptions opts;
        opts.phi_order = args.phi_order;
        opts.pos_grid = args.pos_grid;
        opts.swap_sw = args.swap_sw;
        opts.span_normalization = !args.printed_norm;
        if (!args.free_range)
        {
            opts.user_height_m = args.h_rx;
            opts.max_range_m = r > 0.0 ? r : 1e-6;
        }
        if (std::isnan(args.phi_deg))
            return plos::region3d_avg(env, theta, opts).p;
        return plos::region3d(env, theta, args.phi_deg, opts).p;
    }
    if (model == "3gpp-rma")
        return plos::gpp(plos::GppScenario::RMa, r, args.h_tx).p;
    if (model == "3gpp-uma")
        return plos::gpp(plos::GppScenario::UMa, r, args.h_tx).p;
    if (model == "3gpp-umi")
        return plos::gpp(plos::GppScenario::UMi, r, args.h_tx).p;
    if (model == "cylinder")
        return plos::cylinder({args.cyl_radius, args.cyl_density, args.cyl_mu, args.cyl_sigma},
                              r, args.h_rx, args.h_tx)
            .p;
    throw std::invalid_argument("unknown P_LoS model '" + model + "'");
}

int cmd_plos(const PlosArgs& args, const std::vector<std::string>& argv)
{
    using namespace a2g;
    const auto start = std::chrono::steady_clock::now();
    const Environment env = parse_environment(args.env);
    if (!(args.h_tx > args.h_rx))
        throw std::invalid_argument("need h_tx > h_rx");

    std::vector<std::pair<double, double>> points; // (theta_deg, r_m)
    if (!args.theta_grid.empty() && !args.r_grid.empty())
        throw std::invalid_argument("pass either --theta-grid or --r-grid, not both");
    if (!args.theta_grid.empty())
    {
        for (double theta : parse_grid(args.theta_grid))
        {
            if (!(theta > 0.0) || theta > 90.0)
                throw std::invalid_argument("theta grid values must be in (0, 90]");
            const double r =
                theta == 90.0 ? 0.0 : (args.h_tx - args.h_rx) / std::tan(deg2rad(theta));
            points.emplace_back(theta, r);
        }
    }
    else
    {
        const std::string grid = args.r_grid.empty() ? "100:2000:100" : args.r_grid;
        for (double r : parse_grid(grid))
        {
            if (r < 0.0)
                throw std::invalid_argument("r grid values must be >= 0");
            points.emplace_back(rad2deg(std::atan2(args.h_tx - args.h_rx, r)), r);
        }
    }

    std::vector<std::string> models;
    for (const auto& row : csv::parse(args.models))
        for (const auto& field : row)
            models.push_back(field);
    if (models.empty())
        throw std::invalid_argument("empty model list");

    std::string out = "theta_deg,r_m,model,plos\n";
    for (const auto& model : models)
        for (const auto& [theta, r] : points)
            out += csv::join_row({csv::format_double(theta), csv::format_double(r), model,
                                  csv::format_double(eval_plos_model(model, args, env, theta, r))});

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(out, args.out, "plos", argv, args.seed, wall);
    return kOk;
}

// --- sim ----------------------------------------------------------------------

a2g::mc::CampaignConfig parse_campaign_config(const std::string& path)
{
    using namespace a2g;
    mc::CampaignConfig cfg;
    const std::string text = read_file(path);

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        const auto is_space = [](char c) { return c == ' ' || c == '\t'; };
        auto trim = [&is_space](std::string s) {
            while (!s.empty() && is_space(s.back()))
                s.pop_back();
            std::size_t b = 0;
            while (b < s.size() && is_space(s[b]))
                ++b;
            return s.substr(b);
        };
        line = trim(line);
        if (line.empty())
            continue;

        const auto anchored = [&](const std::string& message) {
            return std::invalid_argument(path + ":" + std::to_string(line_no) + ": " + message);
        };
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw anchored("expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw anchored("expected key = value");

        try
        {
            if (key == "env")
                cfg.env = parse_environment(value);
            else if (key == "theta_grid")
                cfg.theta_grid_deg = parse_grid(value);
            else if (key == "trials")
                cfg.trials_per_point = static_cast<int>(csv::parse_double(value));
            else if (key == "h_rx")
                cfg.h_rx_m = csv::parse_double(value);
            else if (key == "h_tx")
                cfg.h_tx_m = csv::parse_double(value);
            else if (key == "range")
            {
                cfg.range_m = csv::parse_double(value);
                cfg.placement = mc::PlacementRule::FixedRange;
            }
            else if (key == "placement")
            {
                if (value == "fixed-height")
                    cfg.placement = mc::PlacementRule::FixedHeight;
                else if (value == "fixed-range")
                    cfg.placement = mc::PlacementRule::FixedRange;
                else
                    throw anchored("placement must be fixed-height or fixed-range");
            }
            else if (key == "models")
            {
                cfg.models.clear();
                for (const auto& row : csv::parse(value))
                    for (const auto& field : row)
                        cfg.models.push_back(field);
            }
            else if (key == "seed")
                cfg.master_seed = static_cast<std::uint64_t>(csv::parse_double(value));
            else if (key == "fresh_city")
                cfg.fresh_city = value == "true" || value == "1";
            else if (key == "oracle")
            {
                if (value == "geometric")
                    cfg.oracle = mc::OracleKind::Geometric;
                else if (value == "itu-assumptions")
                    cfg.oracle = mc::OracleKind::ItuAssumptions;
                else
                    throw anchored("oracle must be geometric or itu-assumptions");
            }
            else if (key == "freq_ghz")
                cfg.freq_ghz = csv::parse_double(value);
            else if (key == "extent_margin_pitches")
                cfg.extent_margin_pitches = csv::parse_double(value);
            else
                throw anchored("unknown key '" + key + "'");
        }
        catch (const std::invalid_argument& e)
        {
            const std::string what = e.what();
            if (what.rfind(path + ":", 0) == 0)
                throw;
            throw anchored(what);
        }
    }
    return cfg;
}

struct SimArgs
{
    std::string config;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    bool seed_given = false;
    unsigned workers = 1;
};

int cmd_sim(const SimArgs& args, const std::vector<std::string>& argv)
{
    using namespace a2g;
    const auto start = std::chrono::steady_clock::now();
    mc::CampaignConfig cfg = parse_campaign_config(args.config);
    if (args.seed_given)
        cfg.master_seed = args.seed;
    cfg.master_seed = resolve_seed(cfg.master_seed);
    cfg.workers = std::max(1u, args.workers);

    const auto report = mc::compare_models(cfg);

    std::filesystem::create_directories(args.out_dir);
    const std::string curves_path = args.out_dir + "/curves.csv";
    const std::string report_path = args.out_dir + "/report.csv";
    write_file(curves_path, mc::curves_csv(report));
    write_file(report_path, mc::report_csv(report));
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_manifest("sim", argv, cfg.master_seed, {curves_path, report_path}, wall);

    for (const auto& row : report.ranking)
        std::cout << row.model << ": rmse " << csv::format_double(row.rmse) << " (rank "
                  << row.rank << ")\n";
    return kOk;
}

// --- pathloss --------------------------------------------------------------------

struct PathlossArgs
{
    std::string model = "fspl";
    std::string d_grid = "10:2000:10";
    double freq_ghz = 2.4;
    std::string scenario = "uma";
    std::string condition = "los";
    double h_tx = 100.0;
    double h_rx = 1.5;
    double n = 2.0;
    double d0 = 1.0;
    double a_db = 61.4;
    double b = 2.0;
    double plos_value = 0.5;
    double pl_los = 80.0;
    double pl_nlos = 100.0;
    std::string out;
};

int cmd_pathloss(const PathlossArgs& args, const std::vector<std::string>& argv)
{
    using namespace a2g;
    const auto start = std::chrono::steady_clock::now();

    if (args.model == "combined")
    {
        std::cout << csv::format_double(
                         pathloss::combined_db(args.plos_value, args.pl_los, args.pl_nlos))
                  << "\n";
        return kOk;
    }

    const double f_hz = args.freq_ghz * 1e9;
    std::string out = "d_m,model,pl_db\n";
    for (double d : parse_grid(args.d_grid))
    {
        double value = 0.0;
        if (args.model == "fspl")
            value = pathloss::fspl_db(d, f_hz);
        else if (args.model == "3gpp")
            value = pathloss::gpp_db(pathloss::scenario_from_string(args.scenario),
                                     pathloss::condition_from_string(args.condition), d,
                                     args.h_tx, args.freq_ghz);
        else if (args.model == "log-distance")
            value = pathloss::log_distance_db({args.n, args.d0, f_hz, 0.0}, d);
        else if (args.model == "ab")
            value = pathloss::ab_db({args.a_db, args.b}, d);
        else if (args.model == "two-ray")
            value = pathloss::two_ray_db(d, args.h_tx, args.h_rx, f_hz);
        else
            throw std::invalid_argument("unknown path-loss model '" + args.model + "'");
        out += csv::join_row({csv::format_double(d), args.model, csv::format_double(value)});
    }
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(out, args.out, "pathloss", argv, 0, wall);
    return kOk;
}

// --- fade ----------------------------------------------------------------------

struct FadeArgs
{
    std::string mode = "shadow";
    double sigma = std::numeric_limits<double>::quiet_NaN();
    std::string scenario = "uma";
    std::string condition = "los";
    double h_tx = 100.0;
    double d_decorr = a2g::fading::kDefaultDecorrM;
    double step = 1.0;
    std::size_t n = 1000;
    std::uint64_t seed = 1;
    double k_db = a2g::fading::kDefaultKLosDb;
    bool rayleigh = false;
    std::string out;
};

int cmd_fade(const FadeArgs& args, const std::vector<std::string>& argv)
{
    using namespace a2g;
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t seed = resolve_seed(args.seed);

    std::string out;
    if (args.mode == "shadow")
    {
        double sigma = args.sigma;
        if (std::isnan(sigma))
            sigma = fading::shadow_sigma_db(pathloss::scenario_from_string(args.scenario),
                                            pathloss::condition_from_string(args.condition),
                                            args.h_tx);
        const auto trace = fading::shadow_trace({sigma, args.d_decorr, args.step}, args.n, seed);
        out = "index,distance_m,value_db\n";
        for (std::size_t k = 0; k < trace.size(); ++k)
            out += csv::join_row({std::to_string(k),
                                  csv::format_double(static_cast<double>(k) * args.step),
                                  csv::format_double(trace[k])});
    }
    else if (args.mode == "gain")
    {
        const auto cfg = args.rayleigh ? fading::RicianConfig::rayleigh_tag()
                                       : fading::RicianConfig::rician(args.k_db);
        const auto gains = fading::small_scale_gain(cfg, args.n, seed);
        out = "index,gain\n";
        for (std::size_t k = 0; k < gains.size(); ++k)
            out += csv::join_row({std::to_string(k), csv::format_double(gains[k])});
    }
    else
    {
        throw std::invalid_argument("fade mode must be shadow or gain");
    }
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(out, args.out, "fade", argv, seed, wall);
    return kOk;
}

// --- localize --------------------------------------------------------------------

struct LocalizeArgs
{
    std::string measurements;
    std::string region;
    double resolution = 1.0;
    double p_ref = -40.0;
    double d_ref = 1.0;
    double n_p = 2.0;
    double emitter_z = 0.0;
    unsigned workers = 1;
    std::string map_out;
};

int cmd_localize(const LocalizeArgs& args, const std::vector<std::string>& argv)
{
    using namespace a2g;
    const auto start = std::chrono::steady_clock::now();

    const localization::RssiModel model{args.p_ref, args.d_ref, args.n_p};
    std::vector<localization::RssiMeasurement> measurements;
    for (const auto& row : csv::parse(read_file(args.measurements)))
    {
        if (row.size() != 5)
            throw std::invalid_argument("measurements CSV needs x,y,z,rssi_dbm,sigma_db rows");
        if (row[0] == "x") // header
            continue;
        measurements.push_back({{csv::parse_double(row[0]), csv::parse_double(row[1]),
                                 csv::parse_double(row[2])},
                                csv::parse_double(row[3]), csv::parse_double(row[4])});
    }

    double x0 = 0.0;
    double x1 = 0.0;
    double y0 = 0.0;
    double y1 = 0.0;
    {
        char c1 = 0;
        char c2 = 0;
        char c3 = 0;
        std::istringstream in(args.region);
        if (!(in >> x0 >> c1 >> x1 >> c2 >> y0 >> c3 >> y1) || c1 != ':' || c2 != ':' ||
            c3 != ':' || !in.eof())
            throw std::invalid_argument("bad region '" + args.region +
                                        "' (expected x0:x1:y0:y1)");
    }
    const localization::SearchRegion region{x0, x1, y0, y1, args.emitter_z};

    const auto result =
        localization::mle_localize(model, measurements, region, args.resolution, args.workers);

    std::size_t clamped = 0;
    for (const auto& m : measurements)
    {
        const double dx = result.estimate.x - m.uav.x;
        const double dy = result.estimate.y - m.uav.y;
        const double dz = result.estimate.z - m.uav.z;
        if (std::sqrt(dx * dx + dy * dy + dz * dz) < args.d_ref)
            ++clamped;
    }
    if (clamped > 0)
        std::cerr << "warning: " << clamped
                  << " measurement(s) closer than d_ref at the estimate; distances clamped\n";

    std::cout << "estimate_x_m,estimate_y_m,loglik\n"
              << csv::format_double(result.estimate.x) << ","
              << csv::format_double(result.estimate.y) << ","
              << csv::format_double(result.map.at(result.argmax_ix, result.argmax_iy)) << "\n";

    if (!args.map_out.empty())
    {
        std::string out = "x_m,y_m,loglik\n";
        for (std::size_t iy = 0; iy < result.map.ny; ++iy)
            for (std::size_t ix = 0; ix < result.map.nx; ++ix)
                out += csv::join_row({csv::format_double(result.map.x_of(ix)),
                                      csv::format_double(result.map.y_of(iy)),
                                      csv::format_double(result.map.at(ix, iy))});
        write_file(args.map_out, out);
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        write_manifest("localize", argv, 0, {args.map_out}, wall);
    }
    return kOk;
}

// --- city / tables / rerun ----------------------------------------------------------

struct CityArgs
{
    std::string env = "urban";
    double extent = 2000.0;
    std::uint64_t seed = 1;
    bool full = false;
    std::string out;
};

int cmd_city(const CityArgs& args, const std::vector<std::string>& argv)
{
    using namespace a2g;
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t seed = resolve_seed(args.seed);
    const auto city = CityRealization::generate(parse_environment(args.env), args.extent, seed);
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(city.to_json(args.full) + "\n", args.out, "city", argv, seed, wall);
    return kOk;
}

int cmd_tables(const std::string& out_dir)
{
    using namespace a2g;
    for (const auto& [name, text] : tables::raw_tables())
    {
        if (out_dir.empty())
        {
            std::cout << "# " << name << "\n" << text << "\n";
        }
        else
        {
            std::filesystem::create_directories(out_dir);
            write_file(out_dir + "/" + name, text);
        }
    }
    return kOk;
}

int cmd_rerun(const std::string& manifest_path)
{
    nlohmann::json doc;
    try
    {
        doc = nlohmann::json::parse(read_file(manifest_path));
    }
    catch (const nlohmann::json::exception& e)
    {
        throw std::invalid_argument("bad manifest '" + manifest_path + "': " + e.what());
    }
    if (!doc.contains("argv"))
        throw std::invalid_argument("manifest '" + manifest_path + "' has no argv");
    return run_cli(doc.at("argv").get<std::vector<std::string>>());
}

// --- CLI wiring -----------------------------------------------------------------------

int run_cli(const std::vector<std::string>& argv)
{
    CLI::App app{"UAV air-to-ground channel models and Manhattan-grid LoS simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    PlosArgs plos_args;
    auto* plos_cmd = app.add_subcommand("plos", "Evaluate analytical LoS-probability models");
    plos_cmd->add_option("--env", plos_args.env, "Environment name or alpha,beta,gamma");
    plos_cmd->add_option("--models", plos_args.models,
                         "Comma list: itu,sigmoid,fresnel,scurve3,first-building,region3d,"
                         "region3d-ladder,3gpp-rma,3gpp-uma,3gpp-umi,cylinder");
    plos_cmd->add_option("--theta-grid", plos_args.theta_grid, "Degrees, lo:hi:step or list");
    plos_cmd->add_option("--r-grid", plos_args.r_grid, "Meters, lo:hi:step or list");
    plos_cmd->add_option("--h-tx", plos_args.h_tx, "Transmitter (UAV) height, m");
    plos_cmd->add_option("--h-rx", plos_args.h_rx, "Receiver height, m");
    plos_cmd->add_option("--freq", plos_args.freq_ghz, "Carrier, GHz (fresnel model)");
    plos_cmd->add_option("--out", plos_args.out, "Output CSV (stdout when omitted)");
    plos_cmd->add_flag("--swap-sw", plos_args.swap_sw, "Swap S/W roles (sensitivity)");
    plos_cmd->add_flag("--printed-norm", plos_args.printed_norm,
                       "Use the published h_max divisor in region3d factors");
    plos_cmd->add_option("--phi", plos_args.phi_deg,
                         "Fixed azimuth in degrees for region3d (default: average)");
    plos_cmd->add_option("--phi-order", plos_args.phi_order, "Azimuth quadrature order");
    plos_cmd->add_option("--pos-grid", plos_args.pos_grid, "User-position sub-grid per axis");
    plos_cmd->add_flag("--free-range", plos_args.free_range,
                       "Evaluate region3d without the UAV range cutoff");
    plos_cmd->add_option("--cyl-radius", plos_args.cyl_radius, "Cylinder model: r_o, m");
    plos_cmd->add_option("--cyl-density", plos_args.cyl_density,
                         "Cylinder model: buildings per m^2");
    plos_cmd->add_option("--cyl-mu", plos_args.cyl_mu, "Cylinder model: log-normal mu");
    plos_cmd->add_option("--cyl-sigma", plos_args.cyl_sigma, "Cylinder model: log-normal sigma");

    SimArgs sim_args;
    auto* sim_cmd = app.add_subcommand("sim", "Run a Monte Carlo comparison campaign");
    sim_cmd->add_option("--config", sim_args.config, "Campaign config file")->required();
    auto* sim_seed = sim_cmd->add_option("--seed", sim_args.seed, "Override the config seed");
    sim_cmd->add_option("--workers", sim_args.workers, "Worker threads");
    sim_cmd->add_option("--out-dir", sim_args.out_dir, "Output directory");

    PathlossArgs pl_args;
    auto* pl_cmd = app.add_subcommand("pathloss", "Evaluate path-loss models");
    pl_cmd->add_option("--model", pl_args.model,
                       "fspl | 3gpp | log-distance | ab | two-ray | combined");
    pl_cmd->add_option("--d-grid", pl_args.d_grid, "Meters, lo:hi:step or list");
    pl_cmd->add_option("--freq", pl_args.freq_ghz, "Carrier, GHz");
    pl_cmd->add_option("--scenario", pl_args.scenario, "3gpp: rma | uma | umi");
    pl_cmd->add_option("--condition", pl_args.condition, "3gpp: los | nlos");
    pl_cmd->add_option("--h-tx", pl_args.h_tx, "Transmitter height, m");
    pl_cmd->add_option("--h-rx", pl_args.h_rx, "Receiver height, m (two-ray)");
    pl_cmd->add_option("--n", pl_args.n, "Log-distance exponent");
    pl_cmd->add_option("--d0", pl_args.d0, "Log-distance reference distance, m");
    pl_cmd->add_option("--a", pl_args.a_db, "AB intercept, dB");
    pl_cmd->add_option("--b", pl_args.b, "AB slope");
    pl_cmd->add_option("--plos-value", pl_args.plos_value, "combined: P_LoS");
    pl_cmd->add_option("--pl-los", pl_args.pl_los, "combined: LoS loss, dB");
    pl_cmd->add_option("--pl-nlos", pl_args.pl_nlos, "combined: NLoS loss, dB");
    pl_cmd->add_option("--out", pl_args.out, "Output CSV (stdout when omitted)");

    FadeArgs fade_args;
    auto* fade_cmd = app.add_subcommand("fade", "Generate fading traces");
    fade_cmd->add_option("--mode", fade_args.mode, "shadow | gain");
    fade_cmd->add_option("--sigma", fade_args.sigma, "Shadow std, dB (overrides scenario)");
    fade_cmd->add_option("--scenario", fade_args.scenario, "rma | uma | umi");
    fade_cmd->add_option("--condition", fade_args.condition, "los | nlos");
    fade_cmd->add_option("--h-tx", fade_args.h_tx, "Transmitter height, m");
    fade_cmd->add_option("--d-decorr", fade_args.d_decorr, "Decorrelation distance, m");
    fade_cmd->add_option("--step", fade_args.step, "Sample spacing, m");
    fade_cmd->add_option("--n", fade_args.n, "Sample count");
    fade_cmd->add_option("--seed", fade_args.seed, "RNG seed");
    fade_cmd->add_option("--k-db", fade_args.k_db, "Rician K-factor, dB");
    fade_cmd->add_flag("--rayleigh", fade_args.rayleigh, "Rayleigh fading (K = -inf)");
    fade_cmd->add_option("--out", fade_args.out, "Output CSV (stdout when omitted)");

    LocalizeArgs loc_args;
    auto* loc_cmd = app.add_subcommand("localize", "RSSI grid-search localization");
    loc_cmd->add_option("--measurements", loc_args.measurements,
                        "CSV with x,y,z,rssi_dbm,sigma_db")
        ->required();
    loc_cmd->add_option("--region", loc_args.region, "Search window x0:x1:y0:y1")->required();
    loc_cmd->add_option("--resolution", loc_args.resolution, "Grid resolution, m");
    loc_cmd->add_option("--p-ref", loc_args.p_ref, "Reference power, dBm");
    loc_cmd->add_option("--d-ref", loc_args.d_ref, "Reference distance, m");
    loc_cmd->add_option("--n-p", loc_args.n_p, "Path-loss exponent");
    loc_cmd->add_option("--emitter-z", loc_args.emitter_z, "Fixed emitter height, m");
    loc_cmd->add_option("--workers", loc_args.workers, "Worker threads");
    loc_cmd->add_option("--map-out", loc_args.map_out, "Likelihood map CSV");

    CityArgs city_args;
    auto* city_cmd = app.add_subcommand("city", "Generate a city realization as JSON");
    city_cmd->add_option("--env", city_args.env, "Environment name or alpha,beta,gamma");
    city_cmd->add_option("--extent", city_args.extent, "Side length, m");
    city_cmd->add_option("--seed", city_args.seed, "RNG seed");
    city_cmd->add_flag("--full", city_args.full, "Embed explicit heights");
    city_cmd->add_option("--out", city_args.out, "Output JSON (stdout when omitted)");

    std::string tables_out;
    auto* tables_cmd = app.add_subcommand("tables", "Dump the embedded coefficient tables");
    tables_cmd->add_option("--out-dir", tables_out, "Directory (stdout when omitted)");

    std::string manifest_path;
    auto* rerun_cmd = app.add_subcommand("rerun", "Re-execute a run from its manifest");
    rerun_cmd->add_option("manifest", manifest_path, "Path to a .manifest.json")->required();

    std::vector<const char*> cargv;
    cargv.push_back("a2gchan");
    for (const auto& arg : argv)
        cargv.push_back(arg.c_str());
    try
    {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    }
    catch (const CLI::ParseError& e)
    {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return kUsage;
    }

    if (plos_cmd->parsed())
    {
        plos_args.seed = resolve_seed(plos_args.seed);
        return cmd_plos(plos_args, argv);
    }
    if (sim_cmd->parsed())
    {
        sim_args.seed_given = sim_seed->count() > 0;
        return cmd_sim(sim_args, argv);
    }
    if (pl_cmd->parsed())
        return cmd_pathloss(pl_args, argv);
    if (fade_cmd->parsed())
        return cmd_fade(fade_args, argv);
    if (loc_cmd->parsed())
        return cmd_localize(loc_args, argv);
    if (city_cmd->parsed())
        return cmd_city(city_args, argv);
    if (tables_cmd->parsed())
        return cmd_tables(tables_out);
    if (rerun_cmd->parsed())
        return cmd_rerun(manifest_path);
    return kUsage;
}

} // namespace

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    try
    {
        return run_cli(args);
    }
    catch (const a2g::numerical_error& e)
    {
        std::cerr << "error (numerical): " << e.what() << "\n";
        return kNumerical;
    }
    catch (const io_error& e)
    {
        std::cerr << "error (io): " << e.what() << "\n";
        return kIo;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}

#include "cli.hpp"

#include "loglap/cauchy.hpp"
#include "loglap/core.hpp"
#include "loglap/fundsol.hpp"
#include "loglap/helmholtz.hpp"
#include "loglap/parallel.hpp"
#include "loglap/report.hpp"
#include "loglap/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

namespace loglap::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

quad::QuadratureSpec spec_of(const RunConfig& cfg)
{
    quad::QuadratureSpec s = fundamental_spec();
    s.rel_tol = cfg.tol;
    return s;
}

RadialFunction datum_of(const RunConfig& cfg)
{
    if (cfg.datum == "ball") return RadialFunction::indicator_ball(1.0);
    if (cfg.datum == "gaussian") return RadialFunction::gaussian(1.0);
    const std::string prefix = "power:";
    if (cfg.datum.rfind(prefix, 0) == 0) {
        std::size_t used = 0;
        const std::string rest = cfg.datum.substr(prefix.size());
        const double tau = std::stod(rest, &used);
        if (used != rest.size() || !(tau < 0.0)) throw DomainError("--datum power:<tau> needs a number tau < 0");
        return RadialFunction::power_decay(tau);
    }
    throw DomainError("--datum must be ball, gaussian or power:<tau>, got '" + cfg.datum + "'");
}

void require_range(const RunConfig& cfg)
{
    if (!(cfg.r_min > 0.0) || !(cfg.r_max >= cfg.r_min) || !std::isfinite(cfg.r_max))
        throw DomainError("radius range must satisfy 0 < rmin <= rmax < inf");
    if (cfg.points < 1) throw DomainError("--points must be >= 1");
}

Table start_table(const RunConfig& cfg, std::string name)
{
    Table t;
    t.name = std::move(name);
    t.meta.push_back({"version", kVersion});
    for (auto& kv : cfg.describe()) t.meta.push_back(kv);
    t.meta.push_back({"config_hash", cfg.hash()});
    return t;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> RunConfig::describe() const
{
    std::vector<std::pair<std::string, std::string>> d{{"command", command},
                                                        {"N", std::to_string(dim)},
                                                        {"tol", format_number(tol)},
                                                        {"seed", std::to_string(seed)}};
    if (command == "verify") {
        d.push_back({"suite", suite});
        return d;
    }
    if (command == "kernel" || command == "cauchy") d.push_back({"t", format_number(t)});
    if (command == "cauchy") d.push_back({"datum", datum});
    d.push_back({"rmin", format_number(r_min)});
    d.push_back({"rmax", format_number(r_max)});
    d.push_back({"points", std::to_string(points)});
    return d;
}

std::string RunConfig::hash() const
{
    std::string canon;
    for (auto& [k, v] : describe()) canon += k + "=" + v + ";";
    return config_hash(canon);
}

std::vector<double> radii(const RunConfig& cfg)
{
    require_range(cfg);
    if (cfg.r_min == cfg.r_max) return {cfg.r_min};
    if (cfg.points == 1) return {cfg.r_min};
    return log_grid(cfg.r_min, cfg.r_max, cfg.points);
}

Table kernel_table(const RunConfig& cfg)
{
    detail::require_time(cfg.t, cfg.dim, "kernel");
    Table tab = start_table(cfg, "kernel");
    tab.meta.push_back({"P_0(t)", format_number(p0(cfg.t, cfg.dim))});
    tab.columns = {"r", "P_ln(t,r)"};
    tab.column_notes = {"|x|", "diffusion kernel P_0(t) |x|^{2t-N}"};
    for (double r : radii(cfg)) tab.rows.push_back({r, kernel_pln(cfg.t, r, cfg.dim)});
    return tab;
}

Table cauchy_table(const RunConfig& cfg)
{
    const RadialFunction f = datum_of(cfg);
    const CauchySolution u = solve_cauchy(f, cfg.t, cfg.dim, spec_of(cfg));
    Table tab = start_table(cfg, "cauchy");
    tab.meta.push_back({"||f||_1", format_number(u.norm_f_l1())});
    tab.meta.push_back({"P_0(t)", format_number(u.p0())});
    tab.columns = {"r", "u(t,r)", "(N-2t)u(t,r)"};
    tab.column_notes = {"|x|", "P_0(t) (|.|^{2t-N} * f)(x)", "blow-up normalisation as t -> N/2"};
    const std::vector<double> rs = radii(cfg);
    std::vector<double> vals(rs.size());
    parallel_for(rs.size(), [&](std::size_t i) { vals[i] = u(rs[i]); });
    for (std::size_t i = 0; i < rs.size(); ++i) tab.rows.push_back({rs[i], vals[i], (cfg.dim - 2.0 * cfg.t) * vals[i]});
    return tab;
}

Table fundamental_table(const RunConfig& cfg)
{
    if (cfg.dim < 3)
        throw DomainError("fundamental: the fundamental solution is constructed only for N >= 3 (got N = " +
                          std::to_string(cfg.dim) + ")");
    const FundamentalSolution fs(cfg.dim, spec_of(cfg));
    Table tab = start_table(cfg, "fundamental");
    tab.meta.push_back({"c0", format_number(fs.c0())});
    tab.columns = {"r",      "u_*(r)", "v_1(r)", "Phi_ln(r)", "c0*r^-N/ln^2(r)", "Phi_ln*r^N*ln^2(r)/c0",
                   "r^((3-N)/2)/ln(r)"};
    tab.column_notes = {"|x|",
                        "time-integrated kernel \\int_0^1 P_0(t) r^{2t-N} dt",
                        "\\int_0^1 P_0(t) (|.|^{2t-N} * Phi_1)(r) dt",
                        "fundamental solution u_* + v_1",
                        "leading term at the origin, for r < 1/e",
                        "near-origin ratio, for r < 1/e",
                        "far-field envelope shape, for r >= 2"};
    const std::vector<double> rs = radii(cfg);
    std::vector<double> u(rs.size()), v(rs.size());
    parallel_for(rs.size(), [&](std::size_t i) {
        u[i] = fs.u_star(rs[i]);
        v[i] = fs.v_one(rs[i]);
    });
    const double n = cfg.dim;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        const double r = rs[i], lr = std::log(r), phi = u[i] + v[i];
        const bool near = r < std::exp(-1.0);
        tab.rows.push_back({r, u[i], v[i], phi, near ? fs.c0() * std::pow(r, -n) / (lr * lr) : kNaN,
                            near ? phi * std::pow(r, n) * lr * lr / fs.c0() : kNaN,
                            r >= 2.0 ? std::pow(r, 0.5 * (3.0 - n)) / lr : kNaN});
    }
    return tab;
}

Table helmholtz_table(const RunConfig& cfg)
{
    const HelmholtzProfile h(cfg.dim);
    Table tab = start_table(cfg, "helmholtz");
    tab.columns = {"r", "Phi_1(r)", "Phi_1'(r)", "far_field(r)"};
    tab.column_notes = {"|x|", "-(1/4) (2 pi r)^{1-N/2} Y_{N/2-1}(r)", "radial derivative",
                        "-sin(r - (N-1) pi/4) / (2 (2 pi r)^{(N-1)/2})"};
    for (double r : radii(cfg)) tab.rows.push_back({r, h.phi(r), h.phi_prime(r), h.far_field(r)});
    return tab;
}

std::string format_number(double v)
{
    if (std::isnan(v)) return "";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

std::string to_csv(const Table& table)
{
    std::ostringstream os;
    os << "# table=" << table.name << "\n";
    for (auto& [k, v] : table.meta) os << "# " << k << "=" << v << "\n";
    for (std::size_t i = 0; i < table.columns.size() && i < table.column_notes.size(); ++i)
        os << "# column " << table.columns[i] << "=" << table.column_notes[i] << "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << csv_field(table.columns[i]);
    os << "\r\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
        os << "\r\n";
    }
    return os.str();
}

nlohmann::json to_json(const Table& table)
{
    // samples: x = first column, lhs = second column, rhs = the reference column when present
    EstimateReport rep;
    rep.estimate_id = "table." + table.name;
    std::string region;
    for (auto& [k, v] : table.meta)
        if (k != "version" && k != "config_hash") region += (region.empty() ? "" : ", ") + k + "=" + v;
    rep.region = region;
    for (auto& [k, v] : table.meta)
        if (k == "config_hash") rep.config_hash = v;
    const std::size_t ref = table.name == "fundamental" ? 4 : table.name == "helmholtz" ? 3 : 0;
    double t = 0.0;
    for (auto& [k, v] : table.meta)
        if (k == "t") t = std::stod(v);
    bool finite = true;
    for (const auto& row : table.rows) {
        const double rhs = ref && !std::isnan(row[ref]) ? row[ref] : 0.0;
        rep.samples.push_back({row[0], t, row[1], rhs});
        finite = finite && std::isfinite(row[1]);
    }
    rep.constant = std::numeric_limits<double>::quiet_NaN();
    rep.pass = finite;
    rep.detail = "data table; verdict records that every value is finite";
    nlohmann::json j = loglap::to_json(rep);
    nlohmann::json meta = nlohmann::json::object();
    for (auto& [k, v] : table.meta) meta[k] = v;
    nlohmann::json notes = nlohmann::json::object();
    for (std::size_t i = 0; i < table.columns.size() && i < table.column_notes.size(); ++i)
        notes[table.columns[i]] = table.column_notes[i];
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (double v : row) r.push_back(std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr));
        rows.push_back(r);
    }
    j["meta"] = meta;
    j["columns"] = table.columns;
    j["column_notes"] = notes;
    j["rows"] = rows;
    return j;
}

void write_atomic(const std::string& path, const std::string& content)
{
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        f << content;
        f.flush();
        if (!f) throw std::runtime_error("write to " + tmp.string() + " failed");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("cannot move output into " + path + ": " + ec.message());
    }
}

namespace {

void emit(const RunConfig& cfg, const std::string& content, std::ostream& out)
{
    if (cfg.out.empty()) out << content;
    else write_atomic(cfg.out, content);
}

std::string render(const RunConfig& cfg, const Table& t)
{
    if (cfg.format == "json") return to_json(t).dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
    return to_csv(t);
}

void add_common(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--dim", cfg.dim, "spatial dimension N")->capture_default_str();
    sub->add_option("--tol", cfg.tol, "relative quadrature tolerance")->capture_default_str();
    sub->add_option("--out", cfg.out, "output file (written atomically); stdout when omitted");
    sub->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--seed", cfg.seed, "seed for randomised sampling")->capture_default_str();
}

void add_range(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--rmin", cfg.r_min, "smallest radius")->capture_default_str();
    sub->add_option("--rmax", cfg.r_max, "largest radius")->capture_default_str();
    sub->add_option("--points", cfg.points, "number of log-spaced radii")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Logarithmic Laplacian: kernels, Cauchy problem, fundamental solution and estimate checks",
                 "loglap"};
    app.require_subcommand(1);
    RunConfig cfg;

    CLI::App* kernel = app.add_subcommand("kernel", "tabulate P_ln(t, r) = P_0(t) r^{2t-N}");
    add_common(kernel, cfg);
    add_range(kernel, cfg);
    kernel->add_option("--t", cfg.t, "time, 0 < t < N/2")->capture_default_str();

    CLI::App* cauchy = app.add_subcommand("cauchy", "solve the Cauchy problem for a radial datum");
    add_common(cauchy, cfg);
    add_range(cauchy, cfg);
    cauchy->add_option("--t", cfg.t, "time, 0 < t < N/2")->capture_default_str();
    cauchy->add_option("--datum", cfg.datum, "ball, gaussian or power:<tau>")->capture_default_str();

    CLI::App* fundamental = app.add_subcommand("fundamental", "tabulate u_*, v_1 and Phi_ln (N >= 3)");
    add_common(fundamental, cfg);
    add_range(fundamental, cfg);

    CLI::App* helmholtz = app.add_subcommand("helmholtz", "tabulate the Helmholtz profile Phi_1 (N >= 3)");
    add_common(helmholtz, cfg);
    add_range(helmholtz, cfg);

    CLI::App* verify = app.add_subcommand("verify", "run estimate checks; exit 0 iff all pass");
    add_common(verify, cfg);
    verify->add_option("--suite", cfg.suite, "all, kernel, cauchy, helmholtz, fundsol, estimates or falsified")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*verify) {
            cfg.command = "verify";
            VerifyConfig vc;
            vc.seed = cfg.seed;
            vc.tol = cfg.tol;
            const VerifyResult res = run_suite(parse_suite(cfg.suite), vc);
            nlohmann::json j = res.to_json();
            j["config_hash"] = cfg.hash();
            emit(cfg, j.dump(2) + "\n", out);
            for (const EstimateReport& r : res.reports) err << r.verdict() << "  " << r.estimate_id << "\n";
            return res.all_pass() ? 0 : 1;
        }
        Table t;
        if (*kernel) {
            cfg.command = "kernel";
            t = kernel_table(cfg);
        } else if (*cauchy) {
            cfg.command = "cauchy";
            t = cauchy_table(cfg);
        } else if (*fundamental) {
            cfg.command = "fundamental";
            t = fundamental_table(cfg);
        } else {
            cfg.command = "helmholtz";
            t = helmholtz_table(cfg);
        }
        emit(cfg, render(cfg, t), out);
        return 0;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const quad::DivergenceError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace loglap::cli

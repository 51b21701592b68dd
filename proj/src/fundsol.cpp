#include "loglap/fundsol.hpp"

#include "loglap/core.hpp"
#include "loglap/parallel.hpp"
#include "loglap/riesz.hpp"
#include "loglap/special.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace loglap {

namespace {

constexpr double kPi = std::numbers::pi;

void require_fundamental(int dim, const char* who)
{
    if (dim < 3)
        throw DomainError(std::string(who) + ": the fundamental solution is only constructed for N >= 3 (got N = " +
                          std::to_string(dim) + ")");
}

void require_radius(double r, const char* who)
{
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError(std::string(who) + ": r must be finite and > 0");
}

double inner_riesz(const std::function<quad::QuadratureResult()>& call)
{
    try {
        return call().value;
    } catch (const quad::QuadratureError& e) {
        // best estimate; the outer integral tolerates a local miss
        return e.estimate();
    }
}

std::string hash_of(const std::string& id, int dim, const std::vector<double>& xs, const quad::QuadratureSpec& spec,
                    double extra = 0.0)
{
    std::ostringstream os;
    os.precision(17);
    os << id << ";N=" << dim << ";abs=" << spec.abs_tol << ";rel=" << spec.rel_tol << ";extra=" << extra << ";x=";
    for (double x : xs) os << x << ",";
    return config_hash(os.str());
}

}  // namespace

quad::QuadratureSpec fundamental_spec()
{
    quad::QuadratureSpec s;
    s.abs_tol = 1e-13;
    s.rel_tol = 1e-6;
    return s;
}

FundamentalSolution::FundamentalSolution(int dim, quad::QuadratureSpec spec)
    : dim_(dim), spec_(spec), c0_(0.0), helmholtz_((require_fundamental(dim, "FundamentalSolution"), dim))
{
    c0_ = special::gamma(0.5 * dim) / (4.0 * std::pow(kPi, 0.5 * dim));
    phi1_ = helmholtz_.as_radial();
    phi1_prime_ = helmholtz_.derivative_as_radial();
}

double FundamentalSolution::t_integral(const std::function<double(double)>& g, double log_r) const
{
    // t = tau^2 tracks P_0(t) ~ t; for r < 1 the factor r^{2t} decays on the scale 1 / (2 |ln r|)
    std::vector<double> cuts{0.0};
    if (log_r < 0.0) {
        const double scale = 1.0 / (2.0 * std::abs(log_r));
        for (double t = scale; t < 1.0; t *= 2.0) cuts.push_back(std::sqrt(t));
    }
    cuts.push_back(1.0);
    quad::QuadratureSpec outer = spec_;
    outer.endpoint_mode = quad::EndpointMode::none;
    outer.oscillatory_mode = quad::OscillatoryMode::none;
    auto h = [&](double tau) {
        if (tau <= 0.0) return 0.0;
        const double t = tau * tau;
        return 2.0 * tau * p0(t, dim_) * g(t);
    };
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) total += quad::integrate(h, cuts[i], cuts[i + 1], outer).value;
    return total;
}

double FundamentalSolution::scaled_u_star_log(double y) const
{
    // \int_0^1 P_0(t) e^{-2ty} dt
    return t_integral([&](double t) { return std::exp(-2.0 * t * y); }, -y);
}

double FundamentalSolution::u_star(double r) const
{
    require_radius(r, "u_star");
    const double lr = std::log(r);
    return t_integral([&](double t) { return std::exp((2.0 * t - dim_) * lr); }, lr);
}

double FundamentalSolution::grad_u_star(double r) const
{
    require_radius(r, "grad_u_star");
    const double lr = std::log(r);
    return -t_integral([&](double t) { return (dim_ - 2.0 * t) * std::exp((2.0 * t - dim_ - 1.0) * lr); }, lr);
}

double FundamentalSolution::v_one(double r) const
{
    require_radius(r, "v_one");
    quad::QuadratureSpec inner = spec_;
    inner.rel_tol = spec_.rel_tol * 0.1;
    inner.abs_tol = spec_.abs_tol * 0.1;
    return t_integral(
        [&](double t) { return inner_riesz([&] { return riesz_radial_detail(t, phi1_, r, dim_, inner); }); },
        std::log(r));
}

double FundamentalSolution::grad_v_one(double r) const
{
    require_radius(r, "grad_v_one");
    quad::QuadratureSpec inner = spec_;
    inner.rel_tol = spec_.rel_tol * 0.1;
    inner.abs_tol = spec_.abs_tol * 0.1;
    return t_integral(
        [&](double t) {
            return inner_riesz([&] { return riesz_radial_vector_detail(t, phi1_prime_, r, dim_, inner); });
        },
        std::log(r));
}

double FundamentalSolution::near_origin_ratio(double r) const
{
    require_radius(r, "near_origin_ratio");
    const double y = -std::log(r);
    const double scaled = scaled_u_star_log(y) + v_one(r) * std::pow(r, dim_);
    return scaled * y * y / c0_;
}

PhiLnTable::PhiLnTable(const FundamentalSolution& fs, double r_min, double r_max, double h, int log_points)
    : fs_(std::make_shared<const FundamentalSolution>(fs)), r_min_(r_min), r_max_(r_max)
{
    if (!(r_min > 0.0) || !(r_min < 1.0) || !(r_max > 1.0) || !(h > 0.0) || log_points < 2)
        throw DomainError("PhiLnTable: need 0 < r_min < 1 < r_max, h > 0 and at least two log points");
    std::vector<double> grid = log_grid(r_min, 1.0, log_points);
    const int steps = std::max(1, static_cast<int>(std::lround((r_max - 1.0) / h)));
    for (int i = 1; i <= steps; ++i) grid.push_back(i == steps ? r_max : 1.0 + (r_max - 1.0) * i / steps);
    Eigen::ArrayXd g(static_cast<Eigen::Index>(grid.size())), v(g.size());
    for (std::size_t i = 0; i < grid.size(); ++i) g[static_cast<Eigen::Index>(i)] = grid[i];
    parallel_for(grid.size(), [&](std::size_t i) { v[static_cast<Eigen::Index>(i)] = fs_->v_one(grid[i]); });
    const int n = fs_->dim();
    v1_ = RadialFunction::from_samples(g, v, 2.0 - n, TailModel::oscillating(0.5 * (1 - n), 0.25 * (n - 1) * kPi));
    const double lr = std::log(r_max_);
    kappa_ = (fs_->u_star(r_max_) + v.tail(1)[0] - fs_->helmholtz().phi(r_max_)) * std::pow(r_max_, n) * lr * lr;
}

double PhiLnTable::phi_ln(double r) const
{
    if (r <= r_max_) return fs_->u_star(r) + v1_(r);
    const double lr = std::log(r);
    return fs_->helmholtz().phi(r) + kappa_ * std::pow(r, -fs_->dim()) / (lr * lr);
}

double PhiLnTable::v_one(double r) const { return r <= r_max_ ? v1_(r) : phi_ln(r) - fs_->u_star(r); }

double PhiLnTable::log_abs_phi_ln_at(double y) const
{
    const int n = fs_->dim();
    const double r = std::exp(-y);
    double v1_scaled;
    if (r >= r_min_) {
        v1_scaled = v1_(r) * std::pow(r, n);
    } else {
        // inner extension v_1 ~ v_1(r_min) (r / r_min)^{2-N}, times r^N
        const double v0 = v1_(r_min_);
        v1_scaled = v0 * std::exp((2.0 - n) * (-y - std::log(r_min_)) - n * y);
    }
    return std::log(std::abs(fs_->scaled_u_star_log(y) + v1_scaled)) + n * y;
}

double u_star_fourier_n3(const FundamentalSolution& fs, double xi)
{
    if (fs.dim() != 3) throw DomainError("u_star_fourier_n3: requires N = 3");
    if (!(xi > 0.0)) throw DomainError("u_star_fourier_n3: xi must be > 0");
    quad::QuadratureSpec spec;
    spec.abs_tol = 1e-12;
    spec.rel_tol = 1e-8;
    // r in (0, 1] through y = -ln r: u_* r sin(xi r) dr = S(y) xi sinc(xi e^{-y}) dy, S = r^3 u_*
    auto inner = [&](double y) {
        const double z = xi * std::exp(-y);
        return fs.scaled_u_star_log(y) * (z > 1e-8 ? std::sin(z) / z : 1.0) * xi;
    };
    double total = quad::integrate(inner, 0.0, std::numeric_limits<double>::infinity(), spec).value;
    quad::QuadratureSpec osc = spec;
    osc.oscillatory_mode = quad::OscillatoryMode::half_period;
    osc.frequency = xi;
    osc.phase = 0.0;
    osc.max_half_periods = 4000;
    total += quad::integrate([&](double r) { return fs.u_star(r) * r * std::sin(xi * r); }, 1.0,
                             std::numeric_limits<double>::infinity(), osc)
                 .value;
    return 4.0 * kPi / xi * total;
}

double v_one_fourier_n3(double r, const quad::QuadratureSpec& spec_in)
{
    require_radius(r, "v_one_fourier_n3");
    quad::QuadratureSpec spec = spec_in;
    spec.endpoint_mode = quad::EndpointMode::none;
    spec.oscillatory_mode = quad::OscillatoryMode::none;
    auto h = [&](double k) { return std::sin(k * r) / (2.0 * k * std::log(k)); };
    const double a = 0.5;
    double total = quad::integrate(h, 0.0, 1.0 - a, spec).value;
    // symmetric principal value about k = 1
    total += quad::integrate([&](double e) { return e == 0.0 ? 0.0 : h(1.0 + e) + h(1.0 - e); }, 0.0, a, spec).value;
    quad::QuadratureSpec osc = spec;
    osc.oscillatory_mode = quad::OscillatoryMode::half_period;
    osc.frequency = r;
    osc.phase = 0.0;
    osc.max_half_periods = 4000;
    total += quad::integrate(h, 1.0 + a, std::numeric_limits<double>::infinity(), osc).value;
    return total / (2.0 * kPi * kPi * r);
}

double phi_ln_fourier_n3(const FundamentalSolution& fs, double r, const quad::QuadratureSpec& spec)
{
    if (fs.dim() != 3) throw DomainError("phi_ln_fourier_n3: requires N = 3");
    return fs.u_star(r) + v_one_fourier_n3(r, spec);
}

std::vector<double> local_integrability_sequence(const PhiLnTable& table, const std::vector<double>& log_cutoffs)
{
    quad::QuadratureSpec spec;
    spec.abs_tol = 1e-12;
    spec.rel_tol = 1e-9;
    // |Phi_ln| r^{N-1} dr = |Phi_ln| r^N dy
    auto g = [&](double y) { return std::exp(table.log_abs_phi_ln_at(y) - table.solution().dim() * y); };
    std::vector<double> out;
    double acc = 0.0, y0 = 0.0;
    for (double y1 : log_cutoffs) {
        if (y1 > y0) acc += quad::integrate(g, y0, y1, spec).value;
        y0 = std::max(y0, y1);
        out.push_back(acc);
    }
    return out;
}

EstimateReport near_origin_report(const FundamentalSolution& fs, double y_max, int points, double delta)
{
    if (!(y_max > 1.0) || points < 2) throw DomainError("near_origin_report: need y_max > 1 and points >= 2");
    const int n = fs.dim();
    // base window -ln r in [1, y_max]; doubled window [1, 2 y_max - 1] with twice the points
    const std::vector<double> ys = [&] {
        std::vector<double> v;
        for (int i = 0; i < 2 * points - 1; ++i) v.push_back(1.0 + (y_max - 1.0) * i / (points - 1));
        return v;
    }();
    std::vector<double> lhs(ys.size());
    parallel_for(ys.size(), [&](std::size_t i) {
        const double y = ys[i];
        const double r = std::exp(-y);
        const double scaled = fs.scaled_u_star_log(y) + fs.v_one(r) * std::pow(r, n);
        lhs[i] = std::abs(scaled - fs.c0() / (y * y));
    });
    std::vector<Sample> base, doubled;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        const double y = ys[i];
        // both sides multiplied by r^N
        const Sample s{std::exp(-ys[i]), 0.0, lhs[i], std::exp(-delta * y) / (y * y * y)};
        doubled.push_back(s);
        if (static_cast<int>(i) < points) base.push_back(s);
    }
    std::ostringstream region;
    region << "-ln|x| in [1, " << y_max << "], doubled to " << ys.back() << " (both sides times |x|^N)";
    return stable_constant_report("fundsol.near_origin", region.str(), std::move(base), std::move(doubled),
                                  hash_of("fundsol.near_origin", n, ys, fs.spec(), delta));
}

EstimateReport far_field_report(const FundamentalSolution& fs, double r_min, double r_max, int points)
{
    const int n = fs.dim();
    const std::vector<double> radii = log_grid(r_min, r_max * r_max / r_min, 2 * points - 1);
    std::vector<double> lhs(radii.size());
    parallel_for(radii.size(), [&](std::size_t i) {
        const double r = radii[i];
        lhs[i] = std::abs(fs.phi_ln(r)) * std::pow(r, 0.5 * (n - 3)) * std::log(r);
    });
    std::vector<Sample> base, doubled;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const Sample s{radii[i], 0.0, lhs[i], 1.0};
        doubled.push_back(s);
        if (static_cast<int>(i) < points) base.push_back(s);
    }
    std::ostringstream region;
    region << "|x| in [" << r_min << ", " << r_max << "], doubled to " << radii.back();
    return stable_constant_report("fundsol.far_field", region.str(), std::move(base), std::move(doubled),
                                  hash_of("fundsol.far_field", n, radii, fs.spec()));
}

EstimateReport gradient_report(const FundamentalSolution& fs, double r_min, double r_max, int points, double delta)
{
    const int n = fs.dim();
    // double the log-length about the geometric centre
    const double lc = 0.5 * (std::log(r_min) + std::log(r_max));
    const double half = std::log(r_max) - lc;
    const std::vector<double> radii = log_grid(std::exp(lc - 2.0 * half), std::exp(lc + 2.0 * half), 2 * points - 1);
    std::vector<double> lhs(radii.size());
    parallel_for(radii.size(), [&](std::size_t i) { lhs[i] = std::abs(fs.grad_phi_ln(radii[i])); });
    std::vector<Sample> base, doubled;
    const int quarter = (points - 1) / 2;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const double r = radii[i];
        const double l2 = std::log(r) * std::log(r);
        const double shape = std::max(std::pow(r, -n - 1.0 + delta) / (1.0 + l2), 1.0 / std::sqrt(1.0 + l2));
        const Sample s{r, 0.0, lhs[i], shape};
        doubled.push_back(s);
        // the base window is the middle half of the doubled one
        const int k = static_cast<int>(i) - quarter;
        if (k >= 0 && k < points) base.push_back(s);
    }
    std::ostringstream region;
    region << "|x| in [" << r_min << ", " << r_max << "], doubled to [" << radii.front() << ", " << radii.back()
           << "]";
    return stable_constant_report("fundsol.gradient", region.str(), std::move(base), std::move(doubled),
                                  hash_of("fundsol.gradient", n, radii, fs.spec(), delta));
}

}  // namespace loglap

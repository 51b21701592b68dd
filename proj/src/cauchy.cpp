#include "loglap/cauchy.hpp"

#include "loglap/core.hpp"
#include "loglap/parallel.hpp"
#include "loglap/riesz.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace loglap {

namespace {

std::string format(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

// Decay of I_{2t} * f at infinity for a profile with the given tail.
TailModel propagated_tail(const TailModel& tail, double t, int dim)
{
    const double n = dim;
    switch (tail.kind) {
    case TailModel::Kind::compact:
    case TailModel::Kind::rapid:
        return TailModel::power_law(2.0 * t - n);
    case TailModel::Kind::power:
        if (tail.power < -n) return TailModel::power_law(2.0 * t - n);
        if (tail.power > -n) return TailModel::power_law(tail.power + 2.0 * t, tail.log_power);
        return TailModel::power_law(2.0 * t - n, tail.log_power + 1);
    case TailModel::Kind::oscillatory:
        break;
    }
    throw DomainError("solve_cauchy: propagating an oscillating profile is not supported");
}

}  // namespace

CauchySolution::CauchySolution(RadialFunction f, double t, int dim, quad::QuadratureSpec spec)
    : f_(std::move(f)), t_(t), dim_(dim), p0_(loglap::p0(t, dim)), spec_(spec)
{
}

double CauchySolution::norm_f_l1() const { return l1_norm(f_, dim_, spec_); }

double CauchySolution::operator()(double r) const
{
    if (r < 0.0) throw DomainError("CauchySolution: radius must be >= 0");
    if (r == 0.0) return p0_ * riesz_at_origin(t_, f_, dim_, spec_);
    return p0_ * riesz_radial(t_, f_, r, dim_, spec_);
}

RadialFunction CauchySolution::as_radial() const
{
    const double inner = std::min(0.0, f_.inner_exponent() + 2.0 * t_);
    auto self = *this;
    return RadialFunction::from_callable([self](double r) { return self(r); }, inner,
                                         propagated_tail(f_.tail(), t_, dim_), f_.breakpoints());
}

CauchySolution solve_cauchy(const RadialFunction& f, double t, int dim, const quad::QuadratureSpec& spec)
{
    detail::require_time(t, dim, "solve_cauchy");
    const TailModel& tail = f.tail();
    if (tail.kind == TailModel::Kind::power && !(tail.power + 2.0 * t < 0.0))
        throw quad::DivergenceError("solve_cauchy: datum with tail r^" + format(tail.power) +
                                    " is not in L^1((1+|x|)^{2t-N} dx) for 2t - N = " + format(2.0 * t - dim));
    if (!(f.inner_exponent() > -dim))
        throw quad::DivergenceError("solve_cauchy: datum is not locally integrable (inner exponent <= -N)");
    return CauchySolution(f, t, dim, spec);
}

double riesz_at_origin(double t, const RadialFunction& f, int dim, const quad::QuadratureSpec& spec)
{
    detail::require_time(t, dim, "riesz_at_origin");
    const double alpha = 2.0 * t - 1.0 + f.inner_exponent();
    if (!(alpha > -1.0))
        throw quad::DivergenceError("riesz_at_origin: integrand s^{2t-1} f(s) is not integrable at 0");
    const TailModel& tail = f.tail();
    quad::QuadratureSpec inner = spec;
    inner.endpoint_mode = quad::EndpointMode::none;
    inner.oscillatory_mode = quad::OscillatoryMode::none;

    double head_end = 1.0;
    if (tail.bounded_support()) head_end = std::min(head_end, tail.support);
    std::vector<double> cuts;
    for (double b : f.breakpoints())
        if (b > 0.0) cuts.push_back(b);
    if (!cuts.empty()) head_end = std::min(head_end, cuts.front());

    const double e = f.inner_exponent();
    quad::QuadratureResult total = quad::integrate_algebraic(
        [&](double d) { return f(d) * std::pow(d, -e); }, 0.0, head_end, alpha, inner);
    auto g = [&](double s) { return f(s) * std::pow(s, 2.0 * t - 1.0); };

    double a = head_end;
    double finite_end = tail.bounded_support() ? tail.support : 8.0;
    for (double b : cuts) finite_end = tail.bounded_support() ? finite_end : std::max(finite_end, 2.0 * b);
    cuts.push_back(finite_end);
    std::sort(cuts.begin(), cuts.end());
    for (double b : cuts) {
        if (b <= a) continue;
        if (b > finite_end) break;
        total += quad::integrate(g, a, b, inner);
        a = b;
    }
    switch (tail.kind) {
    case TailModel::Kind::compact:
    case TailModel::Kind::rapid:
        break;
    case TailModel::Kind::power: {
        const double rate = -(tail.power + 2.0 * t);
        if (!(rate > 0.0))
            throw quad::DivergenceError("riesz_at_origin: tail not integrable, need tail power + 2t < 0");
        // s = e^y turns the power tail into exponential decay
        quad::QuadratureSpec dec = inner;
        dec.endpoint_mode = quad::EndpointMode::exponential_decay;
        dec.decay_rate = rate;
        total += quad::integrate([&](double y) { return g(std::exp(y)) * std::exp(y); }, std::log(a),
                                 std::numeric_limits<double>::infinity(), dec);
        break;
    }
    case TailModel::Kind::oscillatory: {
        quad::QuadratureSpec osc = inner;
        osc.oscillatory_mode = quad::OscillatoryMode::half_period;
        osc.frequency = tail.frequency;
        osc.phase = tail.phase;
        total += quad::integrate(g, a, std::numeric_limits<double>::infinity(), osc);
        break;
    }
    }
    return sphere_area<double>(dim) * total.value;
}

std::vector<BlowupPoint> blowup_rate(const RadialFunction& f, double r, int dim, const std::vector<double>& ts,
                                     const quad::QuadratureSpec& spec)
{
    std::vector<BlowupPoint> out(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const CauchySolution u = solve_cauchy(f, ts[i], dim, spec);
        out[i] = {ts[i], (dim - 2.0 * ts[i]) * u(r)};
    }
    return out;
}

double blowup_limit(const RadialFunction& f, int dim, const quad::QuadratureSpec& spec)
{
    return kernel_limit_constants<double>(dim).blowup_limit * l1_norm(f, dim, spec);
}

const char* to_string(DecayClass c)
{
    switch (c) {
    case DecayClass::steep: return "steep";
    case DecayClass::intermediate: return "intermediate";
    case DecayClass::critical: return "critical";
    }
    return "unknown";
}

EstimateReport profile_certificate(DecayClass cls, const CertificateConfig& config, const quad::QuadratureSpec& spec)
{
    const int dim = config.dim;
    const double n = dim;
    if (dim < 1) throw DomainError("profile_certificate: dimension must satisfy N >= 1");
    double tau = config.tau;
    double horizon = config.horizon;
    switch (cls) {
    case DecayClass::steep:
        if (std::isnan(tau)) tau = -(n + 1.0);
        if (!(tau < -n)) throw DomainError("profile_certificate: steep class needs tau < -N");
        if (horizon == 0.0) horizon = 0.5 * n;
        break;
    case DecayClass::intermediate:
        if (horizon == 0.0) horizon = 0.4 * n;
        if (std::isnan(tau)) tau = -2.0 * horizon;
        if (!(tau > -n) || !(tau <= -2.0 * horizon))
            throw DomainError("profile_certificate: intermediate class needs -N < tau <= -2T");
        break;
    case DecayClass::critical:
        tau = -n;
        if (horizon == 0.0) horizon = 0.5 * n;
        break;
    }
    if (!(horizon > 0.0) || horizon > 0.5 * n) throw DomainError("profile_certificate: need 0 < T <= N/2");

    std::vector<double> ts;
    for (double frac : config.t_fractions)
        if (frac * n < horizon) ts.push_back(frac * n);
    if (ts.empty()) throw DomainError("profile_certificate: no t sample below the horizon T");

    const RadialFunction f = RadialFunction::power_decay(tau);
    const double delta = config.shape_perturbation;
    auto shape = [&](double t, double r) {
        const double p = loglap::p0(t, dim);
        double s;
        switch (cls) {
        case DecayClass::steep: s = p / t * std::pow(1.0 + r, 2.0 * t - n); break;
        case DecayClass::intermediate: s = p / (2.0 * t) * std::pow(1.0 + r, 2.0 * t + tau); break;
        default: s = p / (2.0 * t) * std::pow(1.0 + r, 2.0 * t - n) * std::log(std::numbers::e + r); break;
        }
        return s * std::pow(1.0 + r, delta);
    };

    // base window and a window of twice the log-length with twice as many points
    const double lmin = std::log(config.r_min), lmax = std::log(config.r_max);
    const std::vector<double> radii = log_grid(config.r_min, std::exp(2.0 * lmax - lmin), 2 * config.points - 1);
    std::vector<double> values(radii.size() * ts.size());
    parallel_for(values.size(), [&](std::size_t k) {
        const double t = ts[k / radii.size()];
        const double r = radii[k % radii.size()];
        // the profile spans many decades, so only a relative tolerance is meaningful
        quad::QuadratureSpec local = spec;
        local.abs_tol = 1e-3 * spec.rel_tol * shape(t, r);
        values[k] = solve_cauchy(f, t, dim, local)(r);
    });
    std::vector<Comparison> base, doubled;
    for (std::size_t k = 0; k < values.size(); ++k) {
        const double t = ts[k / radii.size()];
        const std::size_t i = k % radii.size();
        const Comparison c{radii[i], t, values[k], shape(t, radii[i])};
        doubled.push_back(c);
        if (static_cast<int>(i) < config.points) base.push_back(c);
    }
    std::ostringstream canon;
    canon.precision(17);
    canon << "profile_certificate;" << to_string(cls) << ";N=" << dim << ";T=" << horizon << ";tau=" << tau
          << ";delta=" << delta << ";r=[" << config.r_min << "," << config.r_max << "];points=" << config.points
          << ";t=";
    for (double t : ts) canon << t << ",";
    canon << ";abs_tol=" << spec.abs_tol << ";rel_tol=" << spec.rel_tol;
    std::ostringstream region;
    region << "|x| in [" << config.r_min << ", " << config.r_max << "], doubled to " << radii.back()
           << "; class " << to_string(cls) << ", tau = " << tau << ", T = " << horizon;
    return two_sided_report(std::string("cauchy.profile.") + to_string(cls), region.str(), base, doubled,
                            config_hash(canon.str()));
}

double fitted_profile_exponent(const RadialFunction& f, double t, int dim, double r_min, double r_max, int points,
                               const quad::QuadratureSpec& spec)
{
    const CauchySolution u = solve_cauchy(f, t, dim, spec);
    const std::vector<double> radii = log_grid(r_min, r_max, points);
    std::vector<double> ly(radii.size());
    parallel_for(radii.size(), [&](std::size_t i) { ly[i] = std::log(u(radii[i])); });
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const double x = std::log1p(radii[i]);
        sx += x;
        sy += ly[i];
        sxx += x * x;
        sxy += x * ly[i];
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

double kernel_pairing(double t, const RadialFunction& phi, double r, int dim, const quad::QuadratureSpec& spec)
{
    return solve_cauchy(phi, t, dim, spec)(r);
}

DeltaLimit delta_limit(const RadialFunction& phi, double r, int dim, const std::vector<double>& ts,
                       const quad::QuadratureSpec& spec)
{
    if (ts.size() < 2) throw std::invalid_argument("delta_limit: need at least two t values");
    DeltaLimit out;
    out.ts = ts;
    for (double t : ts) out.pairings.push_back(kernel_pairing(t, phi, r, dim, spec));
    const std::size_t k = ts.size();
    const double t1 = ts[k - 2], t2 = ts[k - 1];
    const double v1 = out.pairings[k - 2], v2 = out.pairings[k - 1];
    out.extrapolated = (t1 * v2 - t2 * v1) / (t1 - t2);
    return out;
}

}  // namespace loglap

#include "loglap/riesz.hpp"

#include "loglap/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace loglap {

namespace {

constexpr int kInnerNodes = 20;
constexpr int kOuterNodes = 24;

void require_riesz_args(double t, int dim, double r, const char* who)
{
    detail::require_time(t, dim, who);
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError(std::string(who) + ": |x| must be finite and > 0");
}

// \int_a^b (gap2 + c w)^p (1 - w)^m w^q (2 - w)^q dw with an optional Jacobi weight
// absorbed at one end: side -1 takes w^q exactly at a = 0, side +1 takes (2-w)^q at b = 2.
double angular_panel(double a, double b, int side, double gap2, double c, double p, double q, int m)
{
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    const int n = side == 0 ? kInnerNodes : kOuterNodes;
    // Jacobi weight (1-x)^alpha (1+x)^beta on [-1, 1]
    const auto rule = side < 0 ? quad::gauss_jacobi(n, 0.0, q) : (side > 0 ? quad::gauss_jacobi(n, q, 0.0)
                                                                           : quad::gauss_legendre(n));
    double sum = 0.0;
    for (Eigen::Index i = 0; i < rule->nodes.size(); ++i) {
        const double w = mid + half * rule->nodes[i];
        double v = std::pow(gap2 + c * w, p);
        if (m == 1) v *= 1.0 - w;
        if (side < 0) v *= std::pow(2.0 - w, q);
        else if (side > 0) v *= std::pow(w, q);
        else v *= std::pow(w * (2.0 - w), q);
        sum += rule->weights[i] * v;
    }
    // the Jacobi weight on [-1,1] rescales by half^{q} on [a, b]
    if (side != 0) sum *= std::pow(half, q);
    return sum * half;
}

}  // namespace

double angular_kernel_local_coefficient(double t, int dim, double r)
{
    if (!(t < 0.5)) throw DomainError("angular_kernel_local_coefficient: requires t < 1/2");
    if (dim == 1) return 1.0;
    const double q1 = 0.5 * (dim - 1);
    return 0.5 * sphere_area<double>(dim - 1) *
           std::exp(special::log_gamma(q1) + special::log_gamma(0.5 - t) - special::log_gamma(0.5 * dim - t)) *
           std::pow(r, 1.0 - dim);
}

double angular_kernel(double t, int dim, double r, double s, double gap, int moment)
{
    const double e = 2.0 * t - dim;
    if (dim == 1) {
        const double sgn = moment == 1 ? -1.0 : 1.0;
        return std::pow(gap, e) + sgn * std::pow(r + s, e);
    }
    const double big = std::max(r, s);
    const double small = std::min(r, s);
    if (small == 0.0) return moment == 0 ? sphere_area<double>(dim) * std::pow(big, e) : 0.0;
    const double rho = small / big;
    const double g = gap / big;
    const double gap2 = g * g;
    const double c = 2.0 * rho;
    const double p = 0.5 * e;
    const double q = 0.5 * (dim - 3);
    const double scale = sphere_area<double>(dim - 1) * std::pow(big, e);
    if (gap2 == 0.0) {
        // on the diagonal the integral converges only for t > 1/2
        if (!(t > 0.5)) return std::numeric_limits<double>::infinity();
    }
    const double z = gap2 / c;  // the integrand is singular at w = -z
    double sum = 0.0;
    if (z >= 0.5) {
        // smooth on the whole range: one symmetric Jacobi rule in u = 1 - w
        const auto rule = quad::gauss_jacobi(kOuterNodes, q, q);
        for (Eigen::Index i = 0; i < rule->nodes.size(); ++i) {
            const double u = rule->nodes[i];
            double v = std::pow(gap2 + c * (1.0 - u), p);
            if (moment == 1) v *= u;
            sum += rule->weights[i] * v;
        }
        return scale * sum;
    }
    // graded panels in w toward the near-singular point
    double a = 0.0;
    double b = std::max(2.0 * z, 1e-300);
    sum += angular_panel(a, b, -1, gap2, c, p, q, moment);
    while (3.0 * b < 1.0) {
        sum += angular_panel(b, 3.0 * b, 0, gap2, c, p, q, moment);
        b *= 3.0;
    }
    sum += angular_panel(b, 2.0, +1, gap2, c, p, q, moment);
    return scale * sum;
}

namespace {

// Shared driver for scalar (moment 0) and radial-vector (moment 1) potentials.
quad::QuadratureResult riesz_driver(double t, const RadialFunction& f, double r, int dim,
                                    const quad::QuadratureSpec& spec, int moment)
{
    const double nm1 = dim - 1;
    const double inner = f.inner_exponent() + nm1;
    const double inner_kernel = moment == 1 ? 1.0 : 0.0;  // K^{(1)}(r, s) = O(s) as s -> 0
    if (!(inner + inner_kernel > -1.0))
        throw quad::DivergenceError("riesz_radial: profile too singular at the origin (need inner exponent > -N)");
    const TailModel& tail = f.tail();
    const double decay = tail.power + 2.0 * t - moment;  // integrand ~ s^{decay - 1} at infinity
    if (tail.kind == TailModel::Kind::power && !(decay < 0.0))
        throw quad::DivergenceError("riesz_radial: tail not integrable, need tail power + 2t < " +
                                    std::to_string(moment) + " (t = " + std::to_string(t) + ")");
    if (tail.kind == TailModel::Kind::oscillatory && !(decay < 1.0))
        throw quad::DivergenceError("riesz_radial: oscillating tail amplitude does not decay");

    const bool reg = t < 0.5;
    const double alpha = 2.0 * t - 1.0;
    const double bcoef = reg ? angular_kernel_local_coefficient(t, dim, r) : 0.0;

    auto F = [&](double s) {
        if (s <= 0.0) return 0.0;
        return f(s) * std::pow(s, nm1) * angular_kernel(t, dim, r, s, std::abs(r - s), moment);
    };
    // integrand divided by |r - s|^{2t-1}, evaluated at distance d from r
    auto regularised = [&](double s, double d) {
        if (d == 0.0 || s == r) return f(r) * std::pow(r, nm1) * bcoef;
        const double k = angular_kernel(t, dim, r, s, d, moment);
        return f(s) * std::pow(s, nm1) * k * std::pow(d, -alpha);
    };

    quad::QuadratureSpec inner_spec = spec;
    inner_spec.endpoint_mode = quad::EndpointMode::none;
    inner_spec.oscillatory_mode = quad::OscillatoryMode::none;

    // tail start
    double tail_start;
    if (tail.bounded_support()) {
        tail_start = std::max(tail.support, r);
    } else {
        tail_start = std::max({2.0 * r, r + 4.0, 8.0});
        for (double b : f.breakpoints()) tail_start = std::max(tail_start, 2.0 * b);
    }
    std::vector<double> cuts{0.0};
    for (double b : f.breakpoints())
        if (b > 0.0 && b < tail_start) cuts.push_back(b);
    cuts.push_back(r);
    cuts.push_back(tail_start);
    if (tail.kind == TailModel::Kind::oscillatory) {
        // split the finite range into half periods of the oscillation
        const double period = std::numbers::pi / tail.frequency;
        for (double x = period; x < tail_start; x += period) cuts.push_back(x);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    quad::QuadratureResult total;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i], b = cuts[i + 1];
        if (tail.bounded_support() && a >= tail.support) break;
        const bool sing_left = a == r, sing_right = b == r;
        const bool origin = a == 0.0 && inner < 0.0;
        if (!sing_left && !sing_right) {
            if (origin) {
                const double hh = b - a;
                // s^{inner} absorbed exactly
                total += quad::integrate_algebraic(
                    [&](double d) {
                        return f(d) * std::pow(d, -f.inner_exponent()) * angular_kernel(t, dim, r, d, std::abs(r - d), moment);
                    },
                    0.0, hh, inner, inner_spec);
            } else {
                total += quad::integrate(F, a, b, inner_spec);
            }
            continue;
        }
        // split off a neighbourhood of s = r
        const double len = b - a;
        const double h = std::min(len, 0.5 * r);
        double na = a, nb = b;
        if (sing_right) nb = b - h;
        else na = a + h;
        if (nb > na) {
            if (origin && na == 0.0) {
                total += quad::integrate_algebraic(
                    [&](double d) {
                        return f(d) * std::pow(d, -f.inner_exponent()) * angular_kernel(t, dim, r, d, std::abs(r - d), moment);
                    },
                    0.0, nb, inner, inner_spec);
            } else {
                total += quad::integrate(F, na, nb, inner_spec);
            }
        }
        if (reg) {
            const double sgn = sing_right ? -1.0 : 1.0;
            total += quad::integrate_algebraic([&](double d) { return regularised(r + sgn * d, d); }, 0.0, h,
                                               alpha, inner_spec);
        } else {
            total += quad::integrate(F, sing_right ? b - h : a, sing_right ? b : a + h, inner_spec);
        }
    }

    if (tail.bounded_support()) return total;

    if (tail.kind == TailModel::Kind::oscillatory) {
        quad::QuadratureSpec osc = inner_spec;
        osc.oscillatory_mode = quad::OscillatoryMode::half_period;
        osc.frequency = tail.frequency;
        osc.phase = tail.phase;
        total += quad::integrate(F, tail_start, std::numeric_limits<double>::infinity(), osc);
        return total;
    }

    // power tail: log-variable panels, then the leading-order remainder in closed form
    const double lead = moment == 0 ? sphere_area<double>(dim)
                                    : sphere_area<double>(dim) * (dim - 2.0 * t) / dim * r;
    auto remainder = [&](double R) {
        const double a = f.tail_amplitude(R);
        const double qd = decay;
        // J_k = \int_R^inf s^{qd-1} ln^k s ds
        double j = std::pow(R, qd) / (-qd);
        for (int k = 1; k <= tail.log_power; ++k)
            j = std::pow(R, qd) * std::pow(std::log(R), k) / (-qd) + k / (-qd) * j;
        return a * lead * j;
    };
    auto G = [&](double y) {
        const double s = std::exp(y);
        return F(s) * s;
    };
    double y0 = std::log(tail_start);
    double R = tail_start;
    for (int k = 0; k < 200; ++k) {
        const double y1 = y0 + 1.0;
        total += quad::integrate(G, y0, y1, inner_spec);
        y0 = y1;
        R = std::exp(y1);
        const double rem = remainder(R);
        const double rel = (1.0 + std::abs(tail.power)) / R + (r * r) / (R * R);
        if (std::abs(rem) * rel <= 0.1 * spec.tolerance(total.value)) {
            total.value += rem;
            total.error += std::abs(rem) * rel;
            return total;
        }
    }
    total.value += remainder(R);
    return total;
}

}  // namespace

quad::QuadratureResult riesz_radial_detail(double t, const RadialFunction& f, double r, int dim,
                                           const quad::QuadratureSpec& spec)
{
    require_riesz_args(t, dim, r, "riesz_radial");
    return riesz_driver(t, f, r, dim, spec, 0);
}

double riesz_radial(double t, const RadialFunction& f, double r, int dim, const quad::QuadratureSpec& spec)
{
    return riesz_radial_detail(t, f, r, dim, spec).value;
}

quad::QuadratureResult riesz_radial_vector_detail(double t, const RadialFunction& g, double r, int dim,
                                                  const quad::QuadratureSpec& spec)
{
    require_riesz_args(t, dim, r, "riesz_radial_vector");
    if (dim < 2) throw DomainError("riesz_radial_vector: requires N >= 2");
    return riesz_driver(t, g, r, dim, spec, 1);
}

double riesz_radial_vector(double t, const RadialFunction& g, double r, int dim, const quad::QuadratureSpec& spec)
{
    return riesz_radial_vector_detail(t, g, r, dim, spec).value;
}

GridFunction GridFunction::sample(int dim, int n, double half_width,
                                  const std::function<double(const Eigen::VectorXd&)>& f)
{
    if (dim < 1 || dim > 3) throw DomainError("GridFunction: dimension must be 1, 2 or 3");
    if (n < 1) throw std::invalid_argument("GridFunction: n must be >= 1");
    GridFunction g;
    g.dim = dim;
    g.n = n;
    g.half_width = half_width;
    Eigen::Index total = 1;
    for (int k = 0; k < dim; ++k) total *= n;
    g.values.resize(total);
    Eigen::VectorXd x(dim);
    for (Eigen::Index idx = 0; idx < total; ++idx) {
        Eigen::Index rem = idx;
        for (int k = dim - 1; k >= 0; --k) {
            x[k] = g.coordinate(static_cast<int>(rem % n));
            rem /= n;
        }
        g.values[idx] = f(x);
    }
    return g;
}

double riesz_bruteforce(double t, const GridFunction& f, const Eigen::VectorXd& x)
{
    const int d = f.dim;
    detail::require_time(t, d, "riesz_bruteforce");
    if (d < 1 || d > 3) throw DomainError("riesz_bruteforce: dimension must be 1, 2 or 3");
    if (x.size() != d) throw std::invalid_argument("riesz_bruteforce: point has wrong dimension");
    const double h = f.spacing();
    const double vol = std::pow(h, d);
    const double e = 2.0 * t - d;
    // \int_{|z|<rho} |z|^{2t-N} dz with |B_rho| = h^d
    const double omega = sphere_area<double>(d);
    const double rho = std::pow(vol * d / omega, 1.0 / d);
    const double self = omega * std::pow(rho, 2.0 * t) / (2.0 * t);
    // cell containing x
    Eigen::VectorXi home(d);
    for (int k = 0; k < d; ++k) home[k] = static_cast<int>(std::floor((x[k] + f.half_width) / h));
    const int n = f.n;
    Eigen::Index total = f.values.size();
    double sum = 0.0;
    Eigen::VectorXd y(d);
    for (Eigen::Index idx = 0; idx < total; ++idx) {
        const double v = f.values[idx];
        if (v == 0.0) continue;
        Eigen::Index rem = idx;
        bool is_home = true;
        double dist2 = 0.0;
        for (int k = d - 1; k >= 0; --k) {
            const int i = static_cast<int>(rem % n);
            rem /= n;
            if (i != home[k]) is_home = false;
            const double dx = x[k] - f.coordinate(i);
            dist2 += dx * dx;
        }
        if (is_home) sum += v * self;
        else sum += v * vol * std::pow(dist2, 0.5 * e);
    }
    return sum;
}

BoundEnvelope riesz_decay_envelope(double t, double tau, int dim, double constant)
{
    if (dim < 1) throw DomainError("riesz_decay_envelope: dimension must satisfy N >= 1");
    if (!(tau < 0.0)) throw DomainError("riesz_decay_envelope: requires tau < 0");
    const double n = dim;
    const double tmax = 0.5 * std::min(n, -tau);
    if (!(t > 0.0) || !(t < tmax))
        throw DomainError("riesz_decay_envelope: t must satisfy 0 < t < min(N, -tau)/2 = " + std::to_string(tmax));
    BoundEnvelope env;
    env.t = t;
    env.tau = tau;
    env.dim = dim;
    env.constant = constant;
    const double a = 2.0 * t;
    if (tau > -n) {
        env.lower_shape = [=](double r) { return std::min(std::pow(r, tau + a), t + std::pow(r, a)); };
        env.upper_shape = [=](double r) { return std::pow(r, a + tau); };
        env.far_lower_shape = [=](double r) { return std::pow(r, a + tau); };
        env.far_upper_shape = env.far_lower_shape;
    } else if (tau == -n) {
        env.lower_shape = [=](double r) {
            return std::min(std::pow(r, a - n) * std::log(std::numbers::e + r), t + std::pow(r, a));
        };
        env.upper_shape = [=](double r) { return std::pow(r, a - n) * std::log(std::numbers::e + r); };
        env.far_lower_shape = [=](double r) { return std::pow(r, a - n) * std::log(std::numbers::e + r); };
        env.far_upper_shape = env.far_lower_shape;
    } else {
        env.lower_shape = [=](double r) { return std::min(std::pow(r, a - n), t + std::pow(r, a)); };
        env.upper_shape = [=](double r) { return std::max(std::pow(r, a + tau), std::pow(r, a - n)); };
        env.far_lower_shape = [=](double r) { return std::pow(r, a - n); };
        env.far_upper_shape = env.far_lower_shape;
    }
    return env;
}

}  // namespace loglap

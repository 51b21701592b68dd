#include "loglap/radial.hpp"

#include "loglap/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace loglap {

namespace {

// Fritsch-Carlson slopes: shape preserving, no overshoot between nodes.
Eigen::ArrayXd monotone_slopes(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y)
{
    const Eigen::Index n = x.size();
    Eigen::ArrayXd d = Eigen::ArrayXd::Zero(n);
    if (n < 2) return d;
    Eigen::ArrayXd delta(n - 1);
    for (Eigen::Index i = 0; i + 1 < n; ++i) delta[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
    d[0] = delta[0];
    d[n - 1] = delta[n - 2];
    for (Eigen::Index i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            d[i] = 0.0;
            continue;
        }
        const double h0 = x[i] - x[i - 1], h1 = x[i + 1] - x[i];
        const double w1 = 2 * h1 + h0, w2 = h1 + 2 * h0;
        d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
    }
    return d;
}

double tail_shape(const TailModel& t, double r)
{
    double v = std::pow(r, t.power);
    if (t.log_power != 0) v *= std::pow(std::log(r), t.log_power);
    if (t.kind == TailModel::Kind::oscillatory) v *= std::sin(t.frequency * r - t.phase);
    return v;
}

double fit_oscillating_amplitude(const std::function<double(double)>& f, const TailModel& t, double radius)
{
    const double span = 2.0 * std::numbers::pi / t.frequency;
    double num = 0.0, den = 0.0;
    const int m = 32;
    for (int i = 0; i < m; ++i) {
        const double s = radius - span * (i + 0.5) / m;
        if (s <= 0) continue;
        const double b = tail_shape(t, s);
        num += f(s) * b;
        den += b * b;
    }
    return den > 0 ? num / den : 0.0;
}

}  // namespace

RadialFunction RadialFunction::from_callable(Evaluator f, double inner_exponent, TailModel tail,
                                             std::vector<double> breakpoints)
{
    if (!f) throw std::invalid_argument("RadialFunction: empty evaluator");
    RadialFunction out;
    out.eval_ = std::move(f);
    out.inner_exponent_ = inner_exponent;
    out.tail_ = tail;
    std::sort(breakpoints.begin(), breakpoints.end());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());
    out.breakpoints_ = std::move(breakpoints);
    if (tail.bounded_support() && tail.support > 0 &&
        std::find(out.breakpoints_.begin(), out.breakpoints_.end(), tail.support) == out.breakpoints_.end()) {
        out.breakpoints_.push_back(tail.support);
        std::sort(out.breakpoints_.begin(), out.breakpoints_.end());
    }
    return out;
}

RadialFunction RadialFunction::from_samples(Eigen::ArrayXd grid, Eigen::ArrayXd values, double inner_exponent,
                                            TailModel tail)
{
    if (grid.size() < 2 || grid.size() != values.size())
        throw std::invalid_argument("RadialFunction: need at least two samples of matching size");
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0) || (i > 0 && !(grid[i] > grid[i - 1])))
            throw std::invalid_argument("RadialFunction: grid must be positive and strictly increasing");
    }
    RadialFunction out;
    out.slopes_ = monotone_slopes(grid, values);
    out.grid_ = std::move(grid);
    out.values_ = std::move(values);
    out.inner_exponent_ = inner_exponent;
    out.tail_ = tail;
    if (tail.bounded_support() && tail.support > 0) out.breakpoints_.push_back(tail.support);
    const double rl = out.grid_[out.grid_.size() - 1];
    if (tail.kind == TailModel::Kind::power) {
        out.far_amplitude_ = out.values_[out.values_.size() - 1] / tail_shape(tail, rl);
    } else if (tail.kind == TailModel::Kind::oscillatory) {
        out.far_amplitude_ = fit_oscillating_amplitude([&](double s) { return out.interpolate(s); }, tail, rl);
    }
    return out;
}

RadialFunction RadialFunction::indicator_ball(double radius)
{
    if (!(radius > 0)) throw std::invalid_argument("indicator_ball: radius must be > 0");
    return from_callable([radius](double r) { return r <= radius ? 1.0 : 0.0; }, 0.0,
                         TailModel::compact_support(radius), {radius});
}

RadialFunction RadialFunction::power_decay(double tau)
{
    return from_callable([tau](double r) { return std::pow(1.0 + r, tau); }, 0.0, TailModel::power_law(tau));
}

RadialFunction RadialFunction::gaussian(double a)
{
    if (!(a > 0)) throw std::invalid_argument("gaussian: a must be > 0");
    // e^{-a r^2} < 1e-300 beyond this radius
    const double cut = std::sqrt(700.0 / a);
    return from_callable([a](double r) { return std::exp(-a * r * r); }, 0.0, TailModel::rapid_decay(cut));
}

double RadialFunction::interpolate(double r) const
{
    const Eigen::Index n = grid_.size();
    if (r <= grid_[0]) return values_[0] * std::pow(r / grid_[0], inner_exponent_);
    if (r >= grid_[n - 1]) {
        if (r == grid_[n - 1]) return values_[n - 1];
        switch (tail_.kind) {
        case TailModel::Kind::compact:
        case TailModel::Kind::rapid:
            return 0.0;
        case TailModel::Kind::power:
        case TailModel::Kind::oscillatory:
            return far_amplitude_ * tail_shape(tail_, r);
        }
    }
    const double* begin = grid_.data();
    const Eigen::Index i = std::upper_bound(begin, begin + n, r) - begin - 1;
    const double h = grid_[i + 1] - grid_[i];
    const double s = (r - grid_[i]) / h;
    const double h00 = (1 + 2 * s) * (1 - s) * (1 - s), h10 = s * (1 - s) * (1 - s);
    const double h01 = s * s * (3 - 2 * s), h11 = s * s * (s - 1);
    return h00 * values_[i] + h10 * h * slopes_[i] + h01 * values_[i + 1] + h11 * h * slopes_[i + 1];
}

double RadialFunction::operator()(double r) const
{
    if (eval_) return eval_(r);
    if (grid_.size() == 0) throw std::logic_error("RadialFunction: empty profile");
    return interpolate(r);
}

Eigen::ArrayXd RadialFunction::operator()(const Eigen::ArrayXd& r) const
{
    Eigen::ArrayXd out(r.size());
    for (Eigen::Index i = 0; i < r.size(); ++i) out[i] = (*this)(r[i]);
    return out;
}

double RadialFunction::tail_amplitude(double radius) const
{
    if (!eval_) return far_amplitude_;
    switch (tail_.kind) {
    case TailModel::Kind::power:
        return eval_(radius) / tail_shape(tail_, radius);
    case TailModel::Kind::oscillatory:
        return fit_oscillating_amplitude(eval_, tail_, radius);
    default:
        return 0.0;
    }
}

double weighted_l1_norm(const RadialFunction& f, int dim, double weight_power, const quad::QuadratureSpec& spec)
{
    const double omega = sphere_area<double>(dim);
    const TailModel& tail = f.tail();
    if (tail.kind == TailModel::Kind::oscillatory || (tail.kind == TailModel::Kind::power &&
                                                      tail.power + weight_power + dim >= 0.0))
        throw quad::DivergenceError("weighted_l1_norm: profile is not integrable at infinity");
    auto g = [&](double r) { return std::abs(f(r)) * std::pow(r, dim - 1) * std::pow(1.0 + r, weight_power); };
    std::vector<double> cuts{0.0};
    for (double b : f.breakpoints())
        if (b > 0) cuts.push_back(b);
    const double end = tail.bounded_support() ? tail.support : std::max(1.0, cuts.back());
    if (cuts.back() < end) cuts.push_back(end);
    quad::QuadratureResult total;
    const double alpha = f.inner_exponent() + dim - 1;
    if (!(alpha > -1.0)) throw quad::DivergenceError("weighted_l1_norm: profile is not integrable at the origin");
    // |f(d)| d^{N-1} (1+d)^w = [|f(d)| d^{-inner} (1+d)^w] d^{inner+N-1}
    auto h = [&](double d) {
        return std::abs(f(d)) * std::pow(1.0 + d, weight_power) * std::pow(d, -f.inner_exponent());
    };
    total += quad::integrate_algebraic(h, 0.0, cuts[1], alpha, spec);
    for (std::size_t i = 1; i + 1 < cuts.size(); ++i) total += quad::integrate(g, cuts[i], cuts[i + 1], spec);
    if (!tail.bounded_support()) total += quad::integrate(g, end, std::numeric_limits<double>::infinity(), spec);
    return omega * total.value;
}

double l1_norm(const RadialFunction& f, int dim, const quad::QuadratureSpec& spec)
{
    return weighted_l1_norm(f, dim, 0.0, spec);
}

}  // namespace loglap

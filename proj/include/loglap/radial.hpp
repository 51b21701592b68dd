#pragma once

#include "loglap/quadrature.hpp"

#include <Eigen/Core>

#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace loglap {

/// Behaviour of a radial profile as r -> infinity.
struct TailModel {
    enum class Kind {
        compact,      // f = 0 for r > support
        rapid,        // faster than any power; negligible beyond `support`
        power,        // ~ a r^power (ln r)^{log_power}
        oscillatory,  // ~ a r^power sin(frequency r - phase)
    };
    Kind kind = Kind::compact;
    double support = 0.0;
    double power = 0.0;
    int log_power = 0;
    double frequency = 1.0;
    double phase = 0.0;

    static TailModel compact_support(double radius) { return {Kind::compact, radius}; }
    static TailModel rapid_decay(double effective_radius) { return {Kind::rapid, effective_radius}; }
    static TailModel power_law(double p, int log_power = 0)
    {
        TailModel t;
        t.kind = Kind::power;
        t.power = p;
        t.log_power = log_power;
        return t;
    }
    static TailModel oscillating(double p, double phase, double frequency = 1.0)
    {
        TailModel t;
        t.kind = Kind::oscillatory;
        t.power = p;
        t.phase = phase;
        t.frequency = frequency;
        return t;
    }
    bool bounded_support() const { return kind == Kind::compact || kind == Kind::rapid; }
};

/// A radial profile f(|x|) with declared behaviour at 0 and at infinity.
///
/// Profiles are either backed by a callable or by samples on a grid. Sampled
/// profiles interpolate with a monotone (Fritsch-Carlson) cubic, extend to
/// small r with r^{inner_exponent} and to large r with the tail model.
class RadialFunction {
public:
    using Evaluator = std::function<double(double)>;

    RadialFunction() = default;

    static RadialFunction from_callable(Evaluator f, double inner_exponent, TailModel tail,
                                        std::vector<double> breakpoints = {});
    static RadialFunction from_samples(Eigen::ArrayXd grid, Eigen::ArrayXd values, double inner_exponent,
                                       TailModel tail);

    /// Indicator of the ball of radius R.
    static RadialFunction indicator_ball(double radius = 1.0);
    /// (1 + r)^tau.
    static RadialFunction power_decay(double tau);
    /// exp(-a r^2).
    static RadialFunction gaussian(double a = 1.0);

    double operator()(double r) const;
    Eigen::ArrayXd operator()(const Eigen::ArrayXd& r) const;

    double inner_exponent() const { return inner_exponent_; }
    const TailModel& tail() const { return tail_; }
    /// Radii where f or its derivative jumps (support edges, kinks).
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    bool sampled() const { return grid_.size() != 0; }
    const Eigen::ArrayXd& grid() const { return grid_; }
    const Eigen::ArrayXd& values() const { return values_; }

    /// Amplitude a of the tail model measured at radius R: f(R) / (R^p ln^k R),
    /// or, for oscillatory tails, the least-squares amplitude over one period before R.
    double tail_amplitude(double radius) const;

private:
    double interpolate(double r) const;

    Evaluator eval_;
    Eigen::ArrayXd grid_;
    Eigen::ArrayXd values_;
    Eigen::ArrayXd slopes_;
    double inner_exponent_ = 0.0;
    TailModel tail_;
    std::vector<double> breakpoints_;
    double far_amplitude_ = 0.0;
};

/// L^1(R^N) norm of a radial profile.
double l1_norm(const RadialFunction& f, int dim, const quad::QuadratureSpec& spec = {});

/// Weighted L^1 norm with weight (1 + |x|)^{weight_power}.
double weighted_l1_norm(const RadialFunction& f, int dim, double weight_power,
                        const quad::QuadratureSpec& spec = {});

}  // namespace loglap

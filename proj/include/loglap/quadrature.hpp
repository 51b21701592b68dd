#pragma once

#include <Eigen/Core>

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace loglap::quad {

enum class EndpointMode { none, algebraic_singularity, exponential_decay };
enum class OscillatoryMode { none, half_period };

inline constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 4000;
    EndpointMode endpoint_mode = EndpointMode::none;
    OscillatoryMode oscillatory_mode = OscillatoryMode::none;
    // algebraic exponents at a and b; NaN means unknown strength
    double left_exponent = kUnset;
    double right_exponent = kUnset;
    // decay length scale is 1/decay_rate for exponential_decay
    double decay_rate = kUnset;
    // oscillation sin(frequency * x - phase) for half_period partitioning
    double frequency = 1.0;
    double phase = 0.0;
    int max_half_periods = 2000;

    double tolerance(double value) const { return std::max(abs_tol, rel_tol * std::abs(value)); }
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    long evaluations = 0;

    QuadratureResult& operator+=(const QuadratureResult& o)
    {
        value += o.value;
        error += o.error;
        evaluations += o.evaluations;
        return *this;
    }
};

/// Raised when a requested tolerance cannot be met; carries the best estimate.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double estimate, double error_bound)
        : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound)
    {
    }
    double estimate() const { return estimate_; }
    double error_bound() const { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

/// Raised when an integral over an unbounded range does not converge.
class DivergenceError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Nodes and weights on [-1, 1].
struct GaussRule {
    Eigen::ArrayXd nodes;
    Eigen::ArrayXd weights;
};

/// Gauss-Legendre rule with n nodes (cached, thread safe).
std::shared_ptr<const GaussRule> gauss_legendre(int n);

/// Gauss-Jacobi rule for the weight (1 - x)^alpha (1 + x)^beta (cached, thread safe).
std::shared_ptr<const GaussRule> gauss_jacobi(int n, double alpha, double beta);

using Integrand = std::function<double(double)>;

/// Integral of f over [a, b]; b may be +infinity.
QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec = {});

/// Integral over [a, b] of g(d) d^alpha, where d is the distance to the singular
/// endpoint. g receives d itself (never the point), so d may be far below the
/// spacing of doubles near the endpoint. alpha > -1.
QuadratureResult integrate_algebraic(const Integrand& g, double a, double b, double alpha,
                                     const QuadratureSpec& spec = {});

/// Fixed-rule sum on [a, b].
double apply_rule(const GaussRule& rule, const Integrand& f, double a, double b);

/// Wynn epsilon extrapolation of a sequence of partial sums.
/// Returns the limit estimate; `error` receives the change of the last two estimates.
double wynn_epsilon(const std::vector<double>& partial_sums, double* error = nullptr);

}  // namespace loglap::quad

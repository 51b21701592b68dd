#pragma once

#include "loglap/quadrature.hpp"
#include "loglap/radial.hpp"
#include "loglap/report.hpp"

#include <limits>
#include <vector>

namespace loglap {

/// u_f(t, .) = P_0(t) (|.|^{2t-N} * f) for radial data f.
class CauchySolution {
public:
    CauchySolution(RadialFunction f, double t, int dim, quad::QuadratureSpec spec);

    double t() const { return t_; }
    int dim() const { return dim_; }
    double p0() const { return p0_; }
    const RadialFunction& data() const { return f_; }
    double norm_f_l1() const;

    /// u_f(t, x) at |x| = r; r = 0 is allowed.
    double operator()(double r) const;

    /// The profile as a radial datum for further propagation. Evaluations are exact
    /// (one Riesz quadrature per call); the tail is declared as a power law r^{2t-N}.
    RadialFunction as_radial() const;

private:
    RadialFunction f_;
    double t_;
    int dim_;
    double p0_;
    quad::QuadratureSpec spec_;
};

/// Representation formula. Any 0 < t < N/2 is accepted; when the Riesz integral diverges
/// the error names the weighted class that f would have to belong to.
CauchySolution solve_cauchy(const RadialFunction& f, double t, int dim, const quad::QuadratureSpec& spec = {});

/// (|.|^{2t-N} * f)(0) = omega_N \int_0^inf f(s) s^{2t-1} ds.
double riesz_at_origin(double t, const RadialFunction& f, int dim, const quad::QuadratureSpec& spec = {});

struct BlowupPoint {
    double t = 0.0;
    double value = 0.0;  // (N - 2t) u_f(t, x)
};

/// (N - 2t) u_f(t, x) at |x| = r for each t in `ts`.
std::vector<BlowupPoint> blowup_rate(const RadialFunction& f, double r, int dim, const std::vector<double>& ts,
                                     const quad::QuadratureSpec& spec = {});

/// Limit of (N - 2t) u_f as t -> N/2: 2 (4 pi)^{-N/2} / Gamma(N/2) * ||f||_1.
double blowup_limit(const RadialFunction& f, int dim, const quad::QuadratureSpec& spec = {});

/// Decay classes of radial data for the profile estimate.
enum class DecayClass {
    steep,         // f <= M (1+|y|)^tau, tau < -N
    intermediate,  // f ~ (1+|y|)^tau, -N < tau <= -2T
    critical,      // f ~ (1+|y|)^{-N}
};

const char* to_string(DecayClass c);

struct CertificateConfig {
    int dim = 3;
    /// Horizon T of the integrability window; t samples must lie below it.
    double horizon = 0.0;  // 0 means N/2 (steep, critical) or 0.4 N (intermediate)
    /// Decay exponent of the datum (1+|y|)^tau; NaN picks the class default.
    double tau = std::numeric_limits<double>::quiet_NaN();
    /// Exponent added to the certified shape; nonzero values falsify the estimate.
    double shape_perturbation = 0.0;
    double r_min = 0.1;
    double r_max = 100.0;
    int points = 16;
    std::vector<double> t_fractions{0.1, 0.25, 0.4};  // t = fraction * N, filtered by t < T
};

/// Two-sided profile sandwich with one measured constant over a log grid of |x|;
/// each sample appears twice, as u <= c shape and shape <= c u.
EstimateReport profile_certificate(DecayClass cls, const CertificateConfig& config = {},
                                   const quad::QuadratureSpec& spec = {});

/// Least-squares slope of ln u_f(t, r) against ln(1 + r) over r in [r_min, r_max].
double fitted_profile_exponent(const RadialFunction& f, double t, int dim, double r_min, double r_max, int points,
                               const quad::QuadratureSpec& spec = {});

/// \int P_ln(t, x) phi(x - x0) dx for radial phi and |x0| = r, i.e. u_phi(t, r).
double kernel_pairing(double t, const RadialFunction& phi, double r, int dim, const quad::QuadratureSpec& spec = {});

struct DeltaLimit {
    std::vector<double> ts;
    std::vector<double> pairings;
    double extrapolated = 0.0;  // Richardson extrapolation on the last two t values, first-order in t
};

/// Pairings at decreasing t and their extrapolation to t = 0; the limit should equal phi(r).
DeltaLimit delta_limit(const RadialFunction& phi, double r, int dim, const std::vector<double>& ts,
                       const quad::QuadratureSpec& spec = {});

}  // namespace loglap

#pragma once

#include "loglap/quadrature.hpp"
#include "loglap/radial.hpp"

#include <Eigen/Core>

#include <functional>

namespace loglap {

/// Angular kernel K(r, s) = \int_{S^{N-1}} |r e - s sigma|^{2t-N} (sigma . e)^m d sigma, m in {0, 1}.
///
/// `gap` is |r - s| passed separately so that points extremely close to the
/// diagonal keep their relative accuracy.
double angular_kernel(double t, int dim, double r, double s, double gap, int moment = 0);

inline double angular_kernel(double t, int dim, double r, double s, int moment = 0)
{
    return angular_kernel(t, dim, r, s, std::abs(r - s), moment);
}

/// Coefficient B of the local law K(r, s) ~ B |r - s|^{2t-1} as s -> r, for t < 1/2.
double angular_kernel_local_coefficient(double t, int dim, double r);

/// (|.|^{2t-N} * f)(x) at |x| = r for a radial f, 0 < t < N/2.
quad::QuadratureResult riesz_radial_detail(double t, const RadialFunction& f, double r, int dim,
                                           const quad::QuadratureSpec& spec = {});

double riesz_radial(double t, const RadialFunction& f, double r, int dim, const quad::QuadratureSpec& spec = {});

/// Radial component of |.|^{2t-N} * (g(|y|) y/|y|) at |x| = r.
quad::QuadratureResult riesz_radial_vector_detail(double t, const RadialFunction& g, double r, int dim,
                                                  const quad::QuadratureSpec& spec = {});

double riesz_radial_vector(double t, const RadialFunction& g, double r, int dim,
                           const quad::QuadratureSpec& spec = {});

/// Cell-centred samples on the cube [-half_width, half_width]^d.
struct GridFunction {
    int dim = 1;
    int n = 0;
    double half_width = 1.0;
    Eigen::ArrayXd values;  // row-major, index (i_0, ..., i_{d-1})

    double spacing() const { return 2.0 * half_width / n; }
    double coordinate(int i) const { return -half_width + spacing() * (i + 0.5); }

    static GridFunction sample(int dim, int n, double half_width,
                               const std::function<double(const Eigen::VectorXd&)>& f);
};

/// Direct tensor-grid evaluation of (|.|^{2t-N} * f)(x) for N = d in {1, 2, 3}.
/// The cell containing x uses the exact kernel integral over a ball of equal volume.
double riesz_bruteforce(double t, const GridFunction& f, const Eigen::VectorXd& x);

/// Two-sided bound  lower(|x|) <= (|.|^{2t-N} * (1+|.|)^tau)(x) <= upper(|x|).
struct BoundEnvelope {
    double t = 0.0;
    double tau = 0.0;
    int dim = 0;
    double constant = 1.0;
    std::function<double(double)> lower_shape;
    std::function<double(double)> upper_shape;
    /// Shapes simplified for |x| >= 1.
    std::function<double(double)> far_lower_shape;
    std::function<double(double)> far_upper_shape;

    double lower(double r) const { return lower_shape(r) / (constant * t); }
    double upper(double r) const { return constant * upper_shape(r) / t; }
};

/// Envelope for the Riesz potential of (1 + |y|)^tau, tau < 0, 0 < t < min(N, -tau)/2.
BoundEnvelope riesz_decay_envelope(double t, double tau, int dim, double constant = 1.0);

}  // namespace loglap

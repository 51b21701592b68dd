#pragma once

#include "loglap/helmholtz.hpp"
#include "loglap/quadrature.hpp"
#include "loglap/radial.hpp"
#include "loglap/report.hpp"

#include <cmath>
#include <functional>
#include <memory>

namespace loglap {

/// Default tolerances for the composed quadratures: the outer t-integral runs at
/// rel_tol and every inner Riesz potential ten times tighter.
quad::QuadratureSpec fundamental_spec();

/// Radial fundamental solution Phi_ln = u_* + v_1 of the logarithmic Laplacian, N >= 3:
///   u_*(r) = \int_0^1 P_0(t) r^{2t-N} dt,
///   v_1(r) = \int_0^1 P_0(t) (|.|^{2t-N} * Phi_1)(r) dt.
class FundamentalSolution {
public:
    explicit FundamentalSolution(int dim, quad::QuadratureSpec spec = fundamental_spec());

    int dim() const { return dim_; }
    const quad::QuadratureSpec& spec() const { return spec_; }
    /// c0 = Gamma(N/2) / (4 pi^{N/2}); Phi_ln(r) r^N ln^2 r tends to c0 as r -> 0.
    double c0() const { return c0_; }

    double u_star(double r) const;
    /// r^N u_*(r) = \int_0^1 P_0(t) e^{-2 t y} dt with y = -ln r; finite for any y.
    double scaled_u_star_log(double y) const;
    double grad_u_star(double r) const;
    double v_one(double r) const;
    double grad_v_one(double r) const;
    double phi_ln(double r) const { return u_star(r) + v_one(r); }
    double grad_phi_ln(double r) const { return grad_u_star(r) + grad_v_one(r); }

    /// Phi_ln(r) r^N ln^2 r / c0.
    double near_origin_ratio(double r) const;

    const HelmholtzProfile& helmholtz() const { return helmholtz_; }

private:
    // \int_0^1 P_0(t) g(t) dt with t = tau^2 grading and panels adapted to r^{2t}, given ln r
    double t_integral(const std::function<double(double)>& g, double log_r) const;

    int dim_;
    quad::QuadratureSpec spec_;
    double c0_;
    HelmholtzProfile helmholtz_;
    RadialFunction phi1_;
    RadialFunction phi1_prime_;
};

/// Phi_ln with v_1 interpolated from a table; u_* stays exact. Used where many
/// evaluations are needed (level sets, Orlicz integrals, convolutions).
///
/// Beyond r_max the table continues as Phi_1(r) + kappa r^{-N} / ln^2 r, kappa matched at r_max:
/// the symbols 1/(2 ln|xi|) and 1/(|xi|^2 - 1) share their singular part at |xi| = 1, and what is
/// left is singular only at xi = 0.
class PhiLnTable {
public:
    /// v_1 on a log grid of [r_min, 1] and a uniform grid of [1, r_max] with step h.
    PhiLnTable(const FundamentalSolution& fs, double r_min = 1e-6, double r_max = 60.0, double h = 0.25,
               int log_points = 41);

    const FundamentalSolution& solution() const { return *fs_; }
    double r_min() const { return r_min_; }
    double r_max() const { return r_max_; }
    double v_one(double r) const;
    double phi_ln(double r) const;
    /// ln |Phi_ln(r)| evaluated through r^N Phi_ln, safe for r far below 1e-100.
    double log_abs_phi_ln_at(double y) const;  // y = -ln r

    /// The tabulated grid and values (for output).
    const RadialFunction& v_one_table() const { return v1_; }

private:
    std::shared_ptr<const FundamentalSolution> fs_;
    RadialFunction v1_;
    double r_min_, r_max_;
    double kappa_ = 0.0;
};

/// The radial Fourier transform of u_* for N = 3 by the sine-transform reduction
/// (4 pi / xi) \int_0^inf u_*(r) r sin(xi r) dr; should equal (1 - xi^{-2}) / (2 ln xi).
double u_star_fourier_n3(const FundamentalSolution& fs, double xi);

/// Symbol-inverse oracle for N = 3: v_1(r) = (1 / (2 pi^2 r)) PV \int_0^inf sin(k r) / (2 k ln k) dk,
/// the principal value taken symmetrically about k = 1, the tail by half-period acceleration.
/// Adding u_* gives Phi_ln, the inverse transform of 1 / (2 ln |xi|).
double v_one_fourier_n3(double r, const quad::QuadratureSpec& spec = {});
double phi_ln_fourier_n3(const FundamentalSolution& fs, double r, const quad::QuadratureSpec& spec = {});

/// \int_{r_k}^1 |Phi_ln(r)| r^{N-1} dr for cut-offs given as y_k = -ln r_k (increasing), so that
/// radii far below the smallest double are reachable.
std::vector<double> local_integrability_sequence(const PhiLnTable& table, const std::vector<double>& log_cutoffs);

/// Near-origin band  |Phi_ln - c0 r^{-N} / ln^2 r| <= c1 r^{-N+delta} / |ln r|^3  for -ln r in [1, y_max],
/// doubled to [1, 2 y_max - 1]. delta = 0 is the true estimate.
EstimateReport near_origin_report(const FundamentalSolution& fs, double y_max = 12.0, int points = 12,
                                  double exponent_perturbation = 0.0);

/// Far field  |Phi_ln| r^{(N-3)/2} ln r <= c  on [r_min, r_max] with window doubling.
EstimateReport far_field_report(const FundamentalSolution& fs, double r_min = 2.0, double r_max = 50.0,
                                int points = 12);

/// Gradient bound |grad Phi_ln| <= c max{r^{-N-1+delta}/(1+ln^2 r), (1+ln^2 r)^{-1/2}} on a log
/// window, doubled in log-length about its geometric centre.
EstimateReport gradient_report(const FundamentalSolution& fs, double r_min = 0.05, double r_max = 20.0,
                               int points = 12, double exponent_perturbation = 0.0);

}  // namespace loglap

#pragma once

#include "loglap/radial.hpp"
#include "loglap/report.hpp"

namespace loglap {

/// Real radial fundamental solution of -Delta u - u = delta_0 in R^N, N >= 3:
///   Phi_1(r) = -(1/4) (2 pi r)^{1-N/2} Y_{N/2-1}(r).
class HelmholtzProfile {
public:
    explicit HelmholtzProfile(int dim);

    int dim() const { return dim_; }
    double order() const { return nu_; }
    /// Gamma(N/2 - 1) / (4 pi^{N/2}); Phi_1(r) r^{N-2} tends to it as r -> 0.
    double near_constant() const { return near_constant_; }

    double phi(double r) const;
    double phi_prime(double r) const;

    /// Leading far-field term -sin(r - (N-1) pi/4) / (2 (2 pi r)^{(N-1)/2}).
    double far_field(double r) const;

    /// Profiles with their declared inner and oscillating tail behaviour.
    RadialFunction as_radial() const;
    RadialFunction derivative_as_radial() const;

private:
    int dim_;
    double nu_;
    double near_constant_;
};

double phi1(double r, int dim);
double phi1_prime(double r, int dim);

/// |Phi_1'' + (N-1)/r Phi_1' + Phi_1| with Phi_1'' from a fourth-order central difference.
double helmholtz_residual(double r, int dim);

/// Scale used for the residual tolerance: max(|Phi_1(r)|, r^{-N}).
double helmholtz_residual_scale(double r, int dim);

/// Largest relative deviation of J Y' - J' Y from 2/(pi x) at order N/2 - 1 over `radii`.
double wronskian_error(int dim, const std::vector<double>& radii);

/// omega_N r^{N-1} Phi_1'(r); tends to -1 as r -> 0.
double helmholtz_flux(double r, int dim);

/// |Phi_1 - far_field| <= C r^{-(N+1)/2} on [r_min, r_max] with window doubling.
EstimateReport helmholtz_far_field_report(int dim, double r_min = 10.0, double r_max = 500.0, int points = 200);

}  // namespace loglap

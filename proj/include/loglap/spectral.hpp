#pragma once

#include "loglap/quadrature.hpp"

#include <Eigen/Core>

#include <complex>
#include <functional>

namespace loglap {

/// Real samples on the periodic box [-L, L)^d, n points per axis, row-major.
struct PeriodicField {
    int dim = 1;
    int n = 0;
    double half_width = 1.0;
    Eigen::ArrayXd values;

    double spacing() const { return 2.0 * half_width / n; }
    double coordinate(int i) const { return -half_width + spacing() * i; }
    Eigen::Index size() const { return values.size(); }
    /// Coordinates of the flat index.
    Eigen::VectorXd point(Eigen::Index flat) const;

    static PeriodicField sample(int dim, int n, double half_width,
                                const std::function<double(const Eigen::VectorXd&)>& f);
};

/// Discrete Fourier coefficients; frequency of index k is (pi/L) * (k < n/2 ? k : k - n).
struct SpectralField {
    int dim = 1;
    int n = 0;
    double half_width = 1.0;
    Eigen::ArrayXcd coefficients;

    double wavenumber(int k) const;
    /// |xi| for the flat index.
    double frequency_norm(Eigen::Index flat) const;
};

SpectralField to_spectral(const PeriodicField& u);

/// Inverse transform; `max_imag` receives the largest imaginary residue.
PeriodicField to_physical(const SpectralField& u, double* max_imag = nullptr);

/// Multiplies every nonzero mode by symbol(|xi|); the zero mode is set to 0.
SpectralField apply_radial_symbol(const SpectralField& u, const std::function<double(double)>& symbol);

/// Inverse transform of 2 ln|xi| u_hat, zero mode mapped to 0.
PeriodicField apply_loglap_spectral(const PeriodicField& u, double* max_imag = nullptr);

/// Inverse transform of |xi|^{2s} u_hat, 0 < s < 1, zero mode mapped to 0.
PeriodicField fractional_laplacian_spectral(const PeriodicField& u, double s, double* max_imag = nullptr);

/// Multiplier |xi|^{-2t}, 0 <= t < d/2; requires mean-zero data.
PeriodicField cauchy_propagate_spectral(const PeriodicField& f, double t, double* max_imag = nullptr);

/// Mean over the box.
double box_mean(const PeriodicField& u);

/// Logarithmic Laplacian of a decaying function at x by the singular-integral definition, N = dim(x) in {1, 2, 3}.
double apply_loglap_direct(const std::function<double(const Eigen::VectorXd&)>& u, const Eigen::VectorXd& x,
                           const quad::QuadratureSpec& spec = {});

}  // namespace loglap

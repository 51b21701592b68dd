#include "loglap/spectral.hpp"

#include "loglap/core.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace loglap {

namespace {

void validate_grid(int dim, int n, double half_width)
{
    if (dim < 1 || dim > 3) throw DomainError("periodic grid: dimension must be 1, 2 or 3");
    if (n < 16 || (n & (n - 1)) != 0) throw DomainError("periodic grid: n must be a power of two >= 16");
    if (!(half_width > 0.0)) throw DomainError("periodic grid: half width must be > 0");
}

Eigen::Index total_size(int dim, int n)
{
    Eigen::Index t = 1;
    for (int k = 0; k < dim; ++k) t *= n;
    return t;
}

// In-place transform of every line along every axis.
void transform(Eigen::ArrayXcd& data, int dim, int n, bool inverse)
{
    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> line(n), out(n);
    const Eigen::Index total = data.size();
    Eigen::Index stride = 1;
    for (int axis = dim - 1; axis >= 0; --axis) {
        const Eigen::Index block = stride * n;
        for (Eigen::Index outer = 0; outer < total; outer += block) {
            for (Eigen::Index inner = 0; inner < stride; ++inner) {
                const Eigen::Index base = outer + inner;
                for (int i = 0; i < n; ++i) line[i] = data[base + i * stride];
                if (inverse) fft.inv(out, line);
                else fft.fwd(out, line);
                for (int i = 0; i < n; ++i) data[base + i * stride] = out[i];
            }
        }
        stride *= n;
    }
}

}  // namespace

Eigen::VectorXd PeriodicField::point(Eigen::Index flat) const
{
    Eigen::VectorXd x(dim);
    for (int k = dim - 1; k >= 0; --k) {
        x[k] = coordinate(static_cast<int>(flat % n));
        flat /= n;
    }
    return x;
}

PeriodicField PeriodicField::sample(int dim, int n, double half_width,
                                    const std::function<double(const Eigen::VectorXd&)>& f)
{
    validate_grid(dim, n, half_width);
    PeriodicField u;
    u.dim = dim;
    u.n = n;
    u.half_width = half_width;
    u.values.resize(total_size(dim, n));
    for (Eigen::Index i = 0; i < u.values.size(); ++i) u.values[i] = f(u.point(i));
    return u;
}

double SpectralField::wavenumber(int k) const
{
    const int m = k < n / 2 ? k : k - n;
    return std::numbers::pi / half_width * m;
}

double SpectralField::frequency_norm(Eigen::Index flat) const
{
    double s = 0.0;
    for (int k = 0; k < dim; ++k) {
        const double w = wavenumber(static_cast<int>(flat % n));
        s += w * w;
        flat /= n;
    }
    return std::sqrt(s);
}

SpectralField to_spectral(const PeriodicField& u)
{
    validate_grid(u.dim, u.n, u.half_width);
    if (u.values.size() != total_size(u.dim, u.n)) throw std::invalid_argument("to_spectral: wrong value count");
    SpectralField s;
    s.dim = u.dim;
    s.n = u.n;
    s.half_width = u.half_width;
    s.coefficients = u.values.cast<std::complex<double>>();
    transform(s.coefficients, u.dim, u.n, false);
    return s;
}

PeriodicField to_physical(const SpectralField& s, double* max_imag)
{
    Eigen::ArrayXcd data = s.coefficients;
    transform(data, s.dim, s.n, true);
    PeriodicField u;
    u.dim = s.dim;
    u.n = s.n;
    u.half_width = s.half_width;
    u.values = data.real();
    if (max_imag) *max_imag = data.size() ? data.imag().abs().maxCoeff() : 0.0;
    return u;
}

SpectralField apply_radial_symbol(const SpectralField& u, const std::function<double(double)>& symbol)
{
    SpectralField out = u;
    for (Eigen::Index i = 0; i < out.coefficients.size(); ++i) {
        const double xi = out.frequency_norm(i);
        out.coefficients[i] = xi == 0.0 ? std::complex<double>(0.0) : out.coefficients[i] * symbol(xi);
    }
    return out;
}

double box_mean(const PeriodicField& u) { return u.values.size() ? u.values.mean() : 0.0; }

PeriodicField apply_loglap_spectral(const PeriodicField& u, double* max_imag)
{
    return to_physical(apply_radial_symbol(to_spectral(u), [](double xi) { return 2.0 * std::log(xi); }), max_imag);
}

PeriodicField fractional_laplacian_spectral(const PeriodicField& u, double s, double* max_imag)
{
    if (!(s > 0.0) || !(s < 1.0)) throw DomainError("fractional_laplacian_spectral: s must satisfy 0 < s < 1");
    return to_physical(apply_radial_symbol(to_spectral(u), [s](double xi) { return std::pow(xi, 2.0 * s); }),
                       max_imag);
}

PeriodicField cauchy_propagate_spectral(const PeriodicField& f, double t, double* max_imag)
{
    validate_grid(f.dim, f.n, f.half_width);
    const double upper = 0.5 * f.dim;
    if (!(t >= 0.0) || !(t < upper))
        throw DomainError("cauchy_propagate_spectral: t must satisfy 0 <= t < d/2 = " + std::to_string(upper));
    const double norm = f.values.abs().maxCoeff();
    if (std::abs(box_mean(f)) > 1e-12 * norm)
        throw DomainError("cauchy_propagate_spectral: data must be mean-zero (|mean| <= 1e-12 * max|f|)");
    if (t == 0.0) {
        if (max_imag) *max_imag = 0.0;
        return f;
    }
    return to_physical(apply_radial_symbol(to_spectral(f), [t](double xi) { return std::pow(xi, -2.0 * t); }),
                       max_imag);
}

double apply_loglap_direct(const std::function<double(const Eigen::VectorXd&)>& u, const Eigen::VectorXd& x,
                           const quad::QuadratureSpec& spec)
{
    const int dim = static_cast<int>(x.size());
    if (dim < 1 || dim > 3) throw DomainError("apply_loglap_direct: dimension must be 1, 2 or 3");
    const Dimension<double> d = make_dimension<double>(dim);
    const double ux = u(x);
    quad::QuadratureSpec angular = spec;
    angular.abs_tol = spec.abs_tol * 1e-2;
    angular.endpoint_mode = quad::EndpointMode::none;
    angular.oscillatory_mode = quad::OscillatoryMode::none;
    // average of u over the sphere of radius h about x
    auto mean = [&](double h) -> double {
        Eigen::VectorXd y(dim);
        if (dim == 1) {
            y[0] = x[0] + h;
            const double a = u(y);
            y[0] = x[0] - h;
            return 0.5 * (a + u(y));
        }
        if (dim == 2) {
            auto g = [&](double phi) {
                y[0] = x[0] + h * std::cos(phi);
                y[1] = x[1] + h * std::sin(phi);
                return u(y);
            };
            return quad::integrate(g, 0.0, 2.0 * std::numbers::pi, angular).value / (2.0 * std::numbers::pi);
        }
        auto ring = [&](double c) {
            const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
            auto g = [&](double phi) {
                Eigen::VectorXd z(3);
                z[0] = x[0] + h * s * std::cos(phi);
                z[1] = x[1] + h * s * std::sin(phi);
                z[2] = x[2] + h * c;
                return u(z);
            };
            return quad::integrate(g, 0.0, 2.0 * std::numbers::pi, angular).value;
        };
        return quad::integrate(ring, -1.0, 1.0, angular).value / (4.0 * std::numbers::pi);
    };
    quad::QuadratureSpec radial = spec;
    radial.endpoint_mode = quad::EndpointMode::none;
    radial.oscillatory_mode = quad::OscillatoryMode::none;
    // the spherical mean cancels the linear Taylor term, so (u(x) - M(h))/h = O(h)
    const double inner = quad::integrate([&](double h) { return (ux - mean(h)) / h; }, 0.0, 1.0, radial).value;
    const double outer =
        quad::integrate([&](double h) { return mean(h) / h; }, 1.0, std::numeric_limits<double>::infinity(), radial)
            .value;
    // c_N omega_N = 2
    return 2.0 * (inner - outer) + d.rho_n * ux;
}

}  // namespace loglap

#include "loglap/helmholtz.hpp"

#include "loglap/core.hpp"
#include "loglap/special.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace loglap {

namespace {

constexpr double kPi = std::numbers::pi;

void require_helmholtz(int dim, double r, const char* who)
{
    if (dim < 3) throw DomainError(std::string(who) + ": requires N >= 3");
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError(std::string(who) + ": r must be finite and > 0");
}

}  // namespace

HelmholtzProfile::HelmholtzProfile(int dim) : dim_(dim), nu_(0.5 * dim - 1.0)
{
    if (dim < 3) throw DomainError("HelmholtzProfile: requires N >= 3");
    near_constant_ = special::gamma(0.5 * dim - 1.0) / (4.0 * std::pow(kPi, 0.5 * dim));
}

double HelmholtzProfile::phi(double r) const
{
    require_helmholtz(dim_, r, "phi1");
    const auto b = special::bessel_jy(nu_, r);
    return -0.25 * std::pow(2.0 * kPi * r, -nu_) * b.y;
}

double HelmholtzProfile::phi_prime(double r) const
{
    require_helmholtz(dim_, r, "phi1_prime");
    const auto b = special::bessel_jy(nu_, r);
    // d/dr [r^{-nu} Y_nu] = r^{-nu} (Y_nu' - nu Y_nu / r)
    return -0.25 * std::pow(2.0 * kPi * r, -nu_) * (b.yp - nu_ * b.y / r);
}

double HelmholtzProfile::far_field(double r) const
{
    return -std::sin(r - 0.25 * (dim_ - 1) * kPi) / (2.0 * std::pow(2.0 * kPi * r, 0.5 * (dim_ - 1)));
}

RadialFunction HelmholtzProfile::as_radial() const
{
    const HelmholtzProfile self = *this;
    return RadialFunction::from_callable([self](double r) { return self.phi(r); }, 2.0 - dim_,
                                         TailModel::oscillating(0.5 * (1 - dim_), 0.25 * (dim_ - 1) * kPi));
}

RadialFunction HelmholtzProfile::derivative_as_radial() const
{
    const HelmholtzProfile self = *this;
    // Phi_1' ~ -cos(r - (N-1) pi/4) / (2 (2 pi r)^{(N-1)/2}) = amplitude * sin(r - (N+1) pi/4)
    return RadialFunction::from_callable([self](double r) { return self.phi_prime(r); }, 1.0 - dim_,
                                         TailModel::oscillating(0.5 * (1 - dim_), 0.25 * (dim_ + 1) * kPi));
}

double phi1(double r, int dim) { return HelmholtzProfile(dim).phi(r); }

double phi1_prime(double r, int dim) { return HelmholtzProfile(dim).phi_prime(r); }

double helmholtz_residual(double r, int dim)
{
    require_helmholtz(dim, r, "helmholtz_residual");
    const HelmholtzProfile h(dim);
    const double step = 5e-3 * std::min(r, 1.0);
    const double f0 = h.phi(r);
    const double second = (-h.phi(r + 2 * step) + 16.0 * h.phi(r + step) - 30.0 * f0 + 16.0 * h.phi(r - step) -
                           h.phi(r - 2 * step)) /
                          (12.0 * step * step);
    return std::abs(second + (dim - 1.0) / r * h.phi_prime(r) + f0);
}

double helmholtz_residual_scale(double r, int dim)
{
    return std::max(std::abs(phi1(r, dim)), std::pow(r, -static_cast<double>(dim)));
}

double wronskian_error(int dim, const std::vector<double>& radii)
{
    const double nu = 0.5 * dim - 1.0;
    double worst = 0.0;
    for (double x : radii) {
        const auto b = special::bessel_jy(nu, x);
        const double w = b.j * b.yp - b.jp * b.y;
        const double exact = 2.0 / (kPi * x);
        worst = std::max(worst, std::abs(w - exact) / exact);
    }
    return worst;
}

double helmholtz_flux(double r, int dim)
{
    return sphere_area<double>(dim) * std::pow(r, dim - 1.0) * phi1_prime(r, dim);
}

EstimateReport helmholtz_far_field_report(int dim, double r_min, double r_max, int points)
{
    const HelmholtzProfile h(dim);
    const double far_max = r_max * r_max / r_min;
    const std::vector<double> radii = log_grid(r_min, far_max, 2 * points - 1);
    std::vector<Sample> base, doubled;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const double r = radii[i];
        const Sample s{r, 0.0, std::abs(h.phi(r) - h.far_field(r)), std::pow(r, -0.5 * (dim + 1))};
        doubled.push_back(s);
        if (static_cast<int>(i) < points) base.push_back(s);
    }
    std::ostringstream canon, region;
    canon.precision(17);
    canon << "helmholtz.far_field;N=" << dim << ";r=[" << r_min << "," << r_max << "];points=" << points;
    region << "r in [" << r_min << ", " << r_max << "], doubled to " << far_max;
    // for N = 3 the leading term is exact; anything below 1e-10 is rounding
    return stable_constant_report("helmholtz.far_field", region.str(), std::move(base), std::move(doubled),
                                  config_hash(canon.str()), 1e-10);
}

}  // namespace loglap

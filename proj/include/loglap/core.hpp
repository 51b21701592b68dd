#pragma once

#include "loglap/special.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace loglap {

using special::DomainError;

/// Dimension-dependent constants of the logarithmic Laplacian.
template <typename Scalar = double>
struct Dimension {
    int n = 0;
    Scalar omega_n = 0;  // surface area of the unit sphere in R^n
    Scalar c_n = 0;      // pi^{-n/2} Gamma(n/2) = 2 / omega_n
    Scalar rho_n = 0;    // 2 ln 2 + psi(n/2) + psi(1)

    Scalar half() const { return Scalar(n) / Scalar(2); }
    /// Volume of the unit ball.
    Scalar ball_volume() const { return omega_n / Scalar(n); }
};

template <typename Scalar = double>
Dimension<Scalar> make_dimension(int n)
{
    if (n < 1) throw DomainError("dimension must satisfy N >= 1, got N = " + std::to_string(n));
    const Scalar pi = std::numbers::pi_v<Scalar>;
    const Scalar h = Scalar(n) / Scalar(2);
    Dimension<Scalar> d;
    d.n = n;
    d.omega_n = Scalar(2) * std::pow(pi, h) / special::gamma(h);
    d.c_n = std::pow(pi, -h) * special::gamma(h);
    d.rho_n = Scalar(2) * std::log(Scalar(2)) + special::digamma(h) + special::digamma(Scalar(1));
    return d;
}

/// Surface area of the unit sphere S^{n-1}; n = 1 gives the two-point count 2.
template <typename Scalar = double>
Scalar sphere_area(int n)
{
    if (n < 1) throw DomainError("sphere_area requires n >= 1");
    const Scalar h = Scalar(n) / Scalar(2);
    return Scalar(2) * std::pow(std::numbers::pi_v<Scalar>, h) / special::gamma(h);
}

namespace detail {

template <typename Scalar>
std::string format_bound(Scalar v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

template <typename Scalar>
void require_time(Scalar t, int n, const char* who)
{
    if (n < 1) throw DomainError(std::string(who) + ": dimension must satisfy N >= 1");
    const Scalar upper = Scalar(n) / Scalar(2);
    if (!(t > Scalar(0)) || !(t < upper))
        throw DomainError(std::string(who) + ": t must satisfy 0 < t < N/2 = " + format_bound(upper) +
                          ", got t = " + format_bound(t));
}

}  // namespace detail

/// P_0(t) = pi^{-N/2} 4^{-t} Gamma((N - 2t)/2) / Gamma(t), 0 < t < N/2.
template <typename Scalar = double>
Scalar p0(Scalar t, int n)
{
    detail::require_time(t, n, "p0");
    const Scalar h = Scalar(n) / Scalar(2);
    const Scalar pi = std::numbers::pi_v<Scalar>;
    // log form keeps the ratio finite where either Gamma alone would overflow
    const Scalar lg = special::log_gamma(h - t) - special::log_gamma(t);
    return std::exp(-h * std::log(pi) - t * std::log(Scalar(4)) + lg);
}

/// Logarithm of the kernel, ln P_ln(t, r) = ln P_0(t) + (2t - N) ln r.
template <typename Scalar = double>
Scalar log_kernel_pln(Scalar t, Scalar r, int n)
{
    detail::require_time(t, n, "kernel_pln");
    if (!(r > Scalar(0)) || !std::isfinite(static_cast<double>(r)))
        throw DomainError("kernel_pln: |x| must be finite and > 0");
    return std::log(p0(t, n)) + (Scalar(2) * t - Scalar(n)) * std::log(r);
}

/// Heat-type kernel P_ln(t, x) = P_0(t) |x|^{2t - N}.
template <typename Scalar = double>
Scalar kernel_pln(Scalar t, Scalar r, int n)
{
    return std::exp(log_kernel_pln(t, r, n));
}

/// Closed-form limit constants of the kernel family.
template <typename Scalar = double>
struct KernelLimits {
    Scalar p0_at_one;                 // P_0(1) = Gamma(N/2 - 1) / (4 pi^{N/2}), N >= 3
    Scalar p0_prime_at_zero;          // lim P_0(t)/t = pi^{-N/2} Gamma(N/2)
    // lim (N - 2t) P_0(t) as t -> N/2, equal to 2 (4 pi)^{-N/2} / Gamma(N/2);
    // (N - 2t) u_f(t, x) tends to this constant times the L^1 mass of f
    Scalar blowup_limit;
    Scalar wrong_blowup_limit;        // 2^{2-N} omega_N: a plausible closed form that is not the limit
};

template <typename Scalar = double>
KernelLimits<Scalar> kernel_limit_constants(int n)
{
    if (n < 1) throw DomainError("kernel_limit_constants: dimension must satisfy N >= 1");
    const Scalar pi = std::numbers::pi_v<Scalar>;
    const Scalar h = Scalar(n) / Scalar(2);
    const Scalar g = special::gamma(h);
    KernelLimits<Scalar> k{};
    k.p0_at_one = n >= 3 ? special::gamma(h - Scalar(1)) / (Scalar(4) * std::pow(pi, h))
                         : std::numeric_limits<Scalar>::quiet_NaN();
    k.p0_prime_at_zero = std::pow(pi, -h) * g;
    k.blowup_limit = std::pow(Scalar(2), Scalar(1 - n)) * std::pow(pi, -h) / g;
    k.wrong_blowup_limit = std::pow(Scalar(2), Scalar(2 - n)) * sphere_area<Scalar>(n);
    return k;
}

}  // namespace loglap

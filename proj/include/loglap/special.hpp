#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace loglap::special {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

namespace detail {

// Lanczos approximation, g = 7, nine terms.
inline constexpr double kLanczosG = 7.0;
inline constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Taylor coefficients of 1/Gamma(1+z) about z = 0.
inline constexpr double kRecipGamma[] = {
    1.0,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.042002635034095235529,
    0.1665386113822914895,
    -0.042197734555544336748,
    -0.0096219715278769735621,
    0.0072189432466630995424,
    -0.0011651675918590651121,
    -0.00021524167411495097282,
    0.00012805028238811618615,
    -0.000020134854780788238656,
    -1.2504934821426706573e-6,
    1.1330272319816958824e-6,
    -2.0563384169776071035e-7,
    6.1160951044814158179e-9,
    5.0020076444692229301e-9,
    -1.1812745704870201446e-9,
    1.0434267116911005105e-10,
    7.782263439905071254e-12,
    -3.6968056186422057082e-12,
    5.100370287454475979e-13,
    -2.0583260535665067832e-14,
    -5.3481225394230179824e-15,
    1.2267786282382607902e-15,
    -1.1812593016974587695e-16,
};

template <typename Scalar>
Scalar lanczos_sum(Scalar z)
{
    Scalar a = Scalar(kLanczos[0]);
    for (int i = 1; i < 9; ++i) a += Scalar(kLanczos[i]) / (z + Scalar(i));
    return a;
}

template <typename Scalar>
void require_positive(Scalar x, const char* name)
{
    if (!(x > Scalar(0)) || !std::isfinite(static_cast<double>(x)))
        throw DomainError(std::string(name) + ": argument must be finite and > 0");
}

}  // namespace detail

/// Gamma function for x > 0.
template <typename Scalar = double>
Scalar gamma(Scalar x)
{
    using std::exp;
    using std::pow;
    using std::sin;
    using std::sqrt;
    detail::require_positive(x, "gamma");
    const Scalar pi = std::numbers::pi_v<Scalar>;
    if (x < Scalar(0.5)) {
        // reflection keeps full relative accuracy down to tiny x
        return pi / (sin(pi * x) * gamma<Scalar>(Scalar(1) - x));
    }
    const Scalar z = x - Scalar(1);
    const Scalar t = z + Scalar(detail::kLanczosG) + Scalar(0.5);
    const Scalar a = detail::lanczos_sum(z);
    const Scalar s = sqrt(Scalar(2) * pi) * a;
    // split the power so that the intermediate does not overflow before e^{-t}
    const Scalar h = pow(t, (z + Scalar(0.5)) / Scalar(2));
    return s * (h * exp(-t)) * h;
}

/// log Gamma(x) for x > 0.
template <typename Scalar = double>
Scalar log_gamma(Scalar x)
{
    using std::log;
    detail::require_positive(x, "log_gamma");
    const Scalar pi = std::numbers::pi_v<Scalar>;
    if (x < Scalar(0.5)) return log(pi / std::sin(pi * x)) - log_gamma<Scalar>(Scalar(1) - x);
    const Scalar z = x - Scalar(1);
    const Scalar t = z + Scalar(detail::kLanczosG) + Scalar(0.5);
    return Scalar(0.5) * log(Scalar(2) * pi) + (z + Scalar(0.5)) * log(t) - t +
           log(detail::lanczos_sum(z));
}

/// Digamma psi(x) = Gamma'(x)/Gamma(x), x > 0.
template <typename Scalar = double>
Scalar digamma(Scalar x)
{
    detail::require_positive(x, "digamma");
    Scalar acc = 0;
    while (x < Scalar(10)) {
        acc -= Scalar(1) / x;
        x += Scalar(1);
    }
    const Scalar r = Scalar(1) / (x * x);
    // Bernoulli tail: sum B_{2k} / (2k x^{2k})
    const Scalar tail =
        r * (Scalar(1) / 12 -
             r * (Scalar(1) / 120 -
                  r * (Scalar(1) / 252 -
                       r * (Scalar(1) / 240 -
                            r * (Scalar(1) / 132 - r * (Scalar(691) / 32760 - r / 12))))));
    return acc + std::log(x) - Scalar(0.5) / x - tail;
}

/// Trigamma psi'(x), x > 0.
template <typename Scalar = double>
Scalar trigamma(Scalar x)
{
    detail::require_positive(x, "trigamma");
    Scalar acc = 0;
    while (x < Scalar(10)) {
        acc += Scalar(1) / (x * x);
        x += Scalar(1);
    }
    const Scalar r = Scalar(1) / (x * x);
    const Scalar series =
        Scalar(1) / x + r / 2 +
        r / x *
            (Scalar(1) / 6 -
             r * (Scalar(1) / 30 -
                  r * (Scalar(1) / 42 -
                       r * (Scalar(1) / 30 -
                            r * (Scalar(5) / 66 - r * (Scalar(691) / 2730 - r * Scalar(7) / 6))))));
    return acc + series;
}

/// Gamma'(x) = Gamma(x) psi(x).
template <typename Scalar = double>
Scalar gamma_prime(Scalar x)
{
    return gamma(x) * digamma(x);
}

/// Gamma''(x) = Gamma(x) (psi(x)^2 + psi'(x)).
template <typename Scalar = double>
Scalar gamma_second(Scalar x)
{
    const Scalar p = digamma(x);
    return gamma(x) * (p * p + trigamma(x));
}

/// Values of J_nu, Y_nu and their derivatives at one argument.
template <typename Scalar = double>
struct BesselJY {
    Scalar j;
    Scalar y;
    Scalar jp;
    Scalar yp;
};

namespace detail {

// Hankel asymptotic P, Q for order mu at large x.
template <typename Scalar>
void hankel_pq(Scalar mu, Scalar x, Scalar& p, Scalar& q)
{
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    const Scalar m = Scalar(4) * mu * mu;
    const Scalar z = Scalar(8) * x;
    p = 1;
    q = 0;
    Scalar term = 1;
    Scalar last = std::numeric_limits<Scalar>::infinity();
    for (int k = 1; k < 60; ++k) {
        const Scalar odd = Scalar(2 * k - 1);
        term *= (m - odd * odd) / (Scalar(k) * z);
        const Scalar mag = std::abs(term);
        if (mag > last) break;  // asymptotic series started to diverge
        last = mag;
        const int phase = k % 4;
        if (phase == 1) q += term;
        else if (phase == 2) p -= term;
        else if (phase == 3) q -= term;
        else p += term;
        if (mag < eps) break;
    }
}

// (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu) and the half sum, |mu| <= 1/2.
template <typename Scalar>
void temme_gammas(Scalar mu, Scalar& gam1, Scalar& gam2, Scalar& gampl, Scalar& gammi)
{
    constexpr int n = sizeof(kRecipGamma) / sizeof(kRecipGamma[0]);
    Scalar even = 0, odd = 0;
    const Scalar mu2 = mu * mu;
    Scalar pw = 1;
    for (int k = 0; k < n; k += 2) {
        even += Scalar(kRecipGamma[k]) * pw;
        if (k + 1 < n) odd += Scalar(kRecipGamma[k + 1]) * pw;
        pw *= mu2;
    }
    // 1/Gamma(1+mu) = even + mu*odd, 1/Gamma(1-mu) = even - mu*odd
    gam1 = -odd;
    gam2 = even;
    gampl = even + mu * odd;
    gammi = even - mu * odd;
}

}  // namespace detail

/// J_nu(x), Y_nu(x) and derivatives for real order nu >= 0 and x > 0.
///
/// Small arguments use Temme's series, intermediate ones Steed's continued
/// fractions, large ones the Hankel expansion for the fractional seed order.
/// J is normalised after a downward recurrence, Y is carried upward.
template <typename Scalar = double>
BesselJY<Scalar> bessel_jy(Scalar nu, Scalar x)
{
    using std::abs;
    using std::cos;
    using std::sin;
    using std::sqrt;
    if (!(nu >= Scalar(0)) || !std::isfinite(static_cast<double>(nu)))
        throw DomainError("bessel_jy: order must be finite and >= 0");
    detail::require_positive(x, "bessel_jy");
    const Scalar pi = std::numbers::pi_v<Scalar>;
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    const Scalar fpmin = std::numeric_limits<Scalar>::min() / eps;
    constexpr int maxit = 100000;
    constexpr Scalar xmin = 2;
    constexpr Scalar xasym = 25;

    const bool asym = x >= xasym && nu < x;
    int nl;
    if (x < xmin || asym) nl = static_cast<int>(nu + Scalar(0.5));
    else nl = std::max(0, static_cast<int>(nu - x + Scalar(1.5)));
    const Scalar mu = nu - Scalar(nl);
    const Scalar xi = Scalar(1) / x;
    const Scalar xi2 = 2 * xi;
    const Scalar w = xi2 / pi;

    // CF1: J'_nu / J_nu
    int isign = 1;
    Scalar h = nu * xi;
    if (h < fpmin) h = fpmin;
    Scalar b = xi2 * nu;
    Scalar d = 0, c = h;
    int i = 0;
    for (; i < maxit; ++i) {
        b += xi2;
        d = b - d;
        if (abs(d) < fpmin) d = fpmin;
        c = b - Scalar(1) / c;
        if (abs(c) < fpmin) c = fpmin;
        d = Scalar(1) / d;
        const Scalar del = c * d;
        h = del * h;
        if (d < 0) isign = -isign;
        if (abs(del - Scalar(1)) <= eps) break;
    }
    if (i >= maxit) throw DomainError("bessel_jy: continued fraction did not converge");

    Scalar rjl = isign * fpmin;
    Scalar rjpl = h * rjl;
    const Scalar rjl1 = rjl;
    const Scalar rjp1 = rjpl;
    Scalar fact = nu * xi;
    for (int l = nl; l >= 1; --l) {
        const Scalar rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
    }
    if (rjl == Scalar(0)) rjl = eps;
    const Scalar f = rjpl / rjl;

    Scalar rjmu, rymu, rymup, ry1;
    Scalar scale = 0;
    if (x < xmin) {
        const Scalar x2 = Scalar(0.5) * x;
        const Scalar pimu = pi * mu;
        const Scalar fct = abs(pimu) < eps ? Scalar(1) : pimu / sin(pimu);
        Scalar dd = -std::log(x2);
        Scalar e = mu * dd;
        const Scalar fct2 = abs(e) < eps ? Scalar(1) : std::sinh(e) / e;
        Scalar gam1, gam2, gampl, gammi;
        detail::temme_gammas(mu, gam1, gam2, gampl, gammi);
        Scalar ff = Scalar(2) / pi * fct * (gam1 * std::cosh(e) + gam2 * fct2 * dd);
        e = std::exp(e);
        Scalar p = e / (gampl * pi);
        Scalar q = Scalar(1) / (e * pi * gammi);
        const Scalar pimu2 = Scalar(0.5) * pimu;
        const Scalar fct3 = abs(pimu2) < eps ? Scalar(1) : sin(pimu2) / pimu2;
        const Scalar r = pi * pimu2 * fct3 * fct3;
        Scalar cc = 1;
        dd = -x2 * x2;
        Scalar sum = ff + r * q;
        Scalar sum1 = p;
        int k = 1;
        for (; k < maxit; ++k) {
            const Scalar kk = Scalar(k);
            ff = (kk * ff + p + q) / (kk * kk - mu * mu);
            cc *= dd / kk;
            p /= (kk - mu);
            q /= (kk + mu);
            const Scalar del = cc * (ff + r * q);
            sum += del;
            const Scalar del1 = cc * p - kk * del;
            sum1 += del1;
            if (abs(del) < (Scalar(1) + abs(sum)) * eps) break;
        }
        if (k >= maxit) throw DomainError("bessel_jy: series did not converge");
        rymu = -sum;
        ry1 = -sum1 * xi2;
        rymup = mu * xi * rymu - ry1;
        rjmu = w / (rymup - f * rymu);
    } else if (asym) {
        Scalar p0, q0, p1, q1;
        detail::hankel_pq(mu, x, p0, q0);
        detail::hankel_pq(mu + Scalar(1), x, p1, q1);
        const Scalar amp = sqrt(Scalar(2) / (pi * x));
        const Scalar w0 = x - (mu / 2 + Scalar(0.25)) * pi;
        const Scalar w1 = w0 - pi / 2;
        rjmu = amp * (p0 * cos(w0) - q0 * sin(w0));
        rymu = amp * (p0 * sin(w0) + q0 * cos(w0));
        ry1 = amp * (p1 * sin(w1) + q1 * cos(w1));
        rymup = mu * xi * rymu - ry1;
        // normalise on whichever of J_mu, J'_mu is farther from a zero
        const Scalar rjpmu = mu * xi * rjmu - amp * (p1 * cos(w1) - q1 * sin(w1));
        scale = abs(rjmu) >= abs(rjpmu) ? rjmu / rjl : rjpmu / rjpl;
    } else {
        Scalar a = Scalar(0.25) - mu * mu;
        Scalar p = -Scalar(0.5) * xi;
        Scalar q = 1;
        const Scalar br = 2 * x;
        Scalar bi = 2;
        Scalar fct = a * xi / (p * p + q * q);
        Scalar cr = br + q * fct;
        Scalar ci = bi + p * fct;
        Scalar den = br * br + bi * bi;
        Scalar dr = br / den;
        Scalar di = -bi / den;
        Scalar dlr = cr * dr - ci * di;
        Scalar dli = cr * di + ci * dr;
        Scalar temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        int k = 2;
        for (; k < maxit; ++k) {
            a += Scalar(2 * (k - 1));
            bi += 2;
            dr = a * dr + br;
            di = a * di + bi;
            if (abs(dr) + abs(di) < fpmin) dr = fpmin;
            fct = a / (cr * cr + ci * ci);
            cr = br + cr * fct;
            ci = bi - ci * fct;
            if (abs(cr) + abs(ci) < fpmin) cr = fpmin;
            den = dr * dr + di * di;
            dr /= den;
            di /= -den;
            dlr = cr * dr - ci * di;
            dli = cr * di + ci * dr;
            temp = p * dlr - q * dli;
            q = p * dli + q * dlr;
            p = temp;
            if (abs(dlr - Scalar(1)) + abs(dli) <= eps) break;
        }
        if (k >= maxit) throw DomainError("bessel_jy: continued fraction did not converge");
        const Scalar gam = (p - f) / q;
        rjmu = sqrt(w / ((p - f) * gam + q));
        if (rjl < 0) rjmu = -rjmu;
        rymu = rjmu * gam;
        rymup = rymu * (p + q / gam);
        ry1 = mu * xi * rymu - rymup;
    }

    if (scale == Scalar(0)) scale = rjmu / rjl;
    BesselJY<Scalar> out;
    out.j = rjl1 * scale;
    out.jp = rjp1 * scale;
    for (int k = 1; k <= nl; ++k) {
        const Scalar rytemp = (mu + Scalar(k)) * xi2 * ry1 - rymu;
        rymu = ry1;
        ry1 = rytemp;
    }
    out.y = rymu;
    out.yp = nu * xi * rymu - ry1;
    return out;
}

template <typename Scalar = double>
Scalar bessel_j(Scalar nu, Scalar x)
{
    return bessel_jy(nu, x).j;
}

template <typename Scalar = double>
Scalar bessel_y(Scalar nu, Scalar x)
{
    return bessel_jy(nu, x).y;
}

}  // namespace loglap::special

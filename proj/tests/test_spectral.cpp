#include "loglap/spectral.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <vector>

using namespace loglap;

namespace {

// Gaussian derivatives: mean zero, so the zero Fourier mode carries nothing
double g2(double x) { return (4 * x * x - 2) * std::exp(-x * x); }
double g3(double x) { return (-8 * x * x * x + 12 * x) * std::exp(-x * x); }
double g4(double x) { return (16 * x * x * x * x - 48 * x * x + 12) * std::exp(-x * x); }

PeriodicField sample1(const std::function<double(double)>& f, int n = 4096, double half_width = 40.0)
{
    return PeriodicField::sample(1, n, half_width, [&](const Eigen::VectorXd& x) { return f(x[0]); });
}

}  // namespace

TEST_SUITE("spectral")
{
    TEST_CASE("spectral and singular-integral operators agree on |x| <= 10")
    {
        const std::vector<std::function<double(double)>> fs{
            g2, g3, g4, [](double x) { return g3(x + 0.7); }, [](double x) { return g2(x - 1.5); }};
        for (std::size_t k = 0; k < fs.size(); ++k) {
            const PeriodicField u = sample1(fs[k]);
            double imag = 0;
            const PeriodicField lu = apply_loglap_spectral(u, &imag);
            double err = 0, scale = 0;
            for (int i = 0; i < u.n; i += 16) {
                const double x = u.coordinate(i);
                if (std::abs(x) > 10) continue;
                Eigen::VectorXd p(1);
                p[0] = x;
                const double direct = apply_loglap_direct([&](const Eigen::VectorXd& y) { return fs[k](y[0]); }, p);
                err = std::max(err, std::abs(direct - lu.values[i]));
                scale = std::max(scale, std::abs(direct));
            }
            CAPTURE(k);
            CHECK(err / scale <= 1e-3);
            CHECK(imag < 1e-10);
        }
    }

    TEST_CASE("first-order expansion of the fractional Laplacian in s")
    {
        const PeriodicField u = sample1(g2);
        const PeriodicField lu = apply_loglap_spectral(u);
        std::vector<double> errors;
        for (double s : {1e-2, 1e-3, 1e-4}) {
            const PeriodicField fu = fractional_laplacian_spectral(u, s);
            double e = 0;
            for (Eigen::Index i = 0; i < u.size(); ++i)
                e = std::max(e, std::abs((fu.values[i] - u.values[i]) / s - lu.values[i]));
            errors.push_back(e);
        }
        for (std::size_t k = 1; k < errors.size(); ++k) CHECK(errors[k] <= 0.5 * errors[k - 1]);
    }

    TEST_CASE("dilation adds 2 ln a times the function")
    {
        // L(u(2 .))(x) = (L u)(2x) + 2 ln 2 u(2x); the box doubles with the argument so that the
        // periodic problems correspond exactly
        const PeriodicField u = sample1(g2, 4096, 80.0);
        const PeriodicField us = sample1([](double x) { return g2(2 * x); });
        const PeriodicField lu = apply_loglap_spectral(u);
        const PeriodicField lus = apply_loglap_spectral(us);
        double err = 0;
        for (int i = 0; i < u.n; ++i)
            err = std::max(err, std::abs(lus.values[i] - lu.values[i] - 2 * std::log(2.0) * u.values[i]));
        CHECK(err < 1e-10 * lu.values.abs().maxCoeff());
    }

    TEST_CASE("transform round trip and two-dimensional agreement")
    {
        const PeriodicField u = PeriodicField::sample(2, 64, 8.0, [](const Eigen::VectorXd& x) {
            return (x.squaredNorm() - 1.0) * std::exp(-x.squaredNorm());
        });
        double imag = 0;
        const PeriodicField back = to_physical(to_spectral(u), &imag);
        CHECK((back.values - u.values).abs().maxCoeff() < 1e-13);
        CHECK(imag < 1e-13);
        // mean zero by construction: int (|x|^2 - 1) e^{-|x|^2} dx = 0 in the plane
        CHECK(std::abs(box_mean(u)) < 1e-10);

        const PeriodicField lu = apply_loglap_spectral(u);
        const Eigen::Index centre = 32 * 64 + 32;
        const Eigen::VectorXd x = u.point(centre + 3);
        const double direct = apply_loglap_direct(
            [](const Eigen::VectorXd& y) { return (y.squaredNorm() - 1.0) * std::exp(-y.squaredNorm()); }, x);
        CHECK(lu.values[centre + 3] == doctest::Approx(direct).epsilon(5e-3));
    }

    TEST_CASE("Cauchy propagation composes additively in t")
    {
        const PeriodicField u = sample1(g2, 1024, 20.0);
        const PeriodicField a = cauchy_propagate_spectral(cauchy_propagate_spectral(u, 0.1), 0.15);
        const PeriodicField b = cauchy_propagate_spectral(u, 0.25);
        CHECK((a.values - b.values).abs().maxCoeff() < 1e-10 * b.values.abs().maxCoeff());
        CHECK_THROWS(cauchy_propagate_spectral(u, 0.5));
        CHECK_THROWS(fractional_laplacian_spectral(u, 1.0));
    }
}

#include "loglap/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace loglap::quad;

TEST_SUITE("quadrature")
{
    TEST_CASE("Gauss-Legendre integrates polynomials of degree 2n-1 exactly")
    {
        for (int n : {1, 5, 20, 64}) {
            const auto rule = gauss_legendre(n);
            CHECK(std::abs(rule->weights.sum() - 2.0) < 1e-13);
            const int deg = 2 * n - 1;
            double s = 0.0;
            for (Eigen::Index i = 0; i < rule->nodes.size(); ++i) s += rule->weights[i] * std::pow(rule->nodes[i], deg - 1);
            // \int_{-1}^1 x^{deg-1} dx, deg-1 even
            CHECK(std::abs(s - 2.0 / deg) < 1e-12);
        }
    }

    TEST_CASE("Gauss-Jacobi weight moments")
    {
        const double a = -0.5, b = 0.3;
        const auto rule = gauss_jacobi(15, a, b);
        // \int (1-x)^a (1+x)^b dx = 2^{a+b+1} B(a+1, b+1)
        const double beta = std::tgamma(a + 1) * std::tgamma(b + 1) / std::tgamma(a + b + 2);
        CHECK(std::abs(rule->weights.sum() - std::pow(2.0, a + b + 1) * beta) < 1e-12);
    }

    TEST_CASE("smooth, singular and infinite integrals")
    {
        CHECK(integrate([](double x) { return std::exp(x); }, 0, 1).value == doctest::Approx(std::exp(1.0) - 1).epsilon(1e-13));
        CHECK(integrate([](double x) { return std::exp(-x); }, 0, INFINITY).value == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(integrate([](double x) { return 1.0 / (1.0 + x * x); }, 0, INFINITY).value ==
              doctest::Approx(std::numbers::pi / 2).epsilon(1e-10));
        QuadratureSpec s;
        s.endpoint_mode = EndpointMode::algebraic_singularity;
        s.left_exponent = -0.5;
        CHECK(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0, 1, s).value == doctest::Approx(2.0).epsilon(1e-9));
    }

    TEST_CASE("integrate_algebraic keeps accuracy for distances far below the endpoint spacing")
    {
        // \int_0^1 d^{-0.9} dd = 10
        const auto r = integrate_algebraic([](double) { return 1.0; }, 0.0, 1.0, -0.9);
        CHECK(r.value == doctest::Approx(10.0).epsilon(1e-11));
        // \int_0^1 cos(d) d^{-0.5} dd
        const auto c = integrate_algebraic([](double d) { return std::cos(d); }, 0.0, 1.0, -0.5);
        CHECK(c.value == doctest::Approx(1.8090484758005386).epsilon(1e-11));
        CHECK_THROWS(integrate_algebraic([](double) { return 1.0; }, 0.0, 1.0, -1.0));
    }

    TEST_CASE("half-period acceleration of oscillatory tails")
    {
        QuadratureSpec s;
        s.oscillatory_mode = OscillatoryMode::half_period;
        s.frequency = 1.0;
        const double dirichlet = integrate([](double x) { return x == 0 ? 1.0 : std::sin(x) / x; }, 0, INFINITY, s).value;
        CHECK(dirichlet == doctest::Approx(std::numbers::pi / 2).epsilon(1e-8));
        // \int_0^inf sin(x) / sqrt(x) dx = sqrt(pi / 2)
        s.endpoint_mode = EndpointMode::algebraic_singularity;
        s.left_exponent = 0.5;
        const double fresnel = integrate([](double x) { return std::sin(x) / std::sqrt(x); }, 0, INFINITY, s).value;
        CHECK(fresnel == doctest::Approx(std::sqrt(std::numbers::pi / 2)).epsilon(1e-7));
    }

    TEST_CASE("Wynn epsilon accelerates the alternating harmonic series")
    {
        std::vector<double> partial;
        double acc = 0;
        for (int k = 1; k <= 14; ++k) {
            acc += (k % 2 ? 1.0 : -1.0) / k;
            partial.push_back(acc);
        }
        double err = 0;
        const double v = wynn_epsilon(partial, &err);
        CHECK(std::abs(v - std::log(2.0)) < 1e-9);
        CHECK(std::abs(partial.back() - std::log(2.0)) > 1e-2);
    }

    TEST_CASE("non-finite integrands raise QuadratureError")
    {
        CHECK_THROWS_AS(integrate([](double x) { return 1.0 / (x - 0.5) / 0.0; }, 0, 1), QuadratureError);
    }

    TEST_CASE("linearity and additivity")
    {
        auto f = [](double x) { return std::sin(3 * x) + x * x; };
        const double whole = integrate(f, 0, 2).value;
        const double split = integrate(f, 0, 0.7).value + integrate(f, 0.7, 2).value;
        CHECK(whole == doctest::Approx(split).epsilon(1e-13));
        const double twice = integrate([&](double x) { return 2 * f(x); }, 0, 2).value;
        CHECK(twice == doctest::Approx(2 * whole).epsilon(1e-13));
    }
}

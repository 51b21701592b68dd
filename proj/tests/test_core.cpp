#include "loglap/core.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace loglap;

TEST_SUITE("core")
{
    TEST_CASE("dimension constants")
    {
        for (int n = 1; n <= 8; ++n) {
            const auto d = make_dimension(n);
            CHECK(std::abs(d.c_n * d.omega_n - 2.0) < 1e-13);
            CHECK(d.rho_n == doctest::Approx(2 * std::log(2.0) + special::digamma(0.5 * n) + special::digamma(1.0)));
        }
        CHECK(sphere_area(3) == doctest::Approx(4 * std::numbers::pi));
        CHECK(sphere_area(2) == doctest::Approx(2 * std::numbers::pi));
        CHECK(make_dimension(3).ball_volume() == doctest::Approx(4 * std::numbers::pi / 3));
        CHECK_THROWS_AS(make_dimension(0), DomainError);
    }

    TEST_CASE("P_0 at t = 1 is the Newtonian constant")
    {
        for (int n = 3; n <= 8; ++n) {
            const double newton = special::gamma(0.5 * n - 1) / (4 * std::pow(std::numbers::pi, 0.5 * n));
            CHECK(std::abs(p0(1.0, n) / newton - 1) < 1e-13);
            CHECK(std::abs(kernel_limit_constants(n).p0_at_one / newton - 1) < 1e-13);
        }
        // N = 3: 1 / (4 pi |x|)
        CHECK(kernel_pln(1.0, 2.0, 3) == doctest::Approx(1.0 / (8 * std::numbers::pi)).epsilon(1e-14));
    }

    TEST_CASE("P_0 near 0 is linear with slope pi^{-N/2} Gamma(N/2)")
    {
        for (int n : {1, 2, 3, 4, 5, 6}) {
            const double slope = kernel_limit_constants(n).p0_prime_at_zero;
            for (double t : {1e-4, 1e-6})
                CHECK(std::abs(p0(t, n) / t / slope - 1) < 3 * t * (1 + std::abs(make_dimension(n).rho_n)));
        }
    }

    TEST_CASE("(N - 2t) P_0(t) tends to 2^{1-N} pi^{-N/2} / Gamma(N/2) at first order")
    {
        for (int n : {3, 4, 5, 6}) {
            const double lim = kernel_limit_constants(n).blowup_limit;
            auto err = [&](double h) { return std::abs(2 * h * p0(0.5 * n - h, n) - lim); };
            const double order = std::log10(err(1e-3) / err(1e-4));
            CHECK(order == doctest::Approx(1.0).epsilon(0.05));
            // the closed form 2^{2-N} omega_N is not the limit
            CHECK(std::abs(kernel_limit_constants(n).wrong_blowup_limit - lim) > 0.1 * lim);
        }
    }

    TEST_CASE("N = 3 blow-up constant for the unit ball")
    {
        const double mass = 4 * std::numbers::pi / 3;
        CHECK(kernel_limit_constants(3).blowup_limit * mass == doctest::Approx(0.2122065907891938).epsilon(1e-12));
    }

    TEST_CASE("time-domain preconditions")
    {
        CHECK_THROWS_AS(p0(0.0, 3), DomainError);
        CHECK_THROWS_AS(p0(1.5, 3), DomainError);
        CHECK_THROWS_AS(kernel_pln(1.0, 0.0, 3), DomainError);
        CHECK_NOTHROW(p0(1.4999, 3));
    }

    TEST_CASE("kernel is positive, radial-monotone and scales as r^{2t-N}")
    {
        for (double t : {0.1, 0.7, 1.3})
            for (double r = 0.01; r < 100; r *= 3) {
                CHECK(kernel_pln(t, r, 3) > 0);
                CHECK(kernel_pln(t, 2 * r, 3) / kernel_pln(t, r, 3) == doctest::Approx(std::pow(2.0, 2 * t - 3)));
            }
    }

    TEST_CASE("long double agrees with double")
    {
        CHECK(static_cast<double>(p0<long double>(0.7L, 5)) == doctest::Approx(p0(0.7, 5)).epsilon(1e-14));
        CHECK(static_cast<double>(special::gamma<long double>(150.5L)) / special::gamma(150.5) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

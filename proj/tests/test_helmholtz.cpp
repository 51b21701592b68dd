#include "loglap/helmholtz.hpp"

#include "loglap/core.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace loglap;

TEST_SUITE("helmholtz")
{
    const double pi = std::numbers::pi;

    TEST_CASE("closed form in three dimensions")
    {
        for (double r : {0.01, 0.5, 2.0, 17.0}) {
            CHECK(phi1(r, 3) == doctest::Approx(std::cos(r) / (4 * pi * r)).epsilon(1e-10));
            CHECK(phi1_prime(r, 3) ==
                  doctest::Approx(-(r * std::sin(r) + std::cos(r)) / (4 * pi * r * r)).epsilon(1e-10));
        }
        CHECK(phi1_prime(pi, 3) == doctest::Approx(1.0 / (4 * pi * pi * pi)).epsilon(1e-10));
    }

    TEST_CASE("unit flux at the origin")
    {
        for (int n : {3, 4, 5, 6}) {
            CAPTURE(n);
            CHECK(helmholtz_flux(1e-4, n) == doctest::Approx(-1.0).epsilon(1e-4));
            const HelmholtzProfile h(n);
            CHECK(h.phi(1e-4) * std::pow(1e-4, n - 2) == doctest::Approx(h.near_constant()).epsilon(1e-4));
        }
    }

    TEST_CASE("Wronskian and ODE residual")
    {
        for (int n : {3, 4, 5}) {
            CHECK(wronskian_error(n, {0.5, 3.0, 40.0}) < 1e-10);
            for (double r : {0.3, 2.0, 25.0})
                CHECK(helmholtz_residual(r, n) <= 1e-6 * helmholtz_residual_scale(r, n));
        }
    }

    TEST_CASE("far-field term")
    {
        const HelmholtzProfile h(4);
        CHECK(std::abs(h.phi(400.0) - h.far_field(400.0)) < 1e-2 * std::pow(400.0, -1.5));
        CHECK(helmholtz_far_field_report(4).pass);
    }

    TEST_CASE("dimension must be at least three")
    {
        CHECK_THROWS_AS(HelmholtzProfile(2), DomainError);
    }
}

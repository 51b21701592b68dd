#include "loglap/cauchy.hpp"

#include "loglap/core.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace loglap;

TEST_SUITE("cauchy")
{
    TEST_CASE("Newtonian case N = 3, t = 1 on the unit ball")
    {
        const CauchySolution u = solve_cauchy(RadialFunction::indicator_ball(1.0), 1.0, 3);
        CHECK(u.p0() == doctest::Approx(1.0 / (4 * std::numbers::pi)).epsilon(1e-13));
        CHECK(u(3.0) == doctest::Approx(1.0 / 9.0).epsilon(1e-10));
        CHECK(u(0.0) == doctest::Approx(0.5).epsilon(1e-10));
        CHECK(u.norm_f_l1() == doctest::Approx(4 * std::numbers::pi / 3).epsilon(1e-12));
    }

    TEST_CASE("blow-up as t approaches N/2")
    {
        const auto ball = RadialFunction::indicator_ball(1.0);
        const double limit = blowup_limit(ball, 3);
        CHECK(limit == doctest::Approx(0.2122065907891938).epsilon(1e-12));
        const auto pts = blowup_rate(ball, 5.0, 3, {1.49, 1.499});
        CHECK(std::abs(pts[1].value / limit - 1.0) < 0.01);
        // the gap closes as t -> N/2
        CHECK(std::abs(pts[1].value - limit) < std::abs(pts[0].value - limit));
    }

    TEST_CASE("semigroup property")
    {
        const auto ball = RadialFunction::indicator_ball(1.0);
        const CauchySolution half = solve_cauchy(ball, 0.5, 3);
        const CauchySolution two_step = solve_cauchy(solve_cauchy(ball, 0.2, 3).as_radial(), 0.3, 3);
        CHECK(two_step(1.0) == doctest::Approx(half(1.0)).epsilon(1e-3));
    }

    TEST_CASE("kernel pairing tends to the point value")
    {
        const DeltaLimit d = delta_limit(RadialFunction::gaussian(1.0), 0.0, 3, {1e-1, 1e-2, 1e-3});
        CHECK(std::abs(d.extrapolated - 1.0) < 1e-4);
        CHECK(std::abs(d.pairings[2] - 1.0) < std::abs(d.pairings[1] - 1.0));
    }

    TEST_CASE("profile exponents of the decay classes")
    {
        // steep data behave like the kernel: exponent 2t - N
        CHECK(fitted_profile_exponent(RadialFunction::power_decay(-5.0), 0.5, 3, 50, 500, 8) ==
              doctest::Approx(-2.0).epsilon(0.03));
        // intermediate data: exponent tau + 2t
        CHECK(fitted_profile_exponent(RadialFunction::power_decay(-2.0), 0.4, 3, 50, 500, 8) ==
              doctest::Approx(-1.2).epsilon(0.03));
        CHECK(profile_certificate(DecayClass::steep).pass);
    }

    TEST_CASE("data outside the weighted class are rejected")
    {
        CHECK_THROWS_AS(solve_cauchy(RadialFunction::power_decay(-2.0), 1.2, 3), quad::DivergenceError);
        CHECK_THROWS_AS(solve_cauchy(RadialFunction::indicator_ball(), 1.5, 3), DomainError);
        CHECK_THROWS_AS(riesz_at_origin(1.2, RadialFunction::power_decay(-2.0), 3), quad::DivergenceError);
    }

    TEST_CASE("propagated profile keeps its declared tail")
    {
        const CauchySolution u = solve_cauchy(RadialFunction::indicator_ball(1.0), 0.5, 3);
        const RadialFunction r = u.as_radial();
        CHECK(r.tail().kind == TailModel::Kind::power);
        CHECK(r.tail().power == doctest::Approx(-2.0));
        CHECK(r(2.0) == doctest::Approx(u(2.0)).epsilon(1e-14));
    }
}

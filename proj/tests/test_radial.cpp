#include "loglap/radial.hpp"

#include "loglap/core.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace loglap;

TEST_SUITE("radial")
{
    TEST_CASE("factory profiles")
    {
        const auto ball = RadialFunction::indicator_ball(2.0);
        CHECK(ball(1.999) == 1.0);
        CHECK(ball(2.001) == 0.0);
        CHECK(ball.breakpoints().size() == 1);
        CHECK(ball.tail().bounded_support());
        const auto g = RadialFunction::gaussian(0.5);
        CHECK(g(2.0) == doctest::Approx(std::exp(-2.0)));
        const auto p = RadialFunction::power_decay(-3.0);
        CHECK(p(1.0) == doctest::Approx(0.125));
        CHECK(p.tail().kind == TailModel::Kind::power);
        CHECK(p.tail().power == -3.0);
    }

    TEST_CASE("L^1 norms")
    {
        for (int n = 1; n <= 5; ++n) {
            CHECK(l1_norm(RadialFunction::indicator_ball(1.0), n) == doctest::Approx(make_dimension(n).ball_volume()));
            CHECK(l1_norm(RadialFunction::gaussian(1.0), n) ==
                  doctest::Approx(std::pow(std::numbers::pi, 0.5 * n)).epsilon(1e-9));
        }
        // \int_{R^3} (1+r)^{-5} dx = 4 pi \int r^2 (1+r)^{-5} dr = 4 pi / 12
        CHECK(l1_norm(RadialFunction::power_decay(-5.0), 3) == doctest::Approx(std::numbers::pi / 3).epsilon(1e-9));
        // weight (1+|x|)^{1}: 4 pi \int r^2 (1+r)^{-6} dr = 4 pi / 30
        CHECK(weighted_l1_norm(RadialFunction::power_decay(-7.0), 3, 1.0) ==
              doctest::Approx(4 * std::numbers::pi / 30).epsilon(1e-9));
        CHECK_THROWS_AS(l1_norm(RadialFunction::power_decay(-3.0), 3), quad::DivergenceError);
    }

    TEST_CASE("sampled profiles interpolate and extend")
    {
        Eigen::ArrayXd grid = Eigen::ArrayXd::LinSpaced(401, 0.1, 20.0);
        Eigen::ArrayXd vals = grid.unaryExpr([](double r) { return std::sin(r) / r; });
        const auto f = RadialFunction::from_samples(grid, vals, 0.0, TailModel::oscillating(-1.0, 0.0));
        CHECK(f.sampled());
        for (double r = 0.2; r < 19.9; r += 0.37) CHECK(std::abs(f(r) - std::sin(r) / r) < 5e-5);
        // tail continues the oscillation with the fitted amplitude
        CHECK(f.tail_amplitude(20.0) == doctest::Approx(1.0).epsilon(1e-3));
        CHECK(f(30.0) == doctest::Approx(std::sin(30.0) / 30.0).epsilon(1e-2));
        // inner extension r^{inner exponent}
        const auto g = RadialFunction::from_samples(grid, grid.pow(-2.0), -2.0, TailModel::power_law(-2.0));
        CHECK(g(0.05) == doctest::Approx(400.0).epsilon(1e-12));
        CHECK(g(40.0) == doctest::Approx(1.0 / 1600).epsilon(1e-6));
    }

    TEST_CASE("monotone data stays monotone")
    {
        Eigen::ArrayXd grid(6), vals(6);
        grid << 0.1, 0.2, 0.3, 1.0, 1.1, 5.0;
        vals << 1.0, 1.0, 0.9, 0.0, 0.0, 0.0;
        const auto f = RadialFunction::from_samples(grid, vals, 0.0, TailModel::compact_support(5.0));
        double prev = f(0.1);
        for (double r = 0.1; r <= 5.0; r += 0.01) {
            CHECK(f(r) <= prev + 1e-15);
            CHECK(f(r) >= -1e-15);
            prev = f(r);
        }
    }
}

#include "loglap/fundsol.hpp"

#include "loglap/core.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace loglap;

namespace {

// pi^{-N/2} 4^{-t} Gamma(N/2 - t) / Gamma(t), straight from the standard library
double p0_oracle(double t, int n)
{
    return std::pow(std::numbers::pi, -0.5 * n) * std::pow(4.0, -t) * std::tgamma(0.5 * n - t) / std::tgamma(t);
}

// composite Simpson on [0, 1]; P_0(t) r^{2t-N} is smooth in t
double u_star_oracle(double r, int n)
{
    const int m = 4000;
    double s = 0;
    for (int i = 0; i <= m; ++i) {
        const double t = static_cast<double>(i) / m;
        const double w = (i == 0 || i == m) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        if (i > 0) s += w * p0_oracle(t, n) * std::pow(r, 2 * t - n);
    }
    return s / (3.0 * m);
}

}  // namespace

TEST_SUITE("fundsol")
{
    TEST_CASE("u_* against direct t-quadrature")
    {
        for (int n : {3, 4})
            for (double r : {0.3, 1.0, 4.0}) {
                const FundamentalSolution fs(n);
                CHECK(fs.u_star(r) == doctest::Approx(u_star_oracle(r, n)).epsilon(1e-7));
            }
    }

    TEST_CASE("Fourier oracles in three dimensions")
    {
        const FundamentalSolution fs(3);
        const double xi = 2.0;
        CHECK(u_star_fourier_n3(fs, xi) == doctest::Approx((1 - 1 / (xi * xi)) / (2 * std::log(xi))).epsilon(1e-6));
        CHECK(fs.phi_ln(1.0) == doctest::Approx(phi_ln_fourier_n3(fs, 1.0)).epsilon(1e-4));
    }

    TEST_CASE("near-origin normalisation")
    {
        const FundamentalSolution fs(4);
        CHECK(fs.c0() == doctest::Approx(1.0 / (4 * std::numbers::pi * std::numbers::pi)).epsilon(1e-14));
        const double q = fs.near_origin_ratio(std::exp(-5.0));
        CHECK(q > 0.7);
        CHECK(q < 1.3);
        // r^N u_* through the log variable matches the direct value
        CHECK(fs.scaled_u_star_log(2.0) == doctest::Approx(fs.u_star(std::exp(-2.0)) * std::exp(-8.0)).epsilon(1e-10));
    }

    TEST_CASE("gradients match finite differences, N = 4")
    {
        const FundamentalSolution fs(4);
        for (double r : {0.5, 2.0, 8.0}) {
            const double h = 5e-3 * r;
            CAPTURE(r);
            CHECK(fs.grad_u_star(r) == doctest::Approx((fs.u_star(r + h) - fs.u_star(r - h)) / (2 * h)).epsilon(1e-4));
            const double fd = (fs.v_one(r + h) - fs.v_one(r - h)) / (2 * h);
            CHECK(std::abs(fs.grad_v_one(r) - fd) <= 1e-2 * std::max(std::abs(fd), std::abs(fs.grad_phi_ln(r))));
        }
    }

    TEST_CASE("table continues smoothly past its last node")
    {
        const FundamentalSolution fs(4);
        const PhiLnTable table(fs, 1e-3, 6.0, 0.5, 9);
        const double rm = table.r_max();
        CHECK(table.phi_ln(rm * (1 + 1e-9)) == doctest::Approx(table.phi_ln(rm)).epsilon(1e-6));
        CHECK(table.v_one(2.5) == doctest::Approx(fs.v_one(2.5)).epsilon(1e-3));
        CHECK(std::exp(table.log_abs_phi_ln_at(1.0)) == doctest::Approx(std::abs(table.phi_ln(std::exp(-1.0)))).epsilon(1e-10));
        const auto seq = local_integrability_sequence(table, {4.0, 8.0, 16.0, 32.0});
        for (std::size_t k = 1; k < seq.size(); ++k) CHECK(seq[k] >= seq[k - 1]);
        CHECK(seq[3] - seq[2] < seq[2] - seq[1]);
    }

    TEST_CASE("dimension below three is rejected")
    {
        CHECK_THROWS_AS(FundamentalSolution(2), DomainError);
    }
}

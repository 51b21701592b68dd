#include "loglap/verify.hpp"

#include "loglap/core.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace loglap;

namespace {

// exp(-|.|^2) * exp(-|.|^2) = (pi/2)^{N/2} exp(-|x|^2 / 2)
double gauss_conv(double r, int n) { return std::pow(std::numbers::pi / 2, 0.5 * n) * std::exp(-0.5 * r * r); }

double convolution_difference(const RadialFunction& f, double r, double delta, int n)
{
    auto g = [](double s) { return std::exp(-s * s); };
    auto near = [n](double y) { return std::exp(-std::exp(-2 * y) - n * y); };
    return radial_convolution_difference(g, near, 1e-8, f, r, delta, n);
}

}  // namespace

TEST_SUITE("verify")
{
    TEST_CASE("tolerance reports")
    {
        const EstimateReport ok = tolerance_report("a", "r", {{0, 0, 0.5, 1.0}, {1, 0, 0.9, 1.0}}, "h");
        CHECK(ok.pass);
        CHECK(ok.constant == doctest::Approx(0.9));
        const EstimateReport bad = tolerance_report("b", "r", {{0, 0, 1.5, 1.0}}, "h");
        CHECK_FALSE(bad.pass);
    }

    TEST_CASE("Orlicz condition integral decides the probes")
    {
        CHECK(orlicz_condition({"t_log_minus_2.5", 1.0, -2.5}).converges);
        CHECK(orlicz_condition({"t", 1.0, 0.0}).converges);
        CHECK_FALSE(orlicz_condition({"t_log_t", 1.0, 1.0}).converges);
        CHECK_FALSE(orlicz_condition({"t_squared", 2.0, 0.0}).converges);
        const OrliczFunction m{"m", 1.5, 2.0};
        for (double s : {0.1, 3.0, 1e5}) CHECK(std::exp(m.log_value(std::log(s))) == doctest::Approx(m(s)).epsilon(1e-12));
    }

    TEST_CASE("radial convolution differences")
    {
        const int n = 4;
        const auto f = RadialFunction::gaussian(1.0);
        CHECK(convolution_difference(f, 0.7, 0.0, n) == 0.0);
        for (double r : {0.0, 0.5, 1.3}) {
            const double d = 0.25;
            CAPTURE(r);
            CHECK(convolution_difference(f, r, d, n) ==
                  doctest::Approx(gauss_conv(r + d, n) - gauss_conv(r, n)).epsilon(1e-6));
        }
        // linear in the datum
        const auto f2 = RadialFunction::from_callable([](double s) { return 2 * std::exp(-s * s); }, 0.0,
                                                      TailModel::rapid_decay(std::sqrt(700.0)));
        CHECK(convolution_difference(f2, 0.5, 0.125, n) ==
              doctest::Approx(2 * convolution_difference(f, 0.5, 0.125, n)).epsilon(1e-10));
    }

    TEST_CASE("delta limit at the origin")
    {
        CHECK(check_delta_limit(3).pass);
    }

    TEST_CASE("suite names")
    {
        for (Suite s : {Suite::all, Suite::kernel, Suite::cauchy, Suite::helmholtz, Suite::fundsol, Suite::estimates,
                        Suite::falsified})
            CHECK(parse_suite(to_string(s)) == s);
        CHECK_THROWS(parse_suite("nope"));
    }

    TEST_CASE("kernel suite is deterministic and round-trips through JSON")
    {
        const VerifyResult a = run_suite(Suite::kernel, {7, 1e-6, 0.2});
        const VerifyResult b = run_suite(Suite::kernel, {7, 1e-6, 0.2});
        CHECK(a.all_pass());
        CHECK(a.to_json().dump() == b.to_json().dump());
        const nlohmann::json j = a.to_json();
        CHECK(j["suite"] == "kernel");
        CHECK(j["pass"] == true);
        for (std::size_t i = 0; i < a.reports.size(); ++i) {
            const EstimateReport r = report_from_json(j["reports"][i]);
            CHECK(r.estimate_id == a.reports[i].estimate_id);
            CHECK(r.constant == a.reports[i].constant);
            CHECK(r.samples.size() == a.reports[i].samples.size());
        }
    }
}

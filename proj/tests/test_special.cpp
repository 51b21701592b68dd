#include "loglap/special.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace loglap::special;

namespace {

// mpmath at 30 digits
struct BesselRow {
    double nu, x, j, y, jp, yp;
};
const BesselRow kBessel[] = {
    {0.3, 0.01, 0.22733294197947474125, -4.5018849277250571537, 6.8191138946043240243, 144.99927237634817406},
    {0.3, 1, 0.74022247928102045053, -0.24570419535649945302, -0.089597296939847040074, 0.88977871187867262316},
    {0.3, 5.5, -0.15791538292094962462, -0.30086529774316716602, 0.31591232090782070677, -0.13109549334452820957},
    {0.3, 30, -0.13011079142417547299, -0.065497771941121576945, 0.067671713079455352051, -0.12903090101146532769},
    {0.3, 200, -0.038381724751194095969, -0.041351368792599302295, 0.041447405420244302165, -0.038278423503188120732},
    {1, 0.01, 0.0049999375002604161241, -63.678596282060656374, 0.49998125013020795356, 6364.8541725689819915},
    {1, 1, 0.44005058574493351596, -0.78121282130028871655, 0.32514710081303303549, 0.86946978551596567453},
    {1, 5.5, -0.34143821542904335018, -0.023758238956389618326, 0.055235806114734139572, -0.33516091307165838041},
    {1, 30, -0.11875106261662293652, 0.084425570661747234891, -0.082409614827152780119, -0.12010991737538893308},
    {1, 200, -0.054304538182378222711, 0.01530182458038998922, -0.015165917239653200478, -0.05434228437271986064},
    {1.5, 0.01, 0.00026595886066191771721, -797.924454033555339, 0.039893297180046562073, 119680.68965836422809},
    {1.5, 1, 0.2402978391234270109, -1.1024955751601791699, 0.31094994845666257407, 1.2226444947218926754},
    {1.5, 5.5, -0.28474633571930899565, 0.19620139825193870689, -0.16238021703466350723, -0.29461247913447863362},
    {1.5, 30, -0.027267945711177687796, 0.14318064368377218831, -0.14256625608484100475, -0.02962932278301963424},
    {1.5, 200, -0.02773297376639450223, 0.049133090737118573826, -0.049062526539606516209, -0.027855119327708619159},
    {2.5, 0.01, 5.3191924109550804572e-7, -239369.35776339752894, 0.00013297905038804070578, 59841541.516395348679},
    {2.5, 1, 0.049496810228477942271, -2.8763878574621614303, 0.11655581355223215522, 6.0884740684952244058},
    {2.5, 5.5, 0.084722125474851962964, 0.34812195138500737186, -0.32325639275333261518, 0.037964147622389901495},
    {2.5, 30, 0.14120285879928212036, 0.036788354967208243656, -0.039034850611117864492, 0.14011494743650483467},
    {2.5, 200, 0.048854529236358557442, 0.028223617508237008462, -0.028343655381848984198, 0.048780295518265611221},
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_SUITE("special")
{
    TEST_CASE("gamma family against high-precision values")
    {
        CHECK(rel(loglap::special::gamma(0.3), 2.9915689876875906283) < 1e-14);
        CHECK(rel(loglap::special::gamma(2.5), 1.3293403881791370205) < 1e-14);
        CHECK(rel(loglap::special::gamma(7.1), 868.95685880064040629) < 1e-14);
        CHECK(rel(loglap::special::gamma(0.001), 999.42377248459546611) < 1e-14);
        CHECK(rel(log_gamma(200.5), 860.58220350978249194) < 1e-14);
        CHECK(rel(log_gamma(1e4), 82099.717496442377273) < 1e-14);
        CHECK(rel(digamma(0.25), -4.2274535333762654081) < 1e-13);
        CHECK(rel(digamma(3.7), 1.1671535393615113859) < 1e-13);
        CHECK(rel(digamma(50.0), 3.901989673427892197) < 1e-13);
        CHECK(rel(trigamma(0.5), 4.9348022005446793094) < 1e-13);
        CHECK(rel(trigamma(4.2), 0.26866494073140079456) < 1e-13);
    }

    TEST_CASE("gamma recurrence and reflection hold on a sweep")
    {
        for (double x = 0.05; x < 30.0; x *= 1.37) {
            CHECK(rel(loglap::special::gamma(x + 1.0), x * loglap::special::gamma(x)) < 1e-13);
            CHECK(std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) < 1e-12 * (1.0 + std::abs(digamma(x))));
            CHECK(std::abs(gamma_prime(x) - loglap::special::gamma(x) * digamma(x)) <= 1e-13 * std::abs(loglap::special::gamma(x) * digamma(x)) + 1e-300);
        }
        for (double x = 0.1; x < 0.95; x += 0.1)
            CHECK(rel(loglap::special::gamma(x) * loglap::special::gamma(1.0 - x), std::numbers::pi / std::sin(std::numbers::pi * x)) < 1e-13);
    }

    TEST_CASE("small-argument limits of Gamma are first order")
    {
        for (double t : {1e-3, 1e-4, 1e-5}) {
            CHECK(std::abs(t * loglap::special::gamma(t) - 1.0) <= 10 * t);
            CHECK(std::abs(t * t * gamma_prime(t) + 1.0) <= 10 * t);
            CHECK(std::abs(t * t * t * gamma_second(t) - 2.0) <= 10 * t);
        }
    }

    TEST_CASE("Bessel J, Y and derivatives against high-precision values")
    {
        for (const BesselRow& b : kBessel) {
            CAPTURE(b.nu);
            CAPTURE(b.x);
            const auto v = bessel_jy(b.nu, b.x);
            CHECK(rel(v.j, b.j) < 1e-11);
            CHECK(rel(v.y, b.y) < 1e-11);
            CHECK(rel(v.jp, b.jp) < 1e-11);
            CHECK(rel(v.yp, b.yp) < 1e-11);
        }
    }

    TEST_CASE("Wronskian J Y' - J' Y = 2 / (pi x)")
    {
        for (double nu : {0.0, 0.5, 1.0, 1.5, 2.5, 4.0})
            for (double x = 1e-3; x < 1e3; x *= 1.9) {
                const auto v = bessel_jy(nu, x);
                const double w = v.j * v.yp - v.jp * v.y;
                CHECK(rel(w, 2.0 / (std::numbers::pi * x)) < 1e-9);
            }
    }

    TEST_CASE("half-integer order closed forms")
    {
        for (double x = 0.02; x < 400.0; x *= 1.31) {
            const double s = std::sqrt(2.0 / (std::numbers::pi * x));
            const auto v = bessel_jy(0.5, x);
            CHECK(std::abs(v.j - s * std::sin(x)) < 1e-12 * std::max(1.0, s));
            CHECK(std::abs(v.y + s * std::cos(x)) < 1e-12 * std::max(1.0, s));
        }
    }

    TEST_CASE("domain errors")
    {
        CHECK_THROWS_AS(bessel_jy(1.0, 0.0), DomainError);
        CHECK_THROWS_AS(bessel_jy(-1.0, 1.0), DomainError);
    }
}

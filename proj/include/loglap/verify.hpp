#pragma once

#include "loglap/cauchy.hpp"
#include "loglap/fundsol.hpp"
#include "loglap/report.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace loglap {

/// Report whose samples are error/tolerance pairs: passes iff every lhs <= rhs.
EstimateReport tolerance_report(std::string id, std::string region, std::vector<Sample> samples,
                                std::string config_hash, std::string detail = {});

// ---- level sets of Phi_ln --------------------------------------------------

enum class LevelPart { near, far };

/// Near part (|x| < 1, large lambda):  meas{|Phi_ln| > lambda} <= c / (lambda ln^2 lambda).
/// Far part (|x| >= 1, small lambda):  meas <= c lambda^{-2N/(N-3)} |ln lambda|^{-N} for N > 3, and for
/// N = 3 the containment radius R(lambda) of the set obeys 1 + ln R <= c / lambda.
EstimateReport check_levelsets(const PhiLnTable& table, LevelPart part);

/// Measure of {r in [a, b] : |Phi_ln(r)| > lambda} in R^N (spherical shells), by scanning with step
/// `step` and bisecting every crossing. Also returns the largest r of the set (0 if empty).
struct LevelSetMeasure {
    double measure = 0.0;
    double outer_radius = 0.0;
};
LevelSetMeasure far_level_set(const PhiLnTable& table, double lambda, double step = 0.01);

/// Radius R < 1 with |Phi_ln(R)| = lambda on the monotone branch at the origin.
double near_level_radius(const PhiLnTable& table, double lambda);

// ---- Orlicz classes ----------------------------------------------------------

/// Young-type function M(s) = s^p ln(e + s)^q, evaluated in log form so that huge arguments survive.
struct OrliczFunction {
    std::string name;
    double p = 1.0;
    double q = 0.0;

    double operator()(double s) const;
    /// ln M(e^L).
    double log_value(double log_s) const;
};

/// Partial integrals of the condition integral  \int_2^inf M(s) / (s^2 ln^2 s) ds, evaluated with
/// s = exp(e^z) up to z = z_max and then z = 2 z_max; converges iff the two agree within 10%.
struct OrliczCondition {
    bool converges = false;
    double partial = 0.0;
    double partial_doubled = 0.0;
};
OrliczCondition orlicz_condition(const OrliczFunction& m, double z_max = 8.0);

/// \int_{B_1} M(|Phi_ln|) dx truncated at |x| = e^{-Y}: observed convergent iff the value at Y = 64
/// and Y = 4096 agree within 10%. The report passes iff this agrees with the condition oracle.
EstimateReport check_orlicz(const OrliczFunction& m, const PhiLnTable& table);

// ---- continuity of Phi_ln * f --------------------------------------------------

/// (g * f)(r + delta) - (g * f)(r) for radial g and f, through spherical means; `g` is evaluated on
/// (0, inf) and `g_scaled_near` gives g(s) s^N for s below `s_min`, in the variable y = -ln s.
double radial_convolution_difference(const std::function<double(double)>& g,
                                     const std::function<double(double)>& g_scaled_near, double s_min,
                                     const RadialFunction& f, double r, double delta, int dim);

/// Dini modulus  |Phi_ln * f(x) - Phi_ln * f(x')| (1 + ln^2 |x - x'|) <= c  for collinear radial pairs
/// x, x' in B_R at separations 2^{-k}, base points drawn from a seeded generator.
EstimateReport check_dini(const RadialFunction& f, double R, const PhiLnTable& table, std::uint64_t seed);

/// The v_1 * f part against the Lipschitz modulus |x - x'|.
EstimateReport check_v1_lipschitz(const RadialFunction& f, double R, const PhiLnTable& table, std::uint64_t seed);

// ---- kernel-level checks ---------------------------------------------------------

/// Gaussian test function in dimension N; extrapolated t -> 0 pairing within 1e-4 of phi(0) = 1.
EstimateReport check_delta_limit(int dim, const quad::QuadratureSpec& spec = {});

/// Far-field envelope of |.|^{2t-N} * (1+|.|)^tau for the three decay classes, two-sided on
/// |x| in [1, 100] doubled to [1, 1e4].
EstimateReport check_riesz_envelope(DecayClass cls, int dim, double exponent_perturbation = 0.0);

// ---- suites -----------------------------------------------------------------------

enum class Suite { all, kernel, cauchy, helmholtz, fundsol, estimates, falsified };

Suite parse_suite(const std::string& name);
const char* to_string(Suite s);

struct VerifyConfig {
    std::uint64_t seed = 0;
    /// Relative tolerance of the outer fundamental-solution quadratures.
    double tol = 1e-6;
    /// Exponent shift used by the falsified suite.
    double falsify_delta = 0.2;
};

/// Shares the tabulated Phi_ln between the checks of one run.
class TableCache {
public:
    explicit TableCache(double tol) : tol_(tol) {}
    const PhiLnTable& get(int dim);

private:
    double tol_;
    std::map<int, std::unique_ptr<PhiLnTable>> tables_;
};

struct VerifyResult {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<EstimateReport> reports;

    bool all_pass() const;
    nlohmann::json to_json() const;
};

VerifyResult run_suite(Suite suite, const VerifyConfig& config = {});

}  // namespace loglap

#pragma once

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

namespace loglap {

inline constexpr const char* kVersion = "0.1.0";

struct Sample {
    double x = 0.0;
    double t = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
};

/// Outcome of checking one inequality over a sample window.
struct EstimateReport {
    std::string estimate_id;
    std::string region;
    std::vector<Sample> samples;
    double constant = 0.0;           // measured on the doubled window
    double constant_base = 0.0;      // measured on the base window
    bool pass = false;
    std::string config_hash;
    std::string detail;              // human-readable reason, violating sample, etc.

    std::string verdict() const { return pass ? "pass" : "fail"; }
};

/// Largest lhs / rhs over the samples (rhs > 0); +inf when some lhs > 0 has rhs == 0.
double measured_constant(const std::vector<Sample>& samples);

/// Relative change allowed between the base and the doubled window.
inline constexpr double kStabilityTolerance = 0.10;

/// Builds a report from a base window and a window of twice the (log-)length and sample count.
/// Passes iff the constant is finite and changes by less than kStabilityTolerance.
EstimateReport stable_constant_report(std::string id, std::string region, std::vector<Sample> base,
                                      std::vector<Sample> doubled, std::string config_hash,
                                      double zero_floor = 1e-300);

/// A sampled value against the shape it should be comparable to.
struct Comparison {
    double x = 0.0;
    double t = 0.0;
    double value = 0.0;
    double shape = 0.0;
};

/// Two-sided estimate  shape / c <= lambda^{-1} value <= c shape  with the normalisation lambda
/// chosen to make c smallest, i.e. c = sqrt(max(value/shape) / min(value/shape)). Each comparison
/// becomes two samples (value <= c lambda shape and lambda shape <= c value), so the reported
/// constant is exactly the largest lhs/rhs. Stability is judged as in stable_constant_report.
EstimateReport two_sided_report(std::string id, std::string region, const std::vector<Comparison>& base,
                                const std::vector<Comparison>& doubled, std::string config_hash);

nlohmann::json to_json(const EstimateReport& r);
EstimateReport report_from_json(const nlohmann::json& j);

/// 64-bit FNV-1a digest of a canonical configuration string, as 16 hex digits.
std::string config_hash(const std::string& canonical);

/// Log-spaced points in [a, b].
std::vector<double> log_grid(double a, double b, int count);

}  // namespace loglap

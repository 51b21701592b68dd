#include "loglap/report.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <sstream>

namespace loglap {

double measured_constant(const std::vector<Sample>& samples)
{
    double c = 0.0;
    for (const Sample& s : samples) {
        if (std::isnan(s.lhs) || std::isnan(s.rhs)) return std::numeric_limits<double>::quiet_NaN();
        if (s.rhs > 0.0) c = std::max(c, s.lhs / s.rhs);
        else if (s.lhs > 0.0) return std::numeric_limits<double>::infinity();
    }
    return c;
}

EstimateReport stable_constant_report(std::string id, std::string region, std::vector<Sample> base,
                                      std::vector<Sample> doubled, std::string hash, double zero_floor)
{
    EstimateReport r;
    r.estimate_id = std::move(id);
    r.region = std::move(region);
    r.config_hash = std::move(hash);
    r.constant_base = measured_constant(base);
    r.constant = measured_constant(doubled);
    r.samples = std::move(doubled);
    std::ostringstream os;
    os.precision(6);
    if (!std::isfinite(r.constant) || !std::isfinite(r.constant_base)) {
        r.pass = false;
        os << "measured constant is not finite";
    } else if (r.constant <= zero_floor && r.constant_base <= zero_floor) {
        r.pass = true;
        os << "left side vanishes on both windows";
    } else {
        const double change = std::abs(r.constant - r.constant_base) / std::max(r.constant_base, zero_floor);
        r.pass = change < kStabilityTolerance;
        os << "constant " << r.constant_base << " -> " << r.constant << " on doubling (change " << change << ")";
        if (!r.pass) {
            // report the sample that drives the growth
            const Sample* worst = nullptr;
            for (const Sample& s : r.samples)
                if (s.rhs > 0 && (!worst || s.lhs / s.rhs > worst->lhs / worst->rhs)) worst = &s;
            if (worst) os << "; worst sample x=" << worst->x << " t=" << worst->t;
        }
    }
    r.detail = os.str();
    return r;
}

namespace {

std::vector<Sample> normalised_pairs(const std::vector<Comparison>& cmp, double* lambda)
{
    double hi = 0.0, lo = std::numeric_limits<double>::infinity();
    for (const Comparison& c : cmp) {
        if (!(c.shape > 0.0) || !(c.value > 0.0)) continue;
        hi = std::max(hi, c.value / c.shape);
        lo = std::min(lo, c.value / c.shape);
    }
    const double l = hi > 0.0 && std::isfinite(lo) ? std::sqrt(hi * lo) : 1.0;
    if (lambda) *lambda = l;
    std::vector<Sample> out;
    out.reserve(2 * cmp.size());
    for (const Comparison& c : cmp) {
        out.push_back({c.x, c.t, c.value, l * c.shape});
        out.push_back({c.x, c.t, l * c.shape, c.value});
    }
    return out;
}

}  // namespace

EstimateReport two_sided_report(std::string id, std::string region, const std::vector<Comparison>& base,
                                const std::vector<Comparison>& doubled, std::string hash)
{
    double lb = 1.0, ld = 1.0;
    std::vector<Sample> sb = normalised_pairs(base, &lb);
    std::vector<Sample> sd = normalised_pairs(doubled, &ld);
    EstimateReport r = stable_constant_report(std::move(id), std::move(region), std::move(sb), std::move(sd),
                                              std::move(hash));
    std::ostringstream os;
    os.precision(6);
    os << "; shape normalisation " << lb << " -> " << ld;
    r.detail += os.str();
    return r;
}

nlohmann::json to_json(const EstimateReport& r)
{
    nlohmann::json samples = nlohmann::json::array();
    for (const Sample& s : r.samples) samples.push_back({{"x", s.x}, {"t", s.t}, {"lhs", s.lhs}, {"rhs", s.rhs}});
    auto finite_or_null = [](double v) -> nlohmann::json {
        if (std::isfinite(v)) return v;
        return nullptr;
    };
    return {{"estimate_id", r.estimate_id},
            {"region", r.region},
            {"samples", samples},
            {"constant", finite_or_null(r.constant)},
            {"verdict", r.verdict()},
            {"config_hash", r.config_hash},
            {"detail", r.detail}};
}

EstimateReport report_from_json(const nlohmann::json& j)
{
    EstimateReport r;
    r.estimate_id = j.at("estimate_id").get<std::string>();
    r.region = j.at("region").get<std::string>();
    for (const auto& s : j.at("samples"))
        r.samples.push_back({s.at("x").get<double>(), s.at("t").get<double>(), s.at("lhs").get<double>(),
                             s.at("rhs").get<double>()});
    r.constant = j.at("constant").is_null() ? std::numeric_limits<double>::infinity() : j.at("constant").get<double>();
    r.pass = j.at("verdict").get<std::string>() == "pass";
    r.config_hash = j.at("config_hash").get<std::string>();
    if (j.contains("detail")) r.detail = j.at("detail").get<std::string>();
    return r;
}

std::string config_hash(const std::string& canonical)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<double> log_grid(double a, double b, int count)
{
    std::vector<double> out;
    if (count <= 0) return out;
    if (count == 1) return {a};
    const double la = std::log(a), lb = std::log(b);
    for (int i = 0; i < count; ++i) out.push_back(std::exp(la + (lb - la) * i / (count - 1)));
    // exp(log(x)) may be off by an ulp; keep the endpoints exact
    out.front() = a;
    out.back() = b;
    return out;
}

}  // namespace loglap

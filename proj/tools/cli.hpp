#pragma once

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace loglap::cli {

struct RunConfig {
    std::string command;
    int dim = 3;
    double tol = 1e-6;
    std::string out;  // empty: stdout
    std::string format = "csv";
    std::uint64_t seed = 0;
    double t = 1.0;
    double r_min = 0.1;
    double r_max = 10.0;
    int points = 50;
    std::string suite = "all";
    std::string datum = "ball";

    /// Canonical key=value pairs echoed into every output header.
    std::vector<std::pair<std::string, std::string>> describe() const;
    std::string hash() const;
};

/// A numeric table with self-describing metadata. Missing entries are NaN.
struct Table {
    std::string name;
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::string> column_notes;
    std::vector<std::vector<double>> rows;
};

Table kernel_table(const RunConfig& cfg);
Table cauchy_table(const RunConfig& cfg);
Table fundamental_table(const RunConfig& cfg);
Table helmholtz_table(const RunConfig& cfg);

/// Evaluation radii: log-spaced, or the single point r_min when r_min == r_max.
std::vector<double> radii(const RunConfig& cfg);

/// RFC 4180 CSV preceded by "# key=value" comment lines; 17 significant digits.
std::string to_csv(const Table& table);
/// Report-schema JSON (estimate_id, region, samples, constant, verdict, config_hash) plus the
/// full table under "columns" / "rows" and the metadata under "meta".
nlohmann::json to_json(const Table& table);

std::string format_number(double v);
std::string csv_field(const std::string& s);

/// Writes through a temporary file in the same directory and renames it into place.
void write_atomic(const std::string& path, const std::string& content);

/// Full command-line entry point; returns the process exit status
/// (0 success, 1 verification failure, 2 domain or usage error).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace loglap::cli

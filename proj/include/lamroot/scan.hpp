#pragma once

#include "lamroot/arith.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lamroot {

enum class ScanFilter { All, Primes, PrimePowers, Cyclic };
enum class ScanFormat { Csv, Json };

std::optional<ScanFilter> parse_filter(const std::string& s);

struct ScanConfig {
    u64 from = 3;
    u64 to = 3;
    ScanFilter filter = ScanFilter::All;
    std::vector<int> r_list = {1, 2, 3, 4};     // subset of {1,2,3,4}
    std::optional<u64> fixed_limit;              // nullopt: ceil(qc^0.6) policy
    ScanFormat format = ScanFormat::Csv;
    int jobs = 1;
};

struct ScanRecord {
    u64 q = 0, qc = 0, phi = 0, bigE = 0;
    std::string c0;                              // reduced "num/den"
    std::array<std::optional<u64>, 4> g;         // g*_1 .. g*_4
    std::array<std::optional<double>, 4> ratio;  // log g*_r / log qc
    std::optional<u64> limit_hit;                // search limit, when some r missed
};

struct ScanSummary {
    std::array<std::optional<double>, 4> max_ratio;
    std::array<std::optional<double>, 4> ref_exponent;  // 1/4 + 1/(4(r-1-delta_r))
};

/// Theorem constants delta_r, r = 2..5+ (delta_5 applies to all r >= 5).
double delta_r(int r);
/// 1/4 + 1/(4(r-1-delta_r)); only defined for r >= 2.
double reference_exponent(int r);

/// Records in ascending q, computed with `jobs` worker threads.
/// Output is independent of the parallelism degree.
std::vector<ScanRecord> run_scan(const ScanConfig& config);

ScanSummary summarize(const ScanConfig& config, const std::vector<ScanRecord>& records);

void write_csv(std::ostream& out, const ScanConfig& config,
               const std::vector<ScanRecord>& records, const ScanSummary& summary);
void write_json(std::ostream& out, const ScanConfig& config,
                const std::vector<ScanRecord>& records, const ScanSummary& summary);

/// Parses the body of an emitted CSV (header and '#' footer lines skipped).
std::vector<ScanRecord> parse_csv(std::istream& in);

/// Floats are rendered with 12 significant digits everywhere.
std::string format_double(double v);

} // namespace lamroot

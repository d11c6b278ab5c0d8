#include "lamroot/scan.hpp"

#include "lamroot/chargroup.hpp"
#include "lamroot/lambda.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace lamroot {

std::optional<ScanFilter> parse_filter(const std::string& s) {
    if (s == "all") return ScanFilter::All;
    if (s == "primes") return ScanFilter::Primes;
    if (s == "prime-powers") return ScanFilter::PrimePowers;
    if (s == "cyclic") return ScanFilter::Cyclic;
    return std::nullopt;
}

double delta_r(int r) {
    switch (r) {
        case 2: return 0.0044560;
        case 3: return 0.074267;
        case 4: return 0.103974;
        default:
            if (r < 2) throw std::invalid_argument("delta_r: r must be >= 2");
            return 0.1249;
    }
}

double reference_exponent(int r) {
    return 0.25 + 1.0 / (4.0 * (r - 1 - delta_r(r)));
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

bool passes_filter(const Modulus& m, ScanFilter f) {
    switch (f) {
        case ScanFilter::All: return true;
        case ScanFilter::Primes: return m.q_factors.big_omega() == 1;
        case ScanFilter::PrimePowers: return m.q_factors.omega() == 1;
        case ScanFilter::Cyclic: return m.bigE == m.phi;
    }
    return false;
}

ScanRecord scan_one(u64 q, const ScanConfig& config) {
    Modulus m = Modulus::make(q);
    ScanRecord rec;
    rec.q = q;
    rec.qc = m.qc;
    rec.phi = m.phi;
    rec.bigE = m.bigE;

    rec.c0 = fraction_string(c0_structural(m));

    for (int r : config.r_list) {
        u64 limit = config.fixed_limit ? *config.fixed_limit : default_search_limit(m, r);
        LambdaSearchResult res = least_Pr_lambda_root(m, r, limit);
        if (res.value) {
            // independent re-check before the row leaves the scanner
            if (!gamma_direct(*res.value, m) || res.big_omega > r)
                throw std::logic_error("scan: search result failed re-verification");
            rec.g[r - 1] = *res.value;
            if (m.qc > 1) rec.ratio[r - 1] = res.log_ratio;
        } else {
            rec.limit_hit = limit;
        }
    }
    return rec;
}

std::string opt_u64(const std::optional<u64>& v) {
    return v ? std::to_string(*v) : std::string{};
}

std::string opt_dbl(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string{};
}

} // namespace

std::vector<ScanRecord> run_scan(const ScanConfig& config) {
    if (config.from < 3 || config.to < config.from)
        throw std::invalid_argument("run_scan: need 3 <= from <= to");
    for (int r : config.r_list)
        if (r < 1 || r > 4) throw std::invalid_argument("run_scan: r must be in 1..4");

    std::vector<u64> moduli;
    for (u64 q = config.from; q <= config.to; ++q) {
        Modulus m = Modulus::make(q);
        if (passes_filter(m, config.filter)) moduli.push_back(q);
    }

    std::vector<ScanRecord> records(moduli.size());
    int jobs = std::max(1, config.jobs);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= moduli.size()) return;
            records[i] = scan_one(moduli[i], config);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return records;
}

ScanSummary summarize(const ScanConfig& config, const std::vector<ScanRecord>& records) {
    ScanSummary s;
    for (int r : config.r_list) {
        if (r >= 2) s.ref_exponent[r - 1] = reference_exponent(r);
        for (const auto& rec : records) {
            if (!rec.ratio[r - 1]) continue;
            double v = *rec.ratio[r - 1];
            if (!s.max_ratio[r - 1] || v > *s.max_ratio[r - 1]) s.max_ratio[r - 1] = v;
        }
    }
    return s;
}

void write_csv(std::ostream& out, const ScanConfig& config,
               const std::vector<ScanRecord>& records, const ScanSummary& summary) {
    out << "q,q_c,phi,E,c0,g1,g2,g3,g4,ratio1,ratio2,ratio3,ratio4,limit_hit\n";
    for (const auto& r : records) {
        out << r.q << ',' << r.qc << ',' << r.phi << ',' << r.bigE << ',' << r.c0;
        for (int i = 0; i < 4; ++i) out << ',' << opt_u64(r.g[i]);
        for (int i = 0; i < 4; ++i) out << ',' << opt_dbl(r.ratio[i]);
        out << ',' << opt_u64(r.limit_hit) << '\n';
    }
    for (int r : config.r_list) {
        out << "# max_ratio_" << r << "=" << opt_dbl(summary.max_ratio[r - 1]);
        if (r >= 2) out << " ref_exponent_" << r << "=" << opt_dbl(summary.ref_exponent[r - 1]);
        out << '\n';
    }
}

void write_json(std::ostream& out, const ScanConfig& config,
                const std::vector<ScanRecord>& records, const ScanSummary& summary) {
    nlohmann::json j;
    const char* filter_names[] = {"all", "primes", "prime-powers", "cyclic"};
    j["config"] = {
        {"from", config.from},
        {"to", config.to},
        {"filter", filter_names[static_cast<int>(config.filter)]},
        {"r", config.r_list},
        {"jobs", config.jobs},
    };
    if (config.fixed_limit) j["config"]["limit"] = *config.fixed_limit;

    j["records"] = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json row = {
            {"q", r.q}, {"q_c", r.qc}, {"phi", r.phi}, {"E", r.bigE}, {"c0", r.c0}};
        for (int i = 0; i < 4; ++i) {
            std::string gk = "g" + std::to_string(i + 1);
            std::string rk = "ratio" + std::to_string(i + 1);
            if (r.g[i]) row[gk] = *r.g[i];
            if (r.ratio[i]) row[rk] = *r.ratio[i];
        }
        if (r.limit_hit) row["limit_hit"] = *r.limit_hit;
        j["records"].push_back(std::move(row));
    }

    nlohmann::json sum;
    for (int r : config.r_list) {
        if (summary.max_ratio[r - 1])
            sum["max_ratio_" + std::to_string(r)] = *summary.max_ratio[r - 1];
        if (r >= 2)
            sum["ref_exponent_" + std::to_string(r)] = *summary.ref_exponent[r - 1];
    }
    j["summary"] = std::move(sum);
    out << j.dump(2) << '\n';
}

std::vector<ScanRecord> parse_csv(std::istream& in) {
    std::vector<ScanRecord> records;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) { header_seen = true; continue; }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        while (cells.size() < 14) cells.emplace_back();
        ScanRecord r;
        r.q = std::stoull(cells[0]);
        r.qc = std::stoull(cells[1]);
        r.phi = std::stoull(cells[2]);
        r.bigE = std::stoull(cells[3]);
        r.c0 = cells[4];
        for (int i = 0; i < 4; ++i)
            if (!cells[5 + i].empty()) r.g[i] = std::stoull(cells[5 + i]);
        for (int i = 0; i < 4; ++i)
            if (!cells[9 + i].empty()) r.ratio[i] = std::stod(cells[9 + i]);
        if (!cells[13].empty()) r.limit_hit = std::stoull(cells[13]);
        records.push_back(std::move(r));
    }
    return records;
}

} // namespace lamroot

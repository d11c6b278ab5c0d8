#include "lamroot/chargroup.hpp"
#include "lamroot/lambda.hpp"
#include "lamroot/scan.hpp"
#include "lamroot/sieve.hpp"
#include "lamroot/sums.hpp"
#include "lamroot/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>

namespace {

using namespace lamroot;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int cmd_verify(u64 qmax, bool inject_fault) {
    VerifyOptions opts;
    opts.qmax = qmax;
    opts.inject_fault = inject_fault;
    VerifyResult res = run_verify(opts);
    for (const auto& [name, count] : res.pass_counts)
        std::cout << name << ": " << count << " moduli passed\n";
    if (!res.ok) {
        std::cout << "FAIL " << res.first_failure << "\n";
        return kExitViolation;
    }
    std::cout << "all identities hold for q in [3, " << qmax << "]\n";
    return kExitOk;
}

int cmd_scan(const ScanConfig& config, const std::string& out_path) {
    auto records = run_scan(config);
    auto summary = summarize(config, records);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open output file: " << out_path << "\n";
            return kExitIo;
        }
        out = &file;
    }
    if (config.format == ScanFormat::Csv)
        write_csv(*out, config, records, summary);
    else
        write_json(*out, config, records, summary);
    out->flush();
    if (!*out) {
        std::cerr << "write failed\n";
        return kExitIo;
    }
    return kExitOk;
}

int cmd_siegel(u64 q, double x, double z) {
    Modulus m = Modulus::make(q);
    if (!m.admits_primitive_roots() || q % 2 == 0 || m.q_factors.big_omega() != 1) {
        std::cerr << "siegel: q must be an odd prime\n";
        return kExitUsage;
    }
    double cbrt_x = std::cbrt(x);
    std::cout << "q=" << q << " x=" << format_double(x) << " z=" << format_double(z) << "\n";
    std::cout << "H=" << format_double(H_sum(m, x)) << "\n";
    std::cout << "heathbrown_sum=" << format_double(heathbrown_sum(m, x)) << "\n";

    auto two_prime = two_prime_qr_split(m, x);
    std::cout << "T_exact=" << two_prime.count << "\n";
    std::cout << "T_relaxed=" << T_relaxed(m, x, z) << "\n";
    std::cout << "sifted_count=" << sifted_count(m, x, std::max(2.0, cbrt_x)) << "\n";

    u64 prime_count = 0;
    for (u64 p : primes_up_to(static_cast<u64>(x)))
        if (double(p) < x && gamma_direct(p, m)) ++prime_count;
    std::cout << "prime_primitive_roots_below_x=" << prime_count << "\n";

    CharContext ctx(m);
    u64 count = 0;
    for (u64 n = 1; n <= q; ++n) count += gamma_direct(n, m);
    Rational expected = ctx.c0() * Rational(static_cast<long long>(m.phi));
    std::cout << "lambda_roots_below_q=" << count
              << " c0_phi=" << fraction_string(expected) << "\n";
    if (Rational(static_cast<long long>(count)) != expected) {
        std::cout << "FAIL count identity\n";
        return kExitViolation;
    }
    return kExitOk;
}

int cmd_decompose(u64 q) {
    CharContext ctx(q);
    const Modulus& m = ctx.modulus();
    std::cout << "q=" << q << " phi=" << m.phi << " E=" << m.bigE << " S=" << m.bigS
              << " |G|=" << ctx.subgroup().size() << "\n";
    std::cout << "ranks:";
    for (auto [p, mp] : ctx.subgroup().ranks) std::cout << " m(" << p << ")=" << mp;
    std::cout << "\n";
    auto all = all_characters(ctx.basis());
    std::cout << "order,c_chi,exponents\n";
    for (const auto& chi : all) {
        Rational c = coefficient(chi, m, ctx.subgroup());
        std::cout << chi.order << "," << fraction_string(c) << ",\"";
        for (std::size_t i = 0; i < chi.exps.size(); ++i) {
            if (i) std::cout << ' ';
            std::cout << chi.exps[i];
        }
        std::cout << "\"\n";
    }
    return kExitOk;
}

int cmd_pthpower(u64 p, const std::vector<int>& m_list) {
    std::cout << "m,B,p^(1/(2m)),implied_C\n";
    for (int m : m_list) {
        if (m < 1) {
            std::cerr << "pthpower: m must be >= 1\n";
            return kExitUsage;
        }
        double x = std::pow(double(p), 1.0 / m);
        u64 b = kruswijk_B(p, std::max(x, 1.0000001));
        double bound = std::pow(double(p), 1.0 / (2.0 * m));
        double implied = std::log(double(b) / bound) * std::log(std::log(double(p))) /
                         std::log(double(p));
        std::cout << m << "," << b << "," << format_double(bound) << ","
                  << format_double(implied) << "\n";
    }
    return kExitOk;
}

int cmd_remainder(u64 q, double x, u64 dmax, double eta) {
    CharContext ctx(q);
    double eps = eta * eta;
    std::cout << "d,direct,char,main_term,envelope\n";
    for (u64 d = 1; d <= dmax && double(d) < x; ++d) {
        auto rec = remainder_Rd(ctx, x, d, eps, eta);
        std::cout << d << "," << format_double(rec.direct_value) << ","
                  << format_double(rec.char_value) << "," << format_double(rec.main_term)
                  << "," << format_double(rec.bound_envelope) << "\n";
    }
    double y = std::pow(x, 1.0 - eta) /
               std::pow(double(ctx.modulus().qc), 0.25 + 3.0 * eta);
    if (y >= 1.0 && y < x) {
        auto ws = weighted_remainder_sum(ctx, x, y, eps, eta);
        std::cout << "# weighted_sum(y=" << format_double(y) << ")="
                  << format_double(ws.sum) << " envelope=" << format_double(ws.envelope)
                  << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lambda-root character decomposition and almost-prime scans"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run the exact-identity suites");
    u64 verify_qmax = 2000;
    bool inject_fault = false;
    verify->add_option("--qmax", verify_qmax, "largest modulus checked")->check(CLI::Range(u64(3), u64(100000)));
    verify->add_flag("--inject-fault", inject_fault)->group("");  // hidden test hook

    // scan
    auto* scan = app.add_subcommand("scan", "batch scan of least P_r lambda-roots");
    ScanConfig config;
    std::string filter_name = "all", format_name = "csv", limit_policy = "auto", out_path;
    scan->set_config("--config");
    scan->add_option("--from", config.from, "first modulus")->required();
    scan->add_option("--to", config.to, "last modulus")->required();
    scan->add_option("--filter", filter_name, "all|primes|prime-powers|cyclic");
    scan->add_option("--r", config.r_list, "P_r classes to search (subset of 1..4)");
    scan->add_option("--limit-policy,--limit_policy", limit_policy, "auto (ceil(qc^0.6)) or a fixed integer");
    scan->add_option("--out", out_path, "output path (default stdout)");
    scan->add_option("--format", format_name, "csv|json");
    scan->add_option("--jobs", config.jobs, "worker threads")->check(CLI::Range(1, 256));

    // siegel
    auto* siegel = app.add_subcommand("siegel", "Siegel-zero style experiment for an odd prime q");
    u64 siegel_q = 7;
    double siegel_x = 1000, siegel_z = 0;
    siegel->add_option("--q", siegel_q)->required();
    siegel->add_option("--x", siegel_x)->required()->check(CLI::PositiveNumber);
    siegel->add_option("--z", siegel_z, "sieve parameter, default x^(1/3)");

    // decompose
    auto* decompose = app.add_subcommand("decompose", "print the c_chi table");
    u64 dec_q = 7;
    decompose->add_option("--q", dec_q)->required()->check(CLI::Range(u64(3), u64(1) << 22));

    // pthpower
    auto* pthpower = app.add_subcommand("pthpower", "Kruswijk B(p^(1/m)) table");
    u64 pth_p = 5;
    std::vector<int> m_list = {1, 2, 3};
    pthpower->add_option("--p", pth_p)->required();
    pthpower->add_option("--m", m_list, "list of m values");

    // remainder
    auto* remainder = app.add_subcommand("remainder", "sieve remainder terms R_d");
    u64 rem_q = 7, rem_dmax = 30;
    double rem_x = 500, rem_eta = kDefaultEta;
    remainder->add_option("--q", rem_q)->required()->check(CLI::Range(u64(3), u64(1) << 22));
    remainder->add_option("--x", rem_x)->required()->check(CLI::PositiveNumber);
    remainder->add_option("--dmax", rem_dmax);
    remainder->add_option("--eta", rem_eta)->check(CLI::Range(1e-9, 0.999));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*verify) return cmd_verify(verify_qmax, inject_fault);
        if (*scan) {
            auto filter = parse_filter(filter_name);
            if (!filter) {
                std::cerr << "unknown filter: " << filter_name << "\n";
                return kExitUsage;
            }
            config.filter = *filter;
            if (format_name == "csv") config.format = ScanFormat::Csv;
            else if (format_name == "json") config.format = ScanFormat::Json;
            else {
                std::cerr << "unknown format: " << format_name << "\n";
                return kExitUsage;
            }
            if (limit_policy != "auto") config.fixed_limit = std::stoull(limit_policy);
            return cmd_scan(config, out_path);
        }
        if (*siegel) {
            if (siegel_z <= 0) siegel_z = std::max(2.0, std::cbrt(siegel_x));
            return cmd_siegel(siegel_q, siegel_x, siegel_z);
        }
        if (*decompose) return cmd_decompose(dec_q);
        if (*pthpower) return cmd_pthpower(pth_p, m_list);
        if (*remainder) return cmd_remainder(rem_q, rem_x, rem_dmax, rem_eta);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "identity violation: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}

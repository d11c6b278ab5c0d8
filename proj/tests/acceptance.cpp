// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 11 shells out to the lamroot binary (path injected by
// the build).

#include "lamroot/chargroup.hpp"
#include "lamroot/lambda.hpp"
#include "lamroot/scan.hpp"
#include "lamroot/sieve.hpp"
#include "lamroot/sums.hpp"
#include "lamroot/verify.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace lamroot;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

void run(int id, const std::string& name, const std::function<std::pair<bool, std::string>()>& fn) {
    try {
        auto [ok, detail] = fn();
        report(id, name, ok, detail);
    } catch (const std::exception& e) {
        report(id, name, false, e.what());
    }
}

} // namespace

int main() {
    // 1. decomposition identity, q in [3, 500], all n in [0, q)
    run(1, "decomposition identity (character route == direct order test)", [] {
        for (u64 q = 3; q <= 500; ++q) {
            CharContext ctx(q);
            Modulus m = Modulus::make(q);
            for (u64 n = 0; n < q; ++n)
                if (ctx.gamma_by_characters(n) != gamma_direct(n, m))
                    return std::pair{false, "q=" + std::to_string(q) + " n=" + std::to_string(n)};
        }
        return std::pair{true, std::string{}};
    });

    // 2-4 share one context sweep over q in [3, 2000]
    bool count_ok = true, sums_ok = true, census_ok = true;
    std::string count_w, sums_w, census_w;
    try {
        for (u64 q = 3; q <= 2000; ++q) {
            Modulus m = Modulus::make(q);
            CharContext ctx(m);
            const auto& G = ctx.subgroup();

            if (count_ok) {
                u64 count = 0;
                for (u64 n = 1; n <= q; ++n) count += gamma_direct(n, m);
                if (Rational(static_cast<long long>(count)) !=
                    ctx.c0() * Rational(static_cast<long long>(m.phi))) {
                    count_ok = false;
                    count_w = "q=" + std::to_string(q);
                }
            }
            if (sums_ok) {
                auto [sum_abs, target] = ctx.coefficient_sum_check();
                if (sum_abs != target || ctx.coefficient_sum() != Rational(0)) {
                    sums_ok = false;
                    sums_w = "q=" + std::to_string(q);
                }
            }
            if (census_ok) {
                bool ok = G.exponent == m.bigS;
                u64 size = 1;
                for (auto [p, mp] : G.ranks)
                    for (int i = 0; i < mp; ++i) size *= p;
                ok = ok && size == G.size();
                for (const auto& [d, cnt] : G.order_census) {
                    u64 expected = 1;
                    for (auto [p, mp] : G.ranks) {
                        if (d % p != 0) continue;
                        u64 pm = 1;
                        for (int i = 0; i < mp; ++i) pm *= p;
                        expected *= pm - 1;
                    }
                    if (cnt != expected) { ok = false; break; }
                }
                if (!ok) {
                    census_ok = false;
                    census_w = "q=" + std::to_string(q);
                }
            }
        }
    } catch (const std::exception& e) {
        count_ok = sums_ok = census_ok = false;
        count_w = sums_w = census_w = e.what();
    }
    report(2, "count identity #lambda-roots = c0*phi(q), q <= 2000, exact", count_ok, count_w);
    report(3, "sum|c_chi| = 2^omega(phi)c0 and sum c_chi = 0, q <= 2000, exact", sums_ok, sums_w);
    report(4, "order census and exponent(G) = S(q), q <= 2000, exact", census_ok, census_w);

    // 5. induced periodicity, q in [3, 1000], 100 pairs per character
    run(5, "induced periodicity mod qtilde, q <= 1000, 100 pairs/char", [] {
        for (u64 q = 3; q <= 1000; ++q) {
            auto report5 = CharContext(q).induced_periodicity_check(100);
            if (!report5.violations.empty())
                return std::pair{false, "q=" + std::to_string(q)};
        }
        return std::pair{true, std::string{}};
    });

    // 6. R_d direct vs character form, 1e-6 relative
    run(6, "R_d: direct form vs character form within 1e-6 relative", [] {
        for (u64 q : {7ull, 11ull, 31ull, 101ull, 9ull, 25ull, 27ull}) {
            CharContext ctx(q);
            for (double x : {50.0, 500.0, 5000.0}) {
                for (u64 d = 1; d <= 30 && double(d) < x; ++d) {
                    auto rec = remainder_Rd(ctx, x, d, kDefaultEps, kDefaultEta);
                    if (std::abs(rec.direct_value - rec.char_value) >
                        1e-6 * (1.0 + std::abs(rec.direct_value)))
                        return std::pair{false, "q=" + std::to_string(q) + " x=" +
                                                    std::to_string(x) + " d=" + std::to_string(d)};
                }
            }
        }
        return std::pair{true, std::string{}};
    });

    // 7. two-prime structure and T_exact <= T_relaxed on a z-grid
    run(7, "two-prime primitive roots split QR/QNR; T_exact <= T_relaxed(z)", [] {
        double x = 10000.0;
        for (u64 q : primes_up_to(101)) {
            if (q < 3) continue;
            Modulus m = Modulus::make(q);
            // split violations throw inside two_prime_qr_split
            u64 t_exact = two_prime_qr_split(m, x).count;
            for (double z : {2.0, 5.0, 10.0, 20.0}) {
                if (t_exact > T_relaxed(m, x, z))
                    return std::pair{false, "q=" + std::to_string(q) + " z=" + std::to_string(z)};
            }
        }
        return std::pair{true, std::string{}};
    });

    // 8. sifted counts contain only P2s
    run(8, "sifted_count(q, x, x^(1/3)) counts only P2 integers", [] {
        double x = 10000.0;
        double z = std::cbrt(x);
        for (u64 q : primes_up_to(101)) {
            if (q < 3) continue;
            Modulus m = Modulus::make(q);
            u64 counted = 0;
            for (u64 n = 2; double(n) < x; ++n) {
                u64 spf = n;
                for (u64 f = 2; f * f <= n; ++f)
                    if (n % f == 0) { spf = f; break; }
                if (double(spf) <= z) continue;
                if (!gamma_direct(n, m)) continue;
                ++counted;
                if (classify_Pr(n).big_omega > 2)
                    return std::pair{false, "q=" + std::to_string(q) + " n=" + std::to_string(n)};
            }
            if (counted != sifted_count(m, x, z))
                return std::pair{false, "count mismatch q=" + std::to_string(q)};
        }
        return std::pair{true, std::string{}};
    });

    // 9. Kruswijk values and empirical envelope with fitted C < 3
    run(9, "Kruswijk B values and envelope B(p^(1/m)) <= p^(1/(2m))e^(C log p/loglog p), C < 3", [] {
        if (kruswijk_B(5, 25.0) != 4) return std::pair{false, std::string("B(5,25)")};
        if (kruswijk_B(7, 49.0) != 6) return std::pair{false, std::string("B(7,49)")};
        auto primes = primes_up_to(100000);
        std::vector<u64> sample;
        u64 next = 1000;
        for (u64 p : primes) {
            if (p < 1000) continue;
            if (p >= next) {
                sample.push_back(p);
                next = u64(double(next) * 1.9);
            }
        }
        double fitted_C = -std::numeric_limits<double>::infinity();
        for (u64 p : sample) {
            for (int m = 1; m <= 3; ++m) {
                double x = std::pow(double(p), 1.0 / m);
                u64 b = kruswijk_B(p, std::max(x, 1.0000001));
                double bound = std::pow(double(p), 1.0 / (2.0 * m));
                double c = std::log(double(b) / bound) * std::log(std::log(double(p))) /
                           std::log(double(p));
                fitted_C = std::max(fitted_C, c);
            }
        }
        return std::pair{fitted_C < 3.0, "fitted C = " + format_double(fitted_C) +
                                             " over " + std::to_string(sample.size()) + " primes"};
    });

    // 10. empirical exponent: max log g*_2(p)/log p < 0.55 over primes in [100, 1e5]
    run(10, "max log g*_2(p)/log p < 0.55 over primes in [100, 100000]", [] {
        auto primes = primes_up_to(100000);
        std::vector<u64> ps;
        for (u64 p : primes)
            if (p >= 100) ps.push_back(p);
        std::vector<double> ratios(ps.size(), -1.0);
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= ps.size()) return;
                Modulus m = Modulus::make(ps[i]);
                auto res = least_Pr_lambda_root(m, 2, default_search_limit(m, 2));
                if (res.value)
                    ratios[i] = std::log(double(*res.value)) / std::log(double(ps[i]));
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < 8; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        double max_ratio = 0.0;
        u64 argmax = 0;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            if (ratios[i] < 0)
                return std::pair{false, "g*_2 not found below limit for p=" + std::to_string(ps[i])};
            if (ratios[i] > max_ratio) { max_ratio = ratios[i]; argmax = ps[i]; }
        }
        return std::pair{max_ratio < 0.55,
                         "max ratio " + format_double(max_ratio) + " at p=" + std::to_string(argmax) +
                             " (reference exponent " + format_double(reference_exponent(2)) + ")"};
    });

    // 11. scan output byte-identical across parallelism degrees 1 and 8
    run(11, "scan CSV byte-identical for --jobs 1 and --jobs 8", [] {
        namespace fs = std::filesystem;
        fs::path dir = fs::temp_directory_path();
        fs::path a = dir / "lamroot_scan_j1.csv";
        fs::path b = dir / "lamroot_scan_j8.csv";
        std::string base = std::string(LAMROOT_BIN) +
                           " scan --from 3 --to 600 --filter all --r 1 2 3 4 --format csv";
        if (std::system((base + " --jobs 1 --out " + a.string()).c_str()) != 0)
            return std::pair{false, std::string("jobs=1 run failed")};
        if (std::system((base + " --jobs 8 --out " + b.string()).c_str()) != 0)
            return std::pair{false, std::string("jobs=8 run failed")};
        std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
        std::stringstream sa, sb;
        sa << fa.rdbuf();
        sb << fb.rdbuf();
        if (sa.str().empty()) return std::pair{false, std::string("empty output")};
        return std::pair{sa.str() == sb.str(), std::string{}};
    });

    if (g_failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}

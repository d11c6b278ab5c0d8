#include "lamroot/sums.hpp"

#include "lamroot/sieve.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lamroot {

namespace {

bool above_cube_root(u64 p, double x) {
    return (long double)p * p * p > (long double)x;
}

bool below_two_thirds(u64 p, double x) {
    return (long double)p * p * p < (long double)x * x;
}

bool prime_range_ok(u64 p, double x) {
    return above_cube_root(p, x) && below_two_thirds(p, x);
}

u64 smallest_prime_factor(u64 n) {
    if (n < 2) return 0;
    for (u64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

} // namespace

std::complex<double> char_sum(const CharContext& ctx, std::size_t chi_index, u64 N) {
    if (N < 1) throw std::invalid_argument("char_sum: N must be >= 1");
    std::complex<double> acc{0.0, 0.0};
    for (u64 n = 1; n <= N; ++n)
        acc += ctx.chi_value(chi_index, n);
    return acc;
}

std::vector<BurgessRow> burgess_envelope_report(const CharContext& ctx, double eta,
                                                const std::vector<u64>& n_grid) {
    if (eta <= 0 || eta >= 1)
        throw std::invalid_argument("burgess_envelope_report: eta must be in (0, 1)");
    const Modulus& m = ctx.modulus();
    double classical = std::sqrt(double(m.q)) * std::log(double(m.q));
    std::vector<BurgessRow> rows;
    for (std::size_t i = 0; i < ctx.subgroup().size(); ++i) {
        if (ctx.subgroup().chars[i].is_principal()) continue;
        for (u64 N : n_grid) {
            double abs_sum = std::abs(char_sum(ctx, i, N));
            double envelope = double(N) *
                std::pow(std::pow(double(m.qc), 0.25 + eta) / double(N), eta);
            rows.push_back({i, ctx.subgroup().chars[i].order, N, abs_sum, envelope,
                            abs_sum / envelope, classical});
        }
    }
    return rows;
}

RemainderRecord remainder_Rd(const CharContext& ctx, double x, u64 d, double eps, double eta) {
    if (x <= 1) throw std::invalid_argument("remainder_Rd: x must be > 1");
    if (d < 1 || double(d) >= x) throw std::invalid_argument("remainder_Rd: need 1 <= d < x");
    const Modulus& m = ctx.modulus();
    RemainderRecord rec;
    rec.q = m.q;
    rec.x = x;
    rec.d = d;
    if (std::gcd(d, m.q) != 1) return rec;  // vanishing convention

    double density = boost::rational_cast<double>(ctx.c0()) * double(m.phi) / double(m.q);
    rec.main_term = density * x / double(d);

    u64 direct_count = 0;
    for (u64 n = d; double(n) < x; n += d)
        direct_count += gamma_direct(n, m);
    rec.direct_value = double(direct_count) - rec.main_term;

    // character route: sum_chi c_chi chi(d) sum_{m < x/d} chi(m); the inner
    // range condition mirrors the direct loop (d*m < x) exactly
    std::complex<double> acc{0.0, 0.0};
    const auto& coeffs = ctx.coefficients();
    for (std::size_t i = 0; i < ctx.subgroup().size(); ++i) {
        std::complex<double> inner{0.0, 0.0};
        for (u64 n = 1; double(d) * double(n) < x; ++n)
            inner += ctx.chi_value(i, n);
        acc += boost::rational_cast<double>(coeffs[i]) * ctx.chi_value(i, d) * inner;
    }
    rec.char_value = acc.real() - rec.main_term;

    rec.bound_envelope = rec.main_term *
        std::pow(double(m.qc), 2 * eps) *
        std::pow(double(d) / x * std::pow(double(m.qc), 0.25 + eta), eta);
    return rec;
}

WeightedRemainder weighted_remainder_sum(const CharContext& ctx, double x, double y,
                                         double eps, double eta) {
    if (y >= x) throw std::invalid_argument("weighted_remainder_sum: need y < x");
    const Modulus& m = ctx.modulus();
    WeightedRemainder out;
    double density = boost::rational_cast<double>(ctx.c0()) * double(m.phi) / double(m.q);
    out.envelope = density * std::pow(x, 1.0 - eta * eta / 2.0);
    for (u64 d = 1; double(d) <= y; ++d) {
        Factorization f = factorize(d);
        if (!f.squarefree()) continue;
        if (std::gcd(d, m.q) != 1) continue;  // R_d = 0
        double weight = std::pow(3.0, f.omega());
        out.sum += weight * remainder_Rd(ctx, x, d, eps, eta).direct_value;
    }
    return out;
}

double H_sum(const Modulus& m, double x) {
    if (!m.admits_primitive_roots() || m.q % 2 == 0 || m.q_factors.big_omega() != 1)
        throw std::invalid_argument("H_sum: q must be an odd prime");
    if (x <= 1) return 0.0;
    double h = 0.0;
    u64 upper = static_cast<u64>(std::ceil(std::pow(x, 2.0 / 3.0))) + 2;
    for (u64 p : primes_up_to(upper)) {
        if (!prime_range_ok(p, x)) continue;
        if (quadratic_character(p, m) != 1) continue;
        h += 1.0 / double(p);
    }
    return h;
}

double heathbrown_sum(const Modulus& m, double x) {
    if (!m.admits_primitive_roots() || m.q % 2 == 0 || m.q_factors.big_omega() != 1)
        throw std::invalid_argument("heathbrown_sum: q must be an odd prime");
    if (x <= 2) return 0.0;
    double s = 0.0;
    for (u64 p : primes_up_to(static_cast<u64>(std::ceil(x)))) {
        if (double(p) >= x) break;
        if (quadratic_character(p, m) != 1) continue;
        s += std::log(double(p)) / double(p);
    }
    return s;
}

u64 T_relaxed(const Modulus& m, double x, double z) {
    if (!m.admits_primitive_roots() || m.q % 2 == 0 || m.q_factors.big_omega() != 1)
        throw std::invalid_argument("T_relaxed: q must be an odd prime");
    if (z < 2 || (long double)z * z * z > (long double)x)
        throw std::invalid_argument("T_relaxed: need 2 <= z <= x^(1/3)");
    u64 upper = static_cast<u64>(std::ceil(std::pow(x, 2.0 / 3.0))) + 2;
    auto primes = primes_up_to(upper);
    u64 count = 0;
    for (u64 p : primes) {
        if (!prime_range_ok(p, x)) continue;
        if (quadratic_character(p, m) != 1) continue;
        for (u64 n = 1; double(p) * double(n) < x; ++n) {
            if (n > 1) {
                u64 spf = smallest_prime_factor(n);
                if (double(spf) <= z) continue;
            }
            if (gamma_direct(p * n % m.q, m)) ++count;
        }
    }
    return count;
}

u64 kruswijk_B(u64 p, double x) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("kruswijk_B: p must be an odd prime");
    if (x <= 1 || x > double(p) * double(p))
        throw std::invalid_argument("kruswijk_B: need 1 < x <= p^2");
    u64 p2 = p * p;
    u64 count = 0;
    for (u64 b = 1; double(b) <= x; ++b) {
        if (b % p == 0) continue;
        if (powmod(b, p - 1, p2) == 1) ++count;
    }
    return count;
}

u64 sifted_count(const Modulus& m, double x, double z) {
    if (z < 2 || z > x) throw std::invalid_argument("sifted_count: need 2 <= z <= x");
    u64 count = 0;
    for (u64 n = 2; double(n) < x; ++n) {
        u64 spf = smallest_prime_factor(n);
        if (double(spf) <= z) continue;
        count += gamma_direct(n, m);
    }
    return count;
}

} // namespace lamroot

#include "lamroot/lambda.hpp"

#include "lamroot/sieve.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lamroot {

int gamma_direct(u64 n, const Modulus& m) {
    n %= m.q;
    if (std::gcd(n, m.q) != 1) return 0;
    for (auto [p, e] : m.e_factors.factors)
        if (powmod(n, m.bigE / p, m.q) == 1) return 0;
    return 1;
}

u64 default_search_limit(const Modulus& m, int /*r*/) {
    u64 limit = static_cast<u64>(std::ceil(std::pow(double(m.qc), 0.6)));
    return std::max<u64>(limit, 20);
}

LambdaSearchResult least_Pr_lambda_root(const Modulus& m, int r, u64 limit) {
    if (r < 1) throw std::invalid_argument("least_Pr_lambda_root: r must be >= 1");
    if (limit < 2) throw std::invalid_argument("least_Pr_lambda_root: limit must be >= 2");
    LambdaSearchResult res;
    res.q = m.q;
    res.r = r;
    res.limit = limit;
    for (u64 n = 2; n <= limit; ++n) {
        if (std::gcd(n % m.q, m.q) != 1) continue;
        Factorization f = factorize(n);
        if (f.big_omega() > r) continue;
        if (!gamma_direct(n, m)) continue;
        res.value = n;
        res.factors = std::move(f);
        res.big_omega = res.factors.big_omega();
        res.is_prime = res.big_omega == 1;
        if (m.qc > 1)
            res.log_ratio = std::log(double(n)) / std::log(double(m.qc));
        break;
    }
    return res;
}

TwoPrimeReport two_prime_qr_split(const Modulus& m, double x) {
    if (!m.admits_primitive_roots() || m.q % 2 == 0 || m.q_factors.big_omega() != 1)
        throw std::invalid_argument("two_prime_qr_split: q must be an odd prime");
    TwoPrimeReport report;
    if (x <= 2) return report;
    auto primes = primes_up_to(static_cast<u64>(x));
    long double xl = x;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        u64 p1 = primes[i];
        long double c1 = (long double)p1 * p1 * p1;
        if (c1 <= xl) continue;  // needs p1 > x^(1/3), open
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            u64 p2 = primes[j];
            if ((long double)p1 * p2 >= xl) break;
            if (!gamma_direct(p1 * p2, m)) continue;
            int q1 = quadratic_character(p1, m);
            int q2 = quadratic_character(p2, m);
            if ((q1 == 1) == (q2 == 1))
                throw std::logic_error("two_prime_qr_split: factors are not a QR/QNR pair");
            ++report.count;
            report.pairs.push_back(q1 == 1 ? TwoPrimePair{p1, p2} : TwoPrimePair{p2, p1});
        }
    }
    return report;
}

std::vector<LiftRow> lift_check(u64 p, u64 limit) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("lift_check: p must be an odd prime");
    Modulus m = Modulus::make(p);
    std::vector<LiftRow> rows;
    for (u64 g = 2; g <= limit; ++g) {
        if (!gamma_direct(g, m)) continue;
        rows.push_back({g, powmod(g, p - 1, p * p) != 1});
    }
    return rows;
}

} // namespace lamroot

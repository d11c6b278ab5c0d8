#include "lamroot/arith.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace lamroot {

u64 powmod(u64 base, u64 exp, u64 mod) {
    if (mod == 1) return 0;
    u64 result = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return result;
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
    u64 x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

u64 pollard_rho(u64 n) {
    // Brent's cycle variant with batched gcds.
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto f = [n, c](u64 x) { return (mulmod(x, x, n) + c) % n; };
        u64 x = 2, y = 2, d = 1;
        u64 prod = 1;
        int steps = 0;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            u64 diff = x > y ? x - y : y - x;
            if (diff == 0) { d = 0; break; }
            prod = mulmod(prod, diff, n);
            if (++steps % 64 == 0) {
                d = std::gcd(prod, n);
                prod = 1;
            }
        }
        if (d == 0) continue; // cycle without factor, retry with new c
        if (d == 1) d = std::gcd(prod, n);
        if (d != 1 && d != n) return d;
    }
}

constexpr u64 kTrialBound = 100000;

const std::vector<u64>& small_primes() {
    static const std::vector<u64> primes = [] {
        std::vector<bool> comp(kTrialBound + 1, false);
        std::vector<u64> p;
        for (u64 i = 2; i <= kTrialBound; ++i) {
            if (!comp[i]) {
                p.push_back(i);
                for (u64 j = i * i; j <= kTrialBound; j += i) comp[j] = true;
            }
        }
        return p;
    }();
    return primes;
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    // Sufficient witness set for n < 3.3 * 10^24.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

u64 Factorization::value() const {
    u64 v = 1;
    for (auto [p, e] : factors)
        for (int i = 0; i < e; ++i) v *= p;
    return v;
}

int Factorization::big_omega() const {
    int total = 0;
    for (auto [p, e] : factors) total += e;
    return total;
}

bool Factorization::squarefree() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const auto& pe) { return pe.second == 1; });
}

int Factorization::mobius() const {
    if (!squarefree()) return 0;
    return omega() % 2 == 0 ? 1 : -1;
}

u64 Factorization::radical() const {
    u64 r = 1;
    for (auto [p, e] : factors) r *= p;
    return r;
}

u64 Factorization::euler_phi() const {
    u64 phi = 1;
    for (auto [p, e] : factors) {
        phi *= p - 1;
        for (int i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

std::vector<u64> Factorization::prime_support() const {
    std::vector<u64> s;
    s.reserve(factors.size());
    for (auto [p, e] : factors) s.push_back(p);
    return s;
}

Factorization factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
    Factorization f;
    for (u64 p : small_primes()) {
        if (p * p > n) break;
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.factors.emplace_back(p, e);
        }
    }
    if (n > 1) {
        if (n <= kTrialBound * kTrialBound && is_prime(n)) {
            f.factors.emplace_back(n, 1);
        } else {
            std::vector<u64> rest;
            factor_rec(n, rest);
            std::sort(rest.begin(), rest.end());
            for (std::size_t i = 0; i < rest.size();) {
                std::size_t j = i;
                while (j < rest.size() && rest[j] == rest[i]) ++j;
                f.factors.emplace_back(rest[i], static_cast<int>(j - i));
                i = j;
            }
        }
    }
    std::sort(f.factors.begin(), f.factors.end());
    return f;
}

u64 carmichael_E(u64 q) {
    if (q == 0) throw std::invalid_argument("carmichael_E: q must be >= 1");
    if (q <= 2) return 1;
    u64 result = 1;
    for (auto [p, e] : factorize(q).factors) {
        u64 lam;
        if (p == 2) {
            lam = e == 1 ? 1 : (e == 2 ? 2 : u64(1) << (e - 2));
        } else {
            lam = p - 1;
            for (int i = 1; i < e; ++i) lam *= p;
        }
        result = std::lcm(result, lam);
    }
    return result;
}

u64 radical_S(u64 q) {
    return factorize(carmichael_E(q)).radical();
}

CubefreeParts cubefree_parts(u64 q) {
    if (q < 3) throw std::invalid_argument("cubefree_parts: q must be >= 3");
    u64 qc = 1;
    int ord2 = 0;
    for (auto [p, e] : factorize(q).factors) {
        if (p == 2) {
            ord2 = e;
            continue;
        }
        int kept = std::min(e, 2);
        for (int i = 0; i < kept; ++i) qc *= p;
    }
    int alpha = std::max(3, ord2);
    return {qc, (u64(1) << alpha) * qc};
}

std::optional<u64> mult_order(u64 n, u64 q) {
    if (q < 2) throw std::invalid_argument("mult_order: q must be >= 2");
    n %= q;
    if (std::gcd(n, q) != 1) return std::nullopt;
    u64 e = carmichael_E(q);
    u64 order = e;
    for (auto [p, k] : factorize(e).factors) {
        while (order % p == 0 && powmod(n, order / p, q) == 1) order /= p;
    }
    return order;
}

PrClass classify_Pr(u64 n) {
    Factorization f = factorize(n);
    return {f.big_omega(), f.squarefree()};
}

Modulus Modulus::make(u64 q) {
    if (q == 0) throw std::invalid_argument("Modulus: q must be >= 1");
    Modulus m;
    m.q = q;
    m.q_factors = factorize(q);
    m.phi = m.q_factors.euler_phi();
    m.bigE = carmichael_E(q);
    m.e_factors = factorize(m.bigE);
    m.bigS = m.e_factors.radical();
    if (q >= 3) {
        auto parts = cubefree_parts(q);
        m.qc = parts.qc;
        m.qtilde = parts.qtilde;
    } else {
        m.qc = 1;
        m.qtilde = 8;
    }
    return m;
}

bool Modulus::admits_primitive_roots() const {
    const auto& f = q_factors.factors;
    if (f.size() == 1 && f[0].first != 2) return true;
    if (f.size() == 2 && f[0].first == 2 && f[0].second == 1) return true;
    return false;
}

u64 Modulus::odd_prime() const {
    for (auto [p, e] : q_factors.factors)
        if (p != 2) return p;
    throw std::logic_error("odd_prime: modulus is a power of 2");
}

int quadratic_character(u64 n, const Modulus& m) {
    if (!m.admits_primitive_roots() || m.q == 2 || m.q == 4)
        throw std::invalid_argument("quadratic_character: modulus must admit primitive roots (q != 2, 4)");
    if (std::gcd(n % m.q, m.q) != 1) return 0;
    u64 p = m.odd_prime();
    u64 r = powmod(n % p, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

} // namespace lamroot

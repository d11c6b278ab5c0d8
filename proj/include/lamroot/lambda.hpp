#pragma once

#include "lamroot/arith.hpp"

#include <optional>
#include <vector>

namespace lamroot {

/// 1 iff gcd(n, q) = 1 and n^(E(q)/p) != 1 mod q for every prime p | E(q).
int gamma_direct(u64 n, const Modulus& m);

struct LambdaSearchResult {
    u64 q = 0;
    int r = 0;
    std::optional<u64> value;  // nullopt: nothing <= limit
    u64 limit = 0;
    Factorization factors;     // of value, when found
    int big_omega = 0;
    bool is_prime = false;
    double log_ratio = 0.0;    // log(value) / log(qc), 0 when qc <= 1
};

/// Least n <= limit with gamma(n) = 1 and Omega(n) <= r.
LambdaSearchResult least_Pr_lambda_root(const Modulus& m, int r, u64 limit);

/// ceil(qc^0.6), floored at 20 so tiny moduli still get a usable window.
u64 default_search_limit(const Modulus& m, int r);

struct TwoPrimePair {
    u64 p1, p2;  // p1 is the quadratic-residue factor
};
struct TwoPrimeReport {
    u64 count = 0;  // T of the exact two-prime sum
    std::vector<TwoPrimePair> pairs;
};

/// Enumerates products p1*p2 < x of distinct primes > x^(1/3) with
/// gamma(p1 p2) = 1 and checks that exactly one factor is a quadratic
/// residue. A violation throws std::logic_error.
TwoPrimeReport two_prime_qr_split(const Modulus& m, double x);

struct LiftRow {
    u64 g;
    bool lifts;  // g is also a primitive root mod p^2
};

/// For each lambda-root g <= limit mod p, whether g^(p-1) != 1 mod p^2.
std::vector<LiftRow> lift_check(u64 p, u64 limit);

} // namespace lamroot

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lamroot {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(u128(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 mod);

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(u64 n);

/// Sorted (prime, exponent) pairs; empty for n = 1.
struct Factorization {
    std::vector<std::pair<u64, int>> factors;

    u64 value() const;
    int omega() const { return static_cast<int>(factors.size()); }
    int big_omega() const;
    bool squarefree() const;
    int mobius() const;
    u64 radical() const;
    u64 euler_phi() const;
    std::vector<u64> prime_support() const;
};

/// Trial division over a small sieve, then Pollard rho.
Factorization factorize(u64 n);

/// Exponent of the unit group mod q (Carmichael lambda); 1 for q in {1, 2}.
u64 carmichael_E(u64 q);

/// Largest squarefree divisor of E(q).
u64 radical_S(u64 q);

struct CubefreeParts {
    u64 qc;      // largest odd cubefree divisor of q
    u64 qtilde;  // 2^max(3, ord_2 q) * qc
};
CubefreeParts cubefree_parts(u64 q);

/// Least r >= 1 with n^r = 1 mod q, or nullopt when gcd(n, q) > 1.
/// Computed by factoring E(q) and stripping primes.
std::optional<u64> mult_order(u64 n, u64 q);

struct PrClass {
    int big_omega;
    bool is_squarefree;
};
PrClass classify_Pr(u64 n);

/// Cached arithmetic profile of a modulus.
struct Modulus {
    u64 q = 0;
    Factorization q_factors;
    u64 phi = 0;
    u64 bigE = 0;            // E(q)
    u64 bigS = 0;            // S(q), radical of E(q)
    u64 qc = 0;
    u64 qtilde = 0;
    Factorization e_factors; // factorization of bigE

    static Modulus make(u64 q);

    /// q is an odd prime power or twice one (the cyclic moduli besides 2, 4).
    bool admits_primitive_roots() const;
    /// The odd prime underlying a modulus with primitive roots.
    u64 odd_prime() const;
};

/// chi_1(n) for the nonprincipal quadratic character mod q; q must admit
/// primitive roots and not be 2 or 4. Returns 0 when gcd(n, q) > 1.
int quadratic_character(u64 n, const Modulus& m);

} // namespace lamroot

#pragma once

#include "lamroot/chargroup.hpp"
#include "lamroot/lambda.hpp"

#include <complex>
#include <vector>

namespace lamroot {

/// sum_{n <= N} chi(n) for subgroup character i.
std::complex<double> char_sum(const CharContext& ctx, std::size_t chi_index, u64 N);

struct BurgessRow {
    std::size_t chi_index;
    u64 chi_order;
    u64 N;
    double abs_sum;
    double envelope;      // N * (N^-1 * qc^(1/4+eta))^eta
    double ratio;         // abs_sum / envelope
    double classical;     // sqrt(q) * ln(q), Polya-Vinogradov-style ceiling
};

/// One row per nonprincipal subgroup character and grid point.
std::vector<BurgessRow> burgess_envelope_report(const CharContext& ctx, double eta,
                                                const std::vector<u64>& n_grid);

struct RemainderRecord {
    u64 q = 0;
    double x = 0;
    u64 d = 0;
    double direct_value = 0;   // sum_{n<x, d|n} gamma(n) - (c0 phi/q)(x/d)
    double char_value = 0;     // recomputed through the character double sum
    double main_term = 0;      // (c0 phi/q)(x/d)
    double bound_envelope = 0;
};

/// Both evaluation routes for R_d; zero by convention when gcd(d, q) > 1.
RemainderRecord remainder_Rd(const CharContext& ctx, double x, u64 d, double eps, double eta);

struct WeightedRemainder {
    double sum = 0;       // sum_{d<=y} mu^2(d) 3^omega(d) R_d
    double envelope = 0;  // (c0 phi/q) x^(1 - eta^2/2)
};
WeightedRemainder weighted_remainder_sum(const CharContext& ctx, double x, double y,
                                         double eps, double eta);

/// sum of 1/p over primes x^(1/3) < p < x^(2/3) with chi_1(p) = 1.
double H_sum(const Modulus& m, double x);

/// sum of log(p)/p over primes p < x with chi_1(p) = 1.
double heathbrown_sum(const Modulus& m, double x);

/// Pairs (p, n): x^(1/3) < p < x^(2/3), chi_1(p) = 1, n < x/p, every prime
/// factor of n exceeds z, and p*n is a lambda-root.
u64 T_relaxed(const Modulus& m, double x, double z);

/// Count of b <= x, coprime to p, that are p-th powers mod p^2.
u64 kruswijk_B(u64 p, double x);

/// Count of n < x with gamma(n) = 1 and least prime factor > z.
u64 sifted_count(const Modulus& m, double x, double z);

/// Paper defaults: eta just under 1/52, eps = eta^2.
inline constexpr double kDefaultEta = 1.0 / 52.0 - 1e-6;
inline constexpr double kDefaultEps = kDefaultEta * kDefaultEta;

} // namespace lamroot

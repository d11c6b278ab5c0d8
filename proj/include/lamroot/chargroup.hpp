#pragma once

#include "lamroot/arith.hpp"

#include <boost/rational.hpp>

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lamroot {

using Rational = boost::rational<long long>;

std::string fraction_string(const Rational& r);

/// e^{2*pi*i*num/den} as a reduced exact angle.
struct RootOfUnity {
    u64 num = 0;
    u64 den = 1;

    static RootOfUnity make(u64 num, u64 den);
    RootOfUnity operator*(const RootOfUnity& o) const;
    std::complex<double> render() const;
    bool operator==(const RootOfUnity&) const = default;
};

/// Direct-product decomposition of (Z/q)^x with a full discrete-log table.
struct UnitGroupBasis {
    u64 q = 0;
    std::vector<u64> generators;
    std::vector<u64> orders;    // component orders d_i, product = phi(q)
    u64 lcm_order = 1;          // = E(q)

    static constexpr std::uint32_t kNotCoprime = 0xFFFFFFFFu;
    std::vector<std::uint32_t> index;      // residue -> row, kNotCoprime otherwise
    std::vector<std::uint32_t> dlog_flat;  // phi(q) rows of ncomp() exponents

    static UnitGroupBasis build(const Modulus& m);

    std::size_t ncomp() const { return orders.size(); }
    bool coprime(u64 n) const { return index[n % q] != kNotCoprime; }
    const std::uint32_t* exponents_of(u64 n) const {
        return dlog_flat.data() + std::size_t(index[n % q]) * ncomp();
    }
};

/// A character mod q as an exponent vector against a UnitGroupBasis.
struct DirichletCharacter {
    std::vector<std::uint32_t> exps;  // k_i, 0 <= k_i < d_i
    u64 order = 1;                    // sigma(chi)

    bool is_principal() const { return order == 1; }
};

u64 character_order(const std::vector<std::uint32_t>& exps, const UnitGroupBasis& basis);

/// All phi(q) characters mod q, exponent vectors in lexicographic order.
std::vector<DirichletCharacter> all_characters(const UnitGroupBasis& basis);

/// The subgroup G = { chi^(E(q)/S(q)) } with its p-ranks and order census.
struct CharSubgroupG {
    std::vector<DirichletCharacter> chars;     // principal first (lex order)
    std::vector<std::pair<u64, int>> ranks;    // (p, m(p)) for each p | phi(q)
    std::map<u64, u64> order_census;           // order d -> count of chars
    u64 exponent = 1;                          // lcm of orders

    u64 size() const { return chars.size(); }
    bool contains(const std::vector<std::uint32_t>& exps) const;
    int rank_of(u64 p) const;
};

CharSubgroupG enumerate_G(const Modulus& m, const UnitGroupBasis& basis);

/// Component orders of the unit group decomposition, from the factorization
/// alone (no generators needed).
std::vector<u64> component_orders(const Modulus& m);

/// m(p) for each p | phi(q), via the structural route: the rank of the
/// p-torsion of the (E/S)-power image. enumerate_G counts torsion characters
/// instead; the two must agree.
std::vector<std::pair<u64, int>> subgroup_ranks_structural(const Modulus& m);

/// c_0 = prod_{p | phi(q)} (1 - p^-m(p)) without enumerating characters.
Rational c0_structural(const Modulus& m);

/// Exact c_chi: zero outside G, otherwise the signed product over p | phi(q).
Rational coefficient(const DirichletCharacter& chi, const Modulus& m, const CharSubgroupG& G);

/// Everything needed to evaluate characters and gamma for one modulus.
class CharContext {
public:
    explicit CharContext(u64 q);
    explicit CharContext(Modulus m);

    const Modulus& modulus() const { return mod_; }
    const UnitGroupBasis& basis() const { return basis_; }
    const CharSubgroupG& subgroup() const { return G_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational c0() const { return coeffs_[0]; }

    /// Exact value of subgroup character i at n; nullopt when gcd(n, q) > 1.
    std::optional<RootOfUnity> chi_exact(std::size_t i, u64 n) const;
    std::complex<double> chi_value(std::size_t i, u64 n) const;

    /// Evaluates sum_{chi in G} c_chi chi(n) and rounds to {0, 1}.
    /// Throws std::logic_error if the rendering is not within 1e-9 of {0, 1}.
    int gamma_by_characters(u64 n) const;

    /// (sum |c_chi|, 2^omega(phi(q)) * c0)
    std::pair<Rational, Rational> coefficient_sum_check() const;
    Rational coefficient_sum() const;

    struct PeriodicityViolation {
        std::size_t chi_index;
        u64 m, n;
    };
    struct PeriodicityReport {
        u64 pairs_checked = 0;
        std::vector<PeriodicityViolation> violations;
    };
    /// Samples congruent pairs mod qtilde and checks equal character values.
    PeriodicityReport induced_periodicity_check(int sample_size) const;

    // test hook: perturb one coefficient to exercise failure reporting
    void corrupt_coefficient_for_test(std::size_t i, Rational delta);

private:
    void finish();

    Modulus mod_;
    UnitGroupBasis basis_;
    CharSubgroupG G_;
    std::vector<Rational> coeffs_;
    std::vector<double> coeffs_dbl_;
    std::vector<std::complex<double>> roots_;  // e^{2 pi i j / E(q)}
};

} // namespace lamroot

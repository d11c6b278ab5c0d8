#include "lamroot/chargroup.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

namespace lamroot {

std::string fraction_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

RootOfUnity RootOfUnity::make(u64 num, u64 den) {
    if (den == 0) throw std::invalid_argument("RootOfUnity: zero denominator");
    num %= den;
    u64 g = std::gcd(num == 0 ? den : num, den);
    return {num / g, den / g};
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
    u64 d = std::lcm(den, o.den);
    u64 n = num * (d / den) + o.num * (d / o.den);
    return make(n % d, d);
}

std::complex<double> RootOfUnity::render() const {
    double t = 2.0 * std::numbers::pi * double(num) / double(den);
    return {std::cos(t), std::sin(t)};
}

namespace {

constexpr u64 kMaxTableModulus = u64(1) << 22;

u64 inv_mod(u64 a, u64 m) {
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(m), newr = static_cast<long long>(a % m);
    while (newr != 0) {
        long long quot = r / newr;
        t = std::exchange(newt, t - quot * newt);
        r = std::exchange(newr, r - quot * newr);
    }
    if (r != 1) throw std::invalid_argument("inv_mod: not invertible");
    return static_cast<u64>(t < 0 ? t + static_cast<long long>(m) : t);
}

u64 crt_pair(u64 a1, u64 m1, u64 a2, u64 m2) {
    // m1, m2 coprime; returns x mod m1*m2 with x = a1 (m1), x = a2 (m2)
    if (m2 == 1) return a1 % m1;
    u64 m = m1 * m2;
    u64 diff = (a2 % m2 + m2 - a1 % m2) % m2;
    u64 k = mulmod(diff, inv_mod(m1 % m2, m2), m2);
    return (a1 + m1 * k) % m;
}

u64 find_primitive_root(u64 p) {
    Factorization f = factorize(p - 1);
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (auto [r, e] : f.factors) {
            if (powmod(g, (p - 1) / r, p) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw std::logic_error("find_primitive_root: no generator found");
}

} // namespace

UnitGroupBasis UnitGroupBasis::build(const Modulus& m) {
    if (m.q < 3) throw std::invalid_argument("UnitGroupBasis: q must be >= 3");
    if (m.q > kMaxTableModulus)
        throw std::invalid_argument("UnitGroupBasis: modulus too large for a discrete-log table");

    UnitGroupBasis b;
    b.q = m.q;

    for (auto [p, e] : m.q_factors.factors) {
        u64 pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        u64 rest = m.q / pe;

        if (p == 2) {
            if (e == 1) continue;
            if (e == 2) {
                b.generators.push_back(crt_pair(3 % pe, pe, 1 % rest, rest));
                b.orders.push_back(2);
            } else {
                b.generators.push_back(crt_pair(pe - 1, pe, 1 % rest, rest));
                b.orders.push_back(2);
                b.generators.push_back(crt_pair(3, pe, 1 % rest, rest));
                b.orders.push_back(u64(1) << (e - 2));
            }
        } else {
            u64 g = find_primitive_root(p);
            if (e >= 2 && powmod(g, p - 1, p * p) == 1) g += p;
            u64 order = (p - 1) * (pe / p);
            b.generators.push_back(crt_pair(g % pe, pe, 1 % rest, rest));
            b.orders.push_back(order);
        }
    }

    b.lcm_order = 1;
    u64 prod = 1;
    for (u64 d : b.orders) {
        b.lcm_order = std::lcm(b.lcm_order, d);
        prod *= d;
    }
    if (prod != m.phi || b.lcm_order != m.bigE)
        throw std::logic_error("UnitGroupBasis: decomposition does not match phi/E");

    // Walk all exponent tuples; a component wrapping d_i -> 0 multiplies the
    // running residue by gen_i^{d_i} = 1, so the carry keeps it consistent.
    std::size_t k = b.ncomp();
    b.index.assign(m.q, kNotCoprime);
    b.dlog_flat.assign(std::size_t(m.phi) * k, 0);
    std::vector<std::uint32_t> exps(k, 0);
    u64 r = 1;
    for (u64 t = 0; t < m.phi; ++t) {
        if (b.index[r] != kNotCoprime)
            throw std::logic_error("UnitGroupBasis: residue hit twice, basis not independent");
        b.index[r] = static_cast<std::uint32_t>(t);
        std::copy(exps.begin(), exps.end(), b.dlog_flat.begin() + std::size_t(t) * k);
        for (std::size_t i = 0; i < k; ++i) {
            ++exps[i];
            r = mulmod(r, b.generators[i], m.q);
            if (exps[i] < b.orders[i]) break;
            exps[i] = 0;
        }
    }
    return b;
}

u64 character_order(const std::vector<std::uint32_t>& exps, const UnitGroupBasis& basis) {
    u64 ord = 1;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        u64 d = basis.orders[i];
        ord = std::lcm(ord, d / std::gcd<u64>(d, exps[i]));
    }
    return ord;
}

std::vector<DirichletCharacter> all_characters(const UnitGroupBasis& basis) {
    std::size_t k = basis.ncomp();
    u64 total = 1;
    for (u64 d : basis.orders) total *= d;

    std::vector<DirichletCharacter> out;
    out.reserve(total);
    std::vector<std::uint32_t> exps(k, 0);
    // lexicographic: vary the last component fastest
    for (u64 t = 0; t < total; ++t) {
        out.push_back({exps, character_order(exps, basis)});
        for (std::size_t i = k; i-- > 0;) {
            ++exps[i];
            if (exps[i] < basis.orders[i]) break;
            exps[i] = 0;
        }
    }
    return out;
}

bool CharSubgroupG::contains(const std::vector<std::uint32_t>& exps) const {
    auto it = std::lower_bound(chars.begin(), chars.end(), exps,
                               [](const DirichletCharacter& c, const std::vector<std::uint32_t>& e) {
                                   return c.exps < e;
                               });
    return it != chars.end() && it->exps == exps;
}

int CharSubgroupG::rank_of(u64 p) const {
    for (auto [prime, m] : ranks)
        if (prime == p) return m;
    return 0;
}

CharSubgroupG enumerate_G(const Modulus& m, const UnitGroupBasis& basis) {
    CharSubgroupG G;
    u64 power = m.bigE / m.bigS;

    std::set<std::vector<std::uint32_t>> seen;
    std::size_t k = basis.ncomp();
    std::vector<std::uint32_t> exps(k, 0), mapped(k, 0);
    for (u64 t = 0; t < m.phi; ++t) {
        for (std::size_t i = 0; i < k; ++i)
            mapped[i] = static_cast<std::uint32_t>((u64(exps[i]) * power) % basis.orders[i]);
        seen.insert(mapped);
        for (std::size_t i = k; i-- > 0;) {
            ++exps[i];
            if (exps[i] < basis.orders[i]) break;
            exps[i] = 0;
        }
    }

    G.chars.reserve(seen.size());
    for (const auto& e : seen) {
        DirichletCharacter chi{e, character_order(e, basis)};
        G.exponent = std::lcm(G.exponent, chi.order);
        ++G.order_census[chi.order];
        G.chars.push_back(std::move(chi));
    }

    // m(p) from the p-torsion count, which must be an exact power of p
    for (u64 p : factorize(m.phi).prime_support()) {
        u64 count = 0;
        for (const auto& chi : G.chars) {
            bool torsion = true;
            for (std::size_t i = 0; i < k; ++i)
                if ((u64(chi.exps[i]) * p) % basis.orders[i] != 0) { torsion = false; break; }
            if (torsion) ++count;
        }
        int mp = 0;
        u64 pm = 1;
        while (pm < count) { pm *= p; ++mp; }
        if (pm != count)
            throw std::logic_error("enumerate_G: p-torsion count is not a power of p");
        G.ranks.emplace_back(p, mp);
    }
    return G;
}

std::vector<u64> component_orders(const Modulus& m) {
    std::vector<u64> orders;
    for (auto [p, e] : m.q_factors.factors) {
        if (p == 2) {
            if (e == 1) continue;
            if (e == 2) {
                orders.push_back(2);
            } else {
                orders.push_back(2);
                orders.push_back(u64(1) << (e - 2));
            }
        } else {
            u64 pe = 1;
            for (int i = 1; i < e; ++i) pe *= p;
            orders.push_back((p - 1) * pe);
        }
    }
    return orders;
}

std::vector<std::pair<u64, int>> subgroup_ranks_structural(const Modulus& m) {
    u64 power = m.bigE / m.bigS;
    std::vector<u64> image_orders;
    for (u64 d : component_orders(m))
        image_orders.push_back(d / std::gcd(d, power));
    std::vector<std::pair<u64, int>> ranks;
    for (u64 p : factorize(m.phi).prime_support()) {
        int mp = 0;
        for (u64 s : image_orders)
            if (s % p == 0) ++mp;
        ranks.emplace_back(p, mp);
    }
    return ranks;
}

Rational c0_structural(const Modulus& m) {
    Rational c(1);
    for (auto [p, mp] : subgroup_ranks_structural(m)) {
        long long pm = 1;
        for (int i = 0; i < mp; ++i) pm *= static_cast<long long>(p);
        c *= Rational(pm - 1, pm);
    }
    return c;
}

Rational coefficient(const DirichletCharacter& chi, const Modulus& m, const CharSubgroupG& G) {
    (void)m;
    if (!G.contains(chi.exps)) return Rational(0);
    Rational c(1);
    for (auto [p, mp] : G.ranks) {
        long long pm = 1;
        for (int i = 0; i < mp; ++i) pm *= static_cast<long long>(p);
        if (chi.order % p == 0)
            c *= Rational(-1, pm);
        else
            c *= Rational(pm - 1, pm);
    }
    return c;
}

CharContext::CharContext(u64 q) : CharContext(Modulus::make(q)) {}

CharContext::CharContext(Modulus m)
    : mod_(std::move(m)), basis_(UnitGroupBasis::build(mod_)), G_(enumerate_G(mod_, basis_)) {
    finish();
}

void CharContext::finish() {
    coeffs_.reserve(G_.size());
    for (const auto& chi : G_.chars)
        coeffs_.push_back(coefficient(chi, mod_, G_));
    coeffs_dbl_.reserve(G_.size());
    for (const auto& c : coeffs_)
        coeffs_dbl_.push_back(boost::rational_cast<double>(c));
    roots_.resize(mod_.bigE);
    for (u64 j = 0; j < mod_.bigE; ++j)
        roots_[j] = RootOfUnity::make(j, mod_.bigE).render();
}

std::optional<RootOfUnity> CharContext::chi_exact(std::size_t i, u64 n) const {
    if (!basis_.coprime(n)) return std::nullopt;
    const std::uint32_t* a = basis_.exponents_of(n);
    const auto& chi = G_.chars[i];
    u64 L = mod_.bigE;
    u64 j = 0;
    for (std::size_t c = 0; c < basis_.ncomp(); ++c)
        j = (j + (u64(chi.exps[c]) * a[c]) % L * ((L / basis_.orders[c]) % L)) % L;
    return RootOfUnity::make(j, L);
}

std::complex<double> CharContext::chi_value(std::size_t i, u64 n) const {
    auto angle = chi_exact(i, n);
    if (!angle) return {0.0, 0.0};
    return roots_[angle->num * (mod_.bigE / angle->den)];
}

int CharContext::gamma_by_characters(u64 n) const {
    if (!basis_.coprime(n)) return 0;
    const std::uint32_t* a = basis_.exponents_of(n);
    u64 L = mod_.bigE;
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < G_.chars.size(); ++i) {
        const auto& chi = G_.chars[i];
        u64 j = 0;
        for (std::size_t c = 0; c < basis_.ncomp(); ++c)
            j = (j + (u64(chi.exps[c]) * a[c]) % L * ((L / basis_.orders[c]) % L)) % L;
        acc += coeffs_dbl_[i] * roots_[j];
    }
    if (std::abs(acc.imag()) > 1e-9)
        throw std::logic_error("gamma_by_characters: imaginary part exceeds tolerance");
    double re = acc.real();
    if (std::abs(re) < 1e-9) return 0;
    if (std::abs(re - 1.0) < 1e-9) return 1;
    throw std::logic_error("gamma_by_characters: value not within tolerance of {0,1}");
}

std::pair<Rational, Rational> CharContext::coefficient_sum_check() const {
    Rational sum(0);
    for (const auto& c : coeffs_)
        sum += c >= Rational(0) ? c : -c;
    int omega_phi = factorize(mod_.phi).omega();
    Rational target = coeffs_[0] * Rational(1LL << omega_phi, 1);
    return {sum, target};
}

Rational CharContext::coefficient_sum() const {
    Rational sum(0);
    for (const auto& c : coeffs_) sum += c;
    return sum;
}

CharContext::PeriodicityReport CharContext::induced_periodicity_check(int sample_size) const {
    PeriodicityReport report;
    std::mt19937_64 rng(0x1a2b3c4dULL ^ mod_.q);
    std::uniform_int_distribution<u64> pick_m(1, 8 * mod_.qtilde);
    std::uniform_int_distribution<u64> pick_t(1, 6);
    for (std::size_t i = 0; i < G_.chars.size(); ++i) {
        for (int s = 0; s < sample_size; ++s) {
            u64 a = pick_m(rng);
            if (std::gcd(a % mod_.q, mod_.q) != 1) { --s; continue; }
            u64 b = a + pick_t(rng) * mod_.qtilde;
            ++report.pairs_checked;
            if (chi_exact(i, a % mod_.q) != chi_exact(i, b % mod_.q))
                report.violations.push_back({i, a, b});
        }
    }
    return report;
}

void CharContext::corrupt_coefficient_for_test(std::size_t i, Rational delta) {
    coeffs_[i] += delta;
    coeffs_dbl_[i] = boost::rational_cast<double>(coeffs_[i]);
}

} // namespace lamroot

#include "lamroot/chargroup.hpp"
#include "lamroot/lambda.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace lamroot;

TEST_CASE("RootOfUnity") {
    auto r = RootOfUnity::make(3, 12);
    CHECK(r.num == 1);
    CHECK(r.den == 4);
    auto s = r * r;  // 1/4 + 1/4 = 1/2
    CHECK(s == RootOfUnity::make(1, 2));
    CHECK((r * RootOfUnity::make(3, 4)) == RootOfUnity::make(0, 1));
    for (u64 d = 1; d <= 20; ++d)
        for (u64 n = 0; n < d; ++n)
            CHECK(std::abs(std::abs(RootOfUnity::make(n, d).render()) - 1.0) < 1e-12);
}

TEST_CASE("unit group basis") {
    auto check_basis = [](u64 q, std::vector<u64> expected_orders) {
        Modulus m = Modulus::make(q);
        auto b = UnitGroupBasis::build(m);
        auto got = b.orders;
        std::sort(got.begin(), got.end());
        std::sort(expected_orders.begin(), expected_orders.end());
        CHECK(got == expected_orders);
        u64 prod = 1, l = 1;
        for (u64 d : b.orders) { prod *= d; l = std::lcm(l, d); }
        CHECK(prod == m.phi);
        CHECK(l == m.bigE);
        for (std::size_t i = 0; i < b.generators.size(); ++i)
            CHECK(mult_order(b.generators[i], q) == b.orders[i]);
    };
    check_basis(7, {6});
    check_basis(8, {2, 2});
    check_basis(15, {2, 4});
    check_basis(16, {2, 4});
    check_basis(54, {18});

    // discrete log is a homomorphism on sampled pairs
    std::mt19937_64 rng(11);
    for (u64 q : {35ull, 40ull, 101ull, 120ull}) {
        Modulus m = Modulus::make(q);
        auto b = UnitGroupBasis::build(m);
        for (int t = 0; t < 200; ++t) {
            u64 a = rng() % q, c = rng() % q;
            if (!b.coprime(a) || !b.coprime(c)) continue;
            const auto* ea = b.exponents_of(a);
            const auto* ec = b.exponents_of(c);
            const auto* ep = b.exponents_of(a * c % q);
            for (std::size_t i = 0; i < b.ncomp(); ++i)
                CHECK((u64(ea[i]) + ec[i]) % b.orders[i] == ep[i]);
        }
    }
}

TEST_CASE("enumerate_G sizes and ranks") {
    {
        CharContext ctx(7);
        CHECK(ctx.subgroup().size() == 6);
        CHECK(ctx.subgroup().rank_of(2) == 1);
        CHECK(ctx.subgroup().rank_of(3) == 1);
    }
    {
        CharContext ctx(8);
        CHECK(ctx.subgroup().size() == 4);
        CHECK(ctx.subgroup().rank_of(2) == 2);
    }
    {
        CharContext ctx(16);
        CHECK(ctx.subgroup().size() == 2);
        CHECK(ctx.subgroup().rank_of(2) == 1);
    }
}

TEST_CASE("coefficients") {
    {
        CharContext ctx(7);
        CHECK(ctx.c0() == Rational(1, 3));
        for (std::size_t i = 0; i < ctx.subgroup().size(); ++i)
            if (ctx.subgroup().chars[i].order == 2)
                CHECK(ctx.coefficients()[i] == Rational(-1, 3));
    }
    {
        CharContext ctx(8);
        for (std::size_t i = 0; i < ctx.subgroup().size(); ++i)
            if (!ctx.subgroup().chars[i].is_principal())
                CHECK(ctx.coefficients()[i] == Rational(-1, 4));
    }
    // zero outside G: q=16 has phi=8 characters but |G|=2
    {
        CharContext ctx(16);
        auto all = all_characters(ctx.basis());
        CHECK(all.size() == 8);
        int zeros = 0;
        for (const auto& chi : all)
            if (coefficient(chi, ctx.modulus(), ctx.subgroup()) == Rational(0)) ++zeros;
        CHECK(zeros == 6);
    }
}

TEST_CASE("coefficient sum identities") {
    auto check = [](u64 q, Rational expected) {
        CharContext ctx(q);
        auto [sum, target] = ctx.coefficient_sum_check();
        CHECK(sum == expected);
        CHECK(target == expected);
        CHECK(ctx.coefficient_sum() == Rational(0));
    };
    check(7, Rational(4, 3));
    check(8, Rational(3, 2));
    check(16, Rational(1));
}

TEST_CASE("gamma_by_characters") {
    CharContext c7(7);
    CHECK(c7.gamma_by_characters(3) == 1);
    CHECK(c7.gamma_by_characters(1) == 0);
    CHECK(c7.gamma_by_characters(14) == 0);  // gcd > 1
    CharContext c8(8);
    CHECK(c8.gamma_by_characters(5) == 1);

    // decomposition identity on a small range (the acceptance suite covers 500)
    for (u64 q = 3; q <= 60; ++q) {
        CharContext ctx(q);
        Modulus m = Modulus::make(q);
        for (u64 n = 0; n < q; ++n)
            CHECK(ctx.gamma_by_characters(n) == gamma_direct(n, m));
    }
}

TEST_CASE("corrupted coefficient is detected") {
    CharContext ctx(7);
    ctx.corrupt_coefficient_for_test(0, Rational(1, 5));
    CHECK_THROWS_AS(ctx.gamma_by_characters(3), std::logic_error);
}

TEST_CASE("induced periodicity") {
    CharContext c7(7);
    CHECK(c7.modulus().qtilde == 56);
    for (std::size_t i = 0; i < c7.subgroup().size(); ++i)
        CHECK(c7.chi_exact(i, 3 % 7) == c7.chi_exact(i, 59 % 7));
    CharContext c16(16);
    for (std::size_t i = 0; i < c16.subgroup().size(); ++i)
        CHECK(c16.chi_exact(i, 3) == c16.chi_exact(i, (3 + c16.modulus().qtilde) % 16));
    for (u64 q : {7ull, 16ull, 54ull, 100ull}) {
        auto report = CharContext(q).induced_periodicity_check(50);
        CHECK(report.violations.empty());
        CHECK(report.pairs_checked > 0);
    }
}

TEST_CASE("structural c0 agrees with the census route") {
    for (u64 q = 3; q <= 300; ++q) {
        CharContext ctx(q);
        CHECK(c0_structural(ctx.modulus()) == ctx.c0());
        CHECK(subgroup_ranks_structural(ctx.modulus()) == ctx.subgroup().ranks);
    }
}

TEST_CASE("character multiplicativity sampled") {
    std::mt19937_64 rng(3);
    for (u64 q : {21ull, 32ull, 45ull}) {
        CharContext ctx(q);
        for (std::size_t i = 0; i < ctx.subgroup().size(); ++i) {
            for (int t = 0; t < 50; ++t) {
                u64 a = rng() % q, b = rng() % q;
                auto va = ctx.chi_exact(i, a);
                auto vb = ctx.chi_exact(i, b);
                auto vab = ctx.chi_exact(i, a * b % q);
                if (va && vb) {
                    REQUIRE(vab);
                    CHECK(*vab == *va * *vb);
                } else {
                    CHECK(!vab);
                }
            }
        }
    }
}

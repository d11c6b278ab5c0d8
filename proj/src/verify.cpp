#include "lamroot/verify.hpp"

#include "lamroot/chargroup.hpp"
#include "lamroot/lambda.hpp"

#include <numeric>
#include <sstream>

namespace lamroot {

namespace {

void fail(VerifyResult& res, u64 q, const std::string& identity, const std::string& witness) {
    if (!res.ok) return;
    res.ok = false;
    std::ostringstream os;
    os << "(q=" << q << ", " << identity << ", " << witness << ")";
    res.first_failure = os.str();
}

} // namespace

VerifyResult run_verify(const VerifyOptions& opts) {
    VerifyResult res;
    auto& pc = res.pass_counts;
    pc["decomposition"] = 0;
    pc["count"] = 0;
    pc["coefficient_sum"] = 0;
    pc["order_census"] = 0;
    pc["cyclic_specialization"] = 0;
    pc["structural_ranks"] = 0;
    pc["induced_periodicity"] = 0;

    for (u64 q = 3; q <= opts.qmax && res.ok; ++q) {
        Modulus m = Modulus::make(q);
        CharContext ctx(m);
        if (opts.inject_fault && q == 3)
            ctx.corrupt_coefficient_for_test(0, Rational(1, 7));
        const auto& G = ctx.subgroup();

        // decomposition: character route vs direct order test
        if (q <= opts.decomposition_qmax) {
            bool ok = true;
            for (u64 n = 0; n < q; ++n) {
                int by_chars;
                try {
                    by_chars = ctx.gamma_by_characters(n);
                } catch (const std::logic_error& e) {
                    fail(res, q, "decomposition", std::string("n=") + std::to_string(n) + " " + e.what());
                    ok = false;
                    break;
                }
                if (by_chars != gamma_direct(n, m)) {
                    fail(res, q, "decomposition", "n=" + std::to_string(n));
                    ok = false;
                    break;
                }
            }
            if (ok) ++pc["decomposition"];
        }

        // count: #{n <= q : gamma(n)=1} = c0 phi(q), exact
        {
            u64 count = 0;
            for (u64 n = 1; n <= q; ++n) count += gamma_direct(n, m);
            if (Rational(static_cast<long long>(count)) !=
                ctx.c0() * Rational(static_cast<long long>(m.phi)))
                fail(res, q, "count", "count=" + std::to_string(count) + " c0=" + fraction_string(ctx.c0()));
            else
                ++pc["count"];
        }

        // coefficient sums: sum |c| = 2^omega(phi) c0, sum c = 0
        {
            auto [sum_abs, target] = ctx.coefficient_sum_check();
            if (sum_abs != target)
                fail(res, q, "coefficient_sum_abs", fraction_string(sum_abs) + " != " + fraction_string(target));
            else if (ctx.coefficient_sum() != Rational(0))
                fail(res, q, "coefficient_sum_zero", fraction_string(ctx.coefficient_sum()));
            else
                ++pc["coefficient_sum"];
        }

        // order census, exponent of G, |G| = prod p^m(p)
        {
            bool ok = G.exponent == m.bigS;
            u64 expected_size = 1;
            for (auto [p, mp] : G.ranks)
                for (int i = 0; i < mp; ++i) expected_size *= p;
            ok = ok && expected_size == G.size();
            if (ok) {
                for (const auto& [d, count] : G.order_census) {
                    u64 expected = 1;
                    for (auto [p, mp] : G.ranks) {
                        if (d % p != 0) continue;
                        u64 pm = 1;
                        for (int i = 0; i < mp; ++i) pm *= p;
                        expected *= pm - 1;
                    }
                    if (count != expected) { ok = false; break; }
                }
                // every divisor of S must appear
                u64 divisors = 0;
                for (u64 d = 1; d <= m.bigS; ++d)
                    if (m.bigS % d == 0) ++divisors;
                ok = ok && G.order_census.size() == divisors;
            }
            if (ok)
                ++pc["order_census"];
            else
                fail(res, q, "order_census", "exponent=" + std::to_string(G.exponent));
        }

        // cyclic case: c_chi = (phi(phi)/phi) mu(sigma)/phi(sigma)
        if (m.bigE == m.phi) {
            Factorization phif = factorize(m.phi);
            Rational lead(static_cast<long long>(phif.euler_phi()),
                          static_cast<long long>(m.phi));
            bool ok = true;
            for (std::size_t i = 0; i < G.size(); ++i) {
                Factorization sf = factorize(G.chars[i].order);
                Rational expected = lead * Rational(sf.mobius(),
                                                    static_cast<long long>(sf.euler_phi()));
                if (ctx.coefficients()[i] != expected) {
                    fail(res, q, "cyclic_specialization", "sigma=" + std::to_string(G.chars[i].order));
                    ok = false;
                    break;
                }
            }
            if (ok) ++pc["cyclic_specialization"];
        }

        // census-route ranks vs structural ranks, c0 both routes
        {
            bool ok = subgroup_ranks_structural(m) == G.ranks &&
                      c0_structural(m) == ctx.c0();
            if (ok)
                ++pc["structural_ranks"];
            else
                fail(res, q, "structural_ranks", "rank routes disagree");
        }

        if (q <= opts.periodicity_qmax) {
            auto report = ctx.induced_periodicity_check(opts.periodicity_samples);
            if (report.violations.empty())
                ++pc["induced_periodicity"];
            else
                fail(res, q, "induced_periodicity",
                     "m=" + std::to_string(report.violations[0].m) +
                     " n=" + std::to_string(report.violations[0].n));
        }
    }
    return res;
}

} // namespace lamroot

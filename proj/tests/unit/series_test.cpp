#include <gtest/gtest.h>

#include "dilog/rogers/dilog.hpp"
#include "dilog/series/accelerate.hpp"
#include "dilog/series/catalog.hpp"
#include "dilog/series/lucas_series.hpp"
#include "dilog/series/pell.hpp"
#include "dilog/series/tail.hpp"
#include "dilog/series/theorem.hpp"
#include "dilog/series/two_param.hpp"
#include "support.hpp"

namespace dilog {
namespace {

using test::oracle;

VerifyOptions at(int digits) {
    VerifyOptions o;
    o.digits = digits;
    return o;
}

bool encloses_true_lhs(const IdentityReport& r, const Ball& value) {
    return r.lhs.widened(r.tail_bound).overlaps(value);
}

TEST(TailBound, DominatesBruteForce) {
    const BigFloat bound = tail_bound(Rational(1, 4), Rational(1, 2));
    EXPECT_GE(bound, test::oracle(oracle::kBruteTailQuarterHalf).upper());
    EXPECT_LT(bound, BigFloat::parse("1.9", 64));
    EXPECT_TRUE(tail_bound(Rational(0), Rational(1, 2)).is_zero());
}

TEST(TailBound, RejectsOutOfRangeArguments) {
    EXPECT_THROW(tail_bound(Rational(3, 4), Rational(1, 2)), std::invalid_argument);
    EXPECT_THROW(tail_bound(Rational(1, 4), Rational(1)), std::invalid_argument);
}

TEST(TwoParam, RecurrenceIdentities) {
    const TwoParamInstance inst(Rational(2, 7), Rational(5, 9));
    for (std::uint64_t n = 1; n <= 40; ++n) {
        EXPECT_TRUE(cassini_check(inst, n));
        EXPECT_TRUE(shift_check(inst, n));
        EXPECT_TRUE(recurrence_check(inst, n));
        EXPECT_TRUE(summand_check(inst, n));
    }
    EXPECT_TRUE(limit_check(inst, 200));
    EXPECT_EQ(xy_seq(inst, 0), std::make_pair(Rational(2, 7), Rational(5, 9)));
    EXPECT_EQ(inst.decay_ratio(), Rational(4, 9) / Rational(5, 7));
}

TEST(TwoParam, InvalidPairs) {
    EXPECT_THROW(TwoParamInstance(Rational(1, 2), Rational(1, 2)), std::invalid_argument);
    EXPECT_THROW(TwoParamInstance(Rational(0), Rational(1, 2)), std::invalid_argument);
    EXPECT_THROW(TwoParamInstance(Rational(1, 2), Rational(1)), std::invalid_argument);
}

TEST(Theorem, ReferencePair) {
    const IdentityReport r = theorem_main_verify(TwoParamInstance(Rational(1, 2), Rational(1, 3)), at(40));
    EXPECT_EQ(r.verdict, Verdict::pass);
    EXPECT_TRUE(r.rhs.overlaps(oracle(oracle::kTheoremHalfThird)));
    EXPECT_TRUE(encloses_true_lhs(r, oracle(oracle::kTheoremHalfThird)));
    EXPECT_LE(r.terms_used, 500U);
}

TEST(Theorem, ClosedFormPair) {
    const IdentityReport r = theorem_main_verify(TwoParamInstance(Rational(2, 3), Rational(1, 3)), at(40));
    EXPECT_EQ(r.verdict, Verdict::pass);
    EXPECT_TRUE(r.rhs.overlaps(oracle(oracle::kPiSq12)));
    EXPECT_TRUE(encloses_true_lhs(r, oracle(oracle::kPiSq12)));
}

TEST(Theorem, SlowPairUsesAnalyticTail) {
    const IdentityReport r = theorem_main_verify(TwoParamInstance(Rational(1, 49), Rational(1, 50)), at(40));
    EXPECT_EQ(r.verdict, Verdict::pass);
    EXPECT_EQ(r.parameters.at("tail_method"), "analytic");
    EXPECT_LE(r.terms_used, 500U);
}

TEST(Theorem, AnalyticTailMatchesExplicitSum) {
    // Terms 300.. of (1/2, 1/3) summed explicitly against the accelerated tail.
    const TwoParamInstance inst(Rational(1, 2), Rational(1, 3));
    const PrecisionBudget b = test::digits(30);
    Ball explicit_sum(b.working_bits);
    for (std::uint64_t n = 300; n < 400; ++n) explicit_sum += rogers_l(theorem_main_term(inst, n), b);
    const auto tail = two_param_analytic_tail(inst.a(), inst.b(), 300, b.tolerance(), b.working_bits);
    ASSERT_TRUE(tail);
    EXPECT_TRUE(tail->value.widened(tail->remainder).overlaps(explicit_sum.widened(BigFloat::parse("1e-45", 64))));
}

TEST(Theorem, TermCapFallsBackToAnalyticTail) {
    VerifyOptions o = at(40);
    o.max_terms = 5;
    const IdentityReport r = theorem_main_verify(TwoParamInstance(Rational(1, 2), Rational(1, 3)), o);
    EXPECT_EQ(r.verdict, Verdict::pass);
    EXPECT_EQ(r.terms_used, 5U);
    EXPECT_EQ(r.parameters.at("tail_method"), "analytic");
}

TEST(LucasSeries, TruncationFailureGivesFailVerdict) {
    VerifyOptions o = at(40);
    o.max_terms = 5;
    const IdentityReport r = lucas_pos_verify(LucasParams::rational(3, 1), 1, o);
    EXPECT_EQ(r.verdict, Verdict::fail);
    EXPECT_TRUE(r.parameters.count("failure"));
}

TEST(Corollary, SimplifiedSummand) {
    const Rational t(3, 5);
    for (std::uint64_t n = 1; n <= 20; ++n) EXPECT_EQ(corollary_term(t, n), corollary_simplified_term(t, n));
    const IdentityReport r = corollary_verify(Rational(1, 3), at(40));
    EXPECT_EQ(r.verdict, Verdict::pass);
    EXPECT_EQ(r.parameters.at("term_agreement"), "true");
    EXPECT_TRUE(r.rhs.overlaps(oracle(oracle::kPiSq12)));
}

TEST(LucasSeries, PositiveBranch) {
    const LucasParams fib_even = LucasParams::rational(3, 1);
    const char* expected[] = {oracle::kLPhiMinus4, oracle::kLPhiMinus8, oracle::kLPhiMinus12};
    for (std::uint64_t k = 1; k <= 3; ++k) {
        const IdentityReport r = lucas_pos_verify(fib_even, k, at(40));
        EXPECT_EQ(r.verdict, Verdict::pass) << k;
        EXPECT_TRUE(r.rhs.overlaps(oracle(expected[k - 1]))) << k;
    }
    const IdentityReport pell = lucas_pos_verify(LucasParams::rational(6, 1), 1, at(40));
    EXPECT_TRUE(pell.rhs.overlaps(oracle(oracle::kL17Minus12Sqrt2)));
    EXPECT_THROW(lucas_pos_verify(LucasParams::rational(1, -1), 1, at(40)), std::invalid_argument);
}

TEST(LucasSeries, NegativeBranch) {
    const IdentityReport r = lucas_neg_verify(LucasParams::rational(1, -1), 1, at(40));
    EXPECT_EQ(r.verdict, Verdict::pass);
    EXPECT_TRUE(encloses_true_lhs(r, oracle(oracle::kPiSq15)));
    EXPECT_LE(r.terms_used, 200U);
    const IdentityReport q3 = lucas_neg_verify(LucasParams::rational(1, -3), 1, at(40));
    EXPECT_EQ(q3.verdict, Verdict::pass);
    EXPECT_TRUE(q3.rhs.overlaps(oracle(oracle::kLSixOver7PlusSqrt13)));
    EXPECT_THROW(lucas_neg_verify(LucasParams::rational(1, -1), 2, at(40)), std::invalid_argument);
    EXPECT_THROW(lucas_neg_verify(LucasParams::rational(3, 1), 1, at(40)), std::invalid_argument);
}

TEST(LucasSeries, TransformationSplit) {
    for (const auto& [P, Q] : std::vector<std::pair<long, long>>{{1, -1}, {2, -1}, {1, -3}}) {
        EXPECT_TRUE(neg_from_pos_split_check(LucasParams::rational(P, Q), 1, 30));
        EXPECT_TRUE(neg_from_pos_split_check(LucasParams::rational(P, Q), 3, 10));
        EXPECT_TRUE(even_k_companion_check(LucasParams::rational(P, Q), 2, 10));
    }
}

TEST(LucasSeries, SummandsStayInUnitInterval) {
    const LucasParams p = LucasParams::rational(2, -1);
    for (std::uint64_t n = 1; n <= 30; ++n) {
        for (const QuadraticElement& t :
             {lucas_pos_term(LucasParams::rational(6, 1), 1, n), lucas_neg_first_term(p, 1, n),
              lucas_neg_second_term(p, 1, n)}) {
            EXPECT_GT(t.sign(), 0);
            EXPECT_LT(t, QuadraticElement::embed(1, t.radicand()));
        }
    }
}

TEST(Pell, SolutionsAndMap) {
    const PellSolution u(3, 2, Integer(2));
    EXPECT_EQ(u.sign(), 1);
    EXPECT_EQ(u.power(2), std::make_pair(Rational(17), Rational(12)));
    const PellLucasMap m = pell_to_lucas(u);
    EXPECT_EQ(m.params.P(), Rational(6));
    EXPECT_EQ(m.params.Q(), Rational(1));
    for (std::uint64_t k = 1; k <= 20; ++k) EXPECT_TRUE(pell_power_check(u, k));
    EXPECT_EQ(PellSolution(1, 1, Integer(2)).sign(), -1);
    EXPECT_THROW(PellSolution(2, 1, Integer(4)), std::invalid_argument);
    EXPECT_THROW(PellSolution(2, 1, Integer(2)), std::invalid_argument);
}

TEST(Pell, BridgemanForms) {
    for (const auto& [a, b, n] : std::vector<std::array<long, 3>>{{3, 2, 2}, {1, 1, 2}, {2, 1, 5}}) {
        const IdentityReport r = bridgeman_verify(PellSolution(a, b, Integer(n)), at(40));
        EXPECT_EQ(r.verdict, Verdict::pass) << a << ' ' << b << ' ' << n;
        EXPECT_EQ(r.parameters.at("term_agreement"), "true");
        EXPECT_EQ(r.parameters.at("divisibility"), "true");
    }
    const IdentityReport r = bridgeman_verify(PellSolution(3, 2, Integer(2)), at(40));
    EXPECT_TRUE(r.rhs.overlaps(oracle(oracle::kL17Minus12Sqrt2)));
}

TEST(Catalog, EveryEntryPassesAtDefaults) {
    for (const std::string& name : catalog_names()) {
        if (name == "richmond-szekeres") continue;
        const IdentityReport r = catalog_verify(name, {}, at(30));
        EXPECT_EQ(r.verdict, Verdict::pass) << name;
        EXPECT_EQ(r.parameters.at("closed_form_agreement"), "true") << name;
    }
}

TEST(Catalog, SinhThetaClosedForm) {
    const IdentityReport r = catalog_verify("sinh-theta", {}, at(40));
    EXPECT_TRUE(r.rhs.overlaps(oracle(oracle::kLExpMinus2)));
}

TEST(Catalog, ArgumentValidation) {
    CatalogArgs even;
    even.k = 2;
    EXPECT_THROW(catalog_verify("fib-lucas-neg", even, at(20)), std::invalid_argument);
    CatalogArgs small_x;
    small_x.x = Rational(1);
    EXPECT_THROW(catalog_verify("repunit-x", small_x, at(20)), std::invalid_argument);
    EXPECT_THROW(catalog_verify("nope", {}, at(20)), UnknownIdentity);
}

TEST(Catalog, RichmondSzekeresSmallN) {
    const IdentityReport r = richmond_szekeres_verify(2000, at(20));
    EXPECT_EQ(r.parameters.at("bracketed"), "true");
    EXPECT_GT(richmond_szekeres_tail(2000), richmond_szekeres_tail(4000));
}

}  // namespace
}  // namespace dilog

#include <gtest/gtest.h>

#include <random>

#include "rowconvex/enumerate.hpp"
#include "rowconvex/genfunc.hpp"

using namespace rowconvex;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

IntPolynomial random_poly(std::mt19937& rng, int max_deg) {
    std::vector<BigInt> c(static_cast<std::size_t>(rng() % (max_deg + 1)) + 1);
    for (auto& v : c) v = static_cast<long long>(rng() % 21) - 10;
    return IntPolynomial(c);
}

}  // namespace

TEST(IntPolynomial, CanonicalForm) {
    EXPECT_TRUE(IntPolynomial({0, 0, 0}).is_zero());
    EXPECT_EQ(IntPolynomial({0, 0, 0}).degree(), -1);
    EXPECT_EQ(IntPolynomial({1, 2, 0, 0}).coefficients().size(), 2U);
    EXPECT_EQ(IntPolynomial({1, -1}) - IntPolynomial({1, -1}), IntPolynomial{});
}

TEST(IntPolynomial, Examples) {
    const IntPolynomial one_minus_x{1, -1};
    EXPECT_EQ(poly_mul(one_minus_x, one_minus_x), IntPolynomial({1, -2, 1}));
    const IntPolynomial p{3, 0, -2, 5};
    EXPECT_EQ(poly_add(p, IntPolynomial{}), p);
    EXPECT_EQ(IntPolynomial({0, 1}) * one_minus_x * one_minus_x * one_minus_x, IntPolynomial({0, 1, -3, 3, -1}));
    EXPECT_EQ(poly_scale(p, -2), IntPolynomial({-6, 0, 4, -10}));
    EXPECT_EQ(p.to_string(), "3 - 2x^2 + 5x^3");
}

TEST(IntPolynomial, RingLawsOnRandomOperands) {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_poly(rng, 6), b = random_poly(rng, 6), c = random_poly(rng, 6);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) - b, a);
    }
}

TEST(IntPolynomial, CollectedDenominatorIdentity) {
    EXPECT_EQ(collected_denominator(), IntPolynomial({1, -5, 7, -4}));
    EXPECT_EQ(collected_denominator(), row_convex_gf().denominator);
}

TEST(RowConvexGf, Shape) {
    const auto gf = row_convex_gf();
    EXPECT_EQ(gf.numerator.coefficients(), ints({0, 1, -3, 3, -1}));
    EXPECT_EQ(gf.denominator.coefficients(), ints({1, -5, 7, -4}));
}

TEST(SeriesExpand, Examples) {
    EXPECT_EQ(series_expand(row_convex_gf(), 12).coefficients(),
              ints({0, 1, 2, 6, 19, 61, 196, 629, 2017, 6466, 20727, 66441, 212980}));
    EXPECT_EQ(series_expand({IntPolynomial{1}, IntPolynomial{1, -1}}, 3).coefficients(), ints({1, 1, 1, 1}));
    EXPECT_EQ(series_expand({IntPolynomial{1}, IntPolynomial{1, -2}}, 4).coefficients(), ints({1, 2, 4, 8, 16}));
}

TEST(SeriesExpand, Errors) {
    EXPECT_THROW(series_expand({IntPolynomial{1}, IntPolynomial{0, 1}}, 3), std::invalid_argument);
    EXPECT_THROW(series_expand({IntPolynomial{1}, IntPolynomial{2, 1}}, 3), std::invalid_argument);
}

TEST(SeriesExpand, RoundTripThroughDenominator) {
    std::mt19937 rng(3);
    for (int i = 0; i < 60; ++i) {
        RationalGF gf{random_poly(rng, 5), random_poly(rng, 4)};
        std::vector<BigInt> d = gf.denominator.coefficients();
        if (d.empty()) d.push_back(1);
        d[0] = (rng() % 2) ? 1 : -1;
        gf.denominator = IntPolynomial(d);
        const unsigned order = static_cast<unsigned>(rng() % 200);
        const auto s = series_expand(gf, order);
        const auto back = gf.denominator * s;
        EXPECT_EQ(back, TruncatedSeries(order, gf.numerator));
    }
    const auto g = row_convex_gf();
    EXPECT_EQ(g.denominator * series_expand(g, 200), TruncatedSeries(200, g.numerator));
}

TEST(SeriesExpand, AgreesWithTransferDp) {
    const auto s = series_expand(row_convex_gf(), 1000);
    const auto dp = count_by_transfer_dp(1000).series;
    EXPECT_EQ(s[0], 0);
    for (unsigned n = 1; n <= 1000; ++n) ASSERT_EQ(s[n], dp[n]) << "n = " << n;
}

TEST(RecurrenceFromGf, RowConvex) {
    const auto rec = recurrence_from_gf(row_convex_gf());
    EXPECT_EQ(rec.coefficients, ints({5, -7, 4}));
    EXPECT_EQ(rec.valid_from, 5U);
    // Index 0 is the empty-area term; areas 1..4 are the seeds.
    EXPECT_EQ(rec.initial_terms, ints({0, 1, 2, 6, 19}));
    const auto terms = rec.terms(60);
    const auto ref = count_by_linear_recurrence(60);
    for (unsigned n = 1; n <= 60; ++n) EXPECT_EQ(terms[n], ref[n]);
}

TEST(RecurrenceFromGf, Doubling) {
    const auto rec = recurrence_from_gf({IntPolynomial{1}, IntPolynomial{1, -2}});
    EXPECT_EQ(rec.coefficients, ints({2}));
    EXPECT_EQ(rec.initial_terms, ints({1}));
}

TEST(RecurrenceFromGf, FibonacciMatchesDirectAddition) {
    const auto rec = recurrence_from_gf({IntPolynomial{0, 1}, IntPolynomial{1, -1, -1}});
    EXPECT_EQ(rec.coefficients, ints({1, 1}));
    EXPECT_EQ(rec.initial_terms, ints({0, 1}));
    std::vector<BigInt> fib{0, 1};
    while (fib.size() <= 90) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
    EXPECT_EQ(rec.terms(90), fib);
}

TEST(RecurrenceFromGf, RequiresUnitConstantTerm) {
    EXPECT_THROW(recurrence_from_gf({IntPolynomial{1}, IntPolynomial{3, 1}}), std::invalid_argument);
}

TEST(TransferIdentities, OrderTwelve) {
    const auto rep = verify_transfer_identities(12, 12);
    EXPECT_TRUE(rep.all_hold()) << (rep.failures.empty() ? "" : rep.failures.front());
    EXPECT_EQ(rep.s.coefficients(), ints({0, 1, 2, 6, 19, 61, 196, 629, 2017, 6466, 20727, 66441, 212980}));
    ASSERT_EQ(rep.f.size(), 12U);
    // F_1 through x^3: (1) -> 1; (1,1) -> 1; (2,1) and (1,1,1) -> 2 + 1.
    EXPECT_EQ(rep.f[0][1], 1);
    EXPECT_EQ(rep.f[0][2], 1);
    EXPECT_EQ(rep.f[0][3], 3);
}

TEST(TransferIdentities, OrderZeroIsVacuous) {
    const auto rep = verify_transfer_identities(0, 1);
    EXPECT_TRUE(rep.all_hold());
    EXPECT_TRUE(rep.f.empty());
}

TEST(TransferIdentities, OrderFiftyMatchesRecurrence) {
    const auto rep = verify_transfer_identities(50, 50);
    EXPECT_TRUE(rep.all_hold());
    EXPECT_EQ(rep.s[50], count_by_linear_recurrence(50)[50]);
}

TEST(TransferIdentities, AllOrdersUpToFifty) {
    for (unsigned order = 1; order <= 50; ++order) {
        EXPECT_TRUE(verify_transfer_identities(order, order).all_hold()) << "order " << order;
    }
}

TEST(TransferIdentities, PartialMMax) {
    const auto rep = verify_transfer_identities(20, 5);
    EXPECT_TRUE(rep.all_hold());
    EXPECT_EQ(rep.f.size(), 5U);
}

TEST(TransferIdentities, RejectsMMaxAboveOrder) {
    EXPECT_THROW(verify_transfer_identities(5, 6), std::invalid_argument);
    EXPECT_THROW(verify_transfer_identities(5, 0), std::invalid_argument);
}

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "rowconvex/enumerate.hpp"

using namespace rowconvex;

namespace {

// OEIS A001169, areas 1..12.
const std::vector<BigInt> kTable = {1, 2, 6, 19, 61, 196, 629, 2017, 6466, 20727, 66441, 212980};

}  // namespace

TEST(SlidingFactor, Examples) {
    EXPECT_EQ(sliding_factor(4, 3), 6U);
    EXPECT_EQ(sliding_factor(1, 1), 1U);
    EXPECT_EQ(sliding_factor(3, 2), 4U);
    EXPECT_THROW(sliding_factor(0, 2), std::invalid_argument);
    EXPECT_THROW(sliding_factor(2, -1), std::invalid_argument);
}

TEST(CompositionWeight, Examples) {
    EXPECT_EQ(composition_weight(Composition({4, 3, 2})), 24);
    EXPECT_EQ(composition_weight(Composition({5})), 1);
    EXPECT_EQ(composition_weight(Composition({2, 1, 1})), 2);
}

TEST(CompositionWeight, InvariantUnderReversal) {
    for (unsigned n = 1; n <= 15; ++n) {
        for (const auto& c : compositions(n)) {
            ASSERT_EQ(composition_weight(c), composition_weight(c.reversed()));
        }
    }
}

TEST(PartitionFormula, TableValues) {
    EXPECT_EQ(count_by_partition_formula(1), 1);
    EXPECT_EQ(count_by_partition_formula(4), 19);
    EXPECT_EQ(count_by_partition_formula(12), 212980);
}

TEST(PartitionFormula, ResourceLimit) {
    Limits tight;
    tight.exponential = 10;
    EXPECT_THROW(count_by_partition_formula(11, tight), resource_limit_error);
    try {
        count_by_partition_formula(25);
        FAIL() << "expected resource_limit_error";
    } catch (const resource_limit_error& e) {
        EXPECT_EQ(e.limit(), 24U);
        EXPECT_NE(std::string(e.what()).find("limit 24"), std::string::npos);
    }
    EXPECT_THROW(count_by_partition_formula(0), std::invalid_argument);
}

TEST(SortedPartitionProduct, DiffersFromOrderedSum) {
    // Orderings of (2,1,1): (2,1,1) and (1,1,2) weigh 2, (1,2,1) weighs 4.
    // Sorted-only evaluation counts 3 * 2 = 6 instead of 8.
    EXPECT_EQ(count_by_sorted_partition_product(1), 1);
    EXPECT_EQ(count_by_sorted_partition_product(2), 2);
    EXPECT_LT(count_by_sorted_partition_product(4), count_by_partition_formula(4));
}

TEST(CompositionSum, Examples) {
    EXPECT_EQ(count_by_composition_sum(2), 2);
    EXPECT_EQ(count_by_composition_sum(3), 6);
    EXPECT_EQ(count_by_composition_sum(4), 19);
}

TEST(CompositionSum, MatchesRecursiveBruteForce) {
    for (unsigned n = 1; n <= 16; ++n) {
        EXPECT_EQ(count_by_composition_sum(n), brute::composition_sum(n)) << "n = " << n;
    }
}

TEST(CompositionSum, IndependentOfThreadCount) {
    const BigInt serial = count_by_composition_sum(18);
    for (unsigned t : {2U, 3U, 5U, 32U}) EXPECT_EQ(count_by_composition_sum(18, {}, t), serial);
}

TEST(TransferDp, Table) {
    const auto r = count_by_transfer_dp(12);
    EXPECT_EQ(r.series.values(), kTable);
    EXPECT_EQ(count_by_transfer_dp(1).series.values(), std::vector<BigInt>{1});
}

TEST(TransferDp, AggregatesDominate) {
    const auto r = count_by_transfer_dp(100);
    ASSERT_EQ(r.aggregates.a.size(), 100U);
    for (unsigned i = 0; i < 100; ++i) {
        EXPECT_EQ(r.aggregates.a[i], r.series.values()[i]);
        EXPECT_GE(r.aggregates.b[i], r.aggregates.a[i]);
    }
}

TEST(TransferDp, LastPartWeightedAggregateMatchesBruteForce) {
    // B(n) = sum over compositions of weight * last part.
    const auto r = count_by_transfer_dp(12);
    for (unsigned n = 1; n <= 12; ++n) {
        std::uint64_t b = 0;
        brute::for_each_composition(n, [&](const brute::Seq& c) { b += brute::weight(c) * c.back(); });
        EXPECT_EQ(r.aggregates.b[n - 1], b) << "n = " << n;
    }
}

TEST(LinearRecurrence, Examples) {
    const auto s = count_by_linear_recurrence(13);
    EXPECT_EQ(s[4], 19);
    EXPECT_EQ(s[5], 61);
    EXPECT_EQ(s[13], 682721);
    EXPECT_EQ(count_by_linear_recurrence(1).values(), std::vector<BigInt>{1});
    EXPECT_EQ(count_by_linear_recurrence(3).values(), (std::vector<BigInt>{1, 2, 6}));
}

TEST(CrossMethod, AgreeThroughTwenty) {
    const auto dp = count_by_transfer_dp(20).series;
    const auto rec = count_by_linear_recurrence(20);
    for (unsigned n = 1; n <= 20; ++n) {
        EXPECT_EQ(count_by_partition_formula(n), dp[n]);
        EXPECT_EQ(count_by_composition_sum(n), dp[n]);
        EXPECT_EQ(rec[n], dp[n]);
    }
}

TEST(CrossMethod, DpAndRecurrenceAt200) {
    const auto dp = count_by_transfer_dp(200).series;
    EXPECT_EQ(dp, count_by_linear_recurrence(200));
    EXPECT_EQ(dp[200].str().size(), 101U);
}

TEST(CountSeries, ResidualAndMonotone) {
    const auto dp = count_by_transfer_dp(300).series;
    for (unsigned n = 5; n <= 300; ++n) EXPECT_EQ(dp.recurrence_residual(n), 0);
    EXPECT_NE(dp.recurrence_residual(4), 0);
    for (unsigned n = 1; n < 300; ++n) EXPECT_GT(dp[n + 1], dp[n]);
    EXPECT_THROW(dp.at(0), std::out_of_range);
    EXPECT_THROW(dp.at(301), std::out_of_range);
}

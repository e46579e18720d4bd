#pragma once

// Counting row-convex polyominoes by area.
//
// A row-convex polyomino is a bottom-to-top stack of horizontal runs. Two
// adjacent runs of lengths a and b can be aligned in a + b - 1 ways while
// still sharing an edge, so a row-length composition (p_1, ..., p_k)
// accounts for prod (p_i + p_{i+1} - 1) shapes. Every method below sums
// that weight over all compositions of n, each in its own way.

#include <cstdint>
#include <future>
#include <stdexcept>
#include <string>
#include <vector>

#include "common.hpp"
#include "core.hpp"

namespace rowconvex {

/// Number of horizontal alignments of two edge-sharing rows.
inline std::uint64_t sliding_factor(long long a, long long b) {
    if (a < 1 || b < 1) {
        throw std::invalid_argument("sliding_factor: row lengths must be >= 1, got " +
                                    std::to_string(a) + ", " + std::to_string(b));
    }
    return static_cast<std::uint64_t>(a + b - 1);
}

inline BigInt composition_weight(const Composition& c) {
    BigInt w = 1;
    const auto& p = c.parts();
    for (std::size_t i = 0; i + 1 < p.size(); ++i) w *= sliding_factor(p[i], p[i + 1]);
    return w;
}

/// S(1..n_max), 1-based.
class CountSeries {
public:
    CountSeries() = default;
    explicit CountSeries(std::vector<BigInt> values_from_one) : values_(std::move(values_from_one)) {}

    unsigned n_max() const noexcept { return static_cast<unsigned>(values_.size()); }

    const BigInt& at(unsigned n) const {
        if (n < 1 || n > values_.size()) {
            throw std::out_of_range("CountSeries: N = " + std::to_string(n) + " outside 1.." +
                                    std::to_string(values_.size()));
        }
        return values_[n - 1];
    }
    const BigInt& operator[](unsigned n) const { return at(n); }

    const std::vector<BigInt>& values() const noexcept { return values_; }

    /// S(N) - 5 S(N-1) + 7 S(N-2) - 4 S(N-3); zero for N >= 5.
    BigInt recurrence_residual(unsigned n) const {
        if (n < 4) throw std::out_of_range("recurrence_residual: N must be >= 4");
        return at(n) - 5 * at(n - 1) + 7 * at(n - 2) - 4 * at(n - 3);
    }

    friend bool operator==(const CountSeries&, const CountSeries&) = default;

private:
    std::vector<BigInt> values_;
};

/// Coefficient sequences of S(x) = sum_m F_m(x) and R(x) = sum_m m F_m(x),
/// 1-based like CountSeries.
struct DPAggregates {
    std::vector<BigInt> a;
    std::vector<BigInt> b;
};

struct TransferResult {
    CountSeries series;
    DPAggregates aggregates;
};

namespace detail {

inline void check_exponential_limit(const char* method, long long n, const Limits& limits) {
    require_positive(n, method);
    if (n > static_cast<long long>(limits.exponential)) {
        throw resource_limit_error(method, static_cast<unsigned>(n), limits.exponential);
    }
    if (n > 64) {
        throw resource_limit_error(method, static_cast<unsigned>(n), 64);
    }
}

// Sums prod(a_i + a_{i+1} - 1 + bonus) over all compositions of `remaining`
// cells that follow a row of length `last`. bonus = 1 gives the reflection
// upper bound's modified factor.
class CompositionSummer {
public:
    explicit CompositionSummer(unsigned bonus) : bonus_(bonus) {}

    void descend(unsigned remaining, unsigned last, std::uint64_t weight) {
        if (remaining == 0) {
            add(weight);
            return;
        }
        for (unsigned part = 1; part <= remaining; ++part) {
            std::uint64_t w = 0;
            if (__builtin_mul_overflow(weight, std::uint64_t{last} + part - 1 + bonus_, &w)) {
                throw std::overflow_error("composition weight exceeds 64 bits");
            }
            descend(remaining - part, part, w);
        }
    }

    BigInt total() const { return BigInt(flushed_) + partial_; }

private:
    void add(std::uint64_t w) {
        if (partial_ > UINT64_MAX - w) {
            flushed_ += partial_;
            partial_ = 0;
        }
        partial_ += w;
    }

    unsigned bonus_;
    std::uint64_t partial_ = 0;
    BigInt flushed_ = 0;
};

inline BigInt sum_over_compositions(unsigned n, unsigned bonus, unsigned threads) {
    // First row length f contributes all compositions starting with f; the
    // first row has no predecessor, so its subtree starts at weight 1.
    auto subtree = [n, bonus](unsigned first) {
        CompositionSummer summer(bonus);
        if (first == n) return BigInt(1);
        for (unsigned part = 1; part <= n - first; ++part) {
            summer.descend(n - first - part, part, first + part - 1 + bonus);
        }
        return summer.total();
    };
    BigInt total = 0;
    if (threads <= 1) {
        for (unsigned f = 1; f <= n; ++f) total += subtree(f);
        return total;
    }
    std::vector<std::future<BigInt>> jobs;
    for (unsigned w = 0; w < threads; ++w) {
        jobs.push_back(std::async(std::launch::async, [=] {
            BigInt acc = 0;
            for (unsigned f = 1 + w; f <= n; f += threads) acc += subtree(f);
            return acc;
        }));
    }
    for (auto& j : jobs) total += j.get();
    return total;
}

}  // namespace detail

/// Partition-sum formula: for each partition of n, visit each distinct
/// ordering of its parts and add that ordering's shift product. The number
/// of orderings visited per partition is its permutation factor.
inline BigInt count_by_partition_formula(long long n, const Limits& limits = {}) {
    detail::check_exponential_limit("partition formula", n, limits);
    BigInt total = 0;
    for (const auto& lambda : generate_partitions(n)) {
        for (const auto& pi : distinct_permutations(lambda)) total += composition_weight(pi);
    }
    return total;
}

/// The partition sum with the shift product taken over the sorted parts
/// only, scaled by the permutation factor. Undercounts for n >= 3 because
/// the product depends on row order; kept for comparison.
inline BigInt count_by_sorted_partition_product(long long n, const Limits& limits = {}) {
    detail::check_exponential_limit("sorted partition product", n, limits);
    BigInt total = 0;
    for (const auto& lambda : generate_partitions(n)) {
        total += permutation_factor(lambda) * composition_weight(Composition(lambda.parts()));
    }
    return total;
}

/// Sum of composition_weight over all 2^(n-1) compositions of n. The
/// result does not depend on `threads`.
inline BigInt count_by_composition_sum(long long n, const Limits& limits = {}, unsigned threads = 1) {
    detail::check_exponential_limit("composition sum", n, limits);
    return detail::sum_over_compositions(static_cast<unsigned>(n), 0, threads);
}

/// Theta(n_max^2) transfer dynamic program over the aggregates
///   A(n) = 1 + sum_{m=1}^{n-1} [B(n-m) + (m-1) A(n-m)]
///   B(n) = n + sum_{m=1}^{n-1} m [B(n-m) + (m-1) A(n-m)]
/// where A(n) = S(n) and B(n) weights each composition by its last part.
inline TransferResult count_by_transfer_dp(long long n_max) {
    require_positive(n_max, "transfer dp");
    const auto top = static_cast<unsigned>(n_max);
    std::vector<BigInt> a(top + 1), b(top + 1);
    BigInt tail;
    for (unsigned n = 1; n <= top; ++n) {
        BigInt sa = 1;
        BigInt sb = n;
        for (unsigned m = 1; m < n; ++m) {
            const unsigned j = n - m;
            tail = a[j];
            tail *= (m - 1);
            tail += b[j];
            sa += tail;
            tail *= m;
            sb += tail;
        }
        a[n] = std::move(sa);
        b[n] = std::move(sb);
    }
    a.erase(a.begin());
    b.erase(b.begin());
    TransferResult result{CountSeries(a), DPAggregates{std::move(a), std::move(b)}};
    return result;
}

/// S(N) = 5 S(N-1) - 7 S(N-2) + 4 S(N-3) for N >= 5, seeded with S(1..4).
inline CountSeries count_by_linear_recurrence(long long n_max) {
    require_positive(n_max, "linear recurrence");
    const auto top = static_cast<unsigned>(n_max);
    std::vector<BigInt> s{1, 2, 6, 19};
    s.resize(std::max<unsigned>(top, 4));
    for (unsigned n = 5; n <= top; ++n) {
        s[n - 1] = 5 * s[n - 2] - 7 * s[n - 3] + 4 * s[n - 4];
    }
    s.resize(top);
    return CountSeries(std::move(s));
}

}  // namespace rowconvex

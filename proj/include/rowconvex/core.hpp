#pragma once

// Integer partitions and compositions: the row-length bookkeeping behind
// every counting method in this library.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace rowconvex {

using Parts = std::vector<unsigned>;

namespace detail {

inline unsigned checked_sum(const Parts& parts, const char* what) {
    if (parts.empty()) {
        throw std::invalid_argument(std::string(what) + ": no parts");
    }
    unsigned long long total = 0;
    for (unsigned p : parts) {
        if (p == 0) {
            throw std::invalid_argument(std::string(what) + ": parts must be >= 1");
        }
        total += p;
    }
    return static_cast<unsigned>(total);
}

// Single-pass range adaptor over anything exposing `std::optional<T> next()`.
template <class Stream, class T>
class StreamIterator {
public:
    using value_type = T;
    using difference_type = std::ptrdiff_t;

    StreamIterator() = default;
    explicit StreamIterator(Stream* s) : stream_(s) { ++*this; }

    const T& operator*() const { return *current_; }
    const T* operator->() const { return &*current_; }

    StreamIterator& operator++() {
        current_ = stream_->next();
        return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const StreamIterator& it, std::default_sentinel_t) {
        return !it.current_.has_value();
    }

private:
    Stream* stream_ = nullptr;
    std::optional<T> current_;
};

}  // namespace detail

/// Non-increasing sequence of positive parts; the multiset of row lengths
/// of a row-convex polyomino.
class Partition {
public:
    explicit Partition(Parts parts) : parts_(std::move(parts)) {
        n_ = detail::checked_sum(parts_, "Partition");
        if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>{})) {
            throw std::invalid_argument("Partition: parts must be non-increasing");
        }
    }

    const Parts& parts() const noexcept { return parts_; }
    unsigned n() const noexcept { return n_; }
    std::size_t length() const noexcept { return parts_.size(); }

    /// (value, multiplicity) pairs in decreasing order of value.
    std::vector<std::pair<unsigned, unsigned>> multiplicities() const {
        std::vector<std::pair<unsigned, unsigned>> out;
        for (unsigned p : parts_) {
            if (!out.empty() && out.back().first == p) {
                ++out.back().second;
            } else {
                out.emplace_back(p, 1U);
            }
        }
        return out;
    }

    bool all_equal() const noexcept { return parts_.front() == parts_.back(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    Parts parts_;
    unsigned n_ = 0;
};

/// Ordered sequence of positive parts: the bottom-to-top row lengths.
class Composition {
public:
    explicit Composition(Parts parts) : parts_(std::move(parts)) {
        n_ = detail::checked_sum(parts_, "Composition");
    }

    const Parts& parts() const noexcept { return parts_; }
    unsigned n() const noexcept { return n_; }
    std::size_t length() const noexcept { return parts_.size(); }

    Partition sorted() const {
        Parts p = parts_;
        std::sort(p.begin(), p.end(), std::greater<>{});
        return Partition(std::move(p));
    }

    Composition reversed() const { return Composition(Parts(parts_.rbegin(), parts_.rend())); }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

private:
    Parts parts_;
    unsigned n_ = 0;
};

/// Lazily yields the partitions of n in decreasing lexicographic order,
/// starting from (n) and ending with (1,...,1).
class PartitionStream {
public:
    using iterator = detail::StreamIterator<PartitionStream, Partition>;

    explicit PartitionStream(long long n) : n_(static_cast<unsigned>(n)) {
        require_positive(n, "generate_partitions");
    }

    std::optional<Partition> next() {
        if (done_) return std::nullopt;
        if (state_.empty()) {
            state_.push_back(n_);
            return Partition(state_);
        }
        // Rightmost part greater than one; everything after it is a 1.
        std::size_t k = state_.size();
        while (k > 0 && state_[k - 1] == 1) --k;
        if (k == 0) {
            done_ = true;
            return std::nullopt;
        }
        --k;
        unsigned rest = static_cast<unsigned>(state_.size() - k - 1) + 1;
        const unsigned v = --state_[k];
        state_.resize(k + 1);
        while (rest > v) {
            state_.push_back(v);
            rest -= v;
        }
        if (rest > 0) state_.push_back(rest);
        return Partition(state_);
    }

    iterator begin() { return iterator(this); }
    std::default_sentinel_t end() const noexcept { return {}; }

private:
    unsigned n_;
    Parts state_;
    bool done_ = false;
};

inline PartitionStream generate_partitions(long long n) { return PartitionStream(n); }

/// Lazily yields every distinct ordering of a partition's parts exactly
/// once, in decreasing lexicographic order. Uses the ordered successor on
/// the multiset, so equal parts never produce repeats.
class DistinctPermutationStream {
public:
    using iterator = detail::StreamIterator<DistinctPermutationStream, Composition>;

    explicit DistinctPermutationStream(const Partition& p) : state_(p.parts()) {}

    std::optional<Composition> next() {
        if (done_) return std::nullopt;
        if (!started_) {
            started_ = true;
            return Composition(state_);
        }
        if (!std::prev_permutation(state_.begin(), state_.end())) {
            done_ = true;
            return std::nullopt;
        }
        return Composition(state_);
    }

    iterator begin() { return iterator(this); }
    std::default_sentinel_t end() const noexcept { return {}; }

private:
    Parts state_;
    bool started_ = false;
    bool done_ = false;
};

inline DistinctPermutationStream distinct_permutations(const Partition& p) {
    return DistinctPermutationStream(p);
}

/// Lazily yields all 2^(n-1) compositions of n. Bit i of the counter marks
/// a cut between cell i and cell i+1; (n) comes first, (1,...,1) last.
class CompositionStream {
public:
    using iterator = detail::StreamIterator<CompositionStream, Composition>;

    explicit CompositionStream(long long n) : n_(static_cast<unsigned>(n)) {
        require_positive(n, "compositions");
        if (n > 64) throw std::invalid_argument("compositions: n must be <= 64");
    }

    std::optional<Composition> next() {
        if (done_) return std::nullopt;
        Parts parts;
        unsigned run = 1;
        for (unsigned i = 0; i + 1 < n_; ++i) {
            if ((mask_ >> i) & 1U) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        if (n_ == 1 || mask_ == (~std::uint64_t{0} >> (65 - n_))) {
            done_ = true;
        } else {
            ++mask_;
        }
        return Composition(std::move(parts));
    }

    iterator begin() { return iterator(this); }
    std::default_sentinel_t end() const noexcept { return {}; }

private:
    unsigned n_;
    std::uint64_t mask_ = 0;
    bool done_ = false;
};

inline CompositionStream compositions(long long n) { return CompositionStream(n); }

inline BigInt factorial(unsigned k) {
    BigInt f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return f;
}

/// Number of distinct orderings of the parts: l! / prod_v m_v!.
inline BigInt permutation_factor(const Partition& p) {
    if (p.all_equal()) return 1;
    BigInt denom = 1;
    for (const auto& [value, mult] : p.multiplicities()) denom *= factorial(mult);
    return factorial(static_cast<unsigned>(p.length())) / denom;
}

/// P(n) by direct generation. Diagnostic only; grows subexponentially but
/// still enumerates every partition.
inline std::uint64_t partition_count(long long n) {
    require_positive(n, "partition_count");
    std::uint64_t count = 0;
    for (const auto& p : generate_partitions(n)) {
        (void)p;
        ++count;
    }
    return count;
}

}  // namespace rowconvex

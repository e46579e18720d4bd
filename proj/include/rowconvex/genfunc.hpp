#pragma once

// Exact integer polynomials, truncated power series, and the rational
// generating function x(1-x)^3 / (1 - 5x + 7x^2 - 4x^3).

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "common.hpp"

namespace rowconvex {

class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) { trim(); }
    IntPolynomial(std::initializer_list<long long> coefficients) {
        for (long long v : coefficients) c_.emplace_back(v);
        trim();
    }

    static IntPolynomial monomial(unsigned power, BigInt coefficient = 1) {
        std::vector<BigInt> c(power + 1);
        c[power] = std::move(coefficient);
        return IntPolynomial(std::move(c));
    }

    const std::vector<BigInt>& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of x^k; zero beyond the degree.
    BigInt operator[](std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }

    /// Index of the lowest non-zero coefficient; 0 for the zero polynomial.
    unsigned valuation() const noexcept {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] != 0) return static_cast<unsigned>(i);
        }
        return 0;
    }

    IntPolynomial& operator+=(const IntPolynomial& q) {
        if (q.c_.size() > c_.size()) c_.resize(q.c_.size());
        for (std::size_t i = 0; i < q.c_.size(); ++i) c_[i] += q.c_[i];
        trim();
        return *this;
    }
    IntPolynomial& operator-=(const IntPolynomial& q) {
        if (q.c_.size() > c_.size()) c_.resize(q.c_.size());
        for (std::size_t i = 0; i < q.c_.size(); ++i) c_[i] -= q.c_[i];
        trim();
        return *this;
    }
    friend IntPolynomial operator+(IntPolynomial p, const IntPolynomial& q) { return p += q; }
    friend IntPolynomial operator-(IntPolynomial p, const IntPolynomial& q) { return p -= q; }

    friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
        if (p.is_zero() || q.is_zero()) return {};
        std::vector<BigInt> out(p.c_.size() + q.c_.size() - 1);
        for (std::size_t i = 0; i < p.c_.size(); ++i) {
            if (p.c_[i] == 0) continue;
            for (std::size_t j = 0; j < q.c_.size(); ++j) out[i + j] += p.c_[i] * q.c_[j];
        }
        return IntPolynomial(std::move(out));
    }

    IntPolynomial scaled(const BigInt& k) const {
        std::vector<BigInt> out = c_;
        for (auto& v : out) v *= k;
        return IntPolynomial(std::move(out));
    }

    IntPolynomial derivative() const {
        std::vector<BigInt> out;
        for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * i);
        return IntPolynomial(std::move(out));
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            const bool neg = c_[i] < 0;
            const BigInt mag = neg ? BigInt(-c_[i]) : c_[i];
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            if (mag != 1 || i == 0) out += mag.str();
            if (i >= 1) out += "x";
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

inline IntPolynomial poly_add(const IntPolynomial& p, const IntPolynomial& q) { return p + q; }
inline IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }
inline IntPolynomial poly_scale(const IntPolynomial& p, const BigInt& k) { return p.scaled(k); }

/// Power series known modulo x^(order+1).
class TruncatedSeries {
public:
    explicit TruncatedSeries(unsigned order) : c_(order + 1) {}
    TruncatedSeries(unsigned order, const IntPolynomial& p) : c_(order + 1) {
        for (unsigned i = 0; i <= order; ++i) c_[i] = p[i];
    }

    unsigned order() const noexcept { return static_cast<unsigned>(c_.size() - 1); }
    const std::vector<BigInt>& coefficients() const noexcept { return c_; }
    BigInt& operator[](std::size_t k) { return c_.at(k); }
    const BigInt& operator[](std::size_t k) const { return c_.at(k); }

    TruncatedSeries& operator+=(const TruncatedSeries& s) {
        check_order(s);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += s.c_[i];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& s) {
        check_order(s);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= s.c_[i];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_order(b);
        TruncatedSeries out(a.order());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j < a.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return out;
    }
    friend TruncatedSeries operator*(const IntPolynomial& p, const TruncatedSeries& s) {
        return TruncatedSeries(s.order(), p) * s;
    }

    TruncatedSeries scaled(const BigInt& k) const {
        TruncatedSeries out = *this;
        for (auto& v : out.c_) v *= k;
        return out;
    }

    /// Lowest degree at which the two series differ.
    std::optional<unsigned> first_difference(const TruncatedSeries& other) const {
        check_order(other);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] != other.c_[i]) return static_cast<unsigned>(i);
        }
        return std::nullopt;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    void check_order(const TruncatedSeries& s) const {
        if (s.c_.size() != c_.size()) throw std::invalid_argument("TruncatedSeries: order mismatch");
    }

    std::vector<BigInt> c_;
};

struct RationalGF {
    IntPolynomial numerator;
    IntPolynomial denominator;
};

/// G(x) = x(1-x)^3 / (1 - 5x + 7x^2 - 4x^3).
inline RationalGF row_convex_gf() {
    const IntPolynomial one_minus_x{1, -1};
    return {IntPolynomial{0, 1} * one_minus_x * one_minus_x * one_minus_x, IntPolynomial{1, -5, 7, -4}};
}

/// Coefficients of numerator/denominator through x^order by exact long
/// division. Every step divides by the denominator's constant term and
/// must be exact.
inline TruncatedSeries series_expand(const RationalGF& gf, unsigned order) {
    const BigInt d0 = gf.denominator[0];
    if (d0 == 0) {
        throw std::invalid_argument("series_expand: denominator has zero constant term");
    }
    const auto& den = gf.denominator.coefficients();
    TruncatedSeries out(order);
    for (unsigned n = 0; n <= order; ++n) {
        BigInt acc = gf.numerator[n];
        const std::size_t kmax = std::min<std::size_t>(n, den.size() - 1);
        for (std::size_t k = 1; k <= kmax; ++k) acc -= den[k] * out[n - k];
        if (acc % d0 != 0) {
            throw std::invalid_argument("series_expand: coefficient of x^" + std::to_string(n) +
                                        " is not an integer");
        }
        out[n] = acc / d0;
    }
    return out;
}

/// c_n = sum_k coefficients[k-1] * c_{n-k} for n >= valid_from; terms
/// below valid_from are listed in initial_terms (indices 0..valid_from-1).
struct LinearRecurrence {
    std::vector<BigInt> coefficients;
    std::vector<BigInt> initial_terms;
    unsigned valid_from = 0;

    /// Terms c_0..c_last.
    std::vector<BigInt> terms(unsigned last) const {
        std::vector<BigInt> c(initial_terms);
        c.resize(std::max<std::size_t>(last + 1, c.size()));
        for (unsigned n = valid_from; n <= last; ++n) {
            BigInt acc = 0;
            for (std::size_t k = 1; k <= coefficients.size() && k <= n; ++k) {
                acc += coefficients[k - 1] * c[n - k];
            }
            c[n] = acc;
        }
        c.resize(last + 1);
        return c;
    }
};

/// Reads the recurrence off the denominator. The recurrence holds once the
/// index passes both the numerator's degree and the recurrence order.
inline LinearRecurrence recurrence_from_gf(const RationalGF& gf) {
    const BigInt d0 = gf.denominator[0];
    if (d0 != 1 && d0 != -1) {
        throw std::invalid_argument("recurrence_from_gf: denominator constant term must be +-1");
    }
    LinearRecurrence rec;
    for (int k = 1; k <= gf.denominator.degree(); ++k) {
        rec.coefficients.push_back(-gf.denominator[k] * d0);
    }
    rec.valid_from = static_cast<unsigned>(
        std::max(gf.numerator.degree() + 1, std::max(gf.denominator.degree(), 0)));
    if (rec.valid_from > 0) {
        const auto s = series_expand(gf, rec.valid_from - 1);
        rec.initial_terms = s.coefficients();
    }
    return rec;
}

/// (1-2x)(1-x)^2 - x(1-2x+2x^2): the denominator reached when S is
/// eliminated from the transfer system.
inline IntPolynomial collected_denominator() {
    const IntPolynomial one_minus_x{1, -1};
    return IntPolynomial{1, -2} * one_minus_x * one_minus_x - IntPolynomial{0, 1, -2, 2};
}

struct TransferIdentityReport {
    unsigned order = 0;
    unsigned m_max = 0;
    std::vector<TruncatedSeries> f;  // f[m-1] = F_m mod x^(order+1), m = 1..m_max
    TruncatedSeries s{0};
    TruncatedSeries r{0};
    bool per_part_identity = true;   // F_m = x^m (1 + R + (m-1) S)
    bool s_equation = true;          // S (1-2x) = x(1-x)(1+R)
    bool r_equation = true;          // R (1-x)^3 = x(1-x)(1+R) + 2x^2 S
    bool matches_gf = true;          // S = series of G
    std::vector<std::string> failures;

    bool all_hold() const noexcept { return per_part_identity && s_equation && r_equation && matches_gf; }
};

/// Builds F_m for every m <= order from the defining recurrence
///   [x^n] F_m = [n == m] + sum_l (l + m - 1) [x^(n-m)] F_l,
/// one total degree at a time (F_m starts at x^m, so degree n only reads
/// lower degrees), then checks the closed-form relations between F_m, S
/// and R modulo x^(order+1). Parts above the order contribute nothing, so
/// S and R are exact truncations; m_max only selects which F_m are checked
/// and returned.
inline TransferIdentityReport verify_transfer_identities(unsigned order, unsigned m_max) {
    if (m_max < 1) throw std::invalid_argument("verify_transfer_identities: m_max must be >= 1");
    if (m_max > order && order > 0) {
        throw std::invalid_argument("verify_transfer_identities: m_max " + std::to_string(m_max) +
                                    " exceeds order " + std::to_string(order));
    }
    TransferIdentityReport rep;
    rep.order = order;
    rep.m_max = order == 0 ? 0 : m_max;

    std::vector<TruncatedSeries> f(order + 1, TruncatedSeries(order));  // f[m], m >= 1
    TruncatedSeries s(order), r(order);
    for (unsigned n = 1; n <= order; ++n) {
        for (unsigned m = 1; m <= n; ++m) {
            BigInt coef = (n == m) ? 1 : 0;
            const unsigned j = n - m;
            // sum_l (l + m - 1) [x^j] F_l = [x^j] R + (m - 1) [x^j] S, but
            // evaluated directly from the F_l.
            for (unsigned l = 1; l <= j; ++l) {
                if (f[l][j] != 0) coef += (l + m - 1) * f[l][j];
            }
            f[m][n] = coef;
            s[n] += coef;
            r[n] += m * coef;
        }
    }

    TruncatedSeries one(order);
    one[0] = 1;
    const TruncatedSeries one_plus_r = one + r;

    for (unsigned m = 1; m <= rep.m_max; ++m) {
        const TruncatedSeries rhs = IntPolynomial::monomial(m) * (one_plus_r + s.scaled(m - 1));
        if (auto d = f[m].first_difference(rhs)) {
            rep.per_part_identity = false;
            rep.failures.push_back("F_" + std::to_string(m) + " differs at x^" + std::to_string(*d));
        }
    }

    const IntPolynomial x_one_minus_x{0, 1, -1};
    const TruncatedSeries s_lhs = IntPolynomial{1, -2} * s;
    const TruncatedSeries s_rhs = x_one_minus_x * one_plus_r;
    if (auto d = s_lhs.first_difference(s_rhs)) {
        rep.s_equation = false;
        rep.failures.push_back("S equation differs at x^" + std::to_string(*d));
    }

    const TruncatedSeries r_lhs = IntPolynomial{1, -3, 3, -1} * r;
    const TruncatedSeries r_rhs = x_one_minus_x * one_plus_r + IntPolynomial{0, 0, 2} * s;
    if (auto d = r_lhs.first_difference(r_rhs)) {
        rep.r_equation = false;
        rep.failures.push_back("R equation differs at x^" + std::to_string(*d));
    }

    if (auto d = s.first_difference(series_expand(row_convex_gf(), order))) {
        rep.matches_gf = false;
        rep.failures.push_back("sum of F_m differs from G at x^" + std::to_string(*d));
    }

    for (unsigned m = 1; m <= rep.m_max; ++m) rep.f.push_back(std::move(f[m]));
    rep.s = std::move(s);
    rep.r = std::move(r);
    return rep;
}

}  // namespace rowconvex

#pragma once

// Singularity analysis of rational generating functions with simple
// dominant poles, checks of stated asymptotic claims against computed
// values, and the reflection bounds.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "common.hpp"
#include "enumerate.hpp"
#include "genfunc.hpp"
#include "oracle.hpp"

namespace rowconvex {

using Complex = std::complex<double>;
using ComplexLD = std::complex<long double>;

inline constexpr double kRootTolerance = 1e-10;

struct Root {
    Complex value;
    double residual = 0.0;  // |p(value)|
    unsigned multiplicity = 1;
};

namespace detail {

template <class T>
std::complex<T> horner(const IntPolynomial& p, std::complex<T> z) {
    std::complex<T> acc = 0;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + static_cast<T>(*it);
    return acc;
}

}  // namespace detail

/// All complex roots of p: companion-matrix eigenvalues, then Newton
/// polish in long double. Ordered by modulus, then imaginary part.
/// Throws numerical_failure if a root misses kRootTolerance.
inline std::vector<Root> polynomial_roots(const IntPolynomial& p, double tolerance = kRootTolerance) {
    const int deg = p.degree();
    if (deg < 1) throw std::invalid_argument("polynomial_roots: degree must be >= 1");
    const double lead = static_cast<double>(p[deg]);

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -static_cast<double>(p[i]) / lead;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    if (solver.info() != Eigen::Success) {
        throw numerical_failure("polynomial_roots: eigenvalue solver failed", NAN);
    }

    const IntPolynomial dp = p.derivative();
    std::vector<Root> roots;
    for (int i = 0; i < deg; ++i) {
        ComplexLD z(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
        for (int iter = 0; iter < 8; ++iter) {
            const ComplexLD d = detail::horner(dp, z);
            if (std::abs(d) == 0.0L) break;
            const ComplexLD step = detail::horner(p, z) / d;
            z -= step;
            if (std::abs(step) <= 1e-19L * std::max(1.0L, std::abs(z))) break;
        }
        if (std::abs(z.imag()) <= 1e-15L * std::abs(z)) z.imag(0.0L);
        Root r;
        r.value = Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
        r.residual = static_cast<double>(std::abs(detail::horner(p, ComplexLD(r.value))));
        roots.push_back(r);
    }
    for (auto& r : roots) {
        unsigned near = 0;
        for (const auto& s : roots) near += std::abs(s.value - r.value) <= 1e-6 * std::max(1.0, std::abs(r.value));
        r.multiplicity = near;
    }
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
        const double ma = std::abs(a.value), mb = std::abs(b.value);
        if (std::abs(ma - mb) > 1e-12 * std::max(ma, mb)) return ma < mb;
        return a.value.imag() < b.value.imag();
    });
    for (const auto& r : roots) {
        if (!(r.residual < tolerance) && r.multiplicity == 1) {
            throw numerical_failure("polynomial_roots: root did not meet tolerance", r.residual);
        }
    }
    return roots;
}

/// Roots of 1 - 5x + 7x^2 - 4x^3.
inline std::vector<Root> denominator_roots() { return polynomial_roots(row_convex_gf().denominator); }

using HighFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<150>>;

/// Non-negative fixed-point decimal: value = scaled / 10^digits.
struct DecimalApprox {
    BigInt scaled;
    unsigned digits = 0;

    std::string to_string() const {
        std::string s = scaled.str();
        if (digits == 0) return s;
        if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
        s.insert(s.size() - digits, ".");
        return s;
    }

    long double to_long_double() const {
        return static_cast<long double>(scaled) / std::pow(10.0L, static_cast<long double>(digits));
    }

    HighFloat to_high() const { return HighFloat(scaled) / boost::multiprecision::pow(HighFloat(10), digits); }
};

/// floor(num * 10^digits / den) as a fixed-point decimal.
inline DecimalApprox scaled_quotient(const BigInt& num, const BigInt& den, unsigned digits) {
    BigInt scale = boost::multiprecision::pow(BigInt(10), digits);
    return {num * scale / den, digits};
}

/// S(n+1)/S(n) from exact counts, 40 fractional digits.
inline DecimalApprox growth_ratio_estimate(const CountSeries& s, unsigned n, unsigned digits = 40) {
    return scaled_quotient(s.at(n + 1), s.at(n), digits);
}

inline DecimalApprox growth_ratio_estimate(unsigned n, unsigned digits = 40) {
    require_positive(n, "growth_ratio_estimate");
    return growth_ratio_estimate(count_by_linear_recurrence(n + 1), n, digits);
}

/// Leading-term data at the dominant singularity. For a real pole x0:
/// c_N ~ constant * growth^N. For a conjugate pair: c_N ~ amplitude *
/// growth^N * cos(N angle + phase).
struct ResidueConstants {
    bool oscillating = false;
    long double growth = 0;     // 1 / |x0|
    long double constant = 0;   // real pole only
    long double amplitude = 0;  // conjugate pair only
    long double phase = 0;
    long double angle = 0;
    std::vector<Root> dominant;

    long double predict(unsigned n) const {
        const long double scale = std::pow(growth, static_cast<long double>(n));
        if (!oscillating) return constant * scale;
        return amplitude * scale * std::cos(static_cast<long double>(n) * angle + phase);
    }
};

/// Smallest-modulus roots (all roots within a relative 1e-9 of the minimum).
inline std::vector<Root> dominant_roots(const std::vector<Root>& roots) {
    const double rho = std::abs(roots.front().value);
    std::vector<Root> out;
    for (const auto& r : roots) {
        if (std::abs(r.value) <= rho * (1 + 1e-9)) out.push_back(r);
    }
    return out;
}

/// For a simple pole x0, G ~ Res / (x - x0) with Res = N(x0) / D'(x0), so
/// [x^N] G ~ -Res x0^(-N-1). A conjugate pair doubles the real part.
inline ResidueConstants residue_constants(const RationalGF& gf) {
    const auto roots = polynomial_roots(gf.denominator);
    const auto dom = dominant_roots(roots);
    for (const auto& r : dom) {
        if (r.multiplicity > 1) {
            throw unsupported_case("residue_constants: dominant pole has multiplicity " +
                                   std::to_string(r.multiplicity));
        }
    }
    const IntPolynomial dd = gf.denominator.derivative();
    auto weight = [&](ComplexLD x0) {  // -Res / x0
        return -detail::horner(gf.numerator, x0) / detail::horner(dd, x0) / x0;
    };

    ResidueConstants rc;
    rc.dominant = dom;
    if (dom.size() == 1 && dom.front().value.imag() == 0.0) {
        const ComplexLD x0(dom.front().value);
        rc.growth = 1.0L / std::abs(x0);
        rc.constant = weight(x0).real();
        return rc;
    }
    if (dom.size() == 2 && std::abs(dom[0].value - std::conj(dom[1].value)) <= 1e-9) {
        // Take the member below the real axis: x0 = rho e^{-i angle}.
        const ComplexLD x0(dom[0].value.imag() < 0 ? dom[0].value : dom[1].value);
        const ComplexLD w = weight(x0);
        rc.oscillating = true;
        rc.growth = 1.0L / std::abs(x0);
        rc.angle = -std::arg(x0);
        rc.amplitude = 2 * std::abs(w);
        rc.phase = std::arg(w);
        return rc;
    }
    throw unsupported_case("residue_constants: dominant singularity is neither a single real pole "
                           "nor a conjugate pair (" + std::to_string(dom.size()) + " roots)");
}

/// 1/rho for the real dominant root of the counting denominator, refined by
/// Newton in 150-digit binary floating point.
inline HighFloat growth_constant_high() {
    const IntPolynomial& den = row_convex_gf().denominator;
    const IntPolynomial dd = den.derivative();
    auto eval = [](const IntPolynomial& p, const HighFloat& x) {
        HighFloat acc = 0;
        const auto& c = p.coefficients();
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + HighFloat(*it);
        return acc;
    };
    HighFloat x = denominator_roots().front().value.real();
    for (int i = 0; i < 12; ++i) x -= eval(den, x) / eval(dd, x);
    return 1 / x;
}

/// growth_constant_high() as a decimal string, at most 120 digits after the point.
inline std::string growth_constant_text(unsigned digits) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(static_cast<std::streamsize>(std::min(digits, 120U)));
    os << growth_constant_high();
    return os.str();
}

/// |ratio - growth constant|, taken in high precision before rounding.
inline long double ratio_error(const DecimalApprox& ratio) {
    return static_cast<long double>(abs(ratio.to_high() - growth_constant_high()));
}

enum class Verdict { consistent, inconsistent };

inline const char* to_string(Verdict v) { return v == Verdict::consistent ? "consistent" : "inconsistent"; }

struct ClaimCheck {
    std::string claim;     // the statement under test
    std::string computed;  // what direct computation gives
    double residual = 0;
    Verdict verdict = Verdict::inconsistent;
};

namespace detail {

using Rational = boost::multiprecision::cpp_rational;

// a + b * i*sqrt(7), exact.
struct SqrtMinus7 {
    Rational a, b;
    friend SqrtMinus7 operator+(const SqrtMinus7& x, const SqrtMinus7& y) { return {x.a + y.a, x.b + y.b}; }
    friend SqrtMinus7 operator*(const SqrtMinus7& x, const SqrtMinus7& y) {
        return {x.a * y.a - 7 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    Rational norm() const { return a * a + 7 * b * b; }
};

inline SqrtMinus7 evaluate(const IntPolynomial& p, const SqrtMinus7& x) {
    SqrtMinus7 acc{0, 0};
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + SqrtMinus7{Rational(*it), 0};
    return acc;
}

inline std::string rational_text(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Verdict judge(double residual) {
    return residual <= kRootTolerance ? Verdict::consistent : Verdict::inconsistent;
}

}  // namespace detail

/// Checks the stated asymptotic form S(N) ~ A 2^N cos(N theta + phi) with
/// theta = arctan(sqrt(7)/3), and the pole locations offered for it,
/// against direct evaluation. Deterministic.
inline std::vector<ClaimCheck> verify_asymptotic_claims() {
    const RationalGF gf = row_convex_gf();
    const IntPolynomial& den = gf.denominator;
    std::vector<ClaimCheck> out;

    {
        const BigInt at_one = den[0] + den[1] + den[2] + den[3];
        const double res = std::abs(static_cast<double>(at_one));
        out.push_back({"x = 1 is a root of 1 - 5x + 7x^2 - 4x^3",
                       "1 - 5x + 7x^2 - 4x^3 at x = 1 equals " + at_one.str(), res, detail::judge(res)});
    }
    {
        // The numerator x(1-x)^3 and its first two derivatives vanish at 1.
        IntPolynomial q = gf.numerator;
        unsigned order = 0;
        auto at_one = [](const IntPolynomial& p) {
            BigInt s = 0;
            for (const auto& c : p.coefficients()) s += c;
            return s;
        };
        while (!q.is_zero() && at_one(q) == 0) {
            ++order;
            q = q.derivative();
        }
        const double res = std::abs(static_cast<double>(order) - 3.0);
        out.push_back({"x(1-x)^3 vanishes to order 3 at x = 1",
                       "vanishing order at x = 1 is " + std::to_string(order), res, detail::judge(res)});
    }
    for (int sign : {+1, -1}) {
        const detail::SqrtMinus7 x{detail::Rational(3, 8), detail::Rational(sign, 8)};
        const auto value = detail::evaluate(den, x);
        const detail::Rational norm2 = value.norm();
        const double res = std::sqrt(static_cast<double>(norm2));
        const std::string where = sign > 0 ? "(3 + i sqrt(7))/8" : "(3 - i sqrt(7))/8";
        out.push_back({"x = " + where + " is a root of 1 - 5x + 7x^2 - 4x^3",
                       "|1 - 5x + 7x^2 - 4x^3|^2 at x = " + where + " equals " + detail::rational_text(norm2),
                       res, detail::judge(res)});
    }

    const auto roots = denominator_roots();
    const double rho = std::abs(roots.front().value);
    {
        const double res = std::abs(rho - 0.5);
        out.push_back({"dominant singularities of G have modulus 1/2",
                       "smallest root modulus is " + std::to_string(rho), res, detail::judge(res)});
    }
    {
        const double growth = 1.0 / rho;
        const double res = std::abs(growth - 2.0);
        out.push_back({"S(N) ~ A * 2^N * cos(N*theta + phi): exponential base 2",
                       "1/|dominant root| is " + std::to_string(growth), res, detail::judge(res)});
    }
    {
        const double theta = std::atan(std::sqrt(7.0) / 3.0);
        const double arg = std::abs(std::arg(roots.front().value));
        const double res = std::abs(theta - arg);
        out.push_back({"S(N) ~ A * 2^N * cos(N*theta + phi): theta = arctan(sqrt(7)/3)",
                       "argument of dominant root is " + std::to_string(arg), res, detail::judge(res)});
    }
    {
        const auto s = count_by_linear_recurrence(201);
        const long double ratio = growth_ratio_estimate(s, 200).to_long_double();
        const double res = static_cast<double>(std::abs(ratio - 2.0L));
        out.push_back({"S(N+1)/S(N) approaches 2", "S(201)/S(200) is " + growth_ratio_estimate(s, 200, 12).to_string(),
                       res, detail::judge(res)});
    }
    return out;
}

struct RatioRow {
    unsigned n = 0;
    DecimalApprox ratio;
    long double error = 0;  // |ratio - growth constant|
};

struct AsymptoticReport {
    std::vector<Root> roots;
    Root dominant_root;
    long double growth_constant = 0;
    std::string growth_constant_digits;
    ResidueConstants residue;
    std::vector<RatioRow> ratios;
    std::vector<ClaimCheck> claims;
};

/// Ratio rows at n = 1, 2, 5, 10, 20, 50, 100, 200, ... up to `terms`.
inline AsymptoticReport asymptotic_report(unsigned terms, unsigned digits) {
    constexpr unsigned kRatioDigits = 120;
    require_positive(terms, "asymptotic_report");
    AsymptoticReport rep;
    rep.roots = denominator_roots();
    rep.dominant_root = rep.roots.front();
    rep.growth_constant = 1.0L / std::abs(ComplexLD(rep.dominant_root.value));
    rep.growth_constant_digits = growth_constant_text(digits);
    rep.residue = residue_constants(row_convex_gf());
    const auto s = count_by_linear_recurrence(terms + 1);
    for (unsigned base = 1; base <= terms; base *= 10) {
        for (unsigned k : {1U, 2U, 5U}) {
            const unsigned n = base * k;
            if (n > terms) break;
            const auto r = growth_ratio_estimate(s, n, kRatioDigits);
            rep.ratios.push_back({n, r, ratio_error(r)});
        }
    }
    if (rep.ratios.empty() || rep.ratios.back().n != terms) {
        const auto r = growth_ratio_estimate(s, terms, kRatioDigits);
        rep.ratios.push_back({terms, r, ratio_error(r)});
    }
    rep.claims = verify_asymptotic_claims();
    return rep;
}

struct BoundsReport {
    unsigned n = 0;
    BigInt lower;
    BigInt upper;
    std::optional<BigInt> exact;
};

/// ceil(S(n)/2) <= D(n) <= sum over compositions of prod (a_i + a_{i+1});
/// D(n) filled from the oracle when n is within its limit.
inline BoundsReport reflection_bounds(long long n, const Limits& limits = {}) {
    detail::check_exponential_limit("reflection bounds", n, limits);
    BoundsReport rep;
    rep.n = static_cast<unsigned>(n);
    const BigInt s = count_by_transfer_dp(n).series.at(rep.n);
    rep.lower = (s + 1) / 2;
    rep.upper = detail::sum_over_compositions(rep.n, 1, 1);
    if (n <= static_cast<long long>(limits.oracle)) {
        rep.exact = count_distinct_up_to_reflection(n, limits).distinct;
    }
    return rep;
}

}  // namespace rowconvex

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rowconvex {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when a request exceeds a configured work ceiling (exponential
/// methods, brute-force oracle). The message names the ceiling.
class resource_limit_error : public std::runtime_error {
public:
    resource_limit_error(const std::string& what_for, unsigned requested, unsigned limit)
        : std::runtime_error(what_for + ": n = " + std::to_string(requested) +
                             " exceeds limit " + std::to_string(limit)),
          requested_(requested), limit_(limit) {}

    unsigned requested() const noexcept { return requested_; }
    unsigned limit() const noexcept { return limit_; }

private:
    unsigned requested_;
    unsigned limit_;
};

/// A numerical routine did not reach its accuracy target.
class numerical_failure : public std::runtime_error {
public:
    numerical_failure(const std::string& what, double achieved)
        : std::runtime_error(what + " (achieved residual " + std::to_string(achieved) + ")"),
          achieved_(achieved) {}

    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

class unsupported_case : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Work ceilings for the exponential-time methods.
struct Limits {
    unsigned exponential = 24;  // partition formula, composition sum, bounds
    unsigned oracle = 12;       // exhaustive lattice-animal search
};

inline void require_positive(long long n, const char* what) {
    if (n < 1) {
        throw std::invalid_argument(std::string(what) + ": n must be >= 1, got " +
                                    std::to_string(n));
    }
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace rowconvex

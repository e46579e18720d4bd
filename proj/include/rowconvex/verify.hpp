#pragma once

// Self-check suite: reference values, agreement between counting methods,
// the brute-force oracle, and the algebraic identities behind them.

#include <algorithm>
#include <string>
#include <vector>

#include "common.hpp"
#include "core.hpp"
#include "enumerate.hpp"
#include "genfunc.hpp"
#include "oracle.hpp"
#include "reference.hpp"

namespace rowconvex {

enum class CheckStatus { pass, fail, skip };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "PASS";
        case CheckStatus::fail: return "FAIL";
        case CheckStatus::skip: return "SKIP";
    }
    return "?";
}

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
};

struct VerifyOptions {
    Limits limits;
    unsigned exponential_cap = 22;
    unsigned transfer_cap = 50;
    ReferenceTable reference;
};

inline bool all_passed(const std::vector<CheckResult>& results) {
    return std::none_of(results.begin(), results.end(),
                        [](const CheckResult& r) { return r.status == CheckStatus::fail; });
}

inline std::vector<CheckResult> run_verification(unsigned n_max, const VerifyOptions& opt = {}) {
    require_positive(n_max, "verify");
    std::vector<CheckResult> out;
    const auto dp = count_by_transfer_dp(n_max).series;
    const auto rec = count_by_linear_recurrence(n_max);
    const auto gf = series_expand(row_convex_gf(), n_max);

    auto mismatch = [](const std::string& what, unsigned n, const BigInt& expected, const BigInt& actual) {
        return what + " at N = " + std::to_string(n) + ": expected " + expected.str() + ", actual " +
               actual.str();
    };

    {
        CheckResult r{"reference table", CheckStatus::pass, ""};
        unsigned checked = 0;
        for (const auto& [n, value] : opt.reference.values) {
            if (n > n_max) continue;
            ++checked;
            if (dp.at(n) != value) {
                r.status = CheckStatus::fail;
                r.detail = mismatch("reference", n, value, dp.at(n));
                break;
            }
        }
        if (r.status == CheckStatus::pass) r.detail = "N = 1.." + std::to_string(checked);
        out.push_back(r);
    }
    {
        CheckResult r{"dp = recurrence = gf", CheckStatus::pass, "N = 1.." + std::to_string(n_max)};
        for (unsigned n = 1; n <= n_max; ++n) {
            if (dp.at(n) != rec.at(n)) {
                r = {r.name, CheckStatus::fail, mismatch("recurrence", n, dp.at(n), rec.at(n))};
                break;
            }
            if (dp.at(n) != gf[n]) {
                r = {r.name, CheckStatus::fail, mismatch("gf", n, dp.at(n), gf[n])};
                break;
            }
        }
        out.push_back(r);
    }
    {
        const unsigned top = std::min({n_max, opt.exponential_cap, opt.limits.exponential});
        CheckResult r{"partition formula = composition sum = dp", CheckStatus::pass,
                      "N = 1.." + std::to_string(top)};
        for (unsigned n = 1; n <= top; ++n) {
            const BigInt pf = count_by_partition_formula(n, opt.limits);
            const BigInt cs = count_by_composition_sum(n, opt.limits);
            if (pf != dp.at(n)) {
                r = {r.name, CheckStatus::fail, mismatch("partition formula", n, dp.at(n), pf)};
                break;
            }
            if (cs != dp.at(n)) {
                r = {r.name, CheckStatus::fail, mismatch("composition sum", n, dp.at(n), cs)};
                break;
            }
        }
        out.push_back(r);
    }
    {
        const unsigned top = std::min(n_max, opt.limits.oracle);
        CheckResult r{"oracle = dp", CheckStatus::pass, "N = 1.." + std::to_string(top)};
        for (unsigned n = 1; n <= top; ++n) {
            const BigInt o = count_row_convex_oracle(n, opt.limits);
            if (o != dp.at(n)) {
                r = {r.name, CheckStatus::fail, mismatch("oracle", n, dp.at(n), o)};
                break;
            }
        }
        out.push_back(r);
    }
    if (n_max < 5) {
        out.push_back({"recurrence residual", CheckStatus::skip, "needs N >= 5"});
    } else {
        CheckResult r{"recurrence residual", CheckStatus::pass, "N = 5.." + std::to_string(n_max)};
        for (unsigned n = 5; n <= n_max; ++n) {
            const BigInt res = dp.recurrence_residual(n);
            if (res != 0) {
                r = {r.name, CheckStatus::fail, mismatch("residual", n, 0, res)};
                break;
            }
        }
        out.push_back(r);
    }
    {
        const unsigned top = std::min(n_max, opt.exponential_cap);
        CheckResult r{"sum of permutation factors = 2^(N-1)", CheckStatus::pass, "N = 1.." + std::to_string(top)};
        for (unsigned n = 1; n <= top; ++n) {
            BigInt sum = 0;
            for (const auto& p : generate_partitions(n)) sum += permutation_factor(p);
            const BigInt expected = BigInt(1) << (n - 1);
            if (sum != expected) {
                r = {r.name, CheckStatus::fail, mismatch("sum of permutation factors", n, expected, sum)};
                break;
            }
        }
        out.push_back(r);
    }
    {
        const unsigned order = std::min(n_max, opt.transfer_cap);
        const auto rep = verify_transfer_identities(order, order);
        CheckResult r{"transfer identities", rep.all_hold() ? CheckStatus::pass : CheckStatus::fail,
                      "mod x^" + std::to_string(order + 1)};
        if (!rep.all_hold()) r.detail += ": " + rep.failures.front();
        out.push_back(r);
    }
    return out;
}

}  // namespace rowconvex

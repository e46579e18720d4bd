#pragma once

// Text and JSON renderings of count tables and analysis reports. JSON
// carries big integers as decimal strings.

#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

#include "analysis.hpp"
#include "enumerate.hpp"

namespace rowconvex {

namespace detail {

inline std::string fixed(long double v, int decimals) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.*Lf", decimals, v);
    return buf;
}

inline std::string sci(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3Le", v);
    return buf;
}

inline std::string complex_text(Complex z) {
    const std::string sign = z.imag() < 0 ? " - " : " + ";
    return fixed(z.real(), 15) + sign + fixed(std::abs(z.imag()), 15) + "i";
}

}  // namespace detail

inline nlohmann::json table_json(const CountSeries& s) {
    auto arr = nlohmann::json::array();
    for (unsigned n = 1; n <= s.n_max(); ++n) arr.push_back({{"n", n}, {"s", s.at(n).str()}});
    return arr;
}

inline std::string table_csv(const CountSeries& s) {
    std::string out = "N,S_N\n";
    for (unsigned n = 1; n <= s.n_max(); ++n) out += std::to_string(n) + "," + s.at(n).str() + "\n";
    return out;
}

inline std::string table_plain(const CountSeries& s) {
    const std::size_t wn = std::max<std::size_t>(1, std::to_string(s.n_max()).size());
    const std::size_t ws = std::max<std::size_t>(4, s.at(s.n_max()).str().size());
    auto pad = [](const std::string& v, std::size_t w) { return std::string(w - std::min(w, v.size()), ' ') + v; };
    std::string out = pad("N", wn) + "  " + pad("S(N)", ws) + "\n";
    for (unsigned n = 1; n <= s.n_max(); ++n) out += pad(std::to_string(n), wn) + "  " + pad(s.at(n).str(), ws) + "\n";
    return out;
}

inline nlohmann::json root_json(const Root& r) {
    return {{"re", r.value.real()}, {"im", r.value.imag()}, {"residual", r.residual}, {"multiplicity", r.multiplicity}};
}

inline nlohmann::json to_json(const AsymptoticReport& rep) {
    nlohmann::json j;
    j["roots"] = nlohmann::json::array();
    for (const auto& r : rep.roots) j["roots"].push_back(root_json(r));
    j["dominant_root"] = root_json(rep.dominant_root);
    j["growth_constant"] = rep.growth_constant_digits;
    if (rep.residue.oscillating) {
        j["leading_term"] = {{"form", "amplitude * growth^N * cos(N * angle + phase)"},
                             {"growth", static_cast<double>(rep.residue.growth)},
                             {"amplitude", static_cast<double>(rep.residue.amplitude)},
                             {"angle", static_cast<double>(rep.residue.angle)},
                             {"phase", static_cast<double>(rep.residue.phase)}};
    } else {
        j["leading_term"] = {{"form", "constant * growth^N"},
                             {"growth", static_cast<double>(rep.residue.growth)},
                             {"constant", static_cast<double>(rep.residue.constant)}};
    }
    j["ratios"] = nlohmann::json::array();
    for (const auto& row : rep.ratios) {
        j["ratios"].push_back(
            {{"n", row.n}, {"ratio", row.ratio.to_string()}, {"error", static_cast<double>(row.error)}});
    }
    j["claims"] = nlohmann::json::array();
    for (const auto& c : rep.claims) {
        j["claims"].push_back({{"claim", c.claim},
                               {"computed", c.computed},
                               {"residual", c.residual},
                               {"verdict", to_string(c.verdict)}});
    }
    return j;
}

inline std::string to_text(const AsymptoticReport& rep, unsigned ratio_digits = 12) {
    std::string out = "roots of 1 - 5x + 7x^2 - 4x^3:\n";
    for (const auto& r : rep.roots) {
        out += "  x = " + detail::complex_text(r.value) + "   |x| = " + detail::fixed(std::abs(r.value), 15) +
               "   residual " + detail::sci(r.residual) + "   multiplicity " + std::to_string(r.multiplicity) + "\n";
    }
    out += "dominant root: " + detail::complex_text(rep.dominant_root.value) + "\n";
    out += "growth constant 1/|x0|: " + rep.growth_constant_digits + "\n";
    if (rep.residue.oscillating) {
        out += "leading term: S(N) ~ " + detail::sci(rep.residue.amplitude) + " * " +
               detail::fixed(rep.residue.growth, 12) + "^N * cos(N * " + detail::fixed(rep.residue.angle, 12) +
               " + " + detail::fixed(rep.residue.phase, 12) + ")\n";
    } else {
        out += "leading term: S(N) ~ " + detail::fixed(rep.residue.constant, 15) + " * " +
               detail::fixed(rep.residue.growth, 15) + "^N\n";
    }
    out += "ratio S(N+1)/S(N):\n";
    for (const auto& row : rep.ratios) {
        DecimalApprox shown = row.ratio;
        shown.scaled /= boost::multiprecision::pow(BigInt(10), shown.digits - std::min(shown.digits, ratio_digits));
        shown.digits = std::min(shown.digits, ratio_digits);
        char buf[32];
        std::snprintf(buf, sizeof buf, "%6u", row.n);
        out += std::string("  N = ") + buf + "   " + shown.to_string() + "   error " + detail::sci(row.error) + "\n";
    }
    out += "claim checks:\n";
    for (const auto& c : rep.claims) {
        out += std::string("  [") + to_string(c.verdict) + "] " + c.claim + "\n      computed: " + c.computed +
               "   residual " + detail::sci(c.residual) + "\n";
    }
    return out;
}

inline nlohmann::json to_json(const BoundsReport& rep) {
    nlohmann::json j{{"n", rep.n}, {"lower", rep.lower.str()}, {"upper", rep.upper.str()}};
    j["exact"] = rep.exact ? nlohmann::json(rep.exact->str()) : nlohmann::json(nullptr);
    return j;
}

inline std::string to_text(const BoundsReport& rep) {
    std::string out = "n = " + std::to_string(rep.n) + "\n";
    out += "lower = " + rep.lower.str() + "\n";
    out += "exact = " + (rep.exact ? rep.exact->str() : std::string("n/a")) + "\n";
    out += "upper = " + rep.upper.str() + "\n";
    return out;
}

}  // namespace rowconvex

#pragma once

// Command-line front end. run() takes explicit streams so tests can drive
// it in-process.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rowconvex/rowconvex.hpp"

namespace rowconvex::cli {

struct Streams {
    std::ostream& out;
    std::ostream& err;
};

inline BigInt count_with(const std::string& method, long long n, const Limits& limits, unsigned threads) {
    if (method == "partition") return count_by_partition_formula(n, limits);
    if (method == "sorted-product") return count_by_sorted_partition_product(n, limits);
    if (method == "composition") return count_by_composition_sum(n, limits, threads);
    if (method == "dp") return count_by_transfer_dp(n).series.at(static_cast<unsigned>(n));
    if (method == "recurrence") return count_by_linear_recurrence(n).at(static_cast<unsigned>(n));
    if (method == "gf") {
        require_positive(n, "gf");
        return series_expand(row_convex_gf(), static_cast<unsigned>(n))[static_cast<std::size_t>(n)];
    }
    if (method == "oracle") return count_row_convex_oracle(n, limits);
    throw std::invalid_argument("unknown method '" + method + "'");
}

inline bool write_output(const std::string& path, const std::string& text, Streams io) {
    if (path.empty() || path == "-") {
        io.out << text;
        return static_cast<bool>(io.out);
    }
    std::ofstream f(path, std::ios::binary);
    f << text;
    f.close();
    if (!f) {
        io.err << "error: cannot write " << path << "\n";
        return false;
    }
    return true;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    Streams io{out, err};
    CLI::App app{"Exact enumeration of row-convex polyominoes by area", "rowconvex"};
    app.require_subcommand(1);

    Limits limits;
    auto add_limit_options = [&](CLI::App* sub) {
        sub->add_option("--limit", limits.exponential, "Ceiling for the exponential methods")->capture_default_str();
        sub->add_option("--oracle-limit", limits.oracle, "Ceiling for the brute-force oracle")->capture_default_str();
    };

    // count
    long long count_n = 0;
    std::string method = "dp";
    unsigned threads = 1;
    bool debug = false;
    std::string dump_path;
    auto* count = app.add_subcommand("count", "Print S(n)");
    count->add_option("n", count_n, "Area")->required();
    count->add_option("--method", method, "partition | composition | dp | recurrence | gf | oracle")
        ->check(CLI::IsMember({"partition", "composition", "dp", "recurrence", "gf", "oracle", "sorted-product"}))
        ->capture_default_str();
    count->add_option("--threads", threads, "Workers for the composition sum")->capture_default_str();
    count->add_flag("--debug", debug, "Allow diagnostic methods (sorted-product)");
    count->add_option("--dump", dump_path, "With --method oracle: write the row-convex shapes as text art");
    add_limit_options(count);

    // table
    unsigned table_to = 12;
    std::string format = "plain";
    std::string output;
    auto* table = app.add_subcommand("table", "Print S(1..N)");
    table->add_option("--to", table_to, "Largest N")->capture_default_str();
    table->add_option("--format", format, "csv | json | plain")
        ->check(CLI::IsMember({"csv", "json", "plain"}))
        ->capture_default_str();
    table->add_option("--output", output, "Write to a file instead of stdout");

    // verify
    unsigned verify_to = 12;
    std::vector<std::string> injections;
    auto* verify = app.add_subcommand("verify", "Cross-check all methods, the oracle and the identities");
    verify->add_option("--to", verify_to, "Largest N")->capture_default_str();
    verify->add_option("--inject-reference", injections, "Override a reference value, N=VALUE (fault injection)")
        ->group("");
    add_limit_options(verify);

    // bounds
    long long bounds_n = 0;
    std::string bounds_format = "text";
    auto* bounds = app.add_subcommand("bounds", "Reflection bounds on the count of mirror classes");
    bounds->add_option("n", bounds_n, "Area")->required();
    bounds->add_option("--format", bounds_format, "text | json")->check(CLI::IsMember({"text", "json"}));
    add_limit_options(bounds);

    // asymptotics
    unsigned terms = 200;
    unsigned digits = 10;
    std::string asym_format = "text";
    auto* asym = app.add_subcommand("asymptotics", "Singularity analysis and claim checks");
    asym->add_option("--terms", terms, "Largest N in the ratio table")->capture_default_str();
    asym->add_option("--digits", digits, "Digits of the growth constant")
        ->check(CLI::Range(1U, 120U))
        ->capture_default_str();
    asym->add_option("--format", asym_format, "text | json")->check(CLI::IsMember({"text", "json"}));

    // gf
    unsigned order = 12;
    auto* gf = app.add_subcommand("gf", "Coefficients of the generating function through x^order");
    gf->add_option("--order", order, "Truncation order")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, io.out, io.err);
    }

    try {
        if (count->parsed()) {
            if (method == "sorted-product" && !debug) {
                io.err << "error: method 'sorted-product' requires --debug\n";
                return 2;
            }
            io.out << count_with(method, count_n, limits, threads).str() << "\n";
            if (!dump_path.empty()) {
                if (method != "oracle") {
                    io.err << "error: --dump requires --method oracle\n";
                    return 2;
                }
                if (!write_output(dump_path, dump_row_convex_shapes(count_n, limits), io)) return 1;
            }
            return 0;
        }
        if (table->parsed()) {
            require_positive(table_to, "table");
            const CountSeries s = count_by_transfer_dp(table_to).series;
            std::string text;
            if (format == "csv") {
                text = table_csv(s);
            } else if (format == "json") {
                text = table_json(s).dump() + "\n";
            } else {
                text = table_plain(s);
            }
            return write_output(output, text, io) ? 0 : 1;
        }
        if (verify->parsed()) {
            VerifyOptions opt;
            opt.limits = limits;
            for (const auto& inj : injections) {
                const auto eq = inj.find('=');
                if (eq == std::string::npos) throw std::invalid_argument("--inject-reference expects N=VALUE");
                const unsigned n = static_cast<unsigned>(std::stoul(inj.substr(0, eq)));
                for (auto& [key, value] : opt.reference.values) {
                    if (key == n) value = std::stoull(inj.substr(eq + 1));
                }
            }
            const auto results = run_verification(verify_to, opt);
            unsigned failed = 0;
            for (const auto& r : results) {
                io.out << to_string(r.status) << "  " << r.name << "  (" << r.detail << ")\n";
                failed += r.status == CheckStatus::fail;
            }
            io.out << (failed == 0 ? std::string("all checks passed")
                                   : std::to_string(failed) + " check(s) failed")
                   << "\n";
            return failed == 0 ? 0 : 1;
        }
        if (bounds->parsed()) {
            const auto rep = reflection_bounds(bounds_n, limits);
            io.out << (bounds_format == "json" ? to_json(rep).dump() + "\n" : to_text(rep));
            return 0;
        }
        if (asym->parsed()) {
            const auto rep = asymptotic_report(terms, digits);
            io.out << (asym_format == "json" ? to_json(rep).dump(2) + "\n" : to_text(rep));
            return 0;
        }
        if (gf->parsed()) {
            const auto s = series_expand(row_convex_gf(), order);
            std::string line;
            for (const auto& c : s.coefficients()) line += (line.empty() ? "" : " ") + c.str();
            io.out << line << "\n";
            return 0;
        }
    } catch (const resource_limit_error& e) {
        io.err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        io.err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace rowconvex::cli

#ifndef CATWALK_TOOLS_CLI_HPP
#define CATWALK_TOOLS_CLI_HPP

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include <catwalk/catwalk.hpp>

#include "json_io.hpp"

namespace catwalk::cli
{

enum exit_code : int {
    ok = 0,
    verification_failed = 1,
    bad_input = 2,
    over_limit = 3,
};

// Coefficient extraction is not exhaustive; this only keeps it interactive.
inline constexpr std::size_t max_series_order = 64;

struct Limits {
    std::size_t walks = default_max_walk_length;
    std::size_t exhaustive = default_max_exhaustive;
};

// CATWALK_MAX_N replaces both safety defaults.
inline Limits read_limits()
{
    Limits lim;
    const char *env = std::getenv("CATWALK_MAX_N");
    if (!env || !*env) return lim;
    const std::string s(env);
    if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6) {
        throw invalid_input("CATWALK_MAX_N must be a nonnegative integer, got \"" + s + "\"");
    }
    lim.walks = lim.exhaustive = static_cast<std::size_t>(std::stoul(s));
    return lim;
}

namespace detail
{

inline bool is_motzkin_class(const std::string &c) { return c == "T" || c == "M"; }

inline MClass motzkin_class(const std::string &c) { return c == "M" ? MClass::M : MClass::T; }

inline WalkClass walk_class(const std::string &c)
{
    auto wc = parse_walk_class(c);
    if (!wc) throw invalid_input("unknown class: " + c);
    return *wc;
}

template <typename Key>
void print_histogram(std::ostream &out, const std::map<Key, std::size_t> &h)
{
    for (const auto &[k, v] : h) {
        if constexpr (std::is_same_v<Key, StepStats>) {
            out << k.d << ' ' << k.l << ' ' << k.r << ' ' << v << '\n';
        } else {
            out << k << ' ' << v << '\n';
        }
    }
}

inline void enumerate_cmd(std::ostream &out, const std::string &cls, std::size_t n, bool as_json, const Limits &lim)
{
    if (is_motzkin_class(cls)) {
        for (const auto &d : enumerate_decorated(motzkin_class(cls), n, lim.walks)) {
            out << (as_json ? json_io::to_json(d).dump() : to_text(d)) << '\n';
        }
        return;
    }
    for_each_walk(
        walk_class(cls), n, [&](const Walk &w) { out << (as_json ? json_io::to_json(w).dump() : to_text(w)) << '\n'; },
        lim.walks);
}

inline void count_cmd(std::ostream &out, const std::string &cls, std::size_t n, const std::string &by, const Limits &lim)
{
    if (is_motzkin_class(cls)) {
        const auto all = enumerate_decorated(motzkin_class(cls), n, lim.walks);
        if (by.empty()) {
            out << all.size() << '\n';
            return;
        }
        if (by != "unary") throw invalid_input("--by-stats " + by + " is not defined for class " + cls);
        std::map<std::size_t, std::size_t> h;
        for (const auto &d : all) ++h[zero_steps(d)];
        print_histogram(out, h);
        return;
    }
    const auto wc = walk_class(cls);
    if (by.empty()) {
        out << count_walks(wc, n, lim.walks) << '\n';
        return;
    }
    if (by == "parity") {
        if (wc != WalkClass::A && wc != WalkClass::C) {
            throw invalid_input("--by-stats parity needs walks from 0 to 0 (class A or C)");
        }
        std::map<StepStats, std::size_t> h;
        for_each_walk(wc, n, [&](const Walk &w) { ++h[step_stats(w)]; }, lim.walks);
        print_histogram(out, h);
        return;
    }
    std::map<std::size_t, std::size_t> h;
    if (by == "staggered") {
        for_each_walk(wc, n, [&](const Walk &w) { ++h[staggered_count(w)]; }, lim.walks);
    } else if (by == "unary") {
        if (wc != WalkClass::G) throw invalid_input("--by-stats unary needs class G, T or M");
        for_each_walk(wc, n, [&](const Walk &g) { ++h[unary_count(g_to_labeled_tree(g).shape)]; }, lim.walks);
    } else {
        throw invalid_input("unknown statistic: " + by);
    }
    print_histogram(out, h);
}

inline std::string map_line(const std::string &mode, const std::string &line, bool as_json)
{
    auto emit = [&](const auto &v) { return as_json ? json_io::to_json(v).dump() : to_text(v); };
    if (mode == "c2tree") return emit(walk_to_tree(parse_walk(line)));
    if (mode == "tree2c") return emit(tree_to_walk(parse_binary_tree(line)));
    if (mode == "g2tree") return emit(g_to_labeled_tree(parse_walk(line)));
    if (mode == "tree2g") return emit(labeled_tree_to_g(parse_labeled_tree(line)));
    if (mode == "tree2motzkin") return emit(tree_to_motzkin(parse_labeled_tree(line)));
    if (mode == "motzkin2tree") return emit(motzkin_to_tree(parse_decorated(line)));
    throw invalid_input("unknown map mode: " + mode);
}

// Blank lines are skipped; the first bad line stops the stream.
inline int map_cmd(std::istream &in, std::ostream &out, std::ostream &err, const std::string &mode, bool as_json)
{
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out << map_line(mode, line, as_json) << '\n';
        } catch (const invalid_input &e) {
            out.flush();
            err << "line " << lineno << ": " << e.what() << '\n';
            return bad_input;
        }
    }
    return ok;
}

inline void coeffs_cmd(std::ostream &out, const std::string &name, std::size_t order, bool bivariate)
{
    if (order > max_series_order) throw resource_limit("series order", order, max_series_order);
    const auto sys = solve_system(order, bivariate);
    const Series2 &s = sys.get(name);
    for (std::size_t n = 0; n <= order; ++n) {
        const auto &row = s.row(n);
        if (!bivariate || name == "catalan" || name == "C") {
            out << n << " 0 " << s.coeff(n, 0).str() << '\n';
            continue;
        }
        for (std::size_t m = 0; m < row.size(); ++m) {
            if (row[m] != 0) out << n << ' ' << m << ' ' << row[m].str() << '\n';
        }
    }
}

inline int verify_cmd(std::ostream &out, const std::string &suite, std::size_t max_n, const Limits &lim)
{
    if (max_n > lim.exhaustive) throw resource_limit("verify --max-n", max_n, lim.exhaustive);
    std::size_t passed = 0;
    const auto results = verify::run_suite(suite, max_n);
    for (const auto &r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
        passed += r.passed;
    }
    out << passed << '/' << results.size() << " checks passed\n";
    return passed == results.size() ? ok : verification_failed;
}

} // namespace detail

inline int run(std::vector<std::string> args, std::istream &in, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact enumeration and bijections for basketball walks", "catwalk"};
    app.require_subcommand(1);

    std::string cls, by, mode, series, suite;
    std::size_t length = 0, order = 0;
    std::size_t max_n = 0;
    bool as_json = false, bivariate = false;

    const std::vector<std::string> classes{"A", "B", "C", "G", "T", "M"};

    auto *en = app.add_subcommand("enumerate", "List the walks of a class in canonical order");
    en->add_option("--class", cls)->required()->check(CLI::IsMember(classes));
    en->add_option("--length", length)->required();
    en->add_flag("--json", as_json);

    auto *co = app.add_subcommand("count", "Count walks, optionally by statistic");
    co->add_option("--class", cls)->required()->check(CLI::IsMember(classes));
    co->add_option("--length", length)->required();
    co->add_option("--by-stats", by)->check(CLI::IsMember({"parity", "staggered", "unary"}));

    auto *ma = app.add_subcommand("map", "Convert stdin to stdout, one object per line");
    ma->add_option("--mode", mode)
        ->required()
        ->check(CLI::IsMember({"c2tree", "tree2c", "g2tree", "tree2g", "tree2motzkin", "motzkin2tree"}));
    ma->add_flag("--json", as_json);

    auto *cf = app.add_subcommand("coeffs", "Print series coefficients as 'n m value'");
    cf->add_option("--series", series)->required()->check(CLI::IsMember({"A", "B", "C", "G", "M", "T", "catalan"}));
    cf->add_option("--order", order)->required();
    cf->add_flag("--bivariate", bivariate);

    auto *ve = app.add_subcommand("verify", "Run property suites");
    ve->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"catalan", "stats", "unary", "excursions", "roundtrip", "series", "all"}));
    auto *max_opt = ve->add_option("--max-n", max_n);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError &e) {
        err << e.what() << '\n';
        return bad_input;
    }

    try {
        const Limits lim = read_limits();
        if (*en) {
            detail::enumerate_cmd(out, cls, length, as_json, lim);
        } else if (*co) {
            detail::count_cmd(out, cls, length, by, lim);
        } else if (*ma) {
            return detail::map_cmd(in, out, err, mode, as_json);
        } else if (*cf) {
            detail::coeffs_cmd(out, series, order, bivariate);
        } else if (*ve) {
            return detail::verify_cmd(out, suite, max_opt->count() ? max_n : lim.exhaustive, lim);
        }
    } catch (const resource_limit &e) {
        err << e.what() << " (raise it with CATWALK_MAX_N)\n";
        return over_limit;
    } catch (const invalid_input &e) {
        err << e.what() << '\n';
        return bad_input;
    } catch (const internal_error &e) {
        err << "internal error: " << e.what() << '\n';
        return verification_failed;
    }
    return ok;
}

} // namespace catwalk::cli

#endif

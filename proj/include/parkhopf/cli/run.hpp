#ifndef PARKHOPF_CLI_RUN_HPP
#define PARKHOPF_CLI_RUN_HPP

#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <parkhopf/chars/characters.hpp>
#include <parkhopf/chars/narayana.hpp>
#include <parkhopf/chars/paths.hpp>
#include <parkhopf/chars/signed.hpp>
#include <parkhopf/cli/suites.hpp>
#include <parkhopf/combinat/enumerate.hpp>
#include <parkhopf/combinat/text.hpp>
#include <parkhopf/io/json.hpp>
#include <parkhopf/lagrange/bijection.hpp>
#include <parkhopf/lagrange/bilinear.hpp>
#include <parkhopf/lagrange/series.hpp>

namespace parkhopf::cli
{

enum Exit { exit_ok = 0, exit_failure = 1, exit_usage = 2 };

// Thrown for well-formed requests that exceed the configured size cap.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int max_n_from_env()
{
    const char *raw = std::getenv("PARKHOPF_MAX_N");
    if (raw == nullptr || *raw == '\0') {
        return 8;
    }
    try {
        std::size_t used = 0;
        const int v = std::stoi(raw, &used);
        if (used == std::string(raw).size() && v >= 0) {
            return v;
        }
    } catch (const std::exception &) {
    }
    throw UsageError("PARKHOPF_MAX_N must be a non-negative integer");
}

inline void require_size(int n, int cap, const std::string &option)
{
    if (n < 0) {
        throw UsageError(option + " must be non-negative");
    }
    if (n > cap) {
        throw UsageError(option + " = " + std::to_string(n) + " exceeds PARKHOPF_MAX_N = " + std::to_string(cap));
    }
}

namespace detail
{

template <typename T, typename F>
std::vector<std::string> render(const std::vector<T> &items, F f)
{
    std::vector<std::string> out;
    out.reserve(items.size());
    for (const auto &x : items) {
        out.push_back(f(x));
    }
    return out;
}

inline std::vector<std::string> family_items(const std::string &family, int n)
{
    const auto word = [](const auto &w) { return to_string(w); };
    if (family == "pf") {
        return render(enumerate_parking(n), word);
    }
    if (family == "ndpf") {
        return render(enumerate_ndpf(n), word);
    }
    if (family == "qribbon") {
        return render(enumerate_quasi_ribbons(n), word);
    }
    if (family == "packed") {
        return render(enumerate_packed(n), word);
    }
    if (family == "perm") {
        return render(enumerate_permutations(n), word);
    }
    if (family == "signed-pf") {
        return render(chars::enumerate_signed_pf(n), [](const auto &s) { return chars::to_string(s); });
    }
    if (family == "dyck") {
        return render(chars::enumerate_dyck(n), [](const auto &p) { return p.steps(); });
    }
    if (family == "schroder") {
        return render(chars::enumerate_schroder(n), [](const auto &p) { return p.steps(); });
    }
    return render(enumerate_binary_trees(n), word);
}

inline std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (auto c : s) {
        if (c == '"') {
            out.push_back('"');
        }
        out.push_back(c);
    }
    return out + "\"";
}

inline std::string join(const std::vector<Rational> &v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i > 0 ? "," : "") + v[i].get_str();
    }
    return s;
}

inline io::Json rows_json(const std::vector<std::pair<int, std::vector<Rational>>> &rows)
{
    io::Json out = io::Json::array();
    for (const auto &[n, row] : rows) {
        io::Json coeffs = io::Json::array();
        for (const auto &c : row) {
            coeffs.push_back(c.get_str());
        }
        out.push_back({{"n", n}, {"coefficients", coeffs}});
    }
    return out;
}

} // namespace detail

inline int cmd_enumerate(const std::string &family, int n, const std::string &format, int cap, std::ostream &out)
{
    require_size(n, cap, "--n");
    const auto items = detail::family_items(family, n);
    if (format == "json") {
        io::Json j{{"schema", io::schema}, {"family", family}, {"n", n}, {"count", items.size()}, {"items", items}};
        out << j.dump(2) << '\n';
    } else if (format == "csv") {
        out << "index,item\n";
        for (std::size_t i = 0; i < items.size(); ++i) {
            out << i << ',' << detail::csv_field(items[i]) << '\n';
        }
    } else {
        for (const auto &s : items) {
            out << s << '\n';
        }
    }
    return exit_ok;
}

inline int cmd_series(const std::string &which, int degree, int cap, std::ostream &out)
{
    require_size(degree, cap, "--degree");
    io::Json components = io::Json::array();
    const auto add = [&](int d, io::Json element) { components.push_back({{"degree", d}, {"element", std::move(element)}}); };
    if (which == "g" || which == "f") {
        const auto s = which == "g" ? lagrange::solve_g(degree) : lagrange::solve_f(degree);
        for (int d = 0; d <= degree; ++d) {
            add(d, io::element_json(s[static_cast<std::size_t>(d)]));
        }
    } else if (which == "G") {
        const auto s = lagrange::solve_G_cqsym(degree);
        for (int d = 0; d <= degree; ++d) {
            add(d, io::element_json("P", s[static_cast<std::size_t>(d)]));
        }
    } else {
        const auto s = lagrange::solve_X_fqsym(degree);
        for (int d = 0; d <= degree; ++d) {
            add(d, io::element_json("G", s[static_cast<std::size_t>(d)]));
        }
    }
    io::Json j{{"schema", io::schema}, {"series", which}, {"degree", degree}, {"components", components}};
    out << j.dump(2) << '\n';
    return exit_ok;
}

inline int cmd_poly(const std::string &which, int n, const std::string &format, int cap, std::ostream &out)
{
    // Closed product formulas are not enumerations and escape the size cap.
    if (which != "pn-alpha" && which != "qn") {
        require_size(n, cap, "--n");
    } else if (n < 0) {
        throw UsageError("--n must be non-negative");
    }
    if (which == "super-narayana") {
        const auto p = chars::super_narayana_sym(n);
        if (format == "json") {
            io::Json j{{"schema", io::schema}, {"poly", which}, {"n", n}, {"value", io::poly_rows_json(p, Var::t, Var::q)}};
            out << j.dump(2) << '\n';
        } else {
            for (const auto &row : p.coefficients_in(Var::t)) {
                out << detail::join(row.coefficient_list(Var::q)) << '\n';
            }
        }
        return exit_ok;
    }
    Poly p;
    Var v = Var::t;
    if (which == "pn-t") {
        p = chars::schroder_polynomials(n).by_paths;
    } else if (which == "narayana") {
        if (n == 0) {
            throw UsageError("--n must be positive for narayana");
        }
        p = chars::narayana_from_schroder(n);
    } else if (which == "pn-alpha") {
        p = chars::p_alpha(n);
        v = Var::alpha;
    } else {
        p = chars::q_polynomial(n);
        v = Var::q;
    }
    if (format == "json") {
        io::Json j{{"schema", io::schema}, {"poly", which}, {"n", n}, {"value", io::poly_json(p, v)}};
        out << j.dump(2) << '\n';
    } else {
        out << detail::join(p.coefficient_list(v)) << '\n';
    }
    return exit_ok;
}

inline int cmd_bijection(const std::string &direction, const std::string &input, std::ostream &out)
{
    if (direction == "tree-to-ndpf") {
        out << to_string(lagrange::tree_to_ndpf(parse_tree(input))) << '\n';
    } else if (direction == "ndpf-to-tree") {
        out << to_string(lagrange::ndpf_to_tree(parse_checked<NDPF>(input))) << '\n';
    } else if (direction == "dyck-encode") {
        out << to_string(chars::dyck_encode(chars::DyckPath(input))) << '\n';
    } else {
        const auto s = chars::schroder_encode(chars::SchroderPath(input));
        out << chars::to_string(s) << '\n';
    }
    return exit_ok;
}

inline int cmd_verify(const std::string &suite, int max_n, int cap, std::ostream &out)
{
    require_size(max_n, cap, "--max-n");
    io::Json checks = io::Json::array();
    bool ok = true;
    for (const auto &s : suites()) {
        if (suite != "all" && suite != s.name) {
            continue;
        }
        std::vector<CheckResult> results;
        try {
            results = s.run(max_n);
        } catch (const std::exception &e) {
            results.push_back({"suite raised an exception", false, 0, e.what()});
        }
        for (const auto &r : results) {
            ok = ok && r.ok;
            checks.push_back({{"suite", s.name}, {"name", r.name}, {"ok", r.ok}, {"checked", r.checked}, {"detail", r.detail}});
        }
    }
    io::Json j{{"schema", io::schema}, {"command", "verify"}, {"suite", suite}, {"max_n", max_n}, {"ok", ok}, {"checks", checks}};
    out << j.dump(2) << '\n';
    return ok ? exit_ok : exit_failure;
}

inline int cmd_table(const std::string &which, int n_max, const std::string &format, int cap, std::ostream &out)
{
    std::vector<std::pair<int, std::vector<Rational>>> rows;
    if (which == "qn-triangle") {
        if (n_max < 1) {
            throw UsageError("--n-max must be positive");
        }
        const auto t = chars::q_triangle(n_max);
        for (std::size_t i = 0; i < t.size(); ++i) {
            rows.emplace_back(static_cast<int>(i) + 1, t[i]);
        }
    } else if (which == "a060693") {
        require_size(n_max, cap, "--n-max");
        for (int n = 0; n <= n_max; ++n) {
            rows.emplace_back(n, chars::schroder_polynomials(n).by_paths.coefficient_list(Var::t));
        }
    } else {
        require_size(n_max, cap, "--n-max");
        for (int n = 1; n <= n_max; ++n) {
            rows.emplace_back(n, chars::bar_distribution(n).coefficient_list(Var::t));
        }
    }
    if (format == "json") {
        io::Json j{{"schema", io::schema}, {"table", which}, {"n_max", n_max}, {"rows", detail::rows_json(rows)}};
        out << j.dump(2) << '\n';
    } else {
        out << "n,k,value\n";
        for (const auto &[n, row] : rows) {
            for (std::size_t k = 0; k < row.size(); ++k) {
                out << n << ',' << k << ',' << row[k].get_str() << '\n';
            }
        }
    }
    return exit_ok;
}

inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Hopf algebras of parking functions: enumeration, series, characters and verification"};
    app.name("parkhopf");
    app.require_subcommand(1, 1);

    std::string family, format = "lines", direction, input, suite;
    std::string poly_format = "text", table_format = "csv";
    int n = 0, degree = 0, max_n = 0, n_max = 0;

    auto *enumerate = app.add_subcommand("enumerate", "List the objects of one family and size");
    enumerate->add_option("--family", family)
        ->required()
        ->check(CLI::IsMember({"pf", "ndpf", "qribbon", "packed", "perm", "signed-pf", "dyck", "schroder", "tree"}));
    enumerate->add_option("--n", n)->required();
    enumerate->add_option("--format", format)->check(CLI::IsMember({"lines", "json", "csv"}));

    std::string series_which;
    auto *series = app.add_subcommand("series", "Expand a series through a given degree as JSON");
    series->add_option("--which", series_which)->required()->check(CLI::IsMember({"g", "f", "G", "X"}));
    series->add_option("--degree", degree)->required();

    std::string poly_which;
    auto *poly = app.add_subcommand("poly", "Print polynomial coefficients in ascending order");
    poly->add_option("--which", poly_which)
        ->required()
        ->check(CLI::IsMember({"super-narayana", "pn-t", "narayana", "pn-alpha", "qn"}));
    poly->add_option("--n", n)->required();
    poly->add_option("--format", poly_format)->check(CLI::IsMember({"text", "json"}));

    auto *bijection = app.add_subcommand("bijection", "Apply one of the bijections to a single input");
    bijection->add_option("--direction", direction)
        ->required()
        ->check(CLI::IsMember({"tree-to-ndpf", "ndpf-to-tree", "dyck-encode", "schroder-encode"}));
    bijection->add_option("--input", input)->required();

    auto *verify = app.add_subcommand("verify", "Run verification suites and report JSON");
    verify->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"duplicial", "triduplicial", "bialgebra", "rewriting", "lagrange", "intervals",
                               "characters", "all"}));
    verify->add_option("--max-n", max_n)->required();

    std::string table_which;
    auto *table = app.add_subcommand("table", "Print a coefficient table");
    table->add_option("--which", table_which)
        ->required()
        ->check(CLI::IsMember({"qn-triangle", "a060693", "bar-distribution"}));
    table->add_option("--n-max", n_max)->required();
    table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        const int cap = max_n_from_env();
        if (enumerate->parsed()) {
            return cmd_enumerate(family, n, format, cap, out);
        }
        if (series->parsed()) {
            return cmd_series(series_which, degree, cap, out);
        }
        if (poly->parsed()) {
            return cmd_poly(poly_which, n, poly_format, cap, out);
        }
        if (bijection->parsed()) {
            return cmd_bijection(direction, input, out);
        }
        if (verify->parsed()) {
            return cmd_verify(suite, max_n, cap, out);
        }
        return cmd_table(table_which, n_max, table_format, cap, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument &e) {
        err << "error: invalid input: " << e.what() << '\n';
    } catch (const std::out_of_range &e) {
        err << "error: out of range: " << e.what() << '\n';
    }
    return exit_usage;
}

} // namespace parkhopf::cli

#endif

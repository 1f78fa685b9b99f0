#ifndef PARKHOPF_CLI_SUITES_HPP
#define PARKHOPF_CLI_SUITES_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <parkhopf/chars/characters.hpp>
#include <parkhopf/chars/narayana.hpp>
#include <parkhopf/combinat/binary_tree.hpp>
#include <parkhopf/combinat/enumerate.hpp>
#include <parkhopf/hopf/axioms.hpp>
#include <parkhopf/hopf/cqsym.hpp>
#include <parkhopf/lagrange/bijection.hpp>
#include <parkhopf/lagrange/bilinear.hpp>
#include <parkhopf/lagrange/series.hpp>
#include <parkhopf/lagrange/tamari.hpp>
#include <parkhopf/operad/evaluate.hpp>
#include <parkhopf/operad/rewriting.hpp>

namespace parkhopf::cli
{

struct CheckResult {
    std::string name;
    bool ok = false;
    std::size_t checked = 0;
    std::string detail;
};

using Suite = std::function<std::vector<CheckResult>(int max_n)>;

namespace detail
{

inline int cap(int n, int limit)
{
    return std::min(n, limit);
}

inline CheckResult from_report(const hopf::AxiomReport &r, const std::string &prefix)
{
    return {prefix + r.name, r.ok(), r.checked, r.first_failure};
}

inline void append_reports(std::vector<CheckResult> &out, const std::vector<hopf::AxiomReport> &reports,
                           const std::string &prefix)
{
    for (const auto &r : reports) {
        out.push_back(from_report(r, prefix));
    }
}

// Runs pred(n) for n = 1..max_n and records the first failing n.
inline CheckResult for_each_n(const std::string &name, int from, int max_n, const std::function<bool(int)> &pred)
{
    CheckResult r{name, true, 0, {}};
    for (int n = from; n <= max_n; ++n) {
        ++r.checked;
        if (!pred(n)) {
            r.ok = false;
            r.detail = "fails at n = " + std::to_string(n);
            break;
        }
    }
    return r;
}

inline std::size_t catalan(int n)
{
    std::size_t c = 1;
    for (int k = 0; k < n; ++k) {
        c = c * static_cast<std::size_t>(2 * (2 * k + 1)) / static_cast<std::size_t>(k + 2);
    }
    return c;
}

} // namespace detail

inline std::vector<CheckResult> duplicial_suite(int max_n)
{
    std::vector<CheckResult> out;
    detail::append_reports(out, hopf::duplicial_axioms(detail::cap(max_n, 6)), "CQSym: ");
    detail::append_reports(out, hopf::pqsym_duplicial_axioms(detail::cap(max_n, 6)), "PQSym: ");
    out.push_back({"cross relation (x<y)>z = x<(y>z) fails", hopf::duplicial_cross_relation_fails(), 1, {}});
    detail::append_reports(out, hopf::dendriform_axioms(detail::cap(max_n, 6)), "FQSym: ");
    return out;
}

inline std::vector<CheckResult> triduplicial_suite(int max_n)
{
    std::vector<CheckResult> out;
    detail::append_reports(out, hopf::triduplicial_axioms(detail::cap(max_n, 6)), "SQSym: ");
    out.push_back(detail::from_report(hopf::sqsym_closure(detail::cap(max_n, 5)), ""));
    detail::append_reports(out, hopf::tridendriform_axioms(detail::cap(max_n, 5)), "WQSym: ");
    const std::vector<std::size_t> expected{1, 3, 11, 45};
    const auto dims = hopf::free_tridendriform_dimensions(detail::cap(max_n, 4));
    out.push_back({"free tridendriform dimensions", std::equal(dims.begin(), dims.end(), expected.begin()), dims.size(), {}});
    return out;
}

inline std::vector<CheckResult> bialgebra_suite(int max_n)
{
    std::vector<CheckResult> out;
    detail::append_reports(out, hopf::dup_bialgebra_axioms(detail::cap(max_n, 5)), "");
    out.push_back(detail::from_report(hopf::dup_coassociativity(detail::cap(max_n, 6)), ""));
    out.push_back({"delta(P^1) = 0", hopf::dup_coproduct(hopf::cqsym_generator()).is_zero(), 1, {}});
    out.push_back(detail::for_each_n("primitive dimension = Catalan(n-1)", 1, detail::cap(max_n, 6),
                                     [](int n) { return hopf::primitive_dimension(n) == detail::catalan(n - 1); }));
    return out;
}

inline std::vector<CheckResult> rewriting_suite(int max_n)
{
    using namespace operad;
    std::vector<CheckResult> out;
    const int m = detail::cap(max_n, 6);
    const auto s = schroder_series_coefficients(m);
    out.push_back(detail::for_each_n("Tri normal forms match S = 1 + 3xS + 2x^2 S^2", 1, m, [&](int n) {
        return Integer(static_cast<unsigned long>(count_normal_forms(Mode::tri, n))) == s[static_cast<std::size_t>(n - 1)];
    }));
    out.push_back(detail::for_each_n("Dup normal forms are Catalan", 1, m, [](int n) {
        return count_normal_forms(Mode::dup, n) == detail::catalan(n);
    }));
    for (auto mode : {Mode::dup, Mode::tri}) {
        const std::string tag = mode == Mode::dup ? "Dup: " : "Tri: ";
        out.push_back(detail::for_each_n(tag + "normal shapes", 1, m, [mode](int n) { return normal_form_shape_check(mode, n); }));
        out.push_back(detail::for_each_n(tag + "confluence", 1, m, [mode](int n) { return confluence_check(mode, n); }));
        out.push_back(detail::for_each_n(tag + "normal forms biject onto keys", 1, m, [mode](int n) {
            std::set<std::string> keys;
            const auto nfs = normal_forms(mode, n);
            for (const auto &t : nfs) {
                keys.insert(eval_tree_key(t, mode));
            }
            const auto expected = mode == Mode::tri ? enumerate_quasi_ribbons(n).size() : enumerate_ndpf(n).size();
            return keys.size() == nfs.size() && keys.size() == expected;
        }));
    }
    return out;
}

inline std::vector<CheckResult> lagrange_suite(int max_n)
{
    using namespace lagrange;
    std::vector<CheckResult> out;
    const auto g = solve_g(detail::cap(max_n, 7));
    out.push_back({"g residual", sum_s_powers_residual_zero(g, sym::SymElem::one()), g.size(), {}});
    out.push_back(detail::for_each_n("g symmetric under conjugation", 0, detail::cap(max_n, 7), [&](int n) {
        return g_is_conjugation_symmetric(g[static_cast<std::size_t>(n)]);
    }));
    const auto f = solve_f(detail::cap(max_n, 6));
    out.push_back({"f residual", sum_s_powers_residual_zero(f, sym::SymElem::S_n(0)), f.size(), {}});
    out.push_back(detail::for_each_n("f closed form", 0, detail::cap(max_n, 6), [&](int n) {
        return f[static_cast<std::size_t>(n)] == f_closed_form(n);
    }));
    const auto big = solve_G_cqsym(detail::cap(max_n, 7));
    out.push_back({"G = 1 + B(G, G) in CQSym", fixed_point_residual_zero(big, cqsym_one(), B_cqsym), big.size(), {}});
    out.push_back(detail::for_each_n("tree terms are single keys", 0, detail::cap(max_n, 7), tree_terms_match_bijection));
    out.push_back(detail::for_each_n("tree/NDPF round trip", 0, detail::cap(max_n, 8), [](int n) {
        for (const auto &t : enumerate_binary_trees(n)) {
            if (!(ndpf_to_tree(tree_to_ndpf(t)) == t)) {
                return false;
            }
        }
        for (const auto &pi : enumerate_ndpf(n)) {
            if (!(tree_to_ndpf(ndpf_to_tree(pi)) == pi)) {
                return false;
            }
        }
        return true;
    }));
    const auto x = solve_X_fqsym(detail::cap(max_n, 5));
    out.push_back({"X = 1 + B(X, X) in FQSym", fixed_point_residual_zero(x, fqsym_one(), B_fqsym), x.size(), {}});
    out.push_back(detail::for_each_n("FQSym tree terms partition S_n", 1, detail::cap(max_n, 5), fqsym_tree_terms_partition));
    out.push_back(detail::for_each_n("iota is an involution", 0, detail::cap(max_n, 8), [](int n) {
        for (const auto &pi : enumerate_ndpf(n)) {
            if (!(iota(iota(pi)) == pi)) {
                return false;
            }
        }
        return true;
    }));
    out.push_back({"phi(G) = g", phi_of_G(detail::cap(max_n, 7)), 1, {}});
    out.push_back({"Q^a Q^b = Q^{b < a}", q_basis_product_check(detail::cap(max_n, 5), true), 1, {}});
    out.push_back({"phi o iota = conjugation", symmetry_of_g(detail::cap(max_n, 7)), 1, {}});
    return out;
}

inline std::vector<CheckResult> intervals_suite(int max_n)
{
    using namespace lagrange;
    std::vector<CheckResult> out;
    const int m = detail::cap(max_n, 6);
    out.push_back(detail::for_each_n("evaluation classes are Tamari intervals of size [S^I] g_n", 1, m, [](int n) {
        const auto gn = solve_g(n)[static_cast<std::size_t>(n)];
        for (const auto &c : enumerate_compositions(n)) {
            const auto r = tamari_interval_check(c);
            if (!r.is_interval || !(Rational(static_cast<long>(r.size)) == gn.coeff(c))) {
                return false;
            }
        }
        return true;
    }));
    out.push_back(detail::for_each_n("canopy partition = evaluation partition", 1, m, canopy_evaluation_correspondence));
    return out;
}

inline std::vector<CheckResult> characters_suite(int max_n)
{
    using namespace chars;
    std::vector<CheckResult> out;
    out.push_back(detail::for_each_n("super-Narayana: counting = symmetric functions", 1, detail::cap(max_n, 5), [](int n) {
        return super_narayana_count(n, Statistic::sinv) == super_narayana_sym(n);
    }));
    out.push_back(detail::for_each_n("sinv and smaj equidistributed", 1, detail::cap(max_n, 4), [](int n) {
        return super_narayana_count(n, Statistic::sinv) == super_narayana_count(n, Statistic::smaj);
    }));
    out.push_back({"phi_{q,x} is a character (smaj)", s_character_check(detail::cap(max_n, 4)), 1, {}});
    out.push_back(detail::for_each_n("Schroder polynomials: three routes", 0, detail::cap(max_n, 7),
                                     [](int n) { return schroder_polynomials(n).agree; }));
    out.push_back(detail::for_each_n("Lassalle = P_n(t-1)/t = bars at t-1", 1, detail::cap(max_n, 7), [](int n) {
        const auto c = narayana_from_schroder(n);
        return lassalle_narayana(n) == c &&
               bar_distribution(n).substitute(Var::t, poly_var(Var::t) - Poly(1)) == c;
    }));
    out.push_back(detail::for_each_n("chi on SQSym", 1, detail::cap(max_n, 7),
                                     [](int n) { return chi_sqsym(n, std::min(n, 4)).ok(); }));
    out.push_back(detail::for_each_n("psi_alpha", 1, detail::cap(max_n, 6),
                                     [](int n) { return psi_alpha_report(n, std::min(n, 4)).ok(); }));
    out.push_back({"psi multiplicative", psi_multiplicative(detail::cap(max_n, 5)), 1, {}});
    out.push_back(detail::for_each_n("Q_n = (q-1)^n P_n(1/(q-1))", 1, detail::cap(std::max(max_n, 1), 10),
                                     q_polynomial_matches_p_alpha));
    return out;
}

struct NamedSuite {
    std::string name;
    Suite run;
};

inline const std::vector<NamedSuite> &suites()
{
    static const std::vector<NamedSuite> all{
        {"duplicial", duplicial_suite},   {"triduplicial", triduplicial_suite}, {"bialgebra", bialgebra_suite},
        {"rewriting", rewriting_suite},   {"lagrange", lagrange_suite},         {"intervals", intervals_suite},
        {"characters", characters_suite},
    };
    return all;
}

} // namespace parkhopf::cli

#endif

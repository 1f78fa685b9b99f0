#ifndef PARKHOPF_CHARS_CHARACTERS_HPP
#define PARKHOPF_CHARS_CHARACTERS_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include <parkhopf/chars/narayana.hpp>
#include <parkhopf/chars/paths.hpp>
#include <parkhopf/combinat/enumerate.hpp>
#include <parkhopf/combinat/quasi_ribbon.hpp>
#include <parkhopf/exact/poly.hpp>
#include <parkhopf/exact/ratfun.hpp>
#include <parkhopf/hopf/morphisms.hpp>
#include <parkhopf/hopf/pqsym.hpp>
#include <parkhopf/hopf/sqsym.hpp>
#include <parkhopf/symfun/alphabet.hpp>

namespace parkhopf::chars
{

// chi(P_q) = (1 + t) t^{bars}, extended linearly.
inline Poly chi(const hopf::SQSymElem &a)
{
    Poly out;
    const auto one_plus_t = Poly(1) + poly_var(Var::t);
    for (const auto &[q, c] : a) {
        out += one_plus_t * poly_var(Var::t, static_cast<int>(q.bar_count())) * c;
    }
    return out;
}

// sum over quasi-ribbons of size n of t^{bars}.
inline Poly bar_distribution(int n)
{
    Poly out;
    for (const auto &q : enumerate_quasi_ribbons(n)) {
        out += poly_var(Var::t, static_cast<int>(q.bar_count()));
    }
    return out;
}

// Paths with k + 1 horizontal steps and no peak after the last one, counted
// by t^k.
inline Poly schroder_no_final_peak_distribution(int n)
{
    Poly out;
    for (const auto &p : enumerate_schroder(n)) {
        if (p.horizontal_steps() > 0 && !has_peak_after_last_h(p)) {
            out += poly_var(Var::t, p.horizontal_steps() - 1);
        }
    }
    return out;
}

struct ChiReport {
    Poly chi_of_G;
    bool multiplicative = false;
    bool matches_narayana = false;
    bool bars_match_narayana = false;
    bool bars_match_paths = false;
    bool ok() const
    {
        return multiplicative && matches_narayana && bars_match_narayana && bars_match_paths;
    }
};

// chi(P_a P_b) = chi(P_a) chi(P_b) on pairs of total size at most max_total.
inline bool chi_multiplicative(int max_total)
{
    for (int a = 1; a < max_total; ++a) {
        for (int b = 1; a + b <= max_total; ++b) {
            for (const auto &qa : enumerate_quasi_ribbons(a)) {
                for (const auto &qb : enumerate_quasi_ribbons(b)) {
                    const hopf::SQSymElem pa(qa), pb(qb);
                    if (!(chi(hopf::sqsym_product(pa, pb)) == chi(pa) * chi(pb))) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

inline ChiReport chi_sqsym(int n, int max_total = 4)
{
    check_range(n, 7, "chi_sqsym");
    ChiReport r;
    hopf::SQSymElem big;
    for (const auto &q : enumerate_quasi_ribbons(n)) {
        big += hopf::SQSymElem(q);
    }
    r.chi_of_G = chi(big);
    r.multiplicative = chi_multiplicative(max_total);
    const auto t = poly_var(Var::t);
    const auto cn_shift = narayana_from_schroder(n).substitute(Var::t, Poly(1) + t);
    r.matches_narayana = r.chi_of_G == (Poly(1) + t) * cn_shift;
    const auto bars = bar_distribution(n);
    r.bars_match_narayana = bars == cn_shift;
    r.bars_match_paths = bars == schroder_no_final_peak_distribution(n);
    return r;
}

// psi_alpha(F_a) = Z_{t(a)}(alpha) / n!.
inline Poly psi_alpha(const hopf::PQSymElem &a)
{
    Poly out;
    for (const auto &[k, c] : a) {
        const auto z = sym::cycle_enumerator(packed_evaluation(k.letters()));
        out += z * (c / Rational(factorial(static_cast<unsigned>(k.size()))));
    }
    return out;
}

// alpha prod_{k=1}^{n-1} ((n + 1) alpha + k).
inline Poly p_alpha(int n)
{
    if (n == 0) {
        return Poly(1);
    }
    const auto alpha = poly_var(Var::alpha);
    Poly out = alpha;
    for (int k = 1; k < n; ++k) {
        out *= alpha * (n + 1) + Poly(k);
    }
    return out;
}

inline hopf::PQSymElem sum_of_parking(int n)
{
    hopf::PQSymElem out;
    for (const auto &a : enumerate_parking(n)) {
        out += hopf::pqsym_F(a);
    }
    return out;
}

// psi(F_a F_b) = psi(F_a) psi(F_b) in Sym, and likewise for psi_alpha.
inline bool psi_multiplicative(int max_total)
{
    for (int a = 1; a < max_total; ++a) {
        for (int b = 1; a + b <= max_total; ++b) {
            for (const auto &x : enumerate_parking(a)) {
                for (const auto &y : enumerate_parking(b)) {
                    const auto fx = hopf::pqsym_F(x), fy = hopf::pqsym_F(y);
                    const auto prod = hopf::pqsym_product(fx, fy);
                    if (!(hopf::morphism_psi(prod) == sym::product(hopf::morphism_psi(fx), hopf::morphism_psi(fy)))) {
                        return false;
                    }
                    if (!(psi_alpha(prod) == psi_alpha(fx) * psi_alpha(fy))) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

// sum over pairs (a, sigma), a in PF_n, a o sigma = a, of alpha^{cycles}.
// The action permutes positions: (a o sigma)_i = a_{sigma(i)}.
inline Poly fixed_pair_polynomial(int n)
{
    check_range(n, 5, "fixed_pair_polynomial");
    Poly out;
    const auto perms = enumerate_permutations(n);
    std::vector<int> cycles;
    for (const auto &sigma : perms) {
        std::vector<bool> seen(sigma.size(), false);
        int c = 0;
        for (std::size_t i = 0; i < sigma.size(); ++i) {
            if (!seen[i]) {
                ++c;
                for (auto j = i; !seen[j]; j = static_cast<std::size_t>(sigma[j] - 1)) {
                    seen[j] = true;
                }
            }
        }
        cycles.push_back(c);
    }
    for (const auto &a : enumerate_parking(n)) {
        for (std::size_t s = 0; s < perms.size(); ++s) {
            bool fixed = true;
            for (std::size_t i = 0; i < a.size() && fixed; ++i) {
                fixed = a[i] == a[static_cast<std::size_t>(perms[s][i] - 1)];
            }
            if (fixed) {
                out += poly_var(Var::alpha, cycles[s]);
            }
        }
    }
    return out;
}

struct PsiReport {
    Poly p_n;
    bool multiplicative = false;
    bool matches_product = false;
    bool matches_fixed_pairs = false;
    bool ok() const
    {
        return multiplicative && matches_product && matches_fixed_pairs;
    }
};

// P_n(alpha) = n! psi_alpha(G_n), checked against the product formula and,
// for n <= 5, against the fixed-pair counts.
inline PsiReport psi_alpha_report(int n, int max_total = 4)
{
    check_range(n, 6, "psi_alpha_report");
    PsiReport r;
    r.p_n = psi_alpha(sum_of_parking(n)) * Rational(factorial(static_cast<unsigned>(n)));
    r.multiplicative = psi_multiplicative(max_total);
    r.matches_product = r.p_n == p_alpha(n);
    r.matches_fixed_pairs = n > 5 || r.p_n == fixed_pair_polynomial(n);
    return r;
}

// Q_n(q) = prod_{k=2}^n ((n + 1 - k) q + k).
inline Poly q_polynomial(int n)
{
    Poly out(1);
    const auto q = poly_var(Var::q);
    for (int k = 2; k <= n; ++k) {
        out *= q * (n + 1 - k) + Poly(k);
    }
    return out;
}

// Q_n(q) = (q - 1)^n P_n(1 / (q - 1)) as rational functions.
inline bool q_polynomial_matches_p_alpha(int n)
{
    const auto q_minus_1 = poly_var(Var::q) - Poly(1);
    // Substitute alpha = 1 / (q - 1) coefficientwise.
    RatFun value(Poly(0));
    const auto coeffs = p_alpha(n).coefficient_list(Var::alpha);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        RatFun term{Poly(coeffs[k])};
        for (std::size_t i = 0; i < k; ++i) {
            term /= RatFun(q_minus_1);
        }
        value += term;
    }
    for (int i = 0; i < n; ++i) {
        value *= RatFun(q_minus_1);
    }
    return value == RatFun(q_polynomial(n));
}

// Coefficient rows of Q_1 .. Q_{n_max}, ascending in q.
inline std::vector<std::vector<Rational>> q_triangle(int n_max)
{
    check_range(n_max, 10, "q_triangle");
    std::vector<std::vector<Rational>> rows;
    for (int n = 1; n <= n_max; ++n) {
        rows.push_back(q_polynomial(n).coefficient_list(Var::q));
    }
    return rows;
}

} // namespace parkhopf::chars

#endif

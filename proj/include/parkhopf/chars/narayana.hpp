#ifndef PARKHOPF_CHARS_NARAYANA_HPP
#define PARKHOPF_CHARS_NARAYANA_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <parkhopf/chars/paths.hpp>
#include <parkhopf/chars/signed.hpp>
#include <parkhopf/combinat/composition.hpp>
#include <parkhopf/combinat/enumerate.hpp>
#include <parkhopf/exact/poly.hpp>
#include <parkhopf/exact/ratfun.hpp>
#include <parkhopf/exact/series.hpp>
#include <parkhopf/lagrange/series.hpp>
#include <parkhopf/symfun/alphabet.hpp>

namespace parkhopf::chars
{

enum class Statistic { sinv, smaj };

inline void check_range(int n, int cap, const char *what)
{
    if (n < 0 || n > cap) {
        throw std::out_of_range(std::string(what) + ": n must lie in 0.." + std::to_string(cap));
    }
}

// (q)_n = (1 - q)(1 - q^2)...(1 - q^n).
inline Poly q_pochhammer(int n)
{
    Poly out(1);
    for (int k = 1; k <= n; ++k) {
        out *= Poly(1) - poly_var(Var::q, k);
    }
    return out;
}

inline int statistic(const SignedParkingFunction &s, Statistic stat)
{
    return stat == Statistic::sinv ? signed_inversions(s) : signed_major_index(s);
}

// sum over signed parking functions of t^{minus signs} q^{stat}.
inline Poly super_narayana_count(int n, Statistic stat = Statistic::sinv)
{
    check_range(n, 6, "super_narayana_count");
    Poly out;
    for (const auto &s : enumerate_signed_pf(n)) {
        out += poly_var(Var::t, minus_count(s)) * poly_var(Var::q, statistic(s, stat));
    }
    return out;
}

// (q)_n g_n((1 - x) / (1 - q)), then x = -t.
inline Poly super_narayana_sym(int n)
{
    check_range(n, 6, "super_narayana_sym");
    const auto g = lagrange::solve_g(n)[static_cast<std::size_t>(n)];
    const auto value = sym::evaluate(g, sym::VirtualAlphabet::one_minus_x_over_one_minus_q()) * RatFun(q_pochhammer(n));
    return assert_polynomial(value.substitute(Var::x, -poly_var(Var::t)));
}

// sum over sign vectors of (-x)^{minus signs} q^{maj}, for a permutation.
inline Poly signed_maj_weight(const Permutation &sigma)
{
    Poly out;
    for (auto &e : all_signs(sigma.size())) {
        const SignedParkingFunction s(ParkingFunction::trusted(sigma.letters()), std::move(e));
        const int m = minus_count(s);
        out += Poly(m % 2 == 0 ? 1 : -1) * poly_var(Var::x, m) * poly_var(Var::q, signed_major_index(s));
    }
    return out;
}

// Summing the weights over the permutations with the recoil set of sigma
// gives (q)_n R_I((1 - x) / (1 - q)), with I read off that recoil set.
inline bool qtF_identity_check(const Permutation &sigma)
{
    const int n = static_cast<int>(sigma.size());
    check_range(n, 5, "qtF_identity_check");
    const auto rec = recoils(sigma.letters());
    Poly lhs;
    for (const auto &tau : enumerate_permutations(n)) {
        if (recoils(tau.letters()) == rec) {
            lhs += signed_maj_weight(tau);
        }
    }
    const auto ribbon = sym::SymElem::R(Composition::from_descents(n, rec));
    const auto rhs = sym::evaluate(ribbon, sym::VirtualAlphabet::one_minus_x_over_one_minus_q()) * RatFun(q_pochhammer(n));
    return RatFun(lhs) == rhs;
}

// [n choose k]_q.
inline Poly q_binomial(int n, int k)
{
    return exact_quotient(q_pochhammer(n), q_pochhammer(k) * q_pochhammer(n - k));
}

inline Poly signed_weight(const SignedParkingFunction &s, Statistic stat)
{
    const int m = minus_count(s);
    return Poly(m % 2 == 0 ? 1 : -1) * poly_var(Var::x, m) * poly_var(Var::q, statistic(s, stat));
}

// phi(F_(a,e)) = (-x)^{m(e)} q^{stat} / (q)_n is multiplicative on the
// shifted shuffle product, for all pairs of total degree at most max_total.
// Denominators are cleared: phi(u) phi(v) (q)_{|u|+|v|} = [..]_q weights.
inline bool s_character_check(int max_total, Statistic stat = Statistic::smaj)
{
    check_range(max_total, 4, "s_character_check");
    for (int a = 1; a < max_total; ++a) {
        for (int b = 1; a + b <= max_total; ++b) {
            const auto binom = q_binomial(a + b, a);
            const auto left = enumerate_signed_pf(a);
            const auto right = enumerate_signed_pf(b);
            for (const auto &u : left) {
                const auto wu = signed_weight(u, stat);
                for (const auto &v : right) {
                    Poly sum;
                    for (const auto &w : signed_shifted_shuffle(u, v)) {
                        sum += signed_weight(w, stat);
                    }
                    if (!(sum == binom * wu * signed_weight(v, stat))) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

// Under s, F_a goes to the sum of its signings; the map phi o s then
// agrees with the specialization of F_std(a) on each parking function.
inline bool s_specialization_check(int n)
{
    check_range(n, 4, "s_specialization_check");
    for (const auto &a : enumerate_parking(n)) {
        Poly lhs;
        for (auto &e : all_signs(a.size())) {
            lhs += signed_weight(SignedParkingFunction(a, std::move(e)), Statistic::smaj);
        }
        if (!(lhs == signed_maj_weight(std_perm(a.letters())))) {
            return false;
        }
    }
    return true;
}

struct SchroderPolynomials {
    Poly by_paths;
    Poly by_signed_words;
    Poly by_series;
    bool agree = false;
};

namespace detail
{

// Coefficients of (1 - tz - sqrt((1 - tz)^2 - 4z)) / (2z) through z^order.
inline std::vector<Poly> schroder_series(std::size_t order)
{
    const auto t = poly_var(Var::t);
    const std::vector<Poly> p{Poly(1), Poly(-2) * t - Poly(4), t * t};
    const auto root = series_sqrt_expand(p, order + 1);
    std::vector<Poly> out;
    for (std::size_t n = 0; n <= order; ++n) {
        Poly num = -root[n + 1];
        if (n == 0) {
            num -= t;
        }
        out.push_back(num * make_rational(1, 2));
    }
    return out;
}

} // namespace detail

// P_n(t) = P_n(t, 0) by three routes.
inline SchroderPolynomials schroder_polynomials(int n)
{
    check_range(n, 7, "schroder_polynomials");
    SchroderPolynomials out;
    for (const auto &p : enumerate_schroder(n)) {
        out.by_paths += poly_var(Var::t, p.horizontal_steps());
    }
    for (const auto &a : enumerate_parking(n)) {
        for (auto &e : all_signs(a.size())) {
            const SignedParkingFunction s(a, std::move(e));
            if (signed_inversions(s) == 0) {
                out.by_signed_words += poly_var(Var::t, minus_count(s));
            }
        }
    }
    out.by_series = detail::schroder_series(static_cast<std::size_t>(n))[static_cast<std::size_t>(n)];
    out.agree = out.by_paths == out.by_signed_words && out.by_paths == out.by_series;
    return out;
}

// c_n(t) = P_n(t - 1) / t.
inline Poly narayana_from_schroder(int n)
{
    const auto pn = schroder_polynomials(n).by_paths;
    return exact_quotient(pn.substitute(Var::t, poly_var(Var::t) - Poly(1)), poly_var(Var::t));
}

// q c_n(q) = h_n((n + 1) q) / (n + 1) with q = 1 - x of rank one. Returned
// as a polynomial in t, like the other routes.
inline Poly lassalle_narayana(int n)
{
    check_range(n, 7, "lassalle_narayana");
    if (n == 0) {
        throw std::out_of_range("lassalle_narayana: n must be positive");
    }
    const long m = n + 1;
    const auto h = sym::VirtualAlphabet::m_times_one_minus_x(m).complete(n) * RatFun(Poly(make_rational(1, m)));
    const auto in_x = assert_polynomial(h);
    const auto in_q = in_x.substitute(Var::x, Poly(1) - poly_var(Var::q));
    return exact_quotient(in_q, poly_var(Var::q)).substitute(Var::q, poly_var(Var::t));
}

} // namespace parkhopf::chars

#endif

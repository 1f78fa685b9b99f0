#ifndef PARKHOPF_LAGRANGE_BILINEAR_HPP
#define PARKHOPF_LAGRANGE_BILINEAR_HPP

#include <cstddef>
#include <map>
#include <vector>

#include <parkhopf/combinat/binary_tree.hpp>
#include <parkhopf/combinat/enumerate.hpp>
#include <parkhopf/hopf/cqsym.hpp>
#include <parkhopf/hopf/fqsym.hpp>
#include <parkhopf/hopf/morphisms.hpp>
#include <parkhopf/lagrange/bijection.hpp>
#include <parkhopf/lagrange/series.hpp>

namespace parkhopf::lagrange
{

namespace detail
{

// B(F, G) = (F > x) < G, with B(1, G) = x < G, B(F, 1) = F > x, B(1, 1) = x.
template <typename Elem, typename Prec, typename Succ>
Elem bilinear_B(const Elem &f, const Elem &g, const Elem &x, Prec prec, Succ succ)
{
    Elem out;
    for (const auto &[kf, cf] : f) {
        const Elem left = kf.empty() ? x : succ(Elem(kf), x);
        for (const auto &[kg, cg] : g) {
            const Elem term = kg.empty() ? left : prec(left, Elem(kg));
            out += term * (cf * cg);
        }
    }
    return out;
}

template <typename Elem, typename BFun>
GradedSeries<Elem> solve_fixed_point(int order, const Elem &one, BFun b)
{
    GradedSeries<Elem> x{one};
    for (int n = 1; n <= order; ++n) {
        Elem xn;
        for (int i = 0; i <= n - 1; ++i) {
            xn += b(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(n - 1 - i)]);
        }
        x.push_back(xn);
    }
    return x;
}

template <typename Elem, typename BFun>
Elem tree_term(const BinaryTree &t, const Elem &one, BFun b)
{
    if (t.is_leaf()) {
        return one;
    }
    return b(tree_term(t.left(), one, b), tree_term(t.right(), one, b));
}

} // namespace detail

inline hopf::CQSymElem B_cqsym(const hopf::CQSymElem &f, const hopf::CQSymElem &g)
{
    return detail::bilinear_B(f, g, hopf::cqsym_generator(), hopf::cqsym_prec, hopf::cqsym_succ);
}

inline hopf::FQSymElem B_fqsym(const hopf::FQSymElem &f, const hopf::FQSymElem &g)
{
    return detail::bilinear_B(f, g, hopf::fqsym_generator(), hopf::fqsym_left, hopf::fqsym_right);
}

inline hopf::CQSymElem cqsym_one()
{
    return hopf::cqsym_P(NDPF{});
}

inline hopf::FQSymElem fqsym_one()
{
    return hopf::fqsym_G(Permutation{});
}

// G = 1 + B(G, G) in CQSym.
inline GradedSeries<hopf::CQSymElem> solve_G_cqsym(int order)
{
    check_order(order, 8, "solve_G_cqsym");
    return detail::solve_fixed_point(order, cqsym_one(), B_cqsym);
}

// X = 1 + B(X, X) in FQSym.
inline GradedSeries<hopf::FQSymElem> solve_X_fqsym(int order)
{
    check_order(order, 6, "solve_X_fqsym");
    return detail::solve_fixed_point(order, fqsym_one(), B_fqsym);
}

inline hopf::CQSymElem tree_term_cqsym(const BinaryTree &t)
{
    return detail::tree_term(t, cqsym_one(), B_cqsym);
}

inline hopf::FQSymElem tree_term_fqsym(const BinaryTree &t)
{
    return detail::tree_term(t, fqsym_one(), B_fqsym);
}

// x = 1 + B(x, x) through the truncation order of x.
template <typename Elem, typename BFun>
bool fixed_point_residual_zero(const GradedSeries<Elem> &x, const Elem &one, BFun b)
{
    const auto order = x.size() - 1;
    Elem lhs, rhs = one;
    for (std::size_t i = 0; i <= order; ++i) {
        lhs += x[i];
        for (std::size_t j = 0; i + j + 1 <= order; ++j) {
            rhs += b(x[i], x[j]);
        }
    }
    return lhs == rhs;
}

// Each B_T(1) is a single P^pi with coefficient 1 and pi = tree_to_ndpf(T).
inline bool tree_terms_match_bijection(int n)
{
    for (const auto &t : enumerate_binary_trees(n)) {
        const auto term = tree_term_cqsym(t);
        if (term.size() != 1 || term.begin()->second != 1 || !(term.begin()->first == tree_to_ndpf(t))) {
            return false;
        }
    }
    return true;
}

// The tree terms of X_n have disjoint supports covering all of S_n.
inline bool fqsym_tree_terms_partition(int n)
{
    std::map<Permutation, int> seen;
    for (const auto &t : enumerate_binary_trees(n)) {
        for (const auto &[k, c] : tree_term_fqsym(t)) {
            if (c != 1 || seen[k]++ > 0) {
                return false;
            }
        }
    }
    return seen.size() == enumerate_permutations(n).size();
}

// phi(G) = g, with phi(P^pi) = S^{t(pi)}.
inline bool phi_of_G(int order)
{
    check_order(order, 7, "phi_of_G");
    const auto big = solve_G_cqsym(order);
    const auto g = solve_g(order);
    for (int n = 0; n <= order; ++n) {
        if (!(hopf::istar_on_cqsym(big[static_cast<std::size_t>(n)]) == g[static_cast<std::size_t>(n)])) {
            return false;
        }
    }
    return true;
}

inline hopf::CQSymElem iota(const hopf::CQSymElem &a)
{
    return apply_linear(a, [](const NDPF &pi) { return hopf::CQSymElem(iota(pi)); });
}

// Q^pi = iota(P^pi). Checks Q^a Q^b = Q^{a < b} on all pairs with total
// degree at most max_total; with reversed = true checks Q^a Q^b = Q^{b < a}.
inline bool q_basis_product_check(int max_total, bool reversed = false)
{
    for (int a = 1; a < max_total; ++a) {
        for (int b = 1; a + b <= max_total; ++b) {
            for (const auto &x : enumerate_ndpf(a)) {
                for (const auto &y : enumerate_ndpf(b)) {
                    const auto lhs = hopf::cqsym_product(hopf::cqsym_P(iota(x)), hopf::cqsym_P(iota(y)));
                    const auto key = reversed ? shifted_concat_max(y.letters(), x.letters())
                                              : shifted_concat_max(x.letters(), y.letters());
                    if (!(lhs == hopf::cqsym_P(iota(NDPF::trusted(key))))) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

// phi(iota(P^pi)) is the conjugate of phi(P^pi), which makes g symmetric.
inline bool symmetry_of_g(int order)
{
    for (int n = 0; n <= order; ++n) {
        for (const auto &pi : enumerate_ndpf(n)) {
            if (!(packed_evaluation(iota(pi).letters()) == conjugate(packed_evaluation(pi.letters())))) {
                return false;
            }
        }
    }
    return true;
}

} // namespace parkhopf::lagrange

#endif

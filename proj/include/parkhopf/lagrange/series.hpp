#ifndef PARKHOPF_LAGRANGE_SERIES_HPP
#define PARKHOPF_LAGRANGE_SERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <parkhopf/combinat/composition.hpp>
#include <parkhopf/combinat/enumerate.hpp>
#include <parkhopf/symfun/sym.hpp>

namespace parkhopf::lagrange
{

// Component n is homogeneous of degree n.
template <typename E>
using GradedSeries = std::vector<E>;

inline void check_order(int n, int cap, const char *what)
{
    if (n < 0 || n > cap) {
        throw std::out_of_range(std::string(what) + ": order must lie in 0.." + std::to_string(cap));
    }
}

// Truncated Cauchy product of two graded series.
template <typename E, typename Mul>
GradedSeries<E> series_product(const GradedSeries<E> &a, const GradedSeries<E> &b, std::size_t order, Mul mul, const E &zero)
{
    GradedSeries<E> out(order + 1, zero);
    for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) {
            out[i + j] += mul(a[i], b[j]);
        }
    }
    return out;
}

namespace detail
{

// Degree-by-degree solution of x = x_0 + sum_{k>=1} S_k x^k: component n
// only involves components below n.
inline GradedSeries<sym::SymElem> solve_sum_s_powers(const sym::SymElem &x0, int order)
{
    const auto zero = sym::SymElem(sym::Basis::S);
    GradedSeries<sym::SymElem> x{x0};
    for (int n = 1; n <= order; ++n) {
        sym::SymElem xn = zero;
        GradedSeries<sym::SymElem> power{sym::SymElem::one()};
        for (int k = 1; k <= n; ++k) {
            power = series_product(power, x, static_cast<std::size_t>(n - k), sym::product, zero);
            xn += sym::SymElem::S_n(k) * power[static_cast<std::size_t>(n - k)];
        }
        x.push_back(xn);
    }
    return x;
}

} // namespace detail

// g = sum_{n>=0} S_n g^n with S_0 = 1.
inline GradedSeries<sym::SymElem> solve_g(int order)
{
    check_order(order, 8, "solve_g");
    return detail::solve_sum_s_powers(sym::SymElem::one(), order);
}

// f = sum_{n>=0} S_n f^n with S_0 a separate generator of degree 0.
inline GradedSeries<sym::SymElem> solve_f(int order)
{
    check_order(order, 8, "solve_f");
    return detail::solve_sum_s_powers(sym::SymElem::S_n(0), order);
}

// f_n = sum over NDPF pi of S^{ev(pi) . 0}.
inline sym::SymElem f_closed_form(int n)
{
    sym::SymElem out(sym::Basis::S);
    for (const auto &pi : enumerate_ndpf(n)) {
        auto ev = evaluation(pi.letters(), static_cast<std::size_t>(n));
        ev.push_back(0);
        out += sym::SymElem::S(Composition::extended(std::move(ev)));
    }
    if (n == 0) {
        out = sym::SymElem::S_n(0);
    }
    return out;
}

// Residual of x = x_0 + sum_{k>=1} S_k x^k through the given degree,
// computed with full truncated powers of x.
inline bool sum_s_powers_residual_zero(const GradedSeries<sym::SymElem> &x, const sym::SymElem &x0)
{
    const auto order = x.size() - 1;
    const auto zero = sym::SymElem(sym::Basis::S);
    GradedSeries<sym::SymElem> rhs(order + 1, zero);
    rhs[0] = x0;
    GradedSeries<sym::SymElem> power{sym::SymElem::one()};
    for (std::size_t k = 1; k <= order; ++k) {
        power = series_product(power, x, order, sym::product, zero);
        for (std::size_t n = k; n <= order; ++n) {
            rhs[n] += sym::SymElem::S_n(static_cast<int>(k)) * power[n - k];
        }
    }
    for (std::size_t n = 0; n <= order; ++n) {
        if (!(x[n] == rhs[n])) {
            return false;
        }
    }
    return true;
}

// The coefficients of g_n are invariant under I -> I~.
inline bool g_is_conjugation_symmetric(const sym::SymElem &gn)
{
    return sym::conjugate_keys(gn) == gn;
}

} // namespace parkhopf::lagrange

#endif

#ifndef PARKHOPF_EXACT_SERIES_HPP
#define PARKHOPF_EXACT_SERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <parkhopf/exact/poly.hpp>

namespace parkhopf
{

// Truncated product of two coefficient sequences, keeping orders 0..order.
template <typename C>
std::vector<C> series_mul(const std::vector<C> &a, const std::vector<C> &b, std::size_t order)
{
    std::vector<C> out(order + 1, C(0));
    for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Coefficients of sqrt(p) through z^order, for p with constant term 1.
// Each coefficient follows from s^2 = p: 2 s_n = p_n - sum_{0<k<n} s_k s_{n-k}.
inline std::vector<Poly> series_sqrt_expand(const std::vector<Poly> &p, std::size_t order)
{
    if (p.empty() || !(p[0] == Poly(1))) {
        throw std::invalid_argument("series_sqrt_expand: constant term must be 1");
    }
    const Rational half = make_rational(1, 2);
    std::vector<Poly> s(order + 1);
    s[0] = Poly(1);
    for (std::size_t n = 1; n <= order; ++n) {
        Poly acc = n < p.size() ? p[n] : Poly();
        for (std::size_t k = 1; k < n; ++k) {
            acc -= s[k] * s[n - k];
        }
        s[n] = acc * half;
    }
    return s;
}

} // namespace parkhopf

#endif

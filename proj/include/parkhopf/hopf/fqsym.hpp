#ifndef PARKHOPF_HOPF_FQSYM_HPP
#define PARKHOPF_HOPF_FQSYM_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <parkhopf/combinat/words.hpp>
#include <parkhopf/exact/lincomb.hpp>

namespace parkhopf::hopf
{

// FQSym in the G basis; F_sigma = G_{sigma^-1}.
using FQSymElem = LinComb<Permutation>;

inline FQSymElem fqsym_G(const Permutation &sigma, const Rational &c = 1)
{
    return FQSymElem(sigma, c);
}

inline FQSymElem fqsym_F(const Permutation &sigma, const Rational &c = 1)
{
    return FQSymElem(inverse(sigma), c);
}

inline FQSymElem fqsym_generator()
{
    return fqsym_G(Permutation{1});
}

namespace detail
{

enum class Half { all, left, right };

// Convolution: gamma = u v with std(u) = alpha and std(v) = beta. The left
// half keeps the words where the overall maximum lies in u.
inline FQSymElem convolution(const Permutation &alpha, const Permutation &beta, Half half)
{
    const auto n = alpha.size(), m = beta.size();
    FQSymElem out;
    std::vector<bool> in_u(n + m, false);
    std::fill(in_u.begin(), in_u.begin() + static_cast<std::ptrdiff_t>(n), true);
    do {
        if (n > 0 && m > 0) {
            const bool max_in_u = in_u.back();
            if ((half == Half::left && !max_in_u) || (half == Half::right && max_in_u)) {
                continue;
            }
        }
        std::vector<Letter> u_vals, v_vals;
        for (std::size_t i = 0; i < n + m; ++i) {
            (in_u[i] ? u_vals : v_vals).push_back(static_cast<Letter>(i + 1));
        }
        Word gamma;
        gamma.reserve(n + m);
        for (auto a : alpha.letters()) {
            gamma.push_back(u_vals[static_cast<std::size_t>(a - 1)]);
        }
        for (auto b : beta.letters()) {
            gamma.push_back(v_vals[static_cast<std::size_t>(b - 1)]);
        }
        out.add_term(Permutation::trusted(std::move(gamma)), 1);
    } while (std::prev_permutation(in_u.begin(), in_u.end()));
    return out;
}

} // namespace detail

inline FQSymElem fqsym_product(const FQSymElem &a, const FQSymElem &b)
{
    return bilinear(a, b, [](const Permutation &x, const Permutation &y) {
        return detail::convolution(x, y, detail::Half::all);
    });
}

// Terms with max(v) < max(u). Defined on nonempty keys only.
inline FQSymElem fqsym_left(const FQSymElem &a, const FQSymElem &b)
{
    return bilinear(a, b, [](const Permutation &x, const Permutation &y) {
        if (x.empty() || y.empty()) {
            throw std::invalid_argument("fqsym_left: partial products need nonempty keys");
        }
        return detail::convolution(x, y, detail::Half::left);
    });
}

inline FQSymElem fqsym_right(const FQSymElem &a, const FQSymElem &b)
{
    return bilinear(a, b, [](const Permutation &x, const Permutation &y) {
        if (x.empty() || y.empty()) {
            throw std::invalid_argument("fqsym_right: partial products need nonempty keys");
        }
        return detail::convolution(x, y, detail::Half::right);
    });
}

// <G_sigma, G_tau> = [sigma = tau^-1], extended bilinearly.
inline Rational fqsym_scalar(const FQSymElem &a, const FQSymElem &b)
{
    Rational s = 0;
    for (const auto &[k, c] : a) {
        s += c * b.coeff(inverse(k));
    }
    return s;
}

} // namespace parkhopf::hopf

#endif

#ifndef PARKHOPF_HOPF_CQSYM_HPP
#define PARKHOPF_HOPF_CQSYM_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <parkhopf/combinat/enumerate.hpp>
#include <parkhopf/combinat/text.hpp>
#include <parkhopf/combinat/words.hpp>
#include <parkhopf/exact/linalg.hpp>
#include <parkhopf/exact/lincomb.hpp>
#include <parkhopf/hopf/pqsym.hpp>

namespace parkhopf::hopf
{

// CQSym in the P basis: P^pi is the sum of F_a over the rearrangements a of pi.
using CQSymElem = LinComb<NDPF>;
using CQSymTensor = Tensor<NDPF>;

inline CQSymElem cqsym_P(const NDPF &pi, const Rational &c = 1)
{
    return CQSymElem(pi, c);
}

inline CQSymElem cqsym_generator()
{
    return cqsym_P(NDPF{1});
}

// P^a > P^b = P^{a . b[|a|]}; this is also the ordinary product.
inline CQSymElem cqsym_succ(const CQSymElem &a, const CQSymElem &b)
{
    return bilinear(a, b, [](const NDPF &x, const NDPF &y) {
        return CQSymElem(NDPF::trusted(shifted_concat_len(x.letters(), y.letters())));
    });
}

inline CQSymElem cqsym_product(const CQSymElem &a, const CQSymElem &b)
{
    return cqsym_succ(a, b);
}

// P^a < P^b = P^{a . b[max(a) - 1]}.
inline CQSymElem cqsym_prec(const CQSymElem &a, const CQSymElem &b)
{
    return bilinear(a, b, [](const NDPF &x, const NDPF &y) {
        if (x.empty()) {
            throw std::invalid_argument("cqsym_prec: empty left key");
        }
        return CQSymElem(NDPF::trusted(shifted_concat_max(x.letters(), y.letters())));
    });
}

inline PQSymElem cqsym_expand_F_key(const NDPF &pi)
{
    PQSymElem out;
    Word w = pi.letters();
    do {
        out.add_term(ParkingFunction::trusted(w), 1);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

inline PQSymElem cqsym_expand_F(const CQSymElem &a)
{
    return apply_linear(a, cqsym_expand_F_key);
}

// Inverse of cqsym_expand_F on its image.
inline CQSymElem pqsym_project_P(const PQSymElem &a)
{
    CQSymElem out;
    PQSymElem rest = a;
    while (!rest.is_zero()) {
        const auto [key, coeff] = *rest.begin();
        const NDPF pi = to_ndpf(key);
        out.add_term(pi, coeff);
        const auto members = cqsym_expand_F_key(pi);
        rest -= members * coeff;
        for (const auto &[a, c] : members) {
            if (rest.contains(a)) {
                throw NotInSubalgebra("not constant on rearrangement classes at F_" + to_string(a.letters()));
            }
        }
    }
    return out;
}

// Non-overlapping splitting with both halves parkized; the generator is primitive.
inline CQSymTensor dup_coproduct_key(const NDPF &pi)
{
    CQSymTensor out;
    const auto &w = pi.letters();
    for (std::size_t k = 1; k < w.size(); ++k) {
        const Word left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
        const Word right(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
        out.add_term({NDPF(parkize(left)), NDPF(parkize(right))}, 1);
    }
    return out;
}

inline CQSymTensor dup_coproduct(const CQSymElem &a)
{
    return apply_linear(a, dup_coproduct_key);
}

// {a, b} = a < b - a > b.
inline CQSymElem dup_bracket(const CQSymElem &a, const CQSymElem &b)
{
    return cqsym_prec(a, b) - cqsym_succ(a, b);
}

inline std::size_t primitive_dimension(int n)
{
    if (n < 1 || n > 7) {
        throw std::out_of_range("primitive_dimension: n must lie in 1..7");
    }
    return kernel_dimension(enumerate_ndpf(n), dup_coproduct_key, [](const NDPF &p) { return p.size(); });
}

} // namespace parkhopf::hopf

#endif

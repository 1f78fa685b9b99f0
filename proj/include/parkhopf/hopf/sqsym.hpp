#ifndef PARKHOPF_HOPF_SQSYM_HPP
#define PARKHOPF_HOPF_SQSYM_HPP

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include <parkhopf/combinat/quasi_ribbon.hpp>
#include <parkhopf/combinat/text.hpp>
#include <parkhopf/combinat/words.hpp>
#include <parkhopf/exact/lincomb.hpp>
#include <parkhopf/hopf/pqsym.hpp>

namespace parkhopf::hopf
{

// SQSym in the P basis: P_q is the sum of F_a over the hypoplactic class q.
using SQSymElem = LinComb<QuasiRibbon>;

inline SQSymElem sqsym_P(const QuasiRibbon &q, const Rational &c = 1)
{
    return SQSymElem(q, c);
}

inline SQSymElem sqsym_generator()
{
    return sqsym_P(QuasiRibbon(NDPF{1}, {}));
}

// Permutations of size n whose descent set is exactly d (positions 1..n-1).
inline std::vector<Word> permutations_with_descent_set(int n, const std::vector<int> &d)
{
    std::vector<bool> is_descent(static_cast<std::size_t>(n) + 1, false);
    for (auto i : d) {
        is_descent[static_cast<std::size_t>(i)] = true;
    }
    std::vector<Word> out;
    Word w;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    std::function<void()> rec = [&] {
        const auto k = static_cast<int>(w.size());
        if (k == n) {
            out.push_back(w);
            return;
        }
        for (Letter v = 1; v <= n; ++v) {
            if (used[static_cast<std::size_t>(v)]) {
                continue;
            }
            if (k > 0 && (w.back() > v) != is_descent[static_cast<std::size_t>(k)]) {
                continue;
            }
            used[static_cast<std::size_t>(v)] = true;
            w.push_back(v);
            rec();
            w.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    rec();
    return out;
}

// The class of q is {a : a_{tau(i)} = pi_i} with tau running over the
// permutations whose descent set is the bar set of q.
inline PQSymElem sqsym_expand_F_key(const QuasiRibbon &q)
{
    const auto &pi = q.word().letters();
    const auto n = static_cast<int>(pi.size());
    PQSymElem out;
    for (const auto &tau : permutations_with_descent_set(n, q.bars())) {
        Word a(pi.size());
        for (std::size_t i = 0; i < pi.size(); ++i) {
            a[static_cast<std::size_t>(tau[i] - 1)] = pi[i];
        }
        out.add_term(ParkingFunction::trusted(std::move(a)), 1);
    }
    return out;
}

inline PQSymElem sqsym_expand_F(const SQSymElem &a)
{
    return apply_linear(a, sqsym_expand_F_key);
}

// Inverse of sqsym_expand_F on its image.
inline SQSymElem sqsym_project_P(const PQSymElem &a)
{
    SQSymElem out;
    PQSymElem rest = a;
    while (!rest.is_zero()) {
        const auto [key, coeff] = *rest.begin();
        const auto q = hypoplactic_quasi_ribbon(key);
        out.add_term(q, coeff);
        const auto members = sqsym_expand_F_key(q);
        rest -= members * coeff;
        for (const auto &[a, c] : members) {
            if (rest.contains(a)) {
                throw NotInSubalgebra("not constant on hypoplactic classes at F_" + to_string(a.letters()));
            }
        }
    }
    return out;
}

// Product computed in PQSym and regrouped; regrouping failure is a bug.
inline SQSymElem sqsym_product(const SQSymElem &a, const SQSymElem &b)
{
    return sqsym_project_P(pqsym_product(sqsym_expand_F(a), sqsym_expand_F(b)));
}

namespace detail
{

inline QuasiRibbon join_ribbons(const QuasiRibbon &a, const QuasiRibbon &b, Letter shift_by, bool bar)
{
    Word w = concat(a.word().letters(), shift(b.word().letters(), shift_by));
    std::vector<int> bars = a.bars();
    const auto n = static_cast<int>(a.size());
    if (bar && !a.empty() && !b.empty()) {
        bars.push_back(n);
    }
    for (auto i : b.bars()) {
        bars.push_back(i + n);
    }
    return QuasiRibbon(NDPF(std::move(w)), std::move(bars));
}

} // namespace detail

// q' > q'': shift by |q'|, bars kept.
inline SQSymElem tridup_succ(const SQSymElem &a, const SQSymElem &b)
{
    return bilinear(a, b, [](const QuasiRibbon &x, const QuasiRibbon &y) {
        return SQSymElem(detail::join_ribbons(x, y, static_cast<Letter>(x.size()), false));
    });
}

// q' < q'': shift by max(q') - 1, bars kept.
inline SQSymElem tridup_prec(const SQSymElem &a, const SQSymElem &b)
{
    return bilinear(a, b, [](const QuasiRibbon &x, const QuasiRibbon &y) {
        if (x.empty()) {
            throw std::invalid_argument("tridup_prec: empty left key");
        }
        return SQSymElem(detail::join_ribbons(x, y, x.word().max() - 1, false));
    });
}

// q' o q'': shift by |q'| with a new bar at the junction.
inline SQSymElem tridup_mid(const SQSymElem &a, const SQSymElem &b)
{
    return bilinear(a, b, [](const QuasiRibbon &x, const QuasiRibbon &y) {
        return SQSymElem(detail::join_ribbons(x, y, static_cast<Letter>(x.size()), true));
    });
}

} // namespace parkhopf::hopf

#endif

#ifndef PARKHOPF_HOPF_WQSYM_HPP
#define PARKHOPF_HOPF_WQSYM_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <parkhopf/combinat/words.hpp>
#include <parkhopf/exact/lincomb.hpp>
#include <parkhopf/hopf/fqsym.hpp>

namespace parkhopf::hopf
{

// WQSym in the M basis, indexed by packed words.
using WQSymElem = LinComb<PackedWord>;

inline WQSymElem wqsym_M(const PackedWord &u, const Rational &c = 1)
{
    return WQSymElem(u, c);
}

inline WQSymElem wqsym_generator()
{
    return wqsym_M(PackedWord{1});
}

struct WQSymThirds {
    WQSymElem left;
    WQSymElem mid;
    WQSymElem right;
};

namespace detail
{

// All subsets of {1..k} of size r, as sorted value lists.
inline std::vector<std::vector<Letter>> subsets_of_size(int k, int r)
{
    std::vector<std::vector<Letter>> out;
    std::vector<bool> pick(static_cast<std::size_t>(k), false);
    std::fill(pick.begin(), pick.begin() + r, true);
    do {
        std::vector<Letter> s;
        for (int i = 0; i < k; ++i) {
            if (pick[static_cast<std::size_t>(i)]) {
                s.push_back(i + 1);
            }
        }
        out.push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

inline Word relabel(const Word &u, const std::vector<Letter> &values)
{
    Word w;
    w.reserve(u.size());
    for (auto l : u) {
        w.push_back(values[static_cast<std::size_t>(l - 1)]);
    }
    return w;
}

// Packed words w = w' w'' with pack(w') = u and pack(w'') = v, sorted into
// thirds by comparing max(w'') with max(w').
inline WQSymThirds packed_convolution(const PackedWord &u, const PackedWord &v)
{
    WQSymThirds out;
    const int r = u.empty() ? 0 : u.max(), s = v.empty() ? 0 : v.max();
    for (int k = std::max(r, s); k <= r + s; ++k) {
        for (const auto &a : subsets_of_size(k, r)) {
            std::vector<Letter> outside;
            std::vector<bool> in_a(static_cast<std::size_t>(k) + 1, false);
            for (auto x : a) {
                in_a[static_cast<std::size_t>(x)] = true;
            }
            for (int x = 1; x <= k; ++x) {
                if (!in_a[static_cast<std::size_t>(x)]) {
                    outside.push_back(x);
                }
            }
            // b = outside plus r + s - k values chosen from a.
            for (const auto &shared_idx : subsets_of_size(r, r + s - k)) {
                std::vector<Letter> b = outside;
                for (auto i : shared_idx) {
                    b.push_back(a[static_cast<std::size_t>(i - 1)]);
                }
                std::sort(b.begin(), b.end());
                auto w = PackedWord::trusted(concat(relabel(u.letters(), a), relabel(v.letters(), b)));
                const Letter ma = a.empty() ? 0 : a.back(), mb = b.empty() ? 0 : b.back();
                auto &third = mb < ma ? out.left : (mb == ma ? out.mid : out.right);
                third.add_term(std::move(w), 1);
            }
        }
    }
    return out;
}

} // namespace detail

inline WQSymElem wqsym_product(const WQSymElem &a, const WQSymElem &b)
{
    return bilinear(a, b, [](const PackedWord &x, const PackedWord &y) {
        auto t = detail::packed_convolution(x, y);
        return t.left + t.mid + t.right;
    });
}

inline WQSymThirds wqsym_thirds(const WQSymElem &a, const WQSymElem &b)
{
    WQSymThirds out;
    for (const auto &[ka, ca] : a) {
        for (const auto &[kb, cb] : b) {
            if (ka.empty() || kb.empty()) {
                throw std::invalid_argument("wqsym_thirds: partial products need nonempty keys");
            }
            const auto t = detail::packed_convolution(ka, kb);
            out.left += t.left * (ca * cb);
            out.mid += t.mid * (ca * cb);
            out.right += t.right * (ca * cb);
        }
    }
    return out;
}

inline WQSymElem wqsym_left(const WQSymElem &a, const WQSymElem &b)
{
    return wqsym_thirds(a, b).left;
}

inline WQSymElem wqsym_mid(const WQSymElem &a, const WQSymElem &b)
{
    return wqsym_thirds(a, b).mid;
}

inline WQSymElem wqsym_right(const WQSymElem &a, const WQSymElem &b)
{
    return wqsym_thirds(a, b).right;
}

// G_sigma -> sum of M_u over packed words u with std(u) = sigma. Along the
// positions of 1, 2, ..., n in sigma, u may stay constant exactly where those
// positions increase.
inline WQSymElem embed_fqsym_wqsym_key(const Permutation &sigma)
{
    const auto n = sigma.size();
    WQSymElem out;
    if (n == 0) {
        out.add_term(PackedWord{}, 1);
        return out;
    }
    const auto pos = inverse_permutation(sigma.letters());
    std::vector<std::size_t> free_steps;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (pos[i] < pos[i + 1]) {
            free_steps.push_back(i);
        }
    }
    const std::size_t count = std::size_t{1} << free_steps.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
        std::vector<bool> stay(n, false);
        for (std::size_t j = 0; j < free_steps.size(); ++j) {
            stay[free_steps[j]] = (mask >> j) & 1u;
        }
        Word u(n);
        Letter value = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0 && !stay[i - 1]) {
                ++value;
            }
            u[static_cast<std::size_t>(pos[i] - 1)] = value;
        }
        out.add_term(PackedWord::trusted(std::move(u)), 1);
    }
    return out;
}

inline WQSymElem embed_fqsym_wqsym(const FQSymElem &a)
{
    return apply_linear(a, embed_fqsym_wqsym_key);
}

} // namespace parkhopf::hopf

#endif

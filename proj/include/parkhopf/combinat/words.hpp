#ifndef PARKHOPF_COMBINAT_WORDS_HPP
#define PARKHOPF_COMBINAT_WORDS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace parkhopf
{

using Letter = int;
using Word = std::vector<Letter>;

// Largest word length handled by the enumerators.
inline constexpr int max_enumeration_size = 12;

inline Letter max_letter(const Word &w)
{
    return w.empty() ? 0 : *std::max_element(w.begin(), w.end());
}

inline Word sort_ascending(Word w)
{
    std::sort(w.begin(), w.end());
    return w;
}

inline bool is_parking(const Word &w)
{
    const auto s = sort_ascending(w);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > static_cast<Letter>(i + 1)) {
            return false;
        }
    }
    return true;
}

inline bool is_nondecreasing(const Word &w)
{
    return std::is_sorted(w.begin(), w.end());
}

inline bool is_permutation(const Word &w)
{
    std::vector<bool> seen(w.size() + 1, false);
    for (auto a : w) {
        if (a < 1 || a > static_cast<Letter>(w.size()) || seen[static_cast<std::size_t>(a)]) {
            return false;
        }
        seen[static_cast<std::size_t>(a)] = true;
    }
    return true;
}

inline bool is_packed(const Word &w)
{
    const auto m = max_letter(w);
    std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
    for (auto a : w) {
        if (a < 1) {
            return false;
        }
        seen[static_cast<std::size_t>(a)] = true;
    }
    for (Letter k = 1; k <= m; ++k) {
        if (!seen[static_cast<std::size_t>(k)]) {
            return false;
        }
    }
    return true;
}

// Every letter increased by k.
inline Word shift(Word w, Letter k)
{
    for (auto &a : w) {
        a += k;
    }
    return w;
}

inline Word concat(Word a, const Word &b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Repeatedly lowers the letters above the first "gap" until the word parks.
inline Word parkize(Word w)
{
    for (auto a : w) {
        if (a < 1) {
            throw std::invalid_argument("parkize: letters must be positive");
        }
    }
    const auto n = w.size();
    while (true) {
        std::vector<std::size_t> count(n + 2, 0);
        for (auto a : w) {
            if (static_cast<std::size_t>(a) <= n) {
                ++count[static_cast<std::size_t>(a)];
            }
        }
        std::size_t acc = 0, d = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            acc += count[i];
            if (acc < i) {
                d = i;
                break;
            }
        }
        if (d == 0) {
            return w;
        }
        for (auto &a : w) {
            if (a > static_cast<Letter>(d)) {
                --a;
            }
        }
    }
}

// Occurrences of the smallest letter get 1, 2, ... from left to right, then
// the next letter, and so on.
inline Word standardize(const Word &w)
{
    std::vector<std::size_t> idx(w.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return w[i] < w[j]; });
    Word out(w.size());
    for (std::size_t r = 0; r < idx.size(); ++r) {
        out[idx[r]] = static_cast<Letter>(r + 1);
    }
    return out;
}

inline Word pack(const Word &w)
{
    auto letters = sort_ascending(w);
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    Word out;
    out.reserve(w.size());
    for (auto a : w) {
        out.push_back(static_cast<Letter>(std::lower_bound(letters.begin(), letters.end(), a) - letters.begin()) + 1);
    }
    return out;
}

// (|w|_1, ..., |w|_max).
inline std::vector<int> evaluation(const Word &w)
{
    std::vector<int> ev(static_cast<std::size_t>(max_letter(w)), 0);
    for (auto a : w) {
        if (a < 1) {
            throw std::invalid_argument("evaluation: letters must be positive");
        }
        ++ev[static_cast<std::size_t>(a - 1)];
    }
    return ev;
}

// Evaluation padded with zeros to the given number of letters.
inline std::vector<int> evaluation(const Word &w, std::size_t alphabet_size)
{
    auto ev = evaluation(w);
    if (ev.size() > alphabet_size) {
        throw std::invalid_argument("evaluation: letter exceeds the alphabet size");
    }
    ev.resize(alphabet_size, 0);
    return ev;
}

inline Word inverse_permutation(const Word &sigma)
{
    Word inv(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        inv[static_cast<std::size_t>(sigma[i] - 1)] = static_cast<Letter>(i + 1);
    }
    return inv;
}

// Positions i (1-based) with w_i > w_{i+1}.
inline std::vector<int> descents(const Word &w)
{
    std::vector<int> d;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] > w[i + 1]) {
            d.push_back(static_cast<int>(i + 1));
        }
    }
    return d;
}

// Values i such that i+1 appears to the left of i in the permutation.
inline std::vector<int> recoils(const Word &sigma)
{
    return descents(inverse_permutation(sigma));
}

inline int major_index(const Word &w)
{
    int m = 0;
    for (auto d : descents(w)) {
        m += d;
    }
    return m;
}

// alpha . beta[|alpha|]
inline Word shifted_concat_len(const Word &alpha, const Word &beta)
{
    return concat(alpha, shift(beta, static_cast<Letter>(alpha.size())));
}

// alpha . beta[max(alpha) - 1]; the left word must be nonempty.
inline Word shifted_concat_max(const Word &alpha, const Word &beta)
{
    if (alpha.empty()) {
        throw std::invalid_argument("shifted_concat_max: empty left word has no maximum");
    }
    return concat(alpha, shift(beta, max_letter(alpha) - 1));
}

// All interleavings of a and b[k], listed with multiplicity. The result has
// binomial(|a|+|b|, |a|) entries; the words are generated by choosing the
// positions of the letters of a in increasing lexicographic order.
inline std::vector<Word> shifted_shuffle(const Word &a, const Word &b, Letter k)
{
    const auto sb = shift(b, k);
    const auto n = a.size() + sb.size();
    std::vector<Word> out;
    std::vector<bool> from_a(n, false);
    std::fill(from_a.begin(), from_a.begin() + static_cast<std::ptrdiff_t>(a.size()), true);
    // prev_permutation on a true-first mask enumerates every subset of positions.
    do {
        Word w;
        w.reserve(n);
        std::size_t i = 0, j = 0;
        for (std::size_t p = 0; p < n; ++p) {
            w.push_back(from_a[p] ? a[i++] : sb[j++]);
        }
        out.push_back(std::move(w));
    } while (std::prev_permutation(from_a.begin(), from_a.end()));
    return out;
}

// A word wrapped with a family invariant, checked at construction.
template <typename Policy>
class CheckedWord
{
public:
    CheckedWord() = default;
    explicit CheckedWord(Word w) : m_letters(std::move(w))
    {
        if (!Policy::valid(m_letters)) {
            throw std::invalid_argument(std::string("not a valid ") + Policy::name);
        }
    }
    CheckedWord(std::initializer_list<Letter> il) : CheckedWord(Word(il)) {}

    // For callers that have already established the invariant.
    static CheckedWord trusted(Word w)
    {
        CheckedWord c;
        c.m_letters = std::move(w);
        return c;
    }

    const Word &letters() const
    {
        return m_letters;
    }
    std::size_t size() const
    {
        return m_letters.size();
    }
    bool empty() const
    {
        return m_letters.empty();
    }
    Letter operator[](std::size_t i) const
    {
        return m_letters[i];
    }
    Letter max() const
    {
        return max_letter(m_letters);
    }

    friend auto operator<=>(const CheckedWord &, const CheckedWord &) = default;
    friend bool operator==(const CheckedWord &, const CheckedWord &) = default;

private:
    Word m_letters;
};

struct parking_policy {
    static constexpr const char *name = "parking function";
    static bool valid(const Word &w)
    {
        return is_parking(w);
    }
};

struct ndpf_policy {
    static constexpr const char *name = "nondecreasing parking function";
    static bool valid(const Word &w)
    {
        return is_nondecreasing(w) && is_parking(w);
    }
};

struct permutation_policy {
    static constexpr const char *name = "permutation";
    static bool valid(const Word &w)
    {
        return is_permutation(w);
    }
};

struct packed_policy {
    static constexpr const char *name = "packed word";
    static bool valid(const Word &w)
    {
        return is_packed(w);
    }
};

using ParkingFunction = CheckedWord<parking_policy>;
using NDPF = CheckedWord<ndpf_policy>;
using Permutation = CheckedWord<permutation_policy>;
using PackedWord = CheckedWord<packed_policy>;

inline ParkingFunction parkize_pf(const Word &w)
{
    return ParkingFunction::trusted(parkize(w));
}

inline NDPF to_ndpf(const ParkingFunction &a)
{
    return NDPF::trusted(sort_ascending(a.letters()));
}

inline Permutation std_perm(const Word &w)
{
    return Permutation::trusted(standardize(w));
}

inline Permutation inverse(const Permutation &sigma)
{
    return Permutation::trusted(inverse_permutation(sigma.letters()));
}

} // namespace parkhopf

#endif

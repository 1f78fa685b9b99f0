#ifndef PARKHOPF_COMBINAT_COMPOSITION_HPP
#define PARKHOPF_COMBINAT_COMPOSITION_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace parkhopf
{

// A finite sequence of positive integers. Extended compositions also admit
// zero parts; they index the words S^{ev(pi).0} where S_0 is a separate
// generator.
class Composition
{
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts, bool extended = false)
        : m_parts(std::move(parts)), m_extended(extended)
    {
        for (auto p : m_parts) {
            if (p < 0 || (p == 0 && !m_extended)) {
                throw std::invalid_argument(extended ? "composition parts must be nonnegative"
                                                     : "composition parts must be positive");
            }
        }
    }
    Composition(std::initializer_list<int> il) : Composition(std::vector<int>(il)) {}

    static Composition extended(std::vector<int> parts)
    {
        return Composition(std::move(parts), true);
    }

    // Composition of n with the given descent set (a subset of 1..n-1).
    static Composition from_descents(int n, const std::vector<int> &descent_set)
    {
        std::vector<int> parts;
        int prev = 0;
        for (auto d : descent_set) {
            parts.push_back(d - prev);
            prev = d;
        }
        if (n > 0) {
            parts.push_back(n - prev);
        }
        return Composition(std::move(parts));
    }

    const std::vector<int> &parts() const
    {
        return m_parts;
    }
    bool is_extended() const
    {
        return m_extended;
    }
    // l(I)
    std::size_t length() const
    {
        return m_parts.size();
    }
    // |I|
    int size() const
    {
        int s = 0;
        for (auto p : m_parts) {
            s += p;
        }
        return s;
    }
    bool empty() const
    {
        return m_parts.empty();
    }

    // Partial sums i_1, i_1+i_2, ..., excluding the total.
    std::vector<int> descent_set() const
    {
        std::vector<int> d;
        int acc = 0;
        for (std::size_t k = 0; k + 1 < m_parts.size(); ++k) {
            acc += m_parts[k];
            d.push_back(acc);
        }
        return d;
    }

    // The extended flag only licenses zero parts; it does not affect identity.
    friend auto operator<=>(const Composition &a, const Composition &b)
    {
        return a.m_parts <=> b.m_parts;
    }
    friend bool operator==(const Composition &a, const Composition &b)
    {
        return a.m_parts == b.m_parts;
    }

private:
    std::vector<int> m_parts;
    bool m_extended = false;
};

// I . J
inline Composition concat(const Composition &a, const Composition &b)
{
    auto parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Composition(std::move(parts), a.is_extended() || b.is_extended());
}

// I |> J: the last part of I fused with the first part of J.
inline Composition near_concat(const Composition &a, const Composition &b)
{
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("near_concat: both compositions must be nonempty");
    }
    auto parts = a.parts();
    parts.back() += b.parts().front();
    parts.insert(parts.end(), b.parts().begin() + 1, b.parts().end());
    return Composition(std::move(parts), a.is_extended() || b.is_extended());
}

// Ribbon conjugate: descent set complemented in 1..n-1, then reversed.
inline Composition conjugate(const Composition &c)
{
    const int n = c.size();
    if (n == 0) {
        return c;
    }
    const auto d = c.descent_set();
    std::vector<int> conj;
    for (int i = n - 1; i >= 1; --i) {
        if (!std::binary_search(d.begin(), d.end(), i)) {
            conj.push_back(n - i);
        }
    }
    return Composition::from_descents(n, conj);
}

inline Composition reverse(const Composition &c)
{
    auto parts = c.parts();
    std::reverse(parts.begin(), parts.end());
    return Composition(std::move(parts), c.is_extended());
}

// Reverse refinement order: I <= J iff the parts of I are sums of
// consecutive parts of J.
inline bool coarser_leq(const Composition &i, const Composition &j)
{
    if (i.size() != j.size()) {
        return false;
    }
    std::size_t pos = 0;
    for (auto part : i.parts()) {
        int acc = 0;
        while (acc < part && pos < j.length()) {
            acc += j.parts()[pos++];
        }
        if (acc != part) {
            return false;
        }
    }
    return pos == j.length();
}

// Drops zero parts.
inline Composition remove_zeros(const Composition &c)
{
    std::vector<int> parts;
    for (auto p : c.parts()) {
        if (p != 0) {
            parts.push_back(p);
        }
    }
    return Composition(std::move(parts));
}

// t(w): multiplicities of the letters of w, zeros removed.
inline Composition packed_evaluation(const std::vector<int> &word)
{
    if (word.empty()) {
        return {};
    }
    std::vector<int> ev(static_cast<std::size_t>(*std::max_element(word.begin(), word.end())), 0);
    for (auto a : word) {
        if (a < 1) {
            throw std::invalid_argument("packed_evaluation: letters must be positive");
        }
        ++ev[static_cast<std::size_t>(a - 1)];
    }
    return remove_zeros(Composition::extended(std::move(ev)));
}

// All compositions J <= I (coarsenings), in lexicographic order.
inline std::vector<Composition> coarsenings(const Composition &c)
{
    std::vector<Composition> out;
    const auto k = c.length();
    if (k == 0) {
        out.push_back(c);
        return out;
    }
    // Each of the k-1 junctions is either kept or merged.
    for (std::size_t mask = 0; mask < (std::size_t{1} << (k - 1)); ++mask) {
        std::vector<int> parts{c.parts()[0]};
        for (std::size_t p = 1; p < k; ++p) {
            if (mask & (std::size_t{1} << (p - 1))) {
                parts.back() += c.parts()[p];
            } else {
                parts.push_back(c.parts()[p]);
            }
        }
        out.emplace_back(std::move(parts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace parkhopf

#endif

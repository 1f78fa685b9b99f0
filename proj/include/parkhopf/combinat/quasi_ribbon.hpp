#ifndef PARKHOPF_COMBINAT_QUASI_RIBBON_HPP
#define PARKHOPF_COMBINAT_QUASI_RIBBON_HPP

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include <parkhopf/combinat/composition.hpp>
#include <parkhopf/combinat/words.hpp>

namespace parkhopf
{

// A nondecreasing parking function with bars at some strict ascents. A bar
// at position i sits between letters i and i+1 (1-based).
class QuasiRibbon
{
public:
    QuasiRibbon() = default;
    QuasiRibbon(NDPF word, std::vector<int> bars) : m_word(std::move(word)), m_bars(std::move(bars))
    {
        std::sort(m_bars.begin(), m_bars.end());
        if (std::adjacent_find(m_bars.begin(), m_bars.end()) != m_bars.end()) {
            throw std::invalid_argument("quasi-ribbon: repeated bar");
        }
        const auto n = static_cast<int>(m_word.size());
        for (auto b : m_bars) {
            if (b < 1 || b >= n) {
                throw std::invalid_argument("quasi-ribbon: bar position out of range");
            }
            if (!(m_word[static_cast<std::size_t>(b - 1)] < m_word[static_cast<std::size_t>(b)])) {
                throw std::invalid_argument("quasi-ribbon: bar must sit at a strict ascent");
            }
        }
    }

    const NDPF &word() const
    {
        return m_word;
    }
    const std::vector<int> &bars() const
    {
        return m_bars;
    }
    std::size_t size() const
    {
        return m_word.size();
    }
    std::size_t bar_count() const
    {
        return m_bars.size();
    }
    bool empty() const
    {
        return m_word.empty();
    }

    // Lengths of the segments cut out by the bars.
    Composition shape() const
    {
        return Composition::from_descents(static_cast<int>(size()), m_bars);
    }

    friend bool operator==(const QuasiRibbon &, const QuasiRibbon &) = default;
    friend bool operator<(const QuasiRibbon &a, const QuasiRibbon &b)
    {
        return std::forward_as_tuple(a.m_word, a.m_bars.size(), a.m_bars) <
               std::forward_as_tuple(b.m_word, b.m_bars.size(), b.m_bars);
    }

private:
    NDPF m_word;
    std::vector<int> m_bars;
};

// P(a): sorted word with bars at the recoils of std(a).
inline QuasiRibbon hypoplactic_quasi_ribbon(const ParkingFunction &a)
{
    return QuasiRibbon(to_ndpf(a), recoils(standardize(a.letters())));
}

} // namespace parkhopf

#endif

#ifndef PARKHOPF_CHARS_SIGNED_HPP
#define PARKHOPF_CHARS_SIGNED_HPP

#include <bit>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <parkhopf/combinat/enumerate.hpp>
#include <parkhopf/combinat/text.hpp>
#include <parkhopf/combinat/words.hpp>

namespace parkhopf::chars
{

// A parking function together with a sign for each letter.
class SignedParkingFunction
{
public:
    SignedParkingFunction() = default;
    SignedParkingFunction(ParkingFunction base, std::vector<int> signs) : m_base(std::move(base)), m_signs(std::move(signs))
    {
        if (m_signs.size() != m_base.size()) {
            throw std::invalid_argument("signed parking function: sign count differs from length");
        }
        for (auto s : m_signs) {
            if (s != 1 && s != -1) {
                throw std::invalid_argument("signed parking function: signs must be +1 or -1");
            }
        }
    }

    // From the signed values e_i a_i.
    static SignedParkingFunction from_values(const Word &values)
    {
        Word base;
        std::vector<int> signs;
        for (auto v : values) {
            if (v == 0) {
                throw std::invalid_argument("signed parking function: zero letter");
            }
            base.push_back(v < 0 ? -v : v);
            signs.push_back(v < 0 ? -1 : 1);
        }
        return {ParkingFunction(std::move(base)), std::move(signs)};
    }

    const ParkingFunction &base() const
    {
        return m_base;
    }
    const std::vector<int> &signs() const
    {
        return m_signs;
    }
    std::size_t size() const
    {
        return m_base.size();
    }

    Word values() const
    {
        Word v;
        for (std::size_t i = 0; i < size(); ++i) {
            v.push_back(m_signs[i] * m_base[i]);
        }
        return v;
    }

    friend auto operator<=>(const SignedParkingFunction &a, const SignedParkingFunction &b) = default;
    friend bool operator==(const SignedParkingFunction &a, const SignedParkingFunction &b) = default;

private:
    ParkingFunction m_base;
    std::vector<int> m_signs;
};

inline std::string to_string(const SignedParkingFunction &s)
{
    return parkhopf::to_string(s.values());
}

inline SignedParkingFunction parse_signed(std::string_view s)
{
    return SignedParkingFunction::from_values(parse_word(s));
}

inline int minus_count(const SignedParkingFunction &s)
{
    int m = 0;
    for (auto e : s.signs()) {
        m += e < 0 ? 1 : 0;
    }
    return m;
}

namespace detail
{

inline bool signed_greater(const SignedParkingFunction &s, std::size_t i, std::size_t j)
{
    const auto vi = s.signs()[i] * s.base()[i];
    const auto vj = s.signs()[j] * s.base()[j];
    return vi > vj || (vi == vj && s.signs()[i] < 0);
}

} // namespace detail

// Pairs i < j with e_i a_i > e_j a_j, or equal values carrying a minus sign.
inline int signed_inversions(const SignedParkingFunction &s)
{
    int count = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            count += detail::signed_greater(s, i, j) ? 1 : 0;
        }
    }
    return count;
}

// Positions (1-based) of signed descents.
inline std::vector<int> signed_descents(const SignedParkingFunction &s)
{
    std::vector<int> d;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (detail::signed_greater(s, i, i + 1)) {
            d.push_back(static_cast<int>(i + 1));
        }
    }
    return d;
}

inline int signed_major_index(const SignedParkingFunction &s)
{
    int total = 0;
    for (auto d : signed_descents(s)) {
        total += d;
    }
    return total;
}

struct SignedStats {
    int minus_count = 0;
    int sinv = 0;
    std::vector<int> sdes;
    int smaj = 0;
};

inline SignedStats signed_stats(const SignedParkingFunction &s)
{
    SignedStats out;
    out.minus_count = minus_count(s);
    out.sinv = signed_inversions(s);
    out.sdes = signed_descents(s);
    out.smaj = signed_major_index(s);
    return out;
}

// All 2^n sign vectors, in lexicographic order with +1 first.
inline std::vector<std::vector<int>> all_signs(std::size_t n)
{
    std::vector<std::vector<int>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<int> e(n);
        for (std::size_t i = 0; i < n; ++i) {
            e[i] = (mask >> (n - 1 - i)) & 1 ? -1 : 1;
        }
        out.push_back(std::move(e));
    }
    return out;
}

inline std::vector<SignedParkingFunction> enumerate_signed_pf(int n)
{
    std::vector<SignedParkingFunction> out;
    for (const auto &a : enumerate_parking(n)) {
        for (auto &e : all_signs(static_cast<std::size_t>(n))) {
            out.emplace_back(a, std::move(e));
        }
    }
    return out;
}

// Shifted shuffle of signed words: letters of the right factor are shifted
// by the length of the left one, signs travel with their letters.
inline std::vector<SignedParkingFunction> signed_shifted_shuffle(const SignedParkingFunction &u, const SignedParkingFunction &v)
{
    const auto n = u.size(), m = v.size();
    std::vector<SignedParkingFunction> out;
    // Choose the positions taken by u through a bit mask of weight n.
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n + m)); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != n) {
            continue;
        }
        Word base;
        std::vector<int> signs;
        std::size_t i = 0, j = 0;
        for (std::size_t p = 0; p < n + m; ++p) {
            if ((mask >> p) & 1) {
                base.push_back(u.base()[i]);
                signs.push_back(u.signs()[i]);
                ++i;
            } else {
                base.push_back(v.base()[j] + static_cast<Letter>(n));
                signs.push_back(v.signs()[j]);
                ++j;
            }
        }
        out.emplace_back(ParkingFunction::trusted(std::move(base)), std::move(signs));
    }
    return out;
}

} // namespace parkhopf::chars

#endif

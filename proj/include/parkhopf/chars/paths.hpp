#ifndef PARKHOPF_CHARS_PATHS_HPP
#define PARKHOPF_CHARS_PATHS_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <parkhopf/chars/signed.hpp>
#include <parkhopf/combinat/words.hpp>

namespace parkhopf::chars
{

namespace detail
{

// Steps u, d and h move the height by +1, -1 and 0. The path must stay
// weakly above the axis and return to it.
inline void check_path(const std::string &steps, bool allow_h)
{
    int height = 0;
    for (auto c : steps) {
        if (c == 'u') {
            ++height;
        } else if (c == 'd') {
            --height;
        } else if (c == 'h' && allow_h) {
        } else {
            throw std::invalid_argument(std::string("path: unexpected step '") + c + "'");
        }
        if (height < 0) {
            throw std::invalid_argument("path: goes below the axis");
        }
    }
    if (height != 0) {
        throw std::invalid_argument("path: does not end on the axis");
    }
}

} // namespace detail

class DyckPath
{
public:
    DyckPath() = default;
    explicit DyckPath(std::string steps) : m_steps(std::move(steps))
    {
        detail::check_path(m_steps, false);
    }
    const std::string &steps() const
    {
        return m_steps;
    }
    std::size_t semi_length() const
    {
        return m_steps.size() / 2;
    }
    friend auto operator<=>(const DyckPath &, const DyckPath &) = default;
    friend bool operator==(const DyckPath &, const DyckPath &) = default;

private:
    std::string m_steps;
};

// An h step has width 2 and counts for one unit of semi-length.
class SchroderPath
{
public:
    SchroderPath() = default;
    explicit SchroderPath(std::string steps) : m_steps(std::move(steps))
    {
        detail::check_path(m_steps, true);
    }
    const std::string &steps() const
    {
        return m_steps;
    }
    std::size_t semi_length() const
    {
        return static_cast<std::size_t>(std::count(m_steps.begin(), m_steps.end(), 'u') + horizontal_steps());
    }
    int horizontal_steps() const
    {
        return static_cast<int>(std::count(m_steps.begin(), m_steps.end(), 'h'));
    }
    friend auto operator<=>(const SchroderPath &, const SchroderPath &) = default;
    friend bool operator==(const SchroderPath &, const SchroderPath &) = default;

private:
    std::string m_steps;
};

// Each up step is labelled by its diagonal: from (x, y) the label is
// (x - y) / 2 + 1.
inline NDPF dyck_encode(const DyckPath &p)
{
    Word w;
    int x = 0, y = 0;
    for (auto c : p.steps()) {
        if (c == 'u') {
            w.push_back((x - y) / 2 + 1);
            ++y;
        } else {
            --y;
        }
        ++x;
    }
    return NDPF::trusted(std::move(w));
}

inline DyckPath dyck_decode(const NDPF &pi)
{
    std::string steps;
    Letter diagonal = 1;
    for (auto a : pi.letters()) {
        steps.append(static_cast<std::size_t>(a - diagonal), 'd');
        steps.push_back('u');
        diagonal = a;
    }
    const auto ups = pi.size();
    const auto downs = static_cast<std::size_t>(std::count(steps.begin(), steps.end(), 'd'));
    steps.append(ups - downs, 'd');
    return DyckPath(std::move(steps));
}

// Each h is read as the peak ud it replaces; the letter of that up step
// gets a minus sign.
inline SignedParkingFunction schroder_encode(const SchroderPath &p)
{
    std::string dyck;
    std::vector<int> signs;
    for (auto c : p.steps()) {
        if (c == 'h') {
            dyck += "ud";
            signs.push_back(-1);
        } else {
            dyck.push_back(c);
            if (c == 'u') {
                signs.push_back(1);
            }
        }
    }
    const auto pi = dyck_encode(DyckPath(std::move(dyck)));
    return {ParkingFunction::trusted(pi.letters()), std::move(signs)};
}

// Inverse of schroder_encode on its image: a minus sign must sit on the up
// step of a peak.
inline SchroderPath schroder_decode(const SignedParkingFunction &s)
{
    const auto &base = s.base().letters();
    if (!is_nondecreasing(base)) {
        throw std::invalid_argument("schroder_decode: letters must be nondecreasing");
    }
    const auto dyck = dyck_decode(NDPF::trusted(base)).steps();
    std::string out;
    std::size_t k = 0;
    for (std::size_t i = 0; i < dyck.size(); ++i) {
        if (dyck[i] != 'u') {
            out.push_back(dyck[i]);
            continue;
        }
        if (s.signs()[k++] < 0) {
            if (i + 1 >= dyck.size() || dyck[i + 1] != 'd') {
                throw std::invalid_argument("schroder_decode: a minus sign is not on a peak");
            }
            out.push_back('h');
            ++i;
        } else {
            out.push_back('u');
        }
    }
    return SchroderPath(std::move(out));
}

// Reorders the letters by the integer order on signed values.
inline SignedParkingFunction schroder_sort(const SignedParkingFunction &s)
{
    auto v = s.values();
    std::sort(v.begin(), v.end());
    return SignedParkingFunction::from_values(v);
}

inline std::vector<DyckPath> enumerate_dyck(int n)
{
    std::vector<DyckPath> out;
    for (const auto &pi : enumerate_ndpf(n)) {
        out.push_back(dyck_decode(pi));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail
{

inline void schroder_rec(int remaining, int height, std::string &cur, std::vector<SchroderPath> &out)
{
    if (remaining == 0 && height == 0) {
        out.emplace_back(cur);
        return;
    }
    // Each remaining unit of semi-length is an h or a u, and heights must
    // be closable.
    if (height > 0) {
        cur.push_back('d');
        schroder_rec(remaining, height - 1, cur, out);
        cur.pop_back();
    }
    if (remaining > 0) {
        cur.push_back('h');
        schroder_rec(remaining - 1, height, cur, out);
        cur.pop_back();
        cur.push_back('u');
        schroder_rec(remaining - 1, height + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

inline std::vector<SchroderPath> enumerate_schroder(int n)
{
    check_enumeration_size(n);
    std::vector<SchroderPath> out;
    std::string cur;
    detail::schroder_rec(n, 0, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

// Whether a peak ud occurs after the last h (or anywhere, if there is no h).
inline bool has_peak_after_last_h(const SchroderPath &p)
{
    const auto &s = p.steps();
    const auto last = s.rfind('h');
    const auto from = last == std::string::npos ? 0 : last + 1;
    return s.find("ud", from) != std::string::npos;
}

} // namespace parkhopf::chars

#endif

#ifndef PARKHOPF_COMBINAT_TEXT_HPP
#define PARKHOPF_COMBINAT_TEXT_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <parkhopf/combinat/binary_tree.hpp>
#include <parkhopf/combinat/composition.hpp>
#include <parkhopf/combinat/quasi_ribbon.hpp>
#include <parkhopf/combinat/words.hpp>

namespace parkhopf
{

// Letters below 10 are written as bare digits; any larger letter switches the
// whole word to comma separation.
inline std::string to_string(const Word &w)
{
    const bool commas = std::any_of(w.begin(), w.end(), [](Letter a) { return a >= 10 || a < 0; });
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (commas && i > 0) {
            s.push_back(',');
        }
        s += std::to_string(w[i]);
    }
    return s;
}

template <typename Policy>
std::string to_string(const CheckedWord<Policy> &w)
{
    return to_string(w.letters());
}

inline Word parse_word(std::string_view s)
{
    Word w;
    if (s.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= s.size()) {
            auto end = s.find(',', start);
            if (end == std::string_view::npos) {
                end = s.size();
            }
            const auto tok = std::string(s.substr(start, end - start));
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception &) {
                throw std::invalid_argument("malformed word: " + std::string(s));
            }
            if (used != tok.size()) {
                throw std::invalid_argument("malformed word: " + std::string(s));
            }
            w.push_back(v);
            start = end + 1;
        }
        return w;
    }
    for (auto c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("malformed word: " + std::string(s));
        }
        w.push_back(c - '0');
    }
    return w;
}

template <typename Checked>
Checked parse_checked(std::string_view s)
{
    return Checked(parse_word(s));
}

// Bars are written as '|' between letters, e.g. "11|3".
inline std::string to_string(const QuasiRibbon &q)
{
    const auto &w = q.word().letters();
    const bool commas = std::any_of(w.begin(), w.end(), [](Letter a) { return a >= 10; });
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) {
            if (std::binary_search(q.bars().begin(), q.bars().end(), static_cast<int>(i))) {
                s.push_back('|');
            } else if (commas) {
                s.push_back(',');
            }
        }
        s += std::to_string(w[i]);
    }
    return s;
}

inline QuasiRibbon parse_quasi_ribbon(std::string_view s)
{
    Word w;
    std::vector<int> bars;
    std::size_t start = 0;
    while (start <= s.size() && !s.empty()) {
        const auto end = std::min(s.find('|', start), s.size());
        const auto segment = parse_word(s.substr(start, end - start));
        if (segment.empty()) {
            throw std::invalid_argument("malformed quasi-ribbon: " + std::string(s));
        }
        if (!w.empty()) {
            bars.push_back(static_cast<int>(w.size()));
        }
        w.insert(w.end(), segment.begin(), segment.end());
        start = end + 1;
    }
    return QuasiRibbon(NDPF(std::move(w)), std::move(bars));
}

inline std::string to_string(const Composition &c)
{
    std::string s = "(";
    for (std::size_t i = 0; i < c.length(); ++i) {
        if (i > 0) {
            s.push_back(',');
        }
        s += std::to_string(c.parts()[i]);
    }
    return s + ")";
}

// Accepts "(2,1,1)", "2,1,1" or the compact "211" when all parts are digits.
inline Composition parse_composition(std::string_view s, bool extended = false)
{
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')') {
            throw std::invalid_argument("malformed composition: " + std::string(s));
        }
        s = s.substr(1, s.size() - 2);
    }
    if (s.empty()) {
        return Composition({}, extended);
    }
    return Composition(parse_word(s), extended);
}

inline std::string to_string(const BinaryTree &t)
{
    if (t.is_leaf()) {
        return ".";
    }
    return "(" + to_string(t.left()) + "," + to_string(t.right()) + ")";
}

namespace detail
{

inline BinaryTree parse_tree_at(std::string_view s, std::size_t &pos)
{
    if (pos >= s.size()) {
        throw std::invalid_argument("malformed tree: unexpected end");
    }
    if (s[pos] == '.') {
        ++pos;
        return BinaryTree::leaf();
    }
    if (s[pos] != '(') {
        throw std::invalid_argument("malformed tree at offset " + std::to_string(pos));
    }
    ++pos;
    auto left = parse_tree_at(s, pos);
    if (pos >= s.size() || s[pos] != ',') {
        throw std::invalid_argument("malformed tree: expected ','");
    }
    ++pos;
    auto right = parse_tree_at(s, pos);
    if (pos >= s.size() || s[pos] != ')') {
        throw std::invalid_argument("malformed tree: expected ')'");
    }
    ++pos;
    return {std::move(left), std::move(right)};
}

} // namespace detail

inline BinaryTree parse_tree(std::string_view s)
{
    std::size_t pos = 0;
    auto t = detail::parse_tree_at(s, pos);
    if (pos != s.size()) {
        throw std::invalid_argument("malformed tree: trailing characters");
    }
    return t;
}

} // namespace parkhopf

#endif

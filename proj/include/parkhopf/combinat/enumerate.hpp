#ifndef PARKHOPF_COMBINAT_ENUMERATE_HPP
#define PARKHOPF_COMBINAT_ENUMERATE_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <parkhopf/combinat/binary_tree.hpp>
#include <parkhopf/combinat/composition.hpp>
#include <parkhopf/combinat/quasi_ribbon.hpp>
#include <parkhopf/combinat/words.hpp>

namespace parkhopf
{

inline void check_enumeration_size(int n)
{
    if (n < 0 || n > max_enumeration_size) {
        throw std::out_of_range("enumeration size must lie in 0.." + std::to_string(max_enumeration_size));
    }
}

// Parking functions of length n in lexicographic order. A prefix is kept only
// if padding it with 1s still parks.
inline std::vector<ParkingFunction> enumerate_parking(int n)
{
    check_enumeration_size(n);
    std::vector<ParkingFunction> out;
    Word w;
    std::vector<int> count(static_cast<std::size_t>(n) + 2, 0);
    std::function<void()> rec = [&] {
        const auto k = static_cast<int>(w.size());
        if (k == n) {
            out.push_back(ParkingFunction::trusted(w));
            return;
        }
        for (Letter a = 1; a <= n; ++a) {
            ++count[static_cast<std::size_t>(a)];
            int acc = 0;
            bool ok = true;
            for (int i = 1; i <= n && ok; ++i) {
                acc += count[static_cast<std::size_t>(i)];
                ok = acc + (n - k - 1) >= i;
            }
            if (ok) {
                w.push_back(a);
                rec();
                w.pop_back();
            }
            --count[static_cast<std::size_t>(a)];
        }
    };
    rec();
    return out;
}

inline std::vector<NDPF> enumerate_ndpf(int n)
{
    check_enumeration_size(n);
    std::vector<NDPF> out;
    Word w;
    std::function<void()> rec = [&] {
        const auto k = static_cast<int>(w.size());
        if (k == n) {
            out.push_back(NDPF::trusted(w));
            return;
        }
        for (Letter a = w.empty() ? 1 : w.back(); a <= k + 1; ++a) {
            w.push_back(a);
            rec();
            w.pop_back();
        }
    };
    rec();
    return out;
}

inline std::vector<Permutation> enumerate_permutations(int n)
{
    check_enumeration_size(n);
    std::vector<Permutation> out;
    Word w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        out.push_back(Permutation::trusted(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// Packed words in lexicographic order; a prefix survives if its missing
// letters can still be supplied by the remaining positions.
inline std::vector<PackedWord> enumerate_packed(int n)
{
    check_enumeration_size(n);
    std::vector<PackedWord> out;
    Word w;
    std::function<void()> rec = [&] {
        if (static_cast<int>(w.size()) == n) {
            if (is_packed(w)) {
                out.push_back(PackedWord::trusted(w));
            }
            return;
        }
        for (Letter a = 1; a <= n; ++a) {
            w.push_back(a);
            const auto m = max_letter(w);
            std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
            for (auto b : w) {
                seen[static_cast<std::size_t>(b)] = true;
            }
            const auto missing = std::count(seen.begin() + 1, seen.end(), false);
            if (missing <= n - static_cast<int>(w.size())) {
                rec();
            }
            w.pop_back();
        }
    };
    rec();
    return out;
}

// Quasi-ribbons ordered by word, then number of bars, then bar positions.
inline std::vector<QuasiRibbon> enumerate_quasi_ribbons(int n)
{
    std::vector<QuasiRibbon> out;
    for (const auto &pi : enumerate_ndpf(n)) {
        std::vector<int> ascents;
        for (int i = 1; i < n; ++i) {
            if (pi[static_cast<std::size_t>(i - 1)] < pi[static_cast<std::size_t>(i)]) {
                ascents.push_back(i);
            }
        }
        std::vector<QuasiRibbon> block;
        for (std::size_t mask = 0; mask < (std::size_t{1} << ascents.size()); ++mask) {
            std::vector<int> bars;
            for (std::size_t j = 0; j < ascents.size(); ++j) {
                if (mask & (std::size_t{1} << j)) {
                    bars.push_back(ascents[j]);
                }
            }
            block.emplace_back(pi, std::move(bars));
        }
        std::sort(block.begin(), block.end());
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

// Compositions of n in lexicographic order of their part sequences.
inline std::vector<Composition> enumerate_compositions(int n)
{
    check_enumeration_size(n);
    std::vector<Composition> out;
    std::vector<int> parts;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            parts.push_back(p);
            rec(rest - p);
            parts.pop_back();
        }
    };
    rec(n);
    return out;
}

// Binary trees with n nodes ordered by left subtree size, then recursively.
inline std::vector<BinaryTree> enumerate_binary_trees(int n)
{
    check_enumeration_size(n);
    std::vector<std::vector<BinaryTree>> by_size{{BinaryTree::leaf()}};
    for (int m = 1; m <= n; ++m) {
        std::vector<BinaryTree> level;
        for (int k = 0; k < m; ++k) {
            for (const auto &l : by_size[static_cast<std::size_t>(k)]) {
                for (const auto &r : by_size[static_cast<std::size_t>(m - 1 - k)]) {
                    level.emplace_back(l, r);
                }
            }
        }
        by_size.push_back(std::move(level));
    }
    return by_size[static_cast<std::size_t>(n)];
}

} // namespace parkhopf

#endif

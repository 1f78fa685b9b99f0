#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <parkhopf/combinat/binary_tree.hpp>
#include <parkhopf/combinat/composition.hpp>
#include <parkhopf/combinat/enumerate.hpp>
#include <parkhopf/combinat/quasi_ribbon.hpp>
#include <parkhopf/combinat/text.hpp>
#include <parkhopf/combinat/words.hpp>
#include <parkhopf/exact/rational.hpp>

using namespace parkhopf;

namespace
{

// All words of length n over 1..k, lexicographically.
std::vector<Word> all_words(int n, int k)
{
    std::vector<Word> out;
    Word w(static_cast<std::size_t>(n), 1);
    while (true) {
        out.push_back(w);
        int i = n - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == k) {
            w[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0) {
            return out;
        }
        ++w[static_cast<std::size_t>(i)];
    }
}

bool parking_by_counting(const Word &w)
{
    const int n = static_cast<int>(w.size());
    for (int i = 1; i <= n; ++i) {
        if (std::count_if(w.begin(), w.end(), [i](Letter a) { return a <= i; }) < i) {
            return false;
        }
    }
    return true;
}

// The permutation order-isomorphic to w, ties broken left to right, found
// by trying every permutation.
Word standardize_by_search(const Word &w)
{
    Word sigma(w.size());
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < w.size() && ok; ++i) {
            for (std::size_t j = i + 1; j < w.size() && ok; ++j) {
                const bool before = w[i] < w[j] || (w[i] == w[j]);
                ok = before == (sigma[i] < sigma[j]);
            }
        }
        if (ok) {
            return sigma;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return {};
}

// Parkization described value by value: each distinct letter keeps its gap
// to the previous one unless that would break the parking condition.
Word parkize_by_values(const Word &w)
{
    auto values = sort_ascending(w);
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::map<Letter, Letter> image;
    Letter prev_old = 0, prev_new = 0;
    for (auto v : values) {
        const auto smaller = std::count_if(w.begin(), w.end(), [v](Letter a) { return a < v; });
        const Letter nv = std::min<Letter>(prev_new + (v - prev_old), static_cast<Letter>(smaller) + 1);
        image[v] = nv;
        prev_old = v;
        prev_new = nv;
    }
    Word out;
    for (auto a : w) {
        out.push_back(image[a]);
    }
    return out;
}

} // namespace

TEST(Words, IsParking)
{
    EXPECT_TRUE(is_parking({1, 1, 3}));
    EXPECT_TRUE(is_parking({}));
    EXPECT_FALSE(is_parking({2, 2}));
    EXPECT_TRUE(is_parking({3, 1, 1}));
    for (int n = 0; n <= 5; ++n) {
        for (const auto &w : all_words(n, n + 1)) {
            EXPECT_EQ(is_parking(w), parking_by_counting(w)) << to_string(w);
        }
    }
}

TEST(Words, Parkize)
{
    EXPECT_EQ(parkize({1, 2}), (Word{1, 2}));
    EXPECT_EQ(parkize({3, 3, 4, 4, 4}), (Word{1, 1, 2, 2, 2}));
    EXPECT_EQ(parkize({1, 3}), (Word{1, 2}));
    EXPECT_EQ(parkize({1, 1, 4}), (Word{1, 1, 3}));
    EXPECT_THROW(parkize({0, 1}), std::invalid_argument);
}

TEST(Words, ParkizeProperties)
{
    for (int n = 1; n <= 5; ++n) {
        for (const auto &w : all_words(n, n + 2)) {
            const auto p = parkize(w);
            EXPECT_TRUE(is_parking(p)) << to_string(w);
            EXPECT_EQ(p == w, is_parking(w)) << to_string(w);
            EXPECT_EQ(p, parkize_by_values(w)) << to_string(w);
            EXPECT_EQ(standardize(p), standardize(w)) << to_string(w);
        }
    }
}

TEST(Words, Standardize)
{
    EXPECT_EQ(standardize({1, 3, 1}), (Word{1, 3, 2}));
    EXPECT_EQ(standardize({1, 2, 3}), (Word{1, 2, 3}));
    EXPECT_EQ(standardize({3, 1, 1}), (Word{3, 1, 2}));
    for (int n = 0; n <= 4; ++n) {
        for (const auto &w : all_words(n, 3)) {
            const auto s = standardize(w);
            EXPECT_EQ(s, standardize_by_search(w)) << to_string(w);
            EXPECT_EQ(standardize(s), s);
        }
    }
}

TEST(Words, PackAndEvaluation)
{
    EXPECT_EQ(pack({2, 4, 4}), (Word{1, 2, 2}));
    EXPECT_EQ(evaluation({1, 1, 3}), (std::vector<int>{2, 0, 1}));
    EXPECT_EQ(evaluation({1, 2, 2}), (std::vector<int>{1, 2}));
    EXPECT_EQ(evaluation({1, 1}, 3), (std::vector<int>{2, 0, 0}));
    EXPECT_EQ(sort_ascending({3, 1, 2, 1}), (Word{1, 1, 2, 3}));
    EXPECT_TRUE(is_packed(pack({7, 3, 3, 9})));
}

TEST(Words, ShiftedConcatenations)
{
    EXPECT_EQ(shifted_concat_len({1, 2}, {1, 1, 3}), (Word{1, 2, 3, 3, 5}));
    EXPECT_EQ(shifted_concat_len({}, {1, 2}), (Word{1, 2}));
    EXPECT_EQ(shifted_concat_len({1}, {1}), (Word{1, 2}));
    EXPECT_EQ(shifted_concat_max({1, 2}, {1, 1, 3}), (Word{1, 2, 2, 2, 4}));
    EXPECT_EQ(shifted_concat_max({1}, {2, 1}), (Word{1, 2, 1}));
    EXPECT_EQ(shifted_concat_max({1, 1}, {1, 2}), (Word{1, 1, 1, 2}));
    EXPECT_THROW(shifted_concat_max({}, {1}), std::invalid_argument);
    // (1 o 1) . 1 differs from 1 o (1 . 1)
    EXPECT_EQ(shifted_concat_len(shifted_concat_max({1}, {1}), {1}), (Word{1, 1, 3}));
    EXPECT_EQ(shifted_concat_max({1}, shifted_concat_len({1}, {1})), (Word{1, 1, 2}));
}

TEST(Words, ShiftedShuffle)
{
    auto s = shifted_shuffle({1}, {1}, 1);
    std::sort(s.begin(), s.end());
    EXPECT_EQ(s, (std::vector<Word>{{1, 2}, {2, 1}}));
    EXPECT_EQ(shifted_shuffle({1}, {1}, 0), (std::vector<Word>{{1, 1}, {1, 1}}));
    EXPECT_EQ(shifted_shuffle({1, 2}, {1, 2}, 2).size(), 6u);
    EXPECT_EQ(shifted_shuffle({}, {1, 2}, 0), (std::vector<Word>{{1, 2}}));
}

TEST(Words, ShuffleSizeAndContent)
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> len(0, 4), letter(1, 4);
    for (int trial = 0; trial < 50; ++trial) {
        Word a(static_cast<std::size_t>(len(rng))), b(static_cast<std::size_t>(len(rng)));
        for (auto &c : a) {
            c = letter(rng);
        }
        for (auto &c : b) {
            c = letter(rng);
        }
        const auto sh = shifted_shuffle(a, b, 10);
        const auto expected = binomial(static_cast<unsigned>(a.size() + b.size()), static_cast<unsigned>(a.size()));
        EXPECT_EQ(Integer(static_cast<unsigned long>(sh.size())), expected);
        for (const auto &w : sh) {
            Word left, right;
            for (auto c : w) {
                (c > 10 ? right : left).push_back(c);
            }
            EXPECT_EQ(left, a);
            EXPECT_EQ(right, shift(b, 10));
        }
    }
}

TEST(Words, CheckedTypes)
{
    EXPECT_NO_THROW(ParkingFunction({3, 1, 1}));
    EXPECT_THROW(ParkingFunction({2, 2}), std::invalid_argument);
    EXPECT_THROW(NDPF({2, 1}), std::invalid_argument);
    EXPECT_THROW(Permutation({1, 1}), std::invalid_argument);
    EXPECT_THROW(PackedWord({1, 3}), std::invalid_argument);
    EXPECT_EQ(inverse(Permutation({2, 3, 1})), Permutation({3, 1, 2}));
}

TEST(Words, Recoils)
{
    EXPECT_EQ(recoils({1, 3, 2}), (std::vector<int>{2}));
    EXPECT_EQ(recoils({3, 1, 2}), (std::vector<int>{2}));
    EXPECT_EQ(recoils({2, 1, 3}), (std::vector<int>{1}));
    EXPECT_EQ(descents({3, 1, 2}), (std::vector<int>{1}));
    EXPECT_EQ(major_index({3, 2, 1}), 3);
}

TEST(QuasiRibbon, HypoplacticClasses)
{
    EXPECT_EQ(to_string(hypoplactic_quasi_ribbon(ParkingFunction({1, 3, 1}))), "11|3");
    EXPECT_EQ(to_string(hypoplactic_quasi_ribbon(ParkingFunction({3, 1, 1}))), "11|3");
    EXPECT_EQ(to_string(hypoplactic_quasi_ribbon(ParkingFunction({1, 1, 3}))), "113");
    EXPECT_THROW(QuasiRibbon(NDPF({1, 1}), {1}), std::invalid_argument);
}

TEST(QuasiRibbon, ClassesCoverAllQuasiRibbons)
{
    const std::vector<std::size_t> schroder{1, 1, 3, 11, 45, 197, 903};
    for (int n = 0; n <= 6; ++n) {
        std::set<QuasiRibbon> classes;
        for (const auto &a : enumerate_parking(n)) {
            classes.insert(hypoplactic_quasi_ribbon(a));
        }
        const auto all = enumerate_quasi_ribbons(n);
        EXPECT_EQ(classes.size(), schroder[static_cast<std::size_t>(n)]) << n;
        EXPECT_EQ(std::vector<QuasiRibbon>(classes.begin(), classes.end()), all) << n;
    }
}

TEST(QuasiRibbon, ShapeAndText)
{
    const auto q = parse_quasi_ribbon("11|3");
    EXPECT_EQ(q.shape(), Composition({2, 1}));
    EXPECT_EQ(q.bar_count(), 1u);
    EXPECT_EQ(to_string(parse_quasi_ribbon("1|2|3")), "1|2|3");
    EXPECT_THROW(parse_quasi_ribbon("1||2"), std::invalid_argument);
}

TEST(Enumerate, Counts)
{
    const std::vector<std::size_t> catalan{1, 1, 2, 5, 14, 42, 132, 429, 1430};
    const std::vector<std::size_t> fubini{1, 1, 3, 13, 75, 541, 4683};
    for (int n = 0; n <= 8; ++n) {
        EXPECT_EQ(enumerate_ndpf(n).size(), catalan[static_cast<std::size_t>(n)]);
        EXPECT_EQ(enumerate_binary_trees(n).size(), catalan[static_cast<std::size_t>(n)]);
        EXPECT_EQ(enumerate_compositions(n).size(), n == 0 ? 1u : std::size_t{1} << (n - 1));
    }
    for (int n = 0; n <= 6; ++n) {
        std::size_t pf = 1;
        for (int k = 0; k < n - 1; ++k) {
            pf *= static_cast<std::size_t>(n + 1);
        }
        EXPECT_EQ(enumerate_parking(n).size(), pf);
        EXPECT_EQ(enumerate_packed(n).size(), fubini[static_cast<std::size_t>(n)]);
    }
    EXPECT_EQ(enumerate_parking(7).size(), 262144u);
    EXPECT_EQ(enumerate_permutations(5).size(), 120u);
    EXPECT_THROW(enumerate_ndpf(13), std::out_of_range);
}

TEST(Enumerate, MatchesBruteForceAndIsSorted)
{
    for (int n = 0; n <= 5; ++n) {
        std::vector<Word> pf, packed;
        for (const auto &w : all_words(n, std::max(n, 1))) {
            if (parking_by_counting(w)) {
                pf.push_back(w);
            }
            if (is_packed(w)) {
                packed.push_back(w);
            }
        }
        std::vector<Word> got;
        for (const auto &a : enumerate_parking(n)) {
            got.push_back(a.letters());
        }
        EXPECT_EQ(got, pf);
        got.clear();
        for (const auto &a : enumerate_packed(n)) {
            got.push_back(a.letters());
        }
        EXPECT_EQ(got, packed);
        const auto nd = enumerate_ndpf(n);
        EXPECT_TRUE(std::is_sorted(nd.begin(), nd.end()));
        EXPECT_EQ(std::adjacent_find(nd.begin(), nd.end()), nd.end());
        const auto trees = enumerate_binary_trees(n);
        EXPECT_TRUE(std::is_sorted(trees.begin(), trees.end()));
    }
}

TEST(Composition, Operations)
{
    EXPECT_EQ(concat(Composition{2}, Composition{1, 1}), (Composition{2, 1, 1}));
    EXPECT_EQ(near_concat(Composition{2}, Composition{1, 1}), (Composition{3, 1}));
    EXPECT_THROW(near_concat(Composition{}, Composition{1}), std::invalid_argument);
    EXPECT_EQ(conjugate(Composition{1, 1, 1, 1}), (Composition{4}));
    EXPECT_EQ(conjugate(Composition{3, 1}), (Composition{2, 1, 1}));
    EXPECT_EQ(conjugate(Composition{2, 2}), (Composition{1, 2, 1}));
    EXPECT_TRUE(coarser_leq(Composition{2, 1}, Composition{1, 1, 1}));
    EXPECT_FALSE(coarser_leq(Composition{1, 2}, Composition{2, 1}));
    EXPECT_THROW(Composition({1, 0}), std::invalid_argument);
    EXPECT_NO_THROW(Composition::extended({1, 0}));
}

TEST(Composition, OrderAgreesWithDescentInclusion)
{
    for (int n = 1; n <= 6; ++n) {
        const auto all = enumerate_compositions(n);
        for (const auto &i : all) {
            EXPECT_EQ(conjugate(conjugate(i)), i);
            EXPECT_EQ(conjugate(i).length() + i.length(), static_cast<std::size_t>(n + 1));
            std::size_t below = 0;
            for (const auto &j : all) {
                const auto di = i.descent_set(), dj = j.descent_set();
                const bool included = std::includes(dj.begin(), dj.end(), di.begin(), di.end());
                EXPECT_EQ(coarser_leq(i, j), included);
                below += coarser_leq(j, i) ? 1 : 0;
            }
            const auto coarse = coarsenings(i);
            EXPECT_EQ(coarse.size(), below);
            EXPECT_TRUE(std::is_sorted(coarse.begin(), coarse.end()));
        }
    }
}

TEST(BinaryTree, CanopyAndRotation)
{
    const BinaryTree leaf;
    const BinaryTree node(leaf, leaf);
    EXPECT_EQ(canopy(node), "");
    const BinaryTree left_comb(BinaryTree(node, leaf), leaf);
    const BinaryTree right_comb(leaf, BinaryTree(leaf, node));
    EXPECT_NE(canopy(left_comb), canopy(right_comb));
    EXPECT_EQ(canopy(left_comb).size(), 2u);
    EXPECT_EQ(rotate_left(right_comb), BinaryTree(node, node));
    EXPECT_FALSE(can_rotate_left(left_comb));
    EXPECT_EQ(mirror(left_comb), right_comb);
    std::set<std::string> blocks;
    for (const auto &t : enumerate_binary_trees(4)) {
        blocks.insert(canopy(t));
        EXPECT_EQ(mirror(mirror(t)), t);
    }
    EXPECT_EQ(blocks.size(), 8u);
}

TEST(Text, RoundTrips)
{
    EXPECT_EQ(to_string(Word{1, 10, 2}), "1,10,2");
    EXPECT_EQ(parse_word("1,10,2"), (Word{1, 10, 2}));
    EXPECT_EQ(parse_word("1133444"), (Word{1, 1, 3, 3, 4, 4, 4}));
    EXPECT_EQ(to_string(Word{-4, -1, 1, 1, 2}), "-4,-1,1,1,2");
    EXPECT_THROW(parse_word("1a"), std::invalid_argument);
    EXPECT_EQ(to_string(parse_composition("(2,1,1)")), "(2,1,1)");
    EXPECT_EQ(parse_composition("211"), (Composition{2, 1, 1}));
    for (const auto &t : enumerate_binary_trees(5)) {
        EXPECT_EQ(parse_tree(to_string(t)), t);
    }
    EXPECT_EQ(to_string(parse_tree("((.,.),.)")), "((.,.),.)");
    EXPECT_THROW(parse_tree("(.,.))"), std::invalid_argument);
    EXPECT_THROW(parse_tree("(.,"), std::invalid_argument);
    for (const auto &q : enumerate_quasi_ribbons(4)) {
        EXPECT_EQ(parse_quasi_ribbon(to_string(q)), q);
    }
}

#ifndef PARKHOPF_LAGRANGE_BIJECTION_HPP
#define PARKHOPF_LAGRANGE_BIJECTION_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>

#include <parkhopf/combinat/binary_tree.hpp>
#include <parkhopf/combinat/words.hpp>

namespace parkhopf::lagrange
{

namespace detail
{

inline Word tree_word(const BinaryTree &t)
{
    if (t.is_leaf()) {
        return {};
    }
    const auto m = static_cast<Letter>(t.left().size());
    Word w = tree_word(t.left());
    w.push_back(m + 1);
    const Word r = shift(tree_word(t.right()), m);
    w.insert(w.end(), r.begin(), r.end());
    return w;
}

inline BinaryTree word_tree(const Word &w)
{
    if (w.empty()) {
        return BinaryTree::leaf();
    }
    // The root sits at the last fixed point pi_i = i.
    std::size_t m = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == static_cast<Letter>(i + 1)) {
            m = i + 1;
        }
    }
    const Word left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(m - 1));
    const Word right = shift(Word(w.begin() + static_cast<std::ptrdiff_t>(m), w.end()), -static_cast<Letter>(m - 1));
    return {word_tree(left), word_tree(right)};
}

} // namespace detail

// Root labelled by one plus the size of its left subtree; right subtree
// labels shifted by that size. Equals the key of B_T(1) in CQSym.
inline NDPF tree_to_ndpf(const BinaryTree &t)
{
    return NDPF::trusted(detail::tree_word(t));
}

inline BinaryTree ndpf_to_tree(const NDPF &pi)
{
    return detail::word_tree(pi.letters());
}

// Mirror symmetry of trees, transported to NDPF.
inline NDPF iota(const NDPF &pi)
{
    return tree_to_ndpf(mirror(ndpf_to_tree(pi)));
}

} // namespace parkhopf::lagrange

#endif

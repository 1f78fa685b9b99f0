#ifndef PARKHOPF_COMBINAT_BINARY_TREE_HPP
#define PARKHOPF_COMBINAT_BINARY_TREE_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

namespace parkhopf
{

// Unlabeled binary tree with shared immutable nodes; the default value is
// the leaf. Size counts internal nodes.
class BinaryTree
{
public:
    BinaryTree() = default;
    BinaryTree(BinaryTree left, BinaryTree right);

    static BinaryTree leaf()
    {
        return {};
    }

    bool is_leaf() const
    {
        return !m_node;
    }
    const BinaryTree &left() const;
    const BinaryTree &right() const;
    std::size_t size() const
    {
        return m_size;
    }

    friend bool operator==(const BinaryTree &a, const BinaryTree &b)
    {
        if (a.m_node == b.m_node) {
            return true;
        }
        if (a.is_leaf() || b.is_leaf() || a.m_size != b.m_size) {
            return false;
        }
        return a.left() == b.left() && a.right() == b.right();
    }

    // Canonical order: by size, then by left subtree, then by right subtree.
    friend bool operator<(const BinaryTree &a, const BinaryTree &b)
    {
        if (a.m_size != b.m_size) {
            return a.m_size < b.m_size;
        }
        if (a.is_leaf()) {
            return false;
        }
        if (!(a.left() == b.left())) {
            return a.left() < b.left();
        }
        return a.right() < b.right();
    }

private:
    struct Node;

    std::shared_ptr<const Node> m_node;
    std::size_t m_size = 0;
};

struct BinaryTree::Node {
    BinaryTree left;
    BinaryTree right;
};

inline BinaryTree::BinaryTree(BinaryTree left, BinaryTree right)
    : m_node(std::make_shared<const Node>(Node{std::move(left), std::move(right)}))
{
    m_size = m_node->left.m_size + m_node->right.m_size + 1;
}

inline const BinaryTree &BinaryTree::left() const
{
    if (!m_node) {
        throw std::logic_error("binary tree: a leaf has no children");
    }
    return m_node->left;
}

inline const BinaryTree &BinaryTree::right() const
{
    if (!m_node) {
        throw std::logic_error("binary tree: a leaf has no children");
    }
    return m_node->right;
}

inline BinaryTree mirror(const BinaryTree &t)
{
    if (t.is_leaf()) {
        return t;
    }
    return {mirror(t.right()), mirror(t.left())};
}

namespace detail
{

inline void collect_leaves(const BinaryTree &t, char side, std::string &out)
{
    if (t.is_leaf()) {
        out.push_back(side);
        return;
    }
    collect_leaves(t.left(), 'L', out);
    collect_leaves(t.right(), 'R', out);
}

} // namespace detail

// Orientation of the leaves, first and last excluded.
inline std::string canopy(const BinaryTree &t)
{
    if (t.is_leaf()) {
        return {};
    }
    std::string sides;
    detail::collect_leaves(t, '-', sides);
    return sides.substr(1, sides.size() - 2);
}

// node(A, node(B, C)) -> node(node(A, B), C) at the root, if applicable.
inline bool can_rotate_left(const BinaryTree &t)
{
    return !t.is_leaf() && !t.right().is_leaf();
}

inline BinaryTree rotate_left(const BinaryTree &t)
{
    if (!can_rotate_left(t)) {
        throw std::invalid_argument("rotate_left: right child is a leaf");
    }
    return {BinaryTree(t.left(), t.right().left()), t.right().right()};
}

} // namespace parkhopf

#endif

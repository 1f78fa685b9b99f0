#ifndef PARKHOPF_OPERAD_EVAL_TREE_HPP
#define PARKHOPF_OPERAD_EVAL_TREE_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace parkhopf::operad
{

enum class Op { prec, succ, mid };

// Dup uses prec and succ only; Tri adds mid.
enum class Mode { dup, tri };

inline char op_symbol(Op op)
{
    switch (op) {
    case Op::prec:
        return '<';
    case Op::succ:
        return '>';
    default:
        return 'o';
    }
}

inline bool op_allowed(Op op, Mode mode)
{
    return mode == Mode::tri || op != Op::mid;
}

// A leaf (the generator) or an operation applied to two subtrees. Size
// counts leaves.
class EvalTree
{
public:
    EvalTree() = default;
    EvalTree(Op op, EvalTree left, EvalTree right);

    static EvalTree leaf()
    {
        return {};
    }

    bool is_leaf() const
    {
        return !m_node;
    }
    Op op() const;
    const EvalTree &left() const;
    const EvalTree &right() const;
    std::size_t size() const
    {
        return m_size;
    }

    friend bool operator==(const EvalTree &a, const EvalTree &b)
    {
        if (a.m_node == b.m_node) {
            return true;
        }
        if (a.is_leaf() || b.is_leaf() || a.m_size != b.m_size || a.op() != b.op()) {
            return false;
        }
        return a.left() == b.left() && a.right() == b.right();
    }

    // By size, then op, then left, then right.
    friend bool operator<(const EvalTree &a, const EvalTree &b)
    {
        if (a.m_size != b.m_size) {
            return a.m_size < b.m_size;
        }
        if (a.is_leaf()) {
            return false;
        }
        if (a.op() != b.op()) {
            return a.op() < b.op();
        }
        if (!(a.left() == b.left())) {
            return a.left() < b.left();
        }
        return a.right() < b.right();
    }

private:
    struct Node;

    const Node &node() const;

    std::shared_ptr<const Node> m_node;
    std::size_t m_size = 1;
};

struct EvalTree::Node {
    Op op;
    EvalTree left;
    EvalTree right;
};

inline EvalTree::EvalTree(Op op, EvalTree left, EvalTree right)
    : m_node(std::make_shared<const Node>(Node{op, std::move(left), std::move(right)}))
{
    m_size = m_node->left.m_size + m_node->right.m_size;
}

inline const EvalTree::Node &EvalTree::node() const
{
    if (!m_node) {
        throw std::logic_error("eval tree: a leaf has no operation");
    }
    return *m_node;
}

inline Op EvalTree::op() const
{
    return node().op;
}

inline const EvalTree &EvalTree::left() const
{
    return node().left;
}

inline const EvalTree &EvalTree::right() const
{
    return node().right;
}

inline bool mode_consistent(const EvalTree &t, Mode mode)
{
    if (t.is_leaf()) {
        return true;
    }
    return op_allowed(t.op(), mode) && mode_consistent(t.left(), mode) && mode_consistent(t.right(), mode);
}

// "x" for the leaf, "(L op R)" otherwise.
inline std::string to_string(const EvalTree &t)
{
    if (t.is_leaf()) {
        return "x";
    }
    return "(" + to_string(t.left()) + " " + op_symbol(t.op()) + " " + to_string(t.right()) + ")";
}

namespace detail
{

inline void skip_spaces(std::string_view s, std::size_t &pos)
{
    while (pos < s.size() && s[pos] == ' ') {
        ++pos;
    }
}

inline EvalTree parse_eval_tree_at(std::string_view s, std::size_t &pos)
{
    skip_spaces(s, pos);
    if (pos >= s.size()) {
        throw std::invalid_argument("eval tree: unexpected end of input");
    }
    if (s[pos] == 'x') {
        ++pos;
        return EvalTree::leaf();
    }
    if (s[pos] != '(') {
        throw std::invalid_argument("eval tree: expected 'x' or '(' at position " + std::to_string(pos));
    }
    ++pos;
    auto left = parse_eval_tree_at(s, pos);
    skip_spaces(s, pos);
    if (pos >= s.size()) {
        throw std::invalid_argument("eval tree: missing operation");
    }
    Op op;
    switch (s[pos]) {
    case '<':
        op = Op::prec;
        break;
    case '>':
        op = Op::succ;
        break;
    case 'o':
        op = Op::mid;
        break;
    default:
        throw std::invalid_argument("eval tree: unknown operation '" + std::string(1, s[pos]) + "'");
    }
    ++pos;
    auto right = parse_eval_tree_at(s, pos);
    skip_spaces(s, pos);
    if (pos >= s.size() || s[pos] != ')') {
        throw std::invalid_argument("eval tree: expected ')'");
    }
    ++pos;
    return EvalTree(op, std::move(left), std::move(right));
}

} // namespace detail

inline EvalTree parse_eval_tree(std::string_view s)
{
    std::size_t pos = 0;
    auto t = detail::parse_eval_tree_at(s, pos);
    detail::skip_spaces(s, pos);
    if (pos != s.size()) {
        throw std::invalid_argument("eval tree: trailing characters");
    }
    return t;
}

} // namespace parkhopf::operad

#endif

#ifndef PARKHOPF_OPERAD_REWRITING_HPP
#define PARKHOPF_OPERAD_REWRITING_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <parkhopf/exact/rational.hpp>
#include <parkhopf/operad/eval_tree.hpp>

namespace parkhopf::operad
{

// (A root_left B) root C  ->  A new_root (B new_right C)
struct Rule {
    Op root;
    Op root_left;
    Op new_root;
    Op new_right;
};

// The three associativities, then the mixed relations. Dup keeps the
// prec and succ associativities and (x > y) < z -> x > (y < z).
inline std::vector<Rule> rules(Mode mode)
{
    const Rule prec_assoc{Op::prec, Op::prec, Op::prec, Op::prec};
    const Rule mid_assoc{Op::mid, Op::mid, Op::mid, Op::mid};
    const Rule succ_assoc{Op::succ, Op::succ, Op::succ, Op::succ};
    const Rule mid_prec{Op::prec, Op::mid, Op::mid, Op::prec};
    const Rule succ_prec{Op::prec, Op::succ, Op::succ, Op::prec};
    const Rule succ_mid{Op::mid, Op::succ, Op::succ, Op::mid};
    const Rule mid_succ{Op::succ, Op::mid, Op::mid, Op::succ};
    if (mode == Mode::dup) {
        return {prec_assoc, succ_assoc, succ_prec};
    }
    return {prec_assoc, mid_assoc, succ_assoc, mid_prec, succ_prec, succ_mid, mid_succ};
}

inline bool matches(const EvalTree &t, const Rule &r)
{
    return !t.is_leaf() && t.op() == r.root && !t.left().is_leaf() && t.left().op() == r.root_left;
}

inline EvalTree apply_rule(const EvalTree &t, const Rule &r)
{
    const auto &l = t.left();
    return EvalTree(r.new_root, l.left(), EvalTree(r.new_right, l.right(), t.right()));
}

inline bool is_redex(const EvalTree &t, Mode mode)
{
    for (const auto &r : rules(mode)) {
        if (matches(t, r)) {
            return true;
        }
    }
    return false;
}

// One leftmost-outermost step, if any rule applies.
inline std::optional<EvalTree> rewrite_step(const EvalTree &t, Mode mode)
{
    if (t.is_leaf()) {
        return std::nullopt;
    }
    for (const auto &r : rules(mode)) {
        if (matches(t, r)) {
            return apply_rule(t, r);
        }
    }
    if (auto l = rewrite_step(t.left(), mode)) {
        return EvalTree(t.op(), *l, t.right());
    }
    if (auto r = rewrite_step(t.right(), mode)) {
        return EvalTree(t.op(), t.left(), *r);
    }
    return std::nullopt;
}

// Every tree reachable in one step, at any position and by any rule.
inline std::vector<EvalTree> all_rewrite_steps(const EvalTree &t, Mode mode)
{
    std::vector<EvalTree> out;
    if (t.is_leaf()) {
        return out;
    }
    for (const auto &r : rules(mode)) {
        if (matches(t, r)) {
            out.push_back(apply_rule(t, r));
        }
    }
    for (const auto &l : all_rewrite_steps(t.left(), mode)) {
        out.emplace_back(t.op(), l, t.right());
    }
    for (const auto &r : all_rewrite_steps(t.right(), mode)) {
        out.emplace_back(t.op(), t.left(), r);
    }
    return out;
}

// Sum over internal nodes of the number of leaves of the left subtree;
// every rule lowers it by the size of the outer left subtree.
inline std::size_t termination_measure(const EvalTree &t)
{
    if (t.is_leaf()) {
        return 0;
    }
    return t.left().size() + termination_measure(t.left()) + termination_measure(t.right());
}

struct RewriteResult {
    EvalTree normal_form;
    std::size_t steps = 0;
};

inline RewriteResult rewrite_with_count(const EvalTree &t, Mode mode)
{
    if (!mode_consistent(t, mode)) {
        throw std::invalid_argument("rewrite: tree uses an operation outside its mode");
    }
    RewriteResult res{t, 0};
    while (auto next = rewrite_step(res.normal_form, mode)) {
        res.normal_form = *next;
        ++res.steps;
    }
    return res;
}

inline EvalTree rewrite_normal_form(const EvalTree &t, Mode mode)
{
    return rewrite_with_count(t, mode).normal_form;
}

inline bool is_normal_form(const EvalTree &t, Mode mode)
{
    if (t.is_leaf()) {
        return true;
    }
    return !is_redex(t, mode) && is_normal_form(t.left(), mode) && is_normal_form(t.right(), mode);
}

inline std::vector<Op> mode_ops(Mode mode)
{
    if (mode == Mode::dup) {
        return {Op::prec, Op::succ};
    }
    return {Op::prec, Op::succ, Op::mid};
}

namespace detail
{

inline void check_tree_size(int n, int cap)
{
    if (n < 1 || n > cap) {
        throw std::out_of_range("tree size must lie in 1.." + std::to_string(cap));
    }
}

// Trees by number of leaves; keep(t) filters every subtree as it is built.
template <typename Keep>
std::vector<std::vector<EvalTree>> trees_by_size(Mode mode, int n, Keep keep)
{
    std::vector<std::vector<EvalTree>> by_size(static_cast<std::size_t>(n) + 1);
    by_size[1].push_back(EvalTree::leaf());
    for (int m = 2; m <= n; ++m) {
        for (int k = 1; k < m; ++k) {
            for (auto op : mode_ops(mode)) {
                for (const auto &l : by_size[static_cast<std::size_t>(k)]) {
                    for (const auto &r : by_size[static_cast<std::size_t>(m - k)]) {
                        EvalTree t(op, l, r);
                        if (keep(t)) {
                            by_size[static_cast<std::size_t>(m)].push_back(std::move(t));
                        }
                    }
                }
            }
        }
    }
    return by_size;
}

} // namespace detail

inline std::vector<EvalTree> all_trees(Mode mode, int n)
{
    detail::check_tree_size(n, 8);
    return detail::trees_by_size(mode, n, [](const EvalTree &) { return true; })[static_cast<std::size_t>(n)];
}

// Trees with no redex anywhere, built from redex-free subtrees.
inline std::vector<EvalTree> normal_forms(Mode mode, int n)
{
    detail::check_tree_size(n, mode == Mode::tri ? 8 : 10);
    return detail::trees_by_size(mode, n, [mode](const EvalTree &t) { return !is_redex(t, mode); })[static_cast<std::size_t>(n)];
}

inline std::size_t count_normal_forms(Mode mode, int n)
{
    return normal_forms(mode, n).size();
}

// The shapes that cannot be rewritten: a leaf, a node whose left child is a
// leaf, or a node of type o or > (Dup: >) whose left child is a prec node,
// all subtrees being of the same kind.
inline bool has_normal_shape(const EvalTree &t, Mode mode)
{
    if (t.is_leaf()) {
        return true;
    }
    if (t.left().is_leaf()) {
        return has_normal_shape(t.right(), mode);
    }
    const bool root_ok = t.op() == Op::succ || (mode == Mode::tri && t.op() == Op::mid);
    return root_ok && t.left().op() == Op::prec && has_normal_shape(t.left(), mode) && has_normal_shape(t.right(), mode);
}

// The shape characterization selects exactly the fixed points of rewriting.
inline bool normal_form_shape_check(Mode mode, int n)
{
    for (const auto &t : all_trees(mode, n)) {
        const bool fixed = rewrite_normal_form(t, mode) == t;
        if (fixed != has_normal_shape(t, mode)) {
            return false;
        }
    }
    return true;
}

// Every one-step rewrite of every tree of size n reaches the same normal
// form as the tree itself, so normal forms are unique.
inline bool confluence_check(Mode mode, int n)
{
    for (const auto &t : all_trees(mode, n)) {
        const auto nf = rewrite_normal_form(t, mode);
        for (const auto &s : all_rewrite_steps(t, mode)) {
            if (!(rewrite_normal_form(s, mode) == nf)) {
                return false;
            }
        }
    }
    return true;
}

// Coefficients s_0..s_max of S = 1 + 3xS + 2x^2 S^2; s_{n-1} counts
// triduplicial normal forms with n leaves.
inline std::vector<Integer> schroder_series_coefficients(int max)
{
    std::vector<Integer> s(static_cast<std::size_t>(max) + 1, 0);
    s[0] = 1;
    for (int n = 1; n <= max; ++n) {
        Integer acc = 3 * s[static_cast<std::size_t>(n - 1)];
        for (int k = 0; k <= n - 2; ++k) {
            acc += 2 * s[static_cast<std::size_t>(k)] * s[static_cast<std::size_t>(n - 2 - k)];
        }
        s[static_cast<std::size_t>(n)] = acc;
    }
    return s;
}

// Hooks x * x * ... * x < x < ... < x, read as right combs, with * in {>, o}
// (Dup: * = >).
inline std::vector<EvalTree> hook_trees(Mode mode, int n)
{
    detail::check_tree_size(n, 12);
    std::vector<Op> stars{Op::succ};
    if (mode == Mode::tri) {
        stars.push_back(Op::mid);
    }
    std::vector<EvalTree> out;
    for (int k = 0; k < n; ++k) {
        // k star operations followed by n - 1 - k prec operations.
        std::vector<std::vector<Op>> seqs{{}};
        for (int i = 0; i < k; ++i) {
            std::vector<std::vector<Op>> next;
            for (const auto &s : seqs) {
                for (auto op : stars) {
                    auto t = s;
                    t.push_back(op);
                    next.push_back(std::move(t));
                }
            }
            seqs = std::move(next);
        }
        for (auto ops : seqs) {
            ops.insert(ops.end(), static_cast<std::size_t>(n - 1 - k), Op::prec);
            EvalTree t = EvalTree::leaf();
            for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
                t = EvalTree(*it, EvalTree::leaf(), t);
            }
            out.push_back(t);
        }
    }
    return out;
}

// Normal forms of the dual operad: redex-free trees avoiding the extra zero
// relations (x < y) * z = 0 and x < (y * z) = 0 for * in {>, o}.
inline std::size_t dual_dimension(Mode mode, int n)
{
    detail::check_tree_size(n, 8);
    const auto star = [](Op op) { return op == Op::succ || op == Op::mid; };
    const auto keep = [mode, star](const EvalTree &t) {
        if (is_redex(t, mode)) {
            return false;
        }
        if (star(t.op()) && !t.left().is_leaf() && t.left().op() == Op::prec) {
            return false;
        }
        if (t.op() == Op::prec && !t.right().is_leaf() && star(t.right().op())) {
            return false;
        }
        return true;
    };
    return detail::trees_by_size(mode, n, keep)[static_cast<std::size_t>(n)].size();
}

} // namespace parkhopf::operad

#endif

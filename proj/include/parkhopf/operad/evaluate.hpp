#ifndef PARKHOPF_OPERAD_EVALUATE_HPP
#define PARKHOPF_OPERAD_EVALUATE_HPP

#include <stdexcept>
#include <string>

#include <parkhopf/combinat/text.hpp>
#include <parkhopf/hopf/cqsym.hpp>
#include <parkhopf/hopf/sqsym.hpp>
#include <parkhopf/operad/eval_tree.hpp>

namespace parkhopf::operad
{

// Generator P_1 at the leaves, triduplicial operations at the nodes.
inline hopf::SQSymElem eval_tree_sqsym(const EvalTree &t)
{
    if (t.is_leaf()) {
        return hopf::sqsym_generator();
    }
    const auto l = eval_tree_sqsym(t.left()), r = eval_tree_sqsym(t.right());
    switch (t.op()) {
    case Op::prec:
        return hopf::tridup_prec(l, r);
    case Op::succ:
        return hopf::tridup_succ(l, r);
    default:
        return hopf::tridup_mid(l, r);
    }
}

// Generator P^1 at the leaves, duplicial operations at the nodes.
inline hopf::CQSymElem eval_tree_cqsym(const EvalTree &t)
{
    if (t.is_leaf()) {
        return hopf::cqsym_generator();
    }
    const auto l = eval_tree_cqsym(t.left()), r = eval_tree_cqsym(t.right());
    switch (t.op()) {
    case Op::prec:
        return hopf::cqsym_prec(l, r);
    case Op::succ:
        return hopf::cqsym_succ(l, r);
    default:
        throw std::invalid_argument("eval_tree: the duplicial algebra has no mid operation");
    }
}

// Text of the single basis key the tree evaluates to.
inline std::string eval_tree_key(const EvalTree &t, Mode mode)
{
    if (mode == Mode::tri) {
        return to_string(eval_tree_sqsym(t).begin()->first);
    }
    return to_string(eval_tree_cqsym(t).begin()->first);
}

} // namespace parkhopf::operad

#endif

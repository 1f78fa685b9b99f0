#ifndef PARKHOPF_LAGRANGE_TAMARI_HPP
#define PARKHOPF_LAGRANGE_TAMARI_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <parkhopf/combinat/binary_tree.hpp>
#include <parkhopf/combinat/composition.hpp>
#include <parkhopf/combinat/enumerate.hpp>
#include <parkhopf/lagrange/bijection.hpp>
#include <parkhopf/lagrange/series.hpp>

namespace parkhopf::lagrange
{

// Trees covering t: a left rotation applied at any node. The right comb
// (the image of 1^n) is the minimum.
inline std::vector<BinaryTree> tamari_upper_covers(const BinaryTree &t)
{
    std::vector<BinaryTree> out;
    if (t.is_leaf()) {
        return out;
    }
    if (can_rotate_left(t)) {
        out.push_back(rotate_left(t));
    }
    for (const auto &l : tamari_upper_covers(t.left())) {
        out.emplace_back(l, t.right());
    }
    for (const auto &r : tamari_upper_covers(t.right())) {
        out.emplace_back(t.left(), r);
    }
    return out;
}

inline std::set<BinaryTree> tamari_up_set(const BinaryTree &t)
{
    std::set<BinaryTree> seen{t};
    std::vector<BinaryTree> stack{t};
    while (!stack.empty()) {
        const auto cur = stack.back();
        stack.pop_back();
        for (const auto &u : tamari_upper_covers(cur)) {
            if (seen.insert(u).second) {
                stack.push_back(u);
            }
        }
    }
    return seen;
}

inline bool tamari_leq(const BinaryTree &a, const BinaryTree &b)
{
    if (a.size() != b.size()) {
        return false;
    }
    return tamari_up_set(a).count(b) != 0;
}

// Cover relations transported to NDPF, as (lower, upper) pairs.
inline std::set<std::pair<NDPF, NDPF>> ndpf_tamari_covers(int n)
{
    std::set<std::pair<NDPF, NDPF>> out;
    for (const auto &t : enumerate_binary_trees(n)) {
        for (const auto &u : tamari_upper_covers(t)) {
            out.emplace(tree_to_ndpf(t), tree_to_ndpf(u));
        }
    }
    return out;
}

struct IntervalCheck {
    bool is_interval = false;
    std::size_t size = 0;
    NDPF min;
    NDPF max;
};

// Whether {pi : t(pi) = I} is an interval of the Tamari order.
inline IntervalCheck tamari_interval_check(const Composition &composition)
{
    const int n = composition.size();
    check_order(n, 7, "tamari_interval_check");
    std::vector<BinaryTree> block;
    for (const auto &pi : enumerate_ndpf(n)) {
        if (packed_evaluation(pi.letters()) == composition) {
            block.push_back(ndpf_to_tree(pi));
        }
    }
    IntervalCheck out;
    out.size = block.size();
    if (block.empty()) {
        return out;
    }
    std::map<BinaryTree, std::set<BinaryTree>> up;
    for (const auto &t : block) {
        up[t] = tamari_up_set(t);
    }
    std::vector<BinaryTree> minima, maxima;
    for (const auto &t : block) {
        bool is_min = true, is_max = true;
        for (const auto &s : block) {
            if (s == t) {
                continue;
            }
            is_min = is_min && up.at(s).count(t) == 0;
            is_max = is_max && up.at(t).count(s) == 0;
        }
        if (is_min) {
            minima.push_back(t);
        }
        if (is_max) {
            maxima.push_back(t);
        }
    }
    if (minima.size() != 1 || maxima.size() != 1) {
        return out;
    }
    std::size_t between = 0;
    for (const auto &t : up.at(minima[0])) {
        between += tamari_leq(t, maxima[0]) ? 1 : 0;
    }
    out.min = tree_to_ndpf(minima[0]);
    out.max = tree_to_ndpf(maxima[0]);
    out.is_interval = between == block.size() && up.at(minima[0]).count(maxima[0]) != 0;
    return out;
}

// Grouping trees by canopy gives the same blocks as grouping NDPF by
// packed evaluation.
inline bool canopy_evaluation_correspondence(int n)
{
    check_order(n, 7, "canopy_evaluation_correspondence");
    std::map<std::string, std::set<NDPF>> by_canopy;
    std::map<Composition, std::set<NDPF>> by_evaluation;
    for (const auto &pi : enumerate_ndpf(n)) {
        by_canopy[canopy(ndpf_to_tree(pi))].insert(pi);
        by_evaluation[packed_evaluation(pi.letters())].insert(pi);
    }
    std::set<std::set<NDPF>> a, b;
    for (auto &[k, v] : by_canopy) {
        a.insert(std::move(v));
    }
    for (auto &[k, v] : by_evaluation) {
        b.insert(std::move(v));
    }
    return a == b;
}

} // namespace parkhopf::lagrange

#endif

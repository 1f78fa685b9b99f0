#ifndef PARKHOPF_HOPF_MORPHISMS_HPP
#define PARKHOPF_HOPF_MORPHISMS_HPP

#include <parkhopf/combinat/composition.hpp>
#include <parkhopf/combinat/words.hpp>
#include <parkhopf/exact/rational.hpp>
#include <parkhopf/hopf/cqsym.hpp>
#include <parkhopf/hopf/fqsym.hpp>
#include <parkhopf/hopf/pqsym.hpp>
#include <parkhopf/hopf/sqsym.hpp>
#include <parkhopf/symfun/sym.hpp>

namespace parkhopf::hopf
{

// F_a -> F_{std(a)}, returned in the G basis.
inline FQSymElem morphism_istar(const PQSymElem &a)
{
    return apply_linear(a, [](const ParkingFunction &k) { return fqsym_F(std_perm(k.letters())); });
}

// P^pi -> S^{t(pi)}.
inline sym::SymElem istar_on_cqsym(const CQSymElem &a)
{
    sym::SymElem out(sym::Basis::S);
    for (const auto &[k, c] : a) {
        out += sym::SymElem::S(packed_evaluation(k.letters()), c);
    }
    return out;
}

// P_q -> R_I with I the segment lengths of q.
inline sym::SymElem istar_on_sqsym(const SQSymElem &a)
{
    sym::SymElem out(sym::Basis::R);
    for (const auto &[k, c] : a) {
        out += sym::SymElem::R(k.shape(), c);
    }
    return out;
}

// F_a -> S^{t(a)} / n!.
inline sym::SymElem morphism_psi(const PQSymElem &a)
{
    sym::SymElem out(sym::Basis::S);
    for (const auto &[k, c] : a) {
        out += sym::SymElem::S(packed_evaluation(k.letters()), c / Rational(factorial(static_cast<unsigned>(k.size()))));
    }
    return out;
}

} // namespace parkhopf::hopf

#endif

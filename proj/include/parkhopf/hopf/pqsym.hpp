#ifndef PARKHOPF_HOPF_PQSYM_HPP
#define PARKHOPF_HOPF_PQSYM_HPP

#include <stdexcept>
#include <string>

#include <parkhopf/combinat/words.hpp>
#include <parkhopf/exact/lincomb.hpp>
#include <parkhopf/exact/rational.hpp>

namespace parkhopf::hopf
{

// Raised when an element of a big algebra is projected onto a subalgebra
// basis it does not lie in.
class NotInSubalgebra : public std::runtime_error
{
public:
    explicit NotInSubalgebra(const std::string &what) : std::runtime_error(what) {}
};

// PQSym in the F basis, indexed by parking functions.
using PQSymElem = LinComb<ParkingFunction>;

inline PQSymElem pqsym_F(const ParkingFunction &a, const Rational &c = 1)
{
    return PQSymElem(a, c);
}

inline PQSymElem pqsym_product_keys(const ParkingFunction &a, const ParkingFunction &b)
{
    PQSymElem out;
    for (auto &w : shifted_shuffle(a.letters(), b.letters(), static_cast<Letter>(a.size()))) {
        out.add_term(ParkingFunction::trusted(std::move(w)), 1);
    }
    return out;
}

// F_a F_b: shuffle of a with b shifted by |a|.
inline PQSymElem pqsym_product(const PQSymElem &a, const PQSymElem &b)
{
    return bilinear(a, b, pqsym_product_keys);
}

inline PQSymElem pqsym_dup_succ(const PQSymElem &a, const PQSymElem &b)
{
    return pqsym_product(a, b);
}

// F_a < F_b: shuffle of a with b shifted by max(a) - 1, renormalized so that
// the copies of the letter max(a) coming from both sides count once.
inline PQSymElem pqsym_dup_prec_keys(const ParkingFunction &a, const ParkingFunction &b)
{
    if (a.empty()) {
        throw std::invalid_argument("pqsym_dup_prec: empty left key");
    }
    const Letter m = a.max();
    unsigned top = 0, ones = 0;
    for (auto l : a.letters()) {
        top += l == m ? 1 : 0;
    }
    for (auto l : b.letters()) {
        ones += l == 1 ? 1 : 0;
    }
    const Rational norm = Rational(factorial(top) * factorial(ones)) / Rational(factorial(top + ones));
    PQSymElem out;
    for (auto &w : shifted_shuffle(a.letters(), b.letters(), m - 1)) {
        out.add_term(ParkingFunction::trusted(std::move(w)), norm);
    }
    return out;
}

inline PQSymElem pqsym_dup_prec(const PQSymElem &a, const PQSymElem &b)
{
    return bilinear(a, b, pqsym_dup_prec_keys);
}

} // namespace parkhopf::hopf

#endif

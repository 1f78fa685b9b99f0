#ifndef PARKHOPF_EXACT_RATIONAL_HPP
#define PARKHOPF_EXACT_RATIONAL_HPP

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace parkhopf
{

// Arbitrary-precision rationals, always kept in canonical form
// (positive denominator, coprime numerator and denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer &num, const Integer &den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational &r)
{
    return sgn(r) == 0;
}

inline std::string to_string(const Rational &r)
{
    return r.get_str();
}

inline Integer factorial(unsigned n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Integer binomial(unsigned n, unsigned k)
{
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

// Parses "3", "-3" or "3/4".
inline Rational parse_rational(const std::string &s)
{
    Rational r;
    if (r.set_str(s, 10) != 0) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
    if (r.get_den() == 0) {
        throw std::domain_error("rational with zero denominator: '" + s + "'");
    }
    r.canonicalize();
    return r;
}

} // namespace parkhopf

#endif

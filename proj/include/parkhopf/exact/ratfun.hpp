#ifndef PARKHOPF_EXACT_RATFUN_HPP
#define PARKHOPF_EXACT_RATFUN_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include <parkhopf/exact/poly.hpp>

namespace parkhopf
{

// Raised when a rational function expected to be a polynomial is not.
class NonPolynomial : public std::domain_error
{
public:
    explicit NonPolynomial(const std::string &denominator)
        : std::domain_error("expression is not a polynomial; reduced denominator: " + denominator),
          m_denominator(denominator)
    {
    }
    const std::string &denominator() const noexcept
    {
        return m_denominator;
    }

private:
    std::string m_denominator;
};

// Quotient of two polynomials, kept gcd-reduced with a monic denominator.
class RatFun
{
public:
    RatFun() : m_den(1) {}
    RatFun(long c) : m_num(c), m_den(1) {}
    RatFun(const Rational &c) : m_num(c), m_den(1) {}
    RatFun(Poly p) : m_num(std::move(p)), m_den(1) {}
    RatFun(Poly num, Poly den) : m_num(std::move(num)), m_den(std::move(den))
    {
        if (m_den.is_zero()) {
            throw std::domain_error("rational function with zero denominator");
        }
        normalize();
    }

    const Poly &num() const
    {
        return m_num;
    }
    const Poly &den() const
    {
        return m_den;
    }
    bool is_zero() const
    {
        return m_num.is_zero();
    }
    bool is_polynomial() const
    {
        return m_den == Poly(1);
    }

    RatFun &operator+=(const RatFun &o)
    {
        if (m_den == o.m_den) {
            m_num += o.m_num;
        } else {
            m_num = m_num * o.m_den + o.m_num * m_den;
            m_den = m_den * o.m_den;
        }
        normalize();
        return *this;
    }
    RatFun &operator-=(const RatFun &o)
    {
        return *this += -o;
    }
    RatFun &operator*=(const RatFun &o)
    {
        m_num = m_num * o.m_num;
        m_den = m_den * o.m_den;
        normalize();
        return *this;
    }
    RatFun &operator/=(const RatFun &o)
    {
        if (o.is_zero()) {
            throw std::domain_error("division by the zero rational function");
        }
        m_num = m_num * o.m_den;
        m_den = m_den * o.m_num;
        normalize();
        return *this;
    }

    friend RatFun operator+(RatFun a, const RatFun &b)
    {
        a += b;
        return a;
    }
    friend RatFun operator-(RatFun a, const RatFun &b)
    {
        a -= b;
        return a;
    }
    friend RatFun operator*(RatFun a, const RatFun &b)
    {
        a *= b;
        return a;
    }
    friend RatFun operator/(RatFun a, const RatFun &b)
    {
        a /= b;
        return a;
    }
    friend RatFun operator-(RatFun a)
    {
        a.m_num = -a.m_num;
        return a;
    }
    friend bool operator==(const RatFun &a, const RatFun &b)
    {
        return a.m_num == b.m_num && a.m_den == b.m_den;
    }

    RatFun substitute(Var v, const Poly &value) const
    {
        return RatFun(m_num.substitute(v, value), m_den.substitute(v, value));
    }

    std::string to_string() const
    {
        if (is_polynomial()) {
            return m_num.to_string();
        }
        return "(" + m_num.to_string() + ")/(" + m_den.to_string() + ")";
    }

private:
    void normalize()
    {
        if (m_num.is_zero()) {
            m_den = Poly(1);
            return;
        }
        const auto g = gcd(m_num, m_den);
        if (!(g == Poly(1))) {
            m_num = exact_quotient(m_num, g);
            m_den = exact_quotient(m_den, g);
        }
        const auto lc = m_den.leading_term().second;
        if (lc != 1) {
            const Rational inv = Rational(1) / lc;
            m_num *= inv;
            m_den *= inv;
        }
    }

    Poly m_num;
    Poly m_den;
};

inline bool is_zero(const RatFun &r)
{
    return r.is_zero();
}

inline RatFun ratfun_normalize(const RatFun &r)
{
    // Construction already normalizes; re-running the reduction is idempotent.
    return RatFun(r.num(), r.den());
}

inline Poly assert_polynomial(const RatFun &r)
{
    if (!r.is_polynomial()) {
        throw NonPolynomial(r.den().to_string());
    }
    return r.num();
}

} // namespace parkhopf

#endif

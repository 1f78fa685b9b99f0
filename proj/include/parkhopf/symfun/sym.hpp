#ifndef PARKHOPF_SYMFUN_SYM_HPP
#define PARKHOPF_SYMFUN_SYM_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <parkhopf/combinat/composition.hpp>
#include <parkhopf/combinat/enumerate.hpp>
#include <parkhopf/exact/lincomb.hpp>

namespace parkhopf::sym
{

enum class Basis { S, R };

inline const char *basis_name(Basis b)
{
    return b == Basis::S ? "S" : "R";
}

// An element of Sym, stored in one basis. Extended keys (zero parts) are
// only meaningful in the S basis, where S_0 is an extra generator.
class SymElem
{
public:
    using Terms = LinComb<Composition>;

    SymElem() = default;
    explicit SymElem(Basis basis, Terms terms = {}) : m_basis(basis), m_terms(std::move(terms)) {}

    static SymElem S(const Composition &c, const Rational &coeff = 1)
    {
        return SymElem(Basis::S, Terms(c, coeff));
    }
    static SymElem R(const Composition &c, const Rational &coeff = 1)
    {
        if (c.is_extended()) {
            throw std::invalid_argument("ribbon basis has no extended keys");
        }
        return SymElem(Basis::R, Terms(c, coeff));
    }
    static SymElem one(Basis basis = Basis::S)
    {
        return SymElem(basis, Terms(Composition{}));
    }
    // The generator S_n.
    static SymElem S_n(int n)
    {
        return S(Composition(std::vector<int>{n}, n == 0));
    }

    Basis basis() const
    {
        return m_basis;
    }
    const Terms &terms() const
    {
        return m_terms;
    }
    bool is_zero() const
    {
        return m_terms.is_zero();
    }
    Rational coeff(const Composition &c) const
    {
        return m_terms.coeff(c);
    }

    // Terms whose key has the given size.
    SymElem homogeneous(int n) const
    {
        Terms t;
        for (const auto &[k, c] : m_terms) {
            if (k.size() == n) {
                t.add_term(k, c);
            }
        }
        return SymElem(m_basis, std::move(t));
    }

    SymElem &operator+=(const SymElem &o)
    {
        check_basis(o);
        m_terms += o.m_terms;
        return *this;
    }
    SymElem &operator-=(const SymElem &o)
    {
        check_basis(o);
        m_terms -= o.m_terms;
        return *this;
    }
    SymElem &operator*=(const Rational &s)
    {
        m_terms *= s;
        return *this;
    }
    friend SymElem operator+(SymElem a, const SymElem &b)
    {
        a += b;
        return a;
    }
    friend SymElem operator-(SymElem a, const SymElem &b)
    {
        a -= b;
        return a;
    }
    friend SymElem operator*(SymElem a, const Rational &s)
    {
        a *= s;
        return a;
    }
    friend SymElem operator*(const Rational &s, SymElem a)
    {
        a *= s;
        return a;
    }
    friend bool operator==(const SymElem &a, const SymElem &b)
    {
        if (a.is_zero() && b.is_zero()) {
            return true;
        }
        return a.m_basis == b.m_basis && a.m_terms == b.m_terms;
    }

    void check_basis(const SymElem &o) const
    {
        if (o.m_basis != m_basis && !o.is_zero() && !is_zero()) {
            throw std::invalid_argument(std::string("basis mismatch: ") + basis_name(m_basis) + " vs " +
                                        basis_name(o.m_basis));
        }
    }

private:
    Basis m_basis = Basis::S;
    Terms m_terms;
};

// Concatenation of S-basis keys.
inline SymElem s_product(const SymElem &a, const SymElem &b)
{
    if (a.basis() != Basis::S || b.basis() != Basis::S) {
        throw std::invalid_argument("s_product: both factors must be in the S basis");
    }
    return SymElem(Basis::S, bilinear(a.terms(), b.terms(), [](const Composition &i, const Composition &j) {
                       return LinComb<Composition>(concat(i, j));
                   }));
}

// R_I R_J = R_{I.J} + R_{I|>J}
inline SymElem ribbon_product(const SymElem &a, const SymElem &b)
{
    if (a.basis() != Basis::R || b.basis() != Basis::R) {
        throw std::invalid_argument("ribbon_product: both factors must be in the R basis");
    }
    return SymElem(Basis::R, bilinear(a.terms(), b.terms(), [](const Composition &i, const Composition &j) {
                       LinComb<Composition> out(concat(i, j));
                       if (!i.empty() && !j.empty()) {
                           out.add_term(near_concat(i, j), 1);
                       }
                       return out;
                   }));
}

inline SymElem product(const SymElem &a, const SymElem &b)
{
    a.check_basis(b);
    return a.basis() == Basis::S ? s_product(a, b) : ribbon_product(a, b);
}

inline SymElem operator*(const SymElem &a, const SymElem &b)
{
    return product(a, b);
}

inline SymElem power(const SymElem &a, unsigned k)
{
    SymElem out = SymElem::one(a.basis());
    for (unsigned i = 0; i < k; ++i) {
        out = out * a;
    }
    return out;
}

namespace detail
{

inline void reject_extended(const SymElem &a, const char *what)
{
    for (const auto &[k, c] : a.terms()) {
        if (k.is_extended()) {
            throw std::invalid_argument(std::string(what) + ": extended keys are not supported");
        }
    }
}

} // namespace detail

// S^I = sum over J <= I of R_J.
inline SymElem S_to_R(const SymElem &a)
{
    if (a.basis() == Basis::R) {
        return a;
    }
    detail::reject_extended(a, "S_to_R");
    return SymElem(Basis::R, apply_linear(a.terms(), [](const Composition &i) {
                       LinComb<Composition> out;
                       for (const auto &j : coarsenings(i)) {
                           out.add_term(j, 1);
                       }
                       return out;
                   }));
}

// R_I = sum over J <= I of (-1)^{l(I)-l(J)} S^J.
inline SymElem R_to_S(const SymElem &a)
{
    if (a.basis() == Basis::S) {
        return a;
    }
    return SymElem(Basis::S, apply_linear(a.terms(), [](const Composition &i) {
                       LinComb<Composition> out;
                       for (const auto &j : coarsenings(i)) {
                           out.add_term(j, (i.length() - j.length()) % 2 == 0 ? 1 : -1);
                       }
                       return out;
                   }));
}

inline SymElem to_basis(const SymElem &a, Basis b)
{
    return b == Basis::S ? R_to_S(a) : S_to_R(a);
}

// Checks (I *1 J) *2 K = I *1 (J *2 K) for *1, *2 in {concat, near_concat}
// over all triples of nonempty compositions of total size n.
inline bool as2_axioms_check(int n)
{
    using Op = Composition (*)(const Composition &, const Composition &);
    const Op ops[] = {static_cast<Op>(&concat), static_cast<Op>(&near_concat)};
    for (int a = 1; a <= n; ++a) {
        for (int b = 1; a + b < n; ++b) {
            const int c = n - a - b;
            for (const auto &i : enumerate_compositions(a)) {
                for (const auto &j : enumerate_compositions(b)) {
                    for (const auto &k : enumerate_compositions(c)) {
                        for (auto op1 : ops) {
                            for (auto op2 : ops) {
                                if (!(op2(op1(i, j), k) == op1(i, op2(j, k)))) {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return true;
}

// Setting S_0 = 1: zero parts are dropped from every key.
inline SymElem specialize_s0(const SymElem &a)
{
    if (a.basis() != Basis::S) {
        throw std::invalid_argument("specialize_s0: S basis expected");
    }
    return SymElem(Basis::S, apply_linear(a.terms(), [](const Composition &i) {
                       return LinComb<Composition>(remove_zeros(i));
                   }));
}

// Ribbon conjugation I -> I~ applied to the keys.
inline SymElem conjugate_keys(const SymElem &a)
{
    return SymElem(a.basis(), apply_linear(a.terms(), [](const Composition &i) {
                       return LinComb<Composition>(conjugate(i));
                   }));
}

} // namespace parkhopf::sym

#endif

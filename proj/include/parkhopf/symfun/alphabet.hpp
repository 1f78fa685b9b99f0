#ifndef PARKHOPF_SYMFUN_ALPHABET_HPP
#define PARKHOPF_SYMFUN_ALPHABET_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <parkhopf/exact/poly.hpp>
#include <parkhopf/exact/ratfun.hpp>
#include <parkhopf/symfun/sym.hpp>

namespace parkhopf::sym
{

// A specialization of commutative symmetric functions given by its values
// on the power sums.
class VirtualAlphabet
{
public:
    enum class Kind { binomial, one_minus_x_over_one_minus_q, m_times_one_minus_x };

    // p_n = alpha for every n.
    static VirtualAlphabet binomial()
    {
        return VirtualAlphabet(Kind::binomial, 0);
    }
    // p_n = (1 - x^n) / (1 - q^n).
    static VirtualAlphabet one_minus_x_over_one_minus_q()
    {
        return VirtualAlphabet(Kind::one_minus_x_over_one_minus_q, 0);
    }
    // p_n = m (1 - x^n).
    static VirtualAlphabet m_times_one_minus_x(long m)
    {
        return VirtualAlphabet(Kind::m_times_one_minus_x, m);
    }

    Kind kind() const
    {
        return m_kind;
    }

    RatFun power_sum(int n) const
    {
        if (n < 1) {
            throw std::invalid_argument("power_sum: n must be positive");
        }
        const Poly one(1);
        switch (m_kind) {
        case Kind::binomial:
            return RatFun(poly_var(Var::alpha));
        case Kind::one_minus_x_over_one_minus_q:
            return RatFun(one - poly_var(Var::x, n), one - poly_var(Var::q, n));
        case Kind::m_times_one_minus_x:
            return RatFun((one - poly_var(Var::x, n)) * Rational(m_multiplier));
        }
        throw std::logic_error("unknown alphabet");
    }

    // h_0..h_n by the Newton recurrence m h_m = sum_{k=1}^m p_k h_{m-k}.
    std::vector<RatFun> complete_up_to(int n) const
    {
        std::vector<RatFun> h{RatFun(Poly(1))};
        std::vector<RatFun> p(static_cast<std::size_t>(n) + 1);
        for (int k = 1; k <= n; ++k) {
            p[static_cast<std::size_t>(k)] = power_sum(k);
        }
        for (int m = 1; m <= n; ++m) {
            RatFun acc(Poly(0));
            for (int k = 1; k <= m; ++k) {
                acc += p[static_cast<std::size_t>(k)] * h[static_cast<std::size_t>(m - k)];
            }
            h.push_back(acc * RatFun(Poly(make_rational(1, m))));
        }
        return h;
    }

    RatFun complete(int n) const
    {
        return complete_up_to(n).back();
    }

    // e_n from sum_k (-1)^k e_k h_{n-k} = 0.
    RatFun elementary(int n) const
    {
        const auto h = complete_up_to(n);
        std::vector<RatFun> e{RatFun(Poly(1))};
        for (int m = 1; m <= n; ++m) {
            RatFun acc(Poly(0));
            for (int k = 1; k <= m; ++k) {
                const auto term = h[static_cast<std::size_t>(k)] * e[static_cast<std::size_t>(m - k)];
                if (k % 2 == 1) {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            e.push_back(acc);
        }
        return e.back();
    }

private:
    VirtualAlphabet(Kind kind, long m) : m_kind(kind), m_multiplier(m) {}

    Kind m_kind;
    long m_multiplier;
};

// Commutative image: S^I -> prod_k h_{i_k}(A).
inline RatFun evaluate(const SymElem &a, const VirtualAlphabet &alphabet)
{
    const auto s = R_to_S(a);
    detail::reject_extended(s, "evaluate");
    int top = 0;
    for (const auto &[k, c] : s.terms()) {
        for (auto part : k.parts()) {
            top = std::max(top, part);
        }
    }
    const auto h = alphabet.complete_up_to(top);
    RatFun out(Poly(0));
    for (const auto &[k, c] : s.terms()) {
        RatFun term{Poly(c)};
        for (auto part : k.parts()) {
            term *= h[static_cast<std::size_t>(part)];
        }
        out += term;
    }
    return out;
}

// alpha (alpha + 1) ... (alpha + m - 1)
inline Poly rising_factorial(int m)
{
    Poly out(1);
    for (int k = 0; k < m; ++k) {
        out *= poly_var(Var::alpha) + Poly(k);
    }
    return out;
}

// Z_I(alpha): cycle enumerator of the Young subgroup S_{i_1} x ... x S_{i_r}.
inline Poly cycle_enumerator(const Composition &c)
{
    Poly out(1);
    for (auto part : c.parts()) {
        out *= rising_factorial(part);
    }
    return out;
}

} // namespace parkhopf::sym

#endif

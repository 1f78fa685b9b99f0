#ifndef PARKHOPF_EXACT_POLY_HPP
#define PARKHOPF_EXACT_POLY_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <parkhopf/exact/rational.hpp>

namespace parkhopf
{

// The fixed variable set. The enumerator order is the printing order.
enum class Var : std::size_t { q = 0, t = 1, x = 2, z = 3, alpha = 4 };

inline constexpr std::size_t num_vars = 5;

inline const char *var_name(Var v)
{
    static constexpr const char *names[num_vars] = {"q", "t", "x", "z", "α"};
    return names[static_cast<std::size_t>(v)];
}

using Exponents = std::array<int, num_vars>;

inline int total_degree(const Exponents &e)
{
    int d = 0;
    for (auto k : e) {
        d += k;
    }
    return d;
}

// Graded order: total degree first, then the exponent of the last variable,
// then the one before, and so on (smaller first). This is a monomial order,
// and it is the canonical printing order.
struct MonomialLess {
    bool operator()(const Exponents &a, const Exponents &b) const
    {
        const auto da = total_degree(a), db = total_degree(b);
        if (da != db) {
            return da < db;
        }
        for (std::size_t i = num_vars; i-- > 0;) {
            if (a[i] != b[i]) {
                return a[i] < b[i];
            }
        }
        return false;
    }
};

class Poly
{
public:
    using term_map = std::map<Exponents, Rational, MonomialLess>;

    Poly() = default;
    Poly(long c) : Poly(Rational(c)) {}
    Poly(int c) : Poly(Rational(c)) {}
    Poly(const Rational &c)
    {
        if (!parkhopf::is_zero(c)) {
            m_terms.emplace(Exponents{}, c);
        }
    }

    static Poly var(Var v, int exponent = 1)
    {
        Exponents e{};
        e[static_cast<std::size_t>(v)] = exponent;
        return monomial(e, Rational(1));
    }

    static Poly monomial(const Exponents &e, const Rational &c)
    {
        for (auto k : e) {
            if (k < 0) {
                throw std::invalid_argument("negative exponent in monomial");
            }
        }
        Poly p;
        if (!parkhopf::is_zero(c)) {
            p.m_terms.emplace(e, c);
        }
        return p;
    }

    const term_map &terms() const
    {
        return m_terms;
    }
    std::size_t size() const
    {
        return m_terms.size();
    }
    bool is_zero() const
    {
        return m_terms.empty();
    }
    bool is_constant() const
    {
        return m_terms.empty() || (m_terms.size() == 1u && m_terms.begin()->first == Exponents{});
    }
    Rational constant_term() const
    {
        return coeff(Exponents{});
    }
    Rational coeff(const Exponents &e) const
    {
        auto it = m_terms.find(e);
        return it == m_terms.end() ? Rational(0) : it->second;
    }
    // Coefficient of v^k in a polynomial that involves v only.
    Rational coeff(Var v, int k) const
    {
        Exponents e{};
        e[static_cast<std::size_t>(v)] = k;
        return coeff(e);
    }

    int degree_in(Var v) const
    {
        int d = 0;
        for (const auto &[e, c] : m_terms) {
            d = std::max(d, e[static_cast<std::size_t>(v)]);
        }
        return d;
    }
    bool involves(Var v) const
    {
        return degree_in(v) > 0;
    }
    int total_degree() const
    {
        return m_terms.empty() ? 0 : parkhopf::total_degree(m_terms.rbegin()->first);
    }

    // Largest term for MonomialLess.
    const std::pair<const Exponents, Rational> &leading_term() const
    {
        if (m_terms.empty()) {
            throw std::domain_error("leading term of the zero polynomial");
        }
        return *m_terms.rbegin();
    }

    Poly &operator+=(const Poly &o)
    {
        for (const auto &[e, c] : o.m_terms) {
            add_term(e, c);
        }
        return *this;
    }
    Poly &operator-=(const Poly &o)
    {
        for (const auto &[e, c] : o.m_terms) {
            add_term(e, -c);
        }
        return *this;
    }
    Poly &operator*=(const Rational &c)
    {
        if (parkhopf::is_zero(c)) {
            m_terms.clear();
        } else {
            for (auto &[e, v] : m_terms) {
                v *= c;
            }
        }
        return *this;
    }
    Poly &operator*=(const Poly &o)
    {
        *this = *this * o;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly &b)
    {
        a += b;
        return a;
    }
    friend Poly operator-(Poly a, const Poly &b)
    {
        a -= b;
        return a;
    }
    friend Poly operator-(Poly a)
    {
        for (auto &[e, c] : a.m_terms) {
            c = -c;
        }
        return a;
    }
    friend Poly operator*(const Poly &a, const Poly &b)
    {
        Poly r;
        for (const auto &[ea, ca] : a.m_terms) {
            for (const auto &[eb, cb] : b.m_terms) {
                Exponents e;
                for (std::size_t i = 0; i < num_vars; ++i) {
                    e[i] = ea[i] + eb[i];
                }
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    friend Poly operator*(Poly a, const Rational &c)
    {
        a *= c;
        return a;
    }
    friend Poly operator*(const Rational &c, Poly a)
    {
        a *= c;
        return a;
    }
    friend Poly operator*(Poly a, long c)
    {
        return a * Rational(c);
    }
    friend Poly operator*(long c, Poly a)
    {
        return a * Rational(c);
    }
    friend Poly operator*(Poly a, int c)
    {
        return a * Rational(c);
    }
    friend Poly operator*(int c, Poly a)
    {
        return a * Rational(c);
    }
    friend bool operator==(const Poly &a, const Poly &b)
    {
        return a.m_terms == b.m_terms;
    }

    Poly pow(unsigned k) const
    {
        Poly r(1), base = *this;
        while (k) {
            if (k & 1u) {
                r *= base;
            }
            k >>= 1u;
            if (k) {
                base *= base;
            }
        }
        return r;
    }

    // Replaces every occurrence of v by value.
    Poly substitute(Var v, const Poly &value) const
    {
        const auto idx = static_cast<std::size_t>(v);
        std::vector<Poly> powers{Poly(1)};
        Poly r;
        for (const auto &[e, c] : m_terms) {
            const auto k = static_cast<std::size_t>(e[idx]);
            while (powers.size() <= k) {
                powers.push_back(powers.back() * value);
            }
            auto rest = e;
            rest[idx] = 0;
            r += monomial(rest, c) * powers[k];
        }
        return r;
    }

    // Coefficients with respect to v: result[k] is the coefficient of v^k,
    // a polynomial not involving v.
    std::vector<Poly> coefficients_in(Var v) const
    {
        const auto idx = static_cast<std::size_t>(v);
        std::vector<Poly> out(static_cast<std::size_t>(degree_in(v)) + 1u);
        for (const auto &[e, c] : m_terms) {
            auto rest = e;
            rest[idx] = 0;
            out[static_cast<std::size_t>(e[idx])].add_term(rest, c);
        }
        return out;
    }

    static Poly from_coefficients(Var v, const std::vector<Poly> &coeffs)
    {
        Poly r, vk(1);
        const auto x = var(v);
        for (const auto &c : coeffs) {
            r += c * vk;
            vk *= x;
        }
        return r;
    }

    // Dense coefficient list of a polynomial in v alone.
    std::vector<Rational> coefficient_list(Var v) const
    {
        const auto idx = static_cast<std::size_t>(v);
        std::vector<Rational> out(static_cast<std::size_t>(degree_in(v)) + 1u);
        for (const auto &[e, c] : m_terms) {
            for (std::size_t i = 0; i < num_vars; ++i) {
                if (i != idx && e[i] != 0) {
                    throw std::invalid_argument("coefficient_list: polynomial involves other variables");
                }
            }
            out[static_cast<std::size_t>(e[idx])] = c;
        }
        return out;
    }

    std::string to_string() const
    {
        if (m_terms.empty()) {
            return "0";
        }
        std::string out;
        bool first = true;
        for (const auto &[e, c] : m_terms) {
            const bool neg = sgn(c) < 0;
            const Rational a = neg ? Rational(-c) : c;
            if (first) {
                out += neg ? "-" : "";
            } else {
                out += neg ? " - " : " + ";
            }
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < num_vars; ++i) {
                if (e[i] == 0) {
                    continue;
                }
                mono += var_name(static_cast<Var>(i));
                if (e[i] > 1) {
                    mono += "^" + std::to_string(e[i]);
                }
            }
            if (mono.empty()) {
                out += a.get_str();
            } else if (a == 1) {
                out += mono;
            } else if (a.get_den() == 1) {
                out += a.get_str() + mono;
            } else {
                out += "(" + a.get_str() + ")" + mono;
            }
        }
        return out;
    }

    void add_term(const Exponents &e, const Rational &c)
    {
        if (parkhopf::is_zero(c)) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (parkhopf::is_zero(it->second)) {
                m_terms.erase(it);
            }
        }
    }

private:
    term_map m_terms;
};

inline bool is_zero(const Poly &p)
{
    return p.is_zero();
}

inline std::string to_string(const Poly &p)
{
    return p.to_string();
}

inline std::ostream &operator<<(std::ostream &os, const Poly &p)
{
    return os << p.to_string();
}

inline Poly poly_var(Var v, int exponent = 1)
{
    return Poly::var(v, exponent);
}

// Univariate polynomial from a dense coefficient list (ascending powers).
inline Poly poly_from_list(Var v, const std::vector<long> &coeffs)
{
    Poly r;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        r += Poly::var(v, static_cast<int>(k)) * Rational(coeffs[k]);
    }
    return r;
}

// Exact quotient a / b if b divides a, otherwise nullopt.
inline std::optional<Poly> divide_exact(const Poly &a, const Poly &b)
{
    if (b.is_zero()) {
        throw std::domain_error("division by the zero polynomial");
    }
    const auto &[lb_exp, lb_coeff] = b.leading_term();
    Poly rem = a, quot;
    while (!rem.is_zero()) {
        const auto [lr_exp, lr_coeff] = rem.leading_term();
        Exponents e;
        for (std::size_t i = 0; i < num_vars; ++i) {
            e[i] = lr_exp[i] - lb_exp[i];
            if (e[i] < 0) {
                return std::nullopt;
            }
        }
        const auto t = Poly::monomial(e, lr_coeff / lb_coeff);
        quot += t;
        rem -= t * b;
    }
    return quot;
}

inline Poly exact_quotient(const Poly &a, const Poly &b)
{
    auto q = divide_exact(a, b);
    if (!q) {
        throw std::domain_error("polynomial division is not exact: (" + a.to_string() + ") / (" + b.to_string()
                                + ")");
    }
    return std::move(*q);
}

// Scales p so that its leading coefficient is 1.
inline Poly make_monic(const Poly &p)
{
    if (p.is_zero()) {
        return p;
    }
    return p * (Rational(1) / p.leading_term().second);
}

namespace detail
{

inline std::optional<Var> main_variable(const Poly &a, const Poly &b)
{
    for (std::size_t i = num_vars; i-- > 0;) {
        const auto v = static_cast<Var>(i);
        if (a.involves(v) || b.involves(v)) {
            return v;
        }
    }
    return std::nullopt;
}

// Pseudo-remainder of a by b as univariate polynomials in v.
inline Poly pseudo_remainder(Poly a, const Poly &b, Var v)
{
    const int db = b.degree_in(v);
    const auto cb = b.coefficients_in(v);
    const Poly &lc = cb.back();
    while (!a.is_zero() && a.degree_in(v) >= db) {
        const int da = a.degree_in(v);
        const Poly la = a.coefficients_in(v).back();
        a = lc * a - la * Poly::var(v, da - db) * b;
    }
    return a;
}

} // namespace detail

Poly gcd(const Poly &a, const Poly &b);

namespace detail
{

// Rescales p to integer coefficients with no common factor and a positive
// leading coefficient.
inline Poly numeric_primitive(const Poly &p)
{
    if (p.is_zero()) {
        return p;
    }
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto &[e, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational scale = make_rational(den_lcm, num_gcd);
    if (sgn(p.leading_term().second) < 0) {
        scale = -scale;
    }
    return p * scale;
}

} // namespace detail

namespace detail
{

// Gcd of the coefficients of p seen as a polynomial in v.
inline Poly content_in(const Poly &p, Var v)
{
    Poly g;
    for (const auto &c : p.coefficients_in(v)) {
        g = gcd(g, c);
        if (g == Poly(1)) {
            break;
        }
    }
    return g;
}

} // namespace detail

// Monic gcd over Q[q,t,x,z,alpha], by recursive primitive remainder sequences.
inline Poly gcd(const Poly &a, const Poly &b)
{
    if (a.is_zero()) {
        return make_monic(b);
    }
    if (b.is_zero()) {
        return make_monic(a);
    }
    const auto mv = detail::main_variable(a, b);
    if (!mv) {
        return Poly(1);
    }
    const Var v = *mv;
    const auto ca = detail::content_in(a, v), cb = detail::content_in(b, v);
    const auto g = gcd(ca, cb);
    auto pa = detail::numeric_primitive(exact_quotient(a, ca));
    auto pb = detail::numeric_primitive(exact_quotient(b, cb));
    if (pa.degree_in(v) < pb.degree_in(v)) {
        std::swap(pa, pb);
    }
    while (!pb.is_zero()) {
        if (pb.degree_in(v) == 0) {
            // pb is primitive and free of v, hence a unit.
            pa = Poly(1);
            break;
        }
        auto r = detail::pseudo_remainder(pa, pb, v);
        pa = std::move(pb);
        pb = r.is_zero() ? r : detail::numeric_primitive(exact_quotient(r, detail::content_in(r, v)));
    }
    if (pa.degree_in(v) > 0) {
        pa = exact_quotient(pa, detail::content_in(pa, v));
    }
    return make_monic(g * pa);
}

} // namespace parkhopf

#endif

#ifndef PARKHOPF_EXACT_LINCOMB_HPP
#define PARKHOPF_EXACT_LINCOMB_HPP

#include <cstddef>
#include <iterator>
#include <map>
#include <tuple>
#include <utility>

#include <parkhopf/exact/poly.hpp>
#include <parkhopf/exact/rational.hpp>

namespace parkhopf
{

// A finitely supported map from basis keys to coefficients. Zero
// coefficients are never stored and keys are kept in their natural order,
// so two equal elements always have identical term lists.
template <typename Key, typename Coeff = Rational>
class LinComb
{
public:
    using key_type = Key;
    using coeff_type = Coeff;
    using term_map = std::map<Key, Coeff>;
    using const_iterator = typename term_map::const_iterator;

    LinComb() = default;
    explicit LinComb(Key k, Coeff c = Coeff(1))
    {
        add_term(std::move(k), c);
    }

    const term_map &terms() const
    {
        return m_terms;
    }
    const_iterator begin() const
    {
        return m_terms.begin();
    }
    const_iterator end() const
    {
        return m_terms.end();
    }
    std::size_t size() const
    {
        return m_terms.size();
    }
    bool is_zero() const
    {
        return m_terms.empty();
    }
    Coeff coeff(const Key &k) const
    {
        auto it = m_terms.find(k);
        return it == m_terms.end() ? Coeff(0) : it->second;
    }
    bool contains(const Key &k) const
    {
        return m_terms.count(k) != 0;
    }

    void add_term(const Key &k, const Coeff &c)
    {
        if (is_zero_coeff(c)) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (is_zero_coeff(it->second)) {
                m_terms.erase(it);
            }
        }
    }

    LinComb &operator+=(const LinComb &o)
    {
        for (const auto &[k, c] : o.m_terms) {
            add_term(k, c);
        }
        return *this;
    }
    LinComb &operator-=(const LinComb &o)
    {
        for (const auto &[k, c] : o.m_terms) {
            add_term(k, -c);
        }
        return *this;
    }
    LinComb &operator*=(const Coeff &s)
    {
        if (is_zero_coeff(s)) {
            m_terms.clear();
            return *this;
        }
        for (auto it = m_terms.begin(); it != m_terms.end();) {
            it->second *= s;
            it = is_zero_coeff(it->second) ? m_terms.erase(it) : std::next(it);
        }
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb &b)
    {
        a += b;
        return a;
    }
    friend LinComb operator-(LinComb a, const LinComb &b)
    {
        a -= b;
        return a;
    }
    friend LinComb operator-(LinComb a)
    {
        for (auto &[k, c] : a.m_terms) {
            c = -c;
        }
        return a;
    }
    friend LinComb operator*(LinComb a, const Coeff &s)
    {
        a *= s;
        return a;
    }
    friend LinComb operator*(const Coeff &s, LinComb a)
    {
        a *= s;
        return a;
    }
    friend bool operator==(const LinComb &a, const LinComb &b)
    {
        return a.m_terms == b.m_terms;
    }

private:
    static bool is_zero_coeff(const Coeff &c)
    {
        using parkhopf::is_zero;
        return is_zero(c);
    }

    term_map m_terms;
};

// Bilinear extension of a rule defined on pairs of basis keys.
template <typename K1, typename K2, typename C, typename Rule>
auto bilinear(const LinComb<K1, C> &a, const LinComb<K2, C> &b, Rule &&rule)
{
    using Result = decltype(rule(std::declval<const K1 &>(), std::declval<const K2 &>()));
    Result out;
    for (const auto &[ka, ca] : a) {
        for (const auto &[kb, cb] : b) {
            const C s = ca * cb;
            for (const auto &[k, c] : rule(ka, kb)) {
                out.add_term(k, s * c);
            }
        }
    }
    return out;
}

// Turns a rule on key pairs into a product on linear combinations.
template <typename Rule>
auto lincomb_bilinear_extend(Rule rule)
{
    return [rule = std::move(rule)](const auto &a, const auto &b) { return bilinear(a, b, rule); };
}

// Linear extension of a map defined on basis keys.
template <typename K, typename C, typename Map>
auto apply_linear(const LinComb<K, C> &a, Map &&map)
{
    using Result = decltype(map(std::declval<const K &>()));
    Result out;
    for (const auto &[k, c] : a) {
        for (const auto &[k2, c2] : map(k)) {
            out.add_term(k2, c * c2);
        }
    }
    return out;
}

// Tensors are linear combinations of ordered pairs (or tuples) of keys.
template <typename Key, typename Coeff = Rational>
using Tensor = LinComb<std::pair<Key, Key>, Coeff>;

template <typename Key, typename Coeff = Rational>
using Tensor3 = LinComb<std::tuple<Key, Key, Key>, Coeff>;

template <typename K, typename C>
Tensor<K, C> tensor(const LinComb<K, C> &a, const LinComb<K, C> &b)
{
    Tensor<K, C> out;
    for (const auto &[ka, ca] : a) {
        for (const auto &[kb, cb] : b) {
            out.add_term({ka, kb}, ca * cb);
        }
    }
    return out;
}

} // namespace parkhopf

#endif

#ifndef PARKHOPF_EXACT_LINALG_HPP
#define PARKHOPF_EXACT_LINALG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include <parkhopf/exact/lincomb.hpp>
#include <parkhopf/exact/ratfun.hpp>

namespace parkhopf
{

namespace detail
{

// Polynomial coefficients are eliminated over the rational function field.
template <typename C>
using field_of = std::conditional_t<std::is_same_v<C, Poly>, RatFun, C>;

// Row echelon basis keyed by the smallest key of each row; every stored row
// has its pivot coefficient equal to 1.
template <typename Key, typename Field>
class EchelonBasis
{
public:
    using row_type = std::map<Key, Field>;

    // Reduces row against the basis; returns true if it was independent.
    bool insert(row_type row)
    {
        while (!row.empty()) {
            auto first = row.begin();
            auto piv = m_pivots.find(first->first);
            if (piv == m_pivots.end()) {
                const Field inv = Field(1) / first->second;
                for (auto &[k, c] : row) {
                    c = c * inv;
                }
                m_pivots.emplace(first->first, std::move(row));
                return true;
            }
            const Field factor = first->second;
            for (const auto &[k, c] : piv->second) {
                auto [it, inserted] = row.try_emplace(k, Field(0));
                it->second = it->second - factor * c;
                if (is_zero(it->second)) {
                    row.erase(it);
                }
            }
        }
        return false;
    }

    std::size_t rank() const
    {
        return m_pivots.size();
    }

private:
    std::map<Key, row_type> m_pivots;
};

template <typename Key, typename C>
std::map<Key, field_of<C>> to_row(const LinComb<Key, C> &v)
{
    std::map<Key, field_of<C>> row;
    for (const auto &[k, c] : v) {
        row.emplace(k, field_of<C>(c));
    }
    return row;
}

} // namespace detail

// Dimension of the span of the given vectors, by exact Gaussian elimination.
template <typename Key, typename C>
std::size_t span_dimension(const std::vector<LinComb<Key, C>> &vectors)
{
    detail::EchelonBasis<Key, detail::field_of<C>> basis;
    for (const auto &v : vectors) {
        basis.insert(detail::to_row(v));
    }
    return basis.rank();
}

// As above, but rejects inputs whose keys do not all have the same grade.
template <typename Key, typename C, typename Grade>
std::size_t span_dimension(const std::vector<LinComb<Key, C>> &vectors, Grade &&grade)
{
    std::optional<decltype(grade(std::declval<const Key &>()))> g;
    for (const auto &v : vectors) {
        for (const auto &[k, c] : v) {
            const auto gk = grade(k);
            if (g && *g != gk) {
                throw std::invalid_argument("span_dimension: mixed gradings");
            }
            g = gk;
        }
    }
    return span_dimension(vectors);
}

// Dimension of the kernel of the linear map defined on a basis of a graded
// piece. All basis keys must share the same grade.
template <typename Key, typename Map, typename Grade>
std::size_t kernel_dimension(const std::vector<Key> &basis, Map &&map, Grade &&grade)
{
    using Image = decltype(map(std::declval<const Key &>()));
    std::vector<Image> images;
    images.reserve(basis.size());
    for (const auto &k : basis) {
        if (grade(k) != grade(basis.front())) {
            throw std::invalid_argument("kernel_dimension: mixed gradings");
        }
        images.push_back(map(k));
    }
    return basis.size() - span_dimension(images);
}

} // namespace parkhopf

#endif

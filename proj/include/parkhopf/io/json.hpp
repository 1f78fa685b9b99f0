#ifndef PARKHOPF_IO_JSON_HPP
#define PARKHOPF_IO_JSON_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include <parkhopf/combinat/composition.hpp>
#include <parkhopf/combinat/quasi_ribbon.hpp>
#include <parkhopf/combinat/text.hpp>
#include <parkhopf/exact/lincomb.hpp>
#include <parkhopf/exact/poly.hpp>
#include <parkhopf/symfun/sym.hpp>

namespace parkhopf::io
{

using Json = nlohmann::ordered_json;

inline constexpr const char *schema = "parkhopf/1";

inline std::string key_text(const Composition &c)
{
    return to_string(Word(c.parts().begin(), c.parts().end()));
}

inline std::string key_text(const QuasiRibbon &q)
{
    return to_string(q);
}

template <typename Policy>
std::string key_text(const CheckedWord<Policy> &w)
{
    return to_string(w);
}

// {basis, terms: [{key, coeff}]} with keys in canonical order.
template <typename Key>
Json element_json(const std::string &basis, const LinComb<Key> &a)
{
    Json terms = Json::array();
    for (const auto &[k, c] : a) {
        terms.push_back({{"key", key_text(k)}, {"coeff", c.get_str()}});
    }
    return {{"basis", basis}, {"terms", terms}};
}

inline Json element_json(const sym::SymElem &a)
{
    return element_json(sym::basis_name(a.basis()), a.terms());
}

// Ascending coefficients of a univariate polynomial.
inline Json coefficients_json(const Poly &p, Var v)
{
    Json out = Json::array();
    for (const auto &c : p.coefficient_list(v)) {
        out.push_back(c.get_str());
    }
    return out;
}

inline Json poly_json(const Poly &p, Var v)
{
    return {{"text", p.to_string()}, {"variable", var_name(v)}, {"coefficients", coefficients_json(p, v)}};
}

// Rows indexed by the power of outer, each row ascending in inner.
inline Json poly_rows_json(const Poly &p, Var outer, Var inner)
{
    Json rows = Json::array();
    for (const auto &row : p.coefficients_in(outer)) {
        rows.push_back(coefficients_json(row, inner));
    }
    return {{"text", p.to_string()}, {"rows_by", var_name(outer)}, {"columns_by", var_name(inner)}, {"rows", rows}};
}

} // namespace parkhopf::io

#endif

#ifndef PARKHOPF_HOPF_AXIOMS_HPP
#define PARKHOPF_HOPF_AXIOMS_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include <parkhopf/combinat/enumerate.hpp>
#include <parkhopf/combinat/text.hpp>
#include <parkhopf/exact/linalg.hpp>
#include <parkhopf/exact/lincomb.hpp>
#include <parkhopf/hopf/cqsym.hpp>
#include <parkhopf/hopf/fqsym.hpp>
#include <parkhopf/hopf/pqsym.hpp>
#include <parkhopf/hopf/sqsym.hpp>
#include <parkhopf/hopf/wqsym.hpp>

namespace parkhopf::hopf
{

struct AxiomReport {
    std::string name;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool ok() const
    {
        return checked > 0 && failures == 0;
    }
};

namespace detail
{

template <typename Key>
using Ternary = std::function<LinComb<Key>(const LinComb<Key> &, const LinComb<Key> &, const LinComb<Key> &)>;

// Checks lhs(x,y,z) = rhs(x,y,z) on all basis triples of positive degrees
// with total degree at most max_total.
template <typename Key, typename Basis>
AxiomReport check_triples(const std::string &name, int max_total, Basis &&basis, const Ternary<Key> &lhs,
                          const Ternary<Key> &rhs)
{
    AxiomReport report;
    report.name = name;
    std::vector<std::vector<Key>> by_degree(static_cast<std::size_t>(max_total) + 1);
    for (int d = 1; d <= max_total; ++d) {
        by_degree[static_cast<std::size_t>(d)] = basis(d);
    }
    for (int a = 1; a <= max_total; ++a) {
        for (int b = 1; a + b <= max_total; ++b) {
            for (int c = 1; a + b + c <= max_total; ++c) {
                for (const auto &x : by_degree[static_cast<std::size_t>(a)]) {
                    for (const auto &y : by_degree[static_cast<std::size_t>(b)]) {
                        for (const auto &z : by_degree[static_cast<std::size_t>(c)]) {
                            const LinComb<Key> ex(x), ey(y), ez(z);
                            ++report.checked;
                            if (!(lhs(ex, ey, ez) == rhs(ex, ey, ez))) {
                                if (report.failures++ == 0) {
                                    report.first_failure = to_string(x) + ", " + to_string(y) + ", " + to_string(z);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return report;
}

template <typename Key, typename Op>
AxiomReport associativity(const std::string &name, int max_total, std::function<std::vector<Key>(int)> basis,
                          Op op)
{
    return check_triples<Key>(
        name, max_total, basis, [op](const auto &x, const auto &y, const auto &z) { return op(op(x, y), z); },
        [op](const auto &x, const auto &y, const auto &z) { return op(x, op(y, z)); });
}

// (x a y) b z = x c (y d z)
template <typename Key, typename A, typename B, typename C, typename D>
AxiomReport mixed(const std::string &name, int max_total, std::function<std::vector<Key>(int)> basis, A a, B b,
                  C c, D d)
{
    return check_triples<Key>(
        name, max_total, basis, [a, b](const auto &x, const auto &y, const auto &z) { return b(a(x, y), z); },
        [c, d](const auto &x, const auto &y, const auto &z) { return c(x, d(y, z)); });
}

inline std::vector<NDPF> ndpf_basis(int n)
{
    return enumerate_ndpf(n);
}

} // namespace detail

// (CQSym, <, >): both associativities and (x > y) < z = x > (y < z).
inline std::vector<AxiomReport> duplicial_axioms(int max_total)
{
    const std::function<std::vector<NDPF>(int)> basis = detail::ndpf_basis;
    return {
        detail::associativity<NDPF>("prec associative", max_total, basis, cqsym_prec),
        detail::associativity<NDPF>("succ associative", max_total, basis, cqsym_succ),
        detail::mixed<NDPF>("(x>y)<z = x>(y<z)", max_total, basis, cqsym_succ, cqsym_prec, cqsym_succ, cqsym_prec),
    };
}

// The relation (x < y) > z = x < (y > z) is not part of the structure;
// returns true when the generator witnesses its failure.
inline bool duplicial_cross_relation_fails()
{
    const auto x = cqsym_generator();
    return !(cqsym_succ(cqsym_prec(x, x), x) == cqsym_prec(x, cqsym_succ(x, x)));
}

// The same three relations for the normalized operations on PQSym.
inline std::vector<AxiomReport> pqsym_duplicial_axioms(int max_total)
{
    const std::function<std::vector<ParkingFunction>(int)> basis = enumerate_parking;
    return {
        detail::associativity<ParkingFunction>("prec associative", max_total, basis, pqsym_dup_prec),
        detail::associativity<ParkingFunction>("succ associative", max_total, basis, pqsym_dup_succ),
        detail::mixed<ParkingFunction>("(x>y)<z = x>(y<z)", max_total, basis, pqsym_dup_succ, pqsym_dup_prec,
                                       pqsym_dup_succ, pqsym_dup_prec),
    };
}

// (SQSym, <, >, o): three associativities and the four mixed relations.
inline std::vector<AxiomReport> triduplicial_axioms(int max_total)
{
    const std::function<std::vector<QuasiRibbon>(int)> basis = enumerate_quasi_ribbons;
    using detail::associativity;
    using detail::mixed;
    return {
        associativity<QuasiRibbon>("prec associative", max_total, basis, tridup_prec),
        associativity<QuasiRibbon>("mid associative", max_total, basis, tridup_mid),
        associativity<QuasiRibbon>("succ associative", max_total, basis, tridup_succ),
        mixed<QuasiRibbon>("(x>y)<z = x>(y<z)", max_total, basis, tridup_succ, tridup_prec, tridup_succ, tridup_prec),
        mixed<QuasiRibbon>("(xoy)<z = xo(y<z)", max_total, basis, tridup_mid, tridup_prec, tridup_mid, tridup_prec),
        mixed<QuasiRibbon>("(x>y)oz = x>(yoz)", max_total, basis, tridup_succ, tridup_mid, tridup_succ, tridup_mid),
        mixed<QuasiRibbon>("(xoy)>z = xo(y>z)", max_total, basis, tridup_mid, tridup_succ, tridup_mid, tridup_succ),
    };
}

// (FQSym, left, right) with product = left + right.
inline std::vector<AxiomReport> dendriform_axioms(int max_total)
{
    const std::function<std::vector<Permutation>(int)> basis = enumerate_permutations;
    using detail::mixed;
    return {
        mixed<Permutation>("(x<y)<z = x<(y*z)", max_total, basis, fqsym_left, fqsym_left, fqsym_left, fqsym_product),
        mixed<Permutation>("(x>y)<z = x>(y<z)", max_total, basis, fqsym_right, fqsym_left, fqsym_right, fqsym_left),
        mixed<Permutation>("(x*y)>z = x>(y>z)", max_total, basis, fqsym_product, fqsym_right, fqsym_right,
                           fqsym_right),
    };
}

// (WQSym, left, mid, right) with product = left + mid + right.
inline std::vector<AxiomReport> tridendriform_axioms(int max_total)
{
    const std::function<std::vector<PackedWord>(int)> basis = enumerate_packed;
    using detail::mixed;
    const auto L = wqsym_left, M = wqsym_mid, R = wqsym_right, P = wqsym_product;
    return {
        mixed<PackedWord>("(x<y)<z = x<(y*z)", max_total, basis, L, L, L, P),
        mixed<PackedWord>("(x>y)<z = x>(y<z)", max_total, basis, R, L, R, L),
        mixed<PackedWord>("(x*y)>z = x>(y>z)", max_total, basis, P, R, R, R),
        mixed<PackedWord>("(x>y).z = x>(y.z)", max_total, basis, R, M, R, M),
        mixed<PackedWord>("(x<y).z = x.(y>z)", max_total, basis, L, M, M, R),
        mixed<PackedWord>("(x.y)<z = x.(y<z)", max_total, basis, M, L, M, L),
        mixed<PackedWord>("(x.y).z = x.(y.z)", max_total, basis, M, M, M, M),
    };
}

namespace detail
{

// x * (right factor of a tensor), keeping the left factor.
template <typename Op>
CQSymTensor act_right(const CQSymTensor &t, const CQSymElem &y, Op op)
{
    CQSymTensor out;
    for (const auto &[k, c] : t) {
        for (const auto &[k2, c2] : op(CQSymElem(k.second), y)) {
            out.add_term({k.first, k2}, c * c2);
        }
    }
    return out;
}

template <typename Op>
CQSymTensor act_left(const CQSymElem &x, const CQSymTensor &t, Op op)
{
    CQSymTensor out;
    for (const auto &[k, c] : t) {
        for (const auto &[k1, c1] : op(x, CQSymElem(k.first))) {
            out.add_term({k1, k.second}, c * c1);
        }
    }
    return out;
}

template <typename Op>
AxiomReport bialgebra_for(const std::string &name, int max_total, Op op)
{
    AxiomReport report;
    report.name = name;
    for (int a = 1; a < max_total; ++a) {
        for (int b = 1; a + b <= max_total; ++b) {
            for (const auto &kx : enumerate_ndpf(a)) {
                for (const auto &ky : enumerate_ndpf(b)) {
                    const CQSymElem x(kx), y(ky);
                    const auto lhs = dup_coproduct(op(x, y));
                    const auto rhs = tensor(x, y) + act_right(dup_coproduct(x), y, op) + act_left(x, dup_coproduct(y), op);
                    ++report.checked;
                    if (!(lhs == rhs) && report.failures++ == 0) {
                        report.first_failure = to_string(kx) + ", " + to_string(ky);
                    }
                }
            }
        }
    }
    return report;
}

} // namespace detail

// delta(x * y) = x (x) y + x' (x) (x'' * y) + (x * y') (x) y'' for * in {<, >}.
inline std::vector<AxiomReport> dup_bialgebra_axioms(int max_total)
{
    return {detail::bialgebra_for("bialgebra for prec", max_total, cqsym_prec),
            detail::bialgebra_for("bialgebra for succ", max_total, cqsym_succ)};
}

inline AxiomReport dup_coassociativity(int max_degree)
{
    AxiomReport report;
    report.name = "coassociativity";
    using T3 = Tensor3<NDPF>;
    for (int n = 1; n <= max_degree; ++n) {
        for (const auto &pi : enumerate_ndpf(n)) {
            T3 left, right;
            for (const auto &[k, c] : dup_coproduct_key(pi)) {
                for (const auto &[k2, c2] : dup_coproduct_key(k.first)) {
                    left.add_term({k2.first, k2.second, k.second}, c * c2);
                }
                for (const auto &[k2, c2] : dup_coproduct_key(k.second)) {
                    right.add_term({k.first, k2.first, k2.second}, c * c2);
                }
            }
            ++report.checked;
            if (!(left == right) && report.failures++ == 0) {
                report.first_failure = to_string(pi);
            }
        }
    }
    return report;
}

// Products of SQSym basis pairs regroup exactly into the P basis.
inline AxiomReport sqsym_closure(int max_total)
{
    AxiomReport report;
    report.name = "SQSym product closure";
    for (int a = 1; a < max_total; ++a) {
        for (int b = 1; a + b <= max_total; ++b) {
            for (const auto &x : enumerate_quasi_ribbons(a)) {
                for (const auto &y : enumerate_quasi_ribbons(b)) {
                    ++report.checked;
                    try {
                        sqsym_product(sqsym_P(x), sqsym_P(y));
                    } catch (const NotInSubalgebra &) {
                        if (report.failures++ == 0) {
                            report.first_failure = to_string(x) + ", " + to_string(y);
                        }
                    }
                }
            }
        }
    }
    return report;
}

// Dimensions, in degrees 1..max_degree, of the span of all iterated thirds
// of the generator M_1.
inline std::vector<std::size_t> free_tridendriform_dimensions(int max_degree)
{
    std::vector<std::vector<WQSymElem>> basis(static_cast<std::size_t>(max_degree) + 1);
    std::vector<std::size_t> dims;
    if (max_degree >= 1) {
        basis[1].push_back(wqsym_generator());
        dims.push_back(1);
    }
    for (int n = 2; n <= max_degree; ++n) {
        ::parkhopf::detail::EchelonBasis<PackedWord, Rational> echelon;
        auto &out = basis[static_cast<std::size_t>(n)];
        for (int k = 1; k < n; ++k) {
            for (const auto &x : basis[static_cast<std::size_t>(k)]) {
                for (const auto &y : basis[static_cast<std::size_t>(n - k)]) {
                    const auto t = wqsym_thirds(x, y);
                    for (const auto *v : {&t.left, &t.mid, &t.right}) {
                        if (echelon.insert(::parkhopf::detail::to_row(*v))) {
                            out.push_back(*v);
                        }
                    }
                }
            }
        }
        dims.push_back(out.size());
    }
    return dims;
}

} // namespace parkhopf::hopf

#endif

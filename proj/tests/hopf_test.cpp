#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include <parkhopf/combinat/enumerate.hpp>
#include <parkhopf/combinat/text.hpp>
#include <parkhopf/hopf/axioms.hpp>
#include <parkhopf/hopf/cqsym.hpp>
#include <parkhopf/hopf/fqsym.hpp>
#include <parkhopf/hopf/morphisms.hpp>
#include <parkhopf/hopf/pqsym.hpp>
#include <parkhopf/hopf/sqsym.hpp>
#include <parkhopf/hopf/wqsym.hpp>

using namespace parkhopf;
using namespace parkhopf::hopf;

namespace
{

CQSymElem P(std::initializer_list<Letter> w)
{
    return cqsym_P(NDPF(w));
}

PQSymElem F(std::initializer_list<Letter> w)
{
    return pqsym_F(ParkingFunction(w));
}

SQSymElem Pq(const char *text)
{
    return sqsym_P(parse_quasi_ribbon(text));
}

FQSymElem G(std::initializer_list<Letter> w)
{
    return fqsym_G(Permutation(w));
}

WQSymElem M(std::initializer_list<Letter> w)
{
    return wqsym_M(PackedWord(w));
}

void expect_all_ok(const std::vector<AxiomReport> &reports)
{
    for (const auto &r : reports) {
        EXPECT_TRUE(r.ok()) << r.name << " failed " << r.failures << "/" << r.checked << " first at " << r.first_failure;
    }
}

std::size_t catalan(int n)
{
    std::size_t c = 1;
    for (int k = 0; k < n; ++k) {
        c = c * static_cast<std::size_t>(2 * (2 * k + 1)) / static_cast<std::size_t>(k + 2);
    }
    return c;
}

// G_a G_b by filtering all permutations of the right size.
FQSymElem fqsym_product_by_filter(const Permutation &a, const Permutation &b)
{
    FQSymElem out;
    const auto n = a.size();
    for (const auto &g : enumerate_permutations(static_cast<int>(n + b.size()))) {
        const Word u(g.letters().begin(), g.letters().begin() + static_cast<std::ptrdiff_t>(n));
        const Word v(g.letters().begin() + static_cast<std::ptrdiff_t>(n), g.letters().end());
        if (standardize(u) == a.letters() && standardize(v) == b.letters()) {
            out.add_term(g, 1);
        }
    }
    return out;
}

WQSymElem wqsym_product_by_filter(const PackedWord &a, const PackedWord &b)
{
    WQSymElem out;
    const auto n = a.size();
    for (const auto &w : enumerate_packed(static_cast<int>(n + b.size()))) {
        const Word u(w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(n));
        const Word v(w.letters().begin() + static_cast<std::ptrdiff_t>(n), w.letters().end());
        if (pack(u) == a.letters() && pack(v) == b.letters()) {
            out.add_term(w, 1);
        }
    }
    return out;
}

template <typename Key, typename Enum>
LinComb<Key> random_homogeneous(std::mt19937 &rng, int degree, Enum enumerate)
{
    const auto all = enumerate(degree);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    LinComb<Key> out;
    for (int k = 0; k < 3; ++k) {
        out.add_term(all[pick(rng)], Rational(coeff(rng)));
    }
    return out;
}

} // namespace

TEST(PQSym, Product)
{
    EXPECT_EQ(pqsym_product(F({1}), F({1})), F({1, 2}) + F({2, 1}));
    EXPECT_EQ(pqsym_product(F({1, 3, 1}), pqsym_F(ParkingFunction{})), F({1, 3, 1}));
    const auto lhs = pqsym_project_P(pqsym_product(cqsym_expand_F(P({1, 2})), cqsym_expand_F(P({1, 1, 3}))));
    EXPECT_EQ(lhs, P({1, 2, 3, 3, 5}));
}

TEST(PQSym, NormalizedPrec)
{
    EXPECT_EQ(pqsym_dup_prec(F({1}), F({1})), F({1, 1}));
    EXPECT_EQ(pqsym_dup_prec(F({1, 2}), F({1})), F({1, 2, 2}) + F({2, 1, 2}) * make_rational(1, 2));
    EXPECT_THROW(pqsym_dup_prec(pqsym_F(ParkingFunction{}), F({1})), std::invalid_argument);
    const auto x = F({1});
    EXPECT_EQ(pqsym_dup_prec(pqsym_dup_succ(x, x), x), pqsym_dup_succ(x, pqsym_dup_prec(x, x)));
}

TEST(PQSym, PrecRestrictsToCQSym)
{
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; a + b <= 5; ++b) {
            for (const auto &x : enumerate_ndpf(a)) {
                for (const auto &y : enumerate_ndpf(b)) {
                    const auto big = pqsym_dup_prec(cqsym_expand_F(cqsym_P(x)), cqsym_expand_F(cqsym_P(y)));
                    EXPECT_EQ(pqsym_project_P(big), cqsym_prec(cqsym_P(x), cqsym_P(y))) << to_string(x) << " " << to_string(y);
                }
            }
        }
    }
}

TEST(PQSym, DuplicialAxioms)
{
    expect_all_ok(pqsym_duplicial_axioms(6));
}

TEST(CQSym, PartialProducts)
{
    EXPECT_EQ(cqsym_prec(P({1, 2}), P({1, 1, 3})), P({1, 2, 2, 2, 4}));
    EXPECT_EQ(cqsym_succ(P({1, 2}), P({1, 1, 3})), P({1, 2, 3, 3, 5}));
    const auto x = cqsym_generator();
    EXPECT_EQ(cqsym_succ(cqsym_prec(x, x), x), P({1, 1, 3}));
    EXPECT_EQ(cqsym_prec(x, cqsym_succ(x, x)), P({1, 1, 2}));
    EXPECT_TRUE(duplicial_cross_relation_fails());
    EXPECT_THROW(cqsym_prec(cqsym_P(NDPF{}), x), std::invalid_argument);
}

TEST(CQSym, ExpandAndProject)
{
    EXPECT_EQ(cqsym_expand_F(P({1, 1})), F({1, 1}));
    EXPECT_EQ(cqsym_expand_F(P({1, 2})), F({1, 2}) + F({2, 1}));
    EXPECT_THROW(pqsym_project_P(F({1, 2})), NotInSubalgebra);
    for (int n = 1; n <= 5; ++n) {
        for (const auto &pi : enumerate_ndpf(n)) {
            const auto e = cqsym_expand_F(cqsym_P(pi));
            std::size_t expected = 0;
            for (const auto &a : enumerate_parking(n)) {
                expected += to_ndpf(a) == pi ? 1 : 0;
                EXPECT_EQ(e.coeff(a), Rational(to_ndpf(a) == pi ? 1 : 0));
            }
            EXPECT_EQ(e.size(), expected);
            EXPECT_EQ(pqsym_project_P(e * Rational(3)), cqsym_P(pi, 3));
        }
    }
}

TEST(CQSym, Coproduct)
{
    EXPECT_TRUE(dup_coproduct(cqsym_generator()).is_zero());
    EXPECT_TRUE(dup_coproduct(P({1, 1}) - P({1, 2})).is_zero());
    CQSymTensor expected;
    expected.add_term({NDPF{1}, NDPF{1, 2}}, 1);
    expected.add_term({NDPF{1, 1}, NDPF{1}}, 1);
    EXPECT_EQ(dup_coproduct(P({1, 1, 3})), expected);
    const auto c = dup_coassociativity(5);
    EXPECT_TRUE(c.ok()) << c.first_failure;
    expect_all_ok(dup_bialgebra_axioms(5));
}

TEST(CQSym, BracketAndPrimitives)
{
    const auto x = cqsym_generator();
    const auto xx = dup_bracket(x, x);
    EXPECT_EQ(xx, P({1, 1}) - P({1, 2}));
    const auto left = dup_bracket(xx, x), right = dup_bracket(x, xx);
    EXPECT_EQ(left, P({1, 1, 1}) - P({1, 2, 2}) - P({1, 1, 3}) + P({1, 2, 3}));
    EXPECT_EQ(right, P({1, 1, 1}) - P({1, 2, 2}) - P({1, 1, 2}) + P({1, 2, 3}));
    EXPECT_TRUE(dup_coproduct(left).is_zero());
    EXPECT_TRUE(dup_coproduct(right).is_zero());
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(primitive_dimension(n), catalan(n - 1)) << n;
    }
}

TEST(CQSym, DuplicialAxioms)
{
    expect_all_ok(duplicial_axioms(6));
}

TEST(SQSym, ExpandMatchesHypoplacticClasses)
{
    EXPECT_EQ(sqsym_expand_F(Pq("11|3")), F({1, 3, 1}) + F({3, 1, 1}));
    EXPECT_EQ(sqsym_expand_F(Pq("113")), F({1, 1, 3}));
    for (int n = 1; n <= 5; ++n) {
        PQSymElem total;
        for (const auto &q : enumerate_quasi_ribbons(n)) {
            const auto e = sqsym_expand_F_key(q);
            for (const auto &[a, c] : e) {
                EXPECT_EQ(hypoplactic_quasi_ribbon(a), q);
            }
            total += e;
        }
        // Every parking function lies in exactly one class.
        EXPECT_EQ(total.size(), enumerate_parking(n).size());
        for (const auto &[a, c] : total) {
            EXPECT_EQ(c, 1);
        }
    }
}

TEST(SQSym, ProductAndClosure)
{
    const auto x = sqsym_generator();
    EXPECT_EQ(sqsym_product(x, x), Pq("12") + Pq("1|2"));
    EXPECT_THROW(sqsym_project_P(F({1, 3, 1})), NotInSubalgebra);
    const auto r = sqsym_closure(5);
    EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(SQSym, TriduplicialOperations)
{
    const auto x = sqsym_generator();
    EXPECT_EQ(tridup_mid(x, x), Pq("1|2"));
    EXPECT_EQ(tridup_prec(x, x), Pq("11"));
    EXPECT_EQ(tridup_succ(x, x), Pq("12"));
    EXPECT_EQ(tridup_prec(Pq("1|2"), Pq("1|2")), Pq("1|22|3"));
    // Everything of degree <= 4 is reached from the generator.
    std::vector<std::set<QuasiRibbon>> reached(5);
    reached[1].insert(QuasiRibbon(NDPF{1}, {}));
    for (int n = 2; n <= 4; ++n) {
        for (int k = 1; k < n; ++k) {
            for (const auto &a : reached[static_cast<std::size_t>(k)]) {
                for (const auto &b : reached[static_cast<std::size_t>(n - k)]) {
                    for (const auto &e : {tridup_prec(sqsym_P(a), sqsym_P(b)), tridup_succ(sqsym_P(a), sqsym_P(b)),
                                          tridup_mid(sqsym_P(a), sqsym_P(b))}) {
                        reached[static_cast<std::size_t>(n)].insert(e.begin()->first);
                    }
                }
            }
        }
        EXPECT_EQ(reached[static_cast<std::size_t>(n)].size(), enumerate_quasi_ribbons(n).size()) << n;
    }
    expect_all_ok(triduplicial_axioms(6));
}

TEST(FQSym, ProductAndHalves)
{
    const auto x = fqsym_generator();
    EXPECT_EQ(fqsym_product(x, x), G({1, 2}) + G({2, 1}));
    EXPECT_EQ(fqsym_left(x, x), G({2, 1}));
    EXPECT_EQ(fqsym_right(x, x), G({1, 2}));
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; a + b <= 5; ++b) {
            for (const auto &s : enumerate_permutations(a)) {
                for (const auto &t : enumerate_permutations(b)) {
                    const auto prod = fqsym_product(fqsym_G(s), fqsym_G(t));
                    EXPECT_EQ(prod, fqsym_product_by_filter(s, t));
                    if (a > 0 && b > 0) {
                        EXPECT_EQ(fqsym_left(fqsym_G(s), fqsym_G(t)) + fqsym_right(fqsym_G(s), fqsym_G(t)), prod);
                    }
                }
            }
        }
    }
    expect_all_ok(dendriform_axioms(6));
}

TEST(FQSym, DualBasis)
{
    EXPECT_EQ(fqsym_F(Permutation{2, 3, 1}), G({3, 1, 2}));
    EXPECT_EQ(fqsym_scalar(G({1, 2}), G({1, 2})), 1);
    EXPECT_EQ(fqsym_scalar(G({2, 1, 3}), G({1, 3, 2})), 0);
    EXPECT_EQ(fqsym_scalar(G({2, 3, 1}), G({3, 1, 2})), 1);
}

TEST(WQSym, ProductAndThirds)
{
    const auto x = wqsym_generator();
    EXPECT_EQ(wqsym_product(x, x), M({1, 1}) + M({1, 2}) + M({2, 1}));
    EXPECT_EQ(wqsym_mid(x, x), M({1, 1}));
    EXPECT_EQ(wqsym_left(x, x), M({2, 1}));
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; a + b <= 4; ++b) {
            for (const auto &u : enumerate_packed(a)) {
                for (const auto &v : enumerate_packed(b)) {
                    EXPECT_EQ(wqsym_product(wqsym_M(u), wqsym_M(v)), wqsym_product_by_filter(u, v));
                }
            }
        }
    }
    expect_all_ok(tridendriform_axioms(5));
}

TEST(WQSym, FreeTridendriformSpan)
{
    EXPECT_EQ(free_tridendriform_dimensions(4), (std::vector<std::size_t>{1, 3, 11, 45}));
}

TEST(WQSym, Embedding)
{
    EXPECT_EQ(embed_fqsym_wqsym(G({1})), M({1}));
    EXPECT_EQ(embed_fqsym_wqsym(G({1, 2})), M({1, 2}) + M({1, 1}));
    for (int n = 0; n <= 5; ++n) {
        for (const auto &s : enumerate_permutations(n)) {
            WQSymElem expected;
            for (const auto &u : enumerate_packed(n)) {
                if (standardize(u.letters()) == s.letters()) {
                    expected.add_term(u, 1);
                }
            }
            EXPECT_EQ(embed_fqsym_wqsym(fqsym_G(s)), expected);
        }
    }
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> deg(1, 3);
        const auto a = random_homogeneous<Permutation>(rng, deg(rng), enumerate_permutations);
        const auto b = random_homogeneous<Permutation>(rng, deg(rng), enumerate_permutations);
        EXPECT_EQ(embed_fqsym_wqsym(fqsym_product(a, b)), wqsym_product(embed_fqsym_wqsym(a), embed_fqsym_wqsym(b)));
    }
}

TEST(Morphisms, Examples)
{
    EXPECT_EQ(morphism_istar(F({1, 3, 1})), fqsym_F(Permutation{1, 3, 2}));
    EXPECT_EQ(istar_on_cqsym(P({1, 1, 3})), sym::SymElem::S({2, 1}));
    EXPECT_EQ(istar_on_sqsym(Pq("11|3")), sym::SymElem::R({2, 1}));
    EXPECT_EQ(morphism_psi(F({1, 1})), sym::SymElem::S({2}, make_rational(1, 2)));
    EXPECT_EQ(morphism_psi(pqsym_product(F({1}), F({1}))), sym::SymElem::S({1, 1}));
    EXPECT_EQ(morphism_psi(pqsym_F(ParkingFunction{})), sym::SymElem::one());
}

TEST(Morphisms, AreAlgebraMaps)
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> deg(1, 3);
    for (int trial = 0; trial < 25; ++trial) {
        const auto a = random_homogeneous<ParkingFunction>(rng, deg(rng), enumerate_parking);
        const auto b = random_homogeneous<ParkingFunction>(rng, deg(rng), enumerate_parking);
        const auto ab = pqsym_product(a, b);
        EXPECT_EQ(morphism_istar(ab), fqsym_product(morphism_istar(a), morphism_istar(b)));
        EXPECT_EQ(morphism_psi(ab), morphism_psi(a) * morphism_psi(b));

        const auto c = random_homogeneous<NDPF>(rng, deg(rng), enumerate_ndpf);
        const auto d = random_homogeneous<NDPF>(rng, deg(rng), enumerate_ndpf);
        EXPECT_EQ(istar_on_cqsym(cqsym_product(c, d)), istar_on_cqsym(c) * istar_on_cqsym(d));

        const auto e = random_homogeneous<QuasiRibbon>(rng, deg(rng), enumerate_quasi_ribbons);
        const auto f = random_homogeneous<QuasiRibbon>(rng, deg(rng), enumerate_quasi_ribbons);
        EXPECT_EQ(istar_on_sqsym(sqsym_product(e, f)), istar_on_sqsym(e) * istar_on_sqsym(f));
    }
}

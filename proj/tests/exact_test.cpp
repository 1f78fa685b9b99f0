#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <parkhopf/exact/linalg.hpp>
#include <parkhopf/exact/lincomb.hpp>
#include <parkhopf/exact/poly.hpp>
#include <parkhopf/exact/ratfun.hpp>
#include <parkhopf/exact/series.hpp>

using namespace parkhopf;

namespace
{

const Poly q = poly_var(Var::q);
const Poly t = poly_var(Var::t);
const Poly x = poly_var(Var::x);

Poly random_poly(std::mt19937 &rng, bool bivariate = false)
{
    std::uniform_int_distribution<int> coeff(-4, 4), expo(0, 2), count(0, 4);
    Poly p;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        Exponents e{expo(rng), bivariate ? 0 : expo(rng), expo(rng), 0, 0};
        p += Poly::monomial(e, make_rational(coeff(rng), 1 + expo(rng)));
    }
    return p;
}

} // namespace

TEST(Rational, CanonicalForm)
{
    const auto r = make_rational(6, -4);
    EXPECT_EQ(r.get_num(), -3);
    EXPECT_EQ(r.get_den(), 2);
    EXPECT_EQ(to_string(r), "-3/2");
    EXPECT_EQ(parse_rational("10/4"), make_rational(5, 2));
    EXPECT_THROW(parse_rational("1/x"), std::invalid_argument);
    EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Rational, FactorialAndBinomial)
{
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(6), 720);
    EXPECT_EQ(binomial(6, 3), 20);
    EXPECT_EQ(factorial(25), Integer("15511210043330985984000000"));
}

TEST(Poly, CanonicalPrinting)
{
    const Poly p = (1 + 2 * q) * t * t + (3 + 3 * q) * t + (2 + q);
    EXPECT_EQ(p.to_string(), "2 + q + 3t + 3qt + t^2 + 2qt^2");
    EXPECT_EQ(Poly().to_string(), "0");
    EXPECT_EQ((q * make_rational(3, 2) - 1).to_string(), "-1 + (3/2)q");
    EXPECT_EQ(poly_var(Var::alpha, 2).to_string(), "α^2");
}

TEST(Poly, CoefficientAccess)
{
    const Poly p = 5 + 10 * t + 6 * t * t + t * t * t;
    EXPECT_EQ(p.degree_in(Var::t), 3);
    const std::vector<Rational> expected{5, 10, 6, 1};
    EXPECT_EQ(p.coefficient_list(Var::t), expected);
    EXPECT_EQ(p.substitute(Var::t, Poly(1)), Poly(22));
    EXPECT_THROW((p + q).coefficient_list(Var::t), std::invalid_argument);
}

TEST(Poly, ArithmeticProperties)
{
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ(a + b - b, a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(Poly, GcdAndExactDivision)
{
    const Poly a = (1 + x) * (q - t), b = (1 + x) * (q + t * t);
    EXPECT_EQ(gcd(a, b), 1 + x);
    EXPECT_EQ(exact_quotient(1 - x * x, 1 - x), 1 + x);
    EXPECT_FALSE(divide_exact(1 + x, 1 - x).has_value());
    EXPECT_EQ(gcd(Poly(6), Poly(4)), Poly(1));
}

TEST(RatFun, Normalization)
{
    EXPECT_EQ(RatFun(1 - x * x, 1 - x), RatFun(1 + x));
    EXPECT_EQ(RatFun(1 - q, 1 - q), RatFun(1));
    const RatFun r(2 * q, 4 * q * q + 2 * q);
    EXPECT_EQ(ratfun_normalize(r), r);
    EXPECT_EQ(r.den().leading_term().second, 1);
}

TEST(RatFun, AssertPolynomial)
{
    EXPECT_EQ(assert_polynomial(RatFun(1 - x * x * x, 1 - x)), 1 + x + x * x);
    try {
        assert_polynomial(RatFun(Poly(1), 1 - q));
        FAIL() << "expected NonPolynomial";
    } catch (const NonPolynomial &e) {
        EXPECT_EQ(e.denominator(), "-1 + q");
    }
}

TEST(RatFun, FieldOperationsAreConsistent)
{
    // Rational functions only ever carry q and x in practice.
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = random_poly(rng, true), b = random_poly(rng, true), c = random_poly(rng, true);
        if (b.is_zero() || c.is_zero()) {
            continue;
        }
        const RatFun u(a, b), v(c, b + c);
        if ((b + c).is_zero()) {
            continue;
        }
        EXPECT_EQ((u + v) - v, u);
        if (!v.is_zero()) {
            EXPECT_EQ((u * v) / v, u);
        }
    }
}

TEST(LinComb, BilinearExtension)
{
    using W = std::vector<int>;
    const auto cat = lincomb_bilinear_extend([](const W &a, const W &b) {
        W c = a;
        c.insert(c.end(), b.begin(), b.end());
        return LinComb<W>(c);
    });
    const LinComb<W> u(W{1}), v(W{2}), w(W{3});
    EXPECT_EQ(cat(u, w), LinComb<W>(W{1, 3}));
    EXPECT_EQ(cat(u + v, w), cat(u, w) + cat(v, w));
    EXPECT_EQ(cat(u * Rational(3), w), cat(u, w) * Rational(3));
}

TEST(LinComb, ZeroCoefficientsAreDropped)
{
    LinComb<int> a(1, 2);
    a.add_term(1, -2);
    EXPECT_TRUE(a.is_zero());
    EXPECT_EQ(a.size(), 0u);
}

TEST(Linalg, SpanAndKernel)
{
    using V = LinComb<int>;
    const V v = V(1, 1) + V(2, 3);
    EXPECT_EQ(span_dimension(std::vector<V>{v, v * Rational(2)}), 1u);
    EXPECT_EQ(span_dimension(std::vector<V>{v, V(1), V(2)}), 2u);
    const std::vector<int> basis{0, 1, 2, 3};
    EXPECT_EQ(kernel_dimension(
                  basis, [](int) { return V(); }, [](int) { return 1; }),
              4u);
    EXPECT_THROW(kernel_dimension(
                     basis, [](int k) { return V(k); }, [](int k) { return k; }),
                 std::invalid_argument);
}

TEST(Linalg, InvariantUnderScalingAndPermutation)
{
    using V = LinComb<int>;
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> c(-2, 2);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<V> vs;
        for (int i = 0; i < 5; ++i) {
            V v;
            for (int k = 0; k < 4; ++k) {
                v.add_term(k, Rational(c(rng)));
            }
            vs.push_back(v);
        }
        const auto d = span_dimension(vs);
        auto scaled = vs;
        for (auto &v : scaled) {
            v *= Rational(-3);
        }
        std::shuffle(scaled.begin(), scaled.end(), rng);
        EXPECT_EQ(span_dimension(scaled), d);
    }
}

TEST(Linalg, PolynomialCoefficients)
{
    using V = LinComb<int, Poly>;
    const V a = V(1, q) + V(2, Poly(1));
    const V b = V(1, q * q) + V(2, q);
    EXPECT_EQ(span_dimension(std::vector<V>{a, b}), 1u);
    EXPECT_EQ(span_dimension(std::vector<V>{a, V(1, t) + V(2, Poly(1))}), 2u);
}

TEST(Series, SqrtCatalan)
{
    // (1 - sqrt(1 - 4z)) / (2z)
    const auto s = series_sqrt_expand({Poly(1), Poly(-4)}, 6);
    std::vector<Rational> catalan;
    for (std::size_t n = 1; n <= 5; ++n) {
        catalan.push_back((-s[n] * make_rational(1, 2)).constant_term());
    }
    EXPECT_EQ(catalan, (std::vector<Rational>{1, 1, 2, 5, 14}));
}

TEST(Series, SquareRecoversInput)
{
    const std::vector<Poly> p{Poly(1), -2 * t - 4, t * t, Poly(0), q};
    const auto s = series_sqrt_expand(p, 8);
    const auto sq = series_mul(s, s, 8);
    for (std::size_t n = 0; n <= 8; ++n) {
        EXPECT_EQ(sq[n], n < p.size() ? p[n] : Poly(0)) << "order " << n;
    }
    EXPECT_THROW(series_sqrt_expand({Poly(2)}, 3), std::invalid_argument);
}

TEST(Series, SchroderSliceAtOrderThree)
{
    // (1 - tz - sqrt((1 - tz)^2 - 4z)) / (2z) at z^3
    const auto s = series_sqrt_expand({Poly(1), -2 * t - 4, t * t}, 4);
    const Poly c3 = -s[4] * make_rational(1, 2);
    EXPECT_EQ(c3, 5 + 10 * t + 6 * t * t + t * t * t);
}

#include <gtest/gtest.h>

#include "qplab/families.hpp"
#include "qplab/qengine.hpp"
#include "test_support.hpp"

using namespace qplab;

namespace {

// Reference expansion: a dense coefficient vector multiplied by each factor (1 - s q^e) in turn.
struct Dense {
    std::vector<BigInt> c;
    explicit Dense(std::size_t order) : c(order + 1) { c[0] = 1; }

    void times(int sign, std::size_t e) {
        if (e == 0) {
            for (auto& x : c) x *= 1 - sign;
            return;
        }
        for (std::size_t i = c.size(); i-- > e;) c[i] -= sign * c[i - e];
    }
    void over(int sign, std::size_t e) {
        // geometric series of sign*q^e
        for (std::size_t i = e; i < c.size(); ++i) c[i] += sign * c[i - e];
    }
    Series series() const { return Series(c); }
};

Parameter random_monomial(std::mt19937_64& g, std::size_t min_exp, std::size_t max_exp) {
    const std::size_t e = min_exp + g() % (max_exp - min_exp + 1);
    return (g() & 1) ? Parameter::q(e) : Parameter::minus_q(e);
}

}  // namespace

TEST(Parameter, Arithmetic) {
    EXPECT_EQ(Parameter::q(2) * Parameter::minus_q(3), Parameter::minus_q(5));
    EXPECT_EQ(Parameter::minus_q(5) / Parameter::minus_q(2), Parameter::q(3));
    EXPECT_TRUE((Parameter::zero() * Parameter::q(1)).is_zero());
    EXPECT_TRUE((Parameter::zero() / Parameter::q(1)).is_zero());
    EXPECT_THROW(Parameter::q(1) / Parameter::q(2), SeriesError);
    EXPECT_THROW(Parameter::q(1) / Parameter::zero(), SeriesError);
    EXPECT_NE(Parameter::zero(), Parameter::q(0));
    EXPECT_EQ(to_string(Parameter::minus_q(3)), "-q^3");
}

TEST(Poch, FiniteExamples) {
    EXPECT_EQ(to_string(poch_finite(Parameter::minus_q(2), 2, 1, 4)), "1,0,1,0,0");
    EXPECT_EQ(to_string(poch_finite(Parameter::q(1), 2, 2, 5)), "1,-1,0,-1,1,0");
    EXPECT_EQ(to_string(poch_finite(Parameter::q(3), 1, 0, 3)), "1,0,0,0");
    // (1;q)_n vanishes and (-1;q^2)_2 = 2(1+q^2)
    EXPECT_TRUE(poch_finite(Parameter::q(0), 1, 2, 5).is_zero());
    EXPECT_EQ(to_string(poch_finite(Parameter::minus_q(0), 2, 2, 4)), "2,0,2,0,0");
}

TEST(Poch, InfiniteExamples) {
    EXPECT_EQ(to_string(poch_infinite(Parameter::q(1), 1, 5)), "1,-1,-1,0,0,1");
    EXPECT_EQ(to_string(poch_infinite(Parameter::zero(), 1, 3)), "1,0,0,0");
    EXPECT_THROW(poch_infinite(Parameter::q(0), 1, 3), SeriesError);
    EXPECT_EQ(poch_infinite(Parameter::minus_q(1), 1, 40) * poch_infinite(Parameter::q(1), 2, 40), Series::one(40));
    const Series theta = poch_infinite(Parameter::q(2), 2, 9) * poch_infinite(Parameter::minus_q(1), 2, 9) *
                         poch_infinite(Parameter::minus_q(1), 2, 9);
    EXPECT_EQ(to_string(theta), "1,2,0,0,2,0,0,0,0,2");
}

TEST(Poch, InfiniteMatchesDirectProduct) {
    // (q;q)_inf through q^5 from the five factors (1-q)...(1-q^5)
    Dense d(5);
    for (std::size_t e = 1; e <= 5; ++e) d.times(1, e);
    EXPECT_EQ(poch_infinite(Parameter::q(1), 1, 5), d.series());
}

TEST(RationalSeries, Examples) {
    EXPECT_EQ(to_string(rational_series({0, 1}, {{1, 1, 2}}, 6)), "0,1,2,3,4,5,6");
    const Series b = rational_series({0, 1}, {{1, 1, 1}, {1, 3, 1}}, 7);
    for (std::size_t n = 0; n <= 7; ++n) EXPECT_EQ(b[n], (n + 2) / 3) << n;
    EXPECT_EQ(to_string(rational_series({0, 0, 1, 1}, {{1, 1, 1}, {1, 3, 2}}, 6)), "0,0,1,2,2,4,6");
    EXPECT_THROW(rational_series({1}, {{1, 0, 1}}, 4), SeriesError);
}

TEST(RationalSeries, MatchesSeriesCoreFromScratch) {
    // q^2(1+q)/((1-q)(1-q^3)^2) via invert and mul only
    const std::size_t n = 30;
    const Series den = Series::from_ints({1, -1}, n) * Series::from_ints({1, 0, 0, -1}, n) *
                       Series::from_ints({1, 0, 0, -1}, n);
    const Series expected = Series::from_ints({0, 0, 1, 1}, n) * invert(den);
    EXPECT_EQ(rational_series({0, 0, 1, 1}, {{1, 1, 1}, {1, 3, 2}}, n), expected);
}

TEST(Template, FamilyExamples) {
    const Series a_signed = sum_over_smallest(family_templates(Family::A).signed_gf, 8);
    EXPECT_EQ(to_string(a_signed), "0,1,2,3,4,5,6,7,8");
    EXPECT_EQ(a_signed, rational_series({0, 1}, {{1, 1, 2}}, 8));
    EXPECT_EQ(to_string(sum_over_smallest(family_templates(Family::Tomega).signed_gf, 5)), "0,1,2,3,4,6");
}

TEST(Template, OrderBelowFirstPrefixIsZero) {
    const auto& c = family_templates(Family::C).unsigned_gf;  // prefix starts at q^2
    EXPECT_TRUE(sum_over_smallest(c, 1).is_zero());
}

TEST(Template, ValidationRejectsNonIncreasingPrefix) {
    TermTemplate t;
    t.prefix = {0, 1};
    EXPECT_THROW(sum_over_smallest(t, 5), SeriesError);
    t.prefix = {1, 0};
    t.factors = {{.exponent = {1, 0}, .sign = 1, .base = 1, .length = PochLength::infinite(),
                  .position = FactorPosition::denominator}};
    EXPECT_THROW(sum_over_smallest(t, 5), SeriesError);
}

TEST(Template, AlternatingSign) {
    TermTemplate t;
    t.prefix = {1, 0};
    t.sign_rule = SignRule::alternating;
    EXPECT_EQ(to_string(sum_over_smallest(t, 4)), "1,-1,1,-1,1");
}

TEST(Phi21, OnlyConstantTermWhenOrderBelowArgument) {
    EXPECT_EQ(to_string(phi21(Parameter::q(1), Parameter::q(2), Parameter::q(3), 1, Parameter::q(3), 2)), "1,0,0");
}

TEST(Phi21, Errors) {
    EXPECT_THROW(phi21(Parameter::q(1), Parameter::q(1), Parameter::q(0), 1, Parameter::q(1), 5), SeriesError);
    EXPECT_THROW(phi21(Parameter::q(1), Parameter::q(1), Parameter::q(2), 1, Parameter::q(0), 5), SeriesError);
    EXPECT_THROW(phi21(Parameter::q(1), Parameter::q(1), Parameter::q(2), 1, Parameter::zero(), 5), SeriesError);
}

TEST(Phi21, GaussExampleFromTheAPrimeFamily) {
    const std::size_t n = 40;
    const Series lhs = phi21(Parameter::q(1), Parameter::q(1), Parameter::q(4), 2, Parameter::q(2), n);
    const Series rhs = poch_infinite(Parameter::q(3), 2, n) * poch_infinite(Parameter::q(3), 2, n) *
                       invert(poch_infinite(Parameter::q(4), 2, n) * poch_infinite(Parameter::q(2), 2, n));
    EXPECT_EQ(lhs, rhs);
}

TEST(Phi21, TermByTermOracle) {
    // Direct sum of (a;q)_n (b;q)_n / ((q;q)_n (c;q)_n) z^n using Dense products.
    const std::size_t order = 25;
    const Parameter a = Parameter::minus_q(1), b = Parameter::q(2), c = Parameter::minus_q(3), z = Parameter::q(1);
    std::vector<BigInt> acc(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        Dense d(order);
        for (std::size_t j = 0; j < n; ++j) {
            d.times(a.sign(), a.exponent() + j);
            d.times(b.sign(), b.exponent() + j);
            d.over(1, 1 + j);
            d.over(c.sign(), c.exponent() + j);
        }
        for (std::size_t i = 0; i + n <= order; ++i) acc[i + n] += d.c[i];
    }
    EXPECT_EQ(phi21(a, b, c, 1, z, order), Series(acc));
}

TEST(BasicProperty, FiniteSplit) {
    auto g = proptest::rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        const Parameter a = random_monomial(g, 1, 6);
        const std::size_t k = 1 + g() % 3;
        const std::size_t m = g() % 7;
        const std::size_t n = 20 + g() % 20;
        const Parameter shifted{a.sign(), a.exponent() + k * m};
        ASSERT_EQ(poch_infinite(a, k, n), poch_finite(a, k, m, n) * poch_infinite(shifted, k, n))
            << to_string(a) << " k=" << k << " m=" << m;
    }
}

TEST(BasicProperty, ParitySplit) {
    auto g = proptest::rng(12);
    for (int trial = 0; trial < 150; ++trial) {
        const Parameter a = random_monomial(g, 1, 6);
        const std::size_t n = 20 + g() % 20;
        const Parameter aq{a.sign(), a.exponent() + 1};
        ASSERT_EQ(poch_infinite(a, 1, n), poch_infinite(a, 2, n) * poch_infinite(aq, 2, n)) << to_string(a);
    }
}

TEST(BasicProperty, EulerAtRandomBases) {
    auto g = proptest::rng(13);
    for (int trial = 0; trial < 120; ++trial) {
        // Euler at q -> q^k: (-q^k;q^k)_inf (q^k;q^{2k})_inf = 1
        const std::size_t k = 1 + g() % 5;
        const std::size_t n = 10 + g() % 60;
        ASSERT_EQ(poch_infinite(Parameter::minus_q(k), k, n) * poch_infinite(Parameter::q(k), 2 * k, n),
                  Series::one(n));
    }
}

TEST(BasicProperty, QGaussAtRandomMonomials) {
    auto g = proptest::rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t k = 1 + g() % 3;
        const Parameter a = random_monomial(g, 1, 3);
        const Parameter b = random_monomial(g, 1, 3);
        const Parameter c{(g() & 1) ? 1 : -1, a.exponent() + b.exponent() + 1 + g() % 3};
        const std::size_t n = 30;
        const Series lhs = phi21(a, b, c, k, c / (a * b), n);
        const Series rhs = poch_infinite(c / a, k, n) * poch_infinite(c / b, k, n) *
                           invert(poch_infinite(c, k, n) * poch_infinite(c / (a * b), k, n));
        ASSERT_EQ(lhs, rhs) << to_string(a) << "," << to_string(b) << "," << to_string(c) << " k=" << k;
    }
}

TEST(BasicProperty, HeineAtRandomMonomials) {
    auto g = proptest::rng(15);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t k = 1 + g() % 3;
        const Parameter a = (g() % 4 == 0) ? Parameter::zero() : random_monomial(g, 1, 3);
        const Parameter b = random_monomial(g, 1, 3);
        const Parameter c = (g() % 4 == 0) ? Parameter::zero() : Parameter{(g() & 1) ? 1 : -1, b.exponent() + g() % 3};
        const Parameter z = random_monomial(g, 1, 3);
        const std::size_t n = 30;
        Series rhs = poch_infinite(b, k, n) * poch_infinite(a * z, k, n) *
                     invert(poch_infinite(c, k, n) * poch_infinite(z, k, n)) * phi21(c / b, z, a * z, k, b, n);
        ASSERT_EQ(phi21(a, b, c, k, z, n), rhs)
            << to_string(a) << "," << to_string(b) << "," << to_string(c) << "," << to_string(z) << " k=" << k;
    }
}

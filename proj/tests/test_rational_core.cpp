#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace fanout;
using oracle::frac;

namespace {

PrimePowerModulus q2(std::int64_t k) { return PrimePowerModulus::power_of_two(k); }

}  // namespace

TEST(Rational, NormalizesSignAndGcd) {
    Rational r(BigInt(6), BigInt(-8));
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 4);
    EXPECT_EQ(r.to_string(), "-3/4");
    EXPECT_EQ(Rational(BigInt(10), BigInt(5)).to_string(), "2");
    EXPECT_THROW(Rational(BigInt(1), BigInt(0)), Error);
}

TEST(Rational, ParseRoundTrip) {
    for (const char* s : {"0", "7", "-7", "3/4", "-12/5", "123456789012345678901234567891/2"})
        EXPECT_EQ(Rational::parse(s).to_string(), s);
    EXPECT_EQ(Rational::parse("6/4").to_string(), "3/2");
    EXPECT_THROW(Rational::parse("1/0"), Error);
    EXPECT_THROW(Rational::parse("x"), Error);
    EXPECT_THROW(Rational::parse(""), Error);
}

TEST(Rational, FieldAxiomsOnRandomValues) {
    oracle::Random rng(1);
    for (int i = 0; i < 2000; ++i) {
        Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a / b) * b, a);
        EXPECT_EQ(a - a, Rational(0));
        EXPECT_EQ(gcd(a.numerator(), a.denominator()), 1);
        EXPECT_GT(a.denominator(), 0);
    }
}

TEST(Rational, FloorAndOrdering) {
    EXPECT_EQ(frac(7, 2).floor(), 3);
    EXPECT_EQ(frac(-7, 2).floor(), -4);
    EXPECT_LT(frac(1, 3), frac(1, 2));
    EXPECT_EQ(mod_rational(frac(9, 4), Rational(2)), frac(1, 4));
    EXPECT_EQ(mod_rational(frac(-1, 4), Rational(2)), frac(7, 4));
}

TEST(PAdic, ValuationExamples) {
    EXPECT_EQ(p_adic_valuation(Rational(12), 2), PAdicValuation::finite(2));
    EXPECT_EQ(p_adic_valuation(frac(3, 8), 2), PAdicValuation::finite(-3));
    EXPECT_TRUE(p_adic_valuation(Rational(0), 2).infinite);
    EXPECT_EQ(p_adic_valuation(frac(50, 3), 5), PAdicValuation::finite(2));
    EXPECT_EQ(p_adic_norm(Rational(0), 2), Rational(0));
    EXPECT_EQ(p_adic_norm(frac(3, 8), 2), Rational(8));
}

TEST(PAdic, RejectsNonPrimes) {
    try {
        (void)p_adic_valuation(Rational(12), 4);
        FAIL() << "expected InvalidPrime";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidPrime);
    }
    EXPECT_THROW(PrimePowerModulus(BigInt(9), 2), Error);
    EXPECT_THROW(PrimePowerModulus::from_power_of_two(BigInt(12)), Error);
    EXPECT_EQ(PrimePowerModulus::from_power_of_two(BigInt(16)).exponent(), 4);
}

TEST(PAdic, ValuationIsMultiplicative) {
    oracle::Random rng(2);
    for (int i = 0; i < 2000; ++i) {
        Rational x = rng.rational(), y = rng.rational();
        EXPECT_EQ(two_adic_valuation(x * y).value, two_adic_valuation(x).value + two_adic_valuation(y).value);
        EXPECT_EQ(p_adic_valuation(x * y, 3).value, p_adic_valuation(x, 3).value + p_adic_valuation(y, 3).value);
    }
}

TEST(Scong, Examples) {
    EXPECT_TRUE(scong(frac(1, 3), Rational(3), q2(2)));
    EXPECT_TRUE(scong(frac(5, 7), frac(5, 7), q2(5)));
    EXPECT_TRUE(scong(frac(3, 5), Rational(7), q2(3)));
    EXPECT_TRUE(oracle::scong_definitional(frac(3, 5), Rational(7), 3));
    EXPECT_FALSE(scong(frac(3, 5), Rational(3), q2(3)));
    EXPECT_TRUE(scong(Rational(10), Rational(2), PrimePowerModulus(BigInt(2), 3)));
}

TEST(Scong, ResidueExamples) {
    EXPECT_EQ(residue(frac(1, 3), q2(2)), 3);
    EXPECT_EQ(residue(Rational(1), q2(4)), 1);
    EXPECT_EQ(residue(frac(5, 7), q2(3)), 3);
    EXPECT_TRUE(scong(frac(5, 7), Rational(3), q2(3)));
    try {
        (void)residue(frac(1, 2), q2(3));
        FAIL() << "expected NotAUnit";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotAUnit);
    }
}

TEST(Scong, ResidueMatchesDefinitionalSearch) {
    oracle::Random rng(3);
    for (int i = 0; i < 1000; ++i) {
        Rational x = rng.odd_unit();
        for (std::int64_t k : {1, 2, 3, 4, 5}) EXPECT_EQ(residue2(x, k), oracle::residue_definitional(x, k)) << x;
    }
}

TEST(Scong, FastMatchesDefinitional) {
    oracle::Random rng(4);
    for (int i = 0; i < 3000; ++i) {
        Rational x = rng.rational(), y = rng.coin() ? rng.rational() : x + Rational(8 * rng.range(-5, 5));
        for (std::int64_t k : {-2, 0, 1, 3, 4})
            EXPECT_EQ(scong(x, y, q2(k)), oracle::scong_definitional(x, y, k)) << x << " " << y << " k=" << k;
    }
}

TEST(SquareFree, Examples) {
    auto d = squarefree_decompose(Rational(12));
    EXPECT_EQ(d.t, Rational(2));
    EXPECT_EQ(d.n, 3);
    d = squarefree_decompose(Rational(99));
    EXPECT_EQ(d.t, Rational(3));
    EXPECT_EQ(d.n, 11);
    d = squarefree_decompose(Rational(1));
    EXPECT_EQ(d.t, Rational(1));
    EXPECT_EQ(d.n, 1);
    d = squarefree_decompose(frac(8, 75));
    EXPECT_EQ(d.t, frac(2, 15));
    EXPECT_EQ(d.n, 6);
}

TEST(SquareFree, Errors) {
    try {
        (void)squarefree_decompose(Rational(0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroInput);
    }
    // 1000003 * 1000033 has no factor below 1000.
    try {
        (void)squarefree_decompose(Rational(BigInt(1000003) * BigInt(1000033)), 1000);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::FactorizationTooHard);
    }
}

TEST(SquareFree, ReconstructsAndPreservesOddness) {
    oracle::Random rng(5);
    for (int i = 0; i < 2000; ++i) {
        Rational x = rng.rational(1000);
        auto d = squarefree_decompose(x);
        EXPECT_EQ(d.reconstruct(), x.abs());
        EXPECT_EQ(d.t.sign(), x.sign());
        EXPECT_TRUE(is_squarefree(d.n));
        EXPECT_EQ(is_odd_unit(x), is_odd_unit(d.t) && d.n % 2 == 1);
    }
}

#include <gtest/gtest.h>

#include <random>

#include "gwp/error.hpp"
#include "gwp/rational.hpp"
#include "gwp/scalar.hpp"

using namespace gwp;

TEST(Rational, NormalizesSign) {
  Rational r(3, -6);
  EXPECT_EQ(r.str(), "-1/2");
  EXPECT_EQ(Rational(0, -5).str(), "0");
  EXPECT_THROW(Rational(1, 0), DomainError);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("3/4"), Rational(3, 4));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::parse("0.125"), Rational(1, 8));
  EXPECT_EQ(Rational::parse("2.5e-3"), Rational(1, 400));
  EXPECT_EQ(Rational::parse("12e2"), Rational(1200));
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("abc"), ParseError);
  EXPECT_THROW(Rational::parse("1/"), ParseError);
}

TEST(Rational, PromotesOnOverflow) {
  Rational big(std::int64_t{1} << 62);
  Rational sq = big * big;
  EXPECT_FALSE(sq.is_small());
  EXPECT_EQ(sq.str(), "21267647932558653966460912964485513216");
  // and demotes again when it fits
  Rational back = sq / big;
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, big);
}

TEST(Rational, FieldAxiomsOnRandomValues) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::int64_t> d(-1'000'000'007, 1'000'000'007);
  for (int i = 0; i < 500; ++i) {
    Rational a(d(rng), std::max<std::int64_t>(1, std::abs(d(rng))));
    Rational b(d(rng), std::max<std::int64_t>(1, std::abs(d(rng))));
    Rational c(d(rng), std::max<std::int64_t>(1, std::abs(d(rng))));
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
  }
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
}

TEST(Scalar, ExactArithmetic) {
  Scalar a(Rational(1, 2));
  Scalar b(Rational(1, 3), Rational(1));
  EXPECT_TRUE((a * b).is_exact());
  EXPECT_EQ((a * b).exact_real(), Rational(1, 6));
  EXPECT_EQ((a * b).exact_imag(), Rational(1, 2));
  EXPECT_EQ(b * b.conj(), Scalar(Rational(10, 9)));
  EXPECT_EQ(a.str(), "1/2");
}

TEST(Scalar, MixingPromotesToNumeric) {
  Scalar s = Scalar(2) * Scalar::numeric(0.5);
  EXPECT_FALSE(s.is_exact());
  EXPECT_DOUBLE_EQ(s.real(), 1.0);
}

TEST(Scalar, ComplexDivision) {
  Scalar i(Rational(0), Rational(1));
  EXPECT_EQ(Scalar(1) / i, -i);
}

#include <gtest/gtest.h>

#include <random>

#include "flowers/exact.hpp"

using namespace flowers;

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(Rational::parse("6/8"), Rational(3, 4));
  EXPECT_EQ(Rational::parse("-2"), Rational(-2));
  EXPECT_EQ(Rational::parse("0.15"), Rational(3, 20));
  EXPECT_EQ(Rational::parse("-1.5"), Rational(-3, 2));
  EXPECT_THROW(Rational::parse("1/0"), ValidationError);
  EXPECT_THROW(Rational::parse("abc"), ValidationError);
  EXPECT_THROW(Rational::parse(""), ValidationError);
}

TEST(Rational, FloorAndFracMatchIntegerDivision) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 97);
  for (int i = 0; i < 2000; ++i) {
    const long p = num(rng);
    const long q = den(rng);
    const Rational r(p, q);
    long f = p / q;
    if (p % q != 0 && p < 0) --f;
    EXPECT_EQ(r.floor(), Integer(f)) << p << "/" << q;
    EXPECT_EQ(r.frac(), Rational(p - f * q, q));
    EXPECT_GE(r.frac(), Rational(0));
    EXPECT_LT(r.frac(), Rational(1));
  }
}

TEST(Rational, StringRoundTrip) {
  for (const char* s : {"0", "1", "-7/3", "12/31"}) EXPECT_EQ(Rational::parse(s).str(), s);
}

TEST(CirclePoint, NormalizesModOne) {
  EXPECT_EQ(CirclePoint(Rational(7, 4)), CirclePoint(3, 4));
  EXPECT_EQ(CirclePoint(Rational(-1, 4)), CirclePoint(3, 4));
  EXPECT_EQ(CirclePoint(Rational(1)), CirclePoint());
}

TEST(CirclePoint, ExpandDoubling) {
  EXPECT_EQ(expand(CirclePoint(3, 4), 2), CirclePoint(1, 2));
  EXPECT_EQ(expand(CirclePoint(1, 3), 2), CirclePoint(2, 3));
  EXPECT_EQ(expand(CirclePoint(2, 7), 3), CirclePoint(6, 7));
  EXPECT_THROW(expand(CirclePoint(1, 3), 1), ValidationError);
}

TEST(CirclePoint, ForwardDistanceAndAntipode) {
  EXPECT_EQ(forward_distance(CirclePoint(3, 4), CirclePoint(1, 4)), Rational(1, 2));
  EXPECT_EQ(forward_distance(CirclePoint(1, 4), CirclePoint(3, 4)), Rational(1, 2));
  EXPECT_EQ(forward_distance(CirclePoint(9, 10), CirclePoint(1, 10)), Rational(1, 5));
  EXPECT_EQ(forward_distance(CirclePoint(1, 5), CirclePoint(1, 5)), Rational(0));
  EXPECT_EQ(antipode(CirclePoint(3, 4)), CirclePoint(1, 4));
}

TEST(CirclePoint, ForwardDistancesAroundTheCircleSumToOne) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(0, 199);
  for (int i = 0; i < 500; ++i) {
    const CirclePoint a(num(rng), 200);
    const CirclePoint b(num(rng), 200);
    const Rational s = forward_distance(a, b) + forward_distance(b, a);
    EXPECT_TRUE(s == Rational(1) || (a == b && s.is_zero()));
  }
}

TEST(CircularSort, FlagsDuplicates) {
  std::vector<LabeledPoint<int>> pts{{CirclePoint(1, 2), 0}, {CirclePoint(1, 4), 1}, {CirclePoint(2, 4), 2}};
  const auto sorted = circular_sort(pts);
  ASSERT_EQ(sorted.entries.size(), 3u);
  EXPECT_EQ(sorted.entries[0].label, 1);
  ASSERT_EQ(sorted.duplicates.size(), 1u);
  EXPECT_EQ(sorted.duplicates[0], 2u);
}

TEST(Rational, HashAgreesWithEquality) {
  std::hash<Rational> h;
  EXPECT_EQ(h(Rational(2, 4)), h(Rational(1, 2)));
  EXPECT_EQ(h(Rational::parse("0.5")), h(Rational(1, 2)));
}

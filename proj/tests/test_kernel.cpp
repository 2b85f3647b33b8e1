#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "oracle.hpp"
#include "squeeze/enclosure.hpp"
#include "squeeze/errors.hpp"
#include "squeeze/rational.hpp"

using namespace squeeze;

TEST(RationalParse, ExactDecimals) {
  EXPECT_EQ(rational_from_decimal("0.5"), Rational(1, 2));
  EXPECT_EQ(rational_from_decimal("0.25"), Rational(1, 4));
  EXPECT_EQ(rational_from_decimal("0.615626"), Rational(307813, 500000));
  EXPECT_EQ(rational_from_decimal("7/90"), Rational(7, 90));
  EXPECT_EQ(rational_from_decimal("-14/180"), Rational(-7, 90));
  EXPECT_EQ(rational_from_decimal("+3"), Rational(3));
  EXPECT_EQ(rational_from_decimal(".5"), Rational(1, 2));
  EXPECT_EQ(rational_from_decimal("2."), Rational(2));
  EXPECT_EQ(rational_from_decimal("1e-7"), Rational(1, 10000000));
  EXPECT_EQ(rational_from_decimal("1.5E2"), Rational(150));
}

TEST(RationalParse, CanonicalForm) {
  const Rational r = rational_from_decimal("6/4");
  EXPECT_EQ(r.get_num(), 3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(to_fraction_string(rational_from_decimal("1")), "1/1");
}

TEST(RationalParse, Errors) {
  EXPECT_THROW(rational_from_decimal("3/0"), ParseError);
  for (const char* bad : {"", "-", "abc", "1.2.3", "1/2/3", "1/-2", "0x10", "1e", ".", "1 "}) {
    EXPECT_THROW(rational_from_decimal(bad), ParseError) << bad;
  }
}

TEST(RationalFormat, DirectedDecimals) {
  EXPECT_EQ(to_decimal(Rational(1, 3), 10, Rounding::Down), "0.3333333333");
  EXPECT_EQ(to_decimal(Rational(1, 3), 10, Rounding::Up), "0.3333333334");
  EXPECT_EQ(to_decimal(Rational(-1, 3), 4, Rounding::Down), "-0.3334");
  EXPECT_EQ(to_decimal(Rational(-1, 3), 4, Rounding::Up), "-0.3333");
  EXPECT_EQ(to_decimal(Rational(1, 2), 10, Rounding::Up), "0.5");
  EXPECT_EQ(to_decimal(Rational(99999, 1000), 3, Rounding::Up), "100");
  EXPECT_EQ(to_decimal(Rational(1, 100000000), 3, Rounding::Down), "1e-8");
  EXPECT_EQ(to_decimal(Rational(0), 5, Rounding::Down), "0");
}

TEST(RationalFormat, DecimalRoundTripProperty) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1'000'000'000, 1'000'000'000);
  std::uniform_int_distribution<int> exp10(0, 12);
  for (int i = 0; i < 500; ++i) {
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(exp10(rng)));
    const Rational value = ratio(Integer(num(rng)), den);
    // 25 significant digits exceed the information in the literal.
    const std::string down = to_decimal(value, 25, Rounding::Down);
    const std::string up = to_decimal(value, 25, Rounding::Up);
    EXPECT_EQ(down, up);
    EXPECT_EQ(rational_from_decimal(down), value) << down;
  }
}

TEST(EncCombine, Examples) {
  const Enclosure half(Rational(1, 2)), third(Rational(1, 3));
  EXPECT_EQ(enc_combine(EncOp::Add, half, third), Enclosure(Rational(5, 6)));
  EXPECT_EQ(enc_combine(EncOp::Mul, Enclosure(-1, 2), Enclosure(3, 4)), Enclosure(-4, 8));
  EXPECT_EQ(enc_combine(EncOp::Neg, Enclosure(Rational(1, 4), Rational(1, 2)), Enclosure()),
            Enclosure(Rational(-1, 2), Rational(-1, 4)));
  EXPECT_EQ(enc_combine(EncOp::Sub, Enclosure(1, 2), Enclosure(0, 1)), Enclosure(0, 2));
}

TEST(Enclosure, RejectsInvertedBounds) { EXPECT_THROW(Enclosure(2, 1), DomainError); }

TEST(Enclosure, Sign) {
  EXPECT_EQ(Enclosure(Rational(1, 10), 1).sign(), Sign::Positive);
  EXPECT_EQ(Enclosure(-1, Rational(-1, 10)).sign(), Sign::Negative);
  EXPECT_EQ(Enclosure(0, 1).sign(), Sign::Indeterminate);
  EXPECT_EQ(Enclosure(-1, 0).sign(), Sign::Indeterminate);
}

TEST(RoundOutward, Examples) {
  const Enclosure third(Rational(1, 3));
  const Enclosure r4 = round_outward(third, 4);
  EXPECT_TRUE(r4.contains(third));
  EXPECT_EQ(Rational(r4.lo() * 16).get_den(), 1);
  EXPECT_EQ(Rational(r4.hi() * 16).get_den(), 1);

  EXPECT_EQ(round_outward(Enclosure(0, 1), 1), Enclosure(0, 1));

  const Enclosure a(Rational(307813, 500000));
  const Enclosure r20 = round_outward(a, 20);
  EXPECT_TRUE(r20.contains(a));
  EXPECT_LE(r20.width(), pow2(-19));
}

TEST(RoundOutward, WidthBoundProperty) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> n(-100000, 100000);
  std::uniform_int_distribution<long> d(1, 99991);
  std::uniform_int_distribution<unsigned> budget(1, 80);
  for (int i = 0; i < 300; ++i) {
    Rational a = ratio(Integer(n(rng)), Integer(d(rng)));
    Rational b = ratio(Integer(n(rng)), Integer(d(rng)));
    if (a > b) std::swap(a, b);
    const Enclosure u(a, b);
    const unsigned bits = budget(rng);
    const Enclosure v = round_outward(u, bits);
    EXPECT_TRUE(v.contains(u));
    EXPECT_LE(v.width(), u.width() + pow2(1 - static_cast<long>(bits)));
    EXPECT_LE(v.lo().get_den(), pow2(bits).get_num());
    EXPECT_LE(v.hi().get_den(), pow2(bits).get_num());
  }
}

// Random expression trees over points; the point result must stay inside
// the enclosure result after arbitrary add/sub/mul/neg/round steps.
TEST(EncCombine, ContainmentUnderComposition) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 17);
  std::uniform_int_distribution<int> pick(0, 4);
  std::uniform_int_distribution<long> spread(0, 5);

  struct Pair {
    Rational point;
    Enclosure enc;
  };
  std::function<Pair(int)> build = [&](int depth) -> Pair {
    if (depth == 0) {
      const Rational p = ratio(Integer(num(rng)), Integer(den(rng)));
      const Rational lo = p - Rational(spread(rng), 7);
      const Rational hi = p + Rational(spread(rng), 11);
      return {p, Enclosure(lo, hi)};
    }
    const int op = pick(rng);
    Pair a = build(depth - 1);
    if (op == 3) return {-a.point, enc_combine(EncOp::Neg, a.enc, a.enc)};
    if (op == 4) return {a.point, round_outward(a.enc, 6)};
    Pair b = build(depth - 1);
    switch (op) {
      case 0:
        return {a.point + b.point, enc_combine(EncOp::Add, a.enc, b.enc)};
      case 1:
        return {a.point - b.point, enc_combine(EncOp::Sub, a.enc, b.enc)};
      default:
        return {a.point * b.point, enc_combine(EncOp::Mul, a.enc, b.enc)};
    }
  };
  for (int i = 0; i < 200; ++i) {
    const Pair result = build(4);
    ASSERT_TRUE(result.enc.contains(result.point));
  }
}

TEST(PiHalf, ContainsMachinReference) {
  const Enclosure& half_pi = pi_half_bounds();
  // floor(pi 10^60) may be off by one from fixed-point truncation.
  const mpz_class p = oracle::machin_pi_scaled(60);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, 60);
  const Rational pi_lo = ratio(p - 1, scale), pi_hi = ratio(p + 2, scale);
  EXPECT_LT(half_pi.lo(), pi_lo / 2);
  EXPECT_GT(half_pi.hi(), pi_hi / 2);
  EXPECT_LE(half_pi.width(), rational_from_decimal("1e-30"));
  EXPECT_LT(rational_from_decimal("1.570796326794896619"), half_pi.lo());
  EXPECT_GT(rational_from_decimal("1.57079632679489662"), half_pi.hi());
  EXPECT_LT(half_pi.hi(), rational_from_decimal("1.5707964"));
  EXPECT_LT(half_pi.lo(), Rational(11, 7));
}

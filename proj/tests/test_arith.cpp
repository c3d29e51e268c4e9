#include <gtest/gtest.h>

#include "mvdelta/mv_ops.hpp"
#include "oracles.hpp"

using namespace mvdelta;

namespace {

Q01 q(const char* s) { return Q01::parse(s); }

std::vector<Q01> grid(long den) {
  std::vector<Q01> out;
  for (long k = 0; k <= den; ++k) out.emplace_back(k, den);
  return out;
}

}  // namespace

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(Rat::parse("2/4").to_string(), "1/2");
  EXPECT_EQ(Rat::parse("-3/6").to_string(), "-1/2");
  EXPECT_EQ(Rat::parse("7").to_string(), "7");
  EXPECT_EQ(Rat::parse("0/5").to_string(), "0");
  EXPECT_THROW(Rat::parse("1/0"), DomainError);
  EXPECT_THROW(Rat::parse("1.5"), DomainError);
  EXPECT_THROW(Rat::parse(""), DomainError);
  EXPECT_THROW(Rat::parse(" 1"), DomainError);
}

TEST(Rational, UnitIntervalRejectsOutside) {
  EXPECT_THROW(Q01(Rat(2)), DomainError);
  EXPECT_THROW(Q01(Rat(-1)), DomainError);
  EXPECT_THROW(Q01::parse("3/2"), DomainError);
  EXPECT_EQ(Q01::parse("1").to_string(), "1");
}

TEST(Rational, FloorCeilPowers) {
  EXPECT_EQ(Rat::parse("-1/2").floor(), -1);
  EXPECT_EQ(Rat::parse("-1/2").ceil(), 0);
  EXPECT_EQ(Rat::parse("7/2").floor(), 3);
  EXPECT_EQ(pow2_inv(3), Rat::parse("1/8"));
  EXPECT_EQ(pow2(10), Rat(1024));
}

TEST(Rational, SimplestBetween) {
  EXPECT_EQ(simplest_between(Rat(0), true, Rat(1), true), Rat::parse("1/2"));
  EXPECT_EQ(simplest_between(Rat(0), false, Rat(1), false), Rat(0));
  EXPECT_EQ(simplest_between(Rat::parse("1/3"), true, Rat::parse("1/2"), true), Rat::parse("2/5"));
  EXPECT_EQ(simplest_between(Rat::parse("3/7"), false, Rat::parse("3/7"), false), Rat::parse("3/7"));
  for (long d = 1; d <= 12; ++d) {
    for (long a = 0; a < d; ++a) {
      const Rat lo{mpz_class(a), mpz_class(d)};
      const Rat hi{mpz_class(a + 1), mpz_class(d)};
      const Rat s = simplest_between(lo, true, hi, true);
      EXPECT_GT(s, lo);
      EXPECT_LT(s, hi);
      for (long den = 1; den < s.den().get_si(); ++den)
        for (long num = 0; num <= den; ++num) {
          const Rat c{mpz_class(num), mpz_class(den)};
          EXPECT_FALSE(c > lo && c < hi) << c << " is simpler than " << s;
        }
    }
  }
}

TEST(MvOps, HandValues) {
  EXPECT_EQ(oplus(q("1/3"), q("1/4")), q("7/12"));
  EXPECT_EQ(oplus(q("1/2"), q("3/4")), q("1"));
  EXPECT_EQ(neg(q("2/5")), q("3/5"));
  EXPECT_EQ(neg(q("0")), q("1"));
  EXPECT_EQ(odot(q("1/2"), q("3/4")), q("1/4"));
  EXPECT_EQ(dist(q("1/3"), q("3/4")), q("5/12"));
  EXPECT_EQ(nfold(3, q("1/4")), q("3/4"));
  EXPECT_EQ(nfold(5, q("1/4")), q("1"));
  EXPECT_EQ(scale(q("1/2"), q("2/3")), q("1/3"));
  EXPECT_THROW(nfold(0, q("1/4")), std::invalid_argument);
  EXPECT_THROW(scale(Rat(2), q("1/4")), DomainError);
}

TEST(MvOps, AgreeWithClosedFormsOnGrid) {
  const auto g = grid(12);
  for (const auto& x : g) {
    EXPECT_EQ(neg(neg(x)), x);
    EXPECT_EQ(oplus(x, Q01::zero()), x);
    EXPECT_EQ(join(x, x), x);
    EXPECT_EQ(meet(x, Q01::one()), x);
    EXPECT_EQ(nfold(1, x), x);
    for (const auto& y : g) {
      const Rat a = x.value();
      const Rat b = y.value();
      EXPECT_EQ(oplus(x, y).value(), oracle::oplus(a, b));
      EXPECT_EQ(odot(x, y).value(), max(a + b - Rat(1), Rat(0)));
      EXPECT_EQ(ominus(x, y).value(), max(a - b, Rat(0)));
      EXPECT_EQ(dist(x, y).value(), (a - b).abs());
      EXPECT_EQ(join(x, y).value(), max(a, b));
      EXPECT_EQ(meet(x, y).value(), min(a, b));
      EXPECT_EQ(scale(x, y).value(), a * b);
    }
  }
}

TEST(MvOps, DerivedOpNames) {
  for (auto op : {DerivedOp::kOdot, DerivedOp::kOminus, DerivedOp::kDist, DerivedOp::kJoin, DerivedOp::kMeet})
    EXPECT_EQ(parse_derived_op(to_string(op)), op);
  EXPECT_THROW(parse_derived_op("xor"), std::invalid_argument);
  EXPECT_EQ(derived(DerivedOp::kJoin, q("1/3"), q("1/2")), q("1/2"));
}

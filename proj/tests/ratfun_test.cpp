#include "support/fixtures.hpp"

#include <asq2/oracle.hpp>

#include <gtest/gtest.h>

namespace asq2 {
namespace {

using test::gf2;
using test::gf4;
using test::P;
using test::R;

RatFun random_ratfun(const FqField& f, CounterRng& rng, int bound) {
  return RatFun(detail::random_poly(f, rng, bound), detail::random_nonzero_poly(f, rng, bound));
}

void expect_canonical(const RatFun& r) {
  EXPECT_TRUE(r.den().is_monic());
  if (r.is_zero()) {
    EXPECT_TRUE(r.den().is_one());
  } else {
    EXPECT_TRUE(gcd(r.num(), r.den()).is_one());
  }
}

TEST(RatFun, Examples) {
  EXPECT_TRUE((R("1/T") + R("1/T")).is_zero());
  EXPECT_TRUE((R("T/(T+1)") * R("(T+1)/T")).is_one());
  EXPECT_EQ(R("(T^2+1)/(T+1)"), R("T + 1"));
  EXPECT_EQ(RatFun(P("T^2 + 1"), P("T + 1")), R("T + 1"));
  EXPECT_THROW(R("T") / RatFun::zero(gf2()), DivisionByZero);
  EXPECT_THROW(RatFun::zero(gf2()).inverse(), DivisionByZero);
  EXPECT_THROW(RatFun(P("1"), Poly(gf2())), DivisionByZero);
}

TEST(RatFun, SquareRootExamples) {
  EXPECT_EQ(R("T^2").sqrt(), R("T"));
  EXPECT_FALSE(R("T").sqrt().has_value());
  EXPECT_EQ(R("(T^2+1)/T^4").sqrt(), R("(T+1)/T^2"));
  EXPECT_FALSE(R("1/T").sqrt().has_value());
  EXPECT_EQ(R("g*T^2", gf4()).sqrt(), R("(g+1)*T", gf4()));
}

TEST(RatFun, MonicDenominatorOverGf4) {
  const RatFun r(P("T", gf4()), P("g*T + g", gf4()));
  EXPECT_TRUE(r.den().is_monic());
  EXPECT_EQ(r, R("(g+1)*T/(T+1)", gf4()));
}

TEST(RatFun, CanonicalFormIdempotence) {
  CounterRng rng(5);
  for (const FqField* f : {&gf2(), &gf4()}) {
    for (int i = 0; i < 300; ++i) {
      const RatFun r = random_ratfun(*f, rng, 3);
      const Poly w = detail::random_nonzero_poly(*f, rng, 3);
      const RatFun s(r.num() * w, r.den() * w);
      EXPECT_EQ(s.num(), r.num());
      EXPECT_EQ(s.den(), r.den());
      expect_canonical(r);
    }
  }
}

TEST(RatFun, FieldAxiomsAndCanonicalResults) {
  CounterRng rng(6);
  for (const FqField* f : {&gf2(), &gf4()}) {
    for (int i = 0; i < 300; ++i) {
      const RatFun a = random_ratfun(*f, rng, 3), b = random_ratfun(*f, rng, 3), c = random_ratfun(*f, rng, 2);
      for (const RatFun& r : {a + b, a * b, a * b + c, a.square()}) expect_canonical(r);
      EXPECT_EQ((a + b) * c, a * c + b * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_TRUE((a + a).is_zero());
      EXPECT_EQ(a.square(), a * a);
      if (!b.is_zero()) {
        expect_canonical(a / b);
        EXPECT_EQ(a / b * b, a);
      }
    }
  }
}

TEST(RatFun, SquareRootProperty) {
  CounterRng rng(7);
  for (const FqField* f : {&gf2(), &gf4()}) {
    for (int i = 0; i < 300; ++i) {
      const RatFun a = random_ratfun(*f, rng, 6);
      EXPECT_EQ(a.square().sqrt(), a);
      // Absent exactly when num or den is not a square.
      const RatFun b = random_ratfun(*f, rng, 4);
      EXPECT_EQ(b.sqrt().has_value(), b.num().sqrt().has_value() && b.den().sqrt().has_value());
      if (auto s = b.sqrt()) { EXPECT_EQ(s->square(), b); }
    }
  }
}

TEST(RatFun, PowerMatchesRepeatedProduct) {
  const RatFun a = R("(T+1)/T^2");
  RatFun acc = RatFun::one(gf2());
  for (unsigned e = 0; e < 7; ++e) {
    EXPECT_EQ(pow(a, e), acc);
    acc *= a;
  }
}

}  // namespace
}  // namespace asq2

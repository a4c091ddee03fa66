#include "support/fixtures.hpp"
#include "support/naive.hpp"

#include <asq2/factor.hpp>
#include <asq2/oracle.hpp>

#include <gtest/gtest.h>

namespace asq2 {
namespace {

using test::gf2;
using test::gf4;
using test::P;

Poly random_poly(const FqField& f, CounterRng& rng, unsigned max_degree) {
  std::vector<Poly::Coeff> c(rng.below(max_degree + 1) + 1);
  for (auto& x : c) x = static_cast<Poly::Coeff>(rng.below(f.order()));
  return Poly(f, std::move(c));
}

TEST(Poly, ZeroHasNoDegree) {
  const Poly z(gf2());
  EXPECT_TRUE(z.is_zero());
  EXPECT_FALSE(z.degree().has_value());
  EXPECT_THROW(z.deg(), ZeroPolynomial);
  EXPECT_EQ(P("T^3 + 1").degree(), 3u);
  EXPECT_EQ(P("1").degree(), 0u);
}

TEST(Poly, Examples) {
  EXPECT_EQ(P("T + 1").square(), P("T^2 + 1"));
  EXPECT_EQ(P("(T+1)*(T+1)"), P("T^2 + 1"));
  EXPECT_EQ(gcd(P("T^2 + T"), P("T^2 + 1")), P("T + 1"));
  auto [q, r] = divmod(P("T^2 + 1"), P("T + 1"));
  EXPECT_EQ(q, P("T + 1"));
  EXPECT_TRUE(r.is_zero());
  EXPECT_THROW(divmod(P("T"), Poly(gf2())), DivisionByZero);
}

TEST(Poly, DivmodProperty) {
  CounterRng rng(1);
  for (const FqField* f : {&gf2(), &gf4()}) {
    for (int i = 0; i < 300; ++i) {
      const Poly a = random_poly(*f, rng, 10);
      Poly b = random_poly(*f, rng, 5);
      if (b.is_zero()) continue;
      auto [q, r] = divmod(a, b);
      EXPECT_EQ(q * b + r, a);
      if (!r.is_zero()) { EXPECT_LT(*r.degree(), *b.degree()); }
      const Poly g = gcd(a, b);
      EXPECT_TRUE(g.is_monic());
      EXPECT_TRUE((a % g).is_zero());
      EXPECT_TRUE((b % g).is_zero());
    }
  }
}

TEST(Poly, SquareRoot) {
  CounterRng rng(2);
  for (const FqField* f : {&gf2(), &gf4()}) {
    for (int i = 0; i < 200; ++i) {
      const Poly a = random_poly(*f, rng, 6);
      const auto s = a.square().sqrt();
      ASSERT_TRUE(s.has_value());
      EXPECT_EQ(*s, a);
    }
  }
  EXPECT_FALSE(P("T").sqrt().has_value());
  EXPECT_FALSE(P("T^2 + T").sqrt().has_value());
}

TEST(Poly, OrderingIsDegreeThenCoefficients) {
  EXPECT_LT(P("T + 1"), P("T^2"));
  EXPECT_LT(P("T"), P("T + 1"));
  EXPECT_LT(Poly(gf2()), P("1"));
}

TEST(Squarefree, Examples) {
  using PP = std::vector<PolyPower>;
  EXPECT_EQ(squarefree(P("T^2 + 1")), (PP{{P("T + 1"), 2}}));
  EXPECT_EQ(squarefree(P("T^3 + T^2")), (PP{{P("T + 1"), 1}, {P("T"), 2}}));
  EXPECT_EQ(squarefree(P("T^4 + T^2 + 1")), (PP{{P("T^2 + T + 1"), 2}}));
  EXPECT_TRUE(squarefree(P("1")).empty());
  EXPECT_THROW(squarefree(Poly(gf2())), ZeroPolynomial);
}

TEST(Factor, Examples) {
  const auto irr = factor(P("T^2 + T + 1"));
  ASSERT_EQ(irr.factors.size(), 1u);
  EXPECT_EQ(irr.factors[0], (PolyPower{P("T^2 + T + 1"), 1}));

  const auto f = factor(P("T^4 + T"));
  EXPECT_EQ(f.factors, (std::vector<PolyPower>{{P("T"), 1}, {P("T + 1"), 1}, {P("T^2 + T + 1"), 1}}));

  EXPECT_EQ(factor(P("T^2 + 1")).factors, (std::vector<PolyPower>{{P("T + 1"), 2}}));

  const auto g = factor(P("g*T^2 + g", gf4()));
  EXPECT_EQ(g.unit, 2);
  EXPECT_EQ(g.factors, (std::vector<PolyPower>{{P("T + 1", gf4()), 2}}));
}

// Round trip and agreement with trial division, degree <= 12.
TEST(Factor, MatchesTrialDivision) {
  CounterRng rng(3);
  for (const FqField* f : {&gf2(), &gf4()}) {
    const unsigned max_deg = f == &gf2() ? 12 : 8;
    for (int i = 0; i < 150; ++i) {
      const Poly p = random_poly(*f, rng, max_deg);
      if (p.is_zero()) continue;
      const Factorization fac = factor(p);
      EXPECT_EQ(fac.expand(*f), p) << to_string(p);
      std::vector<std::pair<Poly, unsigned>> got;
      for (const auto& [b, e] : fac.factors) {
        EXPECT_TRUE(test::naive::irreducible(b)) << to_string(b);
        got.emplace_back(b, e);
      }
      EXPECT_EQ(got, test::naive::factor(p)) << to_string(p);
    }
  }
}

TEST(Factor, RepeatedHighMultiplicity) {
  const Poly p = pow(P("T^2 + T + 1"), 5) * pow(P("T"), 3) * P("T^3 + T + 1");
  const auto fac = factor(p);
  EXPECT_EQ(fac.factors,
            (std::vector<PolyPower>{{P("T"), 3}, {P("T^2 + T + 1"), 5}, {P("T^3 + T + 1"), 1}}));
}

TEST(MonicDivisors, Examples) {
  EXPECT_EQ(monic_divisors(P("T^3 + T^2")).size(), 6u);
  EXPECT_EQ(monic_divisors(P("1")), std::vector<Poly>{P("1")});
  EXPECT_EQ(monic_divisors(P("T^2 + T + 1")), (std::vector<Poly>{P("1"), P("T^2 + T + 1")}));
  EXPECT_EQ(monic_divisors(P("T^2 + T")), (std::vector<Poly>{P("1"), P("T"), P("T + 1"), P("T^2 + T")}));
}

TEST(MonicDivisors, AllDivideAndAreComplete) {
  CounterRng rng(4);
  for (int i = 0; i < 60; ++i) {
    const Poly p = random_poly(gf4(), rng, 5);
    if (p.is_zero()) continue;
    const auto divs = monic_divisors(p);
    EXPECT_TRUE(std::is_sorted(divs.begin(), divs.end()));
    std::size_t brute = 0;
    for (unsigned n = 0; n <= *p.degree(); ++n) {
      for (const auto& q : test::naive::monic_of_degree(gf4(), n)) {
        if ((p % q).is_zero()) ++brute;
      }
    }
    EXPECT_EQ(divs.size(), brute);
    for (const auto& d : divs) EXPECT_TRUE((p % d).is_zero());
  }
}

TEST(MonicDivisors, BudgetEnforced) {
  // 2^4 = 16 divisors.
  const Poly p = P("T*(T+1)*(T^2+T+1)*(T^3+T+1)");
  EXPECT_EQ(monic_divisors(p, 16).size(), 16u);
  try {
    monic_divisors(p, 15);
    FAIL() << "expected DivisorBudgetExceeded";
  } catch (const DivisorBudgetExceeded& e) {
    EXPECT_EQ(e.needed(), 16u);
  }
}

}  // namespace
}  // namespace asq2

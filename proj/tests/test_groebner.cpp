#include <gtest/gtest.h>

#include <cstdlib>

#include "idealiser/errors.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

std::vector<std::string> strs(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.str());
  return out;
}

}  // namespace

TEST(Groebner, SpecExamples) {
  auto lex = plane_lex();
  Ideal a = ideal_of(lex, {"y-x^2", "x^3"});
  // x^3 = x * x^2 ≡ x*y, then y*x^2 ≡ y^2.
  EXPECT_EQ(strs(a.groebner()), (std::vector<std::string>{"y^2", "x*y", "x^2-y"}));
  EXPECT_TRUE(oracle::buchberger_criterion(a.groebner(), a.generators()));

  auto r = plane();
  EXPECT_EQ(strs(ideal_of(r, {"1"}).groebner()), std::vector<std::string>{"1"});
  EXPECT_EQ(strs(ideal_of(r, {"x", "y"}).groebner()), (std::vector<std::string>{"y", "x"}));
  EXPECT_TRUE(Ideal::zero(r).groebner().empty());
}

TEST(Groebner, NormalForm) {
  auto r = plane();
  EXPECT_EQ(normal_form(P("x^2+y", r), ideal_of(r, {"x"})), P("y", r));
  EXPECT_TRUE(normal_form(P("x^2-7*y^2-1", r), ideal_of(r, {"x^2-7*y^2-1"})).is_zero());
  EXPECT_EQ(normal_form(P("1", r), ideal_of(r, {"x", "y"})), P("1", r));
}

TEST(Groebner, SumProductIntersect) {
  auto r = plane();
  EXPECT_TRUE(ideal_equal(ideal_product(ideal_of(r, {"x"}), ideal_of(r, {"y"})), ideal_of(r, {"x*y"})));
  EXPECT_TRUE(ideal_equal(ideal_sum(ideal_of(r, {"x"}), ideal_of(r, {"y"})), ideal_of(r, {"x", "y"})));
  Ideal m = ideal_of(r, {"x", "y"});
  EXPECT_TRUE(ideal_equal(ideal_product(m, m), ideal_of(r, {"x^2", "x*y", "y^2"})));
  EXPECT_TRUE(ideal_equal(ideal_intersect(ideal_of(r, {"x"}), ideal_of(r, {"y"})), ideal_of(r, {"x*y"})));
  Ideal pell = ideal_of(r, {"x^2-7*y^2-1"});
  EXPECT_TRUE(ideal_equal(ideal_intersect(pell, pell), pell));
  EXPECT_TRUE(ideal_equal(ideal_intersect(ideal_of(r, {"x"}), m), ideal_of(r, {"x"})));
  // Monomial ideals: intersection generated by pairwise lcms.
  EXPECT_TRUE(ideal_equal(ideal_intersect(ideal_of(r, {"x^2", "y^3"}), ideal_of(r, {"x*y"})),
                          ideal_of(r, {"x^2*y", "x*y^3"})));
  EXPECT_THROW(ideal_sum(ideal_of(r, {"x"}), ideal_of(PolyRing({"x", "z"}), {"z"})), RingMismatchError);
}

TEST(Groebner, Quotients) {
  auto r = plane();
  EXPECT_TRUE(ideal_equal(ideal_quotient(ideal_of(r, {"x^2", "x*y"}), ideal_of(r, {"x"})), ideal_of(r, {"x", "y"})));
  Ideal j = ideal_of(r, {"x^2-y", "y^3"});
  EXPECT_TRUE(ideal_equal(ideal_quotient(j, Ideal::unit(r)), j));
  EXPECT_TRUE(ideal_equal(ideal_quotient(ideal_of(r, {"x", "y"}), ideal_of(r, {"x+1", "y"})), ideal_of(r, {"x", "y"})));
  EXPECT_THROW(quotient_by_poly(j, Poly(r)), DomainError);
}

TEST(Groebner, QuotientLawsFuzz) {
  Random rng(21);
  auto r = plane();
  for (int k = 0; k < 15; ++k) {
    Ideal j(r, {rng.poly(r, 3, 3, 4), rng.poly(r, 3, 2, 4)});
    Ideal i(r, {rng.poly(r, 2, 2, 3)});
    if (j.is_unit() || i.is_zero()) continue;
    Ideal q = ideal_quotient(j, i);
    EXPECT_TRUE(ideal_contains(q, j));
    EXPECT_TRUE(ideal_contains(j, ideal_product(q, i)));
    Ideal meet = ideal_intersect(j, i);
    EXPECT_TRUE(ideal_contains(meet, ideal_product(j, i)));
    EXPECT_TRUE(ideal_contains(j, meet) && ideal_contains(i, meet));
  }
}

TEST(Groebner, EqualContains) {
  auto r = plane();
  EXPECT_TRUE(ideal_equal(ideal_of(r, {"x", "y"}), ideal_of(r, {"y", "x"})));
  EXPECT_TRUE(ideal_contains(ideal_of(r, {"x"}), ideal_of(r, {"x^2"})));
  EXPECT_FALSE(ideal_equal(ideal_of(r, {"x+1", "y-3"}), ideal_of(r, {"x", "y"})));
}

TEST(Groebner, DimensionProbe) {
  auto r = plane();
  auto pt = quotient_dimension_probe(ideal_of(r, {"x", "y"}), 4);
  EXPECT_TRUE(pt.zero_dimensional);
  EXPECT_EQ(pt.total, 1u);
  auto fat = quotient_dimension_probe(ideal_of(r, {"x^2", "x*y", "y^2"}), 4);
  EXPECT_EQ(fat.total, 3u);
  auto line = quotient_dimension_probe(ideal_of(r, {"x"}), 4);
  EXPECT_FALSE(line.zero_dimensional);
  EXPECT_EQ(line.cumulative, (std::vector<std::size_t>{1, 2, 3, 4, 5}));
  EXPECT_EQ(rational_point(ideal_of(r, {"x-1/2", "y+3"})), (std::optional<Point>{Point{Rational(Integer(1), Integer(2)), Rational(-3)}}));
  EXPECT_FALSE(rational_point(ideal_of(r, {"x^2-2", "y"})).has_value());
}

TEST(Groebner, ReducedBasisUniqueness) {
  Random rng(22);
  PolyRing r({"x", "y", "z"});
  for (int k = 0; k < 20; ++k) {
    Poly a = rng.poly(r, 3, 2, 4), b = rng.poly(r, 3, 2, 4), c = rng.poly(r, 2, 1, 3);
    Ideal one(r, {a, b});
    Ideal two(r, {a + b * c, b, a * c});
    EXPECT_EQ(one.groebner(), two.groebner());
  }
}

TEST(Groebner, OracleCriterionRandom) {
  Random rng(23);
  for (int k = 0; k < 40; ++k) {
    PolyRing r(std::vector<std::string>{"x", "y", "z"}, k % 2 ? MonomialOrder::lex(3) : MonomialOrder::grevlex(3));
    std::vector<Poly> gens{rng.poly(r, 3, 3, 5), rng.poly(r, 3, 2, 5), rng.poly(r, 2, 2, 5)};
    Ideal i(r, gens);
    const auto& gb = i.groebner();
    EXPECT_TRUE(oracle::buchberger_criterion(gb, i.generators()));
    for (const auto& g : gb) EXPECT_TRUE(g.leading_coeff().is_one());
  }
}

TEST(Groebner, PairLimitSurfacesAsResourceError) {
  PolyRing r({"x", "y", "z"});
  std::vector<Poly> gens{P("x^3-y*z^2+1", r), P("y^3-x*z+2", r), P("z^3-x*y^2-3", r)};
  EXPECT_THROW(groebner_basis(gens, r, GroebnerOptions{3}), ResourceLimitError);
  setenv("IDEALISER_PAIR_LIMIT", "2", 1);
  EXPECT_EQ(default_pair_limit(), 2u);
  EXPECT_THROW(Ideal(r, gens).groebner(), ResourceLimitError);
  unsetenv("IDEALISER_PAIR_LIMIT");
  EXPECT_EQ(default_pair_limit(), 100000u);
  EXPECT_NO_THROW(Ideal(r, gens).groebner());
}

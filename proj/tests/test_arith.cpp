#include <gtest/gtest.h>

#include "idealiser/errors.hpp"
#include "support.hpp"

using namespace testing_support;

TEST(Rational, CanonicalForm) {
  Rational a(Integer(6), Integer(-4));
  EXPECT_EQ(a.str(), "-3/2");
  EXPECT_EQ(a.denominator(), 2);
  EXPECT_EQ(Rational(Integer(0), Integer(-7)).str(), "0");
  EXPECT_EQ(Rational(Integer(0), Integer(-7)).denominator(), 1);
  EXPECT_EQ(Rational::parse("10/4").str(), "5/2");
  EXPECT_EQ(Rational::parse("-3").str(), "-3");
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational(1) / Rational(0), DomainError);
}

TEST(Rational, FieldAxiomsFuzz) {
  Random rng(11);
  for (int k = 0; k < 500; ++k) {
    Rational a = rng.rational(1000, 50), b = rng.rational(1000, 50), c = rng.rational(1000, 50);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) { EXPECT_TRUE((a * a.inverse()).is_one()); }
    // Canonical: equal values print identically and gcd(num, den) = 1.
    Rational scaled(a.numerator() * 7, a.denominator() * 7);
    EXPECT_EQ(scaled.str(), a.str());
    EXPECT_EQ(gcd(a.numerator(), a.denominator()), 1);
    EXPECT_GT(a.denominator(), 0);
  }
}

TEST(Parser, SpecExamples) {
  auto r = plane();
  Poly pell = P("x^2 - 7*y^2 - 1", r);
  EXPECT_EQ(pell.str(), "x^2-7*y^2-1");
  EXPECT_EQ(pell.size(), 3u);
  EXPECT_TRUE(P("0", r).is_zero());
  EXPECT_EQ(P("(x+1)*(x-1)", r), P("x^2-1", r));
  EXPECT_EQ(P("-x^2", r).str(), "-x^2");
  EXPECT_EQ(P("2^3*x", r), P("8*x", r));
  EXPECT_EQ(P("3/6*x - -y", r).str(), "1/2*x+y");
  EXPECT_EQ(P("  ( x ) ^ 2 ", r), P("x*x", r));
}

TEST(Parser, ErrorsCarryPositions) {
  auto r = plane();
  try {
    parse_poly("x + z", r);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_poly("x^y", r), ParseError);
  EXPECT_THROW(parse_poly("x^-1", r), ParseError);
  EXPECT_THROW(parse_poly("x^(2)", r), ParseError);
  EXPECT_THROW(parse_poly("(x+y", r), ParseError);
  EXPECT_THROW(parse_poly("x y", r), ParseError);
  EXPECT_THROW(parse_poly("", r), ParseError);
  EXPECT_THROW(parse_poly("x/0", r), ParseError);
}

TEST(Parser, RoundTripFuzz) {
  Random rng(12);
  PolyRing r({"x", "y", "z"});
  for (int k = 0; k < 300; ++k) {
    Poly f = rng.poly(r, 6, 5, 20, 5);
    Poly g = parse_poly(f.str(), r);
    EXPECT_EQ(f, g) << f.str();
    EXPECT_EQ(g.str(), f.str());
  }
}

TEST(Poly, SpecOps) {
  auto r = plane();
  EXPECT_EQ(poly_op(P("x+y", r), P("x-y", r), PolyOp::mul), P("x^2-y^2", r));
  Poly f = P("3*x^2*y - y + 2", r);
  EXPECT_EQ(poly_op(f, Poly(r), PolyOp::add), f);
  EXPECT_TRUE(poly_scale(f, Rational(0)).is_zero());
  EXPECT_EQ(Poly(r).degree(), kNegInfDegree);
  EXPECT_THROW(poly_op(f, P("x", PolyRing({"x", "z"})), PolyOp::add), RingMismatchError);
}

TEST(Poly, RingAxiomsFuzz) {
  Random rng(13);
  PolyRing r({"x", "y", "z"});
  for (int k = 0; k < 150; ++k) {
    Poly a = rng.poly(r, 4, 3, 9, 3), b = rng.poly(r, 4, 3, 9, 3), c = rng.poly(r, 4, 3);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero() && !b.is_zero()) { EXPECT_EQ((a * b).degree(), a.degree() + b.degree()); }
  }
}

TEST(Derivative, SpecExamples) {
  auto r = plane();
  std::vector<Rational> v10{1, 0}, v32{3, 2};
  EXPECT_EQ(directional_derivative(P("x^2-7*y^2-1", r), v10), P("2*x", r));
  EXPECT_TRUE(directional_derivative(P("5", r), v32).is_zero());
  EXPECT_TRUE(directional_derivative(P("2*x-3*y-1", r), v32).is_zero());
  std::vector<Rational> bad{1};
  EXPECT_THROW(directional_derivative(P("x", r), bad), DimensionError);
}

TEST(Derivative, LinearAndLeibnizFuzz) {
  Random rng(14);
  PolyRing r({"x", "y", "z"});
  for (int k = 0; k < 100; ++k) {
    Poly f = rng.poly(r, 4, 4), g = rng.poly(r, 4, 4);
    Point v = rng.point(3), w = rng.point(3);
    Rational s = rng.rational(5, 3);
    Point vw(3);
    for (int i = 0; i < 3; ++i) vw[i] = v[i] + s * w[i];
    EXPECT_EQ(directional_derivative(f, vw), directional_derivative(f, v) + directional_derivative(f, w).scaled(s));
    EXPECT_EQ(directional_derivative(f * g, v), f * directional_derivative(g, v) + g * directional_derivative(f, v));
  }
}

TEST(Poly, TranslateAndHomogenize) {
  auto r = plane();
  std::vector<Rational> shift{1, -2};
  EXPECT_EQ(translate(P("x*y", r), shift), P("(x+1)*(y-2)", r));
  PolyRing h({"x", "y", "z"});
  EXPECT_EQ(homogenize(P("y^2-x^3-x-1", r), h), P("y^2*z-x^3-x*z^2-z^3", h));
  EXPECT_EQ(divide_exact(P("x^2-1", r), P("x+1", r)), P("x-1", r));
  EXPECT_THROW(divide_exact(P("x^2+1", r), P("x+1", r)), DomainError);
}

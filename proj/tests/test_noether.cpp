#include <gtest/gtest.h>

#include "idealiser/errors.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

struct Case {
  std::string name;
  Ideal ideal;
  TranslationAction act;
  Answer right, left;
};

std::vector<Case> golden_table() {
  auto r = plane();
  auto std2 = TranslationAction::standard(r);
  PolyRing line1({"x"});
  IdealFlags prime{.prime = true}, maximal{.prime = true, .maximal = true};
  return {
      {"pell", ideal_of(r, {"x^2-7*y^2-1"}, prime), std2, Answer::no, Answer::no},
      {"graph", ideal_of(r, {"x-7*y^2-1"}, prime), std2, Answer::no, Answer::no},
      {"cubic", ideal_of(r, {"y^2-x^3-x-1"}, prime), std2, Answer::yes, Answer::yes},
      {"line", ideal_of(r, {"2*x-3*y-1"}, prime), std2, Answer::yes, Answer::yes},
      {"point", ideal_of(r, {"x-1", "y-2"}, maximal), std2, Answer::yes, Answer::no},
      {"point1", ideal_of(line1, {"x-5"}, maximal), TranslationAction::standard(line1), Answer::yes, Answer::yes},
      {"laurent", ideal_of(r, {"x", "y"}, maximal), TranslationAction(r, {{Rational(1)}, {Rational(0)}}), Answer::yes,
       Answer::no},
  };
}

}  // namespace

TEST(Tor1, SpecExamples) {
  auto r = plane();
  auto t = tor1(ideal_of(r, {"x"}), ideal_of(r, {"x", "y"}));
  EXPECT_FALSE(t.is_zero);
  EXPECT_EQ(t.dimension_probe, (std::vector<std::size_t>{0, 1, 1, 1, 1}));
  EXPECT_TRUE(tor1(ideal_of(r, {"x"}), ideal_of(r, {"y"})).is_zero);
  Ideal m = ideal_of(r, {"x", "y"});
  auto mm = tor1(m, m);
  EXPECT_FALSE(mm.is_zero);
  EXPECT_TRUE(ideal_equal(*mm.numerator, m));
  EXPECT_EQ(mm.dimension_probe.back(), 2u);  // m / m^2 = span(x, y)
}

TEST(Tor1, ShortcutsMatchQuotient) {
  Random rng(81);
  auto r = plane();
  for (int k = 0; k < 25; ++k) {
    Poly f = rng.poly(r, 3, 2, 4);
    if (f.is_constant()) continue;
    // Point on or off the curve f = 0, flagged maximal.
    Point p = rng.point(2, 3, 2);
    if (k % 2 == 0) f = f - Poly::constant(r, f.evaluate(p));
    Ideal i(r, {f}, {.prime = true});
    Ideal j = point_ideal(r, p);
    // Full computation; tor1 itself throws if the shortcut disagreed.
    auto full = tor1(i, j);
    EXPECT_EQ(full.is_zero, tor1(i, j, {.decide_only = true}).is_zero);
    EXPECT_EQ(full.is_zero, !f.evaluate(p).is_zero());
    EXPECT_EQ(full.is_zero, tor1(j, i).is_zero);
  }
}

TEST(Tor1, SymmetryFuzz) {
  Random rng(82);
  PolyRing r({"x", "y"});
  for (int k = 0; k < 20; ++k) {
    Ideal i(r, {rng.poly(r, 2, 2, 3), rng.poly(r, 2, 2, 3)});
    Ideal j(r, {rng.poly(r, 2, 2, 3)});
    if (i.is_zero() || j.is_zero()) continue;
    auto a = tor1(i, j), b = tor1(j, i);
    EXPECT_EQ(a.is_zero, b.is_zero);
    EXPECT_EQ(a.is_zero, ideal_equal(*a.numerator, *a.denominator));
    auto qa = quotient_dimension_probe(*a.denominator, 0);
    auto qb = quotient_dimension_probe(*b.denominator, 0);
    if (qa.zero_dimensional && qb.zero_dimensional) { EXPECT_EQ(a.dimension_probe, b.dimension_probe); }
  }
}

TEST(SSet, SpecExamples) {
  auto r = plane();
  auto act = TranslationAction::standard(r);
  Ideal pell = ideal_of(r, {"x^2-7*y^2-1"}, {.prime = true});
  auto big = s_set_box(pell, Point{1, 0}, act, Lattice::full(2), 130);
  EXPECT_EQ(big.members, (std::vector<GroupElement>{{-128, -48}, {-128, 48}, {-9, -3}, {-9, 3}, {-2, 0}, {0, 0},
                                                    {7, -3}, {7, 3}, {126, -48}, {126, 48}}));
  EXPECT_EQ(big.cosets.size(), 10u);
  // The ideal target I((1,0)) gives the same set.
  auto as_ideal = s_set_box(pell, point_ideal(r, Point{1, 0}), act, Lattice::full(2), 8);
  EXPECT_EQ(as_ideal.members, (std::vector<GroupElement>{{-2, 0}, {0, 0}, {7, -3}, {7, 3}}));

  Ideal m = ideal_of(r, {"x-1", "y-2"}, {.prime = true, .maximal = true});
  auto fixed = s_set_box(m, Point{1, 2}, act, complement(stabiliser(m, act)), 6);
  EXPECT_EQ(fixed.members, (std::vector<GroupElement>{{0, 0}}));

  Ideal line = ideal_of(r, {"2*x-3*y-1"}, {.prime = true});
  auto ks = s_set_box(line, line, act, Lattice::full(2), 7);
  EXPECT_EQ(ks.members, (std::vector<GroupElement>{{-6, -4}, {-3, -2}, {0, 0}, {3, 2}, {6, 4}}));
  EXPECT_EQ(ks.cosets.size(), 1u);
}

TEST(TSet, SpecExamples) {
  auto r = plane();
  auto act = TranslationAction::standard(r);
  Ideal m = ideal_of(r, {"x", "y"}, {.prime = true, .maximal = true});
  auto vertical = t_set_box(m, ideal_of(r, {"x"}), act, Lattice::from_elements(2, {GroupElement{0, 1}}), 6);
  EXPECT_EQ(vertical.members.size(), 13u);
  auto coprime = t_set_box(ideal_of(r, {"x"}), ideal_of(r, {"y"}), act, Lattice::full(2), 4);
  EXPECT_TRUE(coprime.members.empty());
  Ideal pell = ideal_of(r, {"x^2-7*y^2-1"}, {.prime = true});
  EXPECT_EQ(t_set_box(pell, pell, act, Lattice::full(2), 8).members, (std::vector<GroupElement>{{0, 0}}));
}

TEST(Sets, KCosetPropertyFuzz) {
  Random rng(83);
  auto r = plane();
  auto std2 = TranslationAction::standard(r);
  TranslationAction wide(r, {{Rational(1), Rational(0), Rational(1)}, {Rational(0), Rational(1), Rational(1)}});
  std::vector<Ideal> bases{ideal_of(r, {"2*x-3*y-1"}, {.prime = true}), ideal_of(r, {"x^2-2"}, {.prime = true}),
                           ideal_of(r, {"x-y"}, {.prime = true}), ideal_of(r, {"y^2-x"}, {.prime = true})};
  for (int k = 0; k < 12; ++k) {
    const Ideal& i = bases[k % bases.size()];
    const TranslationAction& act = k % 3 == 2 ? wide : std2;
    Lattice kl = stabiliser(i, act);
    Point p = rng.point(2, 4, 1);
    Ideal j = k % 2 ? point_ideal(r, p) : act_on_ideal(i, rng.element(act.d(), 2), act);
    for (SetKind kind : {SetKind::s, SetKind::t}) {
      auto rep = kind == SetKind::s ? s_set_box(i, j, act, Lattice::full(act.d()), 4)
                                    : t_set_box(i, j, act, Lattice::full(act.d()), 4);
      std::set<GroupElement> members(rep.members.begin(), rep.members.end());
      for (const auto& g : kernels::box_points(act.d(), 4))
        for (const auto& b : kl.basis())
          for (const GroupElement& h : {g + b, g - b})
            if (h.sup_norm() <= 4) { EXPECT_EQ(members.count(g), members.count(h)) << g << " vs " << h; }
    }
  }
}

TEST(Decide, GoldenTable) {
  for (const auto& c : golden_table()) {
    Verdict v = decide(c.ideal, c.act);
    EXPECT_EQ(v.right, c.right) << c.name;
    EXPECT_EQ(v.left, c.left) << c.name;
    for (const auto& cert : v.certificates) EXPECT_TRUE(recheck_certificate(cert, c.ideal, c.act)) << c.name;
  }
}

TEST(Decide, Rules) {
  auto cases = golden_table();
  auto rule_of = [](const SideVerdict& v) { return v.certificates.front().rule; };
  EXPECT_EQ(rule_of(decide_right(cases[0].ideal, cases[0].act)), Rule::pell_conic);
  EXPECT_EQ(rule_of(decide_right(cases[1].ideal, cases[1].act)), Rule::graph_curve);
  EXPECT_EQ(rule_of(decide_right(cases[2].ideal, cases[2].act)), Rule::genus_at_least_one);
  EXPECT_EQ(rule_of(decide_right(cases[3].ideal, cases[3].act)), Rule::rational_line);
  EXPECT_EQ(rule_of(decide_right(cases[4].ideal, cases[4].act)), Rule::maximal_right);
  EXPECT_EQ(rule_of(decide_left(cases[4].ideal, cases[4].act)), Rule::maximal_left_critical_density);
  EXPECT_EQ(rule_of(decide_left(cases[0].ideal, cases[0].act)), Rule::principal_conjugation);
  auto pell = decide_right(cases[0].ideal, cases[0].act).certificates.front().payload;
  EXPECT_EQ(pell["solutions"][1][0], "127");
  EXPECT_EQ(pell["fundamental"][0], "8");
  auto laurent = decide_left(cases[6].ideal, cases[6].act).certificates.front().payload;
  EXPECT_EQ(laurent["witness"][0], "y");
}

TEST(Decide, EdgeCases) {
  auto r = plane();
  auto act = TranslationAction::standard(r);
  EXPECT_THROW(decide_right(ideal_of(r, {"x^2-7*y^2-1"}), act), DomainError);
  EXPECT_THROW(decide_left(Ideal::unit(r).with_flags({.prime = true}), act), DomainError);
  EXPECT_THROW(decide_right(ideal_of(r, {"x^2-y"}, {.prime = true, .maximal = true}), act), DomainError);
  // Stabiliser all of G: complement trivial on both sides.
  TranslationAction vertical(r, {{Rational(0)}, {Rational(1)}});
  Verdict v = decide(ideal_of(r, {"x^2-2"}, {.prime = true}), vertical);
  EXPECT_EQ(v.right, Answer::yes);
  EXPECT_EQ(v.left, Answer::yes);
  EXPECT_EQ(v.certificates.front().rule, Rule::trivial_complement);
  // Conic outside the Pell family: unknown on both sides, with box evidence.
  Verdict circle = decide(ideal_of(r, {"x^2+y^2-25"}, {.prime = true}), act);
  EXPECT_EQ(circle.right, Answer::unknown);
  EXPECT_EQ(circle.left, Answer::unknown);
  EXPECT_EQ(circle.certificates.front().rule, Rule::box_evidence_only);
  EXPECT_FALSE(circle.certificates.front().payload["set"]["members"].empty());
  // Pell conic under a rank-one action: no longer decided.
  TranslationAction horiz(r, {{Rational(1)}, {Rational(0)}});
  EXPECT_EQ(decide_right(ideal_of(r, {"x^2-7*y^2-1"}, {.prime = true}), horiz).answer, Answer::unknown);
  // Non-principal, non-maximal prime in three variables: left unknown.
  PolyRing r3({"x", "y", "z"});
  Verdict twisted = decide(ideal_of(r3, {"y-x^2", "z-x^3"}, {.prime = true}), TranslationAction::standard(r3));
  EXPECT_EQ(twisted.left, Answer::unknown);
}

TEST(Decide, ComplementIndependence) {
  Random rng(84);
  for (const auto& c : golden_table()) {
    Lattice k = stabiliser(c.ideal, c.act);
    for (int t = 0; t < 3; ++t) {
      Lattice h = perturbed_complement(complement(k), k, rng.engine());
      DecideOptions opts;
      opts.complement = h;
      EXPECT_EQ(decide_right(c.ideal, c.act, opts).answer, c.right) << c.name;
      EXPECT_EQ(decide_left(c.ideal, c.act, opts).answer, c.left) << c.name;
    }
  }
  auto cases = golden_table();
  DecideOptions bad;
  bad.complement = Lattice::trivial(2);
  EXPECT_THROW(decide_right(cases[0].ideal, cases[0].act, bad), DomainError);
}

TEST(Decide, TamperedCertificateFailsRecheck) {
  auto cases = golden_table();
  auto cert = decide_right(cases[0].ideal, cases[0].act).certificates.front();
  cert.payload["solutions"][1][0] = "128";
  EXPECT_FALSE(recheck_certificate(cert, cases[0].ideal, cases[0].act));
  auto left = decide_left(cases[4].ideal, cases[4].act).certificates.front();
  left.payload["witness"][0] = "x-2";
  EXPECT_FALSE(recheck_certificate(left, cases[4].ideal, cases[4].act));
  auto genus = decide_right(cases[2].ideal, cases[2].act).certificates.front();
  genus.payload["genus"] = 2;
  EXPECT_FALSE(recheck_certificate(genus, cases[2].ideal, cases[2].act));
}

TEST(Density, Examples) {
  auto r = plane();
  auto std2 = TranslationAction::standard(r);
  auto d = critical_density_decide(Point{0, 0}, std2);
  EXPECT_EQ(d.answer, Answer::no);
  EXPECT_TRUE(ideal_equal(*d.witness, ideal_of(r, {"x"})));
  PolyRing r1({"x"});
  EXPECT_EQ(critical_density_decide(Point{Rational(Integer(1), Integer(2))}, TranslationAction::standard(r1)).answer,
            Answer::yes);
  auto laurent = critical_density_decide(Point{0, 0}, TranslationAction(r, {{Rational(1)}, {Rational(0)}}));
  EXPECT_EQ(laurent.answer, Answer::no);
  EXPECT_TRUE(ideal_equal(*laurent.witness, ideal_of(r, {"y"})));
  EXPECT_THROW(critical_density_decide(Point{0, 0}, TranslationAction(r, {{Rational(0)}, {Rational(0)}})), DomainError);
  // The witness line holds infinitely many orbit points: check a stretch of them.
  for (std::int64_t t = -20; t <= 20; ++t)
    EXPECT_TRUE(d.witness->contains(P("x", r)) &&
                P("x", r).evaluate(act_on_point(Point{0, 0}, t * *d.preimage, std2)).is_zero());
}

TEST(Probe, Examples) {
  auto r = plane();
  auto act = TranslationAction::standard(r);
  Ideal pell = ideal_of(r, {"x^2-7*y^2-1"}, {.prime = true});
  auto p = growth_probe(pell, point_ideal(r, Point{1, 0}), act, Side::right, {2, 4, 8, 130});
  EXPECT_EQ(p.counts, (std::vector<std::size_t>{2, 2, 4, 10}));
  EXPECT_EQ(p.trend, "growing");
  Ideal cubic = ideal_of(r, {"y^2-x^3-x-1"}, {.prime = true});
  for (Side s : {Side::right, Side::left}) {
    auto c = growth_probe(cubic, cubic, act, s, {1, 2, 4, 8});
    EXPECT_EQ(c.counts, (std::vector<std::size_t>{1, 1, 1, 1}));
    EXPECT_EQ(c.trend, "stabilising");
  }
  Ideal line = ideal_of(r, {"2*x-3*y-1"}, {.prime = true});
  EXPECT_EQ(growth_probe(line, line, act, Side::right, {2, 4, 8}).counts, (std::vector<std::size_t>{1, 1, 1}));
  // A non-prime J goes through the colon computation.
  auto general = growth_probe(ideal_of(r, {"x"}), ideal_of(r, {"x^2", "x*y"}), act, Side::right, {1, 2});
  EXPECT_EQ(general.counts, (std::vector<std::size_t>{1, 1}));
}

TEST(Probe, CoherentWithVerdicts) {
  for (const auto& c : golden_table()) {
    for (Side side : {Side::right, Side::left}) {
      SideVerdict v = side == Side::right ? decide_right(c.ideal, c.act) : decide_left(c.ideal, c.act);
      auto probe = growth_probe(c.ideal, probe_target(c.ideal, c.act, v, side), c.act, side, {2, 4, 8});
      EXPECT_EQ(probe.trend, v.answer == Answer::no ? "growing" : "stabilising") << c.name;
    }
  }
}

#include "idealiser/noether.hpp"

#include <algorithm>
#include <map>

#include "idealiser/errors.hpp"
#include "idealiser/parser.hpp"

namespace idealiser {

using nlohmann::ordered_json;

// ---------------------------------------------------------------- Tor_1

Tor1Module tor1(const Ideal& i, const Ideal& j, const Tor1Options& options) {
  if (!i.ring().same_variables(j.ring())) throw RingMismatchError("tor1 over different rings");
  Tor1Module m{i, j, std::nullopt, std::nullopt, false, "general", {}};

  std::optional<bool> shortcut;
  if (i.is_zero() || j.is_zero() || i.is_unit() || j.is_unit()) {
    shortcut = true;
    m.method = "trivial";
  } else if (i.is_principal() && j.flags().prime) {
    shortcut = !j.contains(i.groebner().front());
    m.method = "principal";
  } else if (j.is_principal() && i.flags().prime) {
    shortcut = !i.contains(j.groebner().front());
    m.method = "principal";
  } else if (i.flags().maximal) {
    shortcut = !ideal_contains(i, j);
    m.method = "maximal";
  } else if (j.flags().maximal) {
    shortcut = !ideal_contains(j, i);
    m.method = "maximal";
  } else if (ideal_sum(i, j).is_unit()) {
    // I + J = C forces I ∩ J = IJ.
    shortcut = true;
    m.method = "coprime";
  }
  if (options.decide_only && shortcut) {
    m.is_zero = *shortcut;
    return m;
  }

  m.numerator = ideal_intersect(i, j);
  m.denominator = ideal_product(i, j);
  m.is_zero = ideal_equal(*m.numerator, *m.denominator);
  if (shortcut && *shortcut != m.is_zero) throw std::logic_error("tor1 shortcut disagrees with (I∩J)/IJ");
  auto num = quotient_dimension_probe(*m.numerator, options.probe_degree);
  auto den = quotient_dimension_probe(*m.denominator, options.probe_degree);
  for (std::size_t k = 0; k < num.cumulative.size(); ++k)
    m.dimension_probe.push_back(den.cumulative[k] - num.cumulative[k]);
  return m;
}

bool tor1_vanishes(const Ideal& i, const Ideal& j) { return tor1(i, j, {.decide_only = true}).is_zero; }

// ---------------------------------------------------------------- JSON

ordered_json to_json(const GroupElement& g) { return ordered_json(g.coords); }

ordered_json to_json(std::span<const Rational> p) {
  ordered_json out = ordered_json::array();
  for (const auto& c : p) out.push_back(c.str());
  return out;
}

ordered_json to_json(const Lattice& l) {
  ordered_json out = ordered_json::array();
  for (const auto& g : l.basis()) out.push_back(to_json(g));
  return out;
}

namespace {

Point parse_point(const ordered_json& j) {
  Point p;
  for (const auto& c : j) p.push_back(Rational::parse(c.get<std::string>()));
  return p;
}

ordered_json ideal_json(const Ideal& i) {
  ordered_json out = ordered_json::array();
  for (const auto& g : i.groebner()) out.push_back(g.str());
  return out;
}

std::string kind_name(SetKind k) { return k == SetKind::s ? "S" : "T"; }

std::string side_name(Side s) { return s == Side::right ? "right" : "left"; }

}  // namespace

ordered_json to_json(const LatticeSubsetReport& r) {
  ordered_json out;
  out["kind"] = kind_name(r.kind);
  out["target"] = r.target;
  out["sub"] = to_json(r.sub);
  out["stabiliser"] = to_json(r.stabiliser);
  out["box"] = r.box;
  ordered_json members = ordered_json::array();
  for (const auto& g : r.members) members.push_back(to_json(g));
  out["members"] = members;
  ordered_json cosets = ordered_json::array();
  for (const auto& c : r.cosets) {
    ordered_json cj;
    cj["representative"] = to_json(c.representative);
    cj["size"] = c.members.size();
    cosets.push_back(cj);
  }
  out["cosets"] = cosets;
  return out;
}

ordered_json to_json(const GrowthProbe& p) {
  ordered_json out;
  out["side"] = side_name(p.side);
  out["j"] = p.j;
  out["radii"] = p.radii;
  out["counts"] = p.counts;
  out["trend"] = p.trend;
  return out;
}

ordered_json to_json(const Certificate& c) {
  ordered_json out;
  out["side"] = side_name(c.side);
  out["rule"] = rule_name(c.rule);
  out["conclusion"] = answer_name(c.conclusion);
  out["payload"] = c.payload;
  return out;
}

// ---------------------------------------------------------------- S and T

namespace {

std::vector<CosetClass> coset_classes(const std::vector<GroupElement>& members, const Lattice& k) {
  std::vector<CosetClass> out;
  std::map<GroupElement, std::size_t> index;
  for (const auto& g : members) {
    GroupElement rep = k.coset_representative(g);
    auto [it, fresh] = index.emplace(rep, out.size());
    if (fresh) out.push_back({rep, {}});
    out[it->second].members.push_back(g);
  }
  return out;
}

bool vanishes_at(const Ideal& i, std::span<const Rational> q) {
  for (const auto& f : i.generators())
    if (!f.evaluate(q).is_zero()) return false;
  return true;
}

// I^g ⊆ J, evaluating at J's point when J is a rational point ideal.
bool translate_contained(const Ideal& i, const GroupElement& g, const TranslationAction& act, const Ideal& j,
                         const std::optional<Point>& j_point) {
  if (j_point) return vanishes_at(i, act_on_point(*j_point, g, act));
  return ideal_contains(j, act_on_ideal(i, g, act));
}

LatticeSubsetReport filter_box(SetKind kind, std::string target, const Ideal& i, const TranslationAction& act,
                               const Lattice& sub, std::int64_t box, kernels::Exec exec,
                               const std::function<bool(const GroupElement&)>& pred) {
  if (sub.ambient() != act.d()) throw DimensionError("sublattice rank differs from the group");
  auto pts = kernels::box_points(sub, box, exec);
  auto hits = kernels::select_indices(pts.size(), [&](std::size_t k) { return pred(pts[k]); }, exec);
  LatticeSubsetReport r;
  r.kind = kind;
  r.target = std::move(target);
  r.sub = sub;
  r.stabiliser = stabiliser(i, act);
  r.box = box;
  for (auto k : hits) r.members.push_back(pts[k]);
  r.cosets = coset_classes(r.members, r.stabiliser);
  return r;
}

std::string point_text(std::span<const Rational> p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) s += ',';
    s += p[k].str();
  }
  return s + ")";
}

}  // namespace

LatticeSubsetReport s_set_box(const Ideal& i, const SetTarget& target, const TranslationAction& act,
                              const Lattice& sub, std::int64_t box, kernels::Exec exec) {
  if (const Point* p = std::get_if<Point>(&target)) {
    if (p->size() != act.n()) throw DimensionError("point dimension differs from the ring");
    return filter_box(SetKind::s, point_text(*p), i, act, sub, box, exec,
                      [&](const GroupElement& g) { return vanishes_at(i, act_on_point(*p, g, act)); });
  }
  const Ideal& j = std::get<Ideal>(target);
  j.groebner();
  auto jp = rational_point(j);
  return filter_box(SetKind::s, j.str(), i, act, sub, box, exec,
                    [&](const GroupElement& g) { return translate_contained(i, g, act, j, jp); });
}

LatticeSubsetReport t_set_box(const Ideal& i, const Ideal& j, const TranslationAction& act, const Lattice& sub,
                              std::int64_t box, kernels::Exec exec) {
  i.groebner();
  j.groebner();
  return filter_box(SetKind::t, j.str(), i, act, sub, box, exec,
                    [&](const GroupElement& g) { return !tor1_vanishes(i, act_on_ideal(j, g, act)); });
}

// ---------------------------------------------------------------- names

std::string answer_name(Answer a) {
  switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    case Answer::unknown: break;
  }
  return "unknown";
}

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::maximal_right: return "MaximalRight";
    case Rule::maximal_left_critical_density: return "MaximalLeftCriticalDensity";
    case Rule::rational_line: return "RationalLine";
    case Rule::genus_at_least_one: return "GenusAtLeastOne";
    case Rule::pell_conic: return "PellConic";
    case Rule::graph_curve: return "GraphCurve";
    case Rule::principal_conjugation: return "PrincipalConjugation";
    case Rule::trivial_complement: return "TrivialComplement";
    case Rule::box_evidence_only: break;
  }
  return "BoxEvidenceOnly";
}

// ---------------------------------------------------------------- density

Ideal line_ideal(const PolyRing& ring, std::span<const Rational> p, std::span<const Rational> v) {
  std::size_t n = ring.nvars();
  if (p.size() != n || v.size() != n) throw DimensionError("line data dimension differs from the ring");
  auto pivot = std::find_if(v.begin(), v.end(), [](const Rational& c) { return !c.is_zero(); });
  if (pivot == v.end()) throw DomainError("line direction is zero");
  std::size_t i = static_cast<std::size_t>(pivot - v.begin());
  auto centred = [&](std::size_t k) { return Poly::variable(ring, k) - Poly::constant(ring, p[k]); };
  std::vector<Poly> gens;
  for (std::size_t k = 0; k < n; ++k)
    if (k != i) gens.push_back(centred(k).scaled(v[i]) - centred(i).scaled(v[k]));
  return Ideal(ring, gens, {.prime = true});
}

DensityResult critical_density_decide(std::span<const Rational> p, const TranslationAction& act) {
  if (p.size() != act.n()) throw DimensionError("point dimension differs from the ring");
  auto lattice = effective_lattice(act);
  if (lattice.rank == 0) throw DomainError("orbit is finite: the action fixes every point");
  DensityResult r;
  if (act.n() == 1) {
    r.answer = Answer::yes;
    return r;
  }
  r.answer = Answer::no;
  r.direction = lattice.basis.back();
  r.preimage = lattice.preimages.back();
  r.witness = line_ideal(act.ring(), p, r.direction);
  return r;
}

// ---------------------------------------------------------------- decisions

namespace {

constexpr const char* kGraphReason =
    "with D clearing the denominators of q and of the orbit lattice, q(y0 + D t) - q(y0) stays in that "
    "lattice for all integers t, so the translate through the point holds infinitely many orbit points";
constexpr const char* kPellReason =
    "powers of the fundamental unit are periodic modulo the orbit lattice, so infinitely many solutions "
    "lie in the orbit of the point";

struct Context {
  Ideal ideal;
  TranslationAction act;
  Lattice k, h;
  bool maximal = false;
  std::optional<Point> point;
  EffectiveLattice lattice;
};

Context prepare(const Ideal& i, const TranslationAction& act, const DecideOptions& options) {
  if (!i.ring().same_variables(act.ring())) throw RingMismatchError("ideal and action over different rings");
  if (!i.flags().prime) throw DomainError("noetherianity decisions require an ideal flagged prime");
  if (i.is_zero() || i.is_unit()) throw DomainError("noetherianity decisions need a proper nonzero ideal");
  Context c{i, act, stabiliser(i, act), {}, false, rational_point(i), effective_lattice(act)};
  c.h = options.complement ? *options.complement : complement(c.k);
  if (!is_complement(c.h, c.k)) throw DomainError("supplied lattice is not a complement of the stabiliser");
  if (c.point) {
    c.maximal = true;
  } else if (i.flags().maximal) {
    if (!quotient_dimension_probe(i, 0).zero_dimensional)
      throw DomainError("ideal flagged maximal is not zero-dimensional");
    c.maximal = true;
  }
  return c;
}

Certificate certificate(Side side, Rule rule, Answer a, ordered_json payload) {
  return {side, rule, a, std::move(payload)};
}

SideVerdict single(Certificate c) {
  SideVerdict v;
  v.answer = c.conclusion;
  v.certificates.push_back(std::move(c));
  return v;
}

Certificate trivial_complement(Side side, const Context& c) {
  ordered_json p;
  p["stabiliser"] = to_json(c.k);
  p["complement"] = to_json(c.h);
  return certificate(side, Rule::trivial_complement, Answer::yes, p);
}

Certificate right_box_evidence(const Context& c, const DecideOptions& options) {
  SetTarget target = c.ideal;
  if (c.point) {
    target = *c.point;
  } else if (c.act.n() == 2 && c.ideal.is_principal()) {
    Point origin(2);
    auto pts = lattice_points_box(c.ideal.groebner().front(), origin, options.box, options.exec);
    if (!pts.empty()) target = Point{Rational(pts.front().coords[0]), Rational(pts.front().coords[1])};
  }
  ordered_json p;
  p["reason"] = "no classification rule applies; S-set listed over the box";
  p["set"] = to_json(s_set_box(c.ideal, target, c.act, c.h, options.box, options.exec));
  return certificate(Side::right, Rule::box_evidence_only, Answer::unknown, p);
}

Certificate left_box_evidence(const Context& c, const DecideOptions& options) {
  ordered_json p;
  p["reason"] = "no left rule applies; T-set listed over the box";
  p["set"] = to_json(t_set_box(c.ideal, c.ideal, c.act, c.h, options.box, options.exec));
  return certificate(Side::left, Rule::box_evidence_only, Answer::unknown, p);
}

SideVerdict right_plane_curve(const Context& c, const DecideOptions& options) {
  const Poly& f = c.ideal.groebner().front();
  CurveClass cls = classify_plane_curve(f);
  const PolyRing& ring = f.ring();
  ordered_json p;
  p["curve"] = f.str();
  p["degree"] = cls.degree;
  switch (cls.tag) {
    case CurveTag::rational_line:
      p["stabiliser"] = to_json(c.k);
      return single(certificate(Side::right, Rule::rational_line, Answer::yes, p));
    case CurveTag::smooth_high_degree: {
      p["genus"] = cls.genus;
      ordered_json basis = ordered_json::array();
      for (const auto& g : cls.jacobian_basis) basis.push_back(g.str());
      p["jacobian_basis"] = basis;
      return single(certificate(Side::right, Rule::genus_at_least_one, Answer::yes, p));
    }
    case CurveTag::pell_conic: {
      if (c.lattice.rank != 2) break;
      auto sols = pell_enumerate(cls.pell_n, 2);
      std::size_t other = 1 - cls.axis;
      Point pt(2);
      pt[cls.axis] = Rational(1 - cls.pell_shift[cls.axis]);
      pt[other] = Rational(-cls.pell_shift[other]);
      p["n"] = cls.pell_n.get_str();
      p["axis"] = ring.name(cls.axis);
      p["shift"] = cls.pell_shift;
      p["fundamental"] = {sols[0].x.get_str(), sols[0].y.get_str()};
      ordered_json sj = ordered_json::array();
      for (const auto& s : sols) sj.push_back({s.x.get_str(), s.y.get_str()});
      p["solutions"] = sj;
      p["point"] = to_json(pt);
      p["lattice_rank"] = c.lattice.rank;
      p["reason"] = kPellReason;
      return single(certificate(Side::right, Rule::pell_conic, Answer::no, p));
    }
    case CurveTag::graph_curve: {
      if (c.lattice.rank != 2) break;
      Point pt(2);
      pt[cls.axis] = cls.q->evaluate(std::vector<Rational>(2));
      p["axis"] = ring.name(cls.axis);
      p["q"] = cls.q->str();
      p["point"] = to_json(pt);
      p["lattice_rank"] = c.lattice.rank;
      p["reason"] = kGraphReason;
      return single(certificate(Side::right, Rule::graph_curve, Answer::no, p));
    }
    case CurveTag::unknown:
      break;
  }
  SideVerdict v = single(right_box_evidence(c, options));
  v.certificates.front().payload["curve_class"] = curve_tag_name(cls.tag);
  v.certificates.front().payload["lattice_rank"] = c.lattice.rank;
  return v;
}

SideVerdict right_from(const Context& c, const DecideOptions& options) {
  if (c.h.rank() == 0) return single(trivial_complement(Side::right, c));
  if (c.maximal) {
    ordered_json p;
    if (c.point) p["point"] = to_json(*c.point);
    p["quotient_dimension"] = quotient_dimension_probe(c.ideal, 0).total.value_or(0);
    return single(certificate(Side::right, Rule::maximal_right, Answer::yes, p));
  }
  if (c.act.n() == 2 && c.ideal.is_principal()) return right_plane_curve(c, options);
  return single(right_box_evidence(c, options));
}

}  // namespace

SideVerdict decide_right(const Ideal& i, const TranslationAction& act, const DecideOptions& options) {
  return right_from(prepare(i, act, options), options);
}

SideVerdict decide_left(const Ideal& i, const TranslationAction& act, const DecideOptions& options) {
  Context c = prepare(i, act, options);
  if (c.h.rank() == 0) return single(trivial_complement(Side::left, c));
  if (c.maximal && (c.act.n() == 1 || c.point)) {
    ordered_json p;
    p["ambient_dimension"] = c.act.n();
    if (c.act.n() == 1) {
      // Infinite orbits in the affine line meet each proper subvariety finitely.
      if (c.point) p["point"] = to_json(*c.point);
      p["lattice_rank"] = c.lattice.rank;
      return single(certificate(Side::left, Rule::maximal_left_critical_density, Answer::yes, p));
    }
    DensityResult d = critical_density_decide(*c.point, c.act);
    p["point"] = to_json(*c.point);
    p["direction"] = to_json(d.direction);
    p["preimage"] = to_json(*d.preimage);
    p["witness"] = ideal_json(*d.witness);
    return single(certificate(Side::left, Rule::maximal_left_critical_density, d.answer, p));
  }
  if (c.ideal.is_principal()) {
    SideVerdict right = right_from(c, options);
    const Certificate& rc = right.certificates.front();
    ordered_json p;
    p["generator"] = c.ideal.groebner().front().str();
    p["right"] = answer_name(right.answer);
    p["right_rule"] = rule_name(rc.rule);
    p["right_payload"] = rc.payload;
    return single(certificate(Side::left, Rule::principal_conjugation, right.answer, p));
  }
  return single(left_box_evidence(c, options));
}

Verdict decide(const Ideal& i, const TranslationAction& act, const DecideOptions& options) {
  SideVerdict r = decide_right(i, act, options);
  SideVerdict l = decide_left(i, act, options);
  Verdict v{r.answer, l.answer, std::move(r.certificates)};
  for (auto& c : l.certificates) v.certificates.push_back(std::move(c));
  return v;
}

// ---------------------------------------------------------------- probes

GrowthProbe growth_probe(const Ideal& i, const Ideal& j, const TranslationAction& act, Side side,
                         const std::vector<std::int64_t>& radii, kernels::Exec exec) {
  if (radii.empty()) throw DomainError("growth probe needs at least one radius");
  Lattice k = stabiliser(i, act);
  std::int64_t top = *std::max_element(radii.begin(), radii.end());
  auto pts = kernels::box_points(act.d(), top);
  i.groebner();
  j.groebner();
  auto jp = rational_point(j);

  std::function<bool(const GroupElement&)> nonzero;
  if (side == Side::right) {
    nonzero = [&](const GroupElement& g) {
      if (j.flags().prime) return translate_contained(i, g, act, j, jp);
      return !ideal_equal(ideal_quotient(j, act_on_ideal(i, g, act)), j);
    };
  } else {
    nonzero = [&](const GroupElement& g) { return !tor1_vanishes(i, act_on_ideal(j, g, act)); };
  }
  auto hits = kernels::select_indices(pts.size(), [&](std::size_t n) { return nonzero(pts[n]); }, exec);

  GrowthProbe out;
  out.side = side;
  out.j = j.str();
  out.radii = radii;
  for (auto r : radii) {
    std::vector<GroupElement> inside;
    for (auto n : hits)
      if (pts[n].sup_norm() <= r) inside.push_back(pts[n]);
    out.counts.push_back(coset_classes(inside, k).size());
  }
  if (out.counts.size() < 2) {
    out.trend = "inconclusive";
  } else {
    out.trend = out.counts[out.counts.size() - 1] == out.counts[out.counts.size() - 2] ? "stabilising" : "growing";
  }
  return out;
}

Ideal probe_target(const Ideal& i, const TranslationAction& act, const SideVerdict& v, Side side) {
  for (const auto& c : v.certificates) {
    if (c.conclusion != Answer::no) continue;
    const auto& p = c.payload;
    if (c.rule == Rule::pell_conic || c.rule == Rule::graph_curve)
      return point_ideal(act.ring(), parse_point(p.at("point")));
    if (side == Side::left && c.rule == Rule::maximal_left_critical_density) {
      std::vector<Poly> gens;
      for (const auto& g : p.at("witness")) gens.push_back(parse_poly(g.get<std::string>(), act.ring()));
      return Ideal(act.ring(), gens, {.prime = true});
    }
    if (side == Side::left && c.rule == Rule::principal_conjugation && p.at("right_payload").contains("point"))
      return point_ideal(act.ring(), parse_point(p.at("right_payload").at("point")));
  }
  return i;
}

// ---------------------------------------------------------------- recheck

namespace {

bool recheck_rule(Rule rule, Answer conclusion, const ordered_json& p, const Ideal& i,
                  const TranslationAction& act) {
  const PolyRing& ring = act.ring();
  switch (rule) {
    case Rule::trivial_complement: {
      return stabiliser(i, act).rank() == act.d() && p.at("complement").empty();
    }
    case Rule::maximal_right: {
      if (p.contains("point")) return vanishes_at(i, parse_point(p.at("point"))) && rational_point(i).has_value();
      return quotient_dimension_probe(i, 0).zero_dimensional;
    }
    case Rule::maximal_left_critical_density: {
      if (conclusion == Answer::yes) return act.n() == 1 && effective_lattice(act).rank >= 1;
      Point pt = parse_point(p.at("point"));
      Point v = parse_point(p.at("direction"));
      GroupElement g(p.at("preimage").get<std::vector<std::int64_t>>());
      if (act.shift(g) != v || !vanishes_at(i, pt)) return false;
      std::vector<Poly> gens;
      for (const auto& s : p.at("witness")) gens.push_back(parse_poly(s.get<std::string>(), ring));
      Ideal line(ring, gens);
      // The witness is a proper curve holding p + t v for every t.
      if (line.is_unit() || quotient_dimension_probe(line, 0).zero_dimensional) return false;
      for (std::int64_t t = -3; t <= 3; ++t)
        if (!vanishes_at(line, act_on_point(pt, t * g, act))) return false;
      return true;
    }
    case Rule::rational_line: {
      Poly f = parse_poly(p.at("curve").get<std::string>(), ring);
      return f.degree() == 1 && ideal_equal(i, Ideal(ring, {f}));
    }
    case Rule::genus_at_least_one: {
      Poly f = parse_poly(p.at("curve").get<std::string>(), ring);
      long d = f.degree();
      return d >= 3 && has_pure_powers(projective_jacobian_basis(f)) &&
             p.at("genus").get<long>() == (d - 1) * (d - 2) / 2 && ideal_equal(i, Ideal(ring, {f}));
    }
    case Rule::pell_conic: {
      Integer n(p.at("n").get<std::string>());
      for (const auto& s : p.at("solutions")) {
        Integer x(s[0].get<std::string>()), y(s[1].get<std::string>());
        if (x * x - n * y * y != 1) return false;
      }
      Point pt = parse_point(p.at("point"));
      return vanishes_at(i, pt) && p.at("lattice_rank").get<std::size_t>() == effective_lattice(act).rank &&
             classify_plane_curve(i.groebner().front()).tag == CurveTag::pell_conic;
    }
    case Rule::graph_curve: {
      if (ring.nvars() != 2) return false;
      std::size_t axis = static_cast<std::size_t>(ring.index_of(p.at("axis").get<std::string>()));
      Poly q = parse_poly(p.at("q").get<std::string>(), ring);
      if (q.uses_variable(axis) || q.degree() < 2) return false;
      Poly graph = Poly::variable(ring, axis) - q;
      return ideal_equal(i, Ideal(ring, {graph})) && vanishes_at(i, parse_point(p.at("point")));
    }
    case Rule::principal_conjugation: {
      Rule right = Rule::box_evidence_only;
      for (int r = 0; r <= static_cast<int>(Rule::box_evidence_only); ++r)
        if (rule_name(static_cast<Rule>(r)) == p.at("right_rule").get<std::string>()) right = static_cast<Rule>(r);
      return i.is_principal() && p.at("right").get<std::string>() == answer_name(conclusion) &&
             recheck_rule(right, conclusion, p.at("right_payload"), i, act);
    }
    case Rule::box_evidence_only:
      return conclusion == Answer::unknown;
  }
  return false;
}

}  // namespace

bool recheck_certificate(const Certificate& c, const Ideal& i, const TranslationAction& act) {
  try {
    return recheck_rule(c.rule, c.conclusion, c.payload, i, act);
  } catch (const nlohmann::json::exception&) {
    return false;
  } catch (const ParseError&) {
    return false;
  }
}

}  // namespace idealiser

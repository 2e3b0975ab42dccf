#include "idealiser/skew.hpp"

#include <cctype>

#include "idealiser/errors.hpp"
#include "idealiser/parser.hpp"

namespace idealiser {

SkewElement::SkewElement(TranslationAction act, std::map<GroupElement, Poly> components) : act_(std::move(act)) {
  for (auto& [g, c] : components) {
    if (g.rank() != act_.d()) throw DimensionError("group element rank differs from action");
    if (!c.ring().same_variables(act_.ring())) throw RingMismatchError("skew coefficient from another ring");
    if (!c.is_zero()) comps_.emplace(g, c.in_ring(act_.ring()));
  }
}

SkewElement SkewElement::term(const TranslationAction& act, const Poly& coeff, const GroupElement& g) {
  return SkewElement(act, {{g, coeff}});
}

SkewElement SkewElement::one(const TranslationAction& act) {
  return term(act, Poly::constant(act.ring(), Rational(1)), GroupElement(act.d()));
}

Poly SkewElement::component(const GroupElement& g) const {
  auto it = comps_.find(g);
  return it == comps_.end() ? Poly(act_.ring()) : it->second;
}

std::map<GroupElement, Poly> SkewElement::right_coefficients() const {
  std::map<GroupElement, Poly> out;
  for (const auto& [g, r] : comps_) out.emplace(g, apply_action(r, -g, act_));
  return out;
}

std::string SkewElement::str() const {
  if (comps_.empty()) return "0";
  std::string out;
  for (const auto& [g, r] : comps_) {
    if (!out.empty()) out += " + ";
    out += "(" + r.str() + ")*";
    if (g.is_identity()) {
      out += "e";
    } else {
      out += "g[";
      for (std::size_t i = 0; i < g.rank(); ++i) {
        if (i) out += ',';
        out += std::to_string(g.coords[i]);
      }
      out += "]";
    }
  }
  return out;
}

namespace {

void require_same(const SkewElement& a, const SkewElement& b) {
  if (!(a.action() == b.action())) throw RingMismatchError("skew elements over different actions");
}

SkewElement combine(const SkewElement& a, const SkewElement& b, const Rational& sign) {
  require_same(a, b);
  std::map<GroupElement, Poly> comps = a.components();
  for (const auto& [g, r] : b.components()) {
    auto it = comps.find(g);
    if (it == comps.end()) {
      comps.emplace(g, r.scaled(sign));
    } else {
      it->second = add_scaled(it->second, r, sign);
    }
  }
  return SkewElement(a.action(), std::move(comps));
}

}  // namespace

SkewElement operator+(const SkewElement& a, const SkewElement& b) { return combine(a, b, Rational(1)); }
SkewElement operator-(const SkewElement& a, const SkewElement& b) { return combine(a, b, Rational(-1)); }

SkewElement operator*(const SkewElement& a, const SkewElement& b) {
  require_same(a, b);
  const auto& act = a.action();
  std::map<GroupElement, Poly> comps;
  for (const auto& [g, r] : a.components())
    for (const auto& [h, s] : b.components()) {
      Poly c = r * apply_action(s, g, act);
      GroupElement gh = g + h;
      auto it = comps.find(gh);
      if (it == comps.end()) {
        comps.emplace(std::move(gh), std::move(c));
      } else {
        it->second = it->second + c;
      }
    }
  return SkewElement(act, std::move(comps));
}

bool operator==(const SkewElement& a, const SkewElement& b) {
  if (!(a.action() == b.action())) return false;
  if (a.components().size() != b.components().size()) return false;
  auto ia = a.components().begin();
  for (const auto& [g, r] : b.components()) {
    if (!(ia->first == g) || !(ia->second == r)) return false;
    ++ia;
  }
  return true;
}

SkewElement skew_mul(const SkewElement& a, const SkewElement& b) { return a * b; }

namespace {

class SkewParser {
 public:
  SkewParser(std::string_view text, const TranslationAction& act) : text_(text), act_(act) {}

  SkewElement parse() {
    SkewElement acc(act_);
    skip_ws();
    if (pos_ == text_.size()) throw ParseError(pos_, "empty skew element");
    if (text_.substr(pos_) == "0") return acc;
    bool first = true;
    while (pos_ < text_.size()) {
      Rational sign(1);
      if (accept('-')) {
        sign = Rational(-1);
      } else if (!accept('+') && !first) {
        throw ParseError(pos_, "expected '+' or '-' between terms");
      }
      first = false;
      acc = acc + term(sign);
      skip_ws();
    }
    return acc;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(pos_, std::string("expected '") + c + "'");
  }

  SkewElement term(const Rational& sign) {
    skip_ws();
    if (!accept('(')) throw ParseError(pos_, "expected '(' opening a coefficient");
    std::size_t start = pos_;
    int depth = 1;
    while (pos_ < text_.size() && depth > 0) {
      if (text_[pos_] == '(') ++depth;
      if (text_[pos_] == ')') --depth;
      if (depth > 0) ++pos_;
    }
    if (depth != 0) throw ParseError(start, "unbalanced parentheses");
    Poly coeff(act_.ring());
    try {
      coeff = parse_poly(text_.substr(start, pos_ - start), act_.ring());
    } catch (const ParseError& e) {
      throw ParseError(start + e.position(), std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
    }
    ++pos_;  // ')'
    expect('*');
    skip_ws();
    GroupElement g(act_.d());
    if (accept('e')) {
      return SkewElement::term(act_, coeff.scaled(sign), g);
    }
    if (!accept('g')) throw ParseError(pos_, "expected 'e' or 'g[...]'");
    expect('[');
    for (std::size_t i = 0; i < act_.d(); ++i) {
      if (i) expect(',');
      skip_ws();
      std::size_t s = pos_;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string num(text_.substr(s, pos_ - s));
      if (num.empty() || num == "-" || num == "+") throw ParseError(s, "expected integer coordinate");
      try {
        g.coords[i] = std::stoll(num);
      } catch (const std::exception&) {
        throw ParseError(s, "coordinate out of range");
      }
    }
    expect(']');
    return SkewElement::term(act_, coeff.scaled(sign), g);
  }

  std::string_view text_;
  const TranslationAction& act_;
  std::size_t pos_ = 0;
};

}  // namespace

SkewElement parse_skew(std::string_view text, const TranslationAction& act) { return SkewParser(text, act).parse(); }

Ideal graded_component(const GradedIdeal& t, const GroupElement& g) {
  if (t.side == Side::right) return t.base;
  return act_on_ideal(t.base, g, t.action);
}

namespace {

Ideal colon_component(const Ideal& j, const Ideal& translated, QuotientMethod method) {
  if (method == QuotientMethod::automatic && j.flags().prime) {
    return ideal_contains(j, translated) ? Ideal::unit(j.ring()) : j;
  }
  return ideal_quotient(j, translated);
}

}  // namespace

Ideal idealiser_component(const Ideal& ideal, const GroupElement& g, const TranslationAction& act,
                          QuotientMethod method) {
  if (ideal.is_zero() || ideal.is_unit()) throw DomainError("idealiser component needs a proper nonzero ideal");
  if (g.is_identity()) return Ideal::unit(ideal.ring());
  return colon_component(ideal, act_on_ideal(ideal, g, act), method);
}

std::vector<QuotientEntry> quotient_table(const Ideal& j, const Ideal& i, const TranslationAction& act,
                                          std::int64_t box, QuotientMethod method, kernels::Exec exec) {
  auto pts = kernels::box_points(act.d(), box);
  j.groebner();
  std::vector<std::optional<Ideal>> ideals(pts.size());
  kernels::for_each_index(
      pts.size(),
      [&](std::size_t k) {
        Ideal q = colon_component(j, act_on_ideal(i, pts[k], act), method);
        q.groebner();
        ideals[k] = std::move(q);
      },
      exec);
  std::vector<QuotientEntry> out;
  out.reserve(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) {
    bool unit = ideals[k]->is_unit();
    out.push_back({pts[k], std::move(*ideals[k]), unit});
  }
  return out;
}

bool idealiser_membership(const SkewElement& b, const Ideal& ideal) {
  const auto& act = b.action();
  for (const auto& [g, r] : b.components()) {
    if (g.is_identity()) continue;
    Ideal comp = idealiser_component(ideal, g, act);
    if (!comp.contains(r)) return false;
  }
  return true;
}

Ideal IdealiserPresentation::component(const GroupElement& g) const {
  return stabiliser.contains(g) ? Ideal::unit(ideal.ring()) : ideal;
}

IdealiserPresentation presentation_R_mod_IB(const Ideal& ideal, const TranslationAction& act,
                                            unsigned probe_degree) {
  if (!ideal.flags().prime) throw DomainError("R/IB presentation requires an ideal flagged prime");
  Lattice k = stabiliser(ideal, act);
  IdealiserPresentation p{ideal, k, complement(k), {}, quotient_dimension_probe(ideal, probe_degree)};
  for (const auto& g : k.basis()) p.stabiliser_shifts.push_back(act.shift(g));
  return p;
}

}  // namespace idealiser

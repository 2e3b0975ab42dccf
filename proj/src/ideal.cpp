#include "idealiser/ideal.hpp"

#include <algorithm>
#include <numeric>

#include "idealiser/errors.hpp"

namespace idealiser {

Ideal::Ideal(PolyRing ring, std::vector<Poly> generators, IdealFlags flags)
    : ring_(std::move(ring)), flags_(flags), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!g.ring().same_variables(ring_)) throw RingMismatchError("ideal generator from a different ring");
    if (!g.is_zero()) generators_.push_back(g.in_ring(ring_));
  }
}

Ideal Ideal::unit(const PolyRing& ring) { return Ideal(ring, {Poly::constant(ring, Rational(1))}); }
Ideal Ideal::zero(const PolyRing& ring) { return Ideal(ring, {}); }

Ideal Ideal::with_flags(IdealFlags flags) const {
  Ideal copy = *this;
  copy.flags_ = flags;
  return copy;
}

const std::vector<Poly>& Ideal::groebner() const {
  std::call_once(cache_->once, [this] { cache_->basis = groebner_basis(generators_, ring_); });
  return cache_->basis;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb[0].is_constant();
}

bool Ideal::is_principal() const { return groebner().size() == 1; }

Poly Ideal::normal_form(const Poly& f) const {
  if (!f.ring().same_variables(ring_)) throw RingMismatchError("polynomial and ideal in different rings");
  return reduce(f.in_ring(ring_), groebner());
}

std::string Ideal::str() const {
  const auto& gb = groebner();
  if (gb.empty()) return "<0>";
  std::string out = "<";
  for (std::size_t i = 0; i < gb.size(); ++i) {
    if (i) out += ',';
    out += gb[i].str();
  }
  return out + ">";
}

Poly normal_form(const Poly& f, const Ideal& ideal) { return ideal.normal_form(f); }

namespace {

void require_same(const Ideal& a, const Ideal& b) {
  if (!a.ring().same_variables(b.ring())) throw RingMismatchError("ideals live in different rings");
}

}  // namespace

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  std::vector<Poly> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  std::vector<Poly> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  const PolyRing& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
  if (ideal_contains(b, a)) return a;
  if (ideal_contains(a, b)) return b;
  const std::size_t n = ring.nvars();
  std::vector<std::string> names{"_t"};
  names.insert(names.end(), ring.names().begin(), ring.names().end());
  PolyRing big(names, MonomialOrder::elimination(n + 1, 1));
  std::vector<std::size_t> shift(n);
  std::iota(shift.begin(), shift.end(), std::size_t{1});
  Poly t = Poly::variable(big, 0);
  Poly one_minus_t = Poly::constant(big, Rational(1)) - t;
  std::vector<Poly> gens;
  for (const auto& f : a.generators()) gens.push_back(t * remap(f, big, shift));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * remap(g, big, shift));
  std::vector<Poly> gb = groebner_basis(gens, big);
  std::vector<Poly> kept;
  for (const auto& g : gb) {
    if (g.uses_variable(0)) continue;
    std::vector<Term> terms;
    for (const auto& term : g.terms()) {
      std::vector<std::uint32_t> e(term.monomial.exponents().begin() + 1, term.monomial.exponents().end());
      terms.push_back({Monomial(std::move(e)), term.coeff});
    }
    kept.emplace_back(ring, std::move(terms));
  }
  return Ideal(ring, std::move(kept));
}

Ideal quotient_by_poly(const Ideal& j, const Poly& f) {
  if (f.is_zero()) throw DomainError("ideal quotient by the zero polynomial");
  const PolyRing& ring = j.ring();
  Ideal principal(ring, {f});
  if (j.contains(f)) return Ideal::unit(ring);
  Ideal meet = ideal_intersect(j, principal);
  std::vector<Poly> gens;
  for (const auto& g : meet.groebner()) gens.push_back(divide_exact(g, f.in_ring(ring)));
  return Ideal(ring, std::move(gens));
}

Ideal ideal_quotient(const Ideal& j, const Ideal& i) {
  require_same(j, i);
  const PolyRing& ring = j.ring();
  if (ideal_contains(j, i)) return Ideal::unit(ring);
  std::optional<Ideal> acc;
  for (const auto& f : i.generators()) {
    Ideal q = quotient_by_poly(j, f);
    acc = acc ? ideal_intersect(*acc, q) : q;
  }
  return acc ? *acc : Ideal::unit(ring);
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  const auto& ga = a.groebner();
  std::vector<Poly> gb = b.groebner();
  if (!(a.ring().order() == b.ring().order())) gb = groebner_basis(b.generators(), a.ring());
  if (ga.size() != gb.size()) return false;
  for (std::size_t k = 0; k < ga.size(); ++k)
    if (!(ga[k] == gb[k])) return false;
  return true;
}

bool ideal_contains(const Ideal& outer, const Ideal& inner) {
  require_same(outer, inner);
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const Poly& g) { return outer.contains(g); });
}

namespace {

// Number of monomials of degree exactly `deg` in `nvars` variables that are
// not divisible by any of `leads`; enumerated directly.
void count_standard(std::size_t var, std::size_t nvars, std::uint32_t remaining, Monomial& m,
                    const std::vector<Monomial>& leads, std::size_t& count) {
  if (var + 1 == nvars) {
    m[var] = remaining;
    bool standard = std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
    if (standard) ++count;
    m[var] = 0;
    return;
  }
  for (std::uint32_t e = 0; e <= remaining; ++e) {
    m[var] = e;
    count_standard(var + 1, nvars, remaining - e, m, leads, count);
  }
  m[var] = 0;
}

}  // namespace

QuotientDimensions quotient_dimension_probe(const Ideal& ideal, unsigned degree_bound) {
  const PolyRing& ring = ideal.ring();
  const std::size_t n = ring.nvars();
  std::vector<Poly> gb = ring.order().is_degree_compatible()
                             ? ideal.groebner()
                             : groebner_basis(ideal.generators(), ring.with_order(MonomialOrder::grevlex(n)));
  std::vector<Monomial> leads;
  for (const auto& g : gb) leads.push_back(g.leading_monomial());

  QuotientDimensions out;
  std::vector<bool> pure(n, false);
  std::uint32_t max_pure = 0;
  for (const auto& l : leads) {
    std::size_t nonzero = 0, which = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (l[v]) {
        ++nonzero;
        which = v;
      }
    if (nonzero == 0) std::fill(pure.begin(), pure.end(), true);
    if (nonzero == 1) {
      pure[which] = true;
      max_pure = std::max(max_pure, l[which]);
    }
  }
  out.zero_dimensional = std::all_of(pure.begin(), pure.end(), [](bool b) { return b; });

  std::size_t running = 0;
  Monomial m(n);
  for (unsigned k = 0; k <= degree_bound; ++k) {
    std::size_t c = 0;
    count_standard(0, n, k, m, leads, c);
    running += c;
    out.cumulative.push_back(running);
  }
  if (out.zero_dimensional) {
    // Standard monomials have every exponent below the matching pure power,
    // so degree n * max_pure bounds them all.
    std::size_t total = 0;
    const auto top = static_cast<unsigned>(n * std::max<std::uint32_t>(max_pure, 1));
    for (unsigned k = 0; k <= top; ++k) {
      std::size_t c = 0;
      count_standard(0, n, k, m, leads, c);
      total += c;
    }
    out.total = total;
  }
  return out;
}

std::optional<std::vector<Rational>> rational_point(const Ideal& ideal) {
  auto dims = quotient_dimension_probe(ideal, 0);
  if (!dims.total || *dims.total != 1) return std::nullopt;
  const PolyRing& ring = ideal.ring();
  std::vector<Rational> p(ring.nvars());
  Poly zero(ring);
  for (std::size_t v = 0; v < ring.nvars(); ++v) {
    // x_v reduces to the constant p_v modulo a residue-field ideal.
    Poly r = ideal.normal_form(Poly::variable(ring, v));
    if (!r.is_constant()) return std::nullopt;
    p[v] = r.is_zero() ? Rational(0) : r.leading_coeff();
  }
  return p;
}

Ideal point_ideal(const PolyRing& ring, std::span<const Rational> point) {
  if (point.size() != ring.nvars()) throw DimensionError("point has wrong length");
  std::vector<Poly> gens;
  for (std::size_t v = 0; v < ring.nvars(); ++v)
    gens.push_back(Poly::variable(ring, v) - Poly::constant(ring, point[v]));
  return Ideal(ring, std::move(gens), IdealFlags{true, true});
}

}  // namespace idealiser

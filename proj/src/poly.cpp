#include "idealiser/poly.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "idealiser/errors.hpp"

namespace idealiser {

// ---------------------------------------------------------------- Monomial

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

// ----------------------------------------------------------- MonomialOrder

namespace {

std::vector<std::size_t> identity_perm(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

// grevlex restricted to the ranked variables perm[lo, hi).
int grevlex_block(const Monomial& a, const Monomial& b, const std::vector<std::size_t>& perm,
                  std::size_t lo, std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t k = lo; k < hi; ++k) {
    da += a[perm[k]];
    db += b[perm[k]];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = hi; k-- > lo;) {
    auto ea = a[perm[k]], eb = b[perm[k]];
    if (ea != eb) return ea < eb ? 1 : -1;
  }
  return 0;
}

}  // namespace

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  return {Kind::lex, identity_perm(nvars), 0};
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  return {Kind::grevlex, identity_perm(nvars), 0};
}

MonomialOrder MonomialOrder::elimination(std::size_t nvars, std::size_t block) {
  return {Kind::elimination, identity_perm(nvars), block};
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case Kind::lex:
      for (auto v : significance)
        if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
      return 0;
    case Kind::grevlex:
      return grevlex_block(a, b, significance, 0, significance.size());
    case Kind::elimination: {
      int c = grevlex_block(a, b, significance, 0, block_size);
      if (c != 0) return c;
      return grevlex_block(a, b, significance, block_size, significance.size());
    }
  }
  return 0;
}

void MonomialOrder::validate(std::size_t nvars) const {
  if (significance.size() != nvars) throw DimensionError("monomial order has wrong variable count");
  std::vector<bool> seen(nvars, false);
  for (auto v : significance) {
    if (v >= nvars || seen[v]) throw DomainError("monomial order permutation is not a bijection");
    seen[v] = true;
  }
  if (kind == Kind::elimination && block_size > nvars)
    throw DomainError("elimination block larger than variable count");
}

// ----------------------------------------------------------------- PolyRing

PolyRing::PolyRing(std::vector<std::string> names, MonomialOrder order) {
  if (names.empty()) throw DomainError("polynomial ring needs at least one variable");
  std::set<std::string> distinct(names.begin(), names.end());
  if (distinct.size() != names.size()) throw DomainError("variable names must be distinct");
  order.validate(names.size());
  data_ = std::make_shared<const Data>(Data{std::move(names), std::move(order)});
}

PolyRing::PolyRing(std::vector<std::string> names)
    : PolyRing(names, MonomialOrder::grevlex(names.size())) {}

long PolyRing::index_of(const std::string& name) const {
  const auto& n = data_->names;
  auto it = std::find(n.begin(), n.end(), name);
  return it == n.end() ? -1 : static_cast<long>(it - n.begin());
}

PolyRing PolyRing::with_order(MonomialOrder order) const { return PolyRing(names(), std::move(order)); }

bool PolyRing::same_variables(const PolyRing& other) const {
  return data_ == other.data_ || names() == other.names();
}

bool operator==(const PolyRing& a, const PolyRing& b) {
  return a.data_ == b.data_ || (a.names() == b.names() && a.order() == b.order());
}

// --------------------------------------------------------------------- Poly

namespace {

void sort_and_merge(const MonomialOrder& order, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.monomial, b.monomial) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  terms = std::move(out);
}

void require_same(const Poly& a, const Poly& b) {
  if (!a.ring().same_variables(b.ring()))
    throw RingMismatchError("polynomials live in different rings");
}

}  // namespace

Poly::Poly(PolyRing ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.monomial.size() != ring_.nvars()) throw DimensionError("monomial length differs from ring");
  sort_and_merge(ring_.order(), terms_);
}

Poly Poly::constant(const PolyRing& ring, const Rational& c) {
  if (c.is_zero()) return Poly(ring);
  return Poly(ring, {Term{Monomial(ring.nvars()), c}}, true);
}

Poly Poly::variable(const PolyRing& ring, std::size_t i) {
  if (i >= ring.nvars()) throw DimensionError("variable index out of range");
  Monomial m(ring.nvars());
  m[i] = 1;
  return Poly(ring, {Term{std::move(m), Rational(1)}}, true);
}

Poly Poly::monomial(const PolyRing& ring, Monomial m, Rational c) {
  if (m.size() != ring.nvars()) throw DimensionError("monomial length differs from ring");
  if (c.is_zero()) return Poly(ring);
  return Poly(ring, {Term{std::move(m), std::move(c)}}, true);
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

long Poly::degree() const {
  if (terms_.empty()) return kNegInfDegree;
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return static_cast<long>(d);
}

long Poly::degree_in(std::size_t var) const {
  if (terms_.empty()) return kNegInfDegree;
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

bool Poly::uses_variable(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.monomial[var] != 0; });
}

Rational Poly::coeff(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return Rational(0);
}

Poly Poly::monic() const {
  if (terms_.empty() || leading_coeff().is_one()) return *this;
  return scaled(leading_coeff().inverse());
}

Poly Poly::tail() const {
  if (terms_.empty()) return *this;
  return Poly(ring_, std::vector<Term>(terms_.begin() + 1, terms_.end()), true);
}

Poly Poly::operator-() const { return scaled(Rational(-1)); }

Poly Poly::scaled(const Rational& c) const {
  if (c.is_zero()) return Poly(ring_);
  auto terms = terms_;
  for (auto& t : terms) t.coeff *= c;
  return Poly(ring_, std::move(terms), true);
}

Poly Poly::times_term(const Monomial& m, const Rational& c) const {
  if (c.is_zero()) return Poly(ring_);
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({t.monomial * m, t.coeff * c});
  return Poly(ring_, std::move(terms), true);
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(ring_, Rational(1));
  Poly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Poly Poly::derivative(std::size_t var) const {
  if (var >= ring_.nvars()) throw DimensionError("variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    auto e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m[var] = e - 1;
    terms.push_back({std::move(m), t.coeff * Rational(static_cast<long>(e))});
  }
  return Poly(ring_, std::move(terms));
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_.nvars()) throw DimensionError("evaluation point has wrong length");
  std::vector<std::vector<Rational>> powers(point.size());
  for (std::size_t v = 0; v < point.size(); ++v) {
    long d = degree_in(v);
    powers[v].push_back(Rational(1));
    for (long e = 1; e <= d; ++e) powers[v].push_back(powers[v].back() * point[v]);
  }
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational term = t.coeff;
    for (std::size_t v = 0; v < point.size(); ++v)
      if (t.monomial[v]) term *= powers[v][t.monomial[v]];
    sum += term;
  }
  return sum;
}

Poly Poly::in_ring(const PolyRing& ring) const {
  if (!ring_.same_variables(ring)) throw RingMismatchError("cannot move polynomial between rings");
  if (ring_.order() == ring.order()) return Poly(ring, terms_, true);
  return Poly(ring, terms_);
}

namespace {

std::string monomial_str(const PolyRing& ring, const Monomial& m) {
  std::string out;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (!m[v]) continue;
    if (!out.empty()) out += '*';
    out += ring.name(v);
    if (m[v] > 1) out += '^' + std::to_string(m[v]);
  }
  return out;
}

}  // namespace

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string piece;
    if (t.monomial.is_one()) {
      piece = t.coeff.str();
    } else if (t.coeff.is_one()) {
      piece = monomial_str(ring_, t.monomial);
    } else if (t.coeff == Rational(-1)) {
      piece = "-" + monomial_str(ring_, t.monomial);
    } else {
      piece = t.coeff.str() + "*" + monomial_str(ring_, t.monomial);
    }
    if (!out.empty() && piece[0] != '-') out += '+';
    out += piece;
  }
  return out;
}

Poly add_scaled(const Poly& a, const Poly& b, const Rational& c, const Monomial* m) {
  require_same(a, b);
  if (c.is_zero() || b.is_zero()) return a;
  const Poly bb = b.ring().order() == a.ring().order() ? b : b.in_ring(a.ring());
  const auto& order = a.ring().order();
  std::vector<Term> out;
  out.reserve(a.terms_.size() + bb.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = bb.terms_.begin();
  auto scaled_b = [&](const Term& t) { return Term{m ? t.monomial * *m : t.monomial, t.coeff * c}; };
  while (ia != a.terms_.end() || ib != bb.terms_.end()) {
    if (ib == bb.terms_.end()) {
      out.push_back(*ia++);
      continue;
    }
    Term tb = scaled_b(*ib);
    if (ia == a.terms_.end()) {
      out.push_back(std::move(tb));
      ++ib;
      continue;
    }
    int cmp = order.compare(ia->monomial, tb.monomial);
    if (cmp > 0) {
      out.push_back(*ia++);
    } else if (cmp < 0) {
      out.push_back(std::move(tb));
      ++ib;
    } else {
      Rational s = ia->coeff + tb.coeff;
      if (!s.is_zero()) out.push_back({ia->monomial, std::move(s)});
      ++ia;
      ++ib;
    }
  }
  return Poly(a.ring_, std::move(out), true);
}

Poly operator+(const Poly& a, const Poly& b) { return add_scaled(a, b, Rational(1)); }
Poly operator-(const Poly& a, const Poly& b) { return add_scaled(a, b, Rational(-1)); }

Poly operator*(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) terms.push_back({ta.monomial * tb.monomial, ta.coeff * tb.coeff});
  return Poly(a.ring_, std::move(terms));
}

bool operator==(const Poly& a, const Poly& b) {
  if (!a.ring_.same_variables(b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.ring_.order() == b.ring_.order()) {
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff)
        return false;
    return true;
  }
  return a == b.in_ring(a.ring_);
}

Poly poly_op(const Poly& a, const Poly& b, PolyOp op) {
  require_same(a, b);
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  return Poly(a.ring());
}

Poly poly_scale(const Poly& a, const Rational& c) { return a.scaled(c); }

Poly directional_derivative(const Poly& f, std::span<const Rational> v) {
  if (v.size() != f.ring().nvars()) throw DimensionError("direction has wrong length");
  Poly out(f.ring());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out = add_scaled(out, f.derivative(i), v[i]);
  return out;
}

Poly translate(const Poly& f, std::span<const Rational> shift) {
  const std::size_t n = f.ring().nvars();
  if (shift.size() != n) throw DimensionError("translation vector has wrong length");
  std::vector<Term> current = f.terms();
  for (std::size_t v = 0; v < n; ++v) {
    if (shift[v].is_zero()) continue;
    long max_e = 0;
    for (const auto& t : current) max_e = std::max<long>(max_e, t.monomial[v]);
    // binom[e][k] * shift^(e-k)
    std::vector<Rational> spow{Rational(1)};
    for (long e = 1; e <= max_e; ++e) spow.push_back(spow.back() * shift[v]);
    std::vector<std::vector<Integer>> binom(max_e + 1);
    for (long e = 0; e <= max_e; ++e) {
      binom[e].resize(e + 1);
      binom[e][0] = binom[e][e] = 1;
      for (long k = 1; k < e; ++k) binom[e][k] = binom[e - 1][k - 1] + binom[e - 1][k];
    }
    std::vector<Term> next;
    for (const auto& t : current) {
      auto e = t.monomial[v];
      for (std::uint32_t k = 0; k <= e; ++k) {
        Monomial m = t.monomial;
        m[v] = k;
        next.push_back({std::move(m), t.coeff * Rational(binom[e][k]) * spow[e - k]});
      }
    }
    current = std::move(next);
  }
  return Poly(f.ring(), std::move(current));
}

Poly remap(const Poly& f, const PolyRing& target, std::span<const std::size_t> index_map) {
  if (index_map.size() != f.ring().nvars()) throw DimensionError("index map has wrong length");
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target.nvars());
    for (std::size_t i = 0; i < index_map.size(); ++i) {
      if (index_map[i] >= target.nvars()) throw DimensionError("index map target out of range");
      m[index_map[i]] += t.monomial[i];
    }
    terms.push_back({std::move(m), t.coeff});
  }
  return Poly(target, std::move(terms));
}

Poly homogenize(const Poly& f, const PolyRing& target) {
  const std::size_t n = f.ring().nvars();
  if (target.nvars() != n + 1) throw DimensionError("homogenising ring needs exactly one extra variable");
  if (f.is_zero()) return Poly(target);
  auto d = static_cast<std::uint32_t>(f.degree());
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m(n + 1);
    for (std::size_t i = 0; i < n; ++i) m[i] = t.monomial[i];
    m[n] = d - static_cast<std::uint32_t>(t.monomial.degree());
    terms.push_back({std::move(m), t.coeff});
  }
  return Poly(target, std::move(terms));
}

Poly divide_exact(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  Poly q(a.ring());
  Poly r = a;
  const Poly bb = b.in_ring(a.ring());
  while (!r.is_zero()) {
    const auto& lt = r.leading_term();
    if (!bb.leading_monomial().divides(lt.monomial)) throw DomainError("polynomial division is not exact");
    Monomial m = lt.monomial / bb.leading_monomial();
    Rational c = lt.coeff / bb.leading_coeff();
    q = q + Poly::monomial(a.ring(), m, c);
    r = add_scaled(r, bb, -c, &m);
  }
  return q;
}

}  // namespace idealiser

#include "idealiser/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <optional>
#include <string>

#include "idealiser/errors.hpp"

namespace idealiser {

namespace {
std::atomic<std::size_t> g_pair_limit_override{0};
}  // namespace

void set_default_pair_limit(std::size_t limit) { g_pair_limit_override.store(limit); }

std::size_t default_pair_limit() {
  if (std::size_t v = g_pair_limit_override.load()) return v;
  if (const char* env = std::getenv("IDEALISER_PAIR_LIMIT")) {
    try {
      long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 100000;
}

Poly reduce(const Poly& f, std::span<const Poly> divisors) {
  Poly p = f;
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    const Poly* divisor = nullptr;
    for (const auto& g : divisors) {
      if (!g.is_zero() && g.leading_monomial().divides(lt.monomial)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      Monomial m = lt.monomial / divisor->leading_monomial();
      Rational c = -(lt.coeff / divisor->leading_coeff());
      p = add_scaled(p, *divisor, c, &m);
    } else {
      remainder.push_back(lt);
      p = p.tail();
    }
  }
  return Poly(f.ring(), std::move(remainder));
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Monomial mf = l / f.leading_monomial();
  Monomial mg = l / g.leading_monomial();
  Poly a = f.times_term(mf, f.leading_coeff().inverse());
  return add_scaled(a, g, -g.leading_coeff().inverse(), &mg);
}

namespace {

struct Element {
  Poly poly;
  std::uint64_t sugar;
  bool active;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint64_t sugar;
};

class Buchberger {
 public:
  Buchberger(const PolyRing& ring, std::size_t pair_limit) : ring_(ring), pair_limit_(pair_limit) {}

  void add_input(const Poly& f) {
    Poly h = reduce(f, active_polys());
    if (!h.is_zero()) update(h.monic(), static_cast<std::uint64_t>(std::max(f.degree(), 0L)));
  }

  void run() {
    while (!pairs_.empty() && !unit_) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        return ring_.order().compare(a.lcm, b.lcm) < 0;
      });
      Pair pair = *best;
      pairs_.erase(best);
      Poly s = s_polynomial(basis_[pair.i].poly, basis_[pair.j].poly);
      Poly h = reduce(s, active_polys());
      if (!h.is_zero()) update(h.monic(), pair.sugar);
    }
  }

  std::vector<Poly> reduced_basis() const {
    if (unit_) return {Poly::constant(ring_, Rational(1))};
    std::vector<Poly> g = active_polys();
    std::vector<Poly> out;
    for (std::size_t k = 0; k < g.size(); ++k) {
      std::vector<Poly> others;
      for (std::size_t l = 0; l < g.size(); ++l)
        if (l != k) others.push_back(g[l]);
      Poly tail = reduce(g[k].tail(), others);
      out.push_back((Poly::monomial(ring_, g[k].leading_monomial(), g[k].leading_coeff()) + tail).monic());
    }
    std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
      return ring_.order().compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return out;
  }

 private:
  std::vector<Poly> active_polys() const {
    std::vector<Poly> out;
    for (const auto& e : basis_)
      if (e.active) out.push_back(e.poly);
    return out;
  }

  std::uint64_t pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    auto si = basis_[i].sugar + l.degree() - basis_[i].poly.leading_monomial().degree();
    auto sj = basis_[j].sugar + l.degree() - basis_[j].poly.leading_monomial().degree();
    return std::max(si, sj);
  }

  // Gebauer–Möller installation of a new, fully top-reduced element.
  void update(Poly h, std::uint64_t sugar) {
    if (h.is_constant()) {
      unit_ = true;
      return;
    }
    const std::size_t hi = basis_.size();
    basis_.push_back({std::move(h), sugar, true});
    const Monomial& lh = basis_[hi].poly.leading_monomial();

    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Candidate> candidates;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!basis_[g].active) continue;
      if (++generated_ > pair_limit_)
        throw ResourceLimitError("Groebner pair limit of " + std::to_string(pair_limit_) + " exceeded");
      const Monomial& lg = basis_[g].poly.leading_monomial();
      candidates.push_back({g, lcm(lh, lg), lh.coprime(lg)});
    }

    // Chain criterion among the new pairs; among equal lcms keep one,
    // preferring a coprime representative.
    std::vector<Candidate> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      bool drop = false;
      for (std::size_t b = 0; b < candidates.size() && !drop; ++b) {
        if (a == b) continue;
        if (!candidates[b].lcm.divides(candidates[a].lcm)) continue;
        if (!(candidates[b].lcm == candidates[a].lcm)) {
          drop = true;
        } else if (candidates[b].coprime && !candidates[a].coprime) {
          drop = true;
        } else if (candidates[b].coprime == candidates[a].coprime && b < a) {
          drop = true;
        }
      }
      if (!drop) kept.push_back(candidates[a]);
    }

    std::vector<Pair> next;
    for (auto& p : pairs_) {
      const Monomial& lgi = basis_[p.i].poly.leading_monomial();
      const Monomial& lgj = basis_[p.j].poly.leading_monomial();
      bool redundant = lh.divides(p.lcm) && !(lcm(lgi, lh) == p.lcm) && !(lcm(lgj, lh) == p.lcm);
      if (!redundant) next.push_back(std::move(p));
    }
    for (auto& c : kept) {
      if (c.coprime) continue;
      next.push_back({c.g, hi, c.lcm, pair_sugar(c.g, hi, c.lcm)});
    }
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < hi; ++g)
      if (basis_[g].active && lh.divides(basis_[g].poly.leading_monomial())) basis_[g].active = false;
  }

  PolyRing ring_;
  std::size_t pair_limit_;
  std::size_t generated_ = 0;
  bool unit_ = false;
  std::vector<Element> basis_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Poly> groebner_basis(std::span<const Poly> generators, const PolyRing& ring,
                                 const GroebnerOptions& options) {
  std::vector<Poly> inputs;
  for (const auto& g : generators) {
    if (!g.ring().same_variables(ring)) throw RingMismatchError("generator from a different ring");
    if (!g.is_zero()) inputs.push_back(g.in_ring(ring));
  }
  if (inputs.empty()) return {};
  std::sort(inputs.begin(), inputs.end(), [&](const Poly& a, const Poly& b) {
    return ring.order().compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  Buchberger engine(ring, options.pair_limit);
  for (const auto& f : inputs) engine.add_input(f);
  engine.run();
  return engine.reduced_basis();
}

}  // namespace idealiser

#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "idealiser/noether.hpp"
#include "idealiser/parser.hpp"

namespace testing_support {

using namespace idealiser;

inline PolyRing plane() { return PolyRing({"x", "y"}); }
inline PolyRing plane_lex() { return PolyRing({"x", "y"}, MonomialOrder::lex(2)); }

inline Poly P(const std::string& s, const PolyRing& r) { return parse_poly(s, r); }

inline Ideal ideal_of(const PolyRing& r, std::initializer_list<const char*> gens, IdealFlags flags = {}) {
  std::vector<Poly> ps;
  for (const char* g : gens) ps.push_back(parse_poly(g, r));
  return Ideal(r, ps, flags);
}

/// Seeded random data; every test fixes its own seed.
class Random {
 public:
  explicit Random(std::uint64_t seed) : gen_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
  }

  Rational rational(std::int64_t num_range, std::int64_t max_den) {
    return Rational(Integer(static_cast<long>(integer(-num_range, num_range))),
                    Integer(static_cast<long>(integer(1, max_den))));
  }

  Point point(std::size_t n, std::int64_t num_range = 5, std::int64_t max_den = 3) {
    Point p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(rational(num_range, max_den));
    return p;
  }

  Poly poly(const PolyRing& r, std::size_t terms, unsigned max_degree, std::int64_t coeff_range = 5,
            std::int64_t max_den = 1) {
    std::vector<Term> ts;
    for (std::size_t k = 0; k < terms; ++k) {
      Monomial m(r.nvars());
      unsigned budget = static_cast<unsigned>(integer(0, max_degree));
      for (unsigned b = 0; b < budget; ++b) m[static_cast<std::size_t>(integer(0, r.nvars() - 1))] += 1;
      ts.push_back({m, rational(coeff_range, max_den)});
    }
    return Poly(r, ts);
  }

  Poly homogeneous(const PolyRing& r, std::size_t terms, unsigned degree, std::int64_t coeff_range = 5) {
    std::vector<Term> ts;
    for (std::size_t k = 0; k < terms; ++k) {
      Monomial m(r.nvars());
      for (unsigned b = 0; b < degree; ++b) m[static_cast<std::size_t>(integer(0, r.nvars() - 1))] += 1;
      ts.push_back({m, rational(coeff_range, 1)});
    }
    return Poly(r, ts);
  }

  GroupElement element(std::size_t d, std::int64_t radius) {
    GroupElement g(d);
    for (auto& c : g.coords) c = integer(-radius, radius);
    return g;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace testing_support

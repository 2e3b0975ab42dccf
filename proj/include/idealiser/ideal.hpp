#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "idealiser/groebner.hpp"
#include "idealiser/poly.hpp"

namespace idealiser {

/// User assertions about an ideal. Primality is trusted; maximality is
/// cross-checked cheaply where the code needs it.
struct IdealFlags {
  bool prime = false;
  bool maximal = false;
};

/// Finitely generated ideal of a polynomial ring. The reduced Gröbner basis
/// in the ring's order is computed on first use and shared between copies.
class Ideal {
 public:
  /// Zero generators are discarded; an empty list is the zero ideal.
  Ideal(PolyRing ring, std::vector<Poly> generators, IdealFlags flags = {});

  static Ideal unit(const PolyRing& ring);
  static Ideal zero(const PolyRing& ring);

  const PolyRing& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return generators_; }
  IdealFlags flags() const { return flags_; }
  Ideal with_flags(IdealFlags flags) const;

  /// Reduced, monic, sorted; empty for the zero ideal, {1} for the unit ideal.
  const std::vector<Poly>& groebner() const;

  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const;
  /// True when the reduced basis has exactly one element.
  bool is_principal() const;

  Poly normal_form(const Poly& f) const;
  bool contains(const Poly& f) const { return normal_form(f).is_zero(); }

  /// "<g1,g2,...>" over the reduced basis.
  std::string str() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Poly> basis;
  };

  PolyRing ring_;
  std::vector<Poly> generators_;
  IdealFlags flags_;
  std::shared_ptr<Cache> cache_;
};

Poly normal_form(const Poly& f, const Ideal& ideal);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// a ∩ b by eliminating an auxiliary variable t from t·a + (1 − t)·b.
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
/// (j : f) = (j ∩ <f>) / f. Throws DomainError when f = 0.
Ideal quotient_by_poly(const Ideal& j, const Poly& f);
/// (j : i) = {c | c·i ⊆ j}, the intersection of (j : f) over generators f.
Ideal ideal_quotient(const Ideal& j, const Ideal& i);
bool ideal_equal(const Ideal& a, const Ideal& b);
/// True when `inner` ⊆ `outer`.
bool ideal_contains(const Ideal& outer, const Ideal& inner);

struct QuotientDimensions {
  /// cumulative[k] = dim_Q (C/I)_{<= k} for k = 0..degree_bound.
  std::vector<std::size_t> cumulative;
  bool zero_dimensional = false;
  /// Total dimension of C/I when zero-dimensional.
  std::optional<std::size_t> total;
};

/// Standard-monomial counts of C/I from a grevlex Gröbner basis.
QuotientDimensions quotient_dimension_probe(const Ideal& ideal, unsigned degree_bound);

/// Coordinates of the single rational point of a zero-dimensional ideal of
/// total dimension 1, if that is what `ideal` is.
std::optional<std::vector<Rational>> rational_point(const Ideal& ideal);

/// The maximal ideal <x_1 - p_1, ..., x_n - p_n>, flagged prime and maximal.
Ideal point_ideal(const PolyRing& ring, std::span<const Rational> point);

}  // namespace idealiser

#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "idealiser/rational.hpp"

namespace idealiser {

/// Exponent vector. Its length always equals the ambient variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Total monomial order. `significance[k]` is the variable index ranked k-th
/// (0 = most significant). Elimination orders compare the first
/// `block_size` ranked variables by grevlex, then the rest by grevlex.
struct MonomialOrder {
  enum class Kind { lex, grevlex, elimination };

  Kind kind = Kind::grevlex;
  std::vector<std::size_t> significance;
  std::size_t block_size = 0;

  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder grevlex(std::size_t nvars);
  static MonomialOrder elimination(std::size_t nvars, std::size_t block);

  /// Negative, zero, positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool is_degree_compatible() const { return kind == Kind::grevlex; }
  void validate(std::size_t nvars) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// The commutative ring Q[x_1..x_n] together with its monomial order.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> names, MonomialOrder order);
  explicit PolyRing(std::vector<std::string> names);

  std::size_t nvars() const { return data_->names.size(); }
  const std::vector<std::string>& names() const { return data_->names; }
  const std::string& name(std::size_t i) const { return data_->names[i]; }
  const MonomialOrder& order() const { return data_->order; }
  /// Index of `name` or -1.
  long index_of(const std::string& name) const;

  PolyRing with_order(MonomialOrder order) const;
  bool same_variables(const PolyRing& other) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b);

 private:
  struct Data {
    std::vector<std::string> names;
    MonomialOrder order;
  };
  std::shared_ptr<const Data> data_;
};

struct Term {
  Monomial monomial;
  Rational coeff;
};

inline constexpr long kNegInfDegree = std::numeric_limits<long>::min();

/// Sparse polynomial over Q. Terms are nonzero and sorted by decreasing
/// monomial in the ring's order; values are immutable once built.
class Poly {
 public:
  explicit Poly(PolyRing ring) : ring_(std::move(ring)) {}
  /// Sorts, merges duplicate monomials and drops zero coefficients.
  Poly(PolyRing ring, std::vector<Term> terms);

  static Poly constant(const PolyRing& ring, const Rational& c);
  static Poly variable(const PolyRing& ring, std::size_t i);
  static Poly monomial(const PolyRing& ring, Monomial m, Rational c);

  const PolyRing& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Total degree; kNegInfDegree for the zero polynomial.
  long degree() const;
  long degree_in(std::size_t var) const;
  bool uses_variable(std::size_t var) const;

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }
  /// Coefficient of `m`, zero when absent.
  Rational coeff(const Monomial& m) const;

  Poly monic() const;
  /// Drops the leading term.
  Poly tail() const;
  Poly operator-() const;
  Poly scaled(const Rational& c) const;
  Poly times_term(const Monomial& m, const Rational& c) const;
  Poly pow(unsigned k) const;
  Poly derivative(std::size_t var) const;

  Rational evaluate(std::span<const Rational> point) const;

  /// Same polynomial re-sorted for a ring with the same variables.
  Poly in_ring(const PolyRing& ring) const;

  /// Compact deterministic text, e.g. "x^2-7*y^2-1".
  std::string str() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  Poly(PolyRing ring, std::vector<Term> terms, bool /*sorted*/)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}
  friend Poly add_scaled(const Poly&, const Poly&, const Rational&, const Monomial*);

  PolyRing ring_;
  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

/// a + c * m * b in one merge pass; m == nullptr means m = 1.
Poly add_scaled(const Poly& a, const Poly& b, const Rational& c, const Monomial* m = nullptr);

enum class PolyOp { add, sub, mul };
/// Binary ring operation; throws RingMismatchError for different variables.
Poly poly_op(const Poly& a, const Poly& b, PolyOp op);
Poly poly_scale(const Poly& a, const Rational& c);

/// sum_i v_i * df/dx_i.
Poly directional_derivative(const Poly& f, std::span<const Rational> v);

/// f(x + shift).
Poly translate(const Poly& f, std::span<const Rational> shift);

/// Re-expresses f in `target`, sending variable i to `index_map[i]`.
Poly remap(const Poly& f, const PolyRing& target, std::span<const std::size_t> index_map);

/// Homogenisation into `target`, which must have one more variable than f's
/// ring; the extra variable is the last one.
Poly homogenize(const Poly& f, const PolyRing& target);

/// Exact quotient a / b. Throws DomainError when b does not divide a.
Poly divide_exact(const Poly& a, const Poly& b);

}  // namespace idealiser

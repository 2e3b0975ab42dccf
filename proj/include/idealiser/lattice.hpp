#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "idealiser/rational.hpp"

namespace idealiser {

/// Element of the free abelian group Z^d.
struct GroupElement {
  std::vector<std::int64_t> coords;

  GroupElement() = default;
  explicit GroupElement(std::size_t d) : coords(d, 0) {}
  GroupElement(std::initializer_list<std::int64_t> c) : coords(c) {}
  explicit GroupElement(std::vector<std::int64_t> c) : coords(std::move(c)) {}

  std::size_t rank() const { return coords.size(); }
  bool is_identity() const;
  std::int64_t sup_norm() const;
  std::string str() const;  // "(a,b)"

  GroupElement operator-() const;
  friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator-(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator*(std::int64_t k, const GroupElement& a);
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const GroupElement& g) { return os << g.str(); }

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit IntMatrix(const std::vector<std::vector<Integer>>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<Integer> row(std::size_t r) const;

  IntMatrix transposed() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& k);
  /// col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

Integer determinant(const IntMatrix& m);

struct HermiteForm {
  IntMatrix h;          // row echelon, positive pivots, reduced above pivots
  IntMatrix transform;  // unimodular U with U * M = h
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

struct SmithForm {
  IntMatrix d;      // diagonal with d_1 | d_2 | ..., nonnegative
  IntMatrix left;   // unimodular U
  IntMatrix right;  // unimodular V with U * M * V = d
  IntMatrix right_inverse;
  std::size_t rank = 0;
};

HermiteForm hermite_normal_form(const IntMatrix& m);
SmithForm smith_normal_form(const IntMatrix& m);

struct HermiteSmith {
  HermiteForm hermite;
  SmithForm smith;
};
HermiteSmith hermite_smith(const IntMatrix& m);

/// Basis (HNF rows) of {g in Z^cols | M g = 0}.
std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& m);

/// Basis of {v in Q^ncols | rows * v = 0}, in reduced echelon order.
std::vector<std::vector<Rational>> rational_nullspace(const std::vector<std::vector<Rational>>& rows,
                                                      std::size_t ncols);
std::size_t rational_rank(std::vector<std::vector<Rational>> rows, std::size_t ncols);

/// Sublattice of Z^d with its canonical row-HNF basis.
class Lattice {
 public:
  Lattice() = default;
  static Lattice from_generators(std::size_t ambient, const std::vector<std::vector<Integer>>& generators);
  static Lattice from_elements(std::size_t ambient, const std::vector<GroupElement>& generators);
  static Lattice full(std::size_t ambient);
  static Lattice trivial(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<Integer>>& basis_rows() const { return rows_; }
  std::vector<GroupElement> basis() const;
  IntMatrix basis_matrix() const;

  bool contains(const GroupElement& g) const;
  /// Canonical representative of g + L; equal for elements of one coset.
  GroupElement coset_representative(const GroupElement& g) const;

  /// "(3,2)" per basis vector separated by spaces, or "{0}" when trivial.
  std::string str() const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<std::vector<Integer>> rows_;
  std::vector<std::size_t> pivots_;
};

/// H ∩ K = {0}, rank H + rank K = d and hence H ⊕ K of finite index.
bool is_complement(const Lattice& h, const Lattice& k);
/// [Z^d : H + K] when H + K has full rank, otherwise 0.
Integer sum_index(const Lattice& h, const Lattice& k);

/// A complement of K: rows of V^-1 beyond rank K where U K V is the Smith
/// form of K's basis, i.e. a basis completion of the saturation of K.
Lattice complement(const Lattice& k);

}  // namespace idealiser

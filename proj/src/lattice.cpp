#include "idealiser/lattice.hpp"

#include <algorithm>
#include <limits>

#include "idealiser/errors.hpp"

namespace idealiser {

// ------------------------------------------------------------- GroupElement

bool GroupElement::is_identity() const {
  return std::all_of(coords.begin(), coords.end(), [](auto c) { return c == 0; });
}

std::int64_t GroupElement::sup_norm() const {
  std::int64_t n = 0;
  for (auto c : coords) n = std::max(n, c < 0 ? -c : c);
  return n;
}

std::string GroupElement::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coords[i]);
  }
  return out + ")";
}

GroupElement GroupElement::operator-() const {
  GroupElement r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
  if (a.rank() != b.rank()) throw DimensionError("group elements of different rank");
  GroupElement r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

GroupElement operator-(const GroupElement& a, const GroupElement& b) { return a + (-b); }

GroupElement operator*(std::int64_t k, const GroupElement& a) {
  GroupElement r = a;
  for (auto& c : r.coords) c *= k;
  return r;
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(const std::vector<std::vector<Integer>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged integer matrix");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_)};
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product dimension mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

std::string IntMatrix::str() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out += ',';
    out += '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ',';
      out += (*this)(r, c).get_str();
    }
    out += ']';
  }
  return out + "]";
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det.numerator();
}

// ------------------------------------------------------------- normal forms

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.rows()), 0, {}};
  IntMatrix& h = out.h;
  IntMatrix& u = out.transform;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (;;) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        if (best == h.rows() || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == h.rows()) break;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool cleared = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        Integer q = floor_div(h(i, c), h(r, c));
        h.add_row(i, r, -q);
        u.add_row(i, r, -q);
        if (h(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      h.add_row(i, r, -q);
      u.add_row(i, r, -q);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()),
                IntMatrix::identity(m.cols()), 0};
  IntMatrix& d = out.d;
  IntMatrix& u = out.left;
  IntMatrix& v = out.right;
  IntMatrix& vinv = out.right_inverse;
  // Column operation on d and v, mirrored as the inverse row operation on vinv.
  auto col_swap = [&](std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    v.swap_cols(a, b);
    vinv.swap_rows(a, b);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
    d.add_col(dst, src, k);
    v.add_col(dst, src, k);
    vinv.add_row(src, dst, -k);
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    u.swap_rows(a, b);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
    d.add_row(dst, src, k);
    u.add_row(dst, src, k);
  };

  const std::size_t limit = std::min(d.rows(), d.cols());
  std::size_t t = 0;
  bool exhausted = false;
  for (; t < limit; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block moves to (t, t).
      std::size_t bi = d.rows(), bj = d.cols();
      for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j)
          if (d(i, j) != 0 && (bi == d.rows() || abs(d(i, j)) < abs(d(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == d.rows()) {
        exhausted = true;
        break;
      }
      row_swap(t, bi);
      col_swap(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        row_add(i, t, -floor_div(d(i, t), d(t, t)));
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        col_add(j, t, -floor_div(d(t, j), d(t, t)));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divisible = true;
      for (std::size_t i = t + 1; i < d.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) % d(t, t) != 0) {
            row_add(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (exhausted) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  out.rank = t;
  return out;
}

HermiteSmith hermite_smith(const IntMatrix& m) { return {hermite_normal_form(m), smith_normal_form(m)}; }

std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& m) {
  HermiteForm hf = hermite_normal_form(m.transposed());
  std::vector<std::vector<Integer>> gens;
  for (std::size_t i = hf.rank; i < hf.transform.rows(); ++i) gens.push_back(hf.transform.row(i));
  if (gens.empty()) return {};
  HermiteForm canon = hermite_normal_form(IntMatrix(gens));
  std::vector<std::vector<Integer>> out;
  for (std::size_t i = 0; i < canon.rank; ++i) out.push_back(canon.h.row(i));
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Rational inv = a[r][c].inverse();
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational f = a[i][c];
      for (std::size_t k = 0; k < ncols; ++k) a[i][k] -= f * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Rational>> rational_nullspace(const std::vector<std::vector<Rational>>& rows,
                                                      std::size_t ncols) {
  auto a = rows;
  for (const auto& r : a)
    if (r.size() != ncols) throw DimensionError("ragged rational matrix");
  auto pivots = rref(a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(ncols, Rational(0));
    v[free] = Rational(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> rows, std::size_t ncols) {
  return rref(rows, ncols).size();
}

// ------------------------------------------------------------------ Lattice

Lattice Lattice::from_generators(std::size_t ambient, const std::vector<std::vector<Integer>>& generators) {
  Lattice l;
  l.ambient_ = ambient;
  if (generators.empty()) return l;
  for (const auto& g : generators)
    if (g.size() != ambient) throw DimensionError("lattice generator has wrong length");
  HermiteForm hf = hermite_normal_form(IntMatrix(generators));
  for (std::size_t i = 0; i < hf.rank; ++i) l.rows_.push_back(hf.h.row(i));
  l.pivots_ = hf.pivots;
  return l;
}

Lattice Lattice::from_elements(std::size_t ambient, const std::vector<GroupElement>& generators) {
  std::vector<std::vector<Integer>> rows;
  for (const auto& g : generators) {
    std::vector<Integer> r;
    for (auto c : g.coords) r.emplace_back(static_cast<long>(c));
    rows.push_back(std::move(r));
  }
  return from_generators(ambient, rows);
}

Lattice Lattice::full(std::size_t ambient) {
  std::vector<std::vector<Integer>> rows(ambient, std::vector<Integer>(ambient, 0));
  for (std::size_t i = 0; i < ambient; ++i) rows[i][i] = 1;
  return from_generators(ambient, rows);
}

Lattice Lattice::trivial(std::size_t ambient) {
  Lattice l;
  l.ambient_ = ambient;
  return l;
}

namespace {

std::int64_t to_i64(const Integer& z) {
  if (!z.fits_slong_p()) throw DomainError("lattice coordinate exceeds 64-bit range");
  return z.get_si();
}

}  // namespace

std::vector<GroupElement> Lattice::basis() const {
  std::vector<GroupElement> out;
  for (const auto& r : rows_) {
    GroupElement g(ambient_);
    for (std::size_t i = 0; i < ambient_; ++i) g.coords[i] = to_i64(r[i]);
    out.push_back(std::move(g));
  }
  return out;
}

IntMatrix Lattice::basis_matrix() const {
  if (rows_.empty()) return IntMatrix(0, ambient_);
  return IntMatrix(rows_);
}

bool Lattice::contains(const GroupElement& g) const {
  if (g.rank() != ambient_) throw DimensionError("group element rank differs from lattice");
  std::vector<Integer> v;
  for (auto c : g.coords) v.emplace_back(static_cast<long>(c));
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Integer& p = rows_[k][pivots_[k]];
    if (v[pivots_[k]] % p != 0) return false;
    Integer q = v[pivots_[k]] / p;
    for (std::size_t i = 0; i < ambient_; ++i) v[i] -= q * rows_[k][i];
  }
  return std::all_of(v.begin(), v.end(), [](const Integer& z) { return z == 0; });
}

GroupElement Lattice::coset_representative(const GroupElement& g) const {
  if (g.rank() != ambient_) throw DimensionError("group element rank differs from lattice");
  std::vector<Integer> v;
  for (auto c : g.coords) v.emplace_back(static_cast<long>(c));
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Integer q = floor_div(v[pivots_[k]], rows_[k][pivots_[k]]);
    for (std::size_t i = 0; i < ambient_; ++i) v[i] -= q * rows_[k][i];
  }
  GroupElement out(ambient_);
  for (std::size_t i = 0; i < ambient_; ++i) out.coords[i] = to_i64(v[i]);
  return out;
}

std::string Lattice::str() const {
  if (rows_.empty()) return "{0}";
  std::string out;
  for (const auto& g : basis()) {
    if (!out.empty()) out += ' ';
    out += g.str();
  }
  return out;
}

bool is_complement(const Lattice& h, const Lattice& k) {
  if (h.ambient() != k.ambient()) throw DimensionError("lattices in different ambient groups");
  if (h.rank() + k.rank() != h.ambient()) return false;
  return sum_index(h, k) != 0;
}

Integer sum_index(const Lattice& h, const Lattice& k) {
  std::vector<std::vector<Integer>> rows = h.basis_rows();
  rows.insert(rows.end(), k.basis_rows().begin(), k.basis_rows().end());
  if (rows.size() != h.ambient()) {
    if (rows.empty()) return h.ambient() == 0 ? 1 : 0;
    SmithForm s = smith_normal_form(IntMatrix(rows));
    if (s.rank != h.ambient()) return 0;
    Integer idx = 1;
    for (std::size_t i = 0; i < s.rank; ++i) idx *= s.d(i, i);
    return idx;
  }
  return abs(determinant(IntMatrix(rows)));
}

Lattice complement(const Lattice& k) {
  const std::size_t d = k.ambient();
  if (k.rank() == 0) return Lattice::full(d);
  SmithForm s = smith_normal_form(k.basis_matrix());
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = s.rank; i < d; ++i) rows.push_back(s.right_inverse.row(i));
  return Lattice::from_generators(d, rows);
}

}  // namespace idealiser

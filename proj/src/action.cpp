#include "idealiser/action.hpp"

#include <map>

#include "idealiser/errors.hpp"

namespace idealiser {

TranslationAction::TranslationAction(PolyRing ring, std::vector<std::vector<Rational>> matrix) {
  const std::size_t n = ring.nvars();
  if (matrix.size() != n) throw DimensionError("action matrix needs one row per variable");
  const std::size_t d = matrix[0].size();
  if (d == 0) throw DimensionError("action needs at least one group generator");
  for (const auto& row : matrix)
    if (row.size() != d) throw DimensionError("action matrix rows have different lengths");
  data_ = std::make_shared<const Data>(Data{std::move(ring), d, std::move(matrix)});
}

TranslationAction TranslationAction::standard(const PolyRing& ring) {
  const std::size_t n = ring.nvars();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Rational(1);
  return TranslationAction(ring, std::move(m));
}

Point TranslationAction::shift(const GroupElement& g) const {
  if (g.rank() != d()) throw DimensionError("group element rank differs from action");
  Point s(n(), Rational(0));
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < d(); ++j)
      if (g.coords[j]) s[i] += matrix()[i][j] * Rational(static_cast<long>(g.coords[j]));
  return s;
}

bool operator==(const TranslationAction& a, const TranslationAction& b) {
  return a.data_ == b.data_ || (a.ring().same_variables(b.ring()) && a.matrix() == b.matrix());
}

Poly apply_action(const Poly& f, const GroupElement& g, const TranslationAction& act) {
  if (!f.ring().same_variables(act.ring())) throw DimensionError("polynomial ring differs from action ring");
  if (g.is_identity()) return f;
  Point s = act.shift(g);
  return translate(f, s);
}

Ideal act_on_ideal(const Ideal& ideal, const GroupElement& g, const TranslationAction& act) {
  if (!ideal.ring().same_variables(act.ring())) throw DimensionError("ideal ring differs from action ring");
  if (g.is_identity()) return ideal;
  Point s = act.shift(g);
  std::vector<Poly> gens;
  for (const auto& f : ideal.generators()) gens.push_back(translate(f, s));
  return Ideal(ideal.ring(), std::move(gens), ideal.flags());
}

Point act_on_point(std::span<const Rational> p, const GroupElement& g, const TranslationAction& act) {
  if (p.size() != act.n()) throw DimensionError("point length differs from action");
  Point s = act.shift(g);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += p[i];
  return s;
}

Lattice stabiliser(const Ideal& ideal, const TranslationAction& act) {
  if (ideal.is_zero()) throw DomainError("stabiliser of the zero ideal");
  if (ideal.is_unit()) throw DomainError("stabiliser of the unit ideal");
  const std::size_t n = act.n(), d = act.d();

  // Linear conditions on v: sum_i v_i NF(d f / d x_i) = 0 for every basis
  // element f, one row per monomial that occurs.
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : ideal.groebner()) {
    std::vector<Poly> residues;
    for (std::size_t i = 0; i < n; ++i) residues.push_back(ideal.normal_form(f.derivative(i)));
    std::map<std::vector<std::uint32_t>, std::vector<Rational>> by_monomial;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& t : residues[i].terms()) {
        auto& row = by_monomial[t.monomial.exponents()];
        if (row.empty()) row.assign(n, Rational(0));
        row[i] += t.coeff;
      }
    for (auto& [m, row] : by_monomial) rows.push_back(std::move(row));
  }

  Lattice k;
  if (rows.empty()) {
    k = Lattice::full(d);
  } else {
    // N A g = 0 with denominators cleared row by row.
    std::vector<std::vector<Integer>> int_rows;
    for (const auto& row : rows) {
      std::vector<Rational> na(d, Rational(0));
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < n; ++i) na[j] += row[i] * act.matrix()[i][j];
      Integer den = 1;
      for (const auto& x : na) den = lcm(den, x.denominator());
      std::vector<Integer> ir;
      for (const auto& x : na) ir.push_back((x * Rational(den)).numerator());
      int_rows.push_back(std::move(ir));
    }
    k = Lattice::from_generators(d, integer_kernel(IntMatrix(int_rows)));
  }
  for (const auto& g : k.basis())
    if (!ideal_equal(act_on_ideal(ideal, g, act), ideal))
      throw Error("internal: stabiliser basis vector " + g.str() + " does not fix the ideal");
  return k;
}

std::vector<GroupElement> stabiliser_box_check(const Ideal& ideal, const TranslationAction& act,
                                               const Lattice& k, std::int64_t radius, kernels::Exec exec) {
  auto pts = kernels::box_points(act.d(), radius);
  ideal.groebner();
  auto bad = kernels::select_indices(
      pts.size(),
      [&](std::size_t i) {
        bool fixes = ideal_contains(ideal, act_on_ideal(ideal, pts[i], act));
        return fixes != k.contains(pts[i]);
      },
      exec);
  std::vector<GroupElement> out;
  for (auto i : bad) out.push_back(pts[i]);
  return out;
}

Lattice perturbed_complement(const Lattice& h, const Lattice& k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> shift(-3, 3);
  std::uniform_int_distribution<int> scale(1, 2);
  std::vector<std::vector<Integer>> rows;
  for (auto row : h.basis_rows()) {
    for (auto& x : row) x *= scale(rng);
    for (const auto& kb : k.basis_rows()) {
      int c = shift(rng);
      for (std::size_t i = 0; i < row.size(); ++i) row[i] += c * kb[i];
    }
    rows.push_back(std::move(row));
  }
  Lattice out = Lattice::from_generators(h.ambient(), rows);
  if (!is_complement(out, k)) throw Error("internal: perturbed complement is not a complement");
  return out;
}

EffectiveLattice effective_lattice(const TranslationAction& act) {
  const std::size_t n = act.n(), d = act.d();
  Integer den = 1;
  for (const auto& row : act.matrix())
    for (const auto& x : row) den = lcm(den, x.denominator());
  // Rows of (den * A)^T are the scaled generator images.
  IntMatrix scaled(d, n);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < n; ++i) scaled(j, i) = (act.matrix()[i][j] * Rational(den)).numerator();
  HermiteForm hf = hermite_normal_form(scaled);
  EffectiveLattice out;
  out.rank = hf.rank;
  for (std::size_t r = 0; r < hf.rank; ++r) {
    Point v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Rational(hf.h(r, i), den);
    out.basis.push_back(std::move(v));
    GroupElement g(d);
    for (std::size_t j = 0; j < d; ++j) {
      if (!hf.transform(r, j).fits_slong_p()) throw DomainError("effective lattice preimage too large");
      g.coords[j] = hf.transform(r, j).get_si();
    }
    out.preimages.push_back(std::move(g));
  }
  return out;
}

}  // namespace idealiser

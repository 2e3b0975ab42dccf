#include "idealiser/diophantine.hpp"

#include "idealiser/errors.hpp"
#include "idealiser/ideal.hpp"

namespace idealiser {

namespace {

void check_pell_parameter(const Integer& n) {
  if (n < 2) throw DomainError("Pell parameter must be at least 2");
  if (mpz_perfect_square_p(n.get_mpz_t())) throw DomainError("Pell parameter " + n.get_str() + " is a square");
}

}  // namespace

PellSolution pell_fundamental(const Integer& n) {
  check_pell_parameter(n);
  Integer a0;
  mpz_sqrt(a0.get_mpz_t(), n.get_mpz_t());
  Integer m = 0, d = 1, a = a0;
  Integer h_prev = 1, h = a0;
  Integer k_prev = 0, k = 1;
  while (h * h - n * k * k != 1) {
    m = d * a - m;
    d = (n - m * m) / d;
    a = (a0 + m) / d;
    Integer h_next = a * h + h_prev;
    Integer k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return {n, h, k};
}

std::vector<PellSolution> pell_enumerate(const Integer& n, std::size_t count) {
  if (count == 0) throw DomainError("solution count must be positive");
  PellSolution first = pell_fundamental(n);
  std::vector<PellSolution> out{first};
  while (out.size() < count) {
    const auto& cur = out.back();
    PellSolution next{n, first.x * cur.x + n * first.y * cur.y, first.x * cur.y + first.y * cur.x};
    if (next.x * next.x - n * next.y * next.y != 1)
      throw std::logic_error("Pell recurrence produced a non-solution");
    out.push_back(std::move(next));
  }
  return out;
}

std::string curve_tag_name(CurveTag tag) {
  switch (tag) {
    case CurveTag::rational_line: return "RationalLine";
    case CurveTag::smooth_high_degree: return "SmoothHighDegree";
    case CurveTag::pell_conic: return "PellConic";
    case CurveTag::graph_curve: return "GraphCurve";
    case CurveTag::unknown: break;
  }
  return "Unknown";
}

std::vector<Poly> projective_jacobian_basis(const Poly& f) {
  const auto& names = f.ring().names();
  std::vector<std::string> hnames(names.begin(), names.end());
  hnames.push_back("_z");
  PolyRing hring(hnames, MonomialOrder::grevlex(hnames.size()));
  Poly big = homogenize(f, hring);
  std::vector<Poly> gens{big};
  for (std::size_t i = 0; i < hring.nvars(); ++i) gens.push_back(big.derivative(i));
  return groebner_basis(gens, hring);
}

bool has_pure_powers(const std::vector<Poly>& basis) {
  if (basis.empty()) return false;
  std::size_t n = basis.front().ring().nvars();
  std::vector<bool> seen(n, false);
  for (const auto& g : basis) {
    const auto& lm = g.leading_monomial();
    std::size_t nonzero = 0, at = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (lm[i] > 0) ++nonzero, at = i;
    if (nonzero == 1) seen[at] = true;
    if (nonzero == 0) return true;  // unit ideal
  }
  for (bool s : seen)
    if (!s) return false;
  return true;
}

namespace {

// Completes squares in a conic without mixed term; returns shift s and the
// centred polynomial a x^2 + b y^2 + c, or nothing if the centre is not
// integral.
std::optional<std::pair<std::vector<std::int64_t>, Poly>> centre_conic(const Poly& f) {
  const PolyRing& ring = f.ring();
  Rational sq[2], lin[2];
  for (const auto& t : f.terms()) {
    const auto& m = t.monomial;
    if (m[0] > 0 && m[1] > 0) return std::nullopt;
    if (m.degree() > 2) return std::nullopt;
    for (std::size_t i = 0; i < 2; ++i) {
      if (m[i] == 2) sq[i] = t.coeff;
      if (m[i] == 1) lin[i] = t.coeff;
    }
  }
  std::vector<std::int64_t> shift(2, 0);
  std::vector<Rational> neg(2);
  for (std::size_t i = 0; i < 2; ++i) {
    if (sq[i].is_zero()) return std::nullopt;
    Rational s = lin[i] / (Rational(2) * sq[i]);
    if (!s.is_integer() || !s.numerator().fits_slong_p()) return std::nullopt;
    shift[i] = s.numerator().get_si();
    neg[i] = -s;
  }
  // f(x - s) has no linear terms.
  return std::make_pair(shift, translate(f, neg).in_ring(ring));
}

bool try_pell(const Poly& f, CurveClass& out) {
  if (f.degree() != 2) return false;
  auto centred = centre_conic(f);
  if (!centred) return false;
  const Poly& g = centred->second;
  Rational c = g.coeff(Monomial(2));
  if (c.is_zero()) return false;
  Poly h = g.scaled(Rational(-1) / c);  // a x^2 + b y^2 - 1
  Monomial xx(2), yy(2);
  xx[0] = 2;
  yy[1] = 2;
  Rational a = h.coeff(xx), b = h.coeff(yy);
  std::size_t axis;
  Rational other;
  if (a.is_one()) {
    axis = 0;
    other = -b;
  } else if (b.is_one()) {
    axis = 1;
    other = -a;
  } else {
    return false;
  }
  if (!other.is_integer() || other.numerator() < 2) return false;
  if (mpz_perfect_square_p(other.numerator().get_mpz_t())) return false;
  out.tag = CurveTag::pell_conic;
  out.pell_n = other.numerator();
  out.axis = axis;
  out.pell_shift = centred->first;
  return true;
}

bool try_graph(const Poly& f, CurveClass& out) {
  for (std::size_t axis = 0; axis < 2; ++axis) {
    std::size_t other = 1 - axis;
    Rational a;
    std::vector<Term> rest;
    bool ok = true;
    for (const auto& t : f.terms()) {
      const auto& m = t.monomial;
      if (m[axis] == 1 && m[other] == 0) {
        a = t.coeff;
      } else if (m[axis] == 0) {
        rest.push_back(t);
      } else {
        ok = false;
        break;
      }
    }
    if (!ok || a.is_zero()) continue;
    Poly r(f.ring(), rest);
    if (r.degree() < 2) continue;
    out.tag = CurveTag::graph_curve;
    out.axis = axis;
    out.q = r.scaled(Rational(-1) / a);
    return true;
  }
  return false;
}

}  // namespace

CurveClass classify_plane_curve(const Poly& f) {
  if (f.ring().nvars() != 2) throw DimensionError("plane curve classification needs a two-variable ring");
  if (f.is_constant()) throw DomainError("constant polynomial does not define a curve");
  CurveClass out;
  out.degree = f.degree();
  if (out.degree == 1) {
    out.tag = CurveTag::rational_line;
    return out;
  }
  if (try_pell(f, out) || try_graph(f, out)) return out;
  if (out.degree >= 3) {
    auto basis = projective_jacobian_basis(f);
    if (has_pure_powers(basis)) {
      out.tag = CurveTag::smooth_high_degree;
      out.genus = (out.degree - 1) * (out.degree - 2) / 2;
      out.jacobian_basis = std::move(basis);
    }
  }
  return out;
}

std::vector<GroupElement> lattice_points_box(const Poly& f, std::span<const Rational> offset,
                                             std::int64_t radius, kernels::Exec exec) {
  if (f.ring().nvars() != 2 || offset.size() != 2) throw DimensionError("lattice_points_box works on the plane");
  if (radius < 0) throw DomainError("negative radius");
  if (f.is_zero()) throw DomainError("zero polynomial vanishes everywhere");
  Poly h = translate(f, offset);
  long dx = h.degree_in(0), dy = h.degree_in(1);
  // h_{j,k}: coefficient of x^j y^k.
  std::vector<std::vector<Rational>> coeff(dx + 1, std::vector<Rational>(dy + 1));
  for (const auto& t : h.terms()) coeff[t.monomial[0]][t.monomial[1]] = t.coeff;

  std::size_t width = static_cast<std::size_t>(2 * radius + 1);
  std::vector<std::vector<GroupElement>> rows(width);
  kernels::for_each_index(
      width,
      [&](std::size_t row) {
        std::int64_t m1 = static_cast<std::int64_t>(row) - radius;
        // Row polynomial in y with the denominators cleared.
        std::vector<Rational> c(dy + 1);
        for (long k = 0; k <= dy; ++k) {
          Rational acc;
          for (long j = dx; j >= 0; --j) acc = acc * Rational(m1) + coeff[j][k];
          c[k] = acc;
        }
        Integer den = 1;
        for (const auto& ck : c) den = lcm(den, ck.denominator());
        std::vector<Integer> ic(dy + 1);
        bool all_zero = true;
        for (long k = 0; k <= dy; ++k) {
          ic[k] = c[k].numerator() * (den / c[k].denominator());
          if (ic[k] != 0) all_zero = false;
        }
        Integer v;
        for (std::int64_t m2 = -radius; m2 <= radius; ++m2) {
          if (!all_zero) {
            v = 0;
            for (long k = dy; k >= 0; --k) v = v * m2 + ic[k];
            if (v != 0) continue;
          }
          rows[row].push_back(GroupElement{m1, m2});
        }
      },
      exec);
  std::vector<GroupElement> out;
  for (auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

}  // namespace idealiser

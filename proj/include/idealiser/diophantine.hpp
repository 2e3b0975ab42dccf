#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "idealiser/kernels.hpp"
#include "idealiser/lattice.hpp"
#include "idealiser/poly.hpp"

namespace idealiser {

struct PellSolution {
  Integer n, x, y;
};

/// Least solution of x^2 - n y^2 = 1 with x, y >= 1, read off the
/// continued fraction of sqrt(n). Throws DomainError for n < 2 or square n.
PellSolution pell_fundamental(const Integer& n);

/// First `count` solutions by increasing x, each checked exactly.
std::vector<PellSolution> pell_enumerate(const Integer& n, std::size_t count);

enum class CurveTag { rational_line, smooth_high_degree, pell_conic, graph_curve, unknown };

/// "RationalLine", "SmoothHighDegree", ...
std::string curve_tag_name(CurveTag tag);

struct CurveClass {
  CurveTag tag = CurveTag::unknown;
  long degree = 0;

  // smooth_high_degree
  long genus = 0;
  std::vector<Poly> jacobian_basis;  // grevlex basis of <F, F_x, F_y, F_z>

  // pell_conic: f is c * ((x_a + s_a)^2 - n (x_b + s_b)^2 - 1) with a = axis
  Integer pell_n;
  std::vector<std::int64_t> pell_shift;

  // graph_curve: f = 0 iff x_axis = q(other variable)
  std::size_t axis = 0;
  std::optional<Poly> q;
};

/// Two-variable curve classifier. Throws DimensionError unless f's ring has
/// two variables and DomainError for constant f.
CurveClass classify_plane_curve(const Poly& f);

/// Reduced grevlex basis of the Jacobian ideal of the homogenisation, with
/// the projectivising variable appended as "_z".
std::vector<Poly> projective_jacobian_basis(const Poly& f);

/// True when the basis has a leading monomial that is a pure power of every
/// variable, i.e. the homogeneous ideal has no projective zero.
bool has_pure_powers(const std::vector<Poly>& basis);

/// Integer m with |m|_inf <= radius and f(offset + m) = 0, lexicographic.
std::vector<GroupElement> lattice_points_box(const Poly& f, std::span<const Rational> offset,
                                             std::int64_t radius,
                                             kernels::Exec exec = kernels::Exec::parallel);

}  // namespace idealiser

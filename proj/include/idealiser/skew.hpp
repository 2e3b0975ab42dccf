#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "idealiser/action.hpp"

namespace idealiser {

/// Element sum_g r_g g of C # Z^d, stored by left coefficients.
class SkewElement {
 public:
  explicit SkewElement(TranslationAction act) : act_(std::move(act)) {}
  /// Zero components are dropped.
  SkewElement(TranslationAction act, std::map<GroupElement, Poly> components);

  static SkewElement term(const TranslationAction& act, const Poly& coeff, const GroupElement& g);
  static SkewElement one(const TranslationAction& act);

  const TranslationAction& action() const { return act_; }
  const std::map<GroupElement, Poly>& components() const { return comps_; }
  /// r_g, or zero when g is outside the support.
  Poly component(const GroupElement& g) const;
  bool is_zero() const { return comps_.empty(); }

  /// The same element written with right coefficients: r g = g r^{-g}.
  std::map<GroupElement, Poly> right_coefficients() const;

  /// "(x+1)*g[1,0] + (3)*e", terms by increasing group element.
  std::string str() const;

  friend SkewElement operator+(const SkewElement& a, const SkewElement& b);
  friend SkewElement operator-(const SkewElement& a, const SkewElement& b);
  friend SkewElement operator*(const SkewElement& a, const SkewElement& b);
  friend bool operator==(const SkewElement& a, const SkewElement& b);

 private:
  TranslationAction act_;
  std::map<GroupElement, Poly> comps_;
};

/// (r g)(s h) = (r s^g)(g + h), extended bilinearly.
SkewElement skew_mul(const SkewElement& a, const SkewElement& b);

/// Sum of "(<poly>)*g[a1,...,ad]" or "(<poly>)*e" terms joined by + or -.
SkewElement parse_skew(std::string_view text, const TranslationAction& act);

enum class Side { right, left };

/// IB (right) or BJ (left) for an ideal of C.
struct GradedIdeal {
  Side side;
  Ideal base;
  TranslationAction action;
};

/// (IB)_g = I and (BJ)_g = J^g.
Ideal graded_component(const GradedIdeal& t, const GroupElement& g);

enum class QuotientMethod {
  automatic,  // C-or-J shortcut when the numerator is flagged prime
  general,    // always the colon-ideal computation
};

/// (I : I^g).
Ideal idealiser_component(const Ideal& ideal, const GroupElement& g, const TranslationAction& act,
                          QuotientMethod method = QuotientMethod::automatic);

struct QuotientEntry {
  GroupElement g;
  Ideal ideal;
  bool unit;
};

/// (J : I^g) for every |g|_inf <= box, ordered lexicographically by g.
std::vector<QuotientEntry> quotient_table(const Ideal& j, const Ideal& i, const TranslationAction& act,
                                          std::int64_t box, QuotientMethod method = QuotientMethod::automatic,
                                          kernels::Exec exec = kernels::Exec::parallel);

/// b lies in the idealiser of IB exactly when each r_g is in (I : I^g).
bool idealiser_membership(const SkewElement& b, const Ideal& ideal);

/// R / IB ≅ (C/I) # K for a prime I with stabiliser K.
struct IdealiserPresentation {
  Ideal ideal;
  Lattice stabiliser;
  Lattice complement;
  /// A k for each basis vector k of K: how K acts on C/I.
  std::vector<Point> stabiliser_shifts;
  QuotientDimensions residue_ring;

  /// (I : I^g): the unit ideal on K, I elsewhere.
  Ideal component(const GroupElement& g) const;
  /// (R/IB)_g is C/I for g in K and zero otherwise.
  bool quotient_component_nonzero(const GroupElement& g) const { return stabiliser.contains(g); }
};

IdealiserPresentation presentation_R_mod_IB(const Ideal& ideal, const TranslationAction& act,
                                            unsigned probe_degree = 4);

}  // namespace idealiser

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "idealiser/diophantine.hpp"
#include "idealiser/skew.hpp"

namespace idealiser {

struct Tor1Options {
  /// Skip I ∩ J and IJ and settle vanishing by a shortcut when one applies.
  bool decide_only = false;
  unsigned probe_degree = 4;
};

/// Tor_1(C/I, C/J) ≅ (I ∩ J) / IJ.
struct Tor1Module {
  Ideal i, j;
  std::optional<Ideal> numerator;    // I ∩ J
  std::optional<Ideal> denominator;  // IJ
  bool is_zero = false;
  /// "principal", "maximal", "coprime", "trivial" or "general".
  std::string method;
  /// dim (C/IJ)_{<=k} - dim (C/(I ∩ J))_{<=k} for k = 0..probe_degree.
  std::vector<std::size_t> dimension_probe;
};

/// Shortcuts: I = <f> against a prime J is nonzero iff f ∈ J (and
/// symmetrically); a maximal I is nonzero iff 0 ≠ J ⊆ I; coprime I, J give
/// zero. When both the shortcut and the quotient are computed they are
/// checked against each other.
Tor1Module tor1(const Ideal& i, const Ideal& j, const Tor1Options& options = {});
bool tor1_vanishes(const Ideal& i, const Ideal& j);

enum class SetKind { s, t };

struct CosetClass {
  GroupElement representative;
  std::vector<GroupElement> members;
};

struct LatticeSubsetReport {
  SetKind kind = SetKind::s;
  std::string target;  // J or the point, as text
  Lattice sub;
  Lattice stabiliser;
  std::int64_t box = 0;
  std::vector<GroupElement> members;  // lexicographic
  std::vector<CosetClass> cosets;     // K-classes in order of first member
};

using SetTarget = std::variant<Ideal, Point>;

/// {h ∈ sub ∩ box | I^h ⊆ J}, or {h | p + A h ∈ V(I)} for a point target.
LatticeSubsetReport s_set_box(const Ideal& i, const SetTarget& target, const TranslationAction& act,
                              const Lattice& sub, std::int64_t box,
                              kernels::Exec exec = kernels::Exec::parallel);

/// {h ∈ sub ∩ box | Tor_1(C/I, C/J^h) ≠ 0}.
LatticeSubsetReport t_set_box(const Ideal& i, const Ideal& j, const TranslationAction& act, const Lattice& sub,
                              std::int64_t box, kernels::Exec exec = kernels::Exec::parallel);

enum class Answer { yes, no, unknown };
std::string answer_name(Answer a);

enum class Rule {
  maximal_right,
  maximal_left_critical_density,
  rational_line,
  genus_at_least_one,
  pell_conic,
  graph_curve,
  principal_conjugation,
  trivial_complement,
  box_evidence_only,
};
/// "MaximalRight", "PellConic", ...
std::string rule_name(Rule r);

struct Certificate {
  Side side;
  Rule rule;
  Answer conclusion;
  nlohmann::ordered_json payload;
};

struct SideVerdict {
  Answer answer = Answer::unknown;
  std::vector<Certificate> certificates;
};

struct Verdict {
  Answer right = Answer::unknown;
  Answer left = Answer::unknown;
  std::vector<Certificate> certificates;
};

struct DecideOptions {
  /// Complement of the stabiliser to use instead of the canonical one.
  std::optional<Lattice> complement;
  std::int64_t box = 8;
  kernels::Exec exec = kernels::Exec::parallel;
};

/// Throws DomainError unless I is flagged prime, proper and nonzero.
SideVerdict decide_right(const Ideal& i, const TranslationAction& act, const DecideOptions& options = {});
SideVerdict decide_left(const Ideal& i, const TranslationAction& act, const DecideOptions& options = {});
Verdict decide(const Ideal& i, const TranslationAction& act, const DecideOptions& options = {});

struct DensityResult {
  Answer answer = Answer::unknown;
  /// For "no": the line {p + t v} through p along a lattice direction.
  std::optional<Ideal> witness;
  Point direction;
  std::optional<GroupElement> preimage;  // A * preimage = direction
};

/// Orbit p + A Z^d in affine n-space. Throws DomainError for a finite orbit.
DensityResult critical_density_decide(std::span<const Rational> p, const TranslationAction& act);

/// <v_i (x_j - p_j) - v_j (x_i - p_i)>, the line through p along v.
Ideal line_ideal(const PolyRing& ring, std::span<const Rational> p, std::span<const Rational> v);

struct GrowthProbe {
  Side side = Side::right;
  std::string j;
  std::vector<std::int64_t> radii;
  std::vector<std::size_t> counts;
  /// "stabilising" when the last two counts agree, "growing" otherwise,
  /// "inconclusive" with fewer than two radii.
  std::string trend;
};

/// Right: g with (J : I^g) ≠ J. Left: g with Tor_1(C/I, C/J^g) ≠ 0.
/// Counts K-coset classes of such g per radius; heuristic evidence only.
GrowthProbe growth_probe(const Ideal& i, const Ideal& j, const TranslationAction& act, Side side,
                         const std::vector<std::int64_t>& radii, kernels::Exec exec = kernels::Exec::parallel);

/// The J used for the probe attached to a decided side (see decide_*).
Ideal probe_target(const Ideal& i, const TranslationAction& act, const SideVerdict& v, Side side);

/// Re-verifies the premise recorded in a certificate from its payload.
bool recheck_certificate(const Certificate& c, const Ideal& i, const TranslationAction& act);

nlohmann::ordered_json to_json(const Certificate& c);
nlohmann::ordered_json to_json(const LatticeSubsetReport& r);
nlohmann::ordered_json to_json(const GrowthProbe& p);
nlohmann::ordered_json to_json(const Lattice& l);
nlohmann::ordered_json to_json(const GroupElement& g);
nlohmann::ordered_json to_json(std::span<const Rational> p);

}  // namespace idealiser

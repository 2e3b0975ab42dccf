#pragma once

#include <memory>
#include <random>
#include <vector>

#include "idealiser/ideal.hpp"
#include "idealiser/kernels.hpp"
#include "idealiser/lattice.hpp"

namespace idealiser {

using Point = std::vector<Rational>;

/// Z^d acting on Q[x_1..x_n] by translations: generator j sends x to
/// x + column j of the n x d matrix A, so f^g(x) = f(x + A g).
class TranslationAction {
 public:
  TranslationAction(PolyRing ring, std::vector<std::vector<Rational>> matrix);
  /// A = identity, d = n.
  static TranslationAction standard(const PolyRing& ring);

  const PolyRing& ring() const { return data_->ring; }
  std::size_t n() const { return data_->ring.nvars(); }
  std::size_t d() const { return data_->d; }
  const std::vector<std::vector<Rational>>& matrix() const { return data_->matrix; }

  /// A g.
  Point shift(const GroupElement& g) const;

  friend bool operator==(const TranslationAction& a, const TranslationAction& b);

 private:
  struct Data {
    PolyRing ring;
    std::size_t d;
    std::vector<std::vector<Rational>> matrix;
  };
  std::shared_ptr<const Data> data_;
};

Poly apply_action(const Poly& f, const GroupElement& g, const TranslationAction& act);
/// Generator-wise image; flags are preserved.
Ideal act_on_ideal(const Ideal& ideal, const GroupElement& g, const TranslationAction& act);
/// p + A g, so that g.p lies in V(I) exactly when I^g ⊆ I(p).
Point act_on_point(std::span<const Rational> p, const GroupElement& g, const TranslationAction& act);

/// {g in Z^d | I^g = I}. Built from the subspace of directions v with
/// d_v(I) ⊆ I, intersected with the lattice through an integer kernel.
Lattice stabiliser(const Ideal& ideal, const TranslationAction& act);

/// Elements of the sup-norm box where "I^g = I" disagrees with membership
/// in `k`; empty for a correct stabiliser.
std::vector<GroupElement> stabiliser_box_check(const Ideal& ideal, const TranslationAction& act,
                                               const Lattice& k, std::int64_t radius,
                                               kernels::Exec exec = kernels::Exec::parallel);

/// Another complement of k, obtained from h by adding random multiples of
/// k's basis to h's basis vectors and scaling by random nonzero integers.
Lattice perturbed_complement(const Lattice& h, const Lattice& k, std::mt19937_64& rng);

/// The image lattice A(Z^d) in Q^n: a basis of it together with preimages.
struct EffectiveLattice {
  std::size_t rank = 0;
  std::vector<Point> basis;
  std::vector<GroupElement> preimages;  // A * preimages[i] = basis[i]
};
EffectiveLattice effective_lattice(const TranslationAction& act);

}  // namespace idealiser

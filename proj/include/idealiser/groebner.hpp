#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "idealiser/poly.hpp"

namespace idealiser {

/// Cap on generated S-pairs: the process-wide override when set, else
/// IDEALISER_PAIR_LIMIT, else 100000.
std::size_t default_pair_limit();
/// Process-wide override of the default cap; 0 clears it.
void set_default_pair_limit(std::size_t limit);

struct GroebnerOptions {
  std::size_t pair_limit = default_pair_limit();
};

/// Reduced Gröbner basis of the ideal generated by `generators`, computed in
/// `ring` (whose order is used). Elements are monic and sorted by increasing
/// leading monomial. Throws ResourceLimitError when the pair cap is hit.
std::vector<Poly> groebner_basis(std::span<const Poly> generators, const PolyRing& ring,
                                 const GroebnerOptions& options = {});

/// Full multivariate division remainder of f by `divisors` in f's ring order.
Poly reduce(const Poly& f, std::span<const Poly> divisors);

/// S-polynomial of two nonzero polynomials sharing a ring.
Poly s_polynomial(const Poly& f, const Poly& g);

}  // namespace idealiser

#pragma once

// Reference implementations used only by tests. They share the library's
// value types but none of its algorithms.

#include <cstdint>
#include <map>
#include <vector>

#include "idealiser/poly.hpp"

namespace oracle {

using Exps = std::vector<std::uint32_t>;
using Dense = std::map<Exps, mpq_class>;

Dense to_dense(const idealiser::Poly& f);

/// Is f in the Q-span of {m * g : g in gens, deg(m * g) <= degree}?
/// Gaussian elimination on the Macaulay matrix.
bool macaulay_member(const idealiser::Poly& f, const std::vector<idealiser::Poly>& gens, unsigned degree);

/// Remainder of f under naive division by `divisors`, using the divisors'
/// own ring order; written independently of the library's reducer.
Dense naive_remainder(const idealiser::Poly& f, const std::vector<idealiser::Poly>& divisors);

/// Every S-polynomial and every generator reduces to zero modulo `basis`.
bool buchberger_criterion(const std::vector<idealiser::Poly>& basis, const std::vector<idealiser::Poly>& gens);

/// Least (x, y) with y >= 1 and x^2 - n y^2 = 1, by scanning y.
std::pair<mpz_class, mpz_class> pell_brute_force(long n);

/// f(p) by plain substitution.
mpq_class evaluate(const idealiser::Poly& f, const std::vector<mpq_class>& p);

}  // namespace oracle

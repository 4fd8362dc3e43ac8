#ifndef ORE_POLY_FACTOR_HPP
#define ORE_POLY_FACTOR_HPP

#include <utility>
#include <vector>

#include "ore/polynomial.hpp"

namespace ore {

struct PolyFactorization {
    Rational content;                            // p = content * prod factors[i]^mult[i]
    std::vector<std::pair<Polynomial, int>> factors;  // monic irreducible over Q, sorted
};

// Factorization over Q: squarefree decomposition, then factorization modulo a
// machine-word prime, Hensel lifting and exhaustive recombination.
PolyFactorization poly_factor(const Polynomial& p);

// All integer roots with multiplicity (read off the linear factors).
std::vector<Integer> int_roots(const Polynomial& p);

// All rational roots with multiplicity.
std::vector<Rational> rational_roots(const Polynomial& p);

// All monic divisors of p (products of subsets of irreducible factors with
// multiplicities); includes 1 and the monic form of p itself. Throws if the
// divisor count would exceed `limit`.
std::vector<Polynomial> monic_divisors(const Polynomial& p, size_t limit = 1u << 14);

}  // namespace ore

#endif

#ifndef ORE_NUMTHEORY_HPP
#define ORE_NUMTHEORY_HPP

#include <map>
#include <optional>

#include "ore/rational.hpp"

namespace ore {

bool is_probable_prime(const Integer& n);

// Full factorization (trial division + Pollard rho); map prime -> exponent.
std::map<Integer, int> factor_integer(Integer n);

// n = sf * sq^2 with sf squarefree; returns (sf, sq). Sign stays on sf.
std::pair<Integer, Integer> squarefree_part(const Integer& n);

// Square root of a mod prime p (Tonelli-Shanks); nullopt if a is not a
// quadratic residue.
std::optional<Integer> sqrt_mod_prime(Integer a, const Integer& p);

// Square root of a mod squarefree m with known factorization (CRT).
std::optional<Integer> sqrt_mod_squarefree(const Integer& a, const std::map<Integer, int>& fac,
                                           const Integer& m);

}  // namespace ore

#endif

#ifndef ORE_NUMBERFIELD_HPP
#define ORE_NUMBERFIELD_HPP

#include <optional>

#include "ore/poly_factor.hpp"

namespace ore {

// Arithmetic in K = Q[y]/(f) for a monic irreducible f; elements are
// polynomials of degree < deg f.
class NumberField {
  public:
    explicit NumberField(Polynomial modulus);

    const Polynomial& modulus() const { return f_; }
    int degree() const { return f_.degree(); }

    Polynomial reduce(const Polynomial& a) const { return poly_rem(a, f_); }
    Polynomial mul(const Polynomial& a, const Polynomial& b) const { return reduce(a * b); }
    Polynomial inv(const Polynomial& a) const;

    // Square root of a in K, if one exists (Trager norm method).
    std::optional<Polynomial> sqrt(const Polynomial& a) const;

  private:
    Polynomial f_;
};

}  // namespace ore

#endif

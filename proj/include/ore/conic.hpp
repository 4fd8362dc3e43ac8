#ifndef ORE_CONIC_HPP
#define ORE_CONIC_HPP

#include <array>
#include <optional>
#include <string>

#include "ore/rational_function.hpp"

namespace ore {

using Point3 = std::array<RationalFunction, 3>;
using Mat3 = std::array<std::array<RationalFunction, 3>, 3>;

// Homogeneous quadratic C(b0,b1,b2) = b^T M b with M symmetric over Q(x).
struct ConicForm {
    Mat3 m;

    static ConicForm zero();
    bool is_zero() const;
    RationalFunction eval(const Point3& b) const;
};

// Congruence diagonalization T^T M T = diag(c1,c2,c3) with the c_i squarefree
// polynomials (square factors absorbed into T); rank < 3 shows up as zeros.
struct DiagonalConic {
    std::array<Polynomial, 3> c;
    Mat3 t;  // original point = T * diagonal point
    int rank = 0;
};
DiagonalConic diagonalize_conic(const ConicForm& conic);

// Nontrivial zero of c1 X1^2 + c2 X2^2 + c3 X3^2 over Q(x), or a certified
// NoPoint. `certificate` names the local obstruction (or the exhausted
// search bound) when no point exists.
struct ConicSolution {
    bool has_point = false;
    Point3 point;
    std::string certificate;
};
ConicSolution solve_conic(const Polynomial& c1, const Polynomial& c2, const Polynomial& c3);

// Solve the full conic b^T M b = 0; composes diagonalization, the descent
// solver and the back-transformation.
ConicSolution solve_conic_form(const ConicForm& conic);

// Integer Legendre descent: nontrivial zero of a x^2 + b y^2 + c z^2.
struct IntConicSolution {
    bool has_point = false;
    std::array<Integer, 3> point;
    std::string certificate;
};
IntConicSolution solve_conic_integers(const Integer& a, const Integer& b, const Integer& c);

}  // namespace ore

#endif

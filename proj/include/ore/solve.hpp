#ifndef ORE_SOLVE_HPP
#define ORE_SOLVE_HPP

#include <utility>
#include <vector>

#include "ore/constructions.hpp"
#include "ore/ore_operator.hpp"
#include "ore/poly_factor.hpp"

namespace ore {

// Q-basis of polynomial solutions of L(u) = 0. Requires a_0, a_n != 0.
std::vector<Polynomial> poly_solutions(const OreOperator& l);

// Q-basis of rational solutions: Abramov universal denominator, then
// polynomial solutions of the transformed operator.
std::vector<RationalFunction> rational_solutions(const OreOperator& l);

// Universal denominator u: every rational solution of L has denominator
// dividing u (exposed for tests).
Polynomial universal_denominator(const OreOperator& l);

// Parameterized solver: all pairs (g, lambda) with L(g) = sum lambda_i rhs_i.
// The result is a Q-basis of the joint solution space.
struct ParamSolution {
    RationalFunction g;
    std::vector<Rational> lambda;
};
std::vector<ParamSolution> rational_solutions_param(const OreOperator& l,
                                                    const std::vector<RationalFunction>& rhs);

// First-order right factor tau - r of L.
struct HypergeometricFactor {
    RationalFunction r;
    OreOperator factor() const {
        return OreOperator(std::vector<RationalFunction>{-r, RationalFunction(1)});
    }
};

// All monic first-order right factors over Q(x) (Petkovsek-style candidate
// enumeration). When a candidate class carries a whole family of factors
// (multi-dimensional polynomial part), one representative per basis element
// is returned.
std::vector<HypergeometricFactor> hypergeometric_right_factors(const OreOperator& l);

// Basis of Hom_D(D/DL1, D/DL2) = {G : ord G < ord L2, L1 G = 0 mod L2};
// elements map V(L2) into V(L1).
struct HomBasis {
    std::vector<OreOperator> elements;
    OreOperator source;  // L1
    OreOperator target;  // L2
    bool trivial() const { return elements.empty(); }
};
HomBasis hom_space(const OreOperator& l1, const OreOperator& l2);

// Right factors of L found through the eigenring End(D/DL): for each
// non-scalar endomorphism E and each rational eigenvalue lambda of its
// minimal polynomial, GCRD(L, E - lambda) is a candidate factor.
struct EigenringSplit {
    std::vector<OreOperator> factors;  // nontrivial monic right factors, sorted
    bool extension_needed = false;     // some eigenvalue lies outside Q
};
EigenringSplit eigenring_split(const OreOperator& l);

// Apply an operator to a rational function (sequence-free semantics).
RationalFunction apply_operator(const OreOperator& l, const RationalFunction& f);

// Clear denominators: returns polynomial coefficients p_i with
// sum p_i tau^i = d * L for a polynomial d, made integer-primitive.
std::vector<Polynomial> polynomial_coefficients(const OreOperator& l);

}  // namespace ore

#endif

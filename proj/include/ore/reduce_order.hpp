#ifndef ORE_REDUCE_ORDER_HPP
#define ORE_REDUCE_ORDER_HPP

#include <array>
#include <optional>

#include "ore/absfact.hpp"
#include "ore/conic.hpp"
#include "ore/constructions.hpp"
#include "ore/solve.hpp"

namespace ore {

// Vanishes exactly when the symmetric square of the monic third-order
// operator drops to order <= 5: determinant of the 6x6 matrix expressing
// tau^k(u^2), k = 0..5, over the monomials u(x+i)u(x+j).
RationalFunction sym_square_invariant(const OreOperator& l3);

enum class SimpleCase { A, B, C, None };

struct SimpleCaseResult {
    SimpleCase kind = SimpleCase::None;
    RationalFunction c0;                    // case A
    std::array<OreOperator, 2> factors;     // case B: (tau + c2), (tau^2 + c1(x-1))
    RationalFunction b, r;                  // case C: L3 = (tau^2+tau+b) s2 s (tau - r)
};

// Theorem-level decomposition of a monic order-3 operator.
SimpleCaseResult decompose_simple(const OreOperator& l3);

// G_2 = sum a_k tau^k acting on V(L3^s2), with each a_k a quadratic form in
// the gauge coefficients (b0, b1, b2).
struct G2Ansatz {
    std::array<ConicForm, 6> coeff;

    // Substitute a concrete gauge coefficient vector into the ansatz.
    OreOperator instantiate(const Point3& b) const;
};
G2Ansatz build_g2_ansatz(const OreOperator& l3);

// Remainder of G_2 right-divided by the monic order-1 factor L1, as a conic
// in (b0,b1,b2) with polynomial matrix entries.
ConicForm conic_from_kernel(const G2Ansatz& g2, const OreOperator& l1);

enum class ReduceVerdict { Solved, Not2Solvable };
enum class ReduceFailure { None, NoOrder1Factor, AllConicsUnsolvable };

struct ReduceOrderResult {
    ReduceVerdict verdict = ReduceVerdict::Not2Solvable;
    ReduceFailure reason = ReduceFailure::None;
    bool conditional = false;  // AllConicsUnsolvable is reported without a
                               // completeness proof
    GaugeMap gauge;            // source L3, target L_G
    OreOperator l2;            // tau^2 + tau + b
    RationalFunction r;
    OreOperator lg;            // = l2 s2 s (tau - r), monic
};

// The full pipeline: requires an absolutely irreducible operator of order 3.
ReduceOrderResult reduce_order(const OreOperator& l3);

}  // namespace ore

#endif

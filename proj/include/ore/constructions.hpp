#ifndef ORE_CONSTRUCTIONS_HPP
#define ORE_CONSTRUCTIONS_HPP

#include "ore/ore_operator.hpp"

namespace ore {

// Minimal operator of 1 (x) 1 in (D/DA) (x) (D/DB): annihilates all products
// of a solution of A with a solution of B.
OreOperator symmetric_product(const OreOperator& a, const OreOperator& b);
OreOperator symmetric_square(const OreOperator& l);

// The m-th section operator L^(m): minimal element of D_m n DL pulled back
// through tau^m -> tau, x -> m x. Requires a full operator (a_0, a_n != 0).
OreOperator section_operator(const OreOperator& l, int m);

// Minimal operator with solution space G(V(L)); equals LCLM(L, G) right-
// divided by G. When GCRD(G, L) != 1 the order drops accordingly.
OreOperator apply_gauge(const OreOperator& l, const OreOperator& g);

// Gauge transformation between source (L2) and target (L1) together with the
// certified inverse from the extended Euclidean algorithm.
struct GaugeMap {
    OreOperator g;        // maps V(source) -> V(target), ord(g) < ord(source)
    OreOperator source;   // L2
    OreOperator target;   // L1 = apply_gauge(source, g), monic
    OreOperator inverse;  // g~ with g~ g = 1 (mod source), reduced mod target

    // Checks every certificate exactly; throws on violation.
    void validate() const;
};

GaugeMap invert_gauge(const OreOperator& g, const OreOperator& l2);

template <class F>
OrePoly<F> apply_gauge_t(const OrePoly<F>& l, const OrePoly<F>& g) {
    if (g.is_zero()) throw error("gauge with zero operator");
    OrePoly<F> m = lclm(l, g);
    auto [q, r] = rdivide(m, g);
    if (!r.is_zero()) throw error("internal: LCLM(L, G) not divisible by G");
    return q.monic();
}

}  // namespace ore

#endif

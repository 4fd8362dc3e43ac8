#ifndef ORE_ABSFACT_HPP
#define ORE_ABSFACT_HPP

#include "ore/quadext.hpp"
#include "ore/solve.hpp"

namespace ore {

using QuadOreOperator = OrePoly<QuadExtElement>;

enum class AbsVerdict { AbsolutelyIrreducible, Factored };

struct AbsFactorResult {
    AbsVerdict verdict = AbsVerdict::AbsolutelyIrreducible;
    int p = 0;                         // prime, when Factored
    std::vector<OreOperator> factors;  // right factors of L^(p); {1} for the
                                       // order-drop path
    bool extension_needed = false;     // an eigenring split was only available
                                       // over an extension of Q
    bool step_1b() const {
        return verdict == AbsVerdict::Factored && factors.size() == 1 &&
               factors[0] == OreOperator::one();
    }
};

// Reducibility witness carried by the precondition error.
struct ReducibleError : error {
    explicit ReducibleError(const OreOperator& w)
        : error("input reducible; right factor " + w.to_string()), witness(w) {}
    OreOperator witness;
};

// Throws ReducibleError if the heuristic irreducibility check (first-order
// factors, then eigenring) finds a factor.
void check_irreducible(const OreOperator& l);

// For each prime p | ord(L), in increasing order: compute the section
// operator L^(p); if its order drops return [p, {1}]; otherwise split via the
// eigenring, keeping factors of order ord(L)/p.
AbsFactorResult abs_factorization(const OreOperator& l);

// Hom-based test: p = 2 uses L~ = L with tau -> -tau over Q; odd primes are
// routed through the section/eigenring path, which needs no roots of unity.
bool abs_irreducibility(const OreOperator& l);

// p = 2 factor extraction from a nonzero hom witness G in Hom(D/DL~, D/DL).
// Returns c = remainder of G~G mod L (a constant), and the annihilators of
// the images of 1 +- G/sqrt(c), pulled back through tau^2 -> tau, x -> 2x.
// When c is not a rational square the factors live over Q(sqrt(c)).
struct SubfactorExtraction {
    Rational c;
    bool needs_extension = false;
    std::vector<OreOperator> factors;          // when c is a square in Q
    std::vector<QuadOreOperator> ext_factors;  // otherwise
};
SubfactorExtraction extract_subfactors_p2(const OreOperator& l, const OreOperator& g);

std::vector<int> prime_factors_of_order(int n);

}  // namespace ore

#endif

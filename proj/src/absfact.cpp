#include "ore/absfact.hpp"

#include <algorithm>

namespace ore {

namespace {

// Inverse of psi_m on an operator supported on powers of tau^m:
// tau^(m k) -> tau^k, x -> m x.
template <class F>
OrePoly<F> psi_inverse(const OrePoly<F>& l, int m) {
    std::vector<F> c;
    for (int i = 0; i <= l.order(); ++i) {
        F ci = l.coeff(i);
        if (i % m != 0) {
            if (!elem_is_zero(ci)) throw error("operator not supported on powers of tau^m");
            continue;
        }
        c.push_back(ci.scaled_arg(Rational(m)));
    }
    return OrePoly<F>(std::move(c));
}

// Keep factors of the wanted order; factors that came out as sums of several
// isotypic pieces are split further by a nested eigenring pass.
void refine_factors(const std::vector<OreOperator>& in, int want_order, int depth,
                    std::vector<OreOperator>& out, bool& extension) {
    for (const OreOperator& f : in) {
        if (f.order() == want_order) {
            out.push_back(f);
        } else if (f.order() > want_order && depth > 0 && f.is_full()) {
            EigenringSplit inner = eigenring_split(f);
            extension |= inner.extension_needed;
            refine_factors(inner.factors, want_order, depth - 1, out, extension);
        }
    }
}

}  // namespace

std::vector<int> prime_factors_of_order(int n) {
    std::vector<int> ps;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

void check_irreducible(const OreOperator& l) {
    if (l.order() < 1) throw error("operator of order < 1");
    if (!l.is_full()) {
        // tau itself is a right factor when the trailing coefficient vanishes
        throw ReducibleError(OreOperator::tau());
    }
    if (l.order() == 1) return;
    auto hyp = hypergeometric_right_factors(l);
    if (!hyp.empty()) throw ReducibleError(hyp.front().factor());
    EigenringSplit es = eigenring_split(l);
    if (!es.factors.empty()) throw ReducibleError(es.factors.front());
}

AbsFactorResult abs_factorization(const OreOperator& l) {
    check_irreducible(l);
    AbsFactorResult result;
    for (int p : prime_factors_of_order(l.order())) {
        OreOperator lp = section_operator(l, p);
        if (lp.order() < l.order()) {
            result.verdict = AbsVerdict::Factored;
            result.p = p;
            result.factors = {OreOperator::one()};
            return result;
        }
        EigenringSplit es = eigenring_split(lp);
        result.extension_needed |= es.extension_needed;
        std::vector<OreOperator> keep;
        refine_factors(es.factors, l.order() / p, 2, keep, result.extension_needed);
        std::sort(keep.begin(), keep.end(), [](const OreOperator& a, const OreOperator& b) {
            return a.to_string() < b.to_string();
        });
        keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
        if (!keep.empty()) {
            result.verdict = AbsVerdict::Factored;
            result.p = p;
            result.factors = std::move(keep);
            return result;
        }
    }
    result.verdict = AbsVerdict::AbsolutelyIrreducible;
    return result;
}

bool abs_irreducibility(const OreOperator& l) {
    check_irreducible(l);
    for (int p : prime_factors_of_order(l.order())) {
        if (p == 2) {
            OreOperator ltil = l.negate_tau();
            if (!hom_space(ltil, l).trivial()) return false;
        } else {
            // Q(zeta_p) coefficients would be needed for the hom route; the
            // section/eigenring route decides the same question over Q.
            OreOperator lp = section_operator(l, p);
            if (lp.order() < l.order()) return false;
            EigenringSplit es = eigenring_split(lp);
            if (!es.factors.empty()) return false;
        }
    }
    return true;
}

SubfactorExtraction extract_subfactors_p2(const OreOperator& l, const OreOperator& g) {
    if (g.is_zero()) throw error("zero hom witness");
    OreOperator ltil = l.negate_tau();
    if (!rem(ltil * g, l).is_zero()) throw error("witness is not a hom element");
    OreOperator gtil = g.negate_tau();
    OreOperator prod = rem(gtil * g, l);
    if (prod.is_zero() || prod.order() != 0 || !prod.coeff(0).is_constant())
        throw error("input operator reducible");
    SubfactorExtraction result;
    result.c = prod.coeff(0).constant_value();

    if (auto s = rat_sqrt_exact(result.c)) {
        OreOperator scaled = OreOperator(RationalFunction(1 / *s)) * g;
        for (int sign = 1; sign >= -1; sign -= 2) {
            OreOperator m = OreOperator::one() + (sign > 0 ? scaled : -scaled);
            OreOperator f;
            if (m.is_zero()) {
                f = OreOperator::one();
            } else {
                f = apply_gauge(l, m);
                if (!f.even_powers_only())
                    throw error("internal: extracted factor not in D_2");
                f = psi_inverse(f, 2);
            }
            result.factors.push_back(f);
        }
    } else {
        result.needs_extension = true;
        QuadExtElement inv_sqrt(RationalFunction(0), RationalFunction(Rational(1) / result.c),
                                result.c);
        std::vector<QuadExtElement> gc, lc;
        for (int i = 0; i <= g.order(); ++i) gc.push_back(inv_sqrt * QuadExtElement(g.coeff(i)));
        for (int i = 0; i <= l.order(); ++i) lc.emplace_back(l.coeff(i));
        QuadOreOperator gk(std::move(gc)), lk(std::move(lc));
        for (int sign = 1; sign >= -1; sign -= 2) {
            QuadOreOperator m = QuadOreOperator::one() + (sign > 0 ? gk : -gk);
            QuadOreOperator f = apply_gauge_t(lk, m);
            if (!f.even_powers_only())
                throw error("internal: extracted factor not in D_2");
            result.ext_factors.push_back(psi_inverse(f, 2));
        }
    }
    return result;
}

}  // namespace ore

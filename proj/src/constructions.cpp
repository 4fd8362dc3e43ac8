#include "ore/constructions.hpp"

namespace ore {

OreOperator symmetric_product(const OreOperator& a, const OreOperator& b) {
    if (a.is_zero() || b.is_zero()) throw error("symmetric product with zero operator");
    int na = std::max(a.order(), 1);
    int nb = std::max(b.order(), 1);
    int cap = a.order() * b.order() + 1;
    if (cap < 1) cap = 1;
    Mat<RationalFunction> ra = tau_powers_mod(a, cap + 1);
    Mat<RationalFunction> rb = tau_powers_mod(b, cap + 1);
    DependenceFinder<RationalFunction> finder(static_cast<size_t>(na) * nb);
    for (int k = 0; k <= cap; ++k) {
        Vec<RationalFunction> w(static_cast<size_t>(na) * nb, RationalFunction(0));
        for (int i = 0; i < na; ++i) {
            if (ra[k][i].is_zero()) continue;
            for (int j = 0; j < nb; ++j) {
                if (rb[k][j].is_zero()) continue;
                w[static_cast<size_t>(i) * nb + j] = ra[k][i] * rb[k][j];
            }
        }
        if (auto dep = finder.insert(std::move(w), k))
            return OreOperator(std::move(*dep));
    }
    throw error("internal: symmetric product dependence not found");
}

OreOperator symmetric_square(const OreOperator& l) { return symmetric_product(l, l); }

OreOperator section_operator(const OreOperator& l, int m) {
    if (m <= 0) throw error("section index must be positive");
    if (l.is_zero()) throw error("section of zero operator");
    if (l.order() >= 1 && l.coeff(0).is_zero())
        throw error("trailing coefficient vanishes");
    int n = std::max(l.order(), 1);
    Mat<RationalFunction> rows = tau_powers_mod(l, m * l.order() + 1);
    DependenceFinder<RationalFunction> finder(n);
    for (int i = 0; i <= l.order(); ++i) {
        if (auto dep = finder.insert(rows[static_cast<size_t>(m) * i], i)) {
            std::vector<RationalFunction> c(dep->size());
            for (size_t k = 0; k < dep->size(); ++k)
                c[k] = (*dep)[k].scaled_arg(Rational(m));
            return OreOperator(std::move(c)).monic();
        }
    }
    throw error("internal: section dependence not found");
}

OreOperator apply_gauge(const OreOperator& l, const OreOperator& g) {
    return apply_gauge_t(l, g);
}

void GaugeMap::validate() const {
    if (g.order() >= source.order()) throw error("gauge map order not below source order");
    if (!rem(target * g, source).is_zero()) throw error("gauge certificate L1*G = 0 mod L2 fails");
    if (gcrd(g, source) != OreOperator::one()) throw error("gauge map shares a factor with source");
    if (!rem(inverse * g - OreOperator::one(), source).is_zero())
        throw error("gauge inverse certificate fails on source side");
    if (!rem(g * inverse - OreOperator::one(), target).is_zero())
        throw error("gauge inverse certificate fails on target side");
}

GaugeMap invert_gauge(const OreOperator& g, const OreOperator& l2) {
    if (g.is_zero()) throw error("gauge map not invertible");
    OreOperator gr = rem(g, l2);
    if (gr.is_zero()) throw error("gauge map not invertible");
    auto [d, u, v] = gcrd_ext(gr, l2);
    if (d != OreOperator::one()) throw error("gauge map not invertible");
    GaugeMap result;
    result.g = gr;
    result.source = l2.monic();
    result.target = apply_gauge(l2, gr);
    result.inverse = rem(u, result.target);
    return result;
}

}  // namespace ore

#include "ore/numberfield.hpp"

namespace ore {

NumberField::NumberField(Polynomial modulus) : f_(modulus.monic()) {
    if (f_.degree() < 1) throw error("number field modulus must be nonconstant");
}

Polynomial NumberField::inv(const Polynomial& a) const {
    Polynomial r0 = f_, r1 = reduce(a);
    if (r1.is_zero()) throw error("inverse of zero in number field");
    Polynomial s0, s1(Rational(1));  // coefficients of a
    while (r1.degree() > 0) {
        auto [q, r2] = poly_divmod(r0, r1);
        Polynomial s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        if (r1.is_zero()) throw error("modulus not irreducible in number field");
    }
    return reduce(s1 * (1 / r1.coeff(0)));
}

namespace {

using KPoly = std::vector<Polynomial>;  // polynomial over K, ascending

void ktrim(KPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

KPoly kmul(const NumberField& k, const KPoly& a, const KPoly& b) {
    if (a.empty() || b.empty()) return {};
    KPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            if (!a[i].is_zero() && !b[j].is_zero()) r[i + j] += k.mul(a[i], b[j]);
    ktrim(r);
    return r;
}

KPoly krem(const NumberField& k, KPoly a, const KPoly& b) {
    if (b.empty()) throw error("K[z] division by zero");
    int db = static_cast<int>(b.size()) - 1;
    Polynomial lbi = k.inv(b.back());
    while (static_cast<int>(a.size()) - 1 >= db) {
        int sh = static_cast<int>(a.size()) - 1 - db;
        Polynomial f = k.mul(a.back(), lbi);
        for (int i = 0; i <= db; ++i) a[sh + i] = k.reduce(a[sh + i] - f * b[i]);
        ktrim(a);
        if (a.empty()) break;
    }
    return a;
}

KPoly kmonic(const NumberField& k, KPoly a) {
    if (a.empty()) return a;
    Polynomial inv = k.inv(a.back());
    for (auto& c : a) c = k.mul(c, inv);
    return a;
}

KPoly kgcd(const NumberField& k, KPoly a, KPoly b) {
    while (!b.empty()) {
        KPoly r = krem(k, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return kmonic(k, a);
}

Polynomial lagrange_interp(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    Polynomial acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        Polynomial li(Rational(1));
        Rational denom = 1;
        for (size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            li *= Polynomial({-xs[j], Rational(1)});
            denom *= xs[i] - xs[j];
        }
        acc += li * (ys[i] / denom);
    }
    return acc;
}

}  // namespace

std::optional<Polynomial> NumberField::sqrt(const Polynomial& a_in) const {
    Polynomial a = reduce(a_in);
    if (a.is_zero()) return Polynomial();
    if (a.degree() == 0) {
        if (auto r = rat_sqrt_exact(a.coeff(0))) return Polynomial(*r);
    }
    int n = degree();
    for (long k = 0; k <= 3 * n * n + 4; ++k) {
        // G(z) = (z - k*alpha)^2 - a, alpha the class of y.
        Polynomial alpha = Polynomial::x();
        Polynomial c1 = reduce(alpha * Rational(-2 * k));
        Polynomial c0 = reduce(alpha * alpha * Rational(k * k) - a);
        // Norm via interpolation in z.
        int nd = 2 * n;
        std::vector<Rational> xs, ys;
        for (int j = 0; j <= nd; ++j) {
            Rational z(j);
            Polynomial gz = Polynomial(z * z) + c1 * z + c0;  // in y
            ys.push_back(poly_resultant(f_, gz));
            xs.push_back(z);
        }
        Polynomial norm = lagrange_interp(xs, ys);
        if (norm.is_zero()) continue;
        if (poly_gcd(norm, norm.derivative()).degree() != 0) continue;  // not squarefree
        auto fac = poly_factor(norm);
        KPoly g = {c0, c1, Polynomial(Rational(1))};
        for (const auto& [q, mult] : fac.factors) {
            // q(z) as K[z]
            KPoly qk;
            for (int i = 0; i <= q.degree(); ++i) qk.push_back(Polynomial(q.coeff(i)));
            KPoly h = kgcd(*this, g, qk);
            if (h.size() == 2) {
                // root of G is -h[0]; root of g(z) = G(z + k*alpha) is root - k*alpha
                Polynomial s = reduce(-h[0] - alpha * Rational(k));
                if (reduce(s * s - a).is_zero()) return s;
                throw error("internal: number field sqrt verification failed");
            }
        }
        return std::nullopt;  // squarefree norm with no degree-1 factor over K
    }
    throw error("internal: no squarefree norm shift found");
}

}  // namespace ore

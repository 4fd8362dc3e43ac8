#ifndef ORE_ORE_OPERATOR_HPP
#define ORE_ORE_OPERATOR_HPP

#include <iosfwd>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ore/linalg.hpp"
#include "ore/rational_function.hpp"

namespace ore {

// Element of F[tau] with the twist tau * f = shift(f, 1) * tau, coefficients
// ascending by power of tau. The zero operator has an empty coefficient list;
// trailing (tau^0) coefficients may vanish, e.g. for gauge maps.
template <class F>
class OrePoly {
  public:
    OrePoly() = default;
    OrePoly(const F& c) { if (!elem_is_zero(c)) coeffs_ = {c}; }
    explicit OrePoly(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static OrePoly tau() { return OrePoly(std::vector<F>{F(0), F(1)}); }
    static OrePoly one() { return OrePoly(F(1)); }
    // c * tau^k
    static OrePoly monomial(const F& c, int k) {
        if (elem_is_zero(c)) return {};
        std::vector<F> v(k + 1, F(0));
        v[k] = c;
        return OrePoly(std::move(v));
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const F& lc() const {
        if (coeffs_.empty()) throw error("leading coefficient of zero operator");
        return coeffs_.back();
    }
    F coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : F(0);
    }
    const std::vector<F>& coeffs() const { return coeffs_; }

    // A full operator has nonzero leading and trailing coefficients.
    bool is_full() const { return !is_zero() && !elem_is_zero(coeffs_[0]); }

    OrePoly operator-() const {
        OrePoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    OrePoly& operator+=(const OrePoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    OrePoly& operator-=(const OrePoly& o) { return *this += -o; }

    friend OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
    friend OrePoly operator-(OrePoly a, const OrePoly& b) { return a -= b; }

    // Noncommutative product with tau^i f = shift(f, i) tau^i.
    friend OrePoly operator*(const OrePoly& a, const OrePoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> r(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (elem_is_zero(a.coeffs_[i])) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (elem_is_zero(b.coeffs_[j])) continue;
                r[i + j] += a.coeffs_[i] * shift1(b.coeffs_[j], static_cast<long>(i));
            }
        }
        return OrePoly(std::move(r));
    }
    OrePoly& operator*=(const OrePoly& o) { return *this = *this * o; }

    friend OrePoly operator*(const F& c, const OrePoly& a) { return OrePoly(c) * a; }

    friend bool operator==(const OrePoly& a, const OrePoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const OrePoly& a, const OrePoly& b) { return !(a == b); }

    // Left-divide by the leading coefficient.
    OrePoly monic() const {
        if (is_zero()) return {};
        OrePoly r = *this;
        F inv = F(1) / lc();
        for (auto& c : r.coeffs_) c = inv * c;
        return r;
    }

    // Coefficient substitution x -> x + q.
    OrePoly shifted_x(const Rational& q) const {
        OrePoly r = *this;
        for (auto& c : r.coeffs_) c = c.shifted(q);
        return r;
    }

    // tau -> -tau (coefficients of odd powers are negated).
    OrePoly negate_tau() const {
        OrePoly r = *this;
        for (size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
        return r;
    }

    bool even_powers_only() const {
        for (size_t i = 1; i < coeffs_.size(); i += 2)
            if (!elem_is_zero(coeffs_[i])) return false;
        return true;
    }

    // Apply to an element of the coefficient field: L(f) = sum a_i shift(f, i).
    F apply(const F& f) const {
        F r(0);
        for (size_t i = 0; i < coeffs_.size(); ++i)
            if (!elem_is_zero(coeffs_[i])) r += coeffs_[i] * shift1(f, static_cast<long>(i));
        return r;
    }

    std::string to_string(const std::string& var = "x", const std::string& tau_sym = "t") const;

  private:
    void trim() {
        while (!coeffs_.empty() && elem_is_zero(coeffs_.back())) coeffs_.pop_back();
    }
    std::vector<F> coeffs_;
};

using OreOperator = OrePoly<RationalFunction>;

// Right division: a = q * b + r with ord(r) < ord(b).
template <class F>
std::pair<OrePoly<F>, OrePoly<F>> rdivide(const OrePoly<F>& a, const OrePoly<F>& b) {
    if (b.is_zero()) throw error("right division by zero operator");
    OrePoly<F> q, r = a;
    while (!r.is_zero() && r.order() >= b.order()) {
        int k = r.order() - b.order();
        F f = r.lc() / shift1(b.lc(), k);
        OrePoly<F> m = OrePoly<F>::monomial(f, k);
        q += m;
        r -= m * b;
    }
    return {q, r};
}

template <class F>
OrePoly<F> rem(const OrePoly<F>& a, const OrePoly<F>& b) {
    return rdivide(a, b).second;
}

// Exact right quotient; throws on nonzero remainder.
template <class F>
OrePoly<F> rquot_exact(const OrePoly<F>& a, const OrePoly<F>& b) {
    auto [q, r] = rdivide(a, b);
    if (!r.is_zero()) throw error("inexact right division of operators");
    return q;
}

// Extended Euclidean algorithm on the right: returns monic G with
// u*a + v*b = G and G right-dividing both a and b.
template <class F>
std::tuple<OrePoly<F>, OrePoly<F>, OrePoly<F>> gcrd_ext(const OrePoly<F>& a, const OrePoly<F>& b) {
    if (a.is_zero() && b.is_zero()) throw error("gcrd of two zero operators");
    // Seed with (b, a) so that gcrd_ext(L, L) puts the certificate on the
    // first cofactor.
    OrePoly<F> r0 = b, r1 = a;
    OrePoly<F> u0(F(0)), u1(F(1));  // coefficients of a
    OrePoly<F> v0(F(1)), v1(F(0));  // coefficients of b
    if (r1.is_zero()) {
        std::swap(r0, r1);
        std::swap(u0, u1);
        std::swap(v0, v1);
    }
    while (true) {
        auto [q, r2] = rdivide(r0, r1);
        if (r2.is_zero()) break;
        OrePoly<F> u2 = u0 - q * u1;
        OrePoly<F> v2 = v0 - q * v1;
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    F inv = F(1) / r1.lc();
    return {r1.monic(), OrePoly<F>(inv) * u1, OrePoly<F>(inv) * v1};
}

template <class F>
OrePoly<F> gcrd(const OrePoly<F>& a, const OrePoly<F>& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    return std::get<0>(gcrd_ext(a, b));
}

namespace detail {

// LCLM by the extended Euclidean scheme: run Euclid to remainder zero and
// read the common left multiple off the cofactors.
template <class F>
OrePoly<F> lclm_euclid(const OrePoly<F>& a, const OrePoly<F>& b, long degree_cap, bool* blew_up) {
    OrePoly<F> r0 = b, r1 = a;
    OrePoly<F> u0(F(0)), u1(F(1));
    while (true) {
        auto [q, r2] = rdivide(r0, r1);
        OrePoly<F> u2 = u0 - q * u1;
        if (blew_up && degree_cap > 0) {
            long worst = 0;
            for (const auto& c : u2.coeffs()) worst = std::max(worst, pivot_complexity(c));
            if (worst > degree_cap) {
                *blew_up = true;
                return {};
            }
        }
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
        if (r1.is_zero()) break;
    }
    // u1 * a + v1 * b = 0, so u1 * a is the LCLM.
    return (u1 * a).monic();
}

// Fallback: smallest k with tau^0..tau^k dependent in D/Da (+) D/Db.
template <class F>
OrePoly<F> lclm_ansatz(const OrePoly<F>& a, const OrePoly<F>& b);

}  // namespace detail

// tau^k mod (D * L) for k = 0..count-1, each as a coefficient row of length
// ord(L). Requires L nonzero.
template <class F>
Mat<F> tau_powers_mod(const OrePoly<F>& l, int count) {
    int n = l.order();
    if (n < 0) throw error("reduction modulo zero operator");
    Mat<F> rows;
    rows.reserve(count);
    for (int k = 0; k < count; ++k) {
        Vec<F> row(std::max(n, 1), F(0));
        if (k == 0) {
            if (n > 0) row[0] = F(1);
            // n == 0: tau^0 reduces to 0 modulo a unit
        } else {
            const Vec<F>& prev = rows.back();
            // multiply by tau: shift coefficients and bump the exponent
            Vec<F> up(n + 1, F(0));
            for (int i = 0; i < n; ++i)
                if (!elem_is_zero(prev[i])) up[i + 1] = shift1(prev[i], 1);
            if (n > 0 && !elem_is_zero(up[n])) {
                F f = up[n] / l.lc();
                for (int i = 0; i < n; ++i) up[i] -= f * l.coeff(i);
            }
            up.resize(std::max(n, 1));
            row = std::move(up);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// Reduce an arbitrary operator modulo D * L.
template <class F>
OrePoly<F> reduce_mod(const OrePoly<F>& a, const OrePoly<F>& l) {
    return rem(a, l);
}

template <class F>
OrePoly<F> lclm(const OrePoly<F>& a, const OrePoly<F>& b) {
    if (a.is_zero() || b.is_zero()) throw error("lclm of zero operator");
    long cap = 40 + 8L * (a.order() + b.order());
    for (const auto& c : a.coeffs()) cap += pivot_complexity(c);
    for (const auto& c : b.coeffs()) cap += pivot_complexity(c);
    bool blew_up = false;
    OrePoly<F> m = detail::lclm_euclid(a, b, 6 * cap, &blew_up);
    if (!blew_up) return m;
    return detail::lclm_ansatz(a, b);
}

namespace detail {

template <class F>
OrePoly<F> lclm_ansatz(const OrePoly<F>& a, const OrePoly<F>& b) {
    int na = std::max(a.order(), 1), nb = std::max(b.order(), 1);
    Mat<F> ra = tau_powers_mod(a, na + nb + 1);
    Mat<F> rb = tau_powers_mod(b, na + nb + 1);
    DependenceFinder<F> finder(na + nb);
    for (int k = 0; k <= na + nb; ++k) {
        Vec<F> v = ra[k];
        v.insert(v.end(), rb[k].begin(), rb[k].end());
        if (auto dep = finder.insert(std::move(v), k)) {
            return OrePoly<F>(std::move(*dep));
        }
    }
    throw error("lclm ansatz found no dependence");  // unreachable
}

}  // namespace detail

template <class F>
std::string OrePoly<F>::to_string(const std::string& var, const std::string& tau_sym) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = order(); k >= 0; --k) {
        F c = coeff(k);
        if (elem_is_zero(c)) continue;
        std::string cs = c.to_string(var);
        bool neg = !cs.empty() && cs[0] == '-' && cs.find(' ') == std::string::npos &&
                   cs.find('(') == std::string::npos;
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool needs_parens = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
        std::string body = needs_parens ? "(" + cs + ")" : cs;
        if (k == 0) {
            os << body;
        } else if (cs == "1") {
            os << tau_sym;
            if (k > 1) os << "^" << k;
        } else {
            os << body << "*" << tau_sym;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

template <class F>
std::ostream& operator<<(std::ostream& os, const OrePoly<F>& l) {
    return os << l.to_string();
}

}  // namespace ore

#endif

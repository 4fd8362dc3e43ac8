#include "ore/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include "modp_poly.hpp"
#include <sstream>

namespace ore {

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& c, int k) {
    if (c == 0) return {};
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return Polynomial(std::move(v));
}

const Rational& Polynomial::lc() const {
    if (coeffs_.empty()) throw error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& v) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // integer convolution; the rational content is reattached afterwards
    IntegerSplit sa = integer_split(a), sb = integer_split(b);
    std::vector<Integer> r(sa.primitive.size() + sb.primitive.size() - 1, Integer(0));
    for (size_t i = 0; i < sa.primitive.size(); ++i) {
        if (sa.primitive[i] == 0) continue;
        for (size_t j = 0; j < sb.primitive.size(); ++j)
            if (sb.primitive[j] != 0) r[i + j] += sa.primitive[i] * sb.primitive[j];
    }
    Polynomial out = from_integer_coeffs(r);
    Rational c = sa.content * sb.content;
    if (c != 1) out *= c;
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Polynomial Polynomial::pow(long e) const {
    if (e < 0) throw error("negative polynomial power");
    Polynomial r(Rational(1)), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> r(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(r));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    Polynomial r = *this;
    Rational inv = 1 / lc();
    for (auto& c : r.coeffs_) c *= inv;
    return r;
}

Polynomial Polynomial::shifted(const Rational& q) const {
    // Synthetic Taylor shift: repeated Horner with x -> x + q.
    if (q == 0 || coeffs_.size() <= 1) return *this;
    if (is_integer(q)) {
        IntegerSplit s = integer_split(*this);
        Integer step = q.get_num();
        int n = static_cast<int>(s.primitive.size());
        for (int i = 0; i < n - 1; ++i)
            for (int j = n - 2; j >= i; --j) s.primitive[j] += step * s.primitive[j + 1];
        Polynomial out = from_integer_coeffs(s.primitive);
        if (s.content != 1) out *= s.content;
        return out;
    }
    std::vector<Rational> c = coeffs_;
    int n = static_cast<int>(c.size());
    for (int i = 0; i < n - 1; ++i)
        for (int j = n - 2; j >= i; --j) c[j] += q * c[j + 1];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled_arg(const Rational& m) const {
    std::vector<Rational> c = coeffs_;
    Rational p = 1;
    for (size_t i = 1; i < c.size(); ++i) {
        p *= m;
        c[i] *= p;
    }
    return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw error("polynomial division by zero");
    Polynomial r = a;
    if (a.degree() < b.degree()) return {Polynomial(), r};
    std::vector<Rational> q(a.degree() - b.degree() + 1, Rational(0));
    Rational binv = 1 / b.lc();
    std::vector<Rational> rc(r.coeffs().begin(), r.coeffs().end());
    int db = b.degree();
    for (int k = static_cast<int>(rc.size()) - 1 - db; k >= 0; --k) {
        Rational f = rc[k + db] * binv;
        if (f == 0) continue;
        q[k] = f;
        for (int i = 0; i <= db; ++i) rc[k + i] -= f * b.coeff(i);
    }
    rc.resize(db > 0 ? db : 0);
    return {Polynomial(std::move(q)), Polynomial(std::move(rc))};
}

Polynomial poly_divexact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw error("polynomial division by zero");
    if (a.is_zero()) return {};
    IntegerSplit sa = integer_split(a), sb = integer_split(b);
    auto q = z_divexact(sa.primitive, sb.primitive);
    if (!q) throw error("inexact polynomial division");
    Polynomial out = from_integer_coeffs(*q);
    Rational c = sa.content / sb.content;
    if (c != 1) out *= c;
    return out;
}

IntegerSplit integer_split(const Polynomial& p) {
    IntegerSplit s;
    if (p.is_zero()) {
        s.content = 0;
        return s;
    }
    Integer den_lcm = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> z(p.coeffs().size());
    Integer g = 0;
    for (size_t i = 0; i < z.size(); ++i) {
        z[i] = p.coeffs()[i].get_num() * (den_lcm / p.coeffs()[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
    }
    if (z.back() < 0) g = -g;
    for (auto& c : z) c /= g;
    s.content = Rational(g, den_lcm);
    s.content.canonicalize();
    s.primitive = std::move(z);
    return s;
}

Polynomial from_integer_coeffs(const std::vector<Integer>& c) {
    std::vector<Rational> r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = Rational(c[i]);
    return Polynomial(std::move(r));
}

// Exact division test/quotient in Z[x] with early abort: when h is primitive
// and h | w over Z, the classical division loop stays integral at every step.
std::optional<std::vector<Integer>> z_divexact(const std::vector<Integer>& w,
                                               const std::vector<Integer>& h) {
    if (h.empty()) return std::nullopt;
    if (w.empty()) return std::vector<Integer>{};
    int dw = static_cast<int>(w.size()) - 1, dh = static_cast<int>(h.size()) - 1;
    if (dw < dh) return std::nullopt;
    std::vector<Integer> rest = w, q(dw - dh + 1);
    const Integer& lead = h.back();
    for (int k = dw - dh; k >= 0; --k) {
        Integer top = rest[k + dh];
        if (top == 0) {
            q[k] = 0;
            continue;
        }
        Integer c, r;
        mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) return std::nullopt;
        q[k] = c;
        for (int i = 0; i <= dh; ++i) rest[k + i] -= c * h[i];
    }
    for (const auto& c : rest)
        if (c != 0) return std::nullopt;
    return q;
}

namespace {
Integer vec_content(const std::vector<Integer>& v) {
    Integer g = 0;
    for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}
}  // namespace

std::vector<Integer> z_primitive(std::vector<Integer> v) {
    Integer g = vec_content(v);
    if (g == 0) return v;
    if (v.back() < 0) g = -g;
    for (auto& c : v) c /= g;
    return v;
}

namespace {

// Modular gcd over Z (Brown): gcd degree from images mod word primes, CRT
// reconstruction scaled by gcd of the leading coefficients, division check.
std::vector<Integer> z_gcd_modular(const std::vector<Integer>& u, const std::vector<Integer>& v) {
    Integer gamma;
    mpz_gcd(gamma.get_mpz_t(), u.back().get_mpz_t(), v.back().get_mpz_t());
    Integer pz((1L << 29));
    modp::Fp f{};
    int best_deg = -1;
    std::vector<Integer> acc;   // symmetric residues of gamma * monic gcd image
    Integer acc_mod = 0;
    for (int tries = 0; tries < 200; ++tries) {
        mpz_nextprime(pz.get_mpz_t(), pz.get_mpz_t());
        if (u.back() % pz == 0 || v.back() % pz == 0) continue;
        f.p = pz.get_ui();
        modp::ModPoly gp = modp::gcd(f, modp::reduce_integer_poly(u, f),
                                     modp::reduce_integer_poly(v, f));
        int d = modp::deg(gp);
        if (d == 0) return {Integer(1)};
        if (best_deg >= 0 && d > best_deg) continue;  // unlucky prime
        std::vector<Integer> img(gp.size());
        modp::u64 scale = static_cast<modp::u64>(mpz_fdiv_ui(gamma.get_mpz_t(), f.p));
        for (size_t i = 0; i < gp.size(); ++i) img[i] = Integer(static_cast<long>(f.mul(gp[i], scale)));
        if (best_deg < 0 || d < best_deg) {
            best_deg = d;
            acc = img;
            acc_mod = pz;
        } else {
            // coefficientwise CRT into modulus acc_mod * p
            Integer g, a, b;
            mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), acc_mod.get_mpz_t(),
                       pz.get_mpz_t());
            Integer nm = acc_mod * pz;
            for (size_t i = 0; i < acc.size(); ++i) {
                Integer diff = img[i] - acc[i];
                Integer t = (diff * a) % pz;
                acc[i] = ((acc[i] + acc_mod * t) % nm + nm) % nm;
            }
            acc_mod = nm;
        }
        // symmetric lift and divisibility check
        std::vector<Integer> cand(acc.size());
        for (size_t i = 0; i < acc.size(); ++i)
            cand[i] = (acc[i] * 2 > acc_mod) ? Integer(acc[i] - acc_mod) : acc[i];
        cand = z_primitive(cand);
        if (!cand.empty() && z_divexact(u, cand) && z_divexact(v, cand)) return cand;
    }
    throw error("modular gcd did not stabilize");
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return Polynomial(Rational(1));
    std::vector<Integer> u = integer_split(a).primitive;
    std::vector<Integer> v = integer_split(b).primitive;
    if (u.size() < v.size()) std::swap(u, v);
    return from_integer_coeffs(z_gcd_modular(u, v)).monic();
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return poly_divexact(a * b, poly_gcd(a, b)).monic();
}

Rational poly_resultant(const Polynomial& a, const Polynomial& b) {
    // Euclidean resultant over Q; input degrees stay small here.
    if (a.is_zero() || b.is_zero()) return 0;
    Polynomial f = a, g = b;
    Rational res = 1;
    while (g.degree() > 0) {
        Polynomial r = poly_rem(f, g);
        if (r.is_zero()) return 0;
        res *= rat_pow(g.lc(), f.degree() - r.degree());
        if ((Integer(f.degree()) * g.degree()) % 2 == 1) res = -res;
        f = g;
        g = r;
    }
    // g is a nonzero constant
    return res * rat_pow(g.coeff(0), f.degree());
}

std::pair<Polynomial, Polynomial> squarefree_split(const Polynomial& p) {
    if (p.is_zero()) throw error("squarefree split of zero");
    if (p.degree() == 0) return {p, Polynomial(Rational(1))};
    if (poly_gcd(p, p.derivative()).degree() == 0) return {p, Polynomial(Rational(1))};
    // Yun's algorithm: p = lc * prod parts[i]^(i+1).
    std::vector<Polynomial> parts;
    {
        Polynomial f = p.monic();
        Polynomial df = f.derivative();
        Polynomial a = poly_gcd(f, df);
        Polynomial b = poly_divexact(f, a);
        Polynomial c = poly_divexact(df, a);
        Polynomial d = c - b.derivative();
        while (!(b.degree() == 0)) {
            Polynomial fi = poly_gcd(b, d);
            parts.push_back(fi.monic());
            b = poly_divexact(b, fi);
            c = poly_divexact(d, fi);
            d = c - b.derivative();
        }
    }
    Polynomial sf(p.lc());
    Polynomial root(Rational(1));
    for (size_t i = 0; i < parts.size(); ++i) {
        long mult = static_cast<long>(i) + 1;
        if (mult % 2 == 1) sf *= parts[i];
        root *= parts[i].pow(mult / 2);
    }
    return {sf, root};
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeff(i);
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool unit = (a == 1) && i > 0;
        if (!unit) os << a.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace ore

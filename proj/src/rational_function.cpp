#include "ore/rational_function.hpp"

#include <ostream>
#include <sstream>

namespace ore {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw error("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Polynomial();
        den_ = Polynomial(Rational(1));
        return;
    }
    // all reduction work happens on integer primitive parts
    IntegerSplit sn = integer_split(num), sd = integer_split(den);
    if (den.degree() > 0 && num.degree() > 0) {
        Polynomial g = poly_gcd(from_integer_coeffs(sn.primitive), from_integer_coeffs(sd.primitive));
        if (g.degree() > 0) {
            IntegerSplit sg = integer_split(g);
            sn.primitive = *z_divexact(sn.primitive, sg.primitive);
            sd.primitive = *z_divexact(sd.primitive, sg.primitive);
            Rational adj = sg.content * sg.content;
            (void)adj;
        }
    }
    Rational c = sn.content / sd.content;
    Polynomial n = from_integer_coeffs(sn.primitive);
    Polynomial d = from_integer_coeffs(sd.primitive);
    Rational s = 1 / d.lc();
    num_ = n * (c * s);
    den_ = d * s;
}

Rational RationalFunction::constant_value() const {
    if (!is_constant()) throw error("not a constant: " + to_string());
    return num_.coeff(0);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    // cross-reduce before multiplying to limit degree growth
    Polynomial g1 = poly_gcd(a.num_, b.den_);
    Polynomial g2 = poly_gcd(b.num_, a.den_);
    Polynomial n1 = g1.degree() > 0 ? poly_divexact(a.num_, g1) : a.num_;
    Polynomial d2 = g1.degree() > 0 ? poly_divexact(b.den_, g1) : b.den_;
    Polynomial n2 = g2.degree() > 0 ? poly_divexact(b.num_, g2) : b.num_;
    Polynomial d1 = g2.degree() > 0 ? poly_divexact(a.den_, g2) : a.den_;
    return RationalFunction(n1 * n2, d1 * d2);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw error("division by zero rational function");
    return a * b.inverse();
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw error("inverse of zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFunction r(Rational(1));
    RationalFunction b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

RationalFunction RationalFunction::shifted(const Rational& q) const {
    if (q == 0 || is_zero()) return *this;
    RationalFunction r;
    r.num_ = num_.shifted(q);
    r.den_ = den_.shifted(q);
    return r;  // gcd-free and monic-den are preserved by substitution x -> x+q
}

RationalFunction RationalFunction::scaled_arg(const Rational& m) const {
    if (is_zero()) return *this;
    return RationalFunction(num_.scaled_arg(m), den_.scaled_arg(m));
}

Rational RationalFunction::operator()(const Rational& v) const {
    Rational d = den_(v);
    if (d == 0) throw error("pole of rational function at " + Rational(v).get_str());
    return num_(v) / d;
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    IntegerSplit n = integer_split(num_);
    IntegerSplit d = integer_split(den_);
    // overall rational factor num_content/den_content, attached to numerator
    Rational c = n.content / d.content;
    Polynomial np = from_integer_coeffs(n.primitive) * Rational(c.get_num());
    Polynomial dp = from_integer_coeffs(d.primitive) * Rational(c.get_den());
    std::ostringstream os;
    if (dp.is_one()) {
        os << np.to_string(var);
    } else {
        os << "(" << np.to_string(var) << ")/(" << dp.to_string(var) << ")";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    return os << f.to_string();
}

}  // namespace ore

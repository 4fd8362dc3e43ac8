#ifndef ORE_RATIONAL_FUNCTION_HPP
#define ORE_RATIONAL_FUNCTION_HPP

#include <iosfwd>
#include <string>

#include "ore/polynomial.hpp"

namespace ore {

// Element of Q(x) in reduced form: gcd(num, den) = 1, den monic, zero = 0/1.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
    RationalFunction(long c) : num_(Rational(c)), den_(Rational(1)) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(Rational(1)) {}
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction x() { return RationalFunction(Polynomial::x()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    // Value of a constant element.
    Rational constant_value() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction inverse() const;
    RationalFunction pow(long e) const;

    // f(x) -> f(x + q), q rational (half-integer shifts included).
    RationalFunction shifted(const Rational& q) const;
    // f(x) -> f(m x).
    RationalFunction scaled_arg(const Rational& m) const;

    // Evaluation at a rational point; throws if the denominator vanishes.
    Rational operator()(const Rational& v) const;
    bool defined_at(const Rational& v) const { return den_(v) != 0; }

    // Degree of numerator plus denominator; complexity measure for pivoting.
    int total_degree() const { return (num_.is_zero() ? 0 : num_.degree()) + den_.degree(); }

    // Canonical text: num/den over Z with coprime contents, den lc positive.
    std::string to_string(const std::string& var = "x") const;

  private:
    Polynomial num_, den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

// shift by an integer number of steps (the Ore twist sigma^k)
inline RationalFunction shift1(const RationalFunction& f, long k) {
    return f.shifted(Rational(k));
}

}  // namespace ore

#endif

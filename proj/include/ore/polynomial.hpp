#ifndef ORE_POLYNOMIAL_HPP
#define ORE_POLYNOMIAL_HPP

#include <initializer_list>
#include <optional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ore/rational.hpp"

namespace ore {

// Dense univariate polynomial over Q, coefficients ascending, trailing zeros
// trimmed. The zero polynomial has an empty coefficient vector and degree -1.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(const Rational& c) { if (c != 0) coeffs_ = {c}; }
    Polynomial(long c) : Polynomial(Rational(c)) {}
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs)
        : coeffs_(coeffs) { trim(); }

    static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }
    // c * x^k
    static Polynomial monomial(const Rational& c, int k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }

    const Rational& lc() const;  // leading coefficient; error on zero
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational operator()(const Rational& v) const;  // evaluation (Horner)

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(long e) const;
    Polynomial derivative() const;
    Polynomial monic() const;

    // f(x) -> f(x + q) for rational q.
    Polynomial shifted(const Rational& q) const;
    // f(x) -> f(m * x).
    Polynomial scaled_arg(const Rational& m) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// Euclidean division over Q: a = q*b + r, deg r < deg b.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);
inline Polynomial poly_div(const Polynomial& a, const Polynomial& b) { return poly_divmod(a, b).first; }
inline Polynomial poly_rem(const Polynomial& a, const Polynomial& b) { return poly_divmod(a, b).second; }
// Exact division; throws if the remainder is nonzero.
Polynomial poly_divexact(const Polynomial& a, const Polynomial& b);

// Monic gcd over Q (computed on integer primitive parts to control growth).
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);
Polynomial poly_lcm(const Polynomial& a, const Polynomial& b);

// Resultant of a and b with respect to x (subresultant PRS).
Rational poly_resultant(const Polynomial& a, const Polynomial& b);

// Content over Z after clearing denominators: p = content * primitive with
// primitive an integer-coefficient polynomial of content 1 and positive lc
// unless `sign_to_lc` keeps the sign on the content.
struct IntegerSplit {
    Rational content;               // rational, positive
    std::vector<Integer> primitive; // integer coefficients, ascending, content 1
};
IntegerSplit integer_split(const Polynomial& p);
Polynomial from_integer_coeffs(const std::vector<Integer>& c);

// Exact division in Z[x] with early abort; nullopt when not divisible.
std::optional<std::vector<Integer>> z_divexact(const std::vector<Integer>& w,
                                               const std::vector<Integer>& h);
std::vector<Integer> z_primitive(std::vector<Integer> v);

// p(x) = sf * sq^2 with sf squarefree (both monic up to content handling on
// the caller's side). Returns (squarefree part, square root of the rest).
std::pair<Polynomial, Polynomial> squarefree_split(const Polynomial& p);

}  // namespace ore

#endif

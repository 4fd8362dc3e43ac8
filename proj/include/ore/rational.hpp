#ifndef ORE_RATIONAL_HPP
#define ORE_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ore {

// Exact arithmetic lives on GMP throughout: Integer is an arbitrary-precision
// integer, Rational a canonical fraction (gcd(num,den)=1, den>0).
using Integer = mpz_class;
using Rational = mpq_class;

class error : public std::runtime_error {
  public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline Integer numer(const Rational& q) { return q.get_num(); }
inline Integer denom(const Rational& q) { return q.get_den(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long to_long(const Integer& z) {
    if (!z.fits_slong_p()) throw error("integer too large for machine word: " + z.get_str());
    return z.get_si();
}

inline long to_long(const Rational& q) {
    if (q.get_den() != 1) throw error("expected integer, got " + q.get_str());
    return to_long(q.get_num());
}

inline Rational rat_pow(const Rational& q, long e) {
    if (e < 0) {
        if (q == 0) throw error("zero to negative power");
        return 1 / rat_pow(q, -e);
    }
    Rational r = 1, b = q;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Integer int_pow(Integer b, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// Exact square root of an integer if it is a perfect square.
inline std::optional<Integer> int_sqrt_exact(const Integer& z) {
    if (z < 0) return std::nullopt;
    Integer r, rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), z.get_mpz_t());
    if (rem != 0) return std::nullopt;
    return r;
}

inline std::optional<Rational> rat_sqrt_exact(const Rational& q) {
    if (q < 0) return std::nullopt;
    auto n = int_sqrt_exact(q.get_num());
    if (!n) return std::nullopt;
    auto d = int_sqrt_exact(q.get_den());
    if (!d) return std::nullopt;
    return Rational(*n, *d);
}

// Parses "p", "p/q" or decimal-free signed integers; used by the expression
// parser and the b-file reader.
inline Rational rat_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw error("cannot parse rational: " + s);
    q.canonicalize();
    return q;
}

}  // namespace ore

#endif

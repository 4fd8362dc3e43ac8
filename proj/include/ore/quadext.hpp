#ifndef ORE_QUADEXT_HPP
#define ORE_QUADEXT_HPP

#include <iosfwd>
#include <ostream>
#include <sstream>

#include "ore/rational_function.hpp"

namespace ore {

// Element a + b*s of Q(sqrt(d))(x) with s^2 = d, d a rational non-square.
// Arithmetic is componentwise on the basis {1, s}; used only by the p = 2
// factor extraction where a hom witness gets scaled by 1/sqrt(c).
class QuadExtElement {
  public:
    QuadExtElement() : d_(0) {}
    QuadExtElement(const RationalFunction& a) : a_(a), d_(0) {}
    QuadExtElement(long c) : a_(RationalFunction(c)), d_(0) {}
    QuadExtElement(RationalFunction a, RationalFunction b, Rational d)
        : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        if (b_.is_zero()) d_ = 0;
        else if (rat_sqrt_exact(d_)) throw error("quadratic extension by a square");
    }

    const RationalFunction& re() const { return a_; }
    const RationalFunction& im() const { return b_; }
    const Rational& disc() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadExtElement conj() const { return b_.is_zero() ? *this : QuadExtElement(a_, -b_, d_); }

    QuadExtElement operator-() const {
        QuadExtElement r = *this;
        r.a_ = -r.a_;
        r.b_ = -r.b_;
        return r;
    }

    friend QuadExtElement operator+(const QuadExtElement& x, const QuadExtElement& y) {
        QuadExtElement r(x.a_ + y.a_, x.b_ + y.b_, x.pick_d(y));
        return r;
    }
    friend QuadExtElement operator-(const QuadExtElement& x, const QuadExtElement& y) { return x + (-y); }
    friend QuadExtElement operator*(const QuadExtElement& x, const QuadExtElement& y) {
        Rational d = x.pick_d(y);
        return QuadExtElement(x.a_ * y.a_ + RationalFunction(d) * x.b_ * y.b_,
                              x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadExtElement operator/(const QuadExtElement& x, const QuadExtElement& y) {
        return x * y.inverse();
    }
    QuadExtElement& operator+=(const QuadExtElement& o) { return *this = *this + o; }
    QuadExtElement& operator-=(const QuadExtElement& o) { return *this = *this - o; }
    QuadExtElement& operator*=(const QuadExtElement& o) { return *this = *this * o; }
    QuadExtElement& operator/=(const QuadExtElement& o) { return *this = *this / o; }

    friend bool operator==(const QuadExtElement& x, const QuadExtElement& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
    }
    friend bool operator!=(const QuadExtElement& x, const QuadExtElement& y) { return !(x == y); }

    QuadExtElement inverse() const {
        if (is_zero()) throw error("inverse of zero");
        RationalFunction n = a_ * a_ - RationalFunction(d_) * b_ * b_;
        if (n.is_zero()) throw error("zero norm in quadratic extension");
        return QuadExtElement(a_ / n, -(b_ / n), d_);
    }

    QuadExtElement shifted(const Rational& q) const {
        return QuadExtElement(a_.shifted(q), b_.shifted(q), d_);
    }
    QuadExtElement scaled_arg(const Rational& m) const {
        return QuadExtElement(a_.scaled_arg(m), b_.scaled_arg(m), d_);
    }

    int total_degree() const { return a_.total_degree() + b_.total_degree(); }

    std::string to_string(const std::string& var = "x") const {
        if (b_.is_zero()) return a_.to_string(var);
        std::ostringstream os;
        os << a_.to_string(var) << " + (" << b_.to_string(var) << ")*sqrt(" << d_.get_str() << ")";
        return os.str();
    }

  private:
    // zero has no committed discriminant; merge on demand
    Rational pick_d(const QuadExtElement& o) const {
        if (b_.is_zero()) return o.d_;
        if (o.b_.is_zero()) return d_;
        if (d_ != o.d_) throw error("mixing distinct quadratic extensions");
        return d_;
    }

    RationalFunction a_, b_;
    Rational d_;
};

inline QuadExtElement shift1(const QuadExtElement& f, long k) { return f.shifted(Rational(k)); }

inline std::ostream& operator<<(std::ostream& os, const QuadExtElement& e) {
    return os << e.to_string();
}

}  // namespace ore

#endif

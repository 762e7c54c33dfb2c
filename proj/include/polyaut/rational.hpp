#ifndef POLYAUT_RATIONAL_HPP
#define POLYAUT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

#include "polyaut/errors.hpp"

namespace polyaut {

/// Arbitrary-precision rational, always stored in canonical form:
/// positive denominator, gcd(|num|, den) = 1, zero as 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw ZeroDenominator("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    static Rational from_string(const std::string& s) { return Rational(mpq_class(s)); }
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }

    Rational times_rational(const Rational& q) const { return *this * q; }
    Rational div_unit(const Rational& q) const { return *this / q; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    // mpq_add/mul/... yield canonical output from canonical input, so these
    // skip the re-canonicalizing constructor
    Rational operator+(const Rational& o) const { return canonical(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return canonical(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return canonical(v_ * o.v_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw ZeroDenominator("Rational: division by zero");
        return canonical(v_ / o.v_);
    }
    Rational operator-() const { return canonical(-v_); }

    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }

    /// In-place accumulation without temporaries; used by hot product loops.
    void add_assign(const Rational& o) { mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t()); }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    Rational inverse() const {
        if (is_zero()) throw ZeroDenominator("Rational: inverse of zero");
        return canonical(1 / v_);
    }

    Rational pow(unsigned e) const {
        Rational r(1), b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r = r * b;
            if (e > 1) b = b * b;
        }
        return r;
    }

    /// Canonical "p/q" string, "q" omitted when 1.
    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

private:
    template <class E>
    static Rational canonical(E&& expr) {
        Rational r;
        r.v_ = std::forward<E>(expr);  // evaluated by gmpxx; already canonical
        return r;
    }

    mpq_class v_;
};

inline Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

}  // namespace polyaut

#endif

#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>

#include "cusp/error.hpp"

namespace cusp {

// Arbitrary-precision rational number, always kept in lowest terms with a
// positive denominator (GMP canonical form).
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d) {
        if (d == 0) throw domain_error("rational with zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "p", "-p", "p/q" with arbitrarily many digits.
    static Rational from_string(const std::string& s) {
        mpq_class q;
        try {
            q = mpq_class(s, 10);
        } catch (const std::invalid_argument&) {
            throw domain_error("malformed rational literal '" + s + "'");
        }
        if (q.get_den() == 0) throw domain_error("rational with zero denominator");
        q.canonicalize();
        return Rational(q);
    }

    const mpq_class& raw() const { return q_; }

    int sign() const { return mpq_sgn(q_.get_mpq_t()); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    double to_double() const { return q_.get_d(); }

    // "p/q", or just "p" when the denominator is 1.
    std::string to_string() const { return q_.get_str(); }

    Rational& operator+=(const Rational& r) { q_ += r.q_; return *this; }
    Rational& operator-=(const Rational& r) { q_ -= r.q_; return *this; }
    Rational& operator*=(const Rational& r) { q_ *= r.q_; return *this; }
    Rational& operator/=(const Rational& r) {
        if (r.is_zero()) throw domain_error("rational division by zero");
        q_ /= r.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend Rational abs(const Rational& a) { return Rational(mpq_class(::abs(a.q_))); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& a) {
        return os << a.q_;
    }

private:
    mpq_class q_;
};

// Exact square root: defined only when numerator and denominator are both
// perfect squares (the value is then again rational).
inline std::optional<Rational> exact_sqrt(const Rational& x) {
    if (x.sign() < 0) return std::nullopt;
    mpz_class num = x.raw().get_num();
    mpz_class den = x.raw().get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(mpq_class(rn) / mpq_class(rd));
}

} // namespace cusp

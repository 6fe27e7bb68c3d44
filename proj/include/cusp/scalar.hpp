#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <string>

#include "cusp/rational.hpp"

namespace cusp {

// The two coefficient backends: exact rationals for classification (where
// every criterion is a sign or zero test on a polynomial identity) and
// doubles for evolute chains whose square roots leave the rationals.
// A jet carries exactly one backend; mixing them is a type error.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool is_exact = true;
    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long n) { return Rational(n); }
    static Rational from_rational(const Rational& r) { return r; }
    static double to_double(const Rational& x) { return x.to_double(); }
    static int sign(const Rational& x) { return x.sign(); }
    static std::optional<Rational> sqrt(const Rational& x) { return exact_sqrt(x); }
    static std::string str(const Rational& x) { return x.to_string(); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool is_exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_int(long n) { return static_cast<double>(n); }
    static double from_rational(const Rational& r) { return r.to_double(); }
    static double to_double(double x) { return x; }
    static int sign(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }
    static std::optional<double> sqrt(double x) {
        if (x < 0.0) return std::nullopt;
        return std::sqrt(x);
    }
    static std::string str(double x) {
        std::ostringstream os;
        os.precision(17);
        os << x;
        return os.str();
    }
};

// Relative zero tolerance for the float backend; the exact backend always
// tests exact equality. A negative request means "use the default".
inline constexpr double default_float_tol = 1e-9;

template <class S>
double resolve_tol(double tol) {
    if constexpr (scalar_traits<S>::is_exact) return 0.0;
    return tol < 0.0 ? default_float_tol : tol;
}

} // namespace cusp

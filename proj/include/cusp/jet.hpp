#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <vector>

#include "cusp/error.hpp"
#include "cusp/scalar.hpp"

namespace cusp {

// Truncated Taylor series a_0 + a_1 t + ... + a_N t^N of one variable at 0.
// The k-th derivative at 0 is k! * coeff(k); that factorial bridge is how
// every derivative vector gamma^(k)(0) downstream is recovered.
//
// Every operation returns a fresh jet whose order is the order up to which
// the result is trustworthy: the minimum of the operand orders for ring
// operations, one less for derivative. Consumers must check order() before
// reading high coefficients; reading past it throws.
template <class S>
class Jet {
public:
    explicit Jet(int order) : c_(static_cast<std::size_t>(checked(order)) + 1, scalar_traits<S>::zero()) {}

    static Jet constant(const S& value, int order) {
        Jet j(order);
        j.c_[0] = value;
        return j;
    }

    // The jet of t itself.
    static Jet variable(int order) {
        if (order < 1) throw domain_error("variable jet needs order >= 1");
        Jet j(order);
        j.c_[1] = scalar_traits<S>::one();
        return j;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const S& coeff(int k) const {
        if (k < 0 || k > order()) throw domain_error("coefficient index beyond truncation order");
        return c_[static_cast<std::size_t>(k)];
    }

    void set_coeff(int k, const S& v) {
        if (k < 0 || k > order()) throw domain_error("coefficient index beyond truncation order");
        c_[static_cast<std::size_t>(k)] = v;
    }

    bool operator==(const Jet&) const = default;

    friend std::ostream& operator<<(std::ostream& os, const Jet& j) {
        os << "[";
        for (int k = 0; k <= j.order(); ++k) {
            if (k) os << ", ";
            os << scalar_traits<S>::str(j.coeff(k));
        }
        return os << "]";
    }

private:
    static int checked(int order) {
        if (order < 0) throw domain_error("negative jet order");
        return order;
    }

    std::vector<S> c_;
};

template <class S>
Jet<S> truncate(const Jet<S>& a, int order) {
    if (order > a.order()) throw domain_error("cannot extend a jet by truncation");
    Jet<S> r(order);
    for (int k = 0; k <= order; ++k) r.set_coeff(k, a.coeff(k));
    return r;
}

template <class S>
Jet<S> operator+(const Jet<S>& a, const Jet<S>& b) {
    const int n = std::min(a.order(), b.order());
    Jet<S> r(n);
    for (int k = 0; k <= n; ++k) r.set_coeff(k, a.coeff(k) + b.coeff(k));
    return r;
}

template <class S>
Jet<S> operator-(const Jet<S>& a, const Jet<S>& b) {
    const int n = std::min(a.order(), b.order());
    Jet<S> r(n);
    for (int k = 0; k <= n; ++k) r.set_coeff(k, a.coeff(k) - b.coeff(k));
    return r;
}

template <class S>
Jet<S> operator-(const Jet<S>& a) {
    Jet<S> r(a.order());
    for (int k = 0; k <= a.order(); ++k) r.set_coeff(k, -a.coeff(k));
    return r;
}

// Cauchy product, truncated at the smaller operand order.
template <class S>
Jet<S> operator*(const Jet<S>& a, const Jet<S>& b) {
    const int n = std::min(a.order(), b.order());
    Jet<S> r(n);
    for (int k = 0; k <= n; ++k) {
        S s = scalar_traits<S>::zero();
        for (int i = std::max(0, k - b.order()); i <= std::min(k, a.order()); ++i)
            s += a.coeff(i) * b.coeff(k - i);
        r.set_coeff(k, s);
    }
    return r;
}

template <class S>
Jet<S> operator*(const S& c, const Jet<S>& a) {
    Jet<S> r(a.order());
    for (int k = 0; k <= a.order(); ++k) r.set_coeff(k, c * a.coeff(k));
    return r;
}

template <class S>
Jet<S> operator*(const Jet<S>& a, const S& c) {
    return c * a;
}

// Largest coefficient magnitude, as a double; the reference scale for all
// float-backend zero tests.
template <class S>
double max_abs_coeff(const Jet<S>& a) {
    double m = 0.0;
    for (int k = 0; k <= a.order(); ++k)
        m = std::max(m, std::abs(scalar_traits<S>::to_double(a.coeff(k))));
    return m;
}

// Exact backend: coefficient == 0. Float backend: |a_k| <= tol * max|a_j|.
template <class S>
bool coeff_is_zero(const Jet<S>& a, int k, double tol = -1.0) {
    if constexpr (scalar_traits<S>::is_exact) {
        return scalar_traits<S>::sign(a.coeff(k)) == 0;
    } else {
        return std::abs(scalar_traits<S>::to_double(a.coeff(k))) <= resolve_tol<S>(tol) * max_abs_coeff(a);
    }
}

// Smallest k with a_k nonzero (within tolerance); empty if the whole jet
// vanishes.
template <class S>
std::optional<int> valuation(const Jet<S>& a, double tol = -1.0) {
    for (int k = 0; k <= a.order(); ++k)
        if (!coeff_is_zero(a, k, tol)) return k;
    return std::nullopt;
}

// Quotient a / b in the jet ring; needs the divisor to be a unit (b_0 != 0).
// The gate is an exact zero test on the constant term: a tiny but genuine
// b_0 (a local expansion near a singular parameter, say) divides fine, it
// just produces large coefficients.
template <class S>
Jet<S> div(const Jet<S>& a, const Jet<S>& b, double tol = -1.0) {
    (void)tol;
    if (scalar_traits<S>::sign(b.coeff(0)) == 0)
        throw domain_error("jet division by a jet with zero constant term");
    const int n = std::min(a.order(), b.order());
    Jet<S> q(n);
    for (int k = 0; k <= n; ++k) {
        S s = a.coeff(k);
        for (int j = 1; j <= k; ++j) s -= b.coeff(j) * q.coeff(k - j);
        q.set_coeff(k, s / b.coeff(0));
    }
    return q;
}

template <class S>
Jet<S> operator/(const Jet<S>& a, const Jet<S>& b) {
    return div(a, b);
}

// Square root with positive constant term. In the exact backend the constant
// term must itself be the square of a rational; otherwise the caller has to
// fall back to the float backend.
template <class S>
Jet<S> sqrt(const Jet<S>& a, double tol = -1.0) {
    (void)tol;
    if (scalar_traits<S>::sign(a.coeff(0)) <= 0)
        throw domain_error("jet sqrt needs a positive constant term");
    auto r0 = scalar_traits<S>::sqrt(a.coeff(0));
    if (!r0) throw exact_error("jet sqrt: constant term is not the square of a rational");
    Jet<S> r(a.order());
    r.set_coeff(0, *r0);
    const S two_r0 = scalar_traits<S>::from_int(2) * (*r0);
    for (int k = 1; k <= a.order(); ++k) {
        S s = a.coeff(k);
        for (int j = 1; j <= k - 1; ++j) s -= r.coeff(j) * r.coeff(k - j);
        r.set_coeff(k, s / two_r0);
    }
    return r;
}

// f(g(t)) for g with zero constant term, by a Horner sweep in the jet ring.
// The coefficients realize the chain-rule partition sum; the test suite
// checks them against that sum evaluated term by term.
template <class S>
Jet<S> compose(const Jet<S>& f, const Jet<S>& g, double tol = -1.0) {
    if (!coeff_is_zero(g, 0, tol))
        throw domain_error("jet composition needs an inner jet with zero constant term");
    const int n = std::min(f.order(), g.order());
    Jet<S> gz = truncate(g, n);
    gz.set_coeff(0, scalar_traits<S>::zero());
    Jet<S> r = Jet<S>::constant(f.coeff(n), n);
    for (int k = n - 1; k >= 0; --k) {
        r = r * gz;
        r.set_coeff(0, r.coeff(0) + f.coeff(k));
    }
    return r;
}

// b_k = (k+1) a_{k+1}; drops the trustworthy order by one.
template <class S>
Jet<S> derivative(const Jet<S>& a) {
    if (a.order() < 1) throw domain_error("derivative of an order-0 jet");
    Jet<S> d(a.order() - 1);
    for (int k = 0; k < a.order(); ++k)
        d.set_coeff(k, scalar_traits<S>::from_int(k + 1) * a.coeff(k + 1));
    return d;
}

// Division by t^k: requires the first k coefficients to vanish.
template <class S>
Jet<S> shift_down(const Jet<S>& a, int k, double tol = -1.0) {
    if (k < 0) throw domain_error("negative shift");
    if (k > a.order()) throw domain_error("shift exceeds jet order");
    for (int j = 0; j < k; ++j)
        if (!coeff_is_zero(a, j, tol))
            throw domain_error("shift_down: low-order coefficient does not vanish");
    Jet<S> r(a.order() - k);
    for (int j = 0; j <= r.order(); ++j) r.set_coeff(j, a.coeff(j + k));
    return r;
}

// Integer power by repeated truncated multiplication.
template <class S>
Jet<S> ipow(const Jet<S>& a, unsigned e) {
    Jet<S> r = Jet<S>::constant(scalar_traits<S>::one(), a.order());
    for (unsigned i = 0; i < e; ++i) r = r * a;
    return r;
}

// Horner evaluation of the truncation polynomial, in double.
template <class S>
double eval(const Jet<S>& a, double t) {
    double r = scalar_traits<S>::to_double(a.coeff(a.order()));
    for (int k = a.order() - 1; k >= 0; --k)
        r = r * t + scalar_traits<S>::to_double(a.coeff(k));
    return r;
}

// Horner evaluation in the coefficient field.
template <class S>
S eval_exact(const Jet<S>& a, const S& t) {
    S r = a.coeff(a.order());
    for (int k = a.order() - 1; k >= 0; --k) r = r * t + a.coeff(k);
    return r;
}

template <class S>
bool approx_equal(const Jet<S>& a, const Jet<S>& b, double rel_tol) {
    const int n = std::min(a.order(), b.order());
    double scale = std::max(max_abs_coeff(truncate(a, n)), max_abs_coeff(truncate(b, n)));
    for (int k = 0; k <= n; ++k) {
        double d = std::abs(scalar_traits<S>::to_double(a.coeff(k)) - scalar_traits<S>::to_double(b.coeff(k)));
        if (d > rel_tol * std::max(scale, 1e-300)) return false;
    }
    return true;
}

namespace detail {

// Maclaurin series of exp, sin, cos; the coefficients are built by repeated
// exact division, so they are exact in the rational backend.
template <class S>
Jet<S> exp_series(int order) {
    Jet<S> s(order);
    S c = scalar_traits<S>::one();
    s.set_coeff(0, c);
    for (int k = 1; k <= order; ++k) {
        c = c / scalar_traits<S>::from_int(k);
        s.set_coeff(k, c);
    }
    return s;
}

template <class S>
Jet<S> sin_series(int order) {
    Jet<S> s(order);
    if (order < 1) return s;
    S c = scalar_traits<S>::one();
    s.set_coeff(1, c);
    for (int k = 3; k <= order; k += 2) {
        c = -c / scalar_traits<S>::from_int(k * (k - 1));
        s.set_coeff(k, c);
    }
    return s;
}

template <class S>
Jet<S> cos_series(int order) {
    Jet<S> s(order);
    S c = scalar_traits<S>::one();
    s.set_coeff(0, c);
    for (int k = 2; k <= order; k += 2) {
        c = -c / scalar_traits<S>::from_int(k * (k - 1));
        s.set_coeff(k, c);
    }
    return s;
}

// Splits a into constant + rest. Exact backend: the constant must be zero.
template <class S>
std::pair<S, Jet<S>> split_constant(const Jet<S>& a, const char* fn) {
    S a0 = a.coeff(0);
    Jet<S> w = a;
    w.set_coeff(0, scalar_traits<S>::zero());
    if constexpr (scalar_traits<S>::is_exact) {
        if (scalar_traits<S>::sign(a0) != 0)
            throw exact_error(std::string(fn) + ": exact backend needs an argument vanishing at t = 0");
    }
    return {a0, w};
}

} // namespace detail

template <class S>
Jet<S> exp(const Jet<S>& a, double tol = -1.0) {
    auto [a0, w] = detail::split_constant(a, "exp");
    Jet<S> r = compose(detail::exp_series<S>(a.order()), w, tol);
    if constexpr (!scalar_traits<S>::is_exact) r = std::exp(a0) * r;
    return r;
}

// sin(a0 + w) = sin(a0) cos(w) + cos(a0) sin(w)
template <class S>
Jet<S> sin(const Jet<S>& a, double tol = -1.0) {
    auto [a0, w] = detail::split_constant(a, "sin");
    Jet<S> s = compose(detail::sin_series<S>(a.order()), w, tol);
    if constexpr (scalar_traits<S>::is_exact) {
        return s;
    } else {
        Jet<S> c = compose(detail::cos_series<S>(a.order()), w, tol);
        return std::sin(a0) * c + std::cos(a0) * s;
    }
}

template <class S>
Jet<S> cos(const Jet<S>& a, double tol = -1.0) {
    auto [a0, w] = detail::split_constant(a, "cos");
    Jet<S> c = compose(detail::cos_series<S>(a.order()), w, tol);
    if constexpr (scalar_traits<S>::is_exact) {
        return c;
    } else {
        Jet<S> s = compose(detail::sin_series<S>(a.order()), w, tol);
        return std::cos(a0) * c - std::sin(a0) * s;
    }
}

} // namespace cusp

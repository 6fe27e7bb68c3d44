#pragma once

#include <algorithm>
#include <optional>
#include <utility>

#include "cusp/jet.hpp"

namespace cusp {

// A vector of the plane; holds derivative vectors gamma^(k)(0), frame
// vectors at t = 0, and every determinant argument.
template <class S>
struct PlaneVec {
    S x{scalar_traits<S>::zero()};
    S y{scalar_traits<S>::zero()};

    bool operator==(const PlaneVec&) const = default;

    friend PlaneVec operator+(const PlaneVec& a, const PlaneVec& b) { return {a.x + b.x, a.y + b.y}; }
    friend PlaneVec operator-(const PlaneVec& a, const PlaneVec& b) { return {a.x - b.x, a.y - b.y}; }
    friend PlaneVec operator*(const S& c, const PlaneVec& a) { return {c * a.x, c * a.y}; }
};

// p.x q.y - p.y q.x, the 2x2 determinant every criterion is built from.
template <class S>
S det2(const PlaneVec<S>& p, const PlaneVec<S>& q) {
    return p.x * q.y - p.y * q.x;
}

template <class S>
S dot(const PlaneVec<S>& p, const PlaneVec<S>& q) {
    return p.x * q.x + p.y * q.y;
}

template <class S>
S norm_sq(const PlaneVec<S>& p) {
    return dot(p, p);
}

// Anticlockwise rotation by pi/2: (x, y) -> (-y, x).
template <class S>
PlaneVec<S> rotate90(const PlaneVec<S>& p) {
    return {-p.y, p.x};
}

// A plane curve germ at t = 0 as a pair of jets. Both components always
// share the same truncation order; the constructor truncates to the smaller
// one so that mixed-order arithmetic stays honest.
template <class S>
struct CurveJet {
    Jet<S> x;
    Jet<S> y;

    CurveJet(Jet<S> xj, Jet<S> yj) : x(std::move(xj)), y(std::move(yj)) {
        const int n = std::min(x.order(), y.order());
        if (x.order() != n) x = truncate(x, n);
        if (y.order() != n) y = truncate(y, n);
    }

    int order() const { return x.order(); }

    bool operator==(const CurveJet&) const = default;
};

template <class S>
CurveJet<S> truncate(const CurveJet<S>& c, int order) {
    return {truncate(c.x, order), truncate(c.y, order)};
}

template <class S>
CurveJet<S> derivative(const CurveJet<S>& c) {
    return {derivative(c.x), derivative(c.y)};
}

template <class S>
CurveJet<S> operator-(const CurveJet<S>& a, const CurveJet<S>& b) {
    return {a.x - b.x, a.y - b.y};
}

template <class S>
CurveJet<S> operator+(const CurveJet<S>& a, const CurveJet<S>& b) {
    return {a.x + b.x, a.y + b.y};
}

// Componentwise scaling by a jet.
template <class S>
CurveJet<S> operator*(const Jet<S>& s, const CurveJet<S>& c) {
    return {s * c.x, s * c.y};
}

template <class S>
Jet<S> dot(const CurveJet<S>& a, const CurveJet<S>& b) {
    return a.x * b.x + a.y * b.y;
}

template <class S>
CurveJet<S> rotate90(const CurveJet<S>& c) {
    return {-c.y, c.x};
}

template <class S>
CurveJet<S> shift_down(const CurveJet<S>& c, int k, double tol = -1.0) {
    return {shift_down(c.x, k, tol), shift_down(c.y, k, tol)};
}

// gamma^(k)(0) = k! * (x_k, y_k).
template <class S>
PlaneVec<S> deriv_vec(const CurveJet<S>& c, int k) {
    if (k < 0 || k > c.order())
        throw domain_error("deriv_vec: derivative order exceeds trustworthy jet order");
    S f = scalar_traits<S>::one();
    for (int i = 2; i <= k; ++i) f *= scalar_traits<S>::from_int(i);
    return {f * c.x.coeff(k), f * c.y.coeff(k)};
}

// gamma^(k)(0) = 0, tested on the jet coefficients themselves.
template <class S>
bool deriv_vanishes(const CurveJet<S>& c, int k, double tol = -1.0) {
    return coeff_is_zero(c.x, k, tol) && coeff_is_zero(c.y, k, tol);
}

// Smallest k >= 1 with gamma^(k)(0) != 0; empty if all vanish to jet order.
template <class S>
std::optional<int> curve_valuation(const CurveJet<S>& c, double tol = -1.0) {
    for (int k = 1; k <= c.order(); ++k)
        if (!deriv_vanishes(c, k, tol)) return k;
    return std::nullopt;
}

template <class S>
std::pair<double, double> eval_point(const CurveJet<S>& c, double t) {
    return {eval(c.x, t), eval(c.y, t)};
}

} // namespace cusp

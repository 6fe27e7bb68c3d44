#pragma once

#include <string>
#include <vector>

#include "cusp/curve.hpp"

namespace cusp {

// Legendre frame of a front germ. With gamma' = t^k u and u(0) != 0,
//   nu = M(u) / |u|,   mu = M(nu),
// where M is the anticlockwise rotation by pi/2. The orientation is fixed
// by this formula: det(u(0), nu(0)) > 0.
template <class S>
struct LegendreFrame {
    CurveJet<S> u;  // reduced tangent direction
    CurveJet<S> nu; // unit normal
    CurveJet<S> mu; // M(nu)
    int k = 0;      // valuation of gamma'
};

template <class S>
LegendreFrame<S> legendre_frame(const CurveJet<S>& c, double tol = -1.0) {
    const CurveJet<S> d = derivative(c);
    auto kx = valuation(d.x, tol);
    auto ky = valuation(d.y, tol);
    if (!kx && !ky) throw domain_error("legendre_frame: the tangent jet vanishes identically");
    int k;
    if (kx && ky)
        k = std::min(*kx, *ky);
    else
        k = kx ? *kx : *ky;

    const CurveJet<S> u = shift_down(d, k, tol);
    const Jet<S> nrm = sqrt(dot(u, u), tol); // exact backend: |u(0)|^2 must be a rational square
    const CurveJet<S> mu0 = rotate90(u);
    CurveJet<S> nu{div(mu0.x, nrm, tol), div(mu0.y, nrm, tol)};
    CurveJet<S> mu = rotate90(nu);
    return {u, std::move(nu), std::move(mu), k};
}

// The curvature of the Legendre immersion: ell = nu' . mu, beta = gamma' . mu.
// ell(0) != 0 certifies the absence of an inflection point at t = 0.
template <class S>
struct CurvaturePair {
    Jet<S> ell;
    Jet<S> beta;
};

template <class S>
CurvaturePair<S> curvature_pair(const CurveJet<S>& c, const LegendreFrame<S>& f) {
    return {dot(derivative(f.nu), f.mu), dot(derivative(c), f.mu)};
}

// One level of an evolute chain: the curve Ev^i, its curvature pair
// (ell, beta_i), the rotated normal M^i(nu), the singularity flag at t = 0
// and the order through which the level's jets are trustworthy.
template <class S>
struct EvoluteLevel {
    CurveJet<S> curve;
    CurvaturePair<S> pair;
    CurveJet<S> normal;
    bool singular_at_0 = false;
    int trusted_order = 0;
};

template <class S>
struct EvoluteChain {
    std::vector<EvoluteLevel<S>> levels; // levels[i] is Ev^i, levels[0] the input curve
};

// Iterates Ev^i = Ev^{i-1} - (beta_{i-1}/ell) M^{i-1}(nu) with
// beta_i = d/dt (beta_{i-1}/ell); ell is the ell of the original frame
// throughout, since (Ev^i, M^i(nu)) has curvature (ell, beta_i).
// Each level loses one trustworthy order to the derivative in beta_i.
template <class S>
EvoluteChain<S> evolute_chain(const CurveJet<S>& c, int m, double tol = -1.0) {
    if (m < 0) throw domain_error("evolute_chain: negative level count");
    const LegendreFrame<S> frame = legendre_frame(c, tol);
    const CurvaturePair<S> pair0 = curvature_pair(c, frame);

    if (coeff_is_zero(pair0.ell, 0, tol))
        throw domain_error("evolute_chain: inflection point at t = 0 (ell(0) = 0)");

    const int T0 = std::min(frame.nu.order(), pair0.beta.order());
    if (T0 - m < 2)
        throw domain_error("evolute_chain: order budget exhausted after " + std::to_string(m) +
                           " evolute steps (trusted order " + std::to_string(T0) + " at level 0)");

    auto singular_at_0 = [&](const CurveJet<S>& curve) {
        if (curve.order() < 1) throw domain_error("evolute_chain: singularity flag beyond trusted order");
        return coeff_is_zero(curve.x, 1, tol) && coeff_is_zero(curve.y, 1, tol);
    };

    EvoluteChain<S> chain;
    CurveJet<S> level_curve = truncate(c, T0);
    CurveJet<S> normal = truncate(frame.nu, T0);
    Jet<S> beta = pair0.beta;
    const Jet<S>& ell = pair0.ell;
    chain.levels.push_back({level_curve, {ell, beta}, normal, singular_at_0(level_curve), T0});

    for (int i = 1; i <= m; ++i) {
        const Jet<S> offset = div(beta, ell, tol);
        level_curve = level_curve - offset * normal;
        beta = derivative(offset);
        normal = rotate90(normal);
        const int trusted = T0 - i;
        level_curve = truncate(level_curve, trusted);
        chain.levels.push_back({level_curve, {ell, beta}, truncate(normal, trusted), singular_at_0(level_curve),
                                trusted});
    }
    return chain;
}

// True when t = 0 stays singular on Ev^1 .. Ev^{n-1}: the curve is then not
// A-equivalent to the (n, n+1)-cusp.
template <class S>
bool negative_criterion(const CurveJet<S>& c, int n, double tol = -1.0) {
    if (n < 2) throw domain_error("negative_criterion: n must be at least 2");
    if (!deriv_vanishes(c, 1, tol)) throw domain_error("negative_criterion: t = 0 is not a singular point");
    const EvoluteChain<S> chain = evolute_chain(c, n - 1, tol);
    for (int i = 1; i <= n - 1; ++i)
        if (!chain.levels[static_cast<std::size_t>(i)].singular_at_0) return false;
    return true;
}

// Cross-checks the biconditional between the derivative-vanishing pattern
// of gamma at 0 and the singularity flags of the evolute chain: for each
// i = 1..n,
//   gamma^(j)(0) = 0 for j = 2..i+1   <=>   Ev^1..Ev^i all singular at 0.
// Returns whether the two sides agree on the given curve. (Levels past the
// first regular one may be singular again for unrelated reasons; the
// statement says nothing about them, and neither does this check.)
template <class S>
bool fact25_crosscheck(const CurveJet<S>& c, int n, double tol = -1.0) {
    if (n < 1) throw domain_error("fact25_crosscheck: n must be at least 1");
    if (c.order() < n + 1) throw domain_error("fact25_crosscheck: jet order below n + 1");
    const EvoluteChain<S> chain = evolute_chain(c, n, tol);
    bool vanish_prefix = true;
    bool singular_prefix = true;
    for (int i = 1; i <= n; ++i) {
        vanish_prefix = vanish_prefix && deriv_vanishes(c, i + 1, tol);
        singular_prefix = singular_prefix && chain.levels[static_cast<std::size_t>(i)].singular_at_0;
        if (vanish_prefix != singular_prefix) return false;
    }
    return true;
}

} // namespace cusp

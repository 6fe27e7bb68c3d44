#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cusp/classify.hpp"

namespace cusp {

// Seeded generators for the randomized invariance suites. Coefficients are
// kept small so that exact arithmetic stays fast through the reduction
// chains.
class CurveSampler {
public:
    explicit CurveSampler(std::uint64_t seed) : rng_(seed) {}

    long uniform_int(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }

    Rational small_rational() {
        return Rational(uniform_int(-6, 6), uniform_int(1, 4));
    }

    Rational nonzero_rational() {
        for (;;) {
            Rational r = small_rational();
            if (!r.is_zero()) return r;
        }
    }

    // Source diffeomorphism jet: psi(0) = 0, psi'(0) != 0, a few higher terms.
    Jet<Rational> reparam_jet(int order) {
        Jet<Rational> psi(order);
        psi.set_coeff(1, nonzero_rational());
        for (int k = 2; k <= std::min(order, 5); ++k)
            if (uniform_int(0, 1)) psi.set_coeff(k, small_rational());
        return psi;
    }

    // Plane map with random invertible linear part plus a few quadratic and
    // cubic terms.
    PlanePolyMap<Rational> plane_map() {
        PlanePolyMap<Rational> phi;
        for (;;) {
            phi.first = {{1, 0, small_rational()}, {0, 1, small_rational()}};
            phi.second = {{1, 0, small_rational()}, {0, 1, small_rational()}};
            if (!phi.jacobian_det_at_origin().is_zero()) break;
        }
        const std::pair<int, int> high[] = {{2, 0}, {1, 1}, {0, 2}, {3, 0}, {2, 1}, {1, 2}, {0, 3}};
        for (auto [px, py] : high) {
            if (uniform_int(0, 2) == 0) phi.first.push_back({px, py, small_rational()});
            if (uniform_int(0, 2) == 0) phi.second.push_back({px, py, small_rational()});
        }
        return phi;
    }

    // Random curve with gamma'(0) = gamma''(0) = gamma'''(0) = 0,
    // gamma^(4)(0) != 0 and A = det(gamma^(5), gamma^(4)) != 0.
    CurveJet<Rational> curve_45_family(int order) {
        for (;;) {
            Jet<Rational> x(order), y(order);
            for (int k = 4; k <= order; ++k) {
                x.set_coeff(k, small_rational());
                y.set_coeff(k, small_rational());
            }
            CurveJet<Rational> c{x, y};
            PlaneVec<Rational> g4{x.coeff(4), y.coeff(4)};
            PlaneVec<Rational> g5{x.coeff(5), y.coeff(5)};
            if (g4 == PlaneVec<Rational>{} || det2(g5, g4).is_zero()) continue;
            return c;
        }
    }

    // Random curve classified by one of the if-and-only-if criteria (the
    // sufficient-only (2,n) conditions are not diffeomorphism invariants,
    // so curves landing there are resampled).
    CurveJet<Rational> iff_classified_curve(int order) {
        for (;;) {
            const long family = uniform_int(0, 6);
            Jet<Rational> x(order), y(order);
            int base = 1;
            switch (family) {
                case 0: base = 1; break;               // regular
                case 1: base = 2; break;               // (2,*) chain
                case 2: base = 3; break;               // (3,*) chain
                case 3: base = 4; break;               // (4,5) trichotomy
                case 4: base = 5; break;               // C^1 only
                case 5: base = 6; break;               // C^1 only
                case 6: base = 2; break;               // sparse (2,*) variants
            }
            x.set_coeff(base, nonzero_rational());
            for (int k = base; k <= std::min(order, base + 6); ++k) {
                if (uniform_int(0, 1)) x.set_coeff(k, small_rational());
                if (uniform_int(0, 1)) y.set_coeff(k, small_rational());
            }
            if (family == 6) {
                // thin out to reach the deeper (2,5)/(2,7) branches
                for (int k = 3; k <= std::min(order, 6); ++k) {
                    x.set_coeff(k, Rational());
                    y.set_coeff(k, Rational());
                }
                y.set_coeff(std::min<int>(order, static_cast<int>(uniform_int(5, 7))), nonzero_rational());
            }
            CurveJet<Rational> c{x, y};
            Classification<Rational> r = classify(c);
            switch (r.cls.tag) {
                case CuspTag::cusp_2_n:
                case CuspTag::inconclusive: continue;
                default: return c;
            }
        }
    }

private:
    std::mt19937_64 rng_;
};

// Exact equality of kappa_q across two curves, decided in rational
// arithmetic: sign(num1) = sign(num2) and num1^2 q2^5 = num2^2 q1^5 with
// q = |gamma^(4)(0)|^2.
inline bool kappa_q_equal_exact(const Witness<Rational>& w1, const Witness<Rational>& w2,
                                const PlaneVec<Rational>& g4_1, const PlaneVec<Rational>& g4_2) {
    const Rational &n1 = *w1.numerator, &n2 = *w2.numerator;
    if (n1.sign() != n2.sign()) return false;
    const Rational q1 = norm_sq(g4_1), q2 = norm_sq(g4_2);
    auto pow5 = [](const Rational& q) { return q * q * q * q * q; };
    return n1 * n1 * pow5(q2) == n2 * n2 * pow5(q1);
}

struct SuiteResult {
    std::string name;
    int pass = 0;
    int fail = 0;
    std::string first_failure;

    void record(bool ok, const std::string& what) {
        if (ok) {
            ++pass;
        } else {
            ++fail;
            if (first_failure.empty()) first_failure = what;
        }
    }
};

// Classification tag is unchanged by source reparametrizations.
inline SuiteResult suite_class_reparam(int trials, std::uint64_t seed, int order = 16) {
    CurveSampler gen(seed);
    SuiteResult res;
    res.name = "class_reparam";
    for (int i = 0; i < trials; ++i) {
        CurveJet<Rational> c = gen.iff_classified_curve(order);
        Jet<Rational> psi = gen.reparam_jet(order);
        Classification<Rational> before = classify(c);
        Classification<Rational> after = classify(apply_reparam(c, psi));
        const bool ok = before.cls.tag == after.cls.tag && before.cls.n == after.cls.n;
        res.record(ok, std::string(to_string(before.cls.tag)) + " -> " + to_string(after.cls.tag));
    }
    return res;
}

// Classification tag is unchanged by polynomial target diffeomorphisms.
inline SuiteResult suite_class_plane_map(int trials, std::uint64_t seed, int order = 16) {
    CurveSampler gen(seed);
    SuiteResult res;
    res.name = "class_plane_map";
    for (int i = 0; i < trials; ++i) {
        CurveJet<Rational> c = gen.iff_classified_curve(order);
        PlanePolyMap<Rational> phi = gen.plane_map();
        Classification<Rational> before = classify(c);
        Classification<Rational> after = classify(apply_plane_map(c, phi));
        const bool ok = before.cls.tag == after.cls.tag && before.cls.n == after.cls.n;
        res.record(ok, std::string(to_string(before.cls.tag)) + " -> " + to_string(after.cls.tag));
    }
    return res;
}

// sign(-77 B^2 + 105 A D + 60 A C) is unchanged by reparametrizations
// (factor psi'(0)^20 > 0) and by plane maps (factor det(J(0))^2 > 0).
inline SuiteResult suite_numerator_sign(int trials, std::uint64_t seed, int order = 12) {
    CurveSampler gen(seed);
    SuiteResult res;
    res.name = "numerator_sign";
    for (int i = 0; i < trials; ++i) {
        CurveJet<Rational> c = gen.curve_45_family(order);
        const int s0 = invariant_quadruple(c).numerator->sign();
        const int s1 = invariant_quadruple(apply_reparam(c, gen.reparam_jet(order))).numerator->sign();
        const int s2 = invariant_quadruple(apply_plane_map(c, gen.plane_map())).numerator->sign();
        res.record(s0 == s1 && s0 == s2,
                   "signs " + std::to_string(s0) + ", " + std::to_string(s1) + ", " + std::to_string(s2));
    }
    return res;
}

// kappa_q is exactly invariant under reparametrizations: numerator and
// denominator both pick up the factor |psi'(0)|^20.
inline SuiteResult suite_kappa_q_reparam(int trials, std::uint64_t seed, int order = 12) {
    CurveSampler gen(seed);
    SuiteResult res;
    res.name = "kappa_q_reparam";
    for (int i = 0; i < trials; ++i) {
        CurveJet<Rational> c = gen.curve_45_family(order);
        CurveJet<Rational> c2 = apply_reparam(c, gen.reparam_jet(order));
        Witness<Rational> w1 = invariant_quadruple(c);
        Witness<Rational> w2 = invariant_quadruple(c2);
        res.record(kappa_q_equal_exact(w1, w2, deriv_vec(c, 4), deriv_vec(c2, 4)), "kappa_q mismatch");
    }
    return res;
}

// -77 B^2 + 105 A D + 60 A C = 20901888000 T for every admissible curve.
// `weight_b2` exists as a negative control: passing -76 instead of -77
// must make the suite fail.
inline SuiteResult suite_normal_form_T(int trials, std::uint64_t seed, long weight_b2 = -77,
                                       int order = 12) {
    CurveSampler gen(seed);
    SuiteResult res;
    res.name = "normal_form_T";
    const Rational factor(20901888000L);
    for (int i = 0; i < trials; ++i) {
        CurveJet<Rational> c = gen.curve_45_family(order);
        Witness<Rational> w = invariant_quadruple(c);
        const Rational num =
            Rational(weight_b2) * (*w.B) * (*w.B) + Rational(105) * (*w.A) * (*w.D) + Rational(60) * (*w.A) * (*w.C);
        if (weight_b2 == -77 && num != *w.numerator) {
            res.record(false, "suite numerator disagrees with the witness");
            continue;
        }
        const Rational T = normal_form_T(c);
        res.record(num == factor * T, "numerator " + num.to_string() + " != 20901888000 * " + T.to_string());
    }
    return res;
}

} // namespace cusp

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cusp/expr.hpp"

using namespace cusp;
using R = Rational;

TEST_CASE("to_jet: monomials, the cycloid, exact rational coefficients") {
    auto c = to_jet<R>(CurveExpr::parse("t^4", "t^5 + t^7"), 8);
    for (int k = 0; k <= 8; ++k) {
        CHECK(c.x.coeff(k) == (k == 4 ? R(1) : R(0)));
        CHECK(c.y.coeff(k) == (k == 5 || k == 7 ? R(1) : R(0)));
    }

    auto cyc = to_jet<R>(CurveExpr::parse("t - sin(t)", "1 - cos(t)"), 5);
    CHECK(cyc.x.coeff(3) == R(1, 6));
    CHECK(cyc.x.coeff(5) == R(-1, 120));
    CHECK(cyc.y.coeff(2) == R(1, 2));
    CHECK(cyc.y.coeff(4) == R(-1, 24));
    CHECK(cyc.x.coeff(0) == R(0));
    CHECK(cyc.y.coeff(1) == R(0));

    auto h = to_jet<R>(CurveExpr::parse("3/2 * t^4", "t"), 4);
    CHECK(h.x.coeff(4) == R(3, 2));

    CHECK_THROWS_AS(to_jet<R>(CurveExpr::parse("t", "t"), 0), domain_error);
}

TEST_CASE("deriv_vec returns factorial-scaled coefficients") {
    auto c = to_jet<R>(CurveExpr::parse("t^4", "t^5"), 8);
    CHECK(deriv_vec(c, 4) == PlaneVec<R>{R(24), R(0)});
    CHECK(deriv_vec(c, 5) == PlaneVec<R>{R(0), R(120)});

    auto c2 = to_jet<R>(CurveExpr::parse("t^4", "t^5 + t^7"), 8);
    CHECK(deriv_vec(c2, 7) == PlaneVec<R>{R(0), R(5040)});

    CHECK_THROWS_AS(deriv_vec(c, 9), domain_error);
}

TEST_CASE("det2") {
    CHECK(det2(PlaneVec<R>{R(0), R(120)}, PlaneVec<R>{R(24), R(0)}) == R(-2880));
    PlaneVec<R> p{R(3), R(-7)};
    CHECK(det2(p, p) == R(0));
    CHECK(det2(PlaneVec<R>{R(1), R(0)}, PlaneVec<R>{R(0), R(1)}) == R(1));

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int i = 0; i < 50; ++i) {
        PlaneVec<R> a{R(d(rng)), R(d(rng))}, b{R(d(rng)), R(d(rng))}, c{R(d(rng)), R(d(rng))};
        R s(d(rng));
        CHECK(det2(a + b, c) == det2(a, c) + det2(b, c));
        CHECK(det2(s * a, c) == s * det2(a, c));
        CHECK(det2(a, b) == -det2(b, a));
    }
}

TEST_CASE("rotate90 is the anticlockwise quarter turn") {
    CHECK(rotate90(PlaneVec<R>{R(1), R(0)}) == PlaneVec<R>{R(0), R(1)});
    CHECK(rotate90(PlaneVec<R>{R(0), R(1)}) == PlaneVec<R>{R(-1), R(0)});
    CHECK(rotate90(PlaneVec<R>{R(4), R(5)}) == PlaneVec<R>{R(-5), R(4)});

    PlaneVec<R> v{R(3), R(-2)};
    auto r2 = rotate90(rotate90(v));
    CHECK(r2 == PlaneVec<R>{-v.x, -v.y});
    CHECK(rotate90(rotate90(r2)) == v);
}

TEST_CASE("eval_points") {
    auto c = CurveExpr::parse("t^4", "t^5");
    auto pts = eval_points(c, -1.0, 1.0, 3);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0][0] == doctest::Approx(1.0));
    CHECK(pts[0][1] == doctest::Approx(-1.0));
    CHECK(pts[1][0] == doctest::Approx(0.0));
    CHECK(pts[1][1] == doctest::Approx(0.0));
    CHECK(pts[2][0] == doctest::Approx(1.0));
    CHECK(pts[2][1] == doctest::Approx(1.0));

    auto k = eval_points(CurveExpr::parse("2", "1/2"), 0.0, 1.0, 4);
    for (auto& p : k) {
        CHECK(p[0] == doctest::Approx(2.0));
        CHECK(p[1] == doctest::Approx(0.5));
    }

    auto cyc = eval_points(CurveExpr::parse("t - sin(t)", "1 - cos(t)"), 0.0, 1.0, 2);
    CHECK(cyc[0][0] == doctest::Approx(0.0));
    CHECK(cyc[0][1] == doctest::Approx(0.0));

    CHECK_THROWS_AS(eval_points(c, 0.0, 1.0, 1), domain_error);
}

TEST_CASE("parser accepts the grammar") {
    CHECK_NOTHROW(parse_expression("t^4 - 3/2*t^6 + (1 - t)^2"));
    CHECK_NOTHROW(parse_expression("sin(t)*cos(t) - exp(t^2)"));
    CHECK_NOTHROW(parse_expression("-t"));
    CHECK_NOTHROW(parse_expression("  12/7  "));

    // '^' binds to the whole base, including a leading minus
    auto e = parse_expression("-t^2");
    CHECK(eval_num(*e, 3.0) == doctest::Approx(9.0));

    // '/' is part of the rational token, not an operator
    CHECK_THROWS_AS(parse_expression("t/2"), parse_error);
}

TEST_CASE("parser reports position and expectation") {
    auto expect_fail = [](const std::string& src, std::size_t pos) {
        try {
            parse_expression(src);
            FAIL(("no parse error for: " + src));
        } catch (const parse_error& e) {
            CHECK(e.position() == pos);
            CHECK(!e.expected().empty());
        }
    };
    expect_fail("t^", 2);
    expect_fail("sin t", 4);
    expect_fail("2/ 3", 2);
    expect_fail("", 0);
    expect_fail("t +", 3);
    expect_fail("(t", 2);
    expect_fail("t)", 1);
    expect_fail("log(t)", 0);
}

TEST_CASE("jet evaluation agrees with numeric evaluation on polynomials") {
    const char* exprs[] = {"t^4", "t^5 - t^7", "(1/2 - t)^3 * (t + 2)", "3/4*t^2 - t*(1 - t)^2",
                           "-(t - 1/3)^2 + t^5"};
    for (const char* src : exprs) {
        auto e = parse_expression(src);
        auto j = expr_to_jet<R>(*e, Jet<R>::variable(8));
        for (double t : {-1.0, -0.3, 0.0, 0.5, 1.0}) {
            CHECK(eval(j, t) == doctest::Approx(eval_num(*e, t)).epsilon(1e-12));
        }
    }
}

TEST_CASE("curve components are truncated to a common order") {
    CurveJet<R> c{Jet<R>::variable(5), Jet<R>::variable(9)};
    CHECK(c.order() == 5);
    CHECK(c.x.order() == c.y.order());
}

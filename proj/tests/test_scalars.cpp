#include "doctest.h"

#include "torsionforge/errors.hpp"
#include "torsionforge/scalar.hpp"

#include <cmath>

using namespace torsionforge;

namespace {

// r, t, u1, u2 free; delta a sign; s = sqrt(r^4 - u1^2 - u2^2).
RingPtr metric_ring() {
    Ring::Decl s;
    s.name = "s";
    s.kind = ParamKind::Radical;
    s.radicand = {{Rational(1), {{"r", 4}}},
                  {Rational(-1), {{"u1", 2}}},
                  {Rational(-1), {{"u2", 2}}}};
    return Ring::make({{"r"}, {"t"}, {"u1"}, {"u2"}, {"delta", ParamKind::Sign}, s});
}

// eps, rho free; w = sqrt(7).
RingPtr region_ring() {
    Ring::Decl w;
    w.name = "w";
    w.kind = ParamKind::Radical;
    w.radicand = {{Rational(7), {}}};
    return Ring::make({{"eps"}, {"rho"}, w});
}

}  // namespace

TEST_CASE("rational parsing and roots") {
    CHECK(rational_from_string("3/4") == Rational(3, 4));
    CHECK(rational_from_string("-5") == Rational(-5));
    CHECK(rational_from_string("0") == 0);
    CHECK_THROWS_AS(rational_from_string("1.5"), Error);
    CHECK_THROWS_AS(rational_from_string("2/0"), Error);
    CHECK_THROWS_AS(rational_from_string(""), Error);

    CHECK(exact_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK(exact_sqrt(Rational(256)) == Rational(16));
    CHECK(exact_sqrt(Rational(0)) == Rational(0));
    CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
    CHECK_FALSE(exact_sqrt(Rational(-4)).has_value());
    CHECK_FALSE(exact_sqrt(Rational(600)).has_value());

    CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(rational_pow(Rational(-2), 3) == Rational(-8));
    CHECK(rational_pow(Rational(7), 0) == 1);
    CHECK_THROWS_AS(rational_pow(Rational(0), -1), DivisionByZero);
}

TEST_CASE("sign symbols square to one") {
    auto ring = metric_ring();
    Scalar delta = Scalar::var(ring, "delta");
    CHECK(delta * delta == Scalar::one(ring));
    CHECK(delta.pow(3) == delta);
    CHECK(delta.pow(4) == Scalar::one(ring));
    CHECK(delta != Scalar::one(ring));
}

TEST_CASE("radical powers rewrite into the radicand") {
    auto ring = metric_ring();
    Scalar s = Scalar::var(ring, "s");
    Scalar radicand = Scalar::var(ring, "r").pow(4) - Scalar::var(ring, "u1").pow(2)
                    - Scalar::var(ring, "u2").pow(2);
    CHECK(s * s == radicand);
    CHECK(s.pow(3) == s * radicand);
    CHECK(s.pow(4) == radicand * radicand);

    Scalar t = Scalar::var(ring, "t");
    Scalar sum_sq = (s + t) * (s + t);
    CHECK(sum_sq == radicand + Scalar::constant(ring, 2) * s * t + t * t);
}

TEST_CASE("independent radicals do not mix") {
    auto ring = region_ring();
    Scalar w = Scalar::var(ring, "w");
    CHECK(w * w == Scalar::constant(ring, 7));
    CHECK(w.pow(5) == Scalar::constant(ring, 49) * w);
    CHECK_FALSE(w.is_constant());
}

TEST_CASE("exact evaluation derives radical values from the radicand") {
    auto ring = metric_ring();
    Scalar s = Scalar::var(ring, "s");

    Assignment good{{"r", 5}, {"u1", 12}, {"u2", 15}};
    CHECK(s.eval(good) == 16);
    Assignment good2{{"r", 3}, {"u1", 1}, {"u2", 4}};
    CHECK(s.eval(good2) == 8);

    Assignment bad{{"r", 5}, {"u1", 3}, {"u2", 4}};
    CHECK_THROWS_AS(s.eval(bad), NotPerfectSquare);
    try {
        s.eval(bad);
    } catch (const NotPerfectSquare& e) {
        CHECK(e.param == "s");
        CHECK(e.value == "600");
    }

    Assignment assigned{{"r", 5}, {"u1", 12}, {"u2", 15}, {"s", 16}};
    CHECK_THROWS_AS(s.eval(assigned), Error);
}

TEST_CASE("evaluation validates sign values and reports missing parameters") {
    auto ring = metric_ring();
    Scalar delta = Scalar::var(ring, "delta");
    CHECK(delta.eval({{"delta", 1}}) == 1);
    CHECK(delta.eval({{"delta", -1}}) == -1);
    CHECK_THROWS_AS(delta.eval({{"delta", 2}}), Error);
    try {
        delta.eval({});
    } catch (const MissingParam& e) {
        CHECK(e.param == "delta");
    }
    CHECK_THROWS_AS(delta.eval({}), MissingParam);
}

TEST_CASE("approximate evaluation") {
    auto ring = metric_ring();
    Scalar s = Scalar::var(ring, "s");
    double v = s.eval_approx({{"r", 2.0}, {"u1", 1.0}, {"u2", 1.0}});
    CHECK(v == doctest::Approx(std::sqrt(14.0)));
    CHECK_THROWS_AS(s.eval_approx({{"r", 1.0}, {"u1", 2.0}, {"u2", 0.0}}), Error);

    Scalar t = Scalar::var(ring, "t");
    Scalar q = (t * t + Scalar::one(ring)) / t;
    CHECK(q.eval_approx({{"t", 2.0}}) == doctest::Approx(2.5));
}

TEST_CASE("fractions reduce shared content and keep denominators positive") {
    auto ring = metric_ring();
    Poly t = Poly::var(ring, "t");
    Poly two_t2_plus_2t3 = Poly::constant(ring, 2) * t * t + Poly::constant(ring, 2) * t.pow(3);
    Poly four_t2 = Poly::constant(ring, 4) * t * t;
    Scalar q = Scalar::ratio(two_t2_plus_2t3, four_t2);
    CHECK(q.den().as_constant() == Rational(2));
    CHECK(q == Scalar::ratio(Poly::constant(ring, 1) + t, Poly::constant(ring, 2)));

    Scalar neg_den = Scalar::ratio(t, Poly::constant(ring, -2));
    CHECK(sgn(neg_den.den().terms().begin()->second) > 0);
    CHECK(neg_den == Scalar::ratio(-t, Poly::constant(ring, 2)));
}

TEST_CASE("equality is decided by cross-multiplication") {
    auto ring = metric_ring();
    Poly t = Poly::var(ring, "t");
    Poly one = Poly::constant(ring, 1);
    Scalar a = Scalar::ratio(t * t - one, t - one);
    Scalar b = Scalar::from_poly(t + one);
    CHECK(a == b);
    CHECK(a - b == Scalar::zero(ring));
    CHECK(a != Scalar::from_poly(t));
}

TEST_CASE("division by zero is rejected") {
    auto ring = metric_ring();
    CHECK_THROWS_AS(Scalar::one(ring) / Scalar::zero(ring), DivisionByZero);
    CHECK_THROWS_AS(Scalar::zero(ring).pow(-1), DivisionByZero);
    Poly t = Poly::var(ring, "t");
    Scalar q = Scalar::ratio(Poly::constant(ring, 1), t - Poly::constant(ring, 1));
    CHECK_THROWS_AS(q.eval({{"t", 1}}), DenominatorZero);
}

TEST_CASE("mixed-ring arithmetic is rejected") {
    auto a = metric_ring();
    auto b = region_ring();
    CHECK_THROWS_AS(Scalar::var(a, "t") + Scalar::var(b, "eps"), RingMismatch);
}

TEST_CASE("ring declarations are validated") {
    CHECK_THROWS_AS(Ring::make({{"x"}, {"x"}}), Error);
    Ring::Decl bad;
    bad.name = "s";
    bad.kind = ParamKind::Radical;
    bad.radicand = {{Rational(1), {{"y", 2}}}};
    CHECK_THROWS_AS(Ring::make({{"x"}, bad}), Error);
    Ring::Decl zero_rad;
    zero_rad.name = "s";
    zero_rad.kind = ParamKind::Radical;
    zero_rad.radicand = {};
    CHECK_THROWS_AS(Ring::make({{"x"}, zero_rad}), Error);
    CHECK_THROWS_AS(Poly::var(metric_ring(), "nope"), Error);
}

TEST_CASE("printing stays readable") {
    auto ring = metric_ring();
    CHECK(Scalar::var(ring, "t").str() == "t");
    CHECK(Scalar::constant(ring, Rational(3, 2)).str() == "3/2");
    CHECK(Scalar::zero(ring).str() == "0");
    Poly t = Poly::var(ring, "t");
    Scalar q = Scalar::ratio(t, Poly::constant(ring, 2) * t * t);
    CHECK(q.str() == "(1)/(2*t)");
    Scalar p = Scalar::var(ring, "t", 2) - Scalar::constant(ring, Rational(1, 2));
    CHECK(p.str() == "-1/2 + t^2");
}

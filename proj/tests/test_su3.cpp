#include "torsionforge/catalog.hpp"
#include "torsionforge/errors.hpp"
#include "torsionforge/su3.hpp"

#include "doctest.h"

#include <random>

namespace tf = torsionforge;

namespace {

tf::Model model(const std::string& name) { return tf::builtin(name, {}); }

tf::KForm random_form(const tf::RingPtr& ring, int degree, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    tf::KForm out(ring, degree);
    for (const auto& tup : tf::basis_tuples(degree))
        out.add_term(tup, tf::Scalar::constant(ring, coeff(rng)));
    return out;
}

}  // namespace

TEST_CASE("complex structure pairing on the adapted basis") {
    CHECK(tf::j_partner(1) == 2);
    CHECK(tf::j_partner(2) == 1);
    CHECK(tf::j_partner(5) == 6);
    CHECK(tf::j_partner(6) == 5);
    CHECK(tf::j_sign(1) == -1);
    CHECK(tf::j_sign(2) == 1);
    CHECK(tf::j_sign(3) == -1);
    CHECK(tf::j_sign(6) == 1);
    CHECK_THROWS_AS(tf::j_partner(0), tf::DimensionError);
    CHECK_THROWS_AS(tf::j_sign(7), tf::DimensionError);
}

TEST_CASE("apply_J on basis covectors and wedges") {
    auto m = model("h3");
    auto e = [&](std::initializer_list<int> idx) { return tf::KForm::basis(m.ring, idx); };

    CHECK(tf::apply_J(e({1})) == -e({2}));
    CHECK(tf::apply_J(e({2})) == e({1}));
    CHECK(tf::apply_J(e({5})) == -e({6}));
    CHECK(tf::apply_J(e({1, 2, 6})) == e({1, 2, 5}));
    CHECK(tf::apply_J(e({1, 2})) == e({1, 2}));
    CHECK(tf::apply_J(e({1, 3})) == e({2, 4}));
}

TEST_CASE("apply_J squares to (-1)^k") {
    auto m = model("sl2c");
    std::mt19937 rng(23u);
    for (int degree = 0; degree <= 6; ++degree) {
        for (int trial = 0; trial < 5; ++trial) {
            auto a = random_form(m.ring, degree, rng);
            auto twice = tf::apply_J(tf::apply_J(a));
            if (degree % 2 == 0) {
                CHECK(twice == a);
            } else {
                CHECK(twice == -a);
            }
        }
    }
}

TEST_CASE("fundamental form and volume normalisations") {
    for (const auto& name : tf::builtin_names()) {
        CAPTURE(name);
        auto m = model(name);
        const auto& s = *m.structure;
        auto e = [&](std::initializer_list<int> idx) { return tf::KForm::basis(m.ring, idx); };

        CHECK(s.fundamental_form() == e({1, 2}) + e({3, 4}) + e({5, 6}));
        CHECK(tf::apply_J(s.fundamental_form()) == s.fundamental_form());
        CHECK(tf::apply_J(s.re_psi()) == s.im_psi());
        CHECK(tf::apply_J(s.im_psi()) == -s.re_psi());

        auto volume = e({1, 2, 3, 4, 5, 6});
        auto six = tf::Scalar::constant(m.ring, 6);
        auto four = tf::Scalar::constant(m.ring, 4);
        CHECK(tf::wedge_pow(s.fundamental_form(), 3) == six * volume);
        CHECK(tf::wedge(s.re_psi(), s.im_psi()) == four * volume);
        CHECK(tf::wedge(s.fundamental_form(), s.re_psi()).is_zero());
        CHECK(tf::wedge(s.fundamental_form(), s.im_psi()).is_zero());
    }
}

TEST_CASE("torsion 3-form matches J dF") {
    for (const auto& name : tf::builtin_names()) {
        CAPTURE(name);
        auto m = model(name);
        auto T = tf::torsion_T(*m.structure);
        auto dF = m.algebra->d(m.structure->fundamental_form());
        CHECK(T == tf::apply_J(dF));
    }
}

TEST_CASE("nilpotent example torsion") {
    auto m = model("h3");
    auto t = tf::Scalar::var(m.ring, "t");
    auto e = [&](std::initializer_list<int> idx) { return tf::KForm::basis(m.ring, idx); };

    auto dF = m.algebra->d(m.structure->fundamental_form());
    CHECK(dF == tf::Scalar::constant(m.ring, 2) * t * (e({1, 2, 5}) - e({3, 4, 5})));

    auto T = tf::torsion_T(*m.structure);
    CHECK(T == tf::Scalar::constant(m.ring, -2) * t * (e({1, 2, 6}) - e({3, 4, 6})));
}

TEST_CASE("semisimple example torsion") {
    auto m = model("sl2c");
    auto t = tf::Scalar::var(m.ring, "t");
    auto e = [&](std::initializer_list<int> idx) { return tf::KForm::basis(m.ring, idx); };

    auto T = tf::torsion_T(*m.structure);
    auto expected = (tf::Scalar::constant(m.ring, -1) / t)
                    * (tf::Scalar::constant(m.ring, 3) * e({1, 3, 5}) + e({1, 4, 6})
                       + e({2, 3, 6}) + e({2, 4, 5}));
    CHECK(T == expected);
}

TEST_CASE("Chern torsion tensor spot values") {
    auto m = model("h3");
    auto C = tf::torsion_C(*m.structure);
    auto dF = m.algebra->d(m.structure->fundamental_form());
    // C(i,j,k) = dF(J e_i, e_j, e_k); J e_1 = -e_2.
    CHECK(C(1, 2, 5) == -dF({2, 2, 5}));
    CHECK(C(1, 2, 5).is_zero());
    CHECK(C(2, 2, 5) == dF({1, 2, 5}));
    auto t = tf::Scalar::var(m.ring, "t");
    CHECK(C(2, 2, 5) == tf::Scalar::constant(m.ring, 2) * t);
    CHECK(C(4, 4, 5) == tf::Scalar::constant(m.ring, -2) * t);
    CHECK(C(6, 5, 6).is_zero());
}

TEST_CASE("balanced metrics and closed volume forms") {
    for (const auto& name : tf::builtin_names()) {
        CAPTURE(name);
        auto m = model(name);
        CHECK(tf::balanced_check(*m.structure));
        CHECK(tf::psi_closed_check(*m.structure));
    }
}

TEST_CASE("perturbed volume forms are detected") {
    auto m = model("h3");
    auto e = [&](std::initializer_list<int> idx) { return tf::KForm::basis(m.ring, idx); };
    // d(e^356) = -2t e^1235 on this algebra, so the perturbed form is not closed.
    auto skew = m.structure->re_psi() + e({3, 5, 6});
    CHECK_FALSE(tf::psi_closed_check(*m.algebra, skew, m.structure->im_psi()));
}

TEST_CASE("Tensor3 container behaviour") {
    auto m = model("h3");
    tf::Tensor3 a(m.ring);
    auto one = tf::Scalar::one(m.ring);
    a.set(1, 2, 3, one);
    CHECK(a(1, 2, 3) == one);
    CHECK(a(3, 2, 1).is_zero());
    CHECK_FALSE(a.is_zero());
    a.set(1, 2, 3, tf::Scalar::zero(m.ring));
    CHECK(a.is_zero());
    CHECK_THROWS_AS(a.set(0, 1, 1, one), tf::DimensionError);
    CHECK_THROWS_AS(a(1, 1, 7), tf::DimensionError);

    tf::Tensor3 b(m.ring);
    b.set(2, 2, 2, one);
    a.set(2, 2, 2, one);
    CHECK(a == b);
    auto doubled = tf::Scalar::constant(m.ring, 2) * a;
    CHECK(doubled(2, 2, 2) == tf::Scalar::constant(m.ring, 2));
    CHECK((a + b) == doubled);
}

#include "doctest.h"

#include "torsionforge/errors.hpp"
#include "torsionforge/kform.hpp"

using namespace torsionforge;

namespace {

RingPtr t_ring() {
    return Ring::make({{"t"}});
}

Scalar sc(const RingPtr& ring, int n) {
    return Scalar::constant(ring, n);
}

}  // namespace

TEST_CASE("index tuples enumerate the full basis") {
    const int expected[] = {1, 6, 15, 20, 15, 6, 1};
    for (int k = 0; k <= 6; ++k) {
        auto tuples = basis_tuples(k);
        CHECK(tuples.size() == static_cast<std::size_t>(expected[k]));
        for (const auto& tup : tuples)
            for (std::size_t i = 1; i < tup.size(); ++i) CHECK(tup[i - 1] < tup[i]);
    }
    CHECK(basis_tuples(7).empty());
    CHECK(basis_tuples(-1).empty());
}

TEST_CASE("sorting indices tracks the permutation sign") {
    KForm::Indices a{2, 1};
    CHECK(sort_indices(a) == -1);
    CHECK(a == KForm::Indices{1, 2});
    KForm::Indices b{3, 1, 2};
    CHECK(sort_indices(b) == 1);
    KForm::Indices c{1, 1};
    CHECK(sort_indices(c) == 0);
    KForm::Indices d{6, 5, 4, 3, 2, 1};
    CHECK(sort_indices(d) == -1);
}

TEST_CASE("forms validate degree and indices") {
    auto ring = t_ring();
    CHECK_THROWS_AS(KForm(ring, 7), DegreeMismatch);
    CHECK_THROWS_AS(KForm(ring, -1), DegreeMismatch);
    KForm f(ring, 2);
    CHECK_THROWS_AS(f.add_term({1, 7}, Scalar::one(ring)), DimensionError);
    CHECK_THROWS_AS(f.add_term({0, 1}, Scalar::one(ring)), DimensionError);
    CHECK_THROWS_AS(f.add_term({1, 2, 3}, Scalar::one(ring)), DegreeMismatch);
    KForm g(ring, 3);
    CHECK_THROWS_AS(f + g, DegreeMismatch);
}

TEST_CASE("terms with repeated or reordered indices collapse correctly") {
    auto ring = t_ring();
    KForm f(ring, 2);
    f.add_term({2, 1}, Scalar::one(ring));
    CHECK(f.coefficient({1, 2}) == sc(ring, -1));
    f.add_term({1, 2}, Scalar::one(ring));
    CHECK(f.is_zero());
    f.add_term({3, 3}, Scalar::one(ring));
    CHECK(f.is_zero());
}

TEST_CASE("evaluation on frame vectors is antisymmetric") {
    auto ring = t_ring();
    KForm F(ring, 2);
    F.add_term({1, 2}, Scalar::one(ring));
    F.add_term({3, 4}, Scalar::one(ring));
    F.add_term({5, 6}, Scalar::one(ring));
    CHECK(F({1, 2}) == sc(ring, 1));
    CHECK(F({2, 1}) == sc(ring, -1));
    CHECK(F({1, 3}) == sc(ring, 0));
    CHECK(F({1, 1}) == sc(ring, 0));
    CHECK(F({5, 6}) == sc(ring, 1));
}

TEST_CASE("wedge is graded-commutative") {
    auto ring = t_ring();
    Scalar t = Scalar::var(ring, "t");
    KForm a(ring, 1);
    a.add_term({1}, t);
    a.add_term({3}, sc(ring, 2));
    KForm b(ring, 1);
    b.add_term({2}, sc(ring, 1));
    b.add_term({3}, t * t);
    CHECK(wedge(a, b) == -wedge(b, a));

    KForm c(ring, 2);
    c.add_term({1, 2}, t);
    c.add_term({4, 5}, sc(ring, -3));
    CHECK(wedge(a, c) == wedge(c, a));
    CHECK(wedge(c, c) == wedge(c, c));

    KForm d(ring, 3);
    d.add_term({1, 2, 3}, sc(ring, 1));
    d.add_term({4, 5, 6}, t);
    CHECK(wedge(a, d) == -wedge(d, a));
    CHECK(wedge(d, wedge(a, b)) == wedge(wedge(d, a), b));
}

TEST_CASE("wedge beyond the top degree overflows") {
    auto ring = t_ring();
    KForm a(ring, 4);
    a.add_term({1, 2, 3, 4}, Scalar::one(ring));
    KForm b(ring, 3);
    b.add_term({4, 5, 6}, Scalar::one(ring));
    CHECK_THROWS_AS(wedge(a, b), DegreeOverflow);
}

TEST_CASE("powers of the fundamental form") {
    auto ring = t_ring();
    KForm F(ring, 2);
    F.add_term({1, 2}, Scalar::one(ring));
    F.add_term({3, 4}, Scalar::one(ring));
    F.add_term({5, 6}, Scalar::one(ring));

    KForm F2 = wedge_pow(F, 2);
    KForm expected2(ring, 4);
    expected2.add_term({1, 2, 3, 4}, sc(ring, 2));
    expected2.add_term({1, 2, 5, 6}, sc(ring, 2));
    expected2.add_term({3, 4, 5, 6}, sc(ring, 2));
    CHECK(F2 == expected2);

    KForm F3 = wedge_pow(F, 3);
    KForm vol(ring, 6);
    vol.add_term({1, 2, 3, 4, 5, 6}, sc(ring, 6));
    CHECK(F3 == vol);

    CHECK(wedge_pow(F, 0) == KForm::from_scalar(Scalar::one(ring)));
    CHECK_THROWS_AS(wedge_pow(F, -1), Error);
    KForm half = KForm::from_scalar(sc(ring, 2));
    CHECK(wedge_pow(half, -1) == KForm::from_scalar(Scalar::constant(ring, Rational(1, 2))));
}

TEST_CASE("scalar multiples and basis constructors") {
    auto ring = t_ring();
    Scalar t = Scalar::var(ring, "t");
    KForm e12 = KForm::basis(ring, {1, 2});
    KForm e21 = KForm::basis(ring, {2, 1});
    CHECK(e21 == -e12);
    CHECK((t * e12).coefficient({1, 2}) == t);
    CHECK(KForm::basis(ring, {2, 2}).is_zero());
    CHECK(wedge(KForm::basis(ring, {1}), KForm::basis(ring, {2})) == e12);
}

TEST_CASE("printing forms") {
    auto ring = t_ring();
    Scalar t = Scalar::var(ring, "t");
    KForm f(ring, 2);
    CHECK(f.str() == "0");
    f.add_term({1, 2}, sc(ring, 1));
    CHECK(f.str() == "e1^e2");
    f.add_term({3, 4}, sc(ring, -2));
    CHECK(f.str() == "e1^e2 - 2*e3^e4");
    f.add_term({5, 6}, t);
    CHECK(f.str() == "e1^e2 - 2*e3^e4 + (t)*e5^e6");
}

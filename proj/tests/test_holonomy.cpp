#include "doctest.h"

#include "torsionforge/catalog.hpp"
#include "torsionforge/errors.hpp"
#include "torsionforge/holonomy.hpp"

#include <json.hpp>

using namespace torsionforge;

namespace {

Connection bismut(const Model& m) {
    return family_connection(*m.structure, parse_scalar(m.ring, "1/2"),
                             parse_scalar(m.ring, "0"));
}

}  // namespace

TEST_CASE("curvature operators are skew and vanish for the flat connection") {
    Model m = builtin("sl2c");
    Assignment point{{"t", Rational(1)}};
    for (const Endo& e : curvature_endos(curvature(*m.algebra, bismut(m)), point)) {
        CHECK(e.is_skew());
    }
    for (const Endo& e :
         curvature_endos(curvature(*m.algebra, flat_connection(m.ring)), point)) {
        CHECK(e.is_zero());
    }
}

TEST_CASE("semisimple curvature operator fixture") {
    Model m = builtin("sl2c");
    Assignment point{{"t", Rational(1)}};
    auto endos = curvature_endos(curvature(*m.algebra, bismut(m)), point);
    REQUIRE(endos.size() == 15);
    // The operators at (e1,e3) and (e2,e4) share the 2-form 2(e13 + e24)
    // under the metric-pairing convention omega(e_i, e_j) = -Omega^i_j.
    for (std::size_t idx : {std::size_t(1), std::size_t(6)}) {
        const Endo& e = endos[idx];
        CHECK(e.m[2][0] == Rational(2));
        CHECK(e.m[3][1] == Rational(2));
        CHECK(e.m[0][2] == Rational(-2));
        CHECK(e.m[1][3] == Rational(-2));
        CHECK(e.m[1][0] == Rational(0));
        CHECK(e.m[5][4] == Rational(0));
    }
}

TEST_CASE("solvable curvature operators at u = 0") {
    Model m = builtin("g7");
    Assignment point{{"r", Rational(1)}, {"t", Rational(1)}, {"u1", Rational(0)},
                     {"u2", Rational(0)}, {"delta", Rational(1)}};
    auto endos = curvature_endos(curvature(*m.algebra, bismut(m)), point);
    REQUIRE(endos.size() == 15);
    // Only R(e1,e2) = -R(e3,e4) survive, with 2-form 4 t^2/r^4 (e12 - e34).
    CHECK(endos[0].m[1][0] == Rational(4));
    CHECK(endos[0].m[3][2] == Rational(-4));
    CHECK(endos[9].m[1][0] == Rational(-4));
    CHECK(endos[9].m[3][2] == Rational(4));
    for (std::size_t i = 0; i < endos.size(); ++i) {
        if (i == 0 || i == 9) continue;
        CHECK(endos[i].is_zero());
    }
}

TEST_CASE("nilpotent holonomy rank is 1 at several points") {
    Model m = builtin("h3");
    Connection b = bismut(m);
    for (const Rational& t : {Rational(1), Rational(2), Rational(1, 2)}) {
        HolonomyResult res = holonomy_dimension(*m.structure, b, {{"t", t}});
        CHECK(res.dimension == 1);
        CHECK(res.classification == "u(1)");
        CHECK(res.generators_count >= 1);
        CHECK(res.iterations <= 36);
    }
}

TEST_CASE("semisimple holonomy rank is 3 with rotation-algebra brackets") {
    Model m = builtin("sl2c");
    Connection b = bismut(m);
    for (const Rational& t : {Rational(1), Rational(2), Rational(3)}) {
        HolonomyResult res = holonomy_dimension(*m.structure, b, {{"t", t}});
        CHECK(res.dimension == 3);
        CHECK(res.classification == "so(3)");
        CHECK(res.iterations <= 36);
    }
}

TEST_CASE("solvable holonomy rank fills su(3) whenever u is nonzero") {
    Model m = builtin("g7");
    Connection b = bismut(m);
    const std::vector<Assignment> points = {
        {{"r", Rational(5)}, {"t", Rational(1)}, {"u1", Rational(12)},
         {"u2", Rational(15)}, {"delta", Rational(1)}},
        {{"r", Rational(3)}, {"t", Rational(1)}, {"u1", Rational(1)},
         {"u2", Rational(4)}, {"delta", Rational(1)}},
        {{"r", Rational(3)}, {"t", Rational(2)}, {"u1", Rational(4)},
         {"u2", Rational(4)}, {"delta", Rational(-1)}},
    };
    for (const Assignment& point : points) {
        HolonomyResult res = holonomy_dimension(*m.structure, b, point);
        CHECK(res.dimension == 8);
        CHECK(res.classification == "su(3)");
        CHECK(res.iterations <= 36);
    }
}

TEST_CASE("solvable holonomy rank drops to 1 at u = 0") {
    Model m = builtin("g7");
    Connection b = bismut(m);
    for (auto [r, t] : {std::pair<Rational, Rational>{Rational(1), Rational(1)},
                        {Rational(2), Rational(1)},
                        {Rational(3), Rational(2)}}) {
        Assignment point{{"r", r}, {"t", t}, {"u1", Rational(0)}, {"u2", Rational(0)},
                         {"delta", Rational(1)}};
        HolonomyResult res = holonomy_dimension(*m.structure, b, point);
        CHECK(res.dimension == 1);
        CHECK(res.classification == "u(1)");
    }
}

TEST_CASE("a non-square radicand point is rejected exactly") {
    Model m = builtin("g7");
    Assignment bad{{"r", Rational(5)}, {"t", Rational(1)}, {"u1", Rational(3)},
                   {"u2", Rational(4)}, {"delta", Rational(1)}};
    CHECK_THROWS_AS(holonomy_dimension(*m.structure, bismut(m), bad), NotPerfectSquare);
}

TEST_CASE("the skew trace condition holds symbolically for the preferred connection") {
    for (const char* name : {"h3", "sl2c"}) {
        Model m = builtin(name);
        CHECK(su3_trace_condition(curvature(*m.algebra, bismut(m))));
    }
    for (int delta : {-1, 1}) {
        BuiltinOptions opt;
        opt.delta = delta;
        Model m = builtin("g7", opt);
        CHECK(su3_trace_condition(curvature(*m.algebra, bismut(m))));
    }
}

TEST_CASE("flat connection yields the zero holonomy span") {
    Model m = builtin("h3");
    HolonomyResult res =
        holonomy_dimension(*m.structure, flat_connection(m.ring), {{"t", Rational(1)}});
    CHECK(res.dimension == 0);
    CHECK(res.generators_count == 0);
}

TEST_CASE("holonomy JSON report round-trips its fields") {
    Model m = builtin("h3");
    HolonomySample sample;
    sample.algebra = "h3";
    sample.point = {{"t", Rational(1, 2)}};
    sample.result = holonomy_dimension(*m.structure, bismut(m), sample.point);
    std::string text = holonomy_report_json({sample, sample});
    auto parsed = nlohmann::json::parse(text);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0]["algebra"] == "h3");
    CHECK(parsed[0]["point"]["t"] == "1/2");
    CHECK(parsed[0]["dimension"] == 1);
    CHECK(parsed[0]["classification"] == "u(1)");
    CHECK(parsed[0]["generators_count"].is_number());
    CHECK(parsed[0]["iterations"].is_number());
}

TEST_CASE("commutator is antisymmetric and respects skewness") {
    Model m = builtin("sl2c");
    Assignment point{{"t", Rational(1)}};
    auto endos = curvature_endos(curvature(*m.algebra, bismut(m)), point);
    const Endo c = commutator(endos[1], endos[6]);
    const Endo cr = commutator(endos[6], endos[1]);
    CHECK(c.is_skew());
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(c.m[i][j] == -cr.m[i][j]);
}

#include "torsionforge/catalog.hpp"
#include "torsionforge/errors.hpp"

#include "doctest.h"

#include <json.hpp>

namespace tf = torsionforge;

TEST_CASE("builtin catalog names") {
    CHECK(tf::builtin_names() == std::vector<std::string>{"h3", "sl2c", "g7"});
    CHECK_THROWS_AS(tf::builtin("t3", {}), tf::UnknownName);
}

TEST_CASE("builtin parameter rings") {
    auto h3 = tf::builtin("h3", {});
    for (const char* p : {"t", "eps", "rho", "lambda", "mu"}) CHECK(h3.ring->index_of(p));
    CHECK(h3.ring->size() == 5);

    auto g7 = tf::builtin("g7", {});
    for (const char* p : {"r", "t", "u1", "u2", "eps", "rho", "lambda", "mu", "delta", "s"})
        CHECK(g7.ring->index_of(p));
    CHECK(g7.ring->size() == 10);
    CHECK(g7.ring->param(*g7.ring->index_of("delta")).kind == tf::ParamKind::Sign);
    CHECK(g7.ring->param(*g7.ring->index_of("s")).kind == tf::ParamKind::Radical);
    CHECK_FALSE(g7.domain_notes.empty());
}

TEST_CASE("baking parameter values into a builtin") {
    tf::BuiltinOptions opts;
    opts.values = {{"t", 1}};
    auto m = tf::builtin("h3", opts);
    CHECK_FALSE(m.ring->index_of("t"));
    auto e = [&](std::initializer_list<int> idx) { return tf::KForm::basis(m.ring, idx); };
    CHECK(m.algebra->d_basis(6) == tf::Scalar::constant(m.ring, -2) * (e({1, 2}) - e({3, 4})));
}

TEST_CASE("square-root parameter collapses at rational points") {
    tf::BuiltinOptions opts;
    opts.values = {{"r", 5}, {"u1", 12}, {"u2", 15}};
    auto m = tf::builtin("g7", opts);
    CHECK_FALSE(m.ring->index_of("s"));
    CHECK(m.ring->index_of("delta"));
    // s = 16 at this point, so d e6 has e13-coefficient 2 delta t u2 / (r^2 s) = (3/40) delta t.
    auto coeff = m.algebra->d_basis(6).coefficient({1, 3});
    auto expected = tf::Scalar::constant(m.ring, tf::Rational(3, 40))
                    * tf::Scalar::var(m.ring, "delta") * tf::Scalar::var(m.ring, "t");
    CHECK(coeff == expected);
}

TEST_CASE("baking the orientation sign") {
    tf::BuiltinOptions opts;
    opts.delta = -1;
    auto m = tf::builtin("g7", opts);
    CHECK_FALSE(m.ring->index_of("delta"));
    auto coeff = m.algebra->d_basis(6).coefficient({1, 2});
    auto r = tf::Scalar::var(m.ring, "r");
    auto t = tf::Scalar::var(m.ring, "t");
    CHECK(coeff == tf::Scalar::constant(m.ring, 2) * t / (r * r));
    CHECK_THROWS_AS(tf::builtin("h3", opts), tf::Error);
}

TEST_CASE("irrational parameter points") {
    tf::BuiltinOptions opts;
    opts.values = {{"r", 2}, {"u2", 0}};
    opts.radical_values = {{"u1", 15}, {"t", 6}};
    auto m = tf::builtin("g7", opts);
    CHECK_FALSE(m.ring->index_of("r"));
    CHECK_FALSE(m.ring->index_of("u2"));
    CHECK_FALSE(m.ring->index_of("s"));  // radicand 16 - 15 = 1 is a perfect square
    CHECK(m.ring->param(*m.ring->index_of("u1")).kind == tf::ParamKind::Radical);
    CHECK(m.ring->param(*m.ring->index_of("t")).kind == tf::ParamKind::Radical);

    auto u1 = tf::Scalar::var(m.ring, "u1");
    CHECK(u1 * u1 == tf::Scalar::constant(m.ring, 15));

    // With s = 1 the e25-coefficient of d e3 is -4 u1 / t.
    auto coeff = m.algebra->d_basis(3).coefficient({2, 5});
    auto t = tf::Scalar::var(m.ring, "t");
    CHECK(coeff * t == tf::Scalar::constant(m.ring, -4) * u1);
}

TEST_CASE("domain violations are rejected") {
    tf::BuiltinOptions zero_t;
    zero_t.values = {{"t", 0}};
    CHECK_THROWS_AS(tf::builtin("h3", zero_t), tf::Error);
    CHECK_THROWS_AS(tf::builtin("sl2c", zero_t), tf::Error);

    tf::BuiltinOptions zero_r;
    zero_r.values = {{"r", 0}};
    CHECK_THROWS_AS(tf::builtin("g7", zero_r), tf::Error);

    tf::BuiltinOptions fat_u;
    fat_u.values = {{"r", 1}, {"u1", 1}, {"u2", 1}};
    CHECK_THROWS_AS(tf::builtin("g7", fat_u), tf::Error);

    tf::BuiltinOptions stray;
    stray.values = {{"q", 1}};
    CHECK_THROWS_AS(tf::builtin("h3", stray), tf::UnknownName);

    tf::BuiltinOptions overlap;
    overlap.values = {{"t", 1}};
    overlap.radical_values = {{"t", 2}};
    CHECK_THROWS_AS(tf::builtin("h3", overlap), tf::Error);

    tf::BuiltinOptions square;
    square.radical_values = {{"t", 4}};
    CHECK_THROWS_AS(tf::builtin("h3", square), tf::Error);
}

TEST_CASE("non-square radicands survive as radicals") {
    tf::BuiltinOptions opts;
    opts.values = {{"r", 5}, {"u1", 3}, {"u2", 4}};
    auto m = tf::builtin("g7", opts);
    auto s_index = m.ring->index_of("s");
    REQUIRE(s_index);
    CHECK(m.ring->param(*s_index).kind == tf::ParamKind::Radical);
    auto s = tf::Scalar::var(m.ring, "s");
    CHECK(s * s == tf::Scalar::constant(m.ring, 600));
}

TEST_CASE("form parsing") {
    auto m = tf::builtin("h3", {});
    auto e = [&](std::initializer_list<int> idx) { return tf::KForm::basis(m.ring, idx); };
    auto t = tf::Scalar::var(m.ring, "t");

    CHECK(tf::parse_form(m.ring, "e1^e2 + e3^e4 + e5^e6")
          == e({1, 2}) + e({3, 4}) + e({5, 6}));
    CHECK(tf::parse_form(m.ring, "e126") == e({1, 2, 6}));
    CHECK(tf::parse_form(m.ring, "e21") == -e({1, 2}));
    CHECK(tf::parse_form(m.ring, "2*t*e5") == tf::Scalar::constant(m.ring, 2) * t * e({5}));
    CHECK(tf::parse_form(m.ring, "(e1^e2 + e3^e4)^2")
          == tf::Scalar::constant(m.ring, 2) * e({1, 2, 3, 4}));
    CHECK(tf::parse_form(m.ring, "-e1^e2 - (t - 1)*e3^e4")
          == -e({1, 2}) - (t - tf::Scalar::one(m.ring)) * e({3, 4}));
    CHECK(tf::parse_scalar(m.ring, "t^2 - 1/2")
          == t * t - tf::Scalar::constant(m.ring, tf::Rational(1, 2)));
    CHECK(tf::parse_scalar(m.ring, "(1)/(2*t)")
          == tf::Scalar::one(m.ring) / (tf::Scalar::constant(m.ring, 2) * t));
    CHECK(tf::parse_form(m.ring, "0*e1").is_zero());
}

TEST_CASE("parse errors carry positions") {
    auto m = tf::builtin("h3", {});

    CHECK_THROWS_AS(tf::parse_form(m.ring, "e1 +"), tf::SyntaxError);
    CHECK_THROWS_AS(tf::parse_form(m.ring, "(e1"), tf::SyntaxError);
    CHECK_THROWS_AS(tf::parse_form(m.ring, "e1 e2"), tf::SyntaxError);
    CHECK_THROWS_AS(tf::parse_form(m.ring, "e7"), tf::DimensionError);
    CHECK_THROWS_AS(tf::parse_form(m.ring, "1/(t - t)"), tf::DivisionByZero);

    try {
        tf::parse_form(m.ring, "t +\n  q*e1");
        FAIL("expected UndeclaredParam");
    } catch (const tf::UndeclaredParam& err) {
        CHECK(err.name == "q");
        CHECK(err.line == 2);
        CHECK(err.column == 3);
    }
}

TEST_CASE("model text round-trips") {
    for (const auto& name : tf::builtin_names()) {
        CAPTURE(name);
        auto m = tf::builtin(name, {});
        m.connections.emplace("A", tf::h3_instanton(m.ring, tf::Scalar::var(m.ring, "lambda")));
        auto text = tf::serialize_model(m);
        auto parsed = tf::parse_model(text);
        CHECK(tf::serialize_model(parsed) == text);
        CHECK(parsed.ring->size() == m.ring->size());
        for (int k = 1; k <= 6; ++k) {
            // Rings are distinct objects, so compare re-serialised coefficients.
            CHECK(parsed.algebra->d_basis(k).str() == m.algebra->d_basis(k).str());
        }
        REQUIRE(parsed.connections.count("A") == 1);
        CHECK(parsed.connections.at("A").sigma(1, 2).str() == m.connections.at("A").sigma(1, 2).str());
    }
}

TEST_CASE("model definitions parse from scratch") {
    const char* text = R"(# twisted product of a line and a five-dimensional algebra
param a;

d e6 = -2*a*(e1^e2 - e3^e4);

connection gauge {
  s[1][2] = a*(e5 + e6);
  s[2][1] = -a*(e5 + e6);
}
)";
    auto m = tf::parse_model(text);
    CHECK(m.ring->size() == 1);
    auto a = tf::Scalar::var(m.ring, "a");
    auto e = [&](std::initializer_list<int> idx) { return tf::KForm::basis(m.ring, idx); };
    CHECK(m.algebra->d_basis(6) == tf::Scalar::constant(m.ring, -2) * a * (e({1, 2}) - e({3, 4})));
    CHECK(m.algebra->d_basis(1).is_zero());
    CHECK(m.connections.at("gauge").sigma(1, 2) == a * (e({5}) + e({6})));
    CHECK(tf::balanced_check(*m.structure));
}

TEST_CASE("declared radicals in model text") {
    const char* text = R"(param r;
param u;
sign delta;
radical s = r^4 - u^2;

d e6 = -2*delta*(e1^e2 - (u/s)*(e1^e3 + e2^e4));
)";
    auto m = tf::parse_model(text);
    auto s = tf::Scalar::var(m.ring, "s");
    auto r = tf::Scalar::var(m.ring, "r");
    auto u = tf::Scalar::var(m.ring, "u");
    CHECK(s * s == r * r * r * r - u * u);
    auto delta = tf::Scalar::var(m.ring, "delta");
    CHECK(delta * delta == tf::Scalar::one(m.ring));
    CHECK(m.algebra->d_basis(6).coefficient({1, 2}) == tf::Scalar::constant(m.ring, -2) * delta);
}

TEST_CASE("structure constant sanity is enforced") {
    CHECK_THROWS_AS(tf::parse_model("d e1 = e2^e3;\nd e2 = e4^e5;\n"), tf::JacobiViolation);
    CHECK_THROWS_AS(tf::parse_model("d e9 = e2^e3;\n"), tf::SyntaxError);
    CHECK_THROWS_AS(tf::parse_model("param t\nd e1 = 0;"), tf::SyntaxError);
    CHECK_THROWS_AS(tf::parse_model("d e1 = t*e2^e3;"), tf::UndeclaredParam);
}

TEST_CASE("json rendering of models") {
    auto m = tf::builtin("g7", {});
    auto parsed = nlohmann::json::parse(tf::model_to_json(m));
    CHECK(parsed["name"] == "g7");
    CHECK(parsed["params"].is_array());
    bool found_s = false;
    for (const auto& p : parsed["params"])
        if (p["name"] == "s") {
            found_s = true;
            CHECK(p["kind"] == "radical");
        }
    CHECK(found_s);
    CHECK(parsed["differentials"].contains("e6"));
    CHECK(parsed["domain"].is_array());
}

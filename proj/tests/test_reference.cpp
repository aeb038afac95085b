#include "torsionforge/reference_tables.hpp"

#include "doctest.h"

namespace tf = torsionforge;

TEST_CASE("nilpotent curvature table") {
    auto report = tf::check_curvature_fixtures("h3");
    CAPTURE(report.failed);
    CHECK(report.ok());
    CHECK(report.passed.size() == 15);
}

TEST_CASE("semisimple curvature table") {
    auto report = tf::check_curvature_fixtures("sl2c");
    CAPTURE(report.failed);
    CHECK(report.ok());
    CHECK(report.passed.size() == 15);
}

TEST_CASE("solvable curvature table for both orientations") {
    for (int delta : {1, -1}) {
        CAPTURE(delta);
        tf::BuiltinOptions opts;
        opts.delta = delta;
        auto report = tf::check_curvature_fixtures("g7", opts);
        CAPTURE(report.failed);
        CHECK(report.ok());
        CHECK(report.passed.size() == 15);
    }
    // The symbolic orientation covers both signs at once.
    auto report = tf::check_curvature_fixtures("g7");
    CAPTURE(report.failed);
    CHECK(report.ok());
}

TEST_CASE("solvable curvature table at a rational point") {
    tf::BuiltinOptions opts;
    opts.delta = 1;
    opts.values = {{"r", 5}, {"u1", 12}, {"u2", 15}, {"t", 2}};
    auto report = tf::check_curvature_fixtures("g7", opts);
    CAPTURE(report.failed);
    CHECK(report.ok());
}

TEST_CASE("compatible sub-family curvature symmetries") {
    for (const auto& name : tf::builtin_names()) {
        CAPTURE(name);
        CHECK(tf::hermitian_line_symmetries(tf::builtin(name, {})));
    }
}

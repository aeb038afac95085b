#pragma once

#include "torsionforge/connection.hpp"
#include "torsionforge/su3.hpp"

#include <array>
#include <string>
#include <vector>

namespace torsionforge {

// Endomorphism of the frame at an exact point; m[i][j] is the entry in row i,
// column j, acting on column vectors, with 0-based rows over e_1..e_6. The
// associated 2-form is omega(e_i, e_j) = m[j-1][i-1].
struct Endo {
    std::array<std::array<Rational, 6>, 6> m{};

    bool is_zero() const;
    bool is_skew() const;
};

Endo commutator(const Endo& a, const Endo& b);

// The operators R(e_p, e_q) for p < q, in the tuple order of basis_tuples(2),
// read off a curvature through g(R(e_p,e_q) e_i, e_j) = -Omega^i_j(e_p, e_q).
std::vector<Endo> curvature_endos(const Curvature& q, const Assignment& values);

struct HolonomyResult {
    int dimension = 0;
    // "u(1)", "so(3)", "su(3)", or "dim k, unclassified".
    std::string classification;
    int generators_count = 0;  // nonzero curvature operators seeding the span
    int iterations = 0;        // closure passes until the span stabilised
};

// Rank of the span of the curvature operators, closed under covariant
// differentiation along every frame direction and under matrix commutators,
// by exact rational elimination. The span lives in the 15-dimensional space
// of skew operators, so the closure stabilises well within the iteration cap.
HolonomyResult holonomy_dimension(const SU3Structure& s, const Connection& c,
                                  const Assignment& values);

// Whether Omega^1_2 + Omega^3_4 + Omega^5_6 vanishes identically.
bool su3_trace_condition(const Curvature& q);

struct HolonomySample {
    std::string algebra;
    Assignment point;
    HolonomyResult result;
};

// JSON array with one object per sample:
// {algebra, point, dimension, classification, generators_count, iterations}.
std::string holonomy_report_json(const std::vector<HolonomySample>& samples);

}  // namespace torsionforge

#include "torsionforge/holonomy.hpp"

#include "torsionforge/errors.hpp"
#include "torsionforge/linalg.hpp"

#include <json.hpp>

namespace torsionforge {

namespace {

// Flattened coordinates of an operator are the values of its associated
// 2-form on the tuples of basis_tuples(2), i.e. v[a] = omega(e_i, e_j).
std::vector<Rational> flatten(const Endo& e) {
    std::vector<Rational> v;
    v.reserve(15);
    for (const auto& tup : basis_tuples(2)) v.push_back(e.m[tup[1] - 1][tup[0] - 1]);
    return v;
}

Endo unflatten(const std::vector<Rational>& v) {
    Endo e;
    std::size_t a = 0;
    for (const auto& tup : basis_tuples(2)) {
        e.m[tup[1] - 1][tup[0] - 1] = v[a];
        e.m[tup[0] - 1][tup[1] - 1] = -v[a];
        ++a;
    }
    return e;
}

// Negative definiteness via the alternating signs of the leading principal
// minors. K is symmetric 3x3.
bool negative_definite3(const std::array<std::array<Rational, 3>, 3>& k) {
    const Rational d1 = k[0][0];
    const Rational d2 = k[0][0] * k[1][1] - k[0][1] * k[1][0];
    const Rational d3 = k[0][0] * (k[1][1] * k[2][2] - k[1][2] * k[2][1])
                      - k[0][1] * (k[1][0] * k[2][2] - k[1][2] * k[2][0])
                      + k[0][2] * (k[1][0] * k[2][1] - k[1][1] * k[2][0]);
    return sgn(d1) < 0 && sgn(d2) > 0 && sgn(d3) < 0;
}

// A 3-dimensional algebra of operators is so(3) exactly when its Killing
// form is negative definite; the structure constants come from expressing
// each bracket back in the computed basis.
bool is_so3(const std::vector<Endo>& basis) {
    if (basis.size() != 3) return false;
    std::vector<std::vector<Rational>> columns;
    for (const auto& b : basis) columns.push_back(flatten(b));
    // c[e][a][b] with [B_a, B_b] = sum_e c[e][a][b] B_e.
    Rational c[3][3][3];
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            const std::vector<Rational> rhs = flatten(commutator(basis[a], basis[b]));
            std::vector<std::vector<Rational>> rows(15, std::vector<Rational>(3));
            for (std::size_t r = 0; r < 15; ++r)
                for (int e = 0; e < 3; ++e) rows[r][e] = columns[e][r];
            auto sol = solve_linear(std::move(rows), rhs, Rational(0), Rational(1));
            if (sol.status == SolveStatus::Inconsistent) return false;
            for (int e = 0; e < 3; ++e) c[e][a][b] = sol.solution[e];
        }
    }
    std::array<std::array<Rational, 3>, 3> killing{};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            Rational total(0);
            for (int e = 0; e < 3; ++e)
                for (int f = 0; f < 3; ++f) total += c[e][a][f] * c[f][b][e];
            killing[a][b] = total;
        }
    return negative_definite3(killing);
}

}  // namespace

bool Endo::is_zero() const {
    for (const auto& row : m)
        for (const auto& entry : row)
            if (sgn(entry) != 0) return false;
    return true;
}

bool Endo::is_skew() const {
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (m[i][j] != -m[j][i]) return false;
    return true;
}

Endo commutator(const Endo& a, const Endo& b) {
    Endo out;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            Rational total(0);
            for (int k = 0; k < 6; ++k)
                total += a.m[i][k] * b.m[k][j] - b.m[i][k] * a.m[k][j];
            out.m[i][j] = total;
        }
    return out;
}

std::vector<Endo> curvature_endos(const Curvature& q, const Assignment& values) {
    std::vector<Endo> out;
    out.reserve(15);
    for (const auto& tup : basis_tuples(2)) {
        Endo e;
        for (int i = 1; i <= 6; ++i) {
            for (int j = 1; j <= 6; ++j) {
                if (i == j) continue;
                const KForm& omega = q.omega(i, j);
                if (omega.is_zero()) continue;
                e.m[j - 1][i - 1] = -omega(tup).eval(values);
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

HolonomyResult holonomy_dimension(const SU3Structure& s, const Connection& c,
                                  const Assignment& values) {
    const LieAlgebra& g = *s.algebra();
    const Curvature q = curvature(g, c);

    HolonomyResult result;
    SpanBuilder span(15);
    std::vector<Endo> elems;
    for (Endo& e : curvature_endos(q, values)) {
        if (e.is_zero()) continue;
        ++result.generators_count;
        if (span.add(flatten(e))) elems.push_back(std::move(e));
    }

    // The covariant derivative acts linearly on constant-coefficient 2-forms,
    // so its action along each direction is a rational 15x15 matrix obtained
    // by differentiating the monomial 2-forms once.
    const RingPtr& ring = g.ring();
    std::array<std::vector<std::vector<Rational>>, 6> action;
    const auto tuples = basis_tuples(2);
    for (int k = 1; k <= 6; ++k) {
        auto& mat = action[k - 1];
        mat.assign(15, std::vector<Rational>(15, Rational(0)));
        for (std::size_t a = 0; a < tuples.size(); ++a) {
            const KForm d = covariant_derivative_form(c, KForm::basis(ring, tuples[a]), k);
            for (std::size_t r = 0; r < tuples.size(); ++r)
                mat[r][a] = d.coefficient(tuples[r]).eval(values);
        }
    }

    constexpr int kMaxPasses = 36;
    for (int pass = 0; pass < kMaxPasses; ++pass) {
        ++result.iterations;
        bool grew = false;
        const std::size_t snapshot = elems.size();
        for (std::size_t i = 0; i < snapshot; ++i) {
            const std::vector<Rational> v = flatten(elems[i]);
            for (int k = 0; k < 6; ++k) {
                std::vector<Rational> d(15, Rational(0));
                for (std::size_t r = 0; r < 15; ++r)
                    for (std::size_t cidx = 0; cidx < 15; ++cidx)
                        d[r] += action[k][r][cidx] * v[cidx];
                if (span.add(d)) {
                    elems.push_back(unflatten(d));
                    grew = true;
                }
            }
        }
        for (std::size_t i = 0; i < elems.size(); ++i) {
            for (std::size_t j = i + 1; j < elems.size(); ++j) {
                Endo bracket = commutator(elems[i], elems[j]);
                if (span.add(flatten(bracket))) {
                    elems.push_back(std::move(bracket));
                    grew = true;
                }
            }
        }
        if (!grew) break;
    }

    result.dimension = static_cast<int>(span.rank());
    if (result.dimension == 1) {
        result.classification = "u(1)";
    } else if (result.dimension == 3 && is_so3(elems)) {
        result.classification = "so(3)";
    } else if (result.dimension == 8 && su3_trace_condition(q)) {
        result.classification = "su(3)";
    } else {
        result.classification = "dim " + std::to_string(result.dimension) + ", unclassified";
    }
    return result;
}

bool su3_trace_condition(const Curvature& q) {
    return (q.omega(1, 2) + q.omega(3, 4) + q.omega(5, 6)).is_zero();
}

std::string holonomy_report_json(const std::vector<HolonomySample>& samples) {
    nlohmann::ordered_json report = nlohmann::ordered_json::array();
    for (const auto& sample : samples) {
        nlohmann::ordered_json point = nlohmann::ordered_json::object();
        for (const auto& [name, value] : sample.point) point[name] = to_string(value);
        report.push_back({{"algebra", sample.algebra},
                          {"point", std::move(point)},
                          {"dimension", sample.result.dimension},
                          {"classification", sample.result.classification},
                          {"generators_count", sample.result.generators_count},
                          {"iterations", sample.result.iterations}});
    }
    return report.dump(2);
}

}  // namespace torsionforge

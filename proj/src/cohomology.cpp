#include "torsionforge/cohomology.hpp"

#include "torsionforge/errors.hpp"
#include "torsionforge/linalg.hpp"

#include <json.hpp>

#include <cstddef>
#include <utility>

namespace torsionforge {

namespace {

// Basis of the kernel of the homogeneous system rows * x = 0, one vector per
// free column of the reduced matrix.
std::vector<std::vector<Scalar>> nullspace(const std::vector<std::vector<Scalar>>& rows,
                                           std::size_t cols, const Scalar& zero,
                                           const Scalar& one) {
    GaussResult<Scalar> gauss = row_reduce(rows);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : gauss.pivot_cols) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(cols, zero);
        v[f] = one;
        for (std::size_t r = 0; r < gauss.rref.size(); ++r)
            v[gauss.pivot_cols[r]] = -gauss.rref[r][f];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

ExactnessResult is_exact(const LieAlgebra& g, const KForm& omega) {
    const RingPtr& ring = g.ring();
    const int k = omega.degree();
    if (!g.d(omega).is_zero())
        throw NotClosed("exactness query on a non-closed " + std::to_string(k) + "-form");

    ExactnessResult out;
    if (k == 0) {
        out.exact = omega.is_zero();
        return out;
    }
    if (omega.is_zero()) {
        out.exact = true;
        out.witness = KForm(ring, k - 1);
        return out;
    }

    const Scalar zero = Scalar::constant(ring, Rational(0));
    const Scalar one = Scalar::constant(ring, Rational(1));
    const auto targets = basis_tuples(k);
    const auto sources = basis_tuples(k - 1);
    std::vector<std::vector<Scalar>> rows(targets.size(),
                                          std::vector<Scalar>(sources.size(), zero));
    for (std::size_t c = 0; c < sources.size(); ++c) {
        const KForm db = g.d(KForm::basis(ring, sources[c]));
        for (std::size_t r = 0; r < targets.size(); ++r) rows[r][c] = db.coefficient(targets[r]);
    }
    std::vector<Scalar> rhs;
    rhs.reserve(targets.size());
    for (const auto& t : targets) rhs.push_back(omega.coefficient(t));

    SolveResult<Scalar> sol = solve_linear(std::move(rows), rhs, zero, one);
    for (const Scalar& p : sol.pivot_values)
        if (!p.is_constant()) out.parameter_pivots.push_back(p);
    if (sol.status == SolveStatus::Inconsistent) return out;

    KForm beta(ring, k - 1);
    for (std::size_t c = 0; c < sources.size(); ++c)
        if (!sol.solution[c].is_zero()) beta.add_term(sources[c], sol.solution[c]);
    if (g.d(beta) != omega) throw Error("witness failed re-differentiation");
    out.exact = true;
    out.witness = std::move(beta);
    return out;
}

CupProductResult cup_product_L_check(const LieAlgebra& g, const SU3Structure& s) {
    const RingPtr& ring = g.ring();
    const Scalar zero = Scalar::constant(ring, Rational(0));
    const Scalar one = Scalar::constant(ring, Rational(1));
    CupProductResult out;

    // Closed invariant 1-forms: kernel of d on degree 1.
    const auto two = basis_tuples(2);
    std::vector<std::vector<Scalar>> dmat(two.size(), std::vector<Scalar>(6, zero));
    for (int i = 1; i <= 6; ++i) {
        const KForm& de = g.d_basis(i);
        for (std::size_t r = 0; r < two.size(); ++r) dmat[r][i - 1] = de.coefficient(two[r]);
    }
    const auto closed = nullspace(dmat, 6, zero, one);
    out.closed_one_forms = static_cast<int>(closed.size());
    if (closed.empty()) return out;

    // A closed combination sum_c x_c a_c lands in the image of d exactly when
    // the block system [ L | D ] (x, y) = 0 has a solution with x != 0, where
    // L wedges the closed generators with F^2 and D differentiates 4-forms.
    const KForm f2 = wedge(s.fundamental_form(), s.fundamental_form());
    const auto five = basis_tuples(5);
    const auto four = basis_tuples(4);
    const std::size_t cols = closed.size() + four.size();
    std::vector<std::vector<Scalar>> block(five.size(), std::vector<Scalar>(cols, zero));
    std::vector<KForm> generators;
    for (std::size_t c = 0; c < closed.size(); ++c) {
        KForm a(ring, 1);
        for (int i = 1; i <= 6; ++i)
            if (!closed[c][i - 1].is_zero()) a.add_term({i}, closed[c][i - 1]);
        const KForm w = wedge(a, f2);
        for (std::size_t r = 0; r < five.size(); ++r) block[r][c] = w.coefficient(five[r]);
        generators.push_back(std::move(a));
    }
    for (std::size_t j = 0; j < four.size(); ++j) {
        const KForm db = g.d(KForm::basis(ring, four[j]));
        for (std::size_t r = 0; r < five.size(); ++r)
            block[r][closed.size() + j] = db.coefficient(five[r]);
    }

    for (const auto& v : nullspace(block, cols, zero, one)) {
        KForm witness(ring, 1);
        for (std::size_t c = 0; c < closed.size(); ++c)
            if (!v[c].is_zero()) witness += v[c] * generators[c];
        if (witness.is_zero()) continue;
        const Scalar lead = witness.coefficients().begin()->second;
        out.injective = false;
        out.kernel_witness = (one / lead) * witness;
        return out;
    }
    return out;
}

std::string cohomology_report_json(const LieAlgebra& g,
                                   const std::vector<std::pair<std::string, KForm>>& forms) {
    nlohmann::ordered_json report = nlohmann::ordered_json::array();
    for (const auto& [name, omega] : forms) {
        nlohmann::ordered_json entry;
        entry["form"] = name;
        const bool closed = g.d(omega).is_zero();
        entry["closed"] = closed;
        if (closed) {
            ExactnessResult res = is_exact(g, omega);
            entry["exact"] = res.exact;
            if (res.witness) entry["witness"] = res.witness->str();
            if (!res.parameter_pivots.empty()) {
                auto pivots = nlohmann::ordered_json::array();
                for (const Scalar& p : res.parameter_pivots) pivots.push_back(p.str());
                entry["parameter_pivots"] = pivots;
            }
        } else {
            entry["exact"] = false;
        }
        report.push_back(std::move(entry));
    }
    return report.dump(2);
}

}  // namespace torsionforge

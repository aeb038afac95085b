#pragma once

#include "torsionforge/su3.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace torsionforge {

// Outcome of an exactness query on the complex of invariant forms.
struct ExactnessResult {
    bool exact = false;
    // Present iff exact: d(witness) equals the query form, re-checked before
    // returning.
    std::optional<KForm> witness;
    // Elimination pivots that depend on parameters. Such a pivot could vanish
    // on a measure-zero parameter set; callers see the list instead of a
    // silently specialised answer.
    std::vector<Scalar> parameter_pivots;
};

// Decides whether omega = d(beta) is solvable in invariant forms, by
// elimination over the scalar fraction field with parameters kept symbolic.
// A degree-0 form is exact only when zero. Throws NotClosed when d(omega)
// is nonzero.
ExactnessResult is_exact(const LieAlgebra& g, const KForm& omega);

struct CupProductResult {
    bool injective = true;
    // A nonzero closed 1-form whose wedge with F^2 is exact, when one exists.
    // No invariant 1-form other than 0 is exact, so such a witness spans a
    // kernel line of the pairing below.
    std::optional<KForm> kernel_witness;
    int closed_one_forms = 0;
};

// Probes the pairing a -> a ^ F^2 from closed invariant 1-forms into
// 5-forms modulo differentials. The kernel search runs over the whole space
// of closed 1-forms, not just basis elements, and the witness is normalised
// to leading coefficient 1.
CupProductResult cup_product_L_check(const LieAlgebra& g, const SU3Structure& s);

// JSON array with one {form, closed, exact, witness?} object per named form;
// parameter-dependent pivots are attached when the elimination met any.
std::string cohomology_report_json(const LieAlgebra& g,
                                   const std::vector<std::pair<std::string, KForm>>& forms);

}  // namespace torsionforge

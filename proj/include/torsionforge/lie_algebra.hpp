#pragma once

#include "torsionforge/kform.hpp"

#include <array>
#include <memory>
#include <string>

namespace torsionforge {

// Six-dimensional Lie algebra described through its Chevalley-Eilenberg
// differential d e^k = sum_{i<j} c^k_{ij} e^{ij}. Construction verifies
// d^2 = 0 on every basis covector and rejects the data otherwise.
class LieAlgebra {
public:
    // differentials[k-1] is d e^k, a 2-form (possibly zero).
    LieAlgebra(RingPtr ring, std::string name, std::vector<KForm> differentials);

    const std::string& name() const { return name_; }
    const RingPtr& ring() const { return ring_; }

    // d e^k for k in 1..6.
    const KForm& d_basis(int k) const;
    // Structure constant c^k_{ij} = (d e^k)(e_i, e_j), antisymmetric in i, j.
    Scalar c(int k, int i, int j) const;

    // Chevalley-Eilenberg differential extended as an anti-derivation;
    // coefficients are constants on invariant forms, so d acts on the basis
    // monomials only. d of a degree-6 form is zero (returned in degree 6).
    KForm d(const KForm& form) const;

private:
    RingPtr ring_;
    std::string name_;
    std::vector<KForm> de_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

}  // namespace torsionforge

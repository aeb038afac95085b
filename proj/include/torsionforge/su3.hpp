#pragma once

#include "torsionforge/lie_algebra.hpp"

#include <array>
#include <map>

namespace torsionforge {

// Adapted-basis almost complex structure J e1 = -e2, J e3 = -e4, J e5 = -e6
// (and J e2 = e1, etc.); identical signed pattern on covectors.
int j_partner(int i);
int j_sign(int i);

// Extends J multiplicatively over basis covectors, J e^1 = -e^2 and so on.
// On a k-form this equals pullback by J^{-1}, so apply_J(apply_J(a)) = (-1)^k a.
KForm apply_J(const KForm& a);

// Sparse 3-tensor with Scalar entries, no symmetry assumed.
class Tensor3 {
public:
    explicit Tensor3(RingPtr ring) : ring_(std::move(ring)) {}

    const RingPtr& ring() const { return ring_; }
    Scalar operator()(int i, int j, int k) const;
    void set(int i, int j, int k, Scalar value);
    bool is_zero() const { return entries_.empty(); }
    const std::map<std::array<int, 3>, Scalar>& entries() const { return entries_; }

    friend Tensor3 operator+(const Tensor3& a, const Tensor3& b);
    friend Tensor3 operator*(const Scalar& c, const Tensor3& a);
    bool operator==(const Tensor3& rhs) const;

private:
    RingPtr ring_;
    std::map<std::array<int, 3>, Scalar> entries_;
};

// The canonical SU(3)-structure in the adapted basis: F = e^12 + e^34 + e^56
// and Psi = (e^1 + i e^2) ^ (e^3 + i e^4) ^ (e^5 + i e^6), with the metric
// implicitly the identity.
class SU3Structure {
public:
    explicit SU3Structure(AlgebraPtr algebra);

    const AlgebraPtr& algebra() const { return algebra_; }
    const RingPtr& ring() const { return algebra_->ring(); }
    const KForm& fundamental_form() const { return F_; }
    const KForm& re_psi() const { return re_psi_; }
    const KForm& im_psi() const { return im_psi_; }

private:
    AlgebraPtr algebra_;
    KForm F_;
    KForm re_psi_;
    KForm im_psi_;
};

// Torsion 3-form T(x,y,z) = -dF(Jx,Jy,Jz); equals J dF for Hermitian J.
KForm torsion_T(const SU3Structure& s);

// Chern-torsion tensor C(e_i,e_j,e_k) = dF(J e_i, e_j, e_k).
Tensor3 torsion_C(const SU3Structure& s);

// d(F^2) = 0.
bool balanced_check(const SU3Structure& s);

// d(Re Psi) = 0 and d(Im Psi) = 0.
bool psi_closed_check(const SU3Structure& s);

// Variant check for user-supplied volume forms.
bool psi_closed_check(const LieAlgebra& g, const KForm& re_psi, const KForm& im_psi);

}  // namespace torsionforge

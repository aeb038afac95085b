#pragma once

#include "torsionforge/su3.hpp"

#include <string>
#include <vector>

namespace torsionforge {

// Linear connection stored through its 1-forms sigma^i_j(e_k) = g(nabla_{e_k} e_j, e_i),
// so nabla_X e_j = sum_i sigma^i_j(X) e_i.
class Connection {
public:
    explicit Connection(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const KForm& sigma(int i, int j) const;
    void set_sigma(int i, int j, KForm form);

    // sigma^j_i = -sigma^i_j for all pairs (metric connection).
    bool is_metric() const;

private:
    RingPtr ring_;
    std::vector<KForm> sigma_;  // row-major 6x6
};

// Curvature 2-forms Omega^i_j = d sigma^i_j + sum_k sigma^i_k ^ sigma^k_j.
class Curvature {
public:
    explicit Curvature(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const KForm& omega(int i, int j) const;
    void set_omega(int i, int j, KForm form);

    bool is_zero() const;

private:
    RingPtr ring_;
    std::vector<KForm> omega_;
};

Curvature curvature(const LieAlgebra& g, const Connection& c);

// sigma^i_j(e_k) = (1/2)(c^i_{jk} - c^k_{ij} + c^j_{ki}).
Connection levi_civita(const SU3Structure& s);

// The two-parameter metric family
// sigma^i_j(e_k) = (1/2)(c^i_{jk} - c^k_{ij} + c^j_{ki})
//                + eps * dF(J e_i, J e_j, J e_k) - rho * dF(J e_k, e_i, e_j);
// (0,0) is Levi-Civita, (1/2,0) Bismut, (-1/2,0) the minus connection,
// (0,1/2) Chern.
Connection family_connection(const SU3Structure& s, const Scalar& eps, const Scalar& rho);

Connection flat_connection(RingPtr ring);

// Abelian connection sigma^1_2 = -sigma^2_1 = -sigma^3_4 = sigma^4_3 = gamma,
// every other 1-form zero.
Connection abelian_connection(const KForm& gamma);

// gamma = lambda (e^5 + e^6).
Connection h3_instanton(RingPtr ring, const Scalar& lambda);

// gamma = lambda e^5 + mu e^6.
Connection g7_instanton(RingPtr ring, const Scalar& lambda, const Scalar& mu);

// The eight 1-form identities equivalent to A J = A F = A Psi = 0.
bool su3_compatible(const Connection& c);
std::vector<std::string> su3_compatibility_defects(const Connection& c);

// Omega^i_j(e1,e2) + Omega^i_j(e3,e4) + Omega^i_j(e5,e6) = 0 and
// Omega^i_j(J e_k, J e_l) = Omega^i_j(e_k, e_l) for all i, j, k < l.
bool instanton_check(const Curvature& q);
std::vector<std::string> instanton_defects(const Curvature& q);

// nabla_{e_k} a for an invariant form a (constant coefficients), acting
// through minus the substitution of nabla_{e_k} e_{i_m} in each slot.
KForm covariant_derivative_form(const Connection& c, const KForm& a, int k);

// Entries g((nabla_{e_k} J) e_j, e_i) indexed as (i, j, k).
Tensor3 nabla_J(const Connection& c);

// Torsion components tau(i,j,k) = sigma^k_j(e_i) - sigma^k_i(e_j) + c^k_{ij},
// i.e. g(nabla_{e_i} e_j - nabla_{e_j} e_i - [e_i,e_j], e_k).
Tensor3 connection_torsion(const LieAlgebra& g, const Connection& c);

}  // namespace torsionforge

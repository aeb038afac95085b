#pragma once

#include "torsionforge/connection.hpp"

#include <optional>
#include <string>

namespace torsionforge {

// Unscaled first Pontrjagin 4-form tr(Omega ^ Omega) = sum_{i,j} Omega^i_j ^ Omega^j_i.
// Keeping the 8 pi^2 factor inside the trace leaves every coefficient rational.
KForm pontrjagin_trace(const Curvature& q);

enum class AnomalyStatus { Unique, NoSolution, Underdetermined };

struct AnomalyResult {
    AnomalyStatus status = AnomalyStatus::Underdetermined;
    std::optional<Scalar> alpha;    // present iff Unique
    std::optional<KForm> residual;  // present iff NoSolution
};

// Solves dT = (alpha/4)(p_conn - p_inst) for a constant alpha. With
// D = (p_conn - p_inst)/4: Underdetermined when D = 0 and dT = 0; NoSolution
// when D = 0 but dT != 0, or when dT is not a scalar multiple of D (the
// residual dT - alpha D at the candidate ratio is returned); Unique otherwise,
// with alpha the coefficient ratio at the first nonzero component of D,
// verified against every component. All inputs must be 4-forms.
AnomalyResult solve_alpha(const KForm& dt, const KForm& p_conn, const KForm& p_inst);

// beta(eps, rho) = 1 + 4 eps + 4 eps^2 + 32 eps^3 - 12 rho - 24 eps rho
//                - 32 eps^2 rho + 36 rho^2 + 32 eps rho^2 - 32 rho^3;
// tr(Omega ^ Omega) on sl(2,C) equals -2 beta / t^4 (e1234 + e1256 + e3456).
Scalar beta(const Scalar& eps, const Scalar& rho);
Rational beta(const Rational& eps, const Rational& rho);

// Plane polynomials controlling the solvable-case anomaly equation
//   4 t^2 (r^4-|u|^2) = alpha (X t^4 + Y |u|^2 - 2 mu^2 t^2 (r^4-|u|^2)),
//   2 |u|^2 t^2 (r^4-|u|^2) = alpha |u|^2 (Z t^4 + W |u|^2),
// and the circles bounding the solution regions:
//   X = (1+2e-2r)[4e^2+(1-2r)^2+2],    Y = -4(1-2e+2r)[4e^2+(1-2r)^2-2]-8,
//   Z = (1+e-r)[4e^2+(1-2r)^2-4]+3,    W = 4(e-r)[4e^2+(1-2r)^2],
//   L = (e-3/2)^2+(r+1)^2-4,           N = 4[(e+1/2)^2+(r-1)^2-1],
//   M = e^2+(r-1/2)^2-1/4,             S = 20e^2+20r^2-32er+4e-8r+1,
//   d = LW - NZ = -4 M S,
// satisfying X - 2Z = -4L and Y - 2W = -4N.
enum class RegionPoly { L, N, M, S, X, Y, Z, W, D };
Scalar region_poly(RegionPoly which, const Scalar& eps, const Scalar& rho);
Rational region_poly(RegionPoly which, const Rational& eps, const Rational& rho);

// Exact sign of a value of the form a + b sqrt(R) with a, b, R rational and
// R > 0 (one radical generator at most; radicands must be rational constants).
// Throws UnsupportedOperation for free-parameter-dependent values, sign
// symbols with both components present, and multi-radical combinations.
int sign_exact(const Scalar& v);

// Membership report for one exact point of the (eps, rho) plane; the point
// may live over an adjoined radical such as w = sqrt(7).
struct RegionReport {
    Scalar eps, rho;
    Scalar L, N, M, S, Z, W, d, beta_value;
    bool in_delta = false;       // L<0 or N<0, excluding (0,0) and (1/2,1/2)
    bool in_delta_plus = false;  // (L<0 or M<0) minus (M<=0 and Z<=0)
    int sign_alpha_flat = 0;     // sign beta:      flat-instanton law
    int sign_alpha_nonflat = 0;  // sign (beta-8):  non-flat-instanton law
};

RegionReport region_report(const Scalar& eps, const Scalar& rho);
RegionReport region_report(const Rational& eps, const Rational& rho);

// The equivalent characterization (L<0 or d>0) minus (d>=0 and Z<=0); agrees
// with in_delta_plus everywhere because d = -4 M S with S >= 0.
bool in_delta_plus_alt(const Rational& eps, const Rational& rho);

enum class G7Failure {
    MuSquaredNegative,
    AlphaZeroDenominator,
    PositivityUnsatisfiable,
    DenominatorZero,
};

std::string to_string(G7Failure f);

struct G7Solution {
    Rational mu_squared;
    Rational alpha;
};

struct G7Outcome {
    std::optional<G7Solution> solution;
    std::optional<G7Failure> failure;
    bool ok() const { return solution.has_value(); }
};

// Closed-form solution of the two-equation system above for u != 0:
//   mu^2 = -2 (L t^4 + N |u|^2) / (t^2 (r^4-|u|^2)),
//   alpha = 2 t^2 (r^4-|u|^2) / (Z t^4 + W |u|^2).
// Requires r, t != 0, r^4 > |u|^2 > 0 (DomainViolation otherwise).
G7Outcome solve_g7(const Rational& eps, const Rational& rho, const Rational& r,
                   const Rational& t, const Rational& u1, const Rational& u2,
                   bool require_positive_alpha);

// u = 0 case: alpha = 4 r^4 / (X t^2 - 2 mu^2 r^4); requires r, t != 0.
G7Outcome solve_g7_u0(const Rational& eps, const Rational& rho, const Rational& r,
                      const Rational& t, const Rational& mu);

// True iff the structure is balanced with closed Psi, the given connection is
// an instanton, the anomaly equation for (eps, rho) against that instanton has
// a unique nonzero alpha, and the (eps, rho) family member is itself an
// instanton.
bool motion_equations_check(const SU3Structure& s, const Scalar& eps,
                            const Scalar& rho, const Connection& instanton);

struct GridSpec {
    Rational lo = Rational(-2);
    Rational hi = Rational(2);
    Rational step = Rational(1, 20);
};

// CSV table of region data over the grid, rows ordered by (eps, rho).
// Columns: eps,rho,L,N,M,S,Z,W,d,beta,in_Delta,in_DeltaPlus,
// sign_alpha_flat,sign_alpha_nonflat. threads <= 0 picks a default.
std::string scan_region_csv(const GridSpec& grid, int threads);

// 800x800 figure of the plane [-2,2]^2: the L, N and M circles, the points
// P1, Q1, P2, Q2, P3, and the region of positive alpha shaded.
std::string region_svg();

}  // namespace torsionforge

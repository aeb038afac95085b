#pragma once

#include "torsionforge/ring.hpp"

#include <map>
#include <string>
#include <vector>

namespace torsionforge {

// Values for free and sign parameters; sign parameters must map to +1 or -1.
// Radical values are derived from their radicands, never supplied.
using Assignment = std::map<std::string, Rational>;
using ApproxAssignment = std::map<std::string, double>;

// Multivariate polynomial over the rationals in the symbols of a Ring,
// kept normalized: no zero coefficients, sign exponents in {0,1}, radical
// exponents in {0,1} (squares rewritten into the radicand).
class Poly {
public:
    using Mono = std::vector<std::int32_t>;  // one exponent per ring parameter

    static Poly zero(RingPtr ring);
    static Poly constant(RingPtr ring, const Rational& c);
    static Poly var(RingPtr ring, const std::string& name, int exp = 1);
    static Poly var(RingPtr ring, std::size_t index, int exp = 1);

    const RingPtr& ring() const { return ring_; }
    const std::map<Mono, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // The constant value if is_constant(), otherwise nullopt.
    std::optional<Rational> as_constant() const;
    bool depends_on(std::size_t param_index) const;
    int total_degree() const;  // -1 for the zero polynomial

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly pow(int n) const;  // n >= 0
    bool operator==(const Poly& rhs) const;

    // GCD of all coefficients (positive), 0 for the zero polynomial.
    Rational content() const;
    // Componentwise minimum of all exponent vectors; empty mono for zero.
    Mono common_monomial() const;
    // Divides every term by c * mono. The division must be exact.
    Poly divided_by(const Rational& c, const Mono& mono) const;
    // The quotient this / divisor when the division is exact, nullopt when it
    // is not. The divisor must use free parameters alone: square rewrites of
    // sign and radical symbols break unique factorization, so any such symbol
    // in the divisor makes this return nullopt.
    std::optional<Poly> divided_exact(const Poly& divisor) const;

    Rational eval(const Assignment& values) const;
    double eval_approx(const ApproxAssignment& values) const;

    std::string str() const;

    // Internal: inserts coeff * mono applying the square rewrites.
    void add_term(Mono mono, const Rational& coeff);

private:
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
    void check_same_ring(const Poly& other) const;

    RingPtr ring_;
    std::map<Mono, Rational> terms_;
};

}  // namespace torsionforge

#pragma once

#include "torsionforge/poly.hpp"

namespace torsionforge {

// Exact rational function num/den over a Ring. Equality and zero tests use
// cross-multiplication in the quotient ring defined by the square rewrites;
// no multivariate gcd is ever computed. The only simplification applied is
// cancellation of a common rational content and a common monomial, which keeps
// printed output readable without affecting exactness.
class Scalar {
public:
    static Scalar zero(RingPtr ring);
    static Scalar one(RingPtr ring);
    static Scalar constant(RingPtr ring, const Rational& c);
    static Scalar var(RingPtr ring, const std::string& name, int exp = 1);
    static Scalar from_poly(Poly num);
    static Scalar ratio(Poly num, Poly den);  // den must be nonzero

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const RingPtr& ring() const { return num_.ring(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const;
    std::optional<Rational> as_constant() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);  // throws DivisionByZero
    Scalar& operator+=(const Scalar& b) { *this = *this + b; return *this; }
    Scalar& operator-=(const Scalar& b) { *this = *this - b; return *this; }
    Scalar& operator*=(const Scalar& b) { *this = *this * b; return *this; }
    Scalar& operator/=(const Scalar& b) { *this = *this / b; return *this; }
    Scalar pow(int n) const;  // negative n inverts; throws DivisionByZero on 0

    // Exact equality as elements of the fraction field: a*d - c*b == 0.
    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    Rational eval(const Assignment& values) const;         // throws DenominatorZero etc.
    double eval_approx(const ApproxAssignment& values) const;

    std::string str() const;

private:
    Scalar(Poly num, Poly den);
    void reduce();

    Poly num_;
    Poly den_;  // invariant: nonzero; leading coefficient positive
};

}  // namespace torsionforge

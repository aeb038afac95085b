#pragma once

#include "torsionforge/scalar.hpp"

#include <map>
#include <vector>

namespace torsionforge {

// Invariant k-form on a fixed six-dimensional frame: a sparse map from
// strictly increasing index tuples (values in 1..6) to scalar coefficients.
// Degree 0 forms hold a single coefficient at the empty tuple.
class KForm {
public:
    using Indices = std::vector<int>;

    KForm(RingPtr ring, int degree);  // zero form
    static KForm from_scalar(Scalar s);
    // e^{i1} ^ ... ^ e^{ik} for distinct indices in any order (sign-adjusted);
    // repeated indices yield the zero form of that degree.
    static KForm basis(RingPtr ring, const Indices& indices);

    int degree() const { return degree_; }
    const RingPtr& ring() const { return ring_; }
    const std::map<Indices, Scalar>& coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool operator==(const KForm& rhs) const;
    bool operator!=(const KForm& rhs) const { return !(*this == rhs); }

    // Coefficient at a strictly increasing tuple (zero scalar if absent).
    Scalar coefficient(const Indices& sorted_indices) const;
    // Full evaluation on basis vectors e_{args...}: antisymmetrized lookup.
    Scalar operator()(const Indices& args) const;

    KForm operator-() const;
    friend KForm operator+(KForm a, const KForm& b);
    friend KForm operator-(KForm a, const KForm& b);
    friend KForm operator*(const Scalar& c, const KForm& a);
    KForm& operator+=(const KForm& b);
    KForm& operator-=(const KForm& b);

    // Adds coeff * e^{indices}; indices in any order, repeats ignored as zero.
    void add_term(Indices indices, Scalar coeff);

    std::string str() const;

private:
    RingPtr ring_;
    int degree_;
    std::map<Indices, Scalar> coeffs_;
};

// Exterior product. Throws DegreeOverflow when the degrees sum past 6.
KForm wedge(const KForm& a, const KForm& b);

// Repeated wedge a^n (n >= 0); scalar power for degree-0 forms (any n).
KForm wedge_pow(const KForm& a, int n);

// Index tuples {i1 < ... < ik} within 1..6.
std::vector<KForm::Indices> basis_tuples(int k);

// Sorts indices in place; returns the permutation sign, or 0 on repeats.
int sort_indices(KForm::Indices& indices);

}  // namespace torsionforge

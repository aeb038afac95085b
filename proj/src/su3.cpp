#include "torsionforge/su3.hpp"

#include "torsionforge/errors.hpp"

namespace torsionforge {

int j_partner(int i) {
    if (i < 1 || i > 6) throw DimensionError(i);
    return (i % 2 == 1) ? i + 1 : i - 1;
}

int j_sign(int i) {
    if (i < 1 || i > 6) throw DimensionError(i);
    return (i % 2 == 1) ? -1 : 1;
}

KForm apply_J(const KForm& a) {
    KForm out(a.ring(), a.degree());
    for (const auto& [indices, coeff] : a.coefficients()) {
        KForm::Indices mapped;
        mapped.reserve(indices.size());
        int sign = 1;
        for (int i : indices) {
            mapped.push_back(j_partner(i));
            sign *= j_sign(i);
        }
        out.add_term(std::move(mapped), sign < 0 ? -coeff : coeff);
    }
    return out;
}

Scalar Tensor3::operator()(int i, int j, int k) const {
    for (int idx : {i, j, k})
        if (idx < 1 || idx > 6) throw DimensionError(idx);
    auto it = entries_.find({i, j, k});
    if (it == entries_.end()) return Scalar::zero(ring_);
    return it->second;
}

void Tensor3::set(int i, int j, int k, Scalar value) {
    for (int idx : {i, j, k})
        if (idx < 1 || idx > 6) throw DimensionError(idx);
    if (value.is_zero()) {
        entries_.erase({i, j, k});
    } else {
        entries_.insert_or_assign({i, j, k}, std::move(value));
    }
}

Tensor3 operator+(const Tensor3& a, const Tensor3& b) {
    Tensor3 out = a;
    for (const auto& [idx, v] : b.entries_)
        out.set(idx[0], idx[1], idx[2], out(idx[0], idx[1], idx[2]) + v);
    return out;
}

Tensor3 operator*(const Scalar& c, const Tensor3& a) {
    Tensor3 out(a.ring_);
    for (const auto& [idx, v] : a.entries_) out.set(idx[0], idx[1], idx[2], c * v);
    return out;
}

bool Tensor3::operator==(const Tensor3& rhs) const {
    for (const auto& [idx, v] : entries_)
        if (!(v == rhs(idx[0], idx[1], idx[2]))) return false;
    for (const auto& [idx, v] : rhs.entries_)
        if (!((*this)(idx[0], idx[1], idx[2]) == v)) return false;
    return true;
}

SU3Structure::SU3Structure(AlgebraPtr algebra)
    : algebra_(std::move(algebra)),
      F_(algebra_->ring(), 2),
      re_psi_(algebra_->ring(), 3),
      im_psi_(algebra_->ring(), 3) {
    const RingPtr& ring = algebra_->ring();
    Scalar one = Scalar::one(ring);
    F_.add_term({1, 2}, one);
    F_.add_term({3, 4}, one);
    F_.add_term({5, 6}, one);
    // (e^1 + i e^2) ^ (e^3 + i e^4) ^ (e^5 + i e^6), split into real and
    // imaginary parts.
    re_psi_.add_term({1, 3, 5}, one);
    re_psi_.add_term({1, 4, 6}, -one);
    re_psi_.add_term({2, 3, 6}, -one);
    re_psi_.add_term({2, 4, 5}, -one);
    im_psi_.add_term({1, 3, 6}, one);
    im_psi_.add_term({1, 4, 5}, one);
    im_psi_.add_term({2, 3, 5}, one);
    im_psi_.add_term({2, 4, 6}, -one);
}

KForm torsion_T(const SU3Structure& s) {
    KForm dF = s.algebra()->d(s.fundamental_form());
    KForm T(s.ring(), 3);
    for (const auto& tup : basis_tuples(3)) {
        int sign = -1;
        KForm::Indices mapped;
        for (int i : tup) {
            sign *= j_sign(i);
            mapped.push_back(j_partner(i));
        }
        Scalar value = dF(mapped);
        T.add_term(tup, sign < 0 ? -value : value);
    }
    return T;
}

Tensor3 torsion_C(const SU3Structure& s) {
    KForm dF = s.algebra()->d(s.fundamental_form());
    Tensor3 C(s.ring());
    for (int i = 1; i <= 6; ++i) {
        for (int j = 1; j <= 6; ++j) {
            for (int k = 1; k <= 6; ++k) {
                Scalar value = dF({j_partner(i), j, k});
                if (j_sign(i) < 0) value = -value;
                C.set(i, j, k, std::move(value));
            }
        }
    }
    return C;
}

bool balanced_check(const SU3Structure& s) {
    KForm F2 = wedge(s.fundamental_form(), s.fundamental_form());
    return s.algebra()->d(F2).is_zero();
}

bool psi_closed_check(const SU3Structure& s) {
    return psi_closed_check(*s.algebra(), s.re_psi(), s.im_psi());
}

bool psi_closed_check(const LieAlgebra& g, const KForm& re_psi, const KForm& im_psi) {
    return g.d(re_psi).is_zero() && g.d(im_psi).is_zero();
}

}  // namespace torsionforge

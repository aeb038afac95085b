#include "torsionforge/lie_algebra.hpp"

#include "torsionforge/errors.hpp"

namespace torsionforge {

LieAlgebra::LieAlgebra(RingPtr ring, std::string name, std::vector<KForm> differentials)
    : ring_(std::move(ring)), name_(std::move(name)), de_(std::move(differentials)) {
    if (de_.size() != 6) throw Error("a six-dimensional algebra needs six differentials");
    for (const auto& f : de_) {
        if (f.degree() != 2) throw DegreeMismatch("d of a basis covector must have degree 2");
        if (f.ring().get() != ring_.get()) throw RingMismatch();
    }
    for (int k = 1; k <= 6; ++k) {
        if (!d(de_[k - 1]).is_zero()) throw JacobiViolation(k);
    }
}

const KForm& LieAlgebra::d_basis(int k) const {
    if (k < 1 || k > 6) throw DimensionError(k);
    return de_[k - 1];
}

Scalar LieAlgebra::c(int k, int i, int j) const {
    return d_basis(k)({i, j});
}

KForm LieAlgebra::d(const KForm& form) const {
    if (form.ring().get() != ring_.get()) throw RingMismatch();
    if (form.degree() >= 6) return KForm(ring_, 6);
    KForm out(ring_, form.degree() + 1);
    for (const auto& [indices, coeff] : form.coefficients()) {
        for (std::size_t m = 0; m < indices.size(); ++m) {
            const KForm& dm = de_[indices[m] - 1];
            Scalar signed_coeff = (m % 2 == 0) ? coeff : -coeff;
            for (const auto& [pair_idx, c2] : dm.coefficients()) {
                KForm::Indices merged;
                merged.reserve(indices.size() + 1);
                merged.insert(merged.end(), indices.begin(), indices.begin() + m);
                merged.insert(merged.end(), pair_idx.begin(), pair_idx.end());
                merged.insert(merged.end(), indices.begin() + m + 1, indices.end());
                out.add_term(std::move(merged), signed_coeff * c2);
            }
        }
    }
    return out;
}

}  // namespace torsionforge

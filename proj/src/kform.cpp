#include "torsionforge/kform.hpp"

#include "torsionforge/errors.hpp"

#include <algorithm>
#include <sstream>

namespace torsionforge {

namespace {
constexpr int kDim = 6;
}

int sort_indices(KForm::Indices& indices) {
    // Insertion sort, counting transpositions; small tuples only.
    int sign = 1;
    for (std::size_t i = 1; i < indices.size(); ++i) {
        for (std::size_t j = i; j > 0 && indices[j - 1] > indices[j]; --j) {
            std::swap(indices[j - 1], indices[j]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < indices.size(); ++i)
        if (indices[i - 1] == indices[i]) return 0;
    return sign;
}

std::vector<KForm::Indices> basis_tuples(int k) {
    std::vector<KForm::Indices> out;
    if (k < 0 || k > kDim) return out;
    KForm::Indices tuple(k);
    auto rec = [&](auto&& self, int pos, int next) -> void {
        if (pos == k) {
            out.push_back(tuple);
            return;
        }
        for (int v = next; v <= kDim; ++v) {
            tuple[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 1);
    return out;
}

KForm::KForm(RingPtr ring, int degree) : ring_(std::move(ring)), degree_(degree) {
    if (degree_ < 0 || degree_ > kDim)
        throw DegreeMismatch("form degree " + std::to_string(degree_) + " outside 0..6");
}

KForm KForm::from_scalar(Scalar s) {
    KForm f(s.ring(), 0);
    f.add_term({}, std::move(s));
    return f;
}

KForm KForm::basis(RingPtr ring, const Indices& indices) {
    KForm f(ring, static_cast<int>(indices.size()));
    f.add_term(indices, Scalar::one(ring));
    return f;
}

void KForm::add_term(Indices indices, Scalar coeff) {
    if (static_cast<int>(indices.size()) != degree_)
        throw DegreeMismatch("term arity does not match form degree");
    for (int i : indices)
        if (i < 1 || i > kDim) throw DimensionError(i);
    if (coeff.is_zero()) return;
    int sign = sort_indices(indices);
    if (sign == 0) return;
    if (sign < 0) coeff = -coeff;
    auto it = coeffs_.find(indices);
    if (it == coeffs_.end()) {
        coeffs_.emplace(std::move(indices), std::move(coeff));
    } else {
        it->second += coeff;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

bool KForm::operator==(const KForm& rhs) const {
    if (degree_ != rhs.degree_) return false;
    return (*this - rhs).is_zero();
}

Scalar KForm::coefficient(const Indices& sorted_indices) const {
    auto it = coeffs_.find(sorted_indices);
    if (it == coeffs_.end()) return Scalar::zero(ring_);
    return it->second;
}

Scalar KForm::operator()(const Indices& args) const {
    if (static_cast<int>(args.size()) != degree_)
        throw DegreeMismatch("evaluation arity does not match form degree");
    Indices sorted = args;
    int sign = sort_indices(sorted);
    if (sign == 0) return Scalar::zero(ring_);
    Scalar c = coefficient(sorted);
    return sign < 0 ? -c : c;
}

KForm KForm::operator-() const {
    KForm out(ring_, degree_);
    for (const auto& [idx, c] : coeffs_) out.coeffs_.emplace(idx, -c);
    return out;
}

KForm& KForm::operator+=(const KForm& b) {
    if (degree_ != b.degree_) throw DegreeMismatch("adding forms of different degree");
    for (const auto& [idx, c] : b.coeffs_) add_term(idx, c);
    return *this;
}

KForm& KForm::operator-=(const KForm& b) {
    if (degree_ != b.degree_) throw DegreeMismatch("subtracting forms of different degree");
    for (const auto& [idx, c] : b.coeffs_) add_term(idx, -c);
    return *this;
}

KForm operator+(KForm a, const KForm& b) {
    a += b;
    return a;
}

KForm operator-(KForm a, const KForm& b) {
    a -= b;
    return a;
}

KForm operator*(const Scalar& c, const KForm& a) {
    KForm out(a.ring_, a.degree_);
    for (const auto& [idx, coeff] : a.coeffs_) out.add_term(idx, c * coeff);
    return out;
}

KForm wedge(const KForm& a, const KForm& b) {
    if (a.degree() + b.degree() > kDim) throw DegreeOverflow(a.degree(), b.degree());
    KForm out(a.ring(), a.degree() + b.degree());
    for (const auto& [ia, ca] : a.coefficients()) {
        for (const auto& [ib, cb] : b.coefficients()) {
            KForm::Indices merged = ia;
            merged.insert(merged.end(), ib.begin(), ib.end());
            out.add_term(std::move(merged), ca * cb);
        }
    }
    return out;
}

KForm wedge_pow(const KForm& a, int n) {
    if (a.degree() == 0) {
        Scalar c = a.coefficient({});
        return KForm::from_scalar(c.pow(n));
    }
    if (n < 0) throw Error("negative power of a form of positive degree");
    if (n == 0) return KForm::from_scalar(Scalar::one(a.ring()));
    KForm acc = a;
    for (int i = 1; i < n; ++i) acc = wedge(acc, a);
    return acc;
}

std::string KForm::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [idx, c] : coeffs_) {
        std::string basis_str;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i) basis_str += "^";
            basis_str += "e" + std::to_string(idx[i]);
        }
        if (idx.empty()) {
            out << (first ? "" : " + ") << c.str();
            first = false;
            continue;
        }
        auto constant = c.as_constant();
        if (constant && *constant == 1) {
            out << (first ? "" : " + ") << basis_str;
        } else if (constant && *constant == -1) {
            out << (first ? "-" : " - ") << basis_str;
        } else if (constant && sgn(*constant) < 0) {
            out << (first ? "-" : " - ") << to_string(-*constant) << "*" << basis_str;
        } else if (constant) {
            out << (first ? "" : " + ") << to_string(*constant) << "*" << basis_str;
        } else {
            out << (first ? "" : " + ") << "(" << c.str() << ")*" << basis_str;
        }
        first = false;
    }
    return out.str();
}

}  // namespace torsionforge

#include "torsionforge/linalg.hpp"

#include "torsionforge/errors.hpp"

namespace torsionforge {

void SpanBuilder::reduce(std::vector<Rational>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& c = v[pivot_cols_[r]];
        if (sgn(c) == 0) continue;
        Rational factor = c;  // rows are pivot-normalised
        for (std::size_t j = pivot_cols_[r]; j < dimension_; ++j)
            v[j] -= factor * rows_[r][j];
    }
}

bool SpanBuilder::add(std::vector<Rational> v) {
    if (v.size() != dimension_) throw Error("span vector has the wrong dimension");
    reduce(v);
    std::size_t lead = dimension_;
    for (std::size_t j = 0; j < dimension_; ++j)
        if (sgn(v[j]) != 0) {
            lead = j;
            break;
        }
    if (lead == dimension_) return false;
    Rational inv = v[lead];
    for (std::size_t j = lead; j < dimension_; ++j) v[j] /= inv;
    // Back-substitute into existing rows so the basis stays fully reduced.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Rational c = rows_[r][lead];
        if (sgn(c) == 0) continue;
        for (std::size_t j = lead; j < dimension_; ++j) rows_[r][j] -= c * v[j];
    }
    std::size_t at = 0;
    while (at < pivot_cols_.size() && pivot_cols_[at] < lead) ++at;
    rows_.insert(rows_.begin() + at, std::move(v));
    pivot_cols_.insert(pivot_cols_.begin() + at, lead);
    return true;
}

bool SpanBuilder::contains(std::vector<Rational> v) const {
    if (v.size() != dimension_) throw Error("span vector has the wrong dimension");
    reduce(v);
    for (const auto& c : v)
        if (sgn(c) != 0) return false;
    return true;
}

}  // namespace torsionforge

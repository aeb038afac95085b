#pragma once

#include "torsionforge/scalar.hpp"

#include <cstddef>
#include <vector>

namespace torsionforge {

inline bool linalg_is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool linalg_is_zero(const Scalar& x) { return x.is_zero(); }

// Gaussian elimination over an exact field (Rational, or Scalar fractions).
// Rows are plain vectors; the element type must support +, -, *, / exactly.
template <typename F>
struct GaussResult {
    std::vector<std::vector<F>> rref;     // nonzero rows, pivots normalised to 1
    std::vector<std::size_t> pivot_cols;  // one per row of rref
    std::vector<F> pivot_values;          // pivot entries before normalisation
};

template <typename F>
GaussResult<F> row_reduce(std::vector<std::vector<F>> rows) {
    GaussResult<F> out;
    if (rows.empty()) return out;
    const std::size_t cols = rows[0].size();
    std::size_t head = 0;
    for (std::size_t col = 0; col < cols && head < rows.size(); ++col) {
        std::size_t pivot = head;
        while (pivot < rows.size() && linalg_is_zero(rows[pivot][col])) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[head], rows[pivot]);
        out.pivot_cols.push_back(col);
        out.pivot_values.push_back(rows[head][col]);
        F inv = rows[head][col];
        for (std::size_t c = col; c < cols; ++c) rows[head][c] = rows[head][c] / inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == head || linalg_is_zero(rows[r][col])) continue;
            F factor = rows[r][col];
            for (std::size_t c = col; c < cols; ++c)
                rows[r][c] = rows[r][c] - factor * rows[head][c];
        }
        ++head;
    }
    rows.resize(head);
    out.rref = std::move(rows);
    return out;
}

template <typename F>
std::size_t matrix_rank(std::vector<std::vector<F>> rows) {
    return row_reduce(std::move(rows)).rref.size();
}

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

template <typename F>
struct SolveResult {
    SolveStatus status = SolveStatus::Inconsistent;
    std::vector<F> solution;              // valid unless Inconsistent; free vars zero
    std::vector<F> pivot_values;          // entries divided by during elimination
    std::vector<std::size_t> pivot_cols;
};

// Solve A x = b for one right-hand side; A given by rows.
template <typename F>
SolveResult<F> solve_linear(std::vector<std::vector<F>> a, const std::vector<F>& b,
                            const F& zero, const F& one) {
    SolveResult<F> out;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
    auto gauss = row_reduce(std::move(a));
    out.pivot_values = gauss.pivot_values;
    out.pivot_cols = gauss.pivot_cols;
    for (std::size_t r = 0; r < gauss.rref.size(); ++r) {
        if (gauss.pivot_cols[r] == cols) {
            out.status = SolveStatus::Inconsistent;
            return out;
        }
    }
    out.solution.assign(cols, zero);
    for (std::size_t r = 0; r < gauss.rref.size(); ++r)
        out.solution[gauss.pivot_cols[r]] = gauss.rref[r][cols];
    out.status = gauss.rref.size() == cols ? SolveStatus::Unique : SolveStatus::Underdetermined;
    (void)one;
    return out;
}

// Incremental rational span with echelon reduction; used for closure loops.
class SpanBuilder {
public:
    explicit SpanBuilder(std::size_t dimension) : dimension_(dimension) {}

    std::size_t dimension() const { return dimension_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::vector<Rational>>& basis() const { return rows_; }

    // Reduces v against the current span; returns true when v was independent
    // and has been added.
    bool add(std::vector<Rational> v);
    bool contains(std::vector<Rational> v) const;

private:
    void reduce(std::vector<Rational>& v) const;

    std::size_t dimension_;
    std::vector<std::vector<Rational>> rows_;   // reduced, sorted by pivot column
    std::vector<std::size_t> pivot_cols_;
};

}  // namespace torsionforge

#include "skewseries/linsolve.hpp"

#include <cstddef>
#include <utility>

#include "skewseries/errors.hpp"

namespace skewseries {

namespace {

// In-place RREF of [a | rhs]; returns the pivot column of each pivot row in
// order. rhs may be empty (homogeneous use).
std::vector<std::size_t> rref(std::vector<std::vector<FieldElem>>& a,
                              std::vector<FieldElem>& rhs, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    const bool with_rhs = !rhs.empty();
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.size() && a[pivot][col].is_zero()) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[pivot], a[row]);
        if (with_rhs) std::swap(rhs[pivot], rhs[row]);

        FieldElem inv = a[row][col].inv();
        for (std::size_t j = col; j < cols; ++j) a[row][j] = inv * a[row][j];
        if (with_rhs) rhs[row] = inv * rhs[row];

        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            FieldElem f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] = a[i][j] - f * a[row][j];
            if (with_rhs) rhs[i] = rhs[i] - f * rhs[row];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::optional<std::vector<FieldElem>> solve(const LinearSystem& sys, Field field,
                                            const FieldElem& filler) {
    const std::size_t rows = sys.a.size();
    const std::size_t cols = rows == 0 ? 0 : sys.a.front().size();
    for (const auto& r : sys.a) {
        if (r.size() != cols) throw usage_error("ragged linear system");
    }
    if (sys.rhs.size() != rows) throw usage_error("rhs length does not match row count");

    auto a = sys.a;
    auto rhs = sys.rhs;
    if (rhs.empty() && rows > 0) rhs.assign(rows, FieldElem::zero(field));
    // A row with no coefficients but a nonzero right-hand side refutes the
    // whole system; catching it here avoids eliminating a large matrix whose
    // inconsistency is already visible.
    for (std::size_t i = 0; i < rows; ++i) {
        if (rhs[i].is_zero()) continue;
        bool all_zero = true;
        for (std::size_t j = 0; j < cols && all_zero; ++j) all_zero = a[i][j].is_zero();
        if (all_zero) return std::nullopt;
    }
    std::vector<std::size_t> pivots =
        rows == 0 ? std::vector<std::size_t>{} : rref(a, rhs, cols);

    for (std::size_t i = pivots.size(); i < rows; ++i) {
        if (!rhs[i].is_zero()) return std::nullopt;
    }

    std::vector<FieldElem> x(cols, filler);
    // Back-substitute pivot variables; free columns keep the filler value.
    for (std::size_t r = pivots.size(); r-- > 0;) {
        std::size_t pc = pivots[r];
        FieldElem v = rhs[r];
        for (std::size_t j = pc + 1; j < cols; ++j) {
            if (!a[r][j].is_zero()) v = v - a[r][j] * x[j];
        }
        x[pc] = v;
    }
    return x;
}

std::optional<std::vector<FieldElem>> solve(const LinearSystem& sys, Field field) {
    return solve(sys, field, FieldElem::zero(field));
}

std::vector<std::vector<FieldElem>> kernel_basis(const std::vector<std::vector<FieldElem>>& a_in,
                                                 Field field) {
    const std::size_t rows = a_in.size();
    const std::size_t cols = rows == 0 ? 0 : a_in.front().size();
    for (const auto& r : a_in) {
        if (r.size() != cols) throw usage_error("ragged matrix");
    }
    auto a = a_in;
    std::vector<FieldElem> no_rhs;
    std::vector<std::size_t> pivots = rows == 0 ? std::vector<std::size_t>{} : rref(a, no_rhs, cols);

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t pc : pivots) is_pivot[pc] = true;

    std::vector<std::vector<FieldElem>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<FieldElem> v(cols, FieldElem::zero(field));
        v[free_col] = FieldElem::one(field);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -a[r][free_col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace skewseries

#pragma once

#include <optional>
#include <vector>

#include "skewseries/field.hpp"

namespace skewseries {

// Dense exact linear algebra over the base field, enough for the lifting and
// search routines: reduced row echelon form with deterministic (first nonzero)
// pivoting, solving, and kernel bases.
struct LinearSystem {
    // rows x cols matrix, row-major; rhs has one entry per row.
    std::vector<std::vector<FieldElem>> a;
    std::vector<FieldElem> rhs;
};

// Solves a*x = rhs. Free variables take the given filler value. Returns
// std::nullopt when inconsistent.
std::optional<std::vector<FieldElem>> solve(const LinearSystem& sys, Field field,
                                            const FieldElem& filler);
std::optional<std::vector<FieldElem>> solve(const LinearSystem& sys, Field field);

// Basis of the null space of a (rhs ignored).
std::vector<std::vector<FieldElem>> kernel_basis(const std::vector<std::vector<FieldElem>>& a,
                                                 Field field);

}  // namespace skewseries

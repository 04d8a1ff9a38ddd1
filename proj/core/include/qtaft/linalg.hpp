#pragma once

#include <optional>
#include <vector>

#include "qtaft/cyclotomic.hpp"

namespace qtaft {

using CycVector = std::vector<CycNum>;
using CycMatrix = std::vector<CycVector>;

/// Reduced row echelon form in place, exact over Q(zeta). Pivot choice is
/// the first row with a nonzero entry in the current column, so the result
/// is deterministic. Returns the pivot column of each surviving row.
std::vector<size_t> reduced_row_echelon(CycMatrix& m);

size_t matrix_rank(CycMatrix m);

/// Basis of the right kernel {x : m x = 0}; each returned vector has the
/// free variable normalized to 1, in ascending free-column order.
std::vector<CycVector> kernel_basis(const CycMatrix& m, size_t columns);

/// A solution x of m x = rhs, if one exists.
std::optional<CycVector> solve(const CycMatrix& m, const CycVector& rhs);

/// True when v lies in the row span of rows.
bool in_row_span(const CycMatrix& rows, const CycVector& v);

/// True when every row of inner lies in the row span of outer.
bool span_contained(const CycMatrix& inner, const CycMatrix& outer);

}  // namespace qtaft

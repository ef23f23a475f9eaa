#pragma once

#include "amalg/rational.hpp"

#include <optional>
#include <vector>

namespace amalg {

// Dense exact linear algebra over Q. Row-major matrices; everything is a
// decision procedure, no tolerances. Sized for desk-scale inputs.

using RatMat = std::vector<RatVec>;

// Reduced row echelon form in place. Returns the pivot columns in order.
std::vector<int> rref(RatMat& m);

int rank(RatMat m);

// Basis (as rows) of {x : a x = 0} with x of length ncols.
RatMat kernel_basis(const RatMat& a, int ncols);

// One solution of a x = b (free variables set to 0), or nullopt when the
// system is inconsistent.
std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b);

// Whether v lies in the row span of rows.
bool in_row_span(const RatMat& rows, const RatVec& v);

} // namespace amalg

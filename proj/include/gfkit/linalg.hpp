#pragma once

#include "gfkit/mpoly.hpp"
#include "gfkit/upoly.hpp"

#include <vector>

namespace gfkit {

using PolyMatrix = std::vector<std::vector<MPoly>>;

// Determinant by fraction-free (Bareiss) elimination; every division along
// the way is exact. Empty matrix has determinant 1.
MPoly det_bareiss(PolyMatrix m);

// Resultant of p and q with respect to var, as the Sylvester determinant.
// p and q are given by their coefficient vectors in var (index = power,
// coefficients free of var). Both must be nonzero.
MPoly resultant(const std::vector<MPoly>& p, const std::vector<MPoly>& q);

// (-1)^(m(m-1)/2) resultant(p, p') / lc(p) for p of degree m in var;
// positional coefficients as for resultant. lc must divide exactly.
MPoly discriminant(const std::vector<MPoly>& p);

// coefficient vector of p read as univariate in var
std::vector<MPoly> coeffs_in_var(const MPoly& p, int var);

// Exact linear algebra over Q. Rows of the matrix are independent vectors.
using QMatrix = std::vector<std::vector<Rat>>;

// reduced row echelon form in place; returns the pivot columns
std::vector<int> qmatrix_rref(QMatrix& m);

// basis of the right nullspace of m (n columns)
std::vector<std::vector<Rat>> qmatrix_nullspace(QMatrix m, int ncols);

} // namespace gfkit

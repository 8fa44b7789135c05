#pragma once

#include <vector>

#include "algstat/polyring.hpp"

namespace algstat {

/// Dense square or rectangular matrix of polynomials, row-major.
using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Determinant by Laplace expansion along the first row with memoized minors.
/// Division-free; intended for the small matrices of graphical models.
MultiPoly determinant(const PolyMatrix& m, const Ring& ring);

/// adj(M)_{ij} = (-1)^{i+j} det M with row j and column i removed. All minors
/// share one memo table.
PolyMatrix adjugate(const PolyMatrix& m, const Ring& ring);

}  // namespace algstat

#pragma once

#include <string>
#include <vector>

#include "ffl/multipoly.hpp"
#include "ffl/unipoly.hpp"

namespace ffl {

/// Square matrix of MultiPoly entries sharing one variable list.
using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// det(X*Id - M) by fraction-free (Bareiss) elimination; X is appended to the variable list.
/// Throws NonSquare.
MultiPoly charpoly_fraction_free(const PolyMatrix& M, const std::string& X = "X");
/// Same polynomial by Laplace expansion along the first row (small d only).
MultiPoly charpoly_cofactor(const PolyMatrix& M, const std::string& X = "X");

MultiPoly det_bareiss(PolyMatrix M);
MultiPoly det_cofactor(const PolyMatrix& M);

/// Division-free (Berkowitz) characteristic polynomial of a matrix over F_q[z];
/// returns c_0..c_d with det(X*Id - M) = sum c_k X^k.
std::vector<UniPoly> charpoly_berkowitz(const std::vector<std::vector<UniPoly>>& M);

}  // namespace ffl

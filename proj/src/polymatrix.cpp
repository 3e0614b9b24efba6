#include "ffl/polymatrix.hpp"

#include "ffl/error.hpp"

namespace ffl {
namespace {

void check_square(const PolyMatrix& M) {
  for (const auto& row : M)
    if (row.size() != M.size()) throw Error(ErrorKind::NonSquare, "matrix is not square");
  if (M.empty()) throw Error(ErrorKind::NonSquare, "empty matrix");
}

PolyMatrix x_minus(const PolyMatrix& M, const std::string& X) {
  check_square(M);
  const Field& F = M[0][0].field();
  const Vars v = M[0][0].vars().with(X);
  const std::size_t n = M.size();
  PolyMatrix N(n, std::vector<MultiPoly>(n));
  const MultiPoly x = MultiPoly::var(F, v, X);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly e = -M[i][j].to_vars(v);
      N[i][j] = i == j ? x + e : e;
    }
  return N;
}

}  // namespace

MultiPoly det_bareiss(PolyMatrix N) {
  check_square(N);
  const std::size_t n = N.size();
  const Field& F = N[0][0].field();
  const Vars& v = N[0][0].vars();
  bool negate = false;
  MultiPoly prev = MultiPoly::constant(F, v, F.one());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (N[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && N[piv][k].is_zero()) ++piv;
      if (piv == n) return MultiPoly(F, v);
      std::swap(N[k], N[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        N[i][j] = (N[i][j] * N[k][k] - N[i][k] * N[k][j]).div_exact(prev);
      N[i][k] = MultiPoly(F, v);
    }
    prev = N[k][k];
  }
  return negate ? -N[n - 1][n - 1] : N[n - 1][n - 1];
}

MultiPoly det_cofactor(const PolyMatrix& M) {
  check_square(M);
  const std::size_t n = M.size();
  if (n == 1) return M[0][0];
  MultiPoly acc(M[0][0].field(), M[0][0].vars());
  for (std::size_t j = 0; j < n; ++j) {
    if (M[0][j].is_zero()) continue;
    PolyMatrix minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) minor[i - 1].push_back(M[i][k]);
    MultiPoly t = M[0][j] * det_cofactor(minor);
    acc = (j % 2) ? acc - t : acc + t;
  }
  return acc;
}

MultiPoly charpoly_fraction_free(const PolyMatrix& M, const std::string& X) { return det_bareiss(x_minus(M, X)); }

MultiPoly charpoly_cofactor(const PolyMatrix& M, const std::string& X) { return det_cofactor(x_minus(M, X)); }

std::vector<UniPoly> charpoly_berkowitz(const std::vector<std::vector<UniPoly>>& M) {
  const std::size_t n = M.size();
  for (const auto& row : M)
    if (row.size() != n) throw Error(ErrorKind::NonSquare, "matrix is not square");
  if (n == 0) throw Error(ErrorKind::NonSquare, "empty matrix");
  const Field& F = M[0][0].field();
  // p holds coefficients from the leading one downwards.
  std::vector<UniPoly> p{UniPoly::one(F)};
  for (std::size_t r = 1; r <= n; ++r) {
    const std::size_t m = r - 1;  // size of the leading block
    std::vector<UniPoly> t(r + 1, UniPoly(F));
    t[0] = UniPoly::one(F);
    t[1] = -M[m][m];
    // w = A^k C, starting from C = column m of the block.
    std::vector<UniPoly> w(m, UniPoly(F));
    for (std::size_t i = 0; i < m; ++i) w[i] = M[i][m];
    for (std::size_t k = 2; k <= r; ++k) {
      UniPoly s(F);
      for (std::size_t i = 0; i < m; ++i) s += M[m][i] * w[i];
      t[k] = -s;
      if (k < r) {
        std::vector<UniPoly> nw(m, UniPoly(F));
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j) nw[i] += M[i][j] * w[j];
        w = std::move(nw);
      }
    }
    std::vector<UniPoly> np(r + 1, UniPoly(F));
    for (std::size_t i = 0; i <= r; ++i)
      for (std::size_t j = 0; j <= std::min(i, r - 1); ++j) np[i] += t[i - j] * p[j];
    p = std::move(np);
  }
  std::vector<UniPoly> out(p.rbegin(), p.rend());
  return out;
}

}  // namespace ffl

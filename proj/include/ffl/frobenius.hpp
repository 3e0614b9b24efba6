#pragma once

#include <map>
#include <memory>
#include <vector>

#include "ffl/drinfeld.hpp"
#include "ffl/polymatrix.hpp"

namespace ffl {

/// Matrix of x -> sum_i c_i x^{q^i} mod f on the basis 1, theta, ..., theta^{d-1},
/// column j holding the image of theta^j. Entries live over d.vars() without theta.
/// Throws ReducibleF.
PolyMatrix theta_action_matrix(const DrinfeldModule& phi, const UniPoly& f, const Deformation& d);
/// Characteristic polynomial of the matrix above evaluated at X = theta, over d.vars().
MultiPoly fitting_ideal(const DrinfeldModule& phi, const UniPoly& f, const Deformation& d);

struct FrobeniusData {
  UniPoly f;
  unsigned d = 0;
  unsigned r0 = 0;
  FqElem cf{};                // meaningful iff r0 >= 1
  std::vector<UniPoly> e;     // e[i-1] = c(f) p_i, i = 1..r0
  std::vector<UniPoly> Df;    // coefficients of x^0..x^{r0}
  std::vector<UniPoly> P;     // p_0..p_{r0}, monic in x

  /// f + sum e_i z^{di} over (theta, z).
  MultiPoly deformed_fitting() const;
};

/// Reads Frobenius data off the z^1-deformed Fitting ideal (Berkowitz route).
/// Throws ReducibleF; StructureViolation if the ideal lacks the expected shape.
FrobeniusData frobenius_data(const DrinfeldModule& phi, const UniPoly& f);
/// Coefficient of x^i in 1/D_f(x).
UniPoly mu_prime_power(const FrobeniusData& data, unsigned i);

class MuTable {
 public:
  MuTable() = default;
  const DrinfeldModule& phi() const noexcept { return phi_; }
  unsigned max_degree() const noexcept { return D_; }
  /// mu of a monic polynomial of degree <= D; throws DegreeOutOfTable.
  const UniPoly& operator()(const UniPoly& a) const;
  /// Values of degree k indexed by UniPoly::code().
  const std::vector<UniPoly>& degree(unsigned k) const;
  const std::map<std::uint64_t, FrobeniusData>& primes(unsigned k) const { return primes_.at(k); }
  /// Copy with mu(a) replaced; used to build fault-injection fixtures.
  MuTable with_override(const UniPoly& a, const UniPoly& value) const;

  friend MuTable mu_table(const DrinfeldModule& phi, unsigned D);

 private:
  DrinfeldModule phi_;
  unsigned D_ = 0;
  std::vector<std::vector<UniPoly>> values_;
  std::vector<std::map<std::uint64_t, FrobeniusData>> primes_;
};

/// mu(a) for all monic a of degree <= D by trial-division factorization and multiplicativity.
MuTable mu_table(const DrinfeldModule& phi, unsigned D);

}  // namespace ffl

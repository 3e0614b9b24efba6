#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "ffl/frobenius.hpp"
#include "ffl/kpoly.hpp"
#include "ffl/lvalues.hpp"

namespace ffl {

using Json = nlohmann::ordered_json;

/// Machine-readable verdict. A failing report always carries a witness.
struct CheckReport {
  std::string name;
  Json params = Json::object();
  bool pass = true;
  Json witness = nullptr;

  /// Records the first failure only; later failures keep the original witness.
  void fail(Json w) {
    if (pass) witness = std::move(w);
    pass = false;
  }
  Json to_json() const;
};

constexpr std::size_t kDefaultTermBudget = 1000000;

/// c_j = sum_{a in A_{+,j}} mu(a) a(z_1)...a(z_n)/a for j <= k_max, over z1..zn.
std::vector<KPoly> degree_sums(const MuTable& mu, unsigned n, unsigned k_max);

struct WCoefficients {
  std::vector<KPoly> W;
  std::vector<bool> integral;
};
/// t^k-coefficients of exp_psi of the deformed L-value; throws TableTooSmall.
WCoefficients w_coefficients(const MuTable& mu, unsigned n, unsigned k_max);

struct ZCoefficients {
  std::vector<KPoly> S;
  std::vector<KPoly> Z;
  std::vector<bool> integral;
};
/// Upper bound for the number of terms of the X-side numerators up to k_max.
std::size_t z_term_estimate(const MuTable& mu, unsigned n, unsigned k_max);
/// S_k = sum mu(a) C_a(X_1)...C_a(X_n)/a and Z_k = sum_i alpha_i S_{k-i}^{q^i}.
/// Throws TableTooSmall and TermBudgetExceeded.
ZCoefficients z_coefficients(const MuTable& mu, unsigned n, unsigned k_max, const std::vector<std::string>& xvars,
                             std::size_t budget = kDefaultTermBudget);

/// n <= q/r - (1 + 2 beta).
bool degreewise_applies(const DrinfeldModule& phi, unsigned n);

/// W_k and Z_k integral, Z_k = carlitz_substitute(W_k), and both zero for
/// floor(r(n+beta)/(q-1)) < k <= bound + slack. A table may be supplied (fault injection).
CheckReport check_logalg_vanishing(const DrinfeldModule& phi, unsigned n, unsigned slack,
                                   std::size_t budget = kDefaultTermBudget, const MuTable* mu = nullptr);
/// c_i = gamma_i l_i(z_1)...l_i(z_n) for i <= i_max; throws NotApplicable.
CheckReport check_degreewise_identity(const DrinfeldModule& phi, unsigned n, unsigned i_max);
/// Without phi: sum_{a in A_{+,i}} a^{q^k - 1} = L_i l_i(theta^{q^k}) (Carlitz log coefficients L_i).
/// With phi: the mu-twisted sum against gamma_i l_i(theta^{q^k}); throws NotApplicable unless
/// beta <= q/(2r) - 1.
CheckReport check_powersum(const Field& F, unsigned i_max, unsigned k_max, const DrinfeldModule* phi = nullptr);
/// Plain, z^1, canonical and t-deformed Fitting ideals against the Frobenius data of f.
CheckReport check_fitting_consistency(const DrinfeldModule& phi, const UniPoly& f, unsigned n_max = 2);
/// In the regime n <= q/r - (1+2beta): radius guard, W_0 = 1, W_k = 0 up to bound + slack
/// and the degreewise identity to i_max. Throws NotApplicable outside it.
CheckReport check_unit_regime(const DrinfeldModule& phi, unsigned n, unsigned i_max, unsigned slack);

struct PPolynomial {
  MultiPoly value;  // over (theta, z1..zn)
  CheckReport report;
};
/// sum_k W_k up to the vanishing bound plus slack.
PPolynomial p_polynomial(const DrinfeldModule& phi, unsigned n, unsigned slack = 2,
                         std::size_t budget = kDefaultTermBudget);

}  // namespace ffl

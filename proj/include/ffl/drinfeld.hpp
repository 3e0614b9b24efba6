#pragma once

#include <string>
#include <vector>

#include "ffl/kpoly.hpp"
#include "ffl/multipoly.hpp"
#include "ffl/rational.hpp"
#include "ffl/ratfunc.hpp"
#include "ffl/skewpoly.hpp"
#include "ffl/unipoly.hpp"

namespace ffl {

/// phi_theta = theta + phi_1 tau + ... + phi_r tau^r.
class DrinfeldModule {
 public:
  DrinfeldModule() = default;
  /// coeffs = [phi_1, ..., phi_r]; trailing zeros are dropped, at least one must be nonzero.
  static DrinfeldModule make(const Field& f, std::vector<UniPoly> coeffs);
  static DrinfeldModule carlitz(const Field& f) { return make(f, {UniPoly::one(f)}); }

  const Field& field() const noexcept { return field_; }
  unsigned rank() const noexcept { return static_cast<unsigned>(c_.size()) - 1; }
  /// coeff(0) = theta.
  const UniPoly& coeff(unsigned i) const { return c_.at(i); }
  const std::vector<UniPoly>& coeffs() const noexcept { return c_; }
  unsigned beta() const noexcept { return beta_; }
  std::string to_string() const;

 private:
  Field field_;
  std::vector<UniPoly> c_;
  unsigned beta_ = 0;
};

struct Deformation {
  enum class Kind { Plain, ZPower, Canonical, CanonicalT };
  Kind kind = Kind::Plain;
  unsigned param = 0;  // m for ZPower, n otherwise

  static Deformation plain() { return {}; }
  static Deformation zpower(unsigned m);
  static Deformation canonical(unsigned n);
  static Deformation canonical_t(unsigned n);
  /// "plain | z^m | canonical(n) | canonical-t(n)"
  static Deformation parse(const std::string& s);
  std::string to_string() const;

  /// theta first, then z (ZPower) or z1..zn, then t (CanonicalT).
  Vars vars() const;
  /// Names of the z-variables.
  std::vector<std::string> zvars() const;
};

std::vector<std::string> z_names(unsigned n, const std::string& prefix = "z");

/// The i-th deformed coefficient as a MultiPoly over d.vars().
MultiPoly deformed_coeff(const DrinfeldModule& phi, unsigned i, const Deformation& d);
SkewPoly<MultiPoly> phi_theta(const DrinfeldModule& phi, const Deformation& d);
/// phi_a by Horner evaluation.
SkewPoly<MultiPoly> phi_of_a(const DrinfeldModule& phi, const UniPoly& a, const Deformation& d);
/// phi_a with all theta-coefficients reduced modulo the monic f.
SkewPoly<MultiPoly> phi_of_a_mod(const DrinfeldModule& phi, const UniPoly& a, const Deformation& d,
                                 const UniPoly& f);

struct ExpLogTable {
  enum class Kind { Exp, Log };
  Kind kind = Kind::Exp;
  std::vector<RatFunc> entries;
  bool certified = false;
};

ExpLogTable exp_coeffs(const DrinfeldModule& phi, unsigned N);
ExpLogTable log_coeffs(const DrinfeldModule& phi, unsigned N);
/// exp * log == 1 mod tau^{N+1}.
bool exp_log_compose_to_identity(const ExpLogTable& e, const ExpLogTable& l);

/// prod_{k} prod_{j<i} (z_k - theta^{q^j}) over vars (theta first).
MultiPoly ell_product(const Field& f, unsigned i, const std::vector<std::string>& zvars, const Vars& vars);
/// C_a(X) over vars (must contain theta and X).
MultiPoly carlitz_action(const Field& f, const UniPoly& a, const std::string& X, const Vars& vars);
/// Skew coefficients d_0..d_k of C_a.
std::vector<UniPoly> carlitz_skew(const Field& f, const UniPoly& a);
/// A-linear map prod z_j^{e_j} -> prod_j C_{theta^{e_j}}(X_j) (so 1 -> X_1...X_n); output over `out` (theta, X's, and any untouched vars).
MultiPoly carlitz_substitute(const MultiPoly& P, const std::vector<std::string>& zvars,
                             const std::vector<std::string>& xvars, const Vars& out);
/// K-linear version on KPoly over zvars, result over xvars.
KPoly carlitz_substitute(const KPoly& P, const Vars& xvars);

struct LogRadius {
  unsigned index = 0;
  Rational exponent;
  /// deg phi_i + n(1+...+q^{i-1}) < q^i, as exact integers.
  bool strict_inequality = false;
};
/// Throws ZeroTail.
LogRadius log_radius(const DrinfeldModule& phi, unsigned n);

}  // namespace ffl

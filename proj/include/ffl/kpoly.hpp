#pragma once

#include <map>
#include <optional>
#include <string>

#include "ffl/multipoly.hpp"
#include "ffl/ratfunc.hpp"

namespace ffl {

/// Polynomial in named variables (never theta) with coefficients in K = F_q(theta).
class KPoly {
 public:
  using TermMap = std::map<Exps, RatFunc>;

  KPoly() = default;
  KPoly(Field f, Vars vars) : field_(std::move(f)), vars_(std::move(vars)) {}

  static KPoly constant(const Field& f, const Vars& v, const RatFunc& c);
  /// Splits off the variable `theta` of P into K; remaining variables must match `v` by name.
  static KPoly from_multi(const MultiPoly& P, const std::string& theta, const Vars& v);

  const Field& field() const noexcept { return field_; }
  const Vars& vars() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  RatFunc coeff(const Exps& e) const;
  void add_term(const Exps& e, const RatFunc& c);

  friend KPoly operator+(const KPoly& a, const KPoly& b);
  friend KPoly operator-(const KPoly& a, const KPoly& b);
  friend KPoly operator*(const KPoly& a, const KPoly& b);
  KPoly operator-() const;
  KPoly& operator+=(const KPoly& b);
  KPoly scale(const RatFunc& c) const;
  /// tau^i on coefficients only (variables are fixed).
  KPoly tau(unsigned i) const;
  /// Full q^i-th power: exponents times q^i, coefficients through tau^i.
  KPoly frobenius_power(unsigned i) const;

  /// Lcm of all coefficient denominators (1 for integral polynomials).
  UniPoly denominator() const;
  bool is_integral() const;
  /// Integral polynomials as MultiPoly over (theta, vars...); nullopt otherwise.
  std::optional<MultiPoly> to_multi(const std::string& theta = "theta") const;

  std::string to_string() const;
  friend bool operator==(const KPoly& a, const KPoly& b) { return a.terms_ == b.terms_; }

 private:
  Field field_;
  Vars vars_;
  TermMap terms_;
};

}  // namespace ffl

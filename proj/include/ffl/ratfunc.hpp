#pragma once

#include <string>

#include "ffl/unipoly.hpp"

namespace ffl {

/// Element of K = F_q(theta): reduced fraction with monic denominator.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(const Field& f) : num_(f), den_(UniPoly::one(f)) {}
  RatFunc(UniPoly num);  // NOLINT: polynomials embed in K
  /// Throws DivisionByZero when den is zero.
  RatFunc(UniPoly num, UniPoly den);

  static RatFunc one(const Field& f) { return RatFunc(UniPoly::one(f)); }

  const UniPoly& num() const noexcept { return num_; }
  const UniPoly& den() const noexcept { return den_; }
  const Field& field() const noexcept { return den_.field(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }
  /// Valuation at infinity: deg den - deg num.
  long ord() const;

  RatFunc operator-() const { return RatFunc(-num_, den_, true); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc inv() const;
  /// theta -> theta^(q^i); stays reduced without a gcd.
  RatFunc tau(unsigned i = 1) const { return RatFunc(num_.tau(i), den_.tau(i), true); }

  std::string to_string() const;
  friend bool operator==(const RatFunc& a, const RatFunc& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  RatFunc(UniPoly num, UniPoly den, bool /*already reduced*/) : num_(std::move(num)), den_(std::move(den)) {}
  UniPoly num_, den_;
};

}  // namespace ffl

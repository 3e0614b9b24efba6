#pragma once

#include <climits>
#include <map>
#include <string>
#include <vector>

#include "ffl/multipoly.hpp"
#include "ffl/unipoly.hpp"

namespace ffl {

/// Truncated Laurent series in 1/theta with coefficients in F_q[z-vars].
///
/// Precision N means every coefficient of theta^e with e >= -N is exact; nothing
/// below is stored. Exact series carry kExact.
class TateSeries {
 public:
  static constexpr long kExact = LONG_MAX / 4;

  TateSeries() = default;
  TateSeries(Field f, Vars zvars, long precision = kExact)
      : field_(std::move(f)), vars_(std::move(zvars)), prec_(precision) {}

  static TateSeries one(const Field& f, const Vars& zvars);
  static TateSeries from_unipoly(const UniPoly& a, const Vars& zvars);
  /// theta^e.
  static TateSeries theta_power(const Field& f, const Vars& zvars, long e);

  const Field& field() const noexcept { return field_; }
  const Vars& vars() const noexcept { return vars_; }
  long precision() const noexcept { return prec_; }
  bool is_exact() const noexcept { return prec_ >= kExact; }
  const std::map<long, MultiPoly>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Largest exponent with a nonzero coefficient; throws on zero.
  long top() const;
  /// Gauss valuation = -top().
  long ord() const { return -top(); }
  MultiPoly coeff(long e) const;

  /// Adds c * theta^e (dropped when below precision).
  void add_term(long e, const MultiPoly& c);
  TateSeries truncate(long N) const;

  friend TateSeries operator+(const TateSeries& a, const TateSeries& b);
  friend TateSeries operator-(const TateSeries& a, const TateSeries& b);
  friend TateSeries operator*(const TateSeries& a, const TateSeries& b);
  TateSeries operator-() const;
  TateSeries& operator+=(const TateSeries& b) { return *this = *this + b; }
  TateSeries scale(const MultiPoly& c) const;
  TateSeries shift(long e) const;

  /// Coefficientwise equality on exponents >= -N (both sides must be known there).
  bool agrees_with(const TateSeries& b, long N) const;
  friend bool operator==(const TateSeries& a, const TateSeries& b) {
    return a.prec_ == b.prec_ && a.terms_ == b.terms_;
  }
  std::string to_string() const;

 private:
  Field field_;
  Vars vars_;
  long prec_ = kExact;
  std::map<long, MultiPoly> terms_;
};

/// Coefficients u_k with 1/a = sum_{k=0}^{K} u_k theta^{-deg a - k}, K = N - deg a.
std::vector<FqElem> laurent_inverse_coeffs(const UniPoly& a, long N);
/// 1/a to precision N; throws NotMonic and NegativePrecision.
TateSeries laurent_invert_monic(const UniPoly& a, long N, const Vars& zvars = Vars());

}  // namespace ffl

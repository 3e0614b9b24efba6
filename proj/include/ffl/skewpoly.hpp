#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "ffl/error.hpp"
#include "ffl/kpoly.hpp"
#include "ffl/multipoly.hpp"
#include "ffl/ratfunc.hpp"
#include "ffl/unipoly.hpp"

namespace ffl {

/// Twisted polynomial sum c_i tau^i over a coefficient ring R with tau c = tau(c) tau.
template <class R>
class SkewPoly {
 public:
  /// tau(c, i) must return the i-fold twist of c.
  using Tau = std::function<R(const R&, unsigned)>;
  /// Optional canonical-form map applied to every product coefficient (e.g. reduction mod f).
  using Norm = std::function<R(const R&)>;

  SkewPoly() = default;
  SkewPoly(R zero, Tau tau, std::vector<R> coeffs = {}, Norm norm = {})
      : zero_(std::move(zero)), tau_(std::move(tau)), norm_(std::move(norm)), c_(std::move(coeffs)) {
    if (norm_)
      for (auto& c : c_) c = norm_(c);
    trim();
  }

  SkewPoly with_coeffs(std::vector<R> coeffs) const { return SkewPoly(zero_, tau_, std::move(coeffs), norm_); }

  const std::vector<R>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const R& coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : zero_; }
  const R& zero() const noexcept { return zero_; }
  R twist(const R& c, unsigned i) const { return i == 0 ? c : tau_(c, i); }

  friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
    std::vector<R> c(std::max(a.c_.size(), b.c_.size()), a.zero_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return a.with_coeffs(std::move(c));
  }
  friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) {
    std::vector<R> c(std::max(a.c_.size(), b.c_.size()), a.zero_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return a.with_coeffs(std::move(c));
  }
  friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) { return a.mul(b, -1); }

  /// Product truncated to tau-degree <= max_deg (no truncation when max_deg < 0).
  SkewPoly mul(const SkewPoly& b, int max_deg) const {
    if (is_zero() || b.is_zero()) return with_coeffs({});
    std::size_t n = c_.size() + b.c_.size() - 1;
    if (max_deg >= 0) n = std::min<std::size_t>(n, static_cast<std::size_t>(max_deg) + 1);
    std::vector<R> out(n, zero_);
    for (std::size_t j = 0; j < b.c_.size() && j < n; ++j) {
      if (b.c_[j].is_zero()) continue;
      for (std::size_t i = 0; i < c_.size() && i + j < n; ++i) {
        if (c_[i].is_zero()) continue;
        out[i + j] = out[i + j] + c_[i] * twist(b.c_[j], static_cast<unsigned>(i));
      }
    }
    return with_coeffs(std::move(out));
  }

  friend bool operator==(const SkewPoly& a, const SkewPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  R zero_;
  Tau tau_;
  Norm norm_;
  std::vector<R> c_;
};

/// Skew rings used across the library.
SkewPoly<UniPoly> skew_over_A(const Field& f, std::vector<UniPoly> coeffs = {});
SkewPoly<RatFunc> skew_over_K(const Field& f, std::vector<RatFunc> coeffs = {});
/// Coefficients are MultiPoly over `vars`; tau raises the variable `theta` to the q-th power.
SkewPoly<MultiPoly> skew_over_multi(const Field& f, const Vars& vars, const std::string& theta = "theta",
                                    std::vector<MultiPoly> coeffs = {});
/// As skew_over_multi, with coefficients reduced modulo the monic f(theta).
SkewPoly<MultiPoly> skew_over_multi_mod(const Field& f, const Vars& vars, const UniPoly& modulus,
                                        const std::string& theta = "theta", std::vector<MultiPoly> coeffs = {});

}  // namespace ffl

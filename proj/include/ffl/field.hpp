#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace ffl {

/// An element of F_q stored as the integer sum d_0 + d_1 p + ... + d_{l-1} p^{l-1}
/// of its power-basis digits. Meaningful only together with its Field.
struct FqElem {
  std::uint32_t v = 0;
  friend auto operator<=>(const FqElem&, const FqElem&) = default;
};

/// F_q = F_p[u]/(modulus). A cheap, immutable, shareable handle.
///
/// For l = 1 arithmetic is plain modular arithmetic; for small extension
/// fields the addition, multiplication and inversion tables are precomputed.
class Field {
 public:
  /// Placeholder handle; must be assigned from make() before use.
  Field() = default;
  /// Validates p, the modulus (monic, degree l, irreducible over F_p) and builds
  /// the field. When the modulus is omitted and l > 1 a built-in table is used
  /// for p^l <= 64.
  static Field make(std::uint32_t p, std::uint32_t l,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t p() const noexcept { return impl_->p; }
  std::uint32_t l() const noexcept { return impl_->l; }
  std::uint32_t q() const noexcept { return impl_->q; }
  /// Ascending F_p digits of the modulus, length l+1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return impl_->modulus; }
  bool is_prime_field() const noexcept { return impl_->l == 1; }

  FqElem zero() const noexcept { return {0}; }
  FqElem one() const noexcept { return {1}; }
  /// The image of an integer in the prime subfield.
  FqElem from_int(long long n) const noexcept;
  FqElem from_digits(std::span<const std::uint32_t> digits) const;
  std::vector<std::uint32_t> digits(FqElem a) const;
  /// The class of u; equal to 0 when l = 1 with the trivial modulus.
  FqElem generator() const;
  /// Every element, in increasing encoding order.
  std::vector<FqElem> elements() const;

  FqElem add(FqElem a, FqElem b) const noexcept {
    const Impl& f = *impl_;
    if (f.l == 1) {
      std::uint32_t s = a.v + b.v;
      return {s >= f.p ? s - f.p : s};
    }
    if (f.tabled) return {f.add_tab[a.v * f.q + b.v]};
    return slow_add(a, b);
  }
  FqElem neg(FqElem a) const noexcept {
    const Impl& f = *impl_;
    if (f.l == 1) return {a.v == 0 ? 0 : f.p - a.v};
    if (f.tabled) return {f.neg_tab[a.v]};
    return slow_neg(a);
  }
  FqElem sub(FqElem a, FqElem b) const noexcept { return add(a, neg(b)); }
  FqElem mul(FqElem a, FqElem b) const noexcept {
    const Impl& f = *impl_;
    if (f.l == 1) return {static_cast<std::uint32_t>(std::uint64_t{a.v} * b.v % f.p)};
    if (f.tabled) return {f.mul_tab[a.v * f.q + b.v]};
    return slow_mul(a, b);
  }
  /// Throws DivisionByZero on 0.
  FqElem inv(FqElem a) const;
  FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
  FqElem pow(FqElem a, std::uint64_t e) const noexcept;
  /// x -> x^p.
  FqElem frobenius(FqElem a) const noexcept { return pow(a, impl_->p); }

  bool valid() const noexcept { return impl_ != nullptr; }

  friend bool operator==(const Field& a, const Field& b) noexcept {
    if (a.impl_ == b.impl_) return true;
    if (!a.impl_ || !b.impl_) return false;
    return a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus;
  }

 private:
  struct Impl {
    std::uint32_t p = 0, l = 0, q = 0;
    std::vector<std::uint32_t> modulus;
    bool tabled = false;
    std::vector<std::uint32_t> add_tab, mul_tab, neg_tab, inv_tab;
  };
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  FqElem slow_add(FqElem a, FqElem b) const noexcept;
  FqElem slow_neg(FqElem a) const noexcept;
  FqElem slow_mul(FqElem a, FqElem b) const noexcept;

  std::shared_ptr<const Impl> impl_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace ffl

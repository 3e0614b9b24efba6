#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffl/frobenius.hpp"
#include "ffl/rational.hpp"
#include "ffl/tate.hpp"

namespace ffl {

/// H_k = sum_{a in A_{+,k}} mu(a) a(z_1)...a(z_n) over (theta, zvars...).
/// Throws DegreeOutOfTable.
MultiPoly h_sum(const MuTable& mu, unsigned k, const std::vector<std::string>& zvars);

/// r(n + beta)/(q - 1).
Rational vanishing_bound(const DrinfeldModule& phi, unsigned n);
/// Largest k for which H_{k,n} may be nonzero as proven: floor(r(n + 1 + beta)/(q - 1)).
unsigned h_termination_degree(const DrinfeldModule& phi, unsigned n);

struct LValueResult {
  TateSeries series;
  unsigned terms_used = 0;
  /// log_q of a proven bound on |L - series|; nullopt when the sum terminated exactly.
  std::optional<Rational> tail_log_q;
  /// Prefix length m of y (Goss evaluation only).
  unsigned m = 0;
};

/// Largest degree that can reach precision N when deg mu(a) <= (1 - 1/r) deg a.
unsigned taelman_cutoff(unsigned r, unsigned s, long N);

/// sum_{a in A_{+,d}} mu(a) a(z_1)...a(z_n) / a^s, truncated to precision N, over zvars.
TateSeries dirichlet_block(const MuTable& mu, unsigned d, const std::vector<std::string>& zvars,
                           unsigned s, long N);

/// sum_a mu(a) a(z_1)...a(z_n)/a^s to precision N. Degrees beyond the table are
/// omitted; the stored precision then drops to what the table certifies.
LValueResult taelman_lvalue(const MuTable& mu, unsigned n, unsigned s, long N);
/// Builds its own table; deg_cap limits it.
LValueResult taelman_lvalue(const DrinfeldModule& phi, unsigned n, unsigned s, long N,
                            std::optional<unsigned> deg_cap = std::nullopt);

/// prod_{deg f <= D} (sum_i mu(f^i) (f(z_1)...f(z_n) / f^s)^i) to precision N.
LValueResult euler_product_truncation(const DrinfeldModule& phi, unsigned n, unsigned s, unsigned D, long N);

/// Sum of digits of m in base q.
unsigned digit_sum(std::uint64_t m, std::uint64_t q);
/// Degree beyond which every block of the s <= 0 sum vanishes.
unsigned special_value_cutoff(const DrinfeldModule& phi, unsigned n, long s);
/// sum_a mu(a) a(z_1)...a(z_n) a^{-s} for s <= 0, over (theta, zvars...).
/// Sums to the cutoff plus `extra`; throws TableTooSmall when mu does not reach that.
MultiPoly special_value_nonpositive(const MuTable& mu, const std::vector<std::string>& zvars, long s,
                                    unsigned extra = 0);

/// p-adic integer given by a finite prefix of digits followed by a repeating digit.
struct PAdicInt {
  unsigned p = 2;
  std::vector<unsigned> prefix;
  unsigned repeat = 0;

  static PAdicInt from_integer(unsigned p, long long v);
  unsigned digit(std::size_t k) const { return k < prefix.size() ? prefix[k] : repeat; }
  std::vector<unsigned> digits(std::size_t count) const;
  bool is_natural() const noexcept { return repeat == 0; }
  std::string to_string() const;
};

/// binom(y, i) mod p by Lucas' formula; y given by its base-p digits (least significant first).
unsigned lucas_binomial(unsigned p, const std::vector<unsigned>& y_digits, std::uint64_t i);

/// <a>^y = sum_i binom(y, i) (<a> - 1)^i to precision N; y by its base-p digits. Throws NotMonic.
TateSeries bracket_pow(const UniPoly& a, const std::vector<unsigned>& y_digits, long N);

/// Inverse of a nonzero series with constant coefficients, to precision N.
TateSeries invert_series(const TateSeries& x, long N);

/// Smallest d covered by the tail estimate: ceil(3r + r(n + 1 + beta)/(q - 1)).
unsigned goss_tail_threshold(unsigned r, unsigned n, unsigned beta, std::uint64_t q);
/// log_q of |x|^{-d} q^{d(1 - 1/r)} q^{-q^{[d/r - (n+1+beta)/(q-1)] - 2}}; |x| = q^{-ord_x}.
/// Throws NZero for n = 0 and InvalidArgument below the threshold.
Rational goss_tail_log_q(unsigned r, unsigned n, unsigned beta, std::uint64_t q, unsigned d, long ord_x);

struct GossPoint {
  TateSeries x;
  PAdicInt y;
};

/// L(x, y) = sum_d x^{-d} sum_{a in A_{+,d}} mu(a) a(z_1)...a(z_n) <a>^y with a proven
/// bound below q^eps (eps is a log_q exponent). Throws NZero for n = 0.
LValueResult goss_eval(const DrinfeldModule& phi, unsigned n, const GossPoint& point, const Rational& eps);

}  // namespace ffl

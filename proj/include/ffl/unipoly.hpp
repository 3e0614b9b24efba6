#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ffl/field.hpp"

namespace ffl {

/// Dense univariate polynomial over F_q, ascending coefficients, trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Field f) : field_(std::move(f)) {}
  UniPoly(Field f, std::vector<FqElem> coeffs);

  static UniPoly constant(const Field& f, FqElem c);
  static UniPoly constant(const Field& f, long long c) { return constant(f, f.from_int(c)); }
  static UniPoly monomial(const Field& f, std::size_t n, FqElem c);
  static UniPoly theta(const Field& f) { return monomial(f, 1, f.one()); }
  static UniPoly one(const Field& f) { return constant(f, f.one()); }
  /// Monic polynomial of degree d whose lower coefficients are the base-q digits of code.
  static UniPoly from_code(const Field& f, unsigned d, std::uint64_t code);

  const Field& field() const noexcept { return field_; }
  const std::vector<FqElem>& coeffs() const noexcept { return c_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0].v == 1; }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back().v == 1; }
  FqElem lead() const noexcept { return c_.empty() ? FqElem{} : c_.back(); }
  FqElem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : FqElem{}; }
  /// Inverse of from_code for monic polynomials.
  std::uint64_t code() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& b);
  UniPoly& operator-=(const UniPoly& b);
  UniPoly& operator*=(const UniPoly& b) { return *this = *this * b; }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly scale(FqElem c) const;
  UniPoly shift(std::size_t n) const;  // times theta^n
  UniPoly pow(std::uint64_t e) const;
  UniPoly monic() const;

  /// Euclidean division; throws DivisionByZero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }
  /// Throws InexactDivision when b does not divide a.
  UniPoly div_exact(const UniPoly& b) const;
  bool divides(const UniPoly& a) const { return (a % *this).is_zero(); }

  FqElem eval(FqElem x) const noexcept;
  /// a(theta^k).
  UniPoly inflate(std::uint64_t k) const;
  /// tau^i(a) = a(theta)^{q^i} = a(theta^{q^i}).
  UniPoly tau(unsigned i = 1) const;
  /// Composition a(b).
  UniPoly compose(const UniPoly& b) const;

  std::string to_string(const std::string& var = "theta") const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) noexcept { return a.c_ == b.c_; }
  /// Degree first, then ascending coefficient tuple.
  friend bool operator<(const UniPoly& a, const UniPoly& b) noexcept;

 private:
  void trim() noexcept {
    while (!c_.empty() && c_.back().v == 0) c_.pop_back();
  }
  Field field_;
  std::vector<FqElem> c_;
};

/// Monic gcd (zero when both are zero).
UniPoly gcd(UniPoly a, UniPoly b);
/// Monic lcm.
UniPoly lcm(const UniPoly& a, const UniPoly& b);
/// (g, s, t) with s*a + t*b = g monic.
struct ExtGcd {
  UniPoly g, s, t;
};
ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b);
/// base^e mod m for arbitrary-size exponents given as a product of factors.
UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& m);
/// base^(q^k) mod m.
UniPoly frobmod(const UniPoly& base, unsigned k, const UniPoly& m);

bool is_irreducible(const UniPoly& a);
/// Number of monic irreducibles of degree d over F_q.
std::uint64_t necklace_count(std::uint64_t q, unsigned d);
/// All monic polynomials of degree d, ordered by code.
std::vector<UniPoly> monics(const Field& f, unsigned d);
/// Monic irreducibles of degree d, sorted by ascending coefficient tuple.
std::vector<UniPoly> irreducibles(const Field& f, unsigned d);

struct Factor {
  UniPoly prime;
  unsigned mult;
};
/// Monic irreducible factors with multiplicities, ascending; throws ZeroPolynomial.
std::vector<Factor> poly_factor(const UniPoly& a);

std::uint64_t ipow(std::uint64_t b, unsigned e);

}  // namespace ffl

#pragma once

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ffl/unipoly.hpp"

namespace ffl {

using Exps = boost::container::small_vector<std::uint32_t, 6>;

/// Ordered list of variable names shared by polynomials that interoperate.
class Vars {
 public:
  Vars() : names_(std::make_shared<const std::vector<std::string>>()) {}
  Vars(std::vector<std::string> names);  // NOLINT
  Vars(std::initializer_list<std::string> names) : Vars(std::vector<std::string>(names)) {}

  std::size_t size() const noexcept { return names_->size(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const noexcept { return *names_; }
  /// Throws UnknownVariable.
  std::size_t index(const std::string& name) const;
  bool contains(const std::string& name) const;
  Vars with(const std::string& name) const;

  friend bool operator==(const Vars& a, const Vars& b) noexcept {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Sparse polynomial over F_q; terms kept sorted by exponent tuple (lex), no zeros.
class MultiPoly {
 public:
  struct Term {
    Exps e;
    FqElem c;
  };

  MultiPoly() = default;
  MultiPoly(Field f, Vars vars) : field_(std::move(f)), vars_(std::move(vars)) {}

  static MultiPoly constant(const Field& f, const Vars& v, FqElem c);
  static MultiPoly constant(const Field& f, const Vars& v, long long c) { return constant(f, v, f.from_int(c)); }
  static MultiPoly var(const Field& f, const Vars& v, const std::string& name, std::uint32_t power = 1);
  static MultiPoly monomial(const Field& f, const Vars& v, Exps e, FqElem c);
  /// a(target^power): theta replaced by a power of a variable.
  static MultiPoly substitute(const UniPoly& a, const Vars& v, const std::string& target,
                              std::uint32_t power = 1);
  /// Builds from unsorted terms, combining duplicates.
  static MultiPoly from_terms(const Field& f, const Vars& v, std::vector<Term> terms);

  const Field& field() const noexcept { return field_; }
  const Vars& vars() const noexcept { return vars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  FqElem constant_term() const;
  FqElem coeff(const Exps& e) const;
  /// Highest exponent of the variable (-1 for zero).
  long degree(std::size_t var) const;
  long degree(const std::string& name) const { return degree(vars_.index(name)); }
  bool uses(std::size_t var) const { return degree(var) > 0; }

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }
  MultiPoly scale(FqElem c) const;
  MultiPoly pow(std::uint64_t e) const;
  /// Throws InexactDivision.
  MultiPoly div_exact(const MultiPoly& b) const;

  /// value substituted for a variable (value shares the variable list).
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
  MultiPoly evaluate(std::size_t var, FqElem value) const;
  /// var -> var^k on every term.
  MultiPoly inflate(std::size_t var, std::uint64_t k) const;
  /// Reduce the given variable modulo a monic univariate polynomial in that variable.
  MultiPoly reduce_mod(std::size_t var, const UniPoly& f) const;
  /// Re-express in another variable list; variables absent from the target must not occur.
  MultiPoly to_vars(const Vars& target) const;
  /// Coefficients with respect to one variable, each still over the full list.
  std::map<std::uint32_t, MultiPoly> coefficients(std::size_t var) const;
  /// When only var occurs.
  UniPoly to_unipoly(std::size_t var) const;

  std::string to_string() const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  void check_compatible(const MultiPoly& b) const;
  Field field_;
  Vars vars_;
  std::vector<Term> terms_;
};

}  // namespace ffl

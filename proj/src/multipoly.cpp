#include "ffl/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "ffl/error.hpp"

namespace ffl {
namespace {

bool exps_less(const Exps& a, const Exps& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

using Term = MultiPoly::Term;

// Sort and combine equal exponent tuples, dropping zeros.
std::vector<Term> normalize(const Field& F, std::vector<Term> t) {
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return exps_less(a.e, b.e); });
  std::vector<Term> out;
  out.reserve(t.size());
  for (auto& x : t) {
    if (!out.empty() && out.back().e == x.e) {
      out.back().c = F.add(out.back().c, x.c);
      if (out.back().c.v == 0) out.pop_back();
    } else if (x.c.v != 0) {
      out.push_back(std::move(x));
    }
  }
  return out;
}

}  // namespace

Vars::Vars(std::vector<std::string> names) : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

std::size_t Vars::index(const std::string& name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  throw Error(ErrorKind::UnknownVariable, "unknown variable '" + name + "'");
}

bool Vars::contains(const std::string& name) const {
  return std::find(names_->begin(), names_->end(), name) != names_->end();
}

Vars Vars::with(const std::string& name) const {
  if (contains(name)) return *this;
  auto v = *names_;
  v.push_back(name);
  return Vars(std::move(v));
}

MultiPoly MultiPoly::constant(const Field& f, const Vars& v, FqElem c) {
  MultiPoly r(f, v);
  if (c.v != 0) r.terms_.push_back({Exps(v.size(), 0), c});
  return r;
}

MultiPoly MultiPoly::var(const Field& f, const Vars& v, const std::string& name, std::uint32_t power) {
  Exps e(v.size(), 0);
  e[v.index(name)] = power;
  return monomial(f, v, std::move(e), f.one());
}

MultiPoly MultiPoly::monomial(const Field& f, const Vars& v, Exps e, FqElem c) {
  MultiPoly r(f, v);
  if (e.size() != v.size()) throw Error(ErrorKind::InvalidArgument, "exponent tuple length mismatch");
  if (c.v != 0) r.terms_.push_back({std::move(e), c});
  return r;
}

MultiPoly MultiPoly::substitute(const UniPoly& a, const Vars& v, const std::string& target, std::uint32_t power) {
  const std::size_t idx = v.index(target);
  MultiPoly r(a.field(), v);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].v == 0) continue;
    Exps e(v.size(), 0);
    e[idx] = static_cast<std::uint32_t>(i * power);
    r.terms_.push_back({std::move(e), a.coeffs()[i]});
  }
  if (power == 0) r.terms_ = normalize(r.field_, std::move(r.terms_));
  return r;
}

MultiPoly MultiPoly::from_terms(const Field& f, const Vars& v, std::vector<Term> terms) {
  MultiPoly r(f, v);
  for (const auto& t : terms)
    if (t.e.size() != v.size()) throw Error(ErrorKind::InvalidArgument, "exponent tuple length mismatch");
  r.terms_ = normalize(f, std::move(terms));
  return r;
}

bool MultiPoly::is_constant() const noexcept {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto x : terms_[0].e)
    if (x) return false;
  return true;
}

FqElem MultiPoly::constant_term() const { return coeff(Exps(vars_.size(), 0)); }

FqElem MultiPoly::coeff(const Exps& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exps& x) { return exps_less(t.e, x); });
  if (it != terms_.end() && it->e == e) return it->c;
  return {};
}

long MultiPoly::degree(std::size_t var) const {
  if (terms_.empty()) return -1;
  long d = 0;
  for (const auto& t : terms_) d = std::max<long>(d, t.e[var]);
  return d;
}

void MultiPoly::check_compatible(const MultiPoly& b) const {
  if (!(vars_ == b.vars_) || !(field_ == b.field_))
    throw Error(ErrorKind::IncompatibleContexts, "polynomials over different contexts");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.c = field_.neg(t.c);
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() && a.vars_.size() == 0 && !a.field_.valid()) return b;
  a.check_compatible(b);
  MultiPoly r(a.field_, a.vars_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && exps_less(a.terms_[i].e, b.terms_[j].e))) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || exps_less(b.terms_[j].e, a.terms_[i].e)) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      FqElem c = a.field_.add(a.terms_[i].c, b.terms_[j].c);
      if (c.v != 0) r.terms_.push_back({a.terms_[i].e, c});
      ++i;
      ++j;
    }
  }
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly r(a.field_, a.vars_);
  if (a.is_zero() || b.is_zero()) return r;
  std::vector<Term> t;
  t.reserve(a.terms_.size() * b.terms_.size());
  const std::size_t n = a.vars_.size();
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      Exps e(n);
      for (std::size_t k = 0; k < n; ++k) e[k] = x.e[k] + y.e[k];
      t.push_back({std::move(e), a.field_.mul(x.c, y.c)});
    }
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    // Monomial times polynomial preserves order.
    r.terms_ = std::move(t);
    return r;
  }
  r.terms_ = normalize(a.field_, std::move(t));
  return r;
}

MultiPoly MultiPoly::scale(FqElem c) const {
  MultiPoly r(field_, vars_);
  if (c.v == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.c = field_.mul(t.c, c);
  return r;
}

MultiPoly MultiPoly::pow(std::uint64_t e) const {
  MultiPoly r = constant(field_, vars_, field_.one()), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

MultiPoly MultiPoly::div_exact(const MultiPoly& b) const {
  check_compatible(b);
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "multivariate division by zero");
  const Term& lb = b.terms_.back();
  const FqElem lbi = field_.inv(lb.c);
  MultiPoly q(field_, vars_), rem = *this;
  std::vector<Term> qt;
  while (!rem.is_zero()) {
    const Term& lr = rem.terms_.back();
    Exps e(vars_.size());
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (lr.e[k] < lb.e[k]) throw Error(ErrorKind::InexactDivision, "multivariate division is not exact");
      e[k] = lr.e[k] - lb.e[k];
    }
    MultiPoly m = monomial(field_, vars_, e, field_.mul(lr.c, lbi));
    qt.push_back(m.terms_[0]);
    rem -= m * b;
  }
  q.terms_ = normalize(field_, std::move(qt));
  return q;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
  check_compatible(value);
  MultiPoly r(field_, vars_);
  std::map<std::uint32_t, MultiPoly> powers;
  std::vector<Term> rest;
  for (const auto& [k, coef] : coefficients(var)) {
    auto it = powers.find(k);
    if (it == powers.end()) it = powers.emplace(k, value.pow(k)).first;
    r += coef * it->second;
  }
  return r;
}

MultiPoly MultiPoly::evaluate(std::size_t var, FqElem value) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) {
    Term y = x;
    y.c = field_.mul(x.c, field_.pow(value, x.e[var]));
    y.e[var] = 0;
    t.push_back(std::move(y));
  }
  return from_terms(field_, vars_, std::move(t));
}

MultiPoly MultiPoly::inflate(std::size_t var, std::uint64_t k) const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.e[var] = static_cast<std::uint32_t>(t.e[var] * k);
  if (k == 0) r.terms_ = normalize(field_, std::move(r.terms_));
  return r;
}

MultiPoly MultiPoly::reduce_mod(std::size_t var, const UniPoly& f) const {
  if (!f.is_monic()) throw Error(ErrorKind::NotMonic, "reduce_mod needs a monic modulus");
  const std::uint32_t d = static_cast<std::uint32_t>(f.degree());
  bool needed = false;
  for (const auto& t : terms_) needed |= t.e[var] >= d;
  if (!needed) return *this;
  std::map<std::uint32_t, UniPoly> rems;
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.e[var] < d) {
      out.push_back(t);
      continue;
    }
    auto it = rems.find(t.e[var]);
    if (it == rems.end()) it = rems.emplace(t.e[var], powmod(UniPoly::theta(field_), t.e[var], f)).first;
    const auto& rc = it->second.coeffs();
    for (std::size_t i = 0; i < rc.size(); ++i) {
      if (rc[i].v == 0) continue;
      Term y = t;
      y.e[var] = static_cast<std::uint32_t>(i);
      y.c = field_.mul(t.c, rc[i]);
      out.push_back(std::move(y));
    }
  }
  return from_terms(field_, vars_, std::move(out));
}

MultiPoly MultiPoly::to_vars(const Vars& target) const {
  std::vector<long> map(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (target.contains(vars_[i])) map[i] = static_cast<long>(target.index(vars_[i]));
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exps e(target.size(), 0);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (t.e[i] == 0) continue;
      if (map[i] < 0) throw Error(ErrorKind::UnknownVariable, "variable '" + vars_[i] + "' missing in target");
      e[static_cast<std::size_t>(map[i])] = t.e[i];
    }
    out.push_back({std::move(e), t.c});
  }
  return from_terms(field_, target, std::move(out));
}

std::map<std::uint32_t, MultiPoly> MultiPoly::coefficients(std::size_t var) const {
  std::map<std::uint32_t, std::vector<Term>> buckets;
  for (const auto& t : terms_) {
    Term y = t;
    y.e[var] = 0;
    buckets[t.e[var]].push_back(std::move(y));
  }
  std::map<std::uint32_t, MultiPoly> out;
  for (auto& [k, v] : buckets) out.emplace(k, from_terms(field_, vars_, std::move(v)));
  return out;
}

UniPoly MultiPoly::to_unipoly(std::size_t var) const {
  std::vector<FqElem> c;
  for (const auto& t : terms_) {
    for (std::size_t k = 0; k < t.e.size(); ++k)
      if (k != var && t.e[k] != 0)
        throw Error(ErrorKind::InvalidArgument, "polynomial involves more than one variable");
    if (c.size() <= t.e[var]) c.resize(t.e[var] + 1);
    c[t.e[var]] = t.c;
  }
  return UniPoly(field_, std::move(c));
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = terms_.size(); i-- > 0;) {
    const auto& t = terms_[i];
    if (i + 1 != terms_.size()) os << " + ";
    std::string cs;
    if (field_.is_prime_field()) {
      cs = std::to_string(t.c.v);
    } else {
      auto d = field_.digits(t.c);
      cs = "[";
      for (std::size_t j = 0; j < d.size(); ++j) cs += (j ? "," : "") + std::to_string(d[j]);
      cs += "]";
    }
    bool any = false;
    std::string mono;
    for (std::size_t k = 0; k < t.e.size(); ++k) {
      if (!t.e[k]) continue;
      if (any) mono += "*";
      any = true;
      mono += vars_[k];
      if (t.e[k] > 1) mono += "^" + std::to_string(t.e[k]);
    }
    if (!any)
      os << cs;
    else if (t.c.v == 1)
      os << mono;
    else
      os << cs << "*" << mono;
  }
  return os.str();
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!a.terms_.empty() && !(a.vars_ == b.vars_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].e != b.terms_[i].e || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

}  // namespace ffl

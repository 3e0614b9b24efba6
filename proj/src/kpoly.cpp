#include "ffl/kpoly.hpp"

#include "ffl/error.hpp"

namespace ffl {

KPoly KPoly::constant(const Field& f, const Vars& v, const RatFunc& c) {
  KPoly r(f, v);
  r.add_term(Exps(v.size(), 0), c);
  return r;
}

KPoly KPoly::from_multi(const MultiPoly& P, const std::string& theta, const Vars& v) {
  const Field& F = P.field();
  KPoly r(F, v);
  const Vars& pv = P.vars();
  const bool has_theta = pv.contains(theta);
  const std::size_t ti = has_theta ? pv.index(theta) : 0;
  std::vector<long> map(pv.size(), -1);
  for (std::size_t i = 0; i < pv.size(); ++i)
    if (!(has_theta && i == ti)) map[i] = static_cast<long>(v.index(pv[i]));
  std::map<Exps, std::vector<FqElem>> acc;
  for (const auto& t : P.terms()) {
    Exps e(v.size(), 0);
    for (std::size_t i = 0; i < pv.size(); ++i)
      if (map[i] >= 0) e[static_cast<std::size_t>(map[i])] = t.e[i];
    auto& c = acc[e];
    const std::size_t deg = has_theta ? t.e[ti] : 0;
    if (c.size() <= deg) c.resize(deg + 1);
    c[deg] = F.add(c[deg], t.c);
  }
  for (auto& [e, c] : acc) r.add_term(e, RatFunc(UniPoly(F, std::move(c))));
  return r;
}

RatFunc KPoly::coeff(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? RatFunc(field_) : it->second;
}

void KPoly::add_term(const Exps& e, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

KPoly operator+(const KPoly& a, const KPoly& b) {
  KPoly r = a;
  r += b;
  return r;
}

KPoly& KPoly::operator+=(const KPoly& b) {
  if (!field_.valid()) {
    field_ = b.field_;
    vars_ = b.vars_;
  }
  if (!(vars_ == b.vars_)) throw Error(ErrorKind::IncompatibleContexts, "KPoly over different variables");
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

KPoly KPoly::operator-() const {
  KPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

KPoly operator-(const KPoly& a, const KPoly& b) { return a + (-b); }

KPoly operator*(const KPoly& a, const KPoly& b) {
  if (!(a.vars_ == b.vars_)) throw Error(ErrorKind::IncompatibleContexts, "KPoly over different variables");
  KPoly r(a.field_, a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exps e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  return r;
}

KPoly KPoly::scale(const RatFunc& c) const {
  KPoly r(field_, vars_);
  if (c.is_zero()) return r;
  for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
  return r;
}

KPoly KPoly::tau(unsigned i) const {
  KPoly r(field_, vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.tau(i));
  return r;
}

KPoly KPoly::frobenius_power(unsigned i) const {
  const std::uint64_t k = ipow(field_.q(), i);
  KPoly r(field_, vars_);
  for (const auto& [e, c] : terms_) {
    Exps f = e;
    for (auto& x : f) x = static_cast<std::uint32_t>(x * k);
    r.terms_.emplace(std::move(f), c.tau(i));
  }
  return r;
}

UniPoly KPoly::denominator() const {
  UniPoly L = UniPoly::one(field_);
  for (const auto& [e, c] : terms_)
    if (!c.is_polynomial()) L = lcm(L, c.den());
  return L;
}

bool KPoly::is_integral() const {
  for (const auto& [e, c] : terms_)
    if (!c.is_polynomial()) return false;
  return true;
}

std::optional<MultiPoly> KPoly::to_multi(const std::string& theta) const {
  if (!is_integral()) return std::nullopt;
  std::vector<std::string> names{theta};
  for (const auto& n : vars_.names()) names.push_back(n);
  Vars v(std::move(names));
  std::vector<MultiPoly::Term> t;
  for (const auto& [e, c] : terms_) {
    const auto& cf = c.num().coeffs();
    for (std::size_t i = 0; i < cf.size(); ++i) {
      if (cf[i].v == 0) continue;
      Exps x(v.size(), 0);
      x[0] = static_cast<std::uint32_t>(i);
      for (std::size_t k = 0; k < e.size(); ++k) x[k + 1] = e[k];
      t.push_back({std::move(x), cf[i]});
    }
  }
  return MultiPoly::from_terms(field_, v, std::move(t));
}

std::string KPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += "(" + it->second.to_string() + ")";
    for (std::size_t k = 0; k < it->first.size(); ++k) {
      if (!it->first[k]) continue;
      s += "*" + vars_[k];
      if (it->first[k] > 1) s += "^" + std::to_string(it->first[k]);
    }
  }
  return s;
}

}  // namespace ffl

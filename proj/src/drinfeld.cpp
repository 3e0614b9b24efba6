#include "ffl/drinfeld.hpp"

#include <map>
#include <regex>

#include "ffl/error.hpp"

namespace ffl {

DrinfeldModule DrinfeldModule::make(const Field& f, std::vector<UniPoly> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.empty()) throw Error(ErrorKind::ZeroTail, "Drinfeld module needs a nonzero coefficient of positive tau-degree");
  DrinfeldModule m;
  m.field_ = f;
  m.c_.push_back(UniPoly::theta(f));
  for (auto& c : coeffs) {
    if (!(c.field() == f) && c.field().valid())
      throw Error(ErrorKind::IncompatibleContexts, "coefficient over a different field");
    m.beta_ = std::max<unsigned>(m.beta_, static_cast<unsigned>(std::max(c.degree(), 0)));
    m.c_.emplace_back(f, c.coeffs());
  }
  return m;
}

std::string DrinfeldModule::to_string() const {
  std::string s = "[";
  for (std::size_t i = 1; i < c_.size(); ++i) s += (i > 1 ? ", " : "") + c_[i].to_string();
  return s + "]";
}

Deformation Deformation::zpower(unsigned m) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "z^m deformation needs m >= 1");
  return {Kind::ZPower, m};
}

Deformation Deformation::canonical(unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "canonical deformation needs n >= 1");
  return {Kind::Canonical, n};
}

Deformation Deformation::canonical_t(unsigned n) { return {Kind::CanonicalT, n}; }

Deformation Deformation::parse(const std::string& s) {
  std::smatch m;
  if (s == "plain") return plain();
  if (std::regex_match(s, m, std::regex(R"(z\^(\d+))"))) return zpower(static_cast<unsigned>(std::stoul(m[1])));
  if (std::regex_match(s, m, std::regex(R"(canonical\((\d+)\))"))) return canonical(static_cast<unsigned>(std::stoul(m[1])));
  if (std::regex_match(s, m, std::regex(R"(canonical-t\((\d+)\))")))
    return canonical_t(static_cast<unsigned>(std::stoul(m[1])));
  throw Error(ErrorKind::ParseError, "unknown deformation '" + s + "'");
}

std::string Deformation::to_string() const {
  switch (kind) {
    case Kind::Plain: return "plain";
    case Kind::ZPower: return "z^" + std::to_string(param);
    case Kind::Canonical: return "canonical(" + std::to_string(param) + ")";
    case Kind::CanonicalT: return "canonical-t(" + std::to_string(param) + ")";
  }
  return "";
}

std::vector<std::string> z_names(unsigned n, const std::string& prefix) {
  std::vector<std::string> v;
  for (unsigned i = 1; i <= n; ++i) v.push_back(prefix + std::to_string(i));
  return v;
}

std::vector<std::string> Deformation::zvars() const {
  switch (kind) {
    case Kind::Plain: return {};
    case Kind::ZPower: return {"z"};
    default: return z_names(param);
  }
}

Vars Deformation::vars() const {
  std::vector<std::string> v{"theta"};
  for (auto& z : zvars()) v.push_back(z);
  if (kind == Kind::CanonicalT) v.push_back("t");
  return Vars(std::move(v));
}

MultiPoly deformed_coeff(const DrinfeldModule& phi, unsigned i, const Deformation& d) {
  const Field& F = phi.field();
  const Vars v = d.vars();
  MultiPoly c = MultiPoly::substitute(phi.coeff(i), v, "theta");
  if (i == 0 || c.is_zero()) return c;
  switch (d.kind) {
    case Deformation::Kind::Plain: return c;
    case Deformation::Kind::ZPower: return c * MultiPoly::var(F, v, "z", d.param * i);
    case Deformation::Kind::Canonical: return c * ell_product(F, i, d.zvars(), v);
    case Deformation::Kind::CanonicalT: return c * ell_product(F, i, d.zvars(), v) * MultiPoly::var(F, v, "t", i);
  }
  return c;
}

SkewPoly<MultiPoly> phi_theta(const DrinfeldModule& phi, const Deformation& d) {
  std::vector<MultiPoly> c;
  for (unsigned i = 0; i <= phi.rank(); ++i) c.push_back(deformed_coeff(phi, i, d));
  return skew_over_multi(phi.field(), d.vars(), "theta", std::move(c));
}

namespace {

SkewPoly<MultiPoly> horner(const SkewPoly<MultiPoly>& t, const UniPoly& a, const Vars& v) {
  const Field& F = a.field();
  auto cst = [&](FqElem c) { return t.with_coeffs({MultiPoly::constant(F, v, c)}); };
  if (a.is_zero()) return t.with_coeffs({});
  SkewPoly<MultiPoly> r = cst(a.lead());
  for (int j = a.degree() - 1; j >= 0; --j) r = r * t + cst(a.coeff(static_cast<std::size_t>(j)));
  return r;
}

}  // namespace

SkewPoly<MultiPoly> phi_of_a(const DrinfeldModule& phi, const UniPoly& a, const Deformation& d) {
  return horner(phi_theta(phi, d), a, d.vars());
}

SkewPoly<MultiPoly> phi_of_a_mod(const DrinfeldModule& phi, const UniPoly& a, const Deformation& d,
                                 const UniPoly& f) {
  std::vector<MultiPoly> c;
  for (unsigned i = 0; i <= phi.rank(); ++i) c.push_back(deformed_coeff(phi, i, d));
  auto t = skew_over_multi_mod(phi.field(), d.vars(), f, "theta", std::move(c));
  return horner(t, a, d.vars());
}

ExpLogTable exp_coeffs(const DrinfeldModule& phi, unsigned N) {
  const Field& F = phi.field();
  ExpLogTable t;
  t.kind = ExpLogTable::Kind::Exp;
  t.entries.push_back(RatFunc::one(F));
  const UniPoly th = UniPoly::theta(F);
  for (unsigned k = 1; k <= N; ++k) {
    RatFunc s(F);
    for (unsigned i = 1; i <= std::min(phi.rank(), k); ++i)
      if (!phi.coeff(i).is_zero()) s += RatFunc(phi.coeff(i)) * t.entries[k - i].tau(i);
    t.entries.push_back(s / RatFunc(th.tau(k) - th));
  }
  // exp * theta == phi_theta * exp mod tau^{N+1}
  auto K = skew_over_K(F);
  auto e = K.with_coeffs(t.entries);
  std::vector<RatFunc> pc;
  for (auto& c : phi.coeffs()) pc.emplace_back(c);
  auto lhs = e.mul(K.with_coeffs({RatFunc(th)}), static_cast<int>(N));
  auto rhs = K.with_coeffs(pc).mul(e, static_cast<int>(N));
  t.certified = lhs == rhs;
  return t;
}

ExpLogTable log_coeffs(const DrinfeldModule& phi, unsigned N) {
  const Field& F = phi.field();
  ExpLogTable t;
  t.kind = ExpLogTable::Kind::Log;
  t.entries.push_back(RatFunc::one(F));
  const UniPoly th = UniPoly::theta(F);
  for (unsigned k = 1; k <= N; ++k) {
    RatFunc s(F);
    for (unsigned i = 1; i <= std::min(phi.rank(), k); ++i)
      if (!phi.coeff(i).is_zero()) s += t.entries[k - i] * RatFunc(phi.coeff(i).tau(k - i));
    t.entries.push_back(s / RatFunc(th - th.tau(k)));
  }
  auto K = skew_over_K(F);
  auto l = K.with_coeffs(t.entries);
  std::vector<RatFunc> pc;
  for (auto& c : phi.coeffs()) pc.emplace_back(c);
  auto lhs = l.mul(K.with_coeffs(pc), static_cast<int>(N));
  auto rhs = K.with_coeffs({RatFunc(th)}).mul(l, static_cast<int>(N));
  t.certified = lhs == rhs;
  if (t.certified) t.certified = exp_log_compose_to_identity(exp_coeffs(phi, N), t);
  return t;
}

bool exp_log_compose_to_identity(const ExpLogTable& e, const ExpLogTable& l) {
  const Field& F = e.entries.at(0).field();
  const int N = static_cast<int>(std::min(e.entries.size(), l.entries.size())) - 1;
  auto K = skew_over_K(F);
  std::vector<RatFunc> ec(e.entries.begin(), e.entries.begin() + N + 1);
  std::vector<RatFunc> lc(l.entries.begin(), l.entries.begin() + N + 1);
  return K.with_coeffs(ec).mul(K.with_coeffs(lc), N) == K.with_coeffs({RatFunc::one(F)});
}

MultiPoly ell_product(const Field& f, unsigned i, const std::vector<std::string>& zvars, const Vars& vars) {
  MultiPoly r = MultiPoly::constant(f, vars, f.one());
  for (const auto& z : zvars) {
    const MultiPoly zv = MultiPoly::var(f, vars, z);
    for (unsigned j = 0; j < i; ++j)
      r *= zv - MultiPoly::var(f, vars, "theta", static_cast<std::uint32_t>(ipow(f.q(), j)));
  }
  return r;
}

std::vector<UniPoly> carlitz_skew(const Field& f, const UniPoly& a) {
  auto R = skew_over_A(f);
  auto C = R.with_coeffs({UniPoly::theta(f), UniPoly::one(f)});
  if (a.is_zero()) return {};
  auto r = R.with_coeffs({UniPoly::constant(f, a.lead())});
  for (int j = a.degree() - 1; j >= 0; --j)
    r = r * C + R.with_coeffs({UniPoly::constant(f, a.coeff(static_cast<std::size_t>(j)))});
  return r.coeffs();
}

MultiPoly carlitz_action(const Field& f, const UniPoly& a, const std::string& X, const Vars& vars) {
  MultiPoly r(f, vars);
  const auto d = carlitz_skew(f, a);
  for (std::size_t i = 0; i < d.size(); ++i)
    r += MultiPoly::substitute(d[i], vars, "theta") * MultiPoly::var(f, vars, X, static_cast<std::uint32_t>(ipow(f.q(), static_cast<unsigned>(i))));
  return r;
}

MultiPoly carlitz_substitute(const MultiPoly& P, const std::vector<std::string>& zvars,
                             const std::vector<std::string>& xvars, const Vars& out) {
  if (zvars.size() != xvars.size()) throw Error(ErrorKind::InvalidArgument, "z and X variable lists differ in length");
  const Field& F = P.field();
  const Vars& pv = P.vars();
  std::vector<long> zi(pv.size(), -1);
  for (std::size_t j = 0; j < zvars.size(); ++j)
    if (pv.contains(zvars[j])) zi[pv.index(zvars[j])] = static_cast<long>(j);
  std::map<std::pair<std::size_t, std::uint32_t>, MultiPoly> cache;
  auto action = [&](std::size_t j, std::uint32_t e) -> const MultiPoly& {
    auto key = std::make_pair(j, e);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, carlitz_action(F, UniPoly::monomial(F, e, F.one()), xvars[j], out)).first;
    return it->second;
  };
  std::vector<MultiPoly::Term> rest;
  MultiPoly r(F, out);
  for (const auto& t : P.terms()) {
    Exps e(out.size(), 0);
    MultiPoly m = MultiPoly::constant(F, out, t.c);
    std::vector<std::uint32_t> ze(zvars.size(), 0);
    for (std::size_t i = 0; i < pv.size(); ++i) {
      if (t.e[i] == 0) continue;
      if (zi[i] >= 0)
        ze[static_cast<std::size_t>(zi[i])] = t.e[i];
      else
        e[out.index(pv[i])] = t.e[i];
    }
    // Every X_j gets a factor, C_1(X_j) = X_j for absent z_j.
    for (std::size_t j = 0; j < zvars.size(); ++j) m = m * action(j, ze[j]);
    r += m * MultiPoly::monomial(F, out, e, F.one());
  }
  return r;
}

KPoly carlitz_substitute(const KPoly& P, const Vars& xvars) {
  const Field& F = P.field();
  const Vars& zv = P.vars();
  if (zv.size() != xvars.size()) throw Error(ErrorKind::InvalidArgument, "z and X variable lists differ in length");
  std::vector<std::string> names{"theta"};
  for (const auto& x : xvars.names()) names.push_back(x);
  const Vars tv(names);
  std::map<std::pair<std::size_t, std::uint32_t>, MultiPoly> cache;
  KPoly r(F, xvars);
  for (const auto& [e, c] : P.terms()) {
    MultiPoly m = MultiPoly::constant(F, tv, F.one());
    for (std::size_t j = 0; j < e.size(); ++j) {
      auto key = std::make_pair(j, e[j]);
      auto it = cache.find(key);
      if (it == cache.end())
        it = cache.emplace(key, carlitz_action(F, UniPoly::monomial(F, e[j], F.one()), xvars[j], tv)).first;
      m *= it->second;
    }
    r += KPoly::from_multi(m, "theta", xvars).scale(c);
  }
  return r;
}

LogRadius log_radius(const DrinfeldModule& phi, unsigned n) {
  const std::uint64_t q = phi.field().q();
  LogRadius out;
  bool found = false;
  Rational best;
  for (unsigned s = 1; s <= phi.rank(); ++s) {
    if (phi.coeff(s).is_zero()) continue;
    const BigInt qs = BigInt(ipow(q, s));
    Rational v(BigInt(phi.coeff(s).degree()) - qs, qs - 1);
    if (!found || v > best) {
      best = v;
      out.index = s;
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::ZeroTail, "all tau-coefficients vanish");
  const unsigned i = out.index;
  const BigInt qi = BigInt(ipow(q, i));
  BigInt geo = 0;
  for (unsigned j = 0; j < i; ++j) geo += BigInt(ipow(q, j));
  const BigInt num = qi - BigInt(phi.coeff(i).degree()) - BigInt(n) * geo;
  out.exponent = Rational(num, qi - 1);
  out.strict_inequality = BigInt(phi.coeff(i).degree()) + BigInt(n) * geo < qi;
  return out;
}

}  // namespace ffl

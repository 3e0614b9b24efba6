#include "ffl/identities.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "ffl/error.hpp"

namespace ffl {
namespace {

Json module_params(const DrinfeldModule& phi, unsigned n) {
  Json p = Json::object();
  p["p"] = phi.field().p();
  p["l"] = phi.field().l();
  p["phi"] = phi.to_string();
  p["n"] = n;
  return p;
}

void require_table(const MuTable& mu, unsigned k) {
  if (k > mu.max_degree())
    throw Error(ErrorKind::TableTooSmall, "need mu up to degree " + std::to_string(k) + ", table has " +
                                              std::to_string(mu.max_degree()));
}

/// lcm of all monic polynomials of degree j: prod_P P^{floor(j / deg P)}.
UniPoly degree_lcm(const Field& F, unsigned j) {
  UniPoly L = UniPoly::one(F);
  for (unsigned e = 1; e <= j; ++e)
    for (const auto& P : irreducibles(F, e)) L *= P.pow(j / e);
  return L;
}

Vars theta_and(const std::vector<std::string>& names) {
  std::vector<std::string> v{"theta"};
  v.insert(v.end(), names.begin(), names.end());
  return Vars(v);
}

/// sum_a mu(a) (L/a) prod_j g_a(e_j) over tuples e in [0, k]^n, where g_a(i) in A is
/// the coefficient of the i-th basis monomial (a_i for z, d_i for C_a(X)).
std::map<Exps, UniPoly> weighted_sum(const MuTable& mu, unsigned k, unsigned n, const UniPoly& L,
                                     const std::function<std::vector<UniPoly>(const UniPoly&)>& basis) {
  const Field& F = mu.phi().field();
  const auto& vals = mu.degree(k);
  std::map<Exps, UniPoly> acc;
  for (std::uint64_t code = 0; code < vals.size(); ++code) {
    const UniPoly& m = vals[code];
    if (m.is_zero()) continue;
    const UniPoly a = UniPoly::from_code(F, k, code);
    const UniPoly w = m * L.div_exact(a);
    const auto g = basis(a);
    // Depth-first over the tuple, multiplying nonzero basis coefficients.
    Exps e(n, 0);
    std::function<void(unsigned, const UniPoly&)> rec = [&](unsigned j, const UniPoly& c) {
      if (j == n) {
        auto it = acc.find(e);
        if (it == acc.end()) acc.emplace(e, c);
        else it->second += c;
        return;
      }
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i].is_zero()) continue;
        e[j] = static_cast<std::uint32_t>(i);
        rec(j + 1, c * g[i]);
      }
      e[j] = 0;
    };
    rec(0, w);
  }
  return acc;
}

/// Sum with common denominator L, as a KPoly over `vars`; e maps through `expo`.
KPoly to_kpoly(const Field& F, const Vars& vars, const std::map<Exps, UniPoly>& acc, const UniPoly& L,
               const std::function<std::uint32_t(std::uint32_t)>& expo) {
  KPoly r(F, vars);
  for (const auto& [e, c] : acc) {
    if (c.is_zero()) continue;
    Exps x(e.size());
    for (std::size_t j = 0; j < e.size(); ++j) x[j] = expo(e[j]);
    r.add_term(x, RatFunc(c, L));
  }
  return r;
}

std::vector<UniPoly> digits_of(const UniPoly& a) {
  std::vector<UniPoly> g;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(a.degree()); ++i) g.push_back(UniPoly::constant(a.field(), a.coeff(i)));
  return g;
}

/// prod_k l_i(z_k) as a KPoly over zvars.
KPoly ell_kpoly(const Field& F, unsigned i, const Vars& zv) {
  return KPoly::from_multi(ell_product(F, i, zv.names(), theta_and(zv.names())), "theta", zv);
}

/// C_a(x) for x in A.
UniPoly carlitz_eval(const Field& F, const UniPoly& a, const UniPoly& x) {
  UniPoly r(F);
  const auto d = carlitz_skew(F, a);
  for (std::size_t i = 0; i < d.size(); ++i) r += d[i] * x.tau(static_cast<unsigned>(i));
  return r;
}

std::string diff_string(const KPoly& a, const KPoly& b) {
  const std::string s = (a - b).to_string();
  return s.size() > 2000 ? s.substr(0, 2000) + "..." : s;
}

}  // namespace

Json CheckReport::to_json() const {
  Json j = Json::object();
  j["name"] = name;
  j["params"] = params;
  j["verdict"] = pass ? "pass" : "fail";
  j["witness"] = witness;
  return j;
}

std::vector<KPoly> degree_sums(const MuTable& mu, unsigned n, unsigned k_max) {
  require_table(mu, k_max);
  const Field& F = mu.phi().field();
  const Vars zv(z_names(n));
  std::vector<KPoly> c;
  for (unsigned j = 0; j <= k_max; ++j) {
    const UniPoly L = degree_lcm(F, j);
    const auto acc = weighted_sum(mu, j, n, L, digits_of);
    c.push_back(to_kpoly(F, zv, acc, L, [](std::uint32_t e) { return e; }));
  }
  return c;
}

WCoefficients w_coefficients(const MuTable& mu, unsigned n, unsigned k_max) {
  const DrinfeldModule& phi = mu.phi();
  const Field& F = phi.field();
  const Vars zv(z_names(n));
  const auto c = degree_sums(mu, n, k_max);
  const auto alpha = exp_coeffs(phi, k_max).entries;
  WCoefficients out;
  for (unsigned k = 0; k <= k_max; ++k) {
    KPoly W(F, zv);
    for (unsigned i = 0; i <= k; ++i) {
      if (alpha[i].is_zero()) continue;
      W += (ell_kpoly(F, i, zv) * c[k - i].tau(i)).scale(alpha[i]);
    }
    out.integral.push_back(W.is_integral());
    out.W.push_back(std::move(W));
  }
  return out;
}

std::size_t z_term_estimate(const MuTable& mu, unsigned n, unsigned k_max) {
  const Field& F = mu.phi().field();
  long double total = 0;
  for (unsigned k = 0; k <= k_max; ++k) {
    long double degL = 0;
    for (unsigned e = 1; e <= k; ++e) degL += static_cast<long double>(e) * necklace_count(F.q(), e) * (k / e);
    const long double mono = std::pow(static_cast<long double>(k + 1), n);
    total += mono * (degL + n * k * std::pow(static_cast<long double>(F.q()), k) + 1);
  }
  return total > 1e18L ? static_cast<std::size_t>(-1) : static_cast<std::size_t>(total);
}

ZCoefficients z_coefficients(const MuTable& mu, unsigned n, unsigned k_max, const std::vector<std::string>& xvars,
                             std::size_t budget) {
  require_table(mu, k_max);
  if (xvars.size() != n) throw Error(ErrorKind::InvalidArgument, "need one X variable per z variable");
  const std::size_t est = z_term_estimate(mu, n, k_max);
  if (est > budget)
    throw Error(ErrorKind::TermBudgetExceeded, "X-side needs about " + std::to_string(est) + " terms, budget " +
                                                   std::to_string(budget));
  const DrinfeldModule& phi = mu.phi();
  const Field& F = phi.field();
  const Vars xv(xvars);
  const auto alpha = exp_coeffs(phi, k_max).entries;
  ZCoefficients out;
  for (unsigned k = 0; k <= k_max; ++k) {
    const UniPoly L = degree_lcm(F, k);
    const auto acc = weighted_sum(mu, k, n, L, [&](const UniPoly& a) { return carlitz_skew(F, a); });
    out.S.push_back(to_kpoly(F, xv, acc, L, [&](std::uint32_t i) { return static_cast<std::uint32_t>(ipow(F.q(), i)); }));
  }
  for (unsigned k = 0; k <= k_max; ++k) {
    KPoly Z(F, xv);
    for (unsigned i = 0; i <= k; ++i)
      if (!alpha[i].is_zero()) Z += out.S[k - i].frobenius_power(i).scale(alpha[i]);
    out.integral.push_back(Z.is_integral());
    out.Z.push_back(std::move(Z));
  }
  return out;
}

bool degreewise_applies(const DrinfeldModule& phi, unsigned n) {
  return Rational(n) <= Rational(phi.field().q(), phi.rank()) - (1 + 2 * Rational(phi.beta()));
}

CheckReport check_logalg_vanishing(const DrinfeldModule& phi, unsigned n, unsigned slack, std::size_t budget,
                                   const MuTable* table) {
  CheckReport rep;
  rep.name = "logalg";
  rep.params = module_params(phi, n);
  const unsigned bound = static_cast<unsigned>(floor_q(vanishing_bound(phi, n)));
  const unsigned K = bound + slack;
  rep.params["bound"] = bound;
  rep.params["slack"] = slack;
  const MuTable own = table ? MuTable() : mu_table(phi, K);
  const MuTable& mu = table ? *table : own;
  const Field& F = phi.field();
  const auto W = w_coefficients(mu, n, K);
  const auto xn = z_names(n, "X");
  const Vars xv(xn);
  const bool sampled = z_term_estimate(mu, n, K) > budget;
  rep.params["mode"] = sampled ? "sampled" : "exact";
  if (!(W.W[0] == KPoly::constant(F, Vars(z_names(n)), RatFunc::one(F))))
    rep.fail({{"k", 0}, {"property", "W_0 = 1"}, {"difference", W.W[0].to_string()}});
  for (unsigned k = 0; k <= K; ++k) {
    if (!W.integral[k]) rep.fail({{"k", k}, {"property", "W_k integral"}, {"denominator", W.W[k].denominator().to_string()}});
    if (k > bound && !W.W[k].is_zero()) rep.fail({{"k", k}, {"property", "W_k = 0"}, {"difference", W.W[k].to_string()}});
  }
  if (!sampled) {
    const auto Z = z_coefficients(mu, n, K, xn, budget);
    for (unsigned k = 0; k <= K; ++k) {
      if (!Z.integral[k]) rep.fail({{"k", k}, {"property", "Z_k integral"}, {"denominator", Z.Z[k].denominator().to_string()}});
      const KPoly image = carlitz_substitute(W.W[k], xv);
      if (!(image == Z.Z[k]))
        rep.fail({{"k", k}, {"property", "Z_k = carlitz_substitute(W_k)"}, {"difference", diff_string(Z.Z[k], image)}});
      if (k > bound && !Z.Z[k].is_zero()) rep.fail({{"k", k}, {"property", "Z_k = 0"}, {"difference", Z.Z[k].to_string()}});
    }
    return rep;
  }
  // Sampled: compare both sides at X_j = x_j in A of degree <= 1.
  std::mt19937 rng(12345);
  const auto alpha = exp_coeffs(phi, K).entries;
  for (int sample = 0; sample < 3; ++sample) {
    std::vector<UniPoly> x;
    for (unsigned j = 0; j < n; ++j)
      x.push_back(UniPoly(F, {FqElem{static_cast<std::uint32_t>(rng() % F.q())}, FqElem{static_cast<std::uint32_t>(rng() % F.q())}}));
    std::vector<RatFunc> S;
    for (unsigned k = 0; k <= K; ++k) {
      RatFunc s(F);
      for (const auto& a : monics(F, k)) {
        const UniPoly& m = mu(a);
        if (m.is_zero()) continue;
        UniPoly prod = m;
        for (const auto& xj : x) prod *= carlitz_eval(F, a, xj);
        s += RatFunc(prod, a);
      }
      S.push_back(s);
    }
    Json pts = Json::array();
    for (const auto& xj : x) pts.push_back(xj.to_string());
    for (unsigned k = 0; k <= K; ++k) {
      RatFunc z(F);
      for (unsigned i = 0; i <= k; ++i) z += alpha[i] * S[k - i].tau(i);
      RatFunc w(F);
      for (const auto& [e, c] : W.W[k].terms()) {
        UniPoly prod = UniPoly::one(F);
        for (std::size_t j = 0; j < e.size(); ++j) prod *= carlitz_eval(F, UniPoly::monomial(F, e[j], F.one()), x[j]);
        w += c * RatFunc(prod);
      }
      if (!(z == w)) rep.fail({{"k", k}, {"property", "Z_k(x) = carlitz_substitute(W_k)(x)"}, {"x", pts}, {"difference", (z - w).to_string()}});
      if (!z.is_polynomial()) rep.fail({{"k", k}, {"property", "Z_k(x) integral"}, {"x", pts}, {"value", z.to_string()}});
    }
  }
  return rep;
}

CheckReport check_degreewise_identity(const DrinfeldModule& phi, unsigned n, unsigned i_max) {
  if (!degreewise_applies(phi, n))
    throw Error(ErrorKind::NotApplicable, "degreewise identity needs n <= q/r - (1 + 2 beta)");
  CheckReport rep;
  rep.name = "degreewise";
  rep.params = module_params(phi, n);
  rep.params["i_max"] = i_max;
  const Field& F = phi.field();
  const Vars zv(z_names(n));
  const auto c = degree_sums(mu_table(phi, i_max), n, i_max);
  const auto gamma = log_coeffs(phi, i_max).entries;
  for (unsigned i = 0; i <= i_max; ++i) {
    const KPoly rhs = ell_kpoly(F, i, zv).scale(gamma[i]);
    if (!(c[i] == rhs)) rep.fail({{"i", i}, {"difference", diff_string(c[i], rhs)}});
  }
  return rep;
}

CheckReport check_powersum(const Field& F, unsigned i_max, unsigned k_max, const DrinfeldModule* phi) {
  CheckReport rep;
  rep.name = phi ? "powersum-twisted" : "powersum";
  rep.params["p"] = F.p();
  rep.params["l"] = F.l();
  if (phi) {
    rep.params["phi"] = phi->to_string();
    if (Rational(phi->beta()) > Rational(F.q(), 2 * phi->rank()) - 1)
      throw Error(ErrorKind::NotApplicable, "twisted power sums need beta <= q/(2r) - 1");
  }
  rep.params["i_max"] = i_max;
  rep.params["k_max"] = k_max;
  const DrinfeldModule C = DrinfeldModule::carlitz(F);
  const DrinfeldModule& mod = phi ? *phi : C;
  const auto gamma = log_coeffs(mod, i_max).entries;
  const MuTable mu = phi ? mu_table(*phi, i_max) : MuTable();
  const UniPoly th = UniPoly::theta(F);
  for (unsigned i = 0; i <= i_max; ++i) {
    const auto as = monics(F, i);
    for (unsigned k = 0; k <= k_max; ++k) {
      UniPoly brute(F);
      for (const auto& a : as) {
        // a^{q^k - 1} = tau^k(a) / a
        const UniPoly ak = a.tau(k).div_exact(a);
        brute += phi ? mu(a) * ak : ak;
      }
      RatFunc formula = gamma[i];
      for (unsigned j = 0; j < i; ++j) formula *= RatFunc(th.tau(k) - th.tau(j));
      const RatFunc b(brute);
      if (!(b == formula))
        rep.fail({{"i", i}, {"k", k}, {"brute", brute.to_string()}, {"formula", formula.to_string()}});
      if (k < i && !brute.is_zero()) rep.fail({{"i", i}, {"k", k}, {"property", "zero for k < i"}, {"brute", brute.to_string()}});
    }
  }
  return rep;
}

CheckReport check_fitting_consistency(const DrinfeldModule& phi, const UniPoly& f, unsigned n_max) {
  CheckReport rep;
  rep.name = "fitting";
  rep.params = module_params(phi, n_max);
  rep.params["f"] = f.to_string();
  const Field& F = phi.field();
  const FrobeniusData data = frobenius_data(phi, f);
  rep.params["r0"] = data.r0;
  const unsigned d = data.d;
  auto route_fail = [&](const std::string& route, const MultiPoly& got, const MultiPoly& want) {
    rep.fail({{"route", route}, {"got", got.to_string()}, {"expected", want.to_string()}});
  };

  const MultiPoly plain = fitting_ideal(phi, f, Deformation::plain());
  const Deformation z1 = Deformation::zpower(1);
  const MultiPoly zp = fitting_ideal(phi, f, z1);
  const Vars tz = z1.vars();
  const std::size_t zi = tz.index("z");
  const MultiPoly fz = MultiPoly::substitute(f, tz, "theta");
  const MultiPoly at1 = zp.evaluate(zi, F.one()).to_vars(plain.vars());
  if (!(at1 == plain)) route_fail("z^1 at z = 1 vs plain", at1, plain);
  // c(f) P(1)
  UniPoly gek = f;
  if (data.r0 >= 1) {
    UniPoly s(F);
    for (const auto& p : data.P) s += p;
    gek = s.scale(data.cf);
  }
  const MultiPoly gekm = MultiPoly::substitute(gek, plain.vars(), "theta");
  if (!(plain == gekm)) route_fail("plain vs c(f)P(1)", plain, gekm);
  if (!(zp == data.deformed_fitting().to_vars(tz))) route_fail("z^1 vs f + sum c(f)p_i z^{di}", zp, data.deformed_fitting());
  const MultiPoly at0 = zp.evaluate(zi, F.zero());
  if (!(at0 == fz)) route_fail("z = 0 slice", at0, fz);

  for (unsigned n = 1; n <= n_max; ++n) {
    for (bool with_t : {false, true}) {
      const Deformation def = with_t ? Deformation::canonical_t(n) : Deformation::canonical(n);
      const Vars v = def.vars();
      MultiPoly fprod = MultiPoly::constant(F, v, F.one());
      for (const auto& z : def.zvars()) fprod *= MultiPoly::substitute(f, v, z);
      MultiPoly want = MultiPoly::substitute(f, v, "theta");
      MultiPoly pw = MultiPoly::constant(F, v, F.one());
      for (unsigned i = 1; i <= data.r0; ++i) {
        pw *= fprod;
        MultiPoly term = MultiPoly::substitute(data.e[i - 1], v, "theta") * pw;
        if (with_t) term *= MultiPoly::var(F, v, "t", d * i);
        want += term;
      }
      const MultiPoly got = fitting_ideal(phi, f, def);
      if (!(got == want)) route_fail(def.to_string(), got, want);
    }
  }

  // Coefficients of the z^1-deformed phi_f modulo f.
  const auto pf = phi_of_a_mod(phi, f, z1, f);
  std::vector<SkewPoly<MultiPoly>> pe;
  for (unsigned i = 1; i <= data.r0; ++i) pe.push_back(phi_of_a_mod(phi, -data.e[i - 1], z1, f));
  for (unsigned j = 0; j <= data.r0 * d && data.r0 >= 1; ++j) {
    MultiPoly want(F, tz);
    for (unsigned i = 1; i <= j / d; ++i)
      want += MultiPoly::var(F, tz, "z", i * d) * pe[i - 1].coeff(j - i * d);
    want = want.reduce_mod(tz.index("theta"), f);
    const MultiPoly got = pf.coeff(j);
    if (!(got == want)) {
      rep.fail({{"route", "phi_f coefficient congruence"}, {"j", j}, {"got", got.to_string()}, {"expected", want.to_string()}});
      break;
    }
  }
  if (data.r0 == 0)
    for (unsigned j = 0; j < d; ++j)
      if (!pf.coeff(j).is_zero()) {
        rep.fail({{"route", "phi_f coefficient congruence"}, {"j", j}, {"got", pf.coeff(j).to_string()}});
        break;
      }
  return rep;
}

CheckReport check_unit_regime(const DrinfeldModule& phi, unsigned n, unsigned i_max, unsigned slack) {
  if (!degreewise_applies(phi, n)) throw Error(ErrorKind::NotApplicable, "needs n <= q/r - (1 + 2 beta)");
  CheckReport rep;
  rep.name = "unit-regime";
  rep.params = module_params(phi, n);
  rep.params["i_max"] = i_max;
  rep.params["slack"] = slack;
  const LogRadius lr = log_radius(phi, n);
  if (!lr.strict_inequality || lr.exponent <= 0)
    rep.fail({{"property", "radius guard"}, {"index", lr.index}, {"exponent", to_string(lr.exponent)}});
  const unsigned bound = static_cast<unsigned>(floor_q(vanishing_bound(phi, n)));
  const unsigned K = std::max(bound + slack, i_max);
  const MuTable mu = mu_table(phi, K);
  const auto W = w_coefficients(mu, n, bound + slack);
  const Field& F = phi.field();
  const Vars zv(z_names(n));
  if (!(W.W[0] == KPoly::constant(F, zv, RatFunc::one(F)))) rep.fail({{"k", 0}, {"property", "W_0 = 1"}});
  for (unsigned k = 1; k < W.W.size(); ++k)
    if (!W.W[k].is_zero()) rep.fail({{"k", k}, {"property", "W_k = 0"}, {"difference", W.W[k].to_string()}});
  const auto c = degree_sums(mu, n, i_max);
  const auto gamma = log_coeffs(phi, i_max).entries;
  for (unsigned i = 0; i <= i_max; ++i) {
    const KPoly rhs = ell_kpoly(F, i, zv).scale(gamma[i]);
    if (!(c[i] == rhs)) rep.fail({{"i", i}, {"property", "degreewise identity"}, {"difference", diff_string(c[i], rhs)}});
  }
  return rep;
}

PPolynomial p_polynomial(const DrinfeldModule& phi, unsigned n, unsigned slack, std::size_t budget) {
  PPolynomial out;
  out.report = check_logalg_vanishing(phi, n, slack, budget);
  out.report.name = "p-polynomial";
  const unsigned bound = static_cast<unsigned>(floor_q(vanishing_bound(phi, n)));
  const auto W = w_coefficients(mu_table(phi, bound + slack), n, bound + slack);
  const Field& F = phi.field();
  const Vars zv(z_names(n));
  KPoly sum(F, zv);
  for (const auto& w : W.W) sum += w;
  const auto m = sum.to_multi("theta");
  const Vars tv = theta_and(zv.names());
  if (!m) {
    out.report.fail({{"property", "P integral"}, {"denominator", sum.denominator().to_string()}});
    out.value = MultiPoly(F, tv);
  } else {
    out.value = m->to_vars(tv);
  }
  const bool unit = degreewise_applies(phi, n);
  out.report.params["unit_asserted"] = unit;
  if (unit && !(out.value == MultiPoly::constant(F, tv, F.one())))
    out.report.fail({{"property", "P = 1"}, {"value", out.value.to_string()}});
  return out;
}

}  // namespace ffl

#pragma once

// Independent reference computations shared by the unit tests and the acceptance
// runner. Each one takes the slow, direct route through generic arithmetic.

#include <functional>
#include <vector>

#include "ffl/drinfeld.hpp"
#include "ffl/frobenius.hpp"
#include "ffl/kpoly.hpp"
#include "ffl/lvalues.hpp"
#include "ffl/tate.hpp"

namespace oracle {

using namespace ffl;

inline UniPoly poly(const Field& F, std::vector<long long> c) {
  std::vector<FqElem> v;
  for (auto x : c) v.push_back(F.from_int(x));
  return UniPoly(F, v);
}

/// Module over F_p with phi_i given by integer coefficient lists.
inline DrinfeldModule module(const Field& F, const std::vector<std::vector<long long>>& coeffs) {
  std::vector<UniPoly> c;
  for (const auto& v : coeffs) c.push_back(poly(F, v));
  return DrinfeldModule::make(F, c);
}

inline Vars theta_vars(const std::vector<std::string>& zvars) {
  std::vector<std::string> names{"theta"};
  names.insert(names.end(), zvars.begin(), zvars.end());
  return Vars(names);
}

/// a(z_1)...a(z_n) over v.
inline MultiPoly z_image(const UniPoly& a, const Vars& v, const std::vector<std::string>& zvars) {
  MultiPoly r = MultiPoly::constant(a.field(), v, 1);
  for (const auto& z : zvars) r *= MultiPoly::substitute(a, v, z);
  return r;
}

/// H_{k,n} straight from the definition with MultiPoly products.
inline MultiPoly h_sum(const MuTable& mu, unsigned k, const std::vector<std::string>& zvars) {
  const Field& F = mu.phi().field();
  const Vars v = theta_vars(zvars);
  MultiPoly s(F, v);
  for (const auto& a : monics(F, k)) s += MultiPoly::substitute(mu(a), v, "theta") * z_image(a, v, zvars);
  return s;
}

/// A rational function as a Laurent series in 1/theta.
inline TateSeries laurent(const RatFunc& r, long N, const Vars& zv = Vars()) {
  const UniPoly& den = r.den();
  const long need = N + std::max(r.num().degree(), 0);
  return (TateSeries::from_unipoly(r.num(), zv) * laurent_invert_monic(den, need, zv)).truncate(N);
}

/// Splits a MultiPoly over (theta, zvars) into a Laurent series over zvars.
inline TateSeries series_of(const MultiPoly& P, const std::vector<std::string>& zvars) {
  const Vars zv(zvars);
  TateSeries s(P.field(), zv);
  for (auto& [e, c] : P.coefficients(0)) s.add_term(e, c.to_vars(zv));
  return s;
}

/// sum_{a in A_{+,d}} mu(a) a(z)/a^s with TateSeries arithmetic.
inline TateSeries dirichlet_block(const MuTable& mu, unsigned d, const std::vector<std::string>& zvars,
                                  unsigned s, long N) {
  const Field& F = mu.phi().field();
  const Vars zv(zvars);
  const Vars tv = theta_vars(zvars);
  TateSeries sum(F, zv, N);
  for (const auto& a : monics(F, d)) {
    const UniPoly m = mu(a);
    if (m.is_zero()) continue;
    TateSeries term = TateSeries::from_unipoly(m, zv) * laurent_invert_monic(a.pow(s), N + m.degree(), zv);
    sum += term.scale(z_image(a, tv, zvars).to_vars(zv)).truncate(N);
  }
  return sum;
}

/// Sum over monic a whose prime factors all have degree <= D, enumerated as prime
/// multisets; mu(a) is the product of the prime-power values.
inline TateSeries restricted_dirichlet(const DrinfeldModule& phi, unsigned n, unsigned s, unsigned D, long N) {
  const Field& F = phi.field();
  const unsigned r = phi.rank();
  const unsigned dmax = taelman_cutoff(r, s, N);
  const auto zn = z_names(n);
  const Vars zv(zn);
  const Vars tv = theta_vars(zn);
  std::vector<UniPoly> primes;
  std::vector<FrobeniusData> data;
  for (unsigned e = 1; e <= D; ++e)
    for (const auto& f : irreducibles(F, e)) {
      primes.push_back(f);
      data.push_back(frobenius_data(phi, f));
    }
  TateSeries sum(F, zv, N);
  std::function<void(std::size_t, const UniPoly&, const UniPoly&)> rec = [&](std::size_t i, const UniPoly& a,
                                                                             const UniPoly& m) {
    if (i == primes.size()) {
      if (m.is_zero()) return;
      TateSeries t = TateSeries::from_unipoly(m, zv) * laurent_invert_monic(a.pow(s), N + m.degree(), zv);
      sum += t.scale(z_image(a, tv, zn).to_vars(zv)).truncate(N);
      return;
    }
    UniPoly ak = a;
    for (unsigned k = 0;; ++k) {
      if (ak.degree() > static_cast<int>(dmax)) break;
      rec(i + 1, ak, m * mu_prime_power(data[i], k));
      ak = ak * primes[i];
    }
  };
  rec(0, UniPoly::one(F), UniPoly::one(F));
  return sum;
}

/// binom(n, k) mod p from Pascal's triangle.
inline std::vector<std::vector<unsigned>> pascal_mod(unsigned p, unsigned size) {
  std::vector<std::vector<unsigned>> c(size, std::vector<unsigned>(size));
  for (unsigned n = 0; n < size; ++n) {
    c[n][0] = 1 % p;
    for (unsigned k = 1; k <= n; ++k) c[n][k] = (c[n - 1][k - 1] + (k < n ? c[n - 1][k] : 0)) % p;
  }
  return c;
}

/// Base-p digits of a natural number.
inline std::vector<unsigned> digits(unsigned p, std::uint64_t y) {
  std::vector<unsigned> d;
  for (; y; y /= p) d.push_back(static_cast<unsigned>(y % p));
  return d;
}

/// sum_a mu(a) a(z) a^{-s} for s <= 0 summed degree by degree up to K, direct.
inline MultiPoly special_direct(const MuTable& mu, const std::vector<std::string>& zvars, long s, unsigned K) {
  const Field& F = mu.phi().field();
  const Vars v = theta_vars(zvars);
  MultiPoly total(F, v);
  for (unsigned k = 0; k <= K; ++k)
    for (const auto& a : monics(F, k))
      total += MultiPoly::substitute(mu(a) * a.pow(static_cast<std::uint64_t>(-s)), v, "theta") * z_image(a, v, zvars);
  return total;
}

/// Coefficientwise agreement of two series at exponents e >= lo.
inline bool agree_from(const TateSeries& a, const TateSeries& b, long lo) {
  for (long e = std::max(a.is_zero() ? lo : a.top(), b.is_zero() ? lo : b.top()); e >= lo; --e)
    if (!(a.coeff(e) == b.coeff(e))) return false;
  return true;
}

/// sum_{a in A_{+,k}} mu(a) C_a(X_1)...C_a(X_n)/a, one rational term at a time.
inline KPoly s_direct(const MuTable& mu, unsigned k, const std::vector<std::string>& xvars) {
  const Field& F = mu.phi().field();
  const Vars tv = theta_vars(xvars);
  const Vars xv(xvars);
  KPoly s(F, xv);
  for (const auto& a : monics(F, k)) {
    MultiPoly m = MultiPoly::substitute(mu(a), tv, "theta");
    for (const auto& x : xvars) m *= carlitz_action(F, a, x, tv);
    s += KPoly::from_multi(m, "theta", xv).scale(RatFunc(UniPoly::one(F), a));
  }
  return s;
}

/// sum_{a in A_{+,k}} mu(a) a(z_1)...a(z_n)/a, one rational term at a time.
inline KPoly c_direct(const MuTable& mu, unsigned k, const std::vector<std::string>& zvars) {
  const Field& F = mu.phi().field();
  const Vars tv = theta_vars(zvars);
  const Vars zv(zvars);
  KPoly s(F, zv);
  for (const auto& a : monics(F, k))
    s += KPoly::from_multi(MultiPoly::substitute(mu(a), tv, "theta") * z_image(a, tv, zvars), "theta", zv)
             .scale(RatFunc(UniPoly::one(F), a));
  return s;
}

/// det of a square matrix by cofactor expansion along the first row.
inline MultiPoly det_laplace(const std::vector<std::vector<MultiPoly>>& M, const Field& F, const Vars& v) {
  const std::size_t n = M.size();
  if (n == 0) return MultiPoly::constant(F, v, 1);
  MultiPoly d(F, v);
  for (std::size_t j = 0; j < n; ++j) {
    if (M[0][j].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MultiPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(M[i][k]);
      minor.push_back(row);
    }
    const MultiPoly t = M[0][j] * det_laplace(minor, F, v);
    d = j % 2 ? d - t : d + t;
  }
  return d;
}

/// Fitting ideal of the z^1 deformation at a prime f over (theta, z): det(theta - M)
/// with M the matrix of x -> sum_i phi_i z^i x^{q^i} mod f, powers taken with powmod.
inline MultiPoly fitting_z1(const DrinfeldModule& phi, const UniPoly& f) {
  const Field& F = phi.field();
  const Vars v{"theta", "z"};
  const std::size_t d = static_cast<std::size_t>(f.degree());
  std::vector<std::vector<MultiPoly>> A(d, std::vector<MultiPoly>(d, MultiPoly(F, v)));
  std::uint64_t qi = 1;
  for (unsigned i = 0; i <= phi.rank(); ++i, qi *= F.q())
    for (std::size_t j = 0; j < d; ++j) {
      const UniPoly img = (phi.coeff(i) * powmod(UniPoly::monomial(F, j, F.one()), qi, f)) % f;
      for (std::size_t k = 0; k < d; ++k)
        if (img.coeff(k).v) A[k][j] -= MultiPoly::monomial(F, v, Exps{0, i}, img.coeff(k));
    }
  for (std::size_t k = 0; k < d; ++k) A[k][k] += MultiPoly::var(F, v, "theta");
  return det_laplace(A, F, v);
}

/// D_f(x) read off fitting_z1: f + sum_i e_i z^{di} gives D_f = 1 + sum_i e_i f^{i-1} x^i.
inline std::vector<UniPoly> frobenius_series_direct(const DrinfeldModule& phi, const UniPoly& f) {
  const Field& F = phi.field();
  const unsigned d = static_cast<unsigned>(f.degree());
  std::vector<UniPoly> D{UniPoly::one(F)};
  const auto by_z = fitting_z1(phi, f).coefficients(1);
  unsigned top = 0;
  for (const auto& [e, c] : by_z) top = std::max(top, e);
  UniPoly fp = UniPoly::one(F);
  for (unsigned i = 1; i * d <= top; ++i) {
    auto it = by_z.find(i * d);
    D.push_back(it == by_z.end() ? UniPoly(F) : it->second.to_unipoly(0) * fp);
    fp *= f;
  }
  return D;
}

/// Coefficients of 1/D(x) up to x^k.
inline std::vector<UniPoly> invert_series(const std::vector<UniPoly>& D, unsigned k) {
  const Field& F = D[0].field();
  std::vector<UniPoly> m{UniPoly::one(F)};
  for (unsigned i = 1; i <= k; ++i) {
    UniPoly s(F);
    for (unsigned j = 1; j < D.size() && j <= i; ++j) s += D[j] * m[i - j];
    m.push_back(-s);
  }
  return m;
}

/// gamma_k(theta - theta^{q^k}) = sum_i gamma_{k-i} phi_i^{q^{k-i}}, powers taken literally.
inline std::vector<RatFunc> gamma_direct(const DrinfeldModule& phi, unsigned K) {
  const Field& F = phi.field();
  const UniPoly t = UniPoly::theta(F);
  std::vector<RatFunc> g{RatFunc::one(F)};
  for (unsigned k = 1; k <= K; ++k) {
    RatFunc s(UniPoly(F), UniPoly::one(F));
    for (unsigned i = 1; i <= std::min(k, phi.rank()); ++i)
      s = s + g[k - i] * RatFunc(phi.coeff(i).pow(ipow(F.q(), k - i)), UniPoly::one(F));
    g.push_back(s * RatFunc(UniPoly::one(F), t - t.pow(ipow(F.q(), k))));
  }
  return g;
}

/// prod_k prod_{j<i} (z_k - theta^{q^j}) as a KPoly over zvars.
inline KPoly ell_direct(const Field& F, unsigned i, const std::vector<std::string>& zvars) {
  const Vars tv = theta_vars(zvars);
  MultiPoly m = MultiPoly::constant(F, tv, 1);
  for (const auto& z : zvars)
    for (unsigned j = 0; j < i; ++j) m *= MultiPoly::var(F, tv, z) - MultiPoly::var(F, tv, "theta", static_cast<std::uint32_t>(ipow(F.q(), j)));
  return KPoly::from_multi(m, "theta", Vars(zvars));
}

/// A KPoly with K-coefficients expanded as Laurent series to precision N.
inline TateSeries kpoly_laurent(const KPoly& P, long N) {
  const Field& F = P.field();
  TateSeries s(F, P.vars(), N);
  for (const auto& [e, c] : P.terms()) s += laurent(c, N, P.vars()).scale(MultiPoly::monomial(F, P.vars(), e, F.one()));
  return s;
}

}  // namespace oracle

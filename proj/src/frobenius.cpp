#include "ffl/frobenius.hpp"

#include <algorithm>

#include "ffl/error.hpp"
#include "ffl/parallel.hpp"

namespace ffl {
namespace {

void require_prime(const UniPoly& f) {
  if (!f.is_monic() || !is_irreducible(f))
    throw Error(ErrorKind::ReducibleF, "f = " + f.to_string() + " is not monic irreducible");
}

Vars without_theta(const Vars& v) {
  std::vector<std::string> names;
  for (const auto& n : v.names())
    if (n != "theta") names.push_back(n);
  return Vars(std::move(names));
}

}  // namespace

PolyMatrix theta_action_matrix(const DrinfeldModule& phi, const UniPoly& f, const Deformation& def) {
  require_prime(f);
  const Field& F = phi.field();
  const Vars v = def.vars();
  const Vars w = without_theta(v);
  const std::size_t ti = v.index("theta");
  const unsigned d = static_cast<unsigned>(f.degree());
  std::vector<MultiPoly> c;
  std::vector<UniPoly> tq;  // theta^{q^i} mod f
  for (unsigned i = 0; i <= phi.rank(); ++i) {
    c.push_back(deformed_coeff(phi, i, def).reduce_mod(ti, f));
    tq.push_back(frobmod(UniPoly::theta(F), i, f));
  }
  PolyMatrix M(d, std::vector<MultiPoly>(d, MultiPoly(F, w)));
  std::vector<UniPoly> pw(phi.rank() + 1, UniPoly::one(F));
  for (unsigned j = 0; j < d; ++j) {
    MultiPoly img(F, v);
    for (unsigned i = 0; i <= phi.rank(); ++i) {
      if (!c[i].is_zero()) img += c[i] * MultiPoly::substitute(pw[i], v, "theta");
      pw[i] = (pw[i] * tq[i]) % f;
    }
    img = img.reduce_mod(ti, f);
    for (auto& [k, coef] : img.coefficients(ti)) M[k][j] = coef.to_vars(w);
  }
  return M;
}

MultiPoly fitting_ideal(const DrinfeldModule& phi, const UniPoly& f, const Deformation& d) {
  const PolyMatrix M = theta_action_matrix(phi, f, d);
  return charpoly_fraction_free(M, "theta").to_vars(d.vars());
}

MultiPoly FrobeniusData::deformed_fitting() const {
  const Field& F = f.field();
  const Vars v{"theta", "z"};
  MultiPoly Q = MultiPoly::substitute(f, v, "theta");
  for (unsigned i = 1; i <= r0; ++i)
    Q += MultiPoly::substitute(e[i - 1], v, "theta") * MultiPoly::var(F, v, "z", d * i);
  return Q;
}

FrobeniusData frobenius_data(const DrinfeldModule& phi, const UniPoly& f) {
  require_prime(f);
  const Field& F = phi.field();
  const unsigned d = static_cast<unsigned>(f.degree());
  const unsigned r = phi.rank();
  // Entries as polynomials in z: the z^1 deformation multiplies phi_i by z^i.
  std::vector<std::vector<UniPoly>> M(d, std::vector<UniPoly>(d, UniPoly(F)));
  for (unsigned i = 0; i <= r; ++i) {
    const UniPoly ci = phi.coeff(i) % f;
    if (ci.is_zero()) continue;
    const UniPoly t = frobmod(UniPoly::theta(F), i, f);
    UniPoly pw = UniPoly::one(F);
    for (unsigned j = 0; j < d; ++j) {
      const UniPoly img = (ci * pw) % f;
      for (std::size_t k = 0; k < img.coeffs().size(); ++k)
        if (img.coeffs()[k].v) M[k][j] += UniPoly::monomial(F, i, img.coeffs()[k]);
      pw = (pw * t) % f;
    }
  }
  const auto cp = charpoly_berkowitz(M);  // cp[k](z) = coefficient of theta^k
  std::size_t zdeg = 0;
  for (const auto& c : cp) zdeg = std::max<std::size_t>(zdeg, c.coeffs().size());
  std::vector<UniPoly> A(zdeg, UniPoly(F));
  for (std::size_t m = 0; m < zdeg; ++m) {
    std::vector<FqElem> a(cp.size());
    for (std::size_t k = 0; k < cp.size(); ++k) a[k] = cp[k].coeff(m);
    A[m] = UniPoly(F, std::move(a));
  }
  if (A.empty() || !(A[0] == f))
    throw Error(ErrorKind::StructureViolation, "z = 0 slice of the deformed Fitting ideal differs from f");
  FrobeniusData out;
  out.f = f;
  out.d = d;
  for (std::size_t m = 1; m < zdeg; ++m) {
    if (A[m].is_zero()) continue;
    if (m % d != 0) throw Error(ErrorKind::StructureViolation, "z-exponent not divisible by deg f");
    out.r0 = static_cast<unsigned>(m / d);
  }
  for (unsigned i = 1; i <= out.r0; ++i) {
    const std::size_t m = static_cast<std::size_t>(i) * d;
    out.e.push_back(m < zdeg ? A[m] : UniPoly(F));
  }
  unsigned r0_direct = 0;
  for (unsigned i = 1; i <= r; ++i)
    if (!(phi.coeff(i) % f).is_zero()) r0_direct = i;
  if (r0_direct != out.r0) throw Error(ErrorKind::StructureViolation, "r0 from the Fitting ideal disagrees with phi mod f");
  out.Df.push_back(UniPoly::one(F));
  if (out.r0 == 0) {
    out.P.push_back(UniPoly::one(F));
    return out;
  }
  const UniPoly& top = out.e.back();
  if (top.degree() != 0) throw Error(ErrorKind::StructureViolation, "c(f) is not a nonzero constant");
  out.cf = top.lead();
  const FqElem ci = F.inv(out.cf);
  out.P.push_back(f.scale(ci));
  for (unsigned i = 1; i < out.r0; ++i) {
    if (out.e[i - 1].degree() >= static_cast<int>(d)) throw Error(ErrorKind::StructureViolation, "deg p_i >= d");
    out.P.push_back(out.e[i - 1].scale(ci));
  }
  out.P.push_back(UniPoly::one(F));
  UniPoly fp = UniPoly::one(F);
  for (unsigned i = 1; i <= out.r0; ++i) {
    out.Df.push_back(out.e[i - 1] * fp);
    fp *= f;
  }
  return out;
}

UniPoly mu_prime_power(const FrobeniusData& data, unsigned i) {
  const Field& F = data.f.field();
  std::vector<UniPoly> m{UniPoly::one(F)};
  for (unsigned k = 1; k <= i; ++k) {
    UniPoly s(F);
    for (unsigned j = 1; j <= std::min(k, data.r0); ++j) s += data.Df[j] * m[k - j];
    m.push_back(-s);
  }
  return m[i];
}

const UniPoly& MuTable::operator()(const UniPoly& a) const {
  if (!a.is_monic()) throw Error(ErrorKind::NotMonic, "mu is defined on monic polynomials");
  if (a.degree() > static_cast<int>(D_))
    throw Error(ErrorKind::DegreeOutOfTable, "degree " + std::to_string(a.degree()) + " exceeds table degree " + std::to_string(D_));
  return values_[static_cast<std::size_t>(a.degree())][a.code()];
}

const std::vector<UniPoly>& MuTable::degree(unsigned k) const {
  if (k > D_) throw Error(ErrorKind::DegreeOutOfTable, "degree " + std::to_string(k) + " exceeds table degree " + std::to_string(D_));
  return values_[k];
}

MuTable MuTable::with_override(const UniPoly& a, const UniPoly& value) const {
  MuTable t = *this;
  (void)t(a);
  t.values_[static_cast<std::size_t>(a.degree())][a.code()] = value;
  return t;
}

MuTable mu_table(const DrinfeldModule& phi, unsigned D) {
  const Field& F = phi.field();
  MuTable t;
  t.phi_ = phi;
  t.D_ = D;
  t.values_.resize(D + 1);
  t.primes_.resize(D + 1);
  t.values_[0] = {UniPoly::one(F)};
  // mu(P^m) for every prime P, m*deg P <= D.
  std::vector<std::map<std::uint64_t, std::vector<UniPoly>>> pp(D + 1);
  for (unsigned k = 1; k <= D; ++k) {
    const auto primes = irreducibles(F, k);
    std::vector<FrobeniusData> data(primes.size());
    std::vector<std::vector<UniPoly>> pows(primes.size());
    parallel_for(primes.size(), [&](std::size_t i) {
      data[i] = frobenius_data(phi, primes[i]);
      const unsigned maxm = D / k;
      pows[i].push_back(UniPoly::one(F));
      for (unsigned m = 1; m <= maxm; ++m) {
        UniPoly s(F);
        for (unsigned j = 1; j <= std::min(m, data[i].r0); ++j) s += data[i].Df[j] * pows[i][m - j];
        pows[i].push_back(-s);
      }
    });
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const auto code = primes[i].code();
      t.primes_[k].emplace(code, std::move(data[i]));
      pp[k].emplace(code, std::move(pows[i]));
    }
  }
  std::vector<std::vector<UniPoly>> small(D / 2 + 1);
  for (unsigned e = 1; 2 * e <= D; ++e) small[e] = irreducibles(F, e);
  for (unsigned k = 1; k <= D; ++k) {
    const std::uint64_t n = ipow(F.q(), k);
    auto& vals = t.values_[k];
    vals.assign(n, UniPoly(F));
    parallel_for(n, [&](std::size_t c) {
      const UniPoly a = UniPoly::from_code(F, k, c);
      for (unsigned e = 1; 2 * e <= k; ++e) {
        for (const auto& P : small[e]) {
          auto [q, r] = UniPoly::divmod(a, P);
          if (!r.is_zero()) continue;
          unsigned m = 1;
          UniPoly rest = std::move(q);
          for (;;) {
            auto [q2, r2] = UniPoly::divmod(rest, P);
            if (!r2.is_zero()) break;
            rest = std::move(q2);
            ++m;
          }
          const UniPoly& mp = pp[e].at(P.code())[m];
          vals[c] = mp.is_zero() ? mp : mp * t.values_[static_cast<std::size_t>(rest.degree())][rest.code()];
          return;
        }
      }
      vals[c] = pp[k].at(c)[1];
    });
  }
  return t;
}

}  // namespace ffl

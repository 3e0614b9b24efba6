#include "ffl/lvalues.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ffl/error.hpp"
#include "ffl/parallel.hpp"

namespace ffl {
namespace {

/// Laurent polynomial in theta with F_q coefficients: c[k] multiplies theta^{top - k}.
struct Dense {
  long top = 0;
  std::vector<FqElem> c;
};

/// All exponent tuples in [0, d]^n, first index fastest.
std::vector<Exps> tuples(unsigned d, unsigned n) {
  std::vector<Exps> out;
  Exps e(n, 0);
  while (true) {
    out.push_back(e);
    unsigned j = 0;
    while (j < n && e[j] == d) e[j++] = 0;
    if (j == n) break;
    ++e[j];
  }
  return out;
}

/// prod_j a_{e_j} (the coefficient of z^e in a(z_1)...a(z_n)).
FqElem tuple_coeff(const Field& F, const UniPoly& a, const Exps& e) {
  FqElem c = F.one();
  for (auto k : e) {
    c = F.mul(c, a.coeff(k));
    if (!c.v) break;
  }
  return c;
}

/// Accumulates sum_{a in A_{+,d}} mu(a) a(z_1)...a(z_n) w(a) where w(a) is given densely.
/// Exponents below -N are discarded; the result lives over zvars.
TateSeries accumulate(const MuTable& mu, unsigned d, const Vars& zvars, long N,
                      const std::function<Dense(const UniPoly& a, long need)>& weight) {
  const Field& F = mu.phi().field();
  const unsigned n = static_cast<unsigned>(zvars.size());
  const auto& vals = mu.degree(d);
  const auto tup = tuples(d, n);
  std::map<long, std::vector<FqElem>> acc;  // exponent -> per tuple
  for (std::uint64_t code = 0; code < vals.size(); ++code) {
    const UniPoly& m = vals[code];
    if (m.is_zero()) continue;
    const UniPoly a = UniPoly::from_code(F, d, code);
    const Dense w = weight(a, N + m.degree());
    // mu(a) * w(a), exponents >= -N.
    const long top = w.top + m.degree();
    if (top < -N) continue;
    std::vector<FqElem> prod(static_cast<std::size_t>(top + N + 1));
    for (std::size_t i = 0; i < m.coeffs().size(); ++i) {
      const FqElem mi = m.coeffs()[i];
      if (!mi.v) continue;
      const long shift = m.degree() - static_cast<long>(i);
      for (std::size_t k = 0; k < w.c.size(); ++k) {
        const std::size_t pos = static_cast<std::size_t>(shift) + k;
        if (pos >= prod.size()) break;
        if (w.c[k].v) prod[pos] = F.add(prod[pos], F.mul(mi, w.c[k]));
      }
    }
    std::vector<FqElem> tc(tup.size());
    for (std::size_t t = 0; t < tup.size(); ++t) tc[t] = tuple_coeff(F, a, tup[t]);
    for (std::size_t k = 0; k < prod.size(); ++k) {
      if (!prod[k].v) continue;
      auto& slot = acc[top - static_cast<long>(k)];
      if (slot.empty()) slot.assign(tup.size(), FqElem{});
      for (std::size_t t = 0; t < tup.size(); ++t)
        if (tc[t].v) slot[t] = F.add(slot[t], F.mul(tc[t], prod[k]));
    }
  }
  TateSeries r(F, zvars, N);
  for (auto& [e, slot] : acc) {
    std::vector<MultiPoly::Term> terms;
    for (std::size_t t = 0; t < tup.size(); ++t)
      if (slot[t].v) terms.push_back({tup[t], slot[t]});
    r.add_term(e, MultiPoly::from_terms(F, zvars, std::move(terms)));
  }
  return r;
}

Dense from_series(const TateSeries& s, long need) {
  Dense w;
  w.top = s.is_zero() ? 0 : s.top();
  for (long e = w.top; e >= -need; --e) w.c.push_back(s.coeff(e).constant_term());
  return w;
}

/// (f(z_1)...f(z_n))^power.
MultiPoly z_product(const UniPoly& f, const Vars& v, const std::vector<std::string>& zvars, unsigned power) {
  MultiPoly b = MultiPoly::constant(f.field(), v, f.field().one());
  for (const auto& z : zvars) b *= MultiPoly::substitute(f, v, z);
  return b.pow(power);
}

BigInt big_pow(std::uint64_t q, long e) {
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= q;
  return r;
}

Rational ceil_q(const Rational& x) {
  BigInt f = floor_q(x);
  return Rational(f == x ? f : f + 1);
}

}  // namespace

MultiPoly h_sum(const MuTable& mu, unsigned k, const std::vector<std::string>& zvars) {
  const Field& F = mu.phi().field();
  std::vector<std::string> names{"theta"};
  names.insert(names.end(), zvars.begin(), zvars.end());
  const Vars v(names);
  const unsigned n = static_cast<unsigned>(zvars.size());
  const auto& vals = mu.degree(k);
  const auto tup = tuples(k, n);
  std::vector<std::vector<FqElem>> acc(tup.size(), std::vector<FqElem>(k + 1));
  for (std::uint64_t code = 0; code < vals.size(); ++code) {
    const UniPoly& m = vals[code];
    if (m.is_zero()) continue;
    const UniPoly a = UniPoly::from_code(F, k, code);
    for (std::size_t t = 0; t < tup.size(); ++t) {
      const FqElem c = tuple_coeff(F, a, tup[t]);
      if (!c.v) continue;
      for (std::size_t i = 0; i < m.coeffs().size(); ++i)
        acc[t][i] = F.add(acc[t][i], F.mul(c, m.coeffs()[i]));
    }
  }
  std::vector<MultiPoly::Term> terms;
  for (std::size_t t = 0; t < tup.size(); ++t)
    for (std::size_t i = 0; i <= k; ++i) {
      if (!acc[t][i].v) continue;
      Exps e{static_cast<std::uint32_t>(i)};
      e.insert(e.end(), tup[t].begin(), tup[t].end());
      terms.push_back({std::move(e), acc[t][i]});
    }
  return MultiPoly::from_terms(F, v, std::move(terms));
}

Rational vanishing_bound(const DrinfeldModule& phi, unsigned n) {
  return Rational(phi.rank() * (n + phi.beta()), phi.field().q() - 1);
}

unsigned h_termination_degree(const DrinfeldModule& phi, unsigned n) {
  return static_cast<unsigned>(floor_q(vanishing_bound(phi, n + 1)));
}

unsigned taelman_cutoff(unsigned r, unsigned s, long N) {
  // Omit d once d (r(s-1) + 1) >= r(N + 1).
  const long w = static_cast<long>(r) * (static_cast<long>(s) - 1) + 1;
  const long need = static_cast<long>(r) * (N + 1);
  return static_cast<unsigned>((need + w - 1) / w - 1);
}

TateSeries dirichlet_block(const MuTable& mu, unsigned d, const std::vector<std::string>& zvars,
                           unsigned s, long N) {
  return accumulate(mu, d, Vars(zvars), N, [&](const UniPoly& a, long need) {
    Dense w;
    const UniPoly as = a.pow(s);
    w.top = -as.degree();
    w.c = laurent_inverse_coeffs(as, std::max(need, 0L));
    return w;
  });
}

LValueResult taelman_lvalue(const MuTable& mu, unsigned n, unsigned s, long N) {
  if (s < 1) throw Error(ErrorKind::InvalidArgument, "taelman_lvalue needs s >= 1");
  if (N < 1) throw Error(ErrorKind::NegativePrecision, "precision must be at least 1");
  const unsigned r = mu.phi().rank();
  unsigned D = taelman_cutoff(r, s, N);
  long prec = N;
  if (D > mu.max_degree()) {
    D = mu.max_degree();
    // Omitted degrees d > D have ord >= (D+1)(s - 1 + 1/r).
    const Rational o = Rational((D + 1) * (r * (s - 1) + 1), r);
    prec = std::min(N, static_cast<long>(static_cast<BigInt>(ceil_q(o))) - 1);
  }
  const Vars zv(z_names(n));
  std::vector<TateSeries> blocks(D + 1);
  parallel_for(D + 1, [&](std::size_t d) {
    blocks[d] = dirichlet_block(mu, static_cast<unsigned>(d), zv.names(), s, std::max(prec, 0L));
  });
  TateSeries sum(mu.phi().field(), zv, std::max(prec, 0L));
  for (const auto& b : blocks) sum += b;
  LValueResult res;
  res.series = sum;
  res.terms_used = D;
  const Rational omitted = -Rational((D + 1) * (r * (s - 1) + 1), r);
  res.tail_log_q = std::max(omitted, Rational(-(prec + 1)));
  return res;
}

LValueResult taelman_lvalue(const DrinfeldModule& phi, unsigned n, unsigned s, long N,
                            std::optional<unsigned> deg_cap) {
  if (N < 1) throw Error(ErrorKind::NegativePrecision, "precision must be at least 1");
  unsigned D = taelman_cutoff(phi.rank(), s, N);
  if (deg_cap) D = std::min(D, *deg_cap);
  return taelman_lvalue(mu_table(phi, D), n, s, N);
}

LValueResult euler_product_truncation(const DrinfeldModule& phi, unsigned n, unsigned s, unsigned D, long N) {
  if (s < 1) throw Error(ErrorKind::InvalidArgument, "euler_product_truncation needs s >= 1");
  if (N < 0) throw Error(ErrorKind::NegativePrecision, "negative precision");
  const Field& F = phi.field();
  const unsigned r = phi.rank();
  const auto zn = z_names(n);
  const Vars zv(zn);
  TateSeries prod = TateSeries::one(F, zv).truncate(N);
  for (unsigned e = 1; e <= D; ++e) {
    for (const auto& f : irreducibles(F, e)) {
      const FrobeniusData data = frobenius_data(phi, f);
      TateSeries factor = TateSeries::one(F, zv).truncate(N);
      // Terms with i e (r(s-1) + 1) >= r(N + 1) lie below the precision.
      for (unsigned i = 1; static_cast<long>(i) * e * (r * (s - 1) + 1) < static_cast<long>(r) * (N + 1); ++i) {
        const UniPoly m = mu_prime_power(data, i);
        if (m.is_zero()) continue;
        const TateSeries inv = laurent_invert_monic(f.pow(static_cast<std::uint64_t>(s) * i), N + m.degree(), zv);
        const TateSeries term = (TateSeries::from_unipoly(m, zv) * inv).scale(z_product(f, zv, zn, i)).truncate(N);
        factor += term;
      }
      prod = (prod * factor).truncate(N);
    }
  }
  LValueResult res;
  res.series = prod;
  res.terms_used = D;
  res.tail_log_q = Rational(-(N + 1));
  return res;
}

unsigned digit_sum(std::uint64_t m, std::uint64_t q) {
  unsigned s = 0;
  for (; m; m /= q) s += static_cast<unsigned>(m % q);
  return s;
}

unsigned special_value_cutoff(const DrinfeldModule& phi, unsigned n, long s) {
  if (s > 0) throw Error(ErrorKind::InvalidArgument, "special values need s <= 0");
  return h_termination_degree(phi, n + digit_sum(static_cast<std::uint64_t>(-s), phi.field().q()));
}

MultiPoly special_value_nonpositive(const MuTable& mu, const std::vector<std::string>& zvars, long s,
                                    unsigned extra) {
  const DrinfeldModule& phi = mu.phi();
  const Field& F = phi.field();
  const unsigned n = static_cast<unsigned>(zvars.size());
  const unsigned K = special_value_cutoff(phi, n, s) + extra;
  if (K > mu.max_degree())
    throw Error(ErrorKind::TableTooSmall, "special value needs mu up to degree " + std::to_string(K) +
                                              ", table has " + std::to_string(mu.max_degree()));
  // a^{|s|} = prod_j a(theta^{q^j})^{v_j}: one extra variable per unit of digit sum.
  std::vector<std::uint64_t> powers;
  for (std::uint64_t m = static_cast<std::uint64_t>(-s), qj = 1; m; m /= F.q(), qj *= F.q())
    for (unsigned c = 0; c < m % F.q(); ++c) powers.push_back(qj);
  std::vector<std::string> all = zvars;
  for (std::size_t i = 0; i < powers.size(); ++i) all.push_back("_w" + std::to_string(i + 1));
  std::vector<std::string> names{"theta"};
  names.insert(names.end(), zvars.begin(), zvars.end());
  const Vars out(names);
  MultiPoly total(F, out);
  for (unsigned k = 0; k <= K; ++k) {
    MultiPoly h = h_sum(mu, k, all);
    for (std::size_t i = 0; i < powers.size(); ++i) {
      const std::size_t vi = h.vars().index("_w" + std::to_string(i + 1));
      h = h.substitute(vi, MultiPoly::var(F, h.vars(), "theta", static_cast<std::uint32_t>(powers[i])));
    }
    total += h.to_vars(out);
  }
  return total;
}

PAdicInt PAdicInt::from_integer(unsigned p, long long v) {
  if (p < 2) throw Error(ErrorKind::InvalidArgument, "p-adic base must be at least 2");
  PAdicInt y;
  y.p = p;
  if (v >= 0) {
    for (; v; v /= p) y.prefix.push_back(static_cast<unsigned>(v % p));
    return y;
  }
  // -u = (p^k - u) + p^k * (-1), with -1 = (p-1)(p-1)...
  unsigned long long u = static_cast<unsigned long long>(-v), pk = 1;
  std::size_t k = 0;
  while (pk < u) pk *= p, ++k;
  unsigned long long w = pk - u;
  for (std::size_t i = 0; i < k; ++i, w /= p) y.prefix.push_back(static_cast<unsigned>(w % p));
  y.repeat = p - 1;
  return y;
}

std::vector<unsigned> PAdicInt::digits(std::size_t count) const {
  std::vector<unsigned> d(count);
  for (std::size_t k = 0; k < count; ++k) d[k] = digit(k);
  return d;
}

std::string PAdicInt::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < prefix.size(); ++i) os << (i ? "," : "") << prefix[i];
  os << "](" << repeat << ")";
  return os.str();
}

unsigned lucas_binomial(unsigned p, const std::vector<unsigned>& y_digits, std::uint64_t i) {
  unsigned r = 1;
  for (std::size_t j = 0; i; ++j, i /= p) {
    const unsigned ij = static_cast<unsigned>(i % p);
    const unsigned yj = j < y_digits.size() ? y_digits[j] : 0;
    if (ij > yj) return 0;
    // C(yj, ij) mod p with yj < p: exact in 64 bits for the small p used here.
    std::uint64_t c = 1;
    for (unsigned t = 0; t < ij; ++t) c = c * (yj - t) / (t + 1);
    r = static_cast<unsigned>(r * (c % p) % p);
  }
  return r;
}

TateSeries bracket_pow(const UniPoly& a, const std::vector<unsigned>& y_digits, long N) {
  if (!a.is_monic()) throw Error(ErrorKind::NotMonic, "<a> needs a monic polynomial");
  if (N < 0) throw Error(ErrorKind::NegativePrecision, "negative precision");
  const Field& F = a.field();
  const long d = a.degree();
  const std::size_t L = static_cast<std::size_t>(N) + 1;
  // u[k] is the coefficient of theta^{-k} in <a> - 1.
  std::vector<FqElem> u(L), pw(L), acc(L);
  for (long k = 1; k <= std::min(N, d); ++k) u[static_cast<std::size_t>(k)] = a.coeff(static_cast<std::size_t>(d - k));
  pw[0] = F.one();
  acc[0] = F.one();
  for (long i = 1; i <= N; ++i) {
    std::vector<FqElem> nx(L);
    for (std::size_t x = 0; x < L; ++x) {
      if (!pw[x].v) continue;
      for (std::size_t y = 1; x + y < L; ++y)
        if (u[y].v) nx[x + y] = F.add(nx[x + y], F.mul(pw[x], u[y]));
    }
    pw = std::move(nx);
    const unsigned b = lucas_binomial(F.p(), y_digits, static_cast<std::uint64_t>(i));
    if (!b) continue;
    const FqElem bc = F.from_int(b);
    for (std::size_t x = 0; x < L; ++x)
      if (pw[x].v) acc[x] = F.add(acc[x], F.mul(bc, pw[x]));
  }
  TateSeries r(F, Vars(), N);
  for (std::size_t x = 0; x < L; ++x)
    if (acc[x].v) r.add_term(-static_cast<long>(x), MultiPoly::constant(F, Vars(), acc[x]));
  return r;
}

TateSeries invert_series(const TateSeries& x, long N) {
  if (x.is_zero()) throw Error(ErrorKind::NotInvertible, "zero series");
  if (x.vars().size() != 0) throw Error(ErrorKind::InvalidArgument, "series inversion needs constant coefficients");
  const Field& F = x.field();
  const long t = x.top();
  // x = theta^t (c_0 + c_1 theta^{-1} + ...), known while -t + k >= -prec.
  const long known = x.is_exact() ? TateSeries::kExact : x.precision() + t;
  // 1/x = theta^{-t} (c_0 + ...)^{-1}; theta^{-t-k} is needed for k <= N - t.
  const long kmax = N - t;
  if (kmax < 0) return TateSeries(F, Vars(), N);
  if (kmax > known)
    throw Error(ErrorKind::NegativePrecision, "series known too coarsely for the requested inverse precision");
  std::vector<FqElem> c(static_cast<std::size_t>(kmax) + 1), v(static_cast<std::size_t>(kmax) + 1);
  for (long k = 0; k <= kmax; ++k) c[static_cast<std::size_t>(k)] = x.coeff(t - k).constant_term();
  const FqElem c0i = F.inv(c[0]);
  v[0] = c0i;
  for (long k = 1; k <= kmax; ++k) {
    FqElem s{};
    for (long i = 1; i <= k; ++i)
      if (c[static_cast<std::size_t>(i)].v) s = F.add(s, F.mul(c[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(k - i)]));
    v[static_cast<std::size_t>(k)] = F.neg(F.mul(s, c0i));
  }
  TateSeries r(F, Vars(), N);
  for (long k = 0; k <= kmax; ++k)
    if (v[static_cast<std::size_t>(k)].v) r.add_term(-t - k, MultiPoly::constant(F, Vars(), v[static_cast<std::size_t>(k)]));
  return r;
}

unsigned goss_tail_threshold(unsigned r, unsigned n, unsigned beta, std::uint64_t q) {
  const Rational th = Rational(3 * r) + Rational(static_cast<long long>(r) * (n + 1 + beta), static_cast<long long>(q - 1));
  return static_cast<unsigned>(static_cast<BigInt>(ceil_q(th)));
}

Rational goss_tail_log_q(unsigned r, unsigned n, unsigned beta, std::uint64_t q, unsigned d, long ord_x) {
  if (n == 0) throw Error(ErrorKind::NZero, "the tail estimate needs n > 0");
  if (d < goss_tail_threshold(r, n, beta, q))
    throw Error(ErrorKind::InvalidArgument, "degree " + std::to_string(d) + " is below the tail threshold");
  const Rational inner = Rational(d, r) - Rational(static_cast<long long>(n + 1 + beta), static_cast<long long>(q - 1));
  const long k = static_cast<long>(static_cast<BigInt>(floor_q(inner))) - 2;
  return Rational(static_cast<long long>(d) * ord_x) + Rational(d) * (1 - Rational(1, r)) - Rational(big_pow(q, k));
}

namespace {

/// sup over d > D of the tail estimate.
Rational tail_sup(unsigned r, unsigned n, unsigned beta, std::uint64_t q, unsigned D, long ord_x) {
  const Rational c = Rational(ord_x) + 1 - Rational(1, r);
  Rational best = goss_tail_log_q(r, n, beta, q, D + 1, ord_x);
  if (c <= 0) return best;
  const Rational b = Rational(static_cast<long long>(n + 1 + beta), static_cast<long long>(q - 1));
  for (unsigned d = D + 2;; ++d) {
    best = std::max(best, goss_tail_log_q(r, n, beta, q, d, ord_x));
    const long k = static_cast<long>(static_cast<BigInt>(floor_q(Rational(d, r) - b))) - 2;
    const long k1 = static_cast<long>(static_cast<BigInt>(floor_q(Rational(d + 1, r) - b))) - 2;
    // Past a run end where the drop q^k (q-1) beats the rise r c, maxima only decrease.
    if (k1 > k && Rational(big_pow(q, k) * (q - 1)) > Rational(r) * c) return best;
  }
}

bool is_monomial(const TateSeries& x) {
  return x.is_exact() && x.terms().size() == 1 && x.terms().begin()->second.is_constant();
}

}  // namespace

LValueResult goss_eval(const DrinfeldModule& phi, unsigned n, const GossPoint& point, const Rational& eps) {
  if (n == 0) throw Error(ErrorKind::NZero, "Goss evaluation needs n > 0");
  const TateSeries& x = point.x;
  if (x.is_zero()) throw Error(ErrorKind::NotInvertible, "x must be nonzero");
  if (x.vars().size() != 0) throw Error(ErrorKind::InvalidArgument, "x must have constant coefficients");
  const Field& F = phi.field();
  if (point.y.p != F.p()) throw Error(ErrorKind::InvalidArgument, "y must be a " + std::to_string(F.p()) + "-adic integer");
  const unsigned r = phi.rank(), beta = phi.beta();
  const std::uint64_t q = F.q();
  const long ord_x = x.ord();
  const Vars zv(z_names(n));
  LValueResult res;

  if (point.y.is_natural() && is_monomial(x)) {
    // Natural y: every block is an H-sum in n + l_q(y) variables, so the sum terminates.
    std::uint64_t y = 0;
    for (std::size_t k = point.y.prefix.size(); k-- > 0;) y = y * F.p() + point.y.prefix[k];
    const unsigned D = h_termination_degree(phi, n + digit_sum(y, q));
    const MuTable mu = mu_table(phi, D);
    const long t = x.top();
    const FqElem cinv = F.inv(x.terms().begin()->second.constant_term());
    TateSeries sum(F, zv);
    FqElem cp = F.one();
    for (unsigned d = 0; d <= D; ++d, cp = F.mul(cp, cinv)) {
      const long low = static_cast<long>(d) * static_cast<long>(y);  // <a>^y = a^y theta^{-dy}
      TateSeries blk = accumulate(mu, d, zv, low, [&](const UniPoly& a, long) {
        Dense w;
        const UniPoly ay = a.pow(y);
        w.top = 0;
        for (long k = ay.degree(); k >= 0; --k) w.c.push_back(ay.coeff(static_cast<std::size_t>(k)));
        return w;
      });
      for (const auto& [e, c] : blk.terms()) {
        MultiPoly cc = c;
        sum.add_term(e - static_cast<long>(d) * t, cc.scale(cp));
      }
    }
    res.series = sum;
    res.terms_used = D;
    res.tail_log_q = std::nullopt;
    res.m = static_cast<unsigned>((point.y.prefix.size() + F.l() - 1) / F.l());
    return res;
  }

  const Rational c = Rational(ord_x) + 1 - Rational(1, r);
  unsigned D = std::max(goss_tail_threshold(r, n, beta, q), 1u) - 1;
  Rational tail = tail_sup(r, n, beta, q, D, ord_x);
  while (tail >= eps) tail = tail_sup(r, n, beta, q, ++D, ord_x);
  // y-approximation on the kept blocks 1..D (block 0 is exact).
  auto yterm = [&](unsigned m) {
    const Rational lin = D == 0 ? Rational(0) : std::max(c, Rational(c * D));
    return lin - Rational(big_pow(q, m));
  };
  unsigned m = 1;
  while (D > 0 && yterm(m) >= eps) ++m;
  const long P = std::max<long>(0, static_cast<long>(static_cast<BigInt>(floor_q(-eps))));
  Rational bound = std::max(tail, Rational(-(P + 1)));
  if (D > 0) bound = std::max(bound, yterm(m));
  const std::vector<unsigned> ym = point.y.digits(static_cast<std::size_t>(F.l()) * m);

  const MuTable mu = mu_table(phi, D);
  // Blocks have top <= D; x^{-d} is computed with enough margin.
  long Pinv = P + static_cast<long>(D) * (1 + std::max<long>(0, ord_x)) + 2;
  TateSeries sum;
  while (true) {
    const TateSeries xinv = invert_series(x, Pinv);
    std::vector<TateSeries> xp{TateSeries::one(F, zv)};
    TateSeries xinv_z(F, zv, xinv.precision());
    for (const auto& [e, cc] : xinv.terms()) xinv_z.add_term(e, MultiPoly::constant(F, zv, cc.constant_term()));
    for (unsigned d = 1; d <= D; ++d) xp.push_back(xp.back() * xinv_z);
    std::vector<TateSeries> blocks(D + 1);
    parallel_for(D + 1, [&](std::size_t d) {
      const long Pb = std::max<long>(0, P - static_cast<long>(d) * x.top());
      TateSeries blk = accumulate(mu, static_cast<unsigned>(d), zv, Pb, [&](const UniPoly& a, long need) {
        return from_series(bracket_pow(a, ym, std::max(need, 0L)), std::max(need, 0L));
      });
      blocks[d] = blk * xp[d];
    });
    sum = TateSeries(F, zv, P);
    for (const auto& b : blocks) sum += b;
    if (sum.precision() >= P) break;
    Pinv += P - sum.precision() + 1;
  }
  res.series = sum.truncate(P);
  res.terms_used = D;
  res.tail_log_q = bound;
  res.m = m;
  return res;
}

}  // namespace ffl

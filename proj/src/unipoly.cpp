#include "ffl/unipoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "ffl/error.hpp"

namespace ffl {
namespace {

using Vec = std::vector<FqElem>;

constexpr std::size_t kKaratsubaThreshold = 32;

void add_into(const Field& F, FqElem* dst, const FqElem* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = F.add(dst[i], src[i]);
}

void sub_into(const Field& F, FqElem* dst, const FqElem* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = F.sub(dst[i], src[i]);
}

void schoolbook(const Field& F, const FqElem* a, std::size_t na, const FqElem* b, std::size_t nb,
                FqElem* out) {
  for (std::size_t i = 0; i < na; ++i) {
    if (a[i].v == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
}

// out has length 2n-1 and is zero on entry; a and b both have length n.
void karatsuba(const Field& F, const FqElem* a, const FqElem* b, std::size_t n, FqElem* out) {
  if (n <= kKaratsubaThreshold) {
    schoolbook(F, a, n, b, n, out);
    return;
  }
  const std::size_t h = n / 2, hi = n - h;
  Vec z0(2 * h - 1), z2(2 * hi - 1), z1(2 * hi - 1), sa(hi), sb(hi);
  karatsuba(F, a, b, h, z0.data());
  karatsuba(F, a + h, b + h, hi, z2.data());
  for (std::size_t i = 0; i < hi; ++i) {
    sa[i] = a[h + i];
    sb[i] = b[h + i];
  }
  add_into(F, sa.data(), a, h);
  add_into(F, sb.data(), b, h);
  karatsuba(F, sa.data(), sb.data(), hi, z1.data());
  sub_into(F, z1.data(), z0.data(), z0.size());
  sub_into(F, z1.data(), z2.data(), z2.size());
  add_into(F, out, z0.data(), z0.size());
  add_into(F, out + h, z1.data(), z1.size());
  add_into(F, out + 2 * h, z2.data(), z2.size());
}

}  // namespace

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

UniPoly::UniPoly(Field f, std::vector<FqElem> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Field& f, FqElem c) { return UniPoly(f, Vec{c}); }

UniPoly UniPoly::monomial(const Field& f, std::size_t n, FqElem c) {
  Vec v(n + 1);
  v[n] = c;
  return UniPoly(f, std::move(v));
}

UniPoly UniPoly::from_code(const Field& f, unsigned d, std::uint64_t code) {
  Vec v(d + 1);
  for (unsigned i = 0; i < d; ++i) {
    v[i] = {static_cast<std::uint32_t>(code % f.q())};
    code /= f.q();
  }
  v[d] = f.one();
  return UniPoly(f, std::move(v));
}

std::uint64_t UniPoly::code() const {
  if (!is_monic()) throw Error(ErrorKind::NotMonic, "code() requires a monic polynomial");
  std::uint64_t c = 0;
  for (std::size_t i = c_.size() - 1; i-- > 0;) c = c * field_.q() + c_[i].v;
  return c;
}

UniPoly UniPoly::operator-() const {
  UniPoly r(field_);
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = field_.neg(c_[i]);
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& b) {
  if (!field_.valid()) field_ = b.field_;
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size());
  add_into(field_, c_.data(), b.c_.data(), b.c_.size());
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& b) {
  if (!field_.valid()) field_ = b.field_;
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size());
  sub_into(field_, c_.data(), b.c_.data(), b.c_.size());
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  const Field& F = a.field_.valid() ? a.field_ : b.field_;
  if (a.is_zero() || b.is_zero()) return UniPoly(F);
  const std::size_t na = a.c_.size(), nb = b.c_.size();
  Vec out(na + nb - 1);
  if (na < kKaratsubaThreshold || nb < kKaratsubaThreshold || na != nb) {
    if (std::min(na, nb) >= kKaratsubaThreshold) {
      const std::size_t n = std::max(na, nb);
      Vec pa(a.c_), pb(b.c_);
      pa.resize(n);
      pb.resize(n);
      Vec full(2 * n - 1);
      karatsuba(F, pa.data(), pb.data(), n, full.data());
      full.resize(out.size());
      return UniPoly(F, std::move(full));
    }
    schoolbook(F, a.c_.data(), na, b.c_.data(), nb, out.data());
  } else {
    karatsuba(F, a.c_.data(), b.c_.data(), na, out.data());
  }
  return UniPoly(F, std::move(out));
}

UniPoly UniPoly::scale(FqElem c) const {
  if (c.v == 0) return UniPoly(field_);
  UniPoly r(field_);
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = field_.mul(c_[i], c);
  return r;
}

UniPoly UniPoly::shift(std::size_t n) const {
  if (is_zero()) return *this;
  UniPoly r(field_);
  r.c_.assign(n, FqElem{});
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

UniPoly UniPoly::pow(std::uint64_t e) const {
  UniPoly r = one(field_), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

UniPoly UniPoly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scale(field_.inv(lead()));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const Field& F = b.field_;
  if (a.degree() < b.degree()) return {UniPoly(F), a};
  Vec r = a.c_;
  const std::size_t db = b.c_.size() - 1;
  Vec q(r.size() - db);
  const FqElem li = F.inv(b.lead());
  const bool monic = b.is_monic();
  for (std::size_t k = q.size(); k-- > 0;) {
    FqElem c = r[k + db];
    if (c.v == 0) continue;
    if (!monic) c = F.mul(c, li);
    q[k] = c;
    for (std::size_t i = 0; i <= db; ++i)
      if (b.c_[i].v != 0) r[k + i] = F.sub(r[k + i], F.mul(c, b.c_[i]));
  }
  r.resize(db);
  return {UniPoly(F, std::move(q)), UniPoly(F, std::move(r))};
}

UniPoly UniPoly::div_exact(const UniPoly& b) const {
  auto [q, r] = divmod(*this, b);
  if (!r.is_zero()) throw Error(ErrorKind::InexactDivision, "polynomial division is not exact");
  return q;
}

FqElem UniPoly::eval(FqElem x) const noexcept {
  FqElem r{};
  for (std::size_t i = c_.size(); i-- > 0;) r = field_.add(field_.mul(r, x), c_[i]);
  return r;
}

UniPoly UniPoly::inflate(std::uint64_t k) const {
  if (is_zero() || k == 1) return *this;
  if (k == 0) {
    FqElem s{};
    for (auto c : c_) s = field_.add(s, c);
    return constant(field_, s);
  }
  Vec v((c_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
  return UniPoly(field_, std::move(v));
}

UniPoly UniPoly::tau(unsigned i) const { return inflate(ipow(field_.q(), i)); }

UniPoly UniPoly::compose(const UniPoly& b) const {
  UniPoly r(field_);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * b + constant(field_, c_[i]);
  return r;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].v == 0) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs;
    if (field_.is_prime_field()) {
      cs = std::to_string(c_[i].v);
    } else {
      auto d = field_.digits(c_[i]);
      cs = "[";
      for (std::size_t j = 0; j < d.size(); ++j) cs += (j ? "," : "") + std::to_string(d[j]);
      cs += "]";
    }
    if (i == 0) {
      os << cs;
    } else {
      if (c_[i].v != 1) os << cs << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

bool operator<(const UniPoly& a, const UniPoly& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i].v != b.c_[i].v) return a.c_[i].v < b.c_[i].v;
  return false;
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly lcm(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly(a.field());
  return (a.div_exact(gcd(a, b)) * b).monic();
}

ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b) {
  const Field& F = a.field();
  UniPoly r0 = a, r1 = b, s0 = UniPoly::one(F), s1(F), t0(F), t1 = UniPoly::one(F);
  while (!r1.is_zero()) {
    auto [q, r] = UniPoly::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  FqElem li = F.inv(r0.lead());
  return {r0.scale(li), s0.scale(li), t0.scale(li)};
}

UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& m) {
  UniPoly r = UniPoly::one(m.field()) % m, b = base % m;
  while (e) {
    if (e & 1) r = (r * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return r;
}

UniPoly frobmod(const UniPoly& base, unsigned k, const UniPoly& m) {
  UniPoly r = base % m;
  for (unsigned i = 0; i < k; ++i) r = powmod(r, m.field().q(), m);
  return r;
}

bool is_irreducible(const UniPoly& a) {
  const int d = a.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  const Field& F = a.field();
  const UniPoly m = a.monic();
  const UniPoly x = UniPoly::theta(F);
  if (!(frobmod(x, static_cast<unsigned>(d), m) - x).is_zero()) return false;
  for (int r = 2; r <= d; ++r) {
    if (d % r != 0 || !is_prime(static_cast<std::uint64_t>(r))) continue;
    UniPoly h = frobmod(x, static_cast<unsigned>(d / r), m) - x;
    if (gcd(m, h).degree() != 0) return false;
  }
  return true;
}

std::uint64_t necklace_count(std::uint64_t q, unsigned d) {
  // (1/d) sum_{e | d} mobius(d/e) q^e
  auto mobius = [](unsigned n) {
    int m = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
    if (n > 1) m = -m;
    return m;
  };
  long long s = 0;
  for (unsigned e = 1; e <= d; ++e)
    if (d % e == 0) s += mobius(d / e) * static_cast<long long>(ipow(q, e));
  return static_cast<std::uint64_t>(s / d);
}

std::vector<UniPoly> monics(const Field& f, unsigned d) {
  const std::uint64_t n = ipow(f.q(), d);
  std::vector<UniPoly> out;
  out.reserve(n);
  for (std::uint64_t c = 0; c < n; ++c) out.push_back(UniPoly::from_code(f, d, c));
  return out;
}

namespace {

struct IrrCacheKey {
  std::uint32_t p;
  std::vector<std::uint32_t> modulus;
  unsigned d;
  friend bool operator<(const IrrCacheKey& a, const IrrCacheKey& b) {
    return std::tie(a.p, a.modulus, a.d) < std::tie(b.p, b.modulus, b.d);
  }
};

std::vector<UniPoly> compute_irreducibles(const Field& f, unsigned d) {
  std::vector<UniPoly> out;
  const std::uint64_t n = ipow(f.q(), d);
  if (d == 1) {
    for (std::uint64_t c = 0; c < n; ++c) out.push_back(UniPoly::from_code(f, 1, c));
    return out;
  }
  // Sieve out products of a lower-degree irreducible with any monic cofactor.
  std::vector<char> composite(n, 0);
  for (unsigned e = 1; 2 * e <= d; ++e) {
    const auto small = irreducibles(f, e);
    const std::uint64_t m = ipow(f.q(), d - e);
    for (std::uint64_t c = 0; c < m; ++c) {
      const UniPoly b = UniPoly::from_code(f, d - e, c);
      for (const auto& P : small) composite[(P * b).code()] = 1;
    }
  }
  for (std::uint64_t c = 0; c < n; ++c)
    if (!composite[c]) out.push_back(UniPoly::from_code(f, d, c));
  return out;
}

}  // namespace

std::vector<UniPoly> irreducibles(const Field& f, unsigned d) {
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "irreducibles: degree must be positive");
  static std::mutex mu;
  static std::map<IrrCacheKey, std::vector<UniPoly>> cache;
  IrrCacheKey key{f.p(), f.modulus(), d};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) {
      // Re-home the cached polynomials onto the caller's field handle.
      std::vector<UniPoly> out;
      out.reserve(it->second.size());
      for (const auto& P : it->second) out.emplace_back(f, P.coeffs());
      return out;
    }
  }
  auto out = compute_irreducibles(f, d);
  // Code order equals the ascending coefficient-tuple order only up to reversal.
  std::sort(out.begin(), out.end());
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::move(key), out);
  return out;
}

std::vector<Factor> poly_factor(const UniPoly& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot factor the zero polynomial");
  std::vector<Factor> out;
  UniPoly rest = a.monic();
  for (unsigned e = 1; 2 * e <= static_cast<unsigned>(std::max(rest.degree(), 0)); ++e) {
    for (const auto& P : irreducibles(a.field(), e)) {
      if (2 * e > static_cast<unsigned>(rest.degree())) break;
      unsigned m = 0;
      for (;;) {
        auto [q, r] = UniPoly::divmod(rest, P);
        if (!r.is_zero()) break;
        rest = std::move(q);
        ++m;
      }
      if (m) out.push_back({P, m});
    }
  }
  if (rest.degree() > 0) {
    auto it = std::find_if(out.begin(), out.end(), [&](const Factor& fa) { return fa.prime == rest; });
    if (it != out.end())
      ++it->mult;
    else
      out.push_back({rest, 1});
  }
  std::sort(out.begin(), out.end(), [](const Factor& x, const Factor& y) { return x.prime < y.prime; });
  return out;
}

}  // namespace ffl

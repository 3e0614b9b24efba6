#include "ffl/field.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "ffl/error.hpp"

namespace ffl {
namespace {

using Digits = std::vector<std::uint64_t>;

void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // p prime; Fermat.
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// Remainder of a modulo the monic-or-not nonzero b over F_p.
Digits fp_mod(Digits a, const Digits& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + p - c * b[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

Digits fp_mulmod(const Digits& a, const Digits& b, const Digits& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Digits r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return fp_mod(std::move(r), m, p);
}

Digits fp_gcd(Digits a, Digits b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Digits r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod m
Digits fp_frob_power(const Digits& m, std::uint64_t p, unsigned k) {
  Digits x = fp_mod(Digits{0, 1}, m, p);
  for (unsigned i = 0; i < k; ++i) {
    Digits r{1}, base = x;
    std::uint64_t e = p;
    while (e) {
      if (e & 1) r = fp_mulmod(r, base, m, p);
      base = fp_mulmod(base, base, m, p);
      e >>= 1;
    }
    x = std::move(r);
  }
  return x;
}

// Rabin's test for a monic polynomial of degree l over F_p.
bool fp_irreducible(const Digits& m, std::uint64_t p) {
  const unsigned l = static_cast<unsigned>(m.size() - 1);
  if (l == 0) return false;
  if (l == 1) return true;
  auto minus_x = [&](Digits a) {
    if (a.size() < 2) a.resize(2, 0);
    a[1] = (a[1] + p - 1) % p;
    trim(a);
    return a;
  };
  if (!minus_x(fp_frob_power(m, p, l)).empty()) return false;
  for (unsigned r = 2; r <= l; ++r) {
    if (l % r != 0 || !is_prime(r)) continue;
    Digits g = fp_gcd(m, minus_x(fp_frob_power(m, p, l / r)), p);
    if (g.size() != 1) return false;
  }
  return true;
}

// Conway polynomials, ascending digits.
const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>& default_moduli() {
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> table = {
      {{2, 2}, {1, 1, 1}},       {{2, 3}, {1, 1, 0, 1}},          {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}}, {{2, 6}, {1, 1, 0, 1, 1, 0, 1}}, {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},    {{5, 2}, {2, 4, 1}},             {{7, 2}, {3, 6, 1}},
  };
  return table;
}

constexpr std::uint32_t kTableLimit = 256;

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::make(std::uint32_t p, std::uint32_t l, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrimeP, std::to_string(p) + " is not prime");
  if (l == 0) throw Error(ErrorKind::InvalidArgument, "l must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < l; ++i) {
    q *= p;
    if (q > (1ull << 31)) throw Error(ErrorKind::InvalidArgument, "field too large");
  }
  std::vector<std::uint32_t> mod;
  if (modulus) {
    mod = *modulus;
  } else if (l == 1) {
    mod = {0, 1};
  } else {
    auto it = default_moduli().find({p, l});
    if (it == default_moduli().end())
      throw Error(ErrorKind::NoDefaultModulus,
                  "no built-in modulus for p=" + std::to_string(p) + ", l=" + std::to_string(l));
    mod = it->second;
  }
  if (mod.size() != l + 1 || mod.back() != 1)
    throw Error(ErrorKind::InvalidArgument, "modulus must be monic of degree l");
  for (auto d : mod)
    if (d >= p) throw Error(ErrorKind::InvalidArgument, "modulus digit out of range");
  Digits m(mod.begin(), mod.end());
  if (!fp_irreducible(m, p)) throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over F_p");

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->l = l;
  impl->q = static_cast<std::uint32_t>(q);
  impl->modulus = std::move(mod);
  Field tmp{impl};
  if (l > 1 && q <= kTableLimit) {
    const auto Q = impl->q;
    impl->add_tab.resize(Q * Q);
    impl->mul_tab.resize(Q * Q);
    impl->neg_tab.resize(Q);
    impl->inv_tab.resize(Q, 0);
    for (std::uint32_t a = 0; a < Q; ++a) {
      impl->neg_tab[a] = tmp.slow_neg({a}).v;
      for (std::uint32_t b = 0; b < Q; ++b) {
        impl->add_tab[a * Q + b] = tmp.slow_add({a}, {b}).v;
        impl->mul_tab[a * Q + b] = tmp.slow_mul({a}, {b}).v;
      }
    }
    for (std::uint32_t a = 1; a < Q; ++a)
      for (std::uint32_t b = 1; b < Q; ++b)
        if (impl->mul_tab[a * Q + b] == 1) impl->inv_tab[a] = b;
    impl->tabled = true;
  }
  return Field{std::move(impl)};
}

FqElem Field::from_int(long long n) const noexcept {
  long long r = n % static_cast<long long>(impl_->p);
  if (r < 0) r += impl_->p;
  return {static_cast<std::uint32_t>(r)};
}

FqElem Field::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() > impl_->l) throw Error(ErrorKind::InvalidArgument, "too many digits for F_q element");
  std::uint32_t v = 0, base = 1;
  for (auto d : digits) {
    if (d >= impl_->p) throw Error(ErrorKind::InvalidArgument, "digit out of range");
    v += d * base;
    base *= impl_->p;
  }
  return {v};
}

std::vector<std::uint32_t> Field::digits(FqElem a) const {
  std::vector<std::uint32_t> d(impl_->l);
  for (auto& x : d) {
    x = a.v % impl_->p;
    a.v /= impl_->p;
  }
  return d;
}

FqElem Field::generator() const {
  if (impl_->l == 1) {
    // Root of the modulus u + m_0.
    return neg(from_int(impl_->modulus[0]));
  }
  return {impl_->p};
}

std::vector<FqElem> Field::elements() const {
  std::vector<FqElem> out(impl_->q);
  for (std::uint32_t i = 0; i < impl_->q; ++i) out[i] = {i};
  return out;
}

FqElem Field::inv(FqElem a) const {
  if (a.v == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in F_q");
  const Impl& f = *impl_;
  if (f.l == 1) return {static_cast<std::uint32_t>(inv_mod(a.v, f.p))};
  if (f.tabled) return {f.inv_tab[a.v]};
  return pow(a, f.q - 2);
}

FqElem Field::pow(FqElem a, std::uint64_t e) const noexcept {
  FqElem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FqElem Field::slow_add(FqElem a, FqElem b) const noexcept {
  const auto p = impl_->p;
  std::uint32_t v = 0, base = 1;
  for (std::uint32_t i = 0; i < impl_->l; ++i) {
    v += ((a.v % p + b.v % p) % p) * base;
    a.v /= p;
    b.v /= p;
    base *= p;
  }
  return {v};
}

FqElem Field::slow_neg(FqElem a) const noexcept {
  const auto p = impl_->p;
  std::uint32_t v = 0, base = 1;
  for (std::uint32_t i = 0; i < impl_->l; ++i) {
    v += ((p - a.v % p) % p) * base;
    a.v /= p;
    base *= p;
  }
  return {v};
}

FqElem Field::slow_mul(FqElem a, FqElem b) const noexcept {
  const std::uint64_t p = impl_->p;
  Digits da(impl_->l), db(impl_->l);
  for (std::uint32_t i = 0; i < impl_->l; ++i) {
    da[i] = a.v % p;
    a.v /= static_cast<std::uint32_t>(p);
    db[i] = b.v % p;
    b.v /= static_cast<std::uint32_t>(p);
  }
  Digits m(impl_->modulus.begin(), impl_->modulus.end());
  trim(da);
  trim(db);
  Digits r = fp_mulmod(da, db, m, p);
  std::uint32_t v = 0, base = 1;
  for (auto d : r) {
    v += static_cast<std::uint32_t>(d) * base;
    base *= static_cast<std::uint32_t>(p);
  }
  return {v};
}

}  // namespace ffl

#include "ffl/tate.hpp"

#include <algorithm>
#include <sstream>

#include "ffl/error.hpp"

namespace ffl {

TateSeries TateSeries::one(const Field& f, const Vars& zvars) {
  TateSeries r(f, zvars);
  r.terms_.emplace(0, MultiPoly::constant(f, zvars, f.one()));
  return r;
}

TateSeries TateSeries::from_unipoly(const UniPoly& a, const Vars& zvars) {
  TateSeries r(a.field(), zvars);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    if (a.coeffs()[i].v) r.terms_.emplace(static_cast<long>(i), MultiPoly::constant(a.field(), zvars, a.coeffs()[i]));
  return r;
}

TateSeries TateSeries::theta_power(const Field& f, const Vars& zvars, long e) {
  TateSeries r(f, zvars);
  r.terms_.emplace(e, MultiPoly::constant(f, zvars, f.one()));
  return r;
}

long TateSeries::top() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "valuation of a zero series");
  return terms_.rbegin()->first;
}

MultiPoly TateSeries::coeff(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? MultiPoly(field_, vars_) : it->second;
}

void TateSeries::add_term(long e, const MultiPoly& c) {
  if (e < -prec_ || c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TateSeries TateSeries::truncate(long N) const {
  if (N < 0) throw Error(ErrorKind::NegativePrecision, "negative precision");
  TateSeries r(field_, vars_, std::min(N, prec_));
  for (auto it = terms_.lower_bound(-r.prec_); it != terms_.end(); ++it) r.terms_.insert(*it);
  return r;
}

TateSeries operator+(const TateSeries& a, const TateSeries& b) {
  TateSeries r(a.field_, a.vars_, std::min(a.prec_, b.prec_));
  for (auto it = a.terms_.lower_bound(-r.prec_); it != a.terms_.end(); ++it) r.terms_.insert(*it);
  for (auto it = b.terms_.lower_bound(-r.prec_); it != b.terms_.end(); ++it) r.add_term(it->first, it->second);
  return r;
}

TateSeries TateSeries::operator-() const {
  TateSeries r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

TateSeries operator-(const TateSeries& a, const TateSeries& b) { return a + (-b); }

TateSeries operator*(const TateSeries& a, const TateSeries& b) {
  // An error below theta^{-N1} in a is multiplied by at most theta^{top(b)}.
  long prec = TateSeries::kExact;
  const bool az = a.is_zero(), bz = b.is_zero();
  if (az && a.is_exact()) return TateSeries(a.field_, a.vars_);
  if (bz && b.is_exact()) return TateSeries(a.field_, a.vars_);
  if (!a.is_exact()) prec = std::min(prec, bz ? a.prec_ : a.prec_ - b.top());
  if (!b.is_exact()) prec = std::min(prec, az ? b.prec_ : b.prec_ - a.top());
  if (az && bz) prec = std::min(a.prec_, b.prec_);
  TateSeries r(a.field_, a.vars_, prec);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      if (ea + eb < -prec) continue;
      r.add_term(ea + eb, ca * cb);
    }
  return r;
}

TateSeries TateSeries::scale(const MultiPoly& c) const {
  TateSeries r(field_, vars_, prec_);
  if (c.is_zero()) return r;
  for (const auto& [e, x] : terms_) {
    MultiPoly y = x * c;
    if (!y.is_zero()) r.terms_.emplace(e, std::move(y));
  }
  return r;
}

TateSeries TateSeries::shift(long e) const {
  TateSeries r(field_, vars_, is_exact() ? kExact : prec_ - e);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k + e, c);
  return r;
}

bool TateSeries::agrees_with(const TateSeries& b, long N) const {
  if (N > prec_ || N > b.prec_) throw Error(ErrorKind::InvalidArgument, "comparison beyond known precision");
  auto ia = terms_.lower_bound(-N);
  auto ib = b.terms_.lower_bound(-N);
  return std::equal(ia, terms_.end(), ib, b.terms_.end());
}

std::string TateSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.to_string() << ")*theta^" << it->first;
  }
  if (first) os << "0";
  if (!is_exact()) os << " + O(theta^" << -(prec_ + 1) << ")";
  return os.str();
}

std::vector<FqElem> laurent_inverse_coeffs(const UniPoly& a, long N) {
  if (!a.is_monic()) throw Error(ErrorKind::NotMonic, "laurent inverse needs a monic polynomial");
  if (N < 0) throw Error(ErrorKind::NegativePrecision, "negative precision");
  const Field& F = a.field();
  const long d = a.degree();
  const long K = N - d;
  if (K < 0) return {};
  std::vector<FqElem> u(static_cast<std::size_t>(K + 1));
  const auto& c = a.coeffs();
  u[0] = F.one();
  for (long k = 1; k <= K; ++k) {
    FqElem s{};
    for (long i = 1; i <= std::min(k, d); ++i) {
      const FqElem b = c[static_cast<std::size_t>(d - i)];
      if (b.v) s = F.add(s, F.mul(b, u[static_cast<std::size_t>(k - i)]));
    }
    u[static_cast<std::size_t>(k)] = F.neg(s);
  }
  return u;
}

TateSeries laurent_invert_monic(const UniPoly& a, long N, const Vars& zvars) {
  const auto u = laurent_inverse_coeffs(a, N);
  const Field& F = a.field();
  TateSeries r(F, zvars, N);
  const long d = a.degree();
  for (std::size_t k = 0; k < u.size(); ++k)
    if (u[k].v) r.add_term(-d - static_cast<long>(k), MultiPoly::constant(F, zvars, u[k]));
  return r;
}

}  // namespace ffl

#include "ffl/ratfunc.hpp"

#include "ffl/error.hpp"

namespace ffl {

RatFunc::RatFunc(UniPoly num) : den_(UniPoly::one(num.field())) { num_ = std::move(num); }

RatFunc::RatFunc(UniPoly num, UniPoly den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  const Field F = den.field();
  if (num.is_zero()) {
    num_ = UniPoly(F);
    den_ = UniPoly::one(F);
    return;
  }
  UniPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = num.div_exact(g);
    den = den.div_exact(g);
  }
  FqElem li = F.inv(den.lead());
  num_ = num.scale(li);
  den_ = den.scale(li);
}

long RatFunc::ord() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "ord of zero");
  return den_.degree() - num_.degree();
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  if (a.is_polynomial()) return RatFunc(a.num_ * b.den_ + b.num_, b.den_, true);
  if (b.is_polynomial()) return RatFunc(a.num_ + b.num_ * a.den_, a.den_, true);
  UniPoly g = gcd(a.den_, b.den_);
  UniPoly ad = a.den_.div_exact(g), bd = b.den_.div_exact(g);
  return RatFunc(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc(a.field());
  // Cross-cancel to keep operands small.
  UniPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
  UniPoly n1 = a.num_.div_exact(g1), d2 = b.den_.div_exact(g1);
  UniPoly n2 = b.num_.div_exact(g2), d1 = a.den_.div_exact(g2);
  UniPoly den = d1 * d2;
  UniPoly num = n1 * n2;
  FqElem li = den.field().inv(den.lead());
  return RatFunc(num.scale(li), den.scale(li), true);
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in K");
  FqElem li = field().inv(num_.lead());
  return RatFunc(den_.scale(li), num_.scale(li), true);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace ffl

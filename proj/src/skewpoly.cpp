#include "ffl/skewpoly.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace ffl {

SkewPoly<UniPoly> skew_over_A(const Field& f, std::vector<UniPoly> coeffs) {
  return SkewPoly<UniPoly>(UniPoly(f), [](const UniPoly& c, unsigned i) { return c.tau(i); }, std::move(coeffs));
}

SkewPoly<RatFunc> skew_over_K(const Field& f, std::vector<RatFunc> coeffs) {
  return SkewPoly<RatFunc>(RatFunc(f), [](const RatFunc& c, unsigned i) { return c.tau(i); }, std::move(coeffs));
}

SkewPoly<MultiPoly> skew_over_multi(const Field& f, const Vars& vars, const std::string& theta,
                                    std::vector<MultiPoly> coeffs) {
  const std::size_t ti = vars.index(theta);
  const std::uint64_t q = f.q();
  return SkewPoly<MultiPoly>(
      MultiPoly(f, vars), [ti, q](const MultiPoly& c, unsigned i) { return c.inflate(ti, ipow(q, i)); },
      std::move(coeffs));
}

SkewPoly<MultiPoly> skew_over_multi_mod(const Field& f, const Vars& vars, const UniPoly& modulus,
                                        const std::string& theta, std::vector<MultiPoly> coeffs) {
  const std::size_t ti = vars.index(theta);
  // theta^(e q^i) mod f, memoized per (e, i); shared by copies of the ring.
  struct Memo {
    std::mutex mu;
    std::map<std::pair<std::uint32_t, unsigned>, UniPoly> table;
  };
  auto memo = std::make_shared<Memo>();
  const UniPoly m = modulus;
  const Field F = f;
  auto tau = [ti, memo, m, F](const MultiPoly& c, unsigned i) {
    std::vector<MultiPoly::Term> out;
    for (const auto& t : c.terms()) {
      UniPoly img;
      {
        std::lock_guard<std::mutex> lock(memo->mu);
        auto key = std::make_pair(t.e[ti], i);
        auto it = memo->table.find(key);
        if (it == memo->table.end()) {
          UniPoly x = powmod(UniPoly::theta(F), t.e[ti], m);
          it = memo->table.emplace(key, frobmod(x, i, m)).first;
        }
        img = it->second;
      }
      for (std::size_t k = 0; k < img.coeffs().size(); ++k) {
        if (img.coeffs()[k].v == 0) continue;
        MultiPoly::Term y = t;
        y.e[ti] = static_cast<std::uint32_t>(k);
        y.c = F.mul(t.c, img.coeffs()[k]);
        out.push_back(std::move(y));
      }
    }
    return MultiPoly::from_terms(F, c.vars(), std::move(out));
  };
  auto norm = [ti, m](const MultiPoly& c) { return c.reduce_mod(ti, m); };
  return SkewPoly<MultiPoly>(MultiPoly(f, vars), std::move(tau), std::move(coeffs), std::move(norm));
}

}  // namespace ffl

#include "ffl/codec.hpp"

#include "ffl/error.hpp"

namespace ffl {

Json to_json(const Field& F, FqElem a) {
  if (F.l() == 1) return a.v;
  return F.digits(a);
}

Json to_json(const Field& F) { return Json{{"p", F.p()}, {"l", F.l()}, {"modulus", F.modulus()}}; }

Json to_json(const UniPoly& a) {
  Json j = Json::array();
  for (auto c : a.coeffs()) j.push_back(to_json(a.field(), c));
  return j;
}

Json to_json(const MultiPoly& P) {
  Json terms = Json::array();
  for (const auto& t : P.terms())
    terms.push_back(Json{{"exps", std::vector<std::uint32_t>(t.e.begin(), t.e.end())}, {"coeff", to_json(P.field(), t.c)}});
  return Json{{"vars", P.vars().names()}, {"terms", terms}};
}

Json to_json(const RatFunc& c) { return Json{{"num", to_json(c.num())}, {"den", to_json(c.den())}}; }

Json to_json(const KPoly& P) {
  Json terms = Json::array();
  for (const auto& [e, c] : P.terms())
    terms.push_back(Json{{"exps", std::vector<std::uint32_t>(e.begin(), e.end())}, {"coeff", to_json(c)}});
  return Json{{"vars", P.vars().names()}, {"terms", terms}};
}

Json to_json(const TateSeries& s) {
  Json terms = Json::object();
  for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) terms[std::to_string(it->first)] = to_json(it->second);
  Json j;
  j["precision"] = s.is_exact() ? Json(nullptr) : Json(s.precision());
  j["terms"] = terms;
  return j;
}

Json to_json(const FrobeniusData& d) {
  Json e = Json::array(), Df = Json::array();
  for (const auto& x : d.e) e.push_back(to_json(x));
  for (const auto& x : d.Df) Df.push_back(to_json(x));
  const Field& F = d.f.field();
  return Json{{"f", to_json(d.f)}, {"d", d.d}, {"r0", d.r0},
              {"cf", d.r0 >= 1 ? to_json(F, d.cf) : Json(nullptr)}, {"e", e}, {"Df", Df}};
}

Json to_json(const LValueResult& v) {
  Json j{{"series", to_json(v.series)}, {"terms_used", v.terms_used}};
  j["tail_log_q"] = v.tail_log_q ? Json(to_string(*v.tail_log_q)) : Json(nullptr);
  return j;
}

Json to_json(const DrinfeldModule& phi) {
  Json j = Json::array();
  for (unsigned i = 1; i <= phi.rank(); ++i) j.push_back(to_json(phi.coeff(i)));
  return j;
}

Json to_json(const MuTable& mu) {
  Json table = Json::array();
  const Field& F = mu.phi().field();
  for (unsigned k = 0; k <= mu.max_degree(); ++k)
    for (const auto& a : monics(F, k)) table.push_back(Json{{"a", to_json(a)}, {"mu", to_json(mu(a))}});
  return Json{{"deg_max", mu.max_degree()}, {"table", table}};
}

FqElem fq_from_json(const Field& F, const Json& j) {
  if (j.is_number_integer()) return F.from_int(j.get<long long>());
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "F_q element expected, got " + j.dump());
  const auto d = j.get<std::vector<std::uint32_t>>();
  return F.from_digits(d);
}

UniPoly unipoly_from_json(const Field& F, const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "coefficient list expected, got " + j.dump());
  std::vector<FqElem> c;
  for (const auto& x : j) c.push_back(fq_from_json(F, x));
  return UniPoly(F, c);
}

MultiPoly multipoly_from_json(const Field& F, const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
    throw Error(ErrorKind::ParseError, "MultiPoly object expected, got " + j.dump());
  const Vars v(j["vars"].get<std::vector<std::string>>());
  std::vector<MultiPoly::Term> terms;
  for (const auto& t : j["terms"]) {
    const auto e = t.at("exps").get<std::vector<std::uint32_t>>();
    if (e.size() != v.size()) throw Error(ErrorKind::ParseError, "exponent length mismatch in " + t.dump());
    terms.push_back({Exps(e.begin(), e.end()), fq_from_json(F, t.at("coeff"))});
  }
  return MultiPoly::from_terms(F, v, std::move(terms));
}

TateSeries tate_from_json(const Field& F, const Json& j) {
  if (!j.is_object() || !j.contains("terms")) throw Error(ErrorKind::ParseError, "TateSeries object expected");
  const long prec = j.contains("precision") && !j["precision"].is_null() ? j["precision"].get<long>() : TateSeries::kExact;
  Vars zv;
  std::vector<std::pair<long, MultiPoly>> terms;
  for (const auto& [k, v] : j["terms"].items()) {
    terms.emplace_back(std::stol(k), multipoly_from_json(F, v));
    zv = terms.back().second.vars();
  }
  TateSeries s(F, zv, prec);
  for (auto& [e, c] : terms) s.add_term(e, c);
  return s;
}

}  // namespace ffl

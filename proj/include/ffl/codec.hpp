#pragma once

#include "ffl/identities.hpp"

namespace ffl {

// Canonical JSON encodings shared by the CLI and the tests.

Json to_json(const Field& F, FqElem a);
Json to_json(const Field& F);
Json to_json(const UniPoly& a);
Json to_json(const MultiPoly& P);
Json to_json(const RatFunc& c);
Json to_json(const KPoly& P);
/// Exact series carry "precision": null.
Json to_json(const TateSeries& s);
Json to_json(const FrobeniusData& d);
Json to_json(const LValueResult& v);
Json to_json(const DrinfeldModule& phi);
/// {"deg_max": D, "table": [{"a": UniPoly, "mu": UniPoly}, ...]} in degree then code order.
Json to_json(const MuTable& mu);

FqElem fq_from_json(const Field& F, const Json& j);
UniPoly unipoly_from_json(const Field& F, const Json& j);
MultiPoly multipoly_from_json(const Field& F, const Json& j);
TateSeries tate_from_json(const Field& F, const Json& j);

}  // namespace ffl

#pragma once

#include <string>
#include <vector>

#include "ffl/drinfeld.hpp"
#include "ffl/lvalues.hpp"
#include "ffl/multipoly.hpp"
#include "ffl/rational.hpp"

namespace ffl {

/// Polynomial expression over the given variables: integers, `u` (the generator of
/// F_q over F_p), variable names, `+ - * ^`, parentheses. Throws ParseError.
MultiPoly parse_poly(const Field& F, const Vars& vars, const std::string& text);
/// Expression in theta only.
UniPoly parse_unipoly(const Field& F, const std::string& text);
/// Top-level comma separated items of "[a, b, ...]".
std::vector<std::string> parse_list(const std::string& text);
/// "[phi_1, ..., phi_r]".
DrinfeldModule parse_module(const Field& F, const std::string& text);
/// "[d0, ..., dl]" as F_p digits.
std::vector<std::uint32_t> parse_digits(const std::string& text);
/// An integer ("-3") or "[d0,d1,...](r)" meaning that prefix followed by the digit r forever.
PAdicInt parse_padic(unsigned p, const std::string& text);
/// "a" or "a/b".
Rational parse_rational(const std::string& text);

}  // namespace ffl

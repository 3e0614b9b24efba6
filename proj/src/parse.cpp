#include "ffl/parse.hpp"

#include <cctype>
#include <regex>

#include "ffl/error.hpp"

namespace ffl {
namespace {

class Parser {
 public:
  Parser(const Field& F, const Vars& v, const std::string& s) : F_(F), v_(v), s_(s) {}

  MultiPoly run() {
    MultiPoly r = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, what + " at offset " + std::to_string(i_) + " in \"" + s_ + "\"");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly r;
    bool first = true;
    while (true) {
      skip();
      bool neg = false;
      if (first) {
        if (eat('-')) neg = true;
        else eat('+');
      } else if (eat('-')) {
        neg = true;
      } else if (!eat('+')) {
        break;
      }
      MultiPoly t = term();
      if (neg) t = -t;
      r = first ? t : r + t;
      first = false;
    }
    return r;
  }

  MultiPoly term() {
    MultiPoly r = power();
    while (eat('*')) r *= power();
    return r;
  }

  MultiPoly power() {
    MultiPoly b = atom();
    if (eat('^')) {
      skip();
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      if (j == i_) fail("expected a nonnegative integer exponent");
      const unsigned long long e = std::stoull(s_.substr(i_, j - i_));
      i_ = j;
      b = b.pow(e);
    }
    return b;
  }

  MultiPoly atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      MultiPoly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      long long v = 0;
      for (std::size_t k = i_; k < j; ++k) v = (v * 10 + (s_[k] - '0')) % static_cast<long long>(F_.p());
      i_ = j;
      return MultiPoly::constant(F_, v_, F_.from_int(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
      const std::string name = s_.substr(i_, j - i_);
      i_ = j;
      if (name == "u" && !v_.contains("u")) return MultiPoly::constant(F_, v_, F_.generator());
      if (!v_.contains(name)) {
        --i_;
        fail("unknown symbol '" + name + "'");
      }
      return MultiPoly::var(F_, v_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const Field& F_;
  const Vars& v_;
  const std::string& s_;
  std::size_t i_ = 0;
};

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

MultiPoly parse_poly(const Field& F, const Vars& vars, const std::string& text) {
  if (trim(text).empty()) throw Error(ErrorKind::ParseError, "empty expression");
  return Parser(F, vars, text).run();
}

UniPoly parse_unipoly(const Field& F, const std::string& text) {
  const Vars v{"theta"};
  return parse_poly(F, v, text).to_unipoly(0);
}

std::vector<std::string> parse_list(const std::string& text) {
  const std::string s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw Error(ErrorKind::ParseError, "expected a bracketed list, got \"" + text + "\"");
  std::vector<std::string> items;
  int depth = 0;
  std::string cur;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      items.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !items.empty()) items.push_back(trim(cur));
  for (const auto& it : items)
    if (it.empty()) throw Error(ErrorKind::ParseError, "empty list item in \"" + text + "\"");
  return items;
}

DrinfeldModule parse_module(const Field& F, const std::string& text) {
  std::vector<UniPoly> c;
  for (const auto& item : parse_list(text)) c.push_back(parse_unipoly(F, item));
  if (c.empty()) throw Error(ErrorKind::ParseError, "a module needs at least one coefficient");
  return DrinfeldModule::make(F, c);
}

std::vector<std::uint32_t> parse_digits(const std::string& text) {
  std::vector<std::uint32_t> d;
  for (const auto& item : parse_list(text)) {
    if (!std::regex_match(item, std::regex("[0-9]+"))) throw Error(ErrorKind::ParseError, "digit expected, got \"" + item + "\"");
    d.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  return d;
}

PAdicInt parse_padic(unsigned p, const std::string& text) {
  const std::string s = trim(text);
  std::smatch m;
  if (std::regex_match(s, m, std::regex("-?[0-9]+"))) return PAdicInt::from_integer(p, std::stoll(s));
  if (std::regex_match(s, m, std::regex(R"((\[[0-9,\s]*\])\s*\(\s*([0-9]+)\s*\))"))) {
    PAdicInt y;
    y.p = p;
    const std::string list = m[1].str();
    if (trim(list.substr(1, list.size() - 2)).size())
      for (auto d : parse_digits(list)) y.prefix.push_back(d);
    y.repeat = static_cast<unsigned>(std::stoul(m[2].str()));
    for (auto d : y.prefix)
      if (d >= p) throw Error(ErrorKind::ParseError, "digit out of range in \"" + text + "\"");
    if (y.repeat >= p) throw Error(ErrorKind::ParseError, "digit out of range in \"" + text + "\"");
    return y;
  }
  throw Error(ErrorKind::ParseError, "expected an integer or [digits](repeat), got \"" + text + "\"");
}

Rational parse_rational(const std::string& text) {
  const std::string s = trim(text);
  std::smatch m;
  if (!std::regex_match(s, m, std::regex(R"((-?[0-9]+)(?:\s*/\s*([0-9]+))?)")))
    throw Error(ErrorKind::ParseError, "expected a rational number, got \"" + text + "\"");
  const BigInt num(m[1].str());
  const BigInt den = m[2].matched ? BigInt(m[2].str()) : BigInt(1);
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in \"" + text + "\"");
  return Rational(num, den);
}

}  // namespace ffl

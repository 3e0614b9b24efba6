#include "ffl/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "ffl/codec.hpp"
#include "ffl/error.hpp"
#include "ffl/parallel.hpp"
#include "ffl/parse.hpp"

namespace ffl::cli {
namespace {

struct Usage {
  std::string msg;
};

struct Options {
  unsigned p = 0;
  unsigned l = 1;
  std::string modulus;
  std::string phi = "[1]";
  unsigned n = 1;
  long s = 1;
  long prec = 12;
  unsigned deg_max = 6;
  bool deg_given = false;
  std::optional<unsigned> k_max;
  unsigned i_max = 4;
  unsigned slack = 2;
  std::string eps;
  std::string out = "json";
  std::string output;
  std::string f;
  std::string deform = "plain";
  std::string x = "theta";
  std::string y = "-1";
  std::size_t budget = kDefaultTermBudget;
  std::string method = "dirichlet";
};

struct Result {
  Json json;
  std::string text;
  int status = kOk;
};

template <class T, class F>
T flag(const std::string& name, F&& parse) {
  try {
    return parse();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw Usage{"--" + name + ": " + e.what()};
    throw;
  }
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

/// key = value lines become "--key value" tokens.
std::vector<std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Usage{"--config: cannot read " + path};
  std::vector<std::string> tokens;
  std::string line;
  for (unsigned no = 1; std::getline(in, line); ++no) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Usage{"--config: line " + std::to_string(no) + " is not key = value"};
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (val.size() >= 2 && val.front() == '"' && val.back() == '"') val = val.substr(1, val.size() - 2);
    for (auto& c : key)
      if (c == '_') c = '-';
    tokens.push_back("--" + key);
    tokens.push_back(val);
  }
  return tokens;
}

std::string join_text(const std::vector<std::string>& lines) {
  std::string s;
  for (const auto& l : lines) s += l + "\n";
  return s;
}

std::string lvalue_text(const LValueResult& v, bool with_m) {
  std::vector<std::string> lines{"series: " + v.series.to_string(), "terms_used: " + std::to_string(v.terms_used),
                                 "tail_log_q: " + (v.tail_log_q ? to_string(*v.tail_log_q) : std::string("exact"))};
  if (with_m) lines.push_back("m: " + std::to_string(v.m));
  return join_text(lines);
}

Result reports_result(const std::vector<CheckReport>& reports, const std::vector<std::string>& skipped) {
  Result res;
  Json list = Json::array();
  std::vector<std::string> lines;
  bool ok = true;
  for (const auto& r : reports) {
    list.push_back(r.to_json());
    ok = ok && r.pass;
    std::string line = std::string(r.pass ? "PASS " : "FAIL ") + r.name + " " + r.params.dump();
    if (!r.pass) line += " witness " + r.witness.dump();
    lines.push_back(line);
  }
  for (const auto& s : skipped) lines.push_back("SKIP " + s);
  lines.push_back(std::string("verdict: ") + (ok ? "pass" : "fail"));
  res.json = Json{{"reports", list}, {"skipped", skipped}, {"verdict", ok ? "pass" : "fail"}};
  res.text = join_text(lines);
  res.status = ok ? kOk : kCheckFailed;
  return res;
}

bool is_carlitz(const DrinfeldModule& phi) { return phi.rank() == 1 && phi.coeff(1).is_one(); }

class Runner {
 public:
  explicit Runner(const Options& o) : o_(o) {}

  void setup() {
    std::optional<std::vector<std::uint32_t>> mod;
    if (!o_.modulus.empty()) mod = flag<std::vector<std::uint32_t>>("modulus", [&] { return parse_digits(o_.modulus); });
    F_ = Field::make(o_.p, o_.l, mod);
    phi_ = flag<DrinfeldModule>("phi", [&] { return parse_module(F_, o_.phi); });
  }

  Json header(const std::string& command) const {
    return Json{{"command", command}, {"field", to_json(F_)}, {"phi", to_json(phi_)}};
  }

  UniPoly need_f() const {
    if (o_.f.empty()) throw Usage{"--f: required by this command"};
    return flag<UniPoly>("f", [&] { return parse_unipoly(F_, o_.f); });
  }

  Result mu() const {
    const MuTable mu = mu_table(phi_, o_.deg_max);
    Result res{header("mu"), {}};
    res.json.update(to_json(mu));
    std::vector<std::string> lines;
    for (unsigned k = 0; k <= o_.deg_max; ++k)
      for (const auto& a : monics(F_, k)) lines.push_back(a.to_string() + " : " + mu(a).to_string());
    res.text = join_text(lines);
    return res;
  }

  Result frobenius() const {
    const FrobeniusData d = frobenius_data(phi_, need_f());
    Result res{header("frobenius"), {}};
    res.json["data"] = to_json(d);
    std::vector<std::string> lines{"f: " + d.f.to_string(), "d: " + std::to_string(d.d), "r0: " + std::to_string(d.r0)};
    if (d.r0 >= 1) lines.push_back("cf: " + UniPoly::constant(F_, d.cf).to_string());
    for (std::size_t i = 0; i < d.e.size(); ++i) lines.push_back("e" + std::to_string(i + 1) + ": " + d.e[i].to_string());
    for (std::size_t i = 0; i < d.Df.size(); ++i) lines.push_back("Df[" + std::to_string(i) + "]: " + d.Df[i].to_string());
    res.text = join_text(lines);
    return res;
  }

  Result fitting() const {
    const UniPoly f = need_f();
    const Deformation d = flag<Deformation>("deform", [&] { return Deformation::parse(o_.deform); });
    const MultiPoly fit = fitting_ideal(phi_, f, d);
    Result res{header("fitting"), {}};
    res.json["f"] = to_json(f);
    res.json["deformation"] = d.to_string();
    res.json["fitting"] = to_json(fit);
    res.text = fit.to_string() + "\n";
    return res;
  }

  Result lvalue() const {
    if (o_.s < 1) throw Usage{"--s: lvalue needs s >= 1 (use special for s <= 0)"};
    const auto s = static_cast<unsigned>(o_.s);
    LValueResult v;
    if (o_.method == "euler") v = euler_product_truncation(phi_, o_.n, s, o_.deg_max, o_.prec);
    else v = taelman_lvalue(phi_, o_.n, s, o_.prec, o_.deg_given ? std::optional<unsigned>(o_.deg_max) : std::nullopt);
    Result res{header("lvalue"), {}};
    res.json["method"] = o_.method;
    res.json.update(to_json(v));
    res.text = lvalue_text(v, false);
    return res;
  }

  Result special() const {
    if (o_.s > 0) throw Usage{"--s: special needs s <= 0 (use lvalue for s >= 1)"};
    const MuTable mu = mu_table(phi_, special_value_cutoff(phi_, o_.n, o_.s));
    const MultiPoly v = special_value_nonpositive(mu, z_names(o_.n), o_.s);
    Result res{header("special"), {}};
    res.json["s"] = o_.s;
    res.json["value"] = to_json(v);
    res.text = v.to_string() + "\n";
    return res;
  }

  Result goss() const {
    const UniPoly x = flag<UniPoly>("x", [&] { return parse_unipoly(F_, o_.x); });
    const PAdicInt y = flag<PAdicInt>("y", [&] { return parse_padic(F_.p(), o_.y); });
    const Rational eps = o_.eps.empty() ? Rational(-o_.prec) : flag<Rational>("eps", [&] { return parse_rational(o_.eps); });
    const LValueResult v = goss_eval(phi_, o_.n, GossPoint{TateSeries::from_unipoly(x, Vars()), y}, eps);
    Result res{header("goss"), {}};
    res.json["x"] = to_json(x);
    res.json["y"] = y.to_string();
    res.json["eps_log_q"] = to_string(eps);
    res.json.update(to_json(v));
    res.json["m"] = v.m;
    res.text = lvalue_text(v, true);
    return res;
  }

  Result logalg() const {
    const Rational bound = vanishing_bound(phi_, o_.n);
    const unsigned k_max = o_.k_max.value_or(static_cast<unsigned>(floor_q(bound)) + o_.slack);
    const MuTable mu = mu_table(phi_, k_max);
    const WCoefficients W = w_coefficients(mu, o_.n, k_max);
    const auto xvars = z_names(o_.n, "X");
    std::optional<ZCoefficients> Z;
    if (z_term_estimate(mu, o_.n, k_max) <= o_.budget) Z = z_coefficients(mu, o_.n, k_max, xvars, o_.budget);
    const CheckReport report = check_logalg_vanishing(phi_, o_.n, o_.slack, o_.budget);
    Result res{header("logalg"), {}};
    res.json["bound"] = to_string(bound);
    Json w = Json::array(), z = Json::array();
    std::vector<std::string> lines{"bound: " + to_string(bound)};
    for (unsigned k = 0; k <= k_max; ++k) {
      w.push_back(to_json(W.W[k]));
      lines.push_back("W_" + std::to_string(k) + " = " + W.W[k].to_string());
    }
    res.json["W"] = w;
    if (Z) {
      for (unsigned k = 0; k <= k_max; ++k) {
        z.push_back(to_json(Z->Z[k]));
        lines.push_back("Z_" + std::to_string(k) + " = " + Z->Z[k].to_string());
      }
      res.json["Z"] = z;
    } else {
      res.json["Z"] = nullptr;
      lines.push_back("Z: over the term budget");
    }
    res.json["report"] = report.to_json();
    lines.push_back(std::string(report.pass ? "PASS " : "FAIL ") + report.name);
    res.text = join_text(lines);
    res.status = report.pass ? kOk : kCheckFailed;
    return res;
  }

  CheckReport powersum_report() const {
    const unsigned k_max = o_.k_max.value_or(4);
    if (is_carlitz(phi_)) return check_powersum(F_, o_.i_max, k_max);
    return check_powersum(F_, o_.i_max, k_max, &phi_);
  }

  std::vector<CheckReport> fitting_reports() const {
    std::vector<CheckReport> out;
    if (!o_.f.empty()) {
      out.push_back(check_fitting_consistency(phi_, need_f(), o_.n));
      return out;
    }
    const unsigned D = o_.deg_given ? o_.deg_max : 2;
    for (unsigned d = 1; d <= D; ++d)
      for (const auto& f : irreducibles(F_, d)) out.push_back(check_fitting_consistency(phi_, f, o_.n));
    return out;
  }

  Result check(const std::string& which) const {
    std::vector<CheckReport> reports;
    std::vector<std::string> skipped;
    if (which == "degreewise") reports.push_back(check_degreewise_identity(phi_, o_.n, o_.i_max));
    else if (which == "powersum") reports.push_back(powersum_report());
    else if (which == "fitting") reports = fitting_reports();
    else if (which == "logalg") reports.push_back(check_logalg_vanishing(phi_, o_.n, o_.slack, o_.budget));
    else {
      auto attempt = [&](const std::string& name, const std::function<void()>& body) {
        try {
          body();
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NotApplicable) throw;
          skipped.push_back(name);
        }
      };
      attempt("degreewise", [&] { reports.push_back(check_degreewise_identity(phi_, o_.n, o_.i_max)); });
      attempt("unit_regime", [&] { reports.push_back(check_unit_regime(phi_, o_.n, o_.i_max, o_.slack)); });
      attempt("powersum", [&] { reports.push_back(powersum_report()); });
      for (auto& r : fitting_reports()) reports.push_back(std::move(r));
      reports.push_back(check_logalg_vanishing(phi_, o_.n, o_.slack, o_.budget));
    }
    Result res = reports_result(reports, skipped);
    Json j = header("check " + which);
    j.update(res.json);
    res.json = j;
    return res;
  }

 private:
  const Options& o_;
  Field F_;
  DrinfeldModule phi_;
};

void apply_threads() {
  const char* env = std::getenv("FFL_THREADS");
  if (!env || !*env) return;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 1024) throw Usage{"FFL_THREADS: expected an integer in [1, 1024], got \"" + std::string(env) + "\""};
  set_thread_count(static_cast<unsigned>(v));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations with Drinfeld modules over F_q[theta]", "ffl"};
  app.fallthrough();
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  std::string config;
  app.add_option("--config", config, "file of key = value lines mirroring the flags");
  app.add_option("--p", o.p, "characteristic")->required();
  app.add_option("--l", o.l, "degree of F_q over F_p");
  app.add_option("--modulus", o.modulus, "[d0,...,dl] ascending F_p digits of the modulus");
  app.add_option("--phi", o.phi, "[phi_1, ..., phi_r] as theta-expressions");
  app.add_option("--n", o.n, "number of z-variables");
  app.add_option("--s", o.s, "exponent s");
  app.add_option("--prec", o.prec, "theta-precision N")->check(CLI::NonNegativeNumber);
  auto* deg = app.add_option("--deg-max", o.deg_max, "degree cap D");
  app.add_option("--k-max", o.k_max, "largest k");
  app.add_option("--i-max", o.i_max, "largest i");
  app.add_option("--slack", o.slack, "checked degrees beyond the vanishing bound");
  app.add_option("--eps", o.eps, "target accuracy as a log_q exponent, e.g. -10");
  app.add_option("--out", o.out, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", o.output, "write the result to this file");
  app.add_option("--f", o.f, "monic irreducible f as a theta-expression");
  app.add_option("--deform", o.deform, "plain | z^m | canonical(n) | canonical-t(n)");
  app.add_option("--x", o.x, "Goss point x as a theta-expression");
  app.add_option("--y", o.y, "p-adic y: an integer or [d0,...](repeat)");
  app.add_option("--budget", o.budget, "term budget for the X-side sums");
  app.add_option("--method", o.method, "lvalue method: dirichlet or euler")->check(CLI::IsMember({"dirichlet", "euler"}));

  std::string command;
  for (const char* name : {"mu", "fitting", "frobenius", "lvalue", "special", "goss", "logalg"})
    app.add_subcommand(name)->callback([&command, name] { command = name; });
  auto* chk = app.add_subcommand("check", "run identity checks");
  chk->require_subcommand(1);
  for (const char* name : {"degreewise", "powersum", "fitting", "logalg", "all"})
    chk->add_subcommand(name)->callback([&command, name] { command = std::string("check ") + name; });

  try {
    apply_threads();
    std::vector<std::string> tokens;
    for (std::size_t i = 0; i < args.size(); ++i)
      if (args[i] == "--config" && i + 1 < args.size()) {
        tokens = read_config(args[i + 1]);
        break;
      } else if (args[i].rfind("--config=", 0) == 0) {
        tokens = read_config(args[i].substr(9));
        break;
      }
    tokens.insert(tokens.end(), args.begin(), args.end());
    // CLI11 consumes the vector from the back.
    std::vector<std::string> rev(tokens.rbegin(), tokens.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Usage& u) {
    err << "usage error: " << u.msg << "\n";
    return kUsage;
  }
  o.deg_given = deg->count() > 0;

  Result res;
  try {
    Runner r(o);
    r.setup();
    if (command == "mu") res = r.mu();
    else if (command == "frobenius") res = r.frobenius();
    else if (command == "fitting") res = r.fitting();
    else if (command == "lvalue") res = r.lvalue();
    else if (command == "special") res = r.special();
    else if (command == "goss") res = r.goss();
    else if (command == "logalg") res = r.logalg();
    else res = r.check(command.substr(6));
  } catch (const Usage& u) {
    err << "usage error: " << u.msg << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kComputation;
  }

  const std::string body = o.out == "text" ? res.text : res.json.dump(2) + "\n";
  if (o.output.empty()) {
    out << body;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) {
      err << "usage error: --output: cannot write " << o.output << "\n";
      return kUsage;
    }
    f << body;
  }
  return res.status;
}

}  // namespace ffl::cli

#include "pairzeta/cli.hpp"

#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "pairzeta/errors.hpp"
#include "pairzeta/motivic.hpp"
#include "pairzeta/nazeta.hpp"
#include "pairzeta/verify.hpp"
#include "pairzeta/wallcross.hpp"

namespace pairzeta {

namespace {

using Json = nlohmann::ordered_json;

struct CurveOptions {
  int genus = 0;
  std::vector<CLI::Option*> symbolic;  // one per subcommand
  std::string symbolic_value;
  std::string numerator;
  std::string q_binding;  // optional numeric value for q
};

struct Options {
  CurveOptions curve;
  std::string format = "json";
  std::int64_t rank = 1;
  std::int64_t degree = 0;
  std::string tau;
  std::string method;
  bool all_methods = false;
  std::int64_t terms = 5;
  std::int64_t max_rank = 3;
  bool closed_form = false;
  std::string check;
  std::string suite = "all";
  std::uint64_t seed = 7;
  bool serial = false;
};

void add_curve_options(CLI::App* cmd, CurveOptions& c) {
  cmd->add_option("--genus", c.genus, "genus g >= 0")->check(CLI::Range(0, 6));
  c.symbolic.push_back(cmd->add_option("--symbolic", c.symbolic_value, "fresh indeterminates c1..cg (optional true/false)")
                   ->expected(0, 1));
  cmd->add_option("--numerator", c.numerator, "comma-separated a_1..a_g in the scalar grammar");
  cmd->add_option("--q", c.q_binding, "also report values at this numeric q");
}

bool parse_bool(const std::string& text) {
  if (text.empty() || text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ParseError("expected true or false, got '" + text + "'");
}

Curve make_curve(const CurveOptions& c) {
  bool symbolic_given = false;
  for (const auto* o : c.symbolic) symbolic_given = symbolic_given || o->count() > 0;
  const bool symbolic = symbolic_given && parse_bool(c.symbolic_value);
  if (!c.numerator.empty()) {
    if (symbolic) throw ParseError("--symbolic and --numerator are exclusive");
    std::vector<ScalarValue> coeffs;
    std::string rest = c.numerator;
    for (std::size_t pos; !rest.empty();) {
      pos = rest.find(',');
      coeffs.push_back(parse_scalar(rest.substr(0, pos)));
      rest = pos == std::string::npos ? std::string() : rest.substr(pos + 1);
    }
    return Curve::numeric(c.genus, std::move(coeffs));
  }
  if (symbolic_given && !symbolic) {
    if (c.genus > 0) throw ParseError("a numeric curve of positive genus needs --numerator");
    return Curve::numeric(0, {});
  }
  return Curve::symbolic(c.genus);
}

std::optional<BigRational> q_value(const CurveOptions& c) {
  if (c.q_binding.empty()) return std::nullopt;
  return parse_rational(c.q_binding);
}

Json curve_json(const Curve& c) {
  Json j;
  j["genus"] = c.genus();
  j["mode"] = c.mode() == CurveMode::symbolic ? "symbolic" : "numeric";
  j["numerator"] = numerator_polynomial(c).to_string();
  return j;
}

std::string at_q(const ScalarValue& v, const BigRational& q) { return to_string(scalar_eval(v, {{"q", q}})); }

struct Output {
  Json query;
  Json result;
  Json checks = Json::object();
};

int emit(const Output& o, const std::string& format, std::ostream& out) {
  bool ok = true;
  for (const auto& [name, v] : o.checks.items()) ok = ok && v.get<bool>();
  if (format == "text") {
    const Json& value = o.result["value"];
    if (value.is_array()) {
      for (const auto& x : value) out << x.get<std::string>() << '\n';
    } else {
      out << value.get<std::string>() << '\n';
    }
    for (const auto& [name, v] : o.checks.items()) out << name << ": " << (v.get<bool>() ? "true" : "false") << '\n';
  } else {
    Json j;
    j["query"] = o.query;
    j["result"] = o.result;
    j["checks"] = o.checks;
    out << j.dump(2) << '\n';
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_curve_info(const Options& opt, std::ostream& out) {
  Curve c = make_curve(opt.curve);
  Output o;
  o.query = {{"command", "curve-info"}, {"curve", curve_json(c)}, {"terms", opt.terms}, {"max_rank", opt.max_rank}};
  o.result["kind"] = "rational_function";
  o.result["value"] = zeta(c).to_string();
  o.result["zeta_hat"] = zeta_hat(c).to_string();
  o.result["jacobian"] = jacobian_class(c).to_string();
  Json sym = Json::array(), b = Json::array();
  for (std::int64_t n = 0; n <= opt.terms; ++n) sym.push_back(sym_power(c, n).to_string());
  for (std::int64_t r = 1; r <= opt.max_rank; ++r) b.push_back(b_r(c, r).to_string());
  o.result["symmetric_powers"] = sym;
  o.result["b"] = b;
  if (auto q = q_value(opt.curve)) {
    Json vals = Json::array();
    for (std::int64_t n = 0; n <= opt.terms; ++n) vals.push_back(at_q(sym_power(c, n), *q));
    o.result["symmetric_powers_at_q"] = vals;
  }
  o.checks["functional_equation"] = zeta_hat(c).invert_t(2) == zeta_hat(c);
  o.checks["numerator_degree_2g"] = numerator_polynomial(c).polynomial_degree() == 2 * c.genus();
  return emit(o, opt.format, out);
}

int cmd_betti(const Options& opt, std::ostream& out) {
  Curve c = make_curve(opt.curve);
  if (opt.rank < 1) throw ParseError("--rank must be at least 1");
  ScalarValue v = beta(c, {opt.rank, opt.degree});
  Output o;
  o.query = {{"command", "betti"}, {"curve", curve_json(c)}, {"rank", opt.rank}, {"degree", opt.degree}};
  o.result["kind"] = "scalar";
  o.result["value"] = v.to_string();
  if (auto q = q_value(opt.curve)) o.result["value_at_q"] = at_q(v, *q);
  o.checks["q_integral"] = is_q_integral(v);
  return emit(o, opt.format, out);
}

int cmd_pairs(const Options& opt, std::ostream& out, std::ostream& err) {
  Curve c = make_curve(opt.curve);
  if (opt.rank < 1) throw ParseError("--rank must be at least 1");
  if (opt.tau.empty()) throw ParseError("--tau is required");
  PairQuery q{opt.rank, opt.degree, parse_rational(opt.tau)};
  PairMethod method = opt.rank >= 2 ? PairMethod::lemma : PairMethod::product;
  if (!opt.method.empty()) {
    auto m = parse_pair_method(opt.method);
    if (!m) throw ParseError("unknown method '" + opt.method + "'");
    method = *m;
  }
  if (method != PairMethod::product && q.r < 2) throw ParseError("method " + opt.method + " needs rank >= 2");

  Output o;
  o.query = {{"command", "pairs"}, {"curve", curve_json(c)}, {"rank", q.r},     {"degree", q.d},
             {"tau", to_string(q.tau)}, {"method", opt.all_methods ? "all" : to_string(method)}};
  const bool generic = q.r >= 2 && is_generic(q.tau, q.r, q.d);
  o.result["kind"] = "scalar";
  ScalarValue value;
  if (opt.all_methods) {
    Json per = Json::object();
    std::optional<ScalarValue> first;
    bool agree = true;
    for (auto m : applicable_methods(q)) {
      err << "computing " << to_string(m) << " route\n";
      ScalarValue v = f_tau(c, q, m);
      per[to_string(m)] = v.to_string();
      if (!first) first = v;
      agree = agree && v == *first;
    }
    value = *first;
    o.result["routes"] = per;
    o.checks["routes_agree"] = agree;
  } else {
    value = f_tau(c, q, method);  // throws NonGenericTauError for explicit on walls
  }
  o.result["value"] = value.to_string();
  if (generic) o.result["motive"] = pairs_moduli_motive(c, q).to_string();
  if (auto qv = q_value(opt.curve)) {
    o.result["value_at_q"] = at_q(value, *qv);
    if (generic) o.result["motive_at_q"] = at_q(pairs_moduli_motive(c, q), *qv);
  }
  o.checks["q_integral"] = is_q_integral(value);
  return emit(o, opt.format, out);
}

int cmd_zeta_r(const Options& opt, std::ostream& out) {
  Curve c = make_curve(opt.curve);
  if (opt.rank < 1) throw ParseError("--rank must be at least 1");
  if (opt.terms < 0) throw ParseError("--terms must be non-negative");
  if (!opt.check.empty() && opt.check != "all") throw ParseError("--check accepts 'all'");
  const Exec exec = opt.serial ? Exec::serial : Exec::parallel;
  Output o;
  o.query = {{"command", "zeta-r"}, {"curve", curve_json(c)}, {"rank", opt.rank}, {"terms", opt.terms}};
  o.result["kind"] = "series";
  Json coeffs = Json::array();
  std::vector<ScalarValue> series;
  if (opt.check == "all") {
    ZetaResult z = zeta_r(c, opt.rank, opt.terms, exec);
    series = z.series;
    for (const auto& [name, ok] : z.checks) o.checks[name] = ok;
  } else {
    series = zeta_r_series(c, opt.rank, opt.terms, exec);
  }
  for (const auto& x : series) coeffs.push_back(x.to_string());
  o.result["value"] = coeffs;
  if (opt.closed_form) {
    o.result["closed_form"] = zeta_r_closed(c, opt.rank).to_string();
    o.result["numerator"] = numerator_P(c, opt.rank).to_string();
  }
  if (auto q = q_value(opt.curve)) {
    Json vals = Json::array();
    for (const auto& x : series) vals.push_back(at_q(x, *q));
    o.result["value_at_q"] = vals;
  }
  return emit(o, opt.format, out);
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  if (!verify::is_suite(opt.suite)) throw ParseError("unknown suite '" + opt.suite + "'");
  const Exec exec = opt.serial ? Exec::serial : Exec::parallel;
  auto report = verify::run(opt.suite, opt.seed, exec, &err);
  Output o;
  o.query = {{"command", "verify"}, {"suite", opt.suite}, {"seed", opt.seed}};
  o.result["kind"] = "scalar";
  Json failures = Json::array();
  for (const auto& c : report) {
    o.checks[c.suite + "." + c.name] = c.passed;
    if (!c.passed) failures.push_back({{"check", c.suite + "." + c.name}, {"detail", c.detail}});
  }
  o.result["value"] = std::to_string(report.size() - failures.size()) + "/" + std::to_string(report.size());
  o.result["failures"] = failures;
  return emit(o, opt.format, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Motives of pair moduli and rank-r zeta functions of curves", "pairzeta"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* curve_info = app.add_subcommand("curve-info", "zeta function, symmetric powers and b_r of the curve");
  add_curve_options(curve_info, opt.curve);
  curve_info->add_option("--terms", opt.terms, "symmetric powers up to this degree");
  curve_info->add_option("--max-rank", opt.max_rank, "b_r up to this rank");

  auto* betti = app.add_subcommand("betti", "beta_(r,d) from the Zagier sum");
  add_curve_options(betti, opt.curve);
  betti->add_option("--rank", opt.rank)->required();
  betti->add_option("--degree", opt.degree)->required();

  auto* pairs = app.add_subcommand("pairs", "f_tau(r,d) and [M_tau(r,d)]");
  add_curve_options(pairs, opt.curve);
  pairs->add_option("--rank", opt.rank)->required();
  pairs->add_option("--degree", opt.degree)->required();
  pairs->add_option("--tau", opt.tau, "stability parameter as p/q")->required();
  pairs->add_option("--method", opt.method, "product, convolution, lemma or explicit");
  pairs->add_flag("--all-methods", opt.all_methods, "compute every applicable route and compare");

  auto* zeta_cmd = app.add_subcommand("zeta-r", "rank-r zeta function Z_{X,r}");
  add_curve_options(zeta_cmd, opt.curve);
  zeta_cmd->add_option("--rank", opt.rank)->required();
  zeta_cmd->add_option("--terms", opt.terms, "coefficients t^0..t^N");
  zeta_cmd->add_flag("--closed-form", opt.closed_form, "also print the rational form and P_{X,r}");
  zeta_cmd->add_option("--check", opt.check, "'all' runs rationality, functional equation and the rest");
  zeta_cmd->add_flag("--serial", opt.serial, "disable OpenMP");

  auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
  verify_cmd->add_option("--suite", opt.suite, "all, scalar, curve, slices, motivic, qplane, wallcross or nazeta");
  verify_cmd->add_option("--seed", opt.seed);
  verify_cmd->add_flag("--serial", opt.serial, "disable OpenMP");

  for (auto* sub : app.get_subcommands({})) sub->add_option("--format", opt.format)->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    if (curve_info->parsed()) return cmd_curve_info(opt, out);
    if (betti->parsed()) return cmd_betti(opt, out);
    if (pairs->parsed()) return cmd_pairs(opt, out, err);
    if (zeta_cmd->parsed()) return cmd_zeta_r(opt, out);
    if (verify_cmd->parsed()) return cmd_verify(opt, out, err);
  } catch (const NonGenericTauError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNonGeneric;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitInvalidInput;
}

}  // namespace pairzeta

#pragma once

// Command-line front end: configuration, subcommands and deterministic
// JSON/text output.
//
//   asq2 [--config PATH] <solve|classify|complement|oracle|selftest> [ARGS...] [--json]
//
// Exit codes: 0 success, 1 usage or parse error, 2 NotDivision/SplitAlgebra,
// 3 internal invariant violation.

#include <asq2/checks.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace asq2::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kUsage = 1, kNotDivision = 2, kInvariant = 3 };

/// Flat key=value configuration. Empty strings mean "derive from k".
struct Config {
  unsigned k = 1;
  std::string fq_modulus;
  std::string alpha = "T";
  std::string beta;
  int witness_bound = kDefaultWitnessBound;
  int oracle_bound = 1;
  std::size_t divisor_budget = kDefaultDivisorBudget;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <class Int>
Int parse_int(const std::string& key, const std::string& value, long long lo, long long hi) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size() || v < lo || v > hi) throw std::out_of_range(key);
    return static_cast<Int>(v);
  } catch (const std::logic_error&) {
    throw ConfigError("invalid value for " + key + ": '" + value + "'");
  }
}

}  // namespace detail

/// Reads `key = value` lines; blank lines and lines starting with '#' are
/// skipped. Unknown keys are errors.
inline Config parse_config(std::istream& in) {
  Config c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = detail::trim(std::string_view(t).substr(0, eq));
    const std::string value = detail::trim(std::string_view(t).substr(eq + 1));
    if (key == "k") {
      c.k = detail::parse_int<unsigned>(key, value, 1, FqField::kMaxDegree);
    } else if (key == "fq_modulus") {
      c.fq_modulus = value;
    } else if (key == "alpha") {
      c.alpha = value;
    } else if (key == "beta") {
      c.beta = value;
    } else if (key == "witness_bound") {
      c.witness_bound = detail::parse_int<int>(key, value, 0, 16);
    } else if (key == "oracle_bound") {
      c.oracle_bound = detail::parse_int<int>(key, value, 0, EnumBox::kMaxBound);
    } else if (key == "divisor_budget") {
      c.divisor_budget = detail::parse_int<std::size_t>(key, value, 1, 1LL << 40);
    } else {
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return c;
}

inline Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in);
}

inline const FqField& config_field(const Config& c) {
  if (c.fq_modulus.empty()) return FqField::standard(c.k);
  const unsigned m = parse_gf2_polynomial(c.fq_modulus);
  if (gf2_degree(m) != static_cast<int>(c.k)) throw ConfigError("fq_modulus degree differs from k");
  if (!gf2_irreducible(m)) throw ConfigError("fq_modulus is reducible");
  return FqField::get(m);
}

/// Default beta: T + c with c the first constant of absolute trace 1.
inline std::string default_beta(const FqField& f) {
  for (std::size_t e = 1; e < f.order(); ++e) {
    const auto c = static_cast<FqField::Elem>(e);
    if (f.trace(c) == 1) return "T + " + asq2::detail::wrap_sum(f.format(c));
  }
  throw InvariantViolation("no trace-one constant");
}

/// Builds the algebra; refuses (SplitAlgebra) if the preflight fails.
inline std::unique_ptr<QuatAlgebra> make_algebra(const Config& c) {
  const FqField& f = config_field(c);
  const RatFun alpha = parse_ratfun(f, c.alpha);
  const RatFun beta = parse_ratfun(f, c.beta.empty() ? default_beta(f) : c.beta);
  auto alg = std::make_unique<QuatAlgebra>(alpha, beta, c.witness_bound);
  alg->require_preflight();
  return alg;
}

inline Json strings(const std::vector<Quaternion>& qs) {
  Json a = Json::array();
  for (const auto& q : qs) a.push_back(to_string(q));
  return a;
}

inline Json to_json(const Solution& sol) {
  Json j;
  Json roots = Json::array(), central = Json::array(), locus = nullptr;
  if (const auto* fin = std::get_if<FiniteRoots>(&sol.roots)) {
    j["kind"] = "finite";
    roots = strings(fin->roots);
  } else {
    const auto& cl = std::get<CentralPlusLocus>(sol.roots);
    j["kind"] = "central-plus-locus";
    for (const auto& r : cl.central_roots) central.push_back(to_string(r));
    locus = Json::object();
    locus["trace"] = to_string(cl.locus.trace);
    locus["norm"] = to_string(cl.locus.norm);
    if (const auto* w = cl.locus.witness()) {
      locus["status"] = "witness";
      locus["witness"] = to_string(*w);
    } else {
      locus["status"] = "none-within-bound";
      locus["bound"] = std::get<NoneWithinBound>(cl.locus.status).bound;
    }
  }
  j["roots"] = std::move(roots);
  j["central_roots"] = std::move(central);
  j["locus"] = std::move(locus);
  j["case"] = std::string(case_name(sol.solve_case));
  Json reds = Json::array();
  for (const auto& r : sol.reductions) {
    Json o;
    o["kind"] = r.kind == Reduction::Kind::scale_by_mu ? "scale-by-mu" : "scale-by-trace";
    o["factor"] = to_string(r.factor);
    reds.push_back(std::move(o));
  }
  j["reductions"] = std::move(reds);
  return j;
}

/// One `path: value` line per leaf, in document order.
inline void write_text(const Json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) write_text(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array()) {
    if (j.empty()) out << path << ": []\n";
    for (std::size_t i = 0; i < j.size(); ++i) write_text(j[i], path + "[" + std::to_string(i) + "]", out);
  } else if (j.is_string()) {
    out << path << ": " << j.get<std::string>() << '\n';
  } else {
    out << path << ": " << j.dump() << '\n';
  }
}

inline void emit(const Json& j, bool json, std::ostream& out) {
  if (json) {
    out << j.dump() << '\n';
  } else {
    write_text(j, "", out);
  }
}

inline Json report_json(const CheckReport& r) {
  Json j;
  j["name"] = r.name;
  j["cases"] = r.cases;
  j["failures"] = r.failures;
  j["passed"] = r.passed();
  if (!r.passed()) j["first_failure"] = r.first_failure;
  return j;
}

/// Reduced-size invariant suites; all seeds fixed.
inline std::vector<CheckReport> selftest_reports(const QuatAlgebra& alg, const SolveOptions& opt) {
  std::vector<CheckReport> out;
  out.push_back(check_algebra_axioms(alg, 500, 11, 100));
  out.push_back(check_complement(alg, 100, 12));
  static constexpr std::pair<InstanceCase, const char*> kCases[] = {
      {InstanceCase::artin_schreier, "roundtrip-artin-schreier"},
      {InstanceCase::square_central, "roundtrip-square-central"},
      {InstanceCase::central, "roundtrip-central"},
      {InstanceCase::zero, "roundtrip-zero"},
      {InstanceCase::general, "roundtrip-general"},
  };
  std::uint64_t seed = 1000;
  for (const auto& [kind, name] : kCases) {
    out.push_back(check_roundtrip(alg, kind, 40, seed, 2, opt));
    out.back().name = name;
    seed += 1000;
  }
  out.push_back(check_oracle_agreement(alg, 40, 13, 1, opt));
  out.push_back(check_candidate_bounds(alg, 100, 14));
  if (alg.field().degree() == 1) out.push_back(check_as_solve_brute(alg.field(), 100, 15));
  return out;
}

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solve z^2 + mu z + nu = 0 in a quaternion division algebra over GF(2^k)(T)", "asq2"};
  std::string config_path;
  bool json = false;
  app.add_option("--config", config_path, "key=value configuration file (default: $ASQ2_CONFIG)");
  app.add_flag("--json", json, "print JSON instead of text");
  app.require_subcommand(1);

  std::string a1, a2;
  auto* solve_cmd = app.add_subcommand("solve", "all roots of z^2 + MU z + NU");
  solve_cmd->add_option("MU", a1)->required();
  solve_cmd->add_option("NU", a2)->required();
  auto* classify_cmd = app.add_subcommand("classify", "class of Q and its trace");
  classify_cmd->add_option("Q", a1)->required();
  auto* complement_cmd = app.add_subcommand("complement", "x' with x'y' + y'x' = y' for square-central Y");
  complement_cmd->add_option("Y", a1)->required();
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force roots over a bounded box, checked against solve");
  oracle_cmd->add_option("MU", a1)->required();
  oracle_cmd->add_option("NU", a2)->required();
  auto* selftest_cmd = app.add_subcommand("selftest", "run the invariant suites");
  for (auto* s : {solve_cmd, classify_cmd, complement_cmd, oracle_cmd, selftest_cmd}) s->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (config_path.empty()) {
      if (const char* env = std::getenv("ASQ2_CONFIG"); env && *env) config_path = env;
    }
    const Config cfg = config_path.empty() ? Config{} : load_config(config_path);
    const auto alg = make_algebra(cfg);
    const SolveOptions opt{cfg.witness_bound, cfg.divisor_budget};

    if (solve_cmd->parsed()) {
      const Quaternion mu = parse_element(*alg, a1);
      const Quaternion nu = parse_element(*alg, a2);
      emit(to_json(solve_traced(mu, nu, opt)), json, out);
      return kOk;
    }
    if (classify_cmd->parsed()) {
      const ElementClass cls = classify(parse_element(*alg, a1));
      Json j;
      j["class"] = std::string(class_name(cls.kind));
      if (cls.eta) j["eta"] = to_string(*cls.eta);
      emit(j, json, out);
      return kOk;
    }
    if (complement_cmd->parsed()) {
      Json j;
      j["complement"] = to_string(as_complement(parse_element(*alg, a1)));
      emit(j, json, out);
      return kOk;
    }
    if (oracle_cmd->parsed()) {
      const Quaternion mu = parse_element(*alg, a1);
      const Quaternion nu = parse_element(*alg, a2);
      std::vector<Quaternion> brute = brute_roots(mu, nu, cfg.oracle_bound);
      std::sort(brute.begin(), brute.end());
      const RootSet rs = solve(mu, nu, opt);
      bool agree = true;
      for (const auto& z : brute) agree = agree && contains(rs, z);
      Json j;
      j["bound"] = cfg.oracle_bound;
      j["brute_roots"] = strings(brute);
      j["agree"] = agree;
      emit(j, json, out);
      return agree ? kOk : kInvariant;
    }
    // selftest
    Json suites = Json::array();
    bool all = true;
    for (const auto& r : selftest_reports(*alg, opt)) {
      all = all && r.passed();
      suites.push_back(report_json(r));
    }
    Json j;
    j["suites"] = std::move(suites);
    j["passed"] = all;
    emit(j, json, out);
    return all ? kOk : kInvariant;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kInvariant;
  } catch (const NotDivision& e) {
    err << "not a division algebra: " << e.what() << '\n';
    return kNotDivision;
  } catch (const SplitAlgebra& e) {
    err << "algebra failed the division preflight: " << e.what() << '\n';
    return kNotDivision;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace asq2::cli

// Command-line front end: evaluate character sums from JSON configs, run the
// named verification suites, and emit the value-attaining constructions.
//
// Exit codes: 0 success/agreement, 1 usage or parse error, 2 mathematical
// disagreement (brute force differs from a closed form, or a construction
// misses its target).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "weightsum/config.hpp"
#include "weightsum/constructions.hpp"
#include "weightsum/modular.hpp"
#include "weightsum/verification.hpp"

using namespace weightsum;

namespace {

std::size_t group_cap_from_env() {
  if (const char* env = std::getenv("CHARSUM_MAX_GROUP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
    std::cerr << "warning: ignoring malformed CHARSUM_MAX_GROUP=" << env << "\n";
  }
  return 1024;
}

Json read_config(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    text = os.str();
  } else {
    std::ifstream in(path);
    if (!in) fail("ParseError", "cannot open config file " + path);
    std::ostringstream os;
    os << in.rdbuf();
    text = os.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail("ParseError", std::string("config is not valid JSON: ") + e.what());
  }
}

// Route the monomial to the most specific dispatcher.
SigmaReport evaluate(const EvalConfig& cfg, const Monomial& m, bool with_brute) {
  const auto& pres = cfg.presentation;
  if (monomial_is_grouplike(pres, m)) return sigma_grouplike(cfg.group, m, with_brute);
  if (m.letters.size() == 1 && pres->find_skew(m.letters[0].name))
    return sigma_skew(cfg.group, m.letters[0].name, with_brute);
  if (monomial_is_skew_product(pres, m)) return sigma_product_general(cfg.group, m, with_brute);
  SigmaReport r;
  r.brute = sigma_brute(cfg.group, m);
  r.path = "mixed.brute_only";
  return r;
}

void print_report(const SigmaReport& r) {
  std::cout << report_to_json(r).dump(2) << "\n";
  std::cout << "path:   " << r.path << "\n";
  if (r.brute) std::cout << "brute:  " << r.brute->to_string() << "\n";
  if (r.closed) std::cout << "closed: " << r.closed->to_string() << "\n";
  std::cout << (r.agree ? "AGREE" : "DISAGREE") << "\n";
}

int cmd_eval(const std::string& config_path, const std::string& monomial_flag, bool no_brute) {
  Json config = read_config(config_path);
  EvalConfig cfg = eval_config_from_json(config, group_cap_from_env());
  Monomial m;
  if (!monomial_flag.empty())
    m = parse_monomial(monomial_flag);
  else if (cfg.monomial)
    m = *cfg.monomial;
  else
    fail("ParseError", "no monomial given (config \"monomial\" or --monomial)");
  SigmaReport r = evaluate(cfg, m, !no_brute);
  print_report(r);
  return r.agree ? 0 : 2;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, std::size_t max_order,
               std::size_t instances) {
  SuiteOptions opts;
  opts.seed = seed;
  opts.max_order = max_order;
  opts.instances = instances;
  SuiteResult result = run_suite(suite, opts);
  std::cout << "suite " << result.name << ": " << result.checks << " checks, " << result.failures
            << " failures\n";
  for (const auto& [tag, count] : result.tally) std::cout << "  " << tag << ": " << count << "\n";
  for (const auto& msg : result.messages) std::cout << "  FAIL " << msg << "\n";
  return result.ok() ? 0 : 2;
}

int cmd_construct(const std::string& kind, const Json& field_json, const Json& target_json,
                  std::uint64_t p, unsigned n, unsigned k, std::uint64_t m,
                  const std::string& chain) {
  FieldPtr field = Field::make(field_spec_from_json(field_json));
  FieldElement target = element_from_json(field, target_json);
  ConstructionResult result = [&] {
    if (kind == "lie") {
      require(p == 0 || p == field->characteristic(), "WrongCharacteristic",
              "--p must match the field characteristic");
      return construct_lie(n, k, target);
    }
    if (kind == "cyclic") return construct_cyclic(m, n, target);
    if (kind == "abelian") {
      std::vector<std::uint64_t> d;
      std::stringstream ss(chain);
      std::string item;
      while (std::getline(ss, item, ',')) d.push_back(std::stoull(item));
      return construct_abelian(d, n, target);
    }
    fail("ParseError", "unknown construction kind " + kind);
  }();
  std::cout << construction_to_json(result).dump(2) << "\n";
  return (result.achieved == result.target) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact character-sum evaluator for pointed Hopf presentations"};
  app.require_subcommand(1);

  std::string config_path, monomial_flag;
  bool no_brute = false;
  auto* eval = app.add_subcommand("eval", "evaluate Sigma_Pi at a monomial from a JSON config");
  eval->add_option("config", config_path, "config path, or - for stdin")->required();
  eval->add_option("--monomial", monomial_flag, "monomial override, e.g. h1*h2 or K^3");
  eval->add_flag("--no-brute", no_brute, "skip the brute-force sum (large groups)");

  std::string suite;
  std::uint64_t seed = 1;
  std::size_t max_order = 0, instances = 0;
  auto* verify = app.add_subcommand("verify", "run a named theorem-verification suite");
  verify->add_option("--suite", suite, "one of the registered suites")->required();
  verify->add_option("--seed", seed, "RNG seed (default 1)");
  verify->add_option("--max-order", max_order, "cap on |Pi| (suite default if 0)");
  verify->add_option("--instances", instances, "randomized instance count (suite default if 0)");

  std::string kind, chain, field_text = R"({"kind":"rational"})", target_text = "1";
  std::uint64_t cp = 0, cm = 2;
  unsigned cn = 1, ck = 1;
  auto* construct = app.add_subcommand("construct", "build (H, Pi, h) with Sigma_Pi(h) = target");
  construct->add_option("--kind", kind, "lie | cyclic | abelian")->required();
  construct->add_option("--field", field_text, "field spec JSON");
  construct->add_option("--target", target_text, "target value (element JSON)");
  construct->add_option("--p", cp, "characteristic sanity check for lie");
  construct->add_option("--n", cn, "number of letters");
  construct->add_option("--k", ck, "rank k for lie");
  construct->add_option("--m", cm, "cyclic order m (even)");
  construct->add_option("--chain", chain, "invariant factors, e.g. 2,4");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) return cmd_eval(config_path, monomial_flag, no_brute);
    if (verify->parsed()) return cmd_verify(suite, seed, max_order, instances);
    if (construct->parsed())
      return cmd_construct(kind, Json::parse(field_text), Json::parse(target_text), cp, cn, ck, cm,
                           chain);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

#include "bsv/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

#include "bsv/betachain.hpp"
#include "bsv/chartable.hpp"
#include "bsv/permgroup.hpp"
#include "bsv/structconst.hpp"

namespace bsv::cli {

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kError = 2;
constexpr int kInconclusive = 3;

struct Options {
  std::string format = "text";
  std::uint64_t seed = 1;
  std::size_t max_elements = 1000000;
  std::size_t max_tuples = 1000000;
};

const char* status_name(int code) {
  switch (code) {
    case kPass: return "PASS";
    case kFail: return "FAIL";
    case kInconclusive: return "INCONCLUSIVE";
    default: return "ERROR";
  }
}

// Uniform report plumbing: every command fills a payload and a plain-text
// body; --format json swaps the body for the structured report.
struct Report {
  std::string command;
  JsonValue::Object inputs;
  JsonValue::Object results;
  std::ostringstream text;
  int code = kPass;

  void input(const std::string& key, const std::string& value) {
    inputs.emplace(key, JsonValue(value));
  }
  void input(const std::string& key, long value) { inputs.emplace(key, JsonValue(Int(value))); }

  int finish(const Options& opt, std::ostream& out) {
    if (opt.format == "json") {
      JsonValue::Object top;
      top.emplace("schema", JsonValue(Int(1)));
      top.emplace("command", JsonValue(command));
      top.emplace("inputs", JsonValue(std::move(inputs)));
      top.emplace("results", JsonValue(std::move(results)));
      top.emplace("status", JsonValue(std::string(status_name(code))));
      out << write_json(JsonValue(std::move(top)), 1) << "\n";
    } else {
      out << text.str();
    }
    return code;
  }
};

int cmd_validate(const std::string& table_path, const Options& opt, std::ostream& out) {
  Report rep;
  rep.command = "validate";
  rep.input("table", table_path);
  CharacterTable t = load_table(table_path);
  ValidationReport v = validate(t);
  JsonValue::Array checks;
  for (const auto& c : v.checks) {
    rep.text << c.name << ": " << (c.passed ? "PASS" : "FAIL");
    if (!c.detail.empty()) rep.text << " (" << c.detail << ")";
    rep.text << "\n";
    JsonValue::Object cj;
    cj.emplace("name", JsonValue(c.name));
    cj.emplace("passed", JsonValue(c.passed));
    cj.emplace("detail", JsonValue(c.detail));
    checks.emplace_back(std::move(cj));
  }
  rep.code = v.all_passed() ? kPass : kFail;
  rep.text << (v.all_passed() ? "all checks passed" : "validation failed") << "\n";
  rep.results.emplace("checks", JsonValue(std::move(checks)));
  rep.results.emplace("all_passed", JsonValue(v.all_passed()));
  return rep.finish(opt, out);
}

int cmd_cmc(const std::string& table_path, const std::string& a, const std::string& b,
            const std::string& c, bool sweep, const Options& opt, std::ostream& out) {
  Report rep;
  rep.command = "cmc";
  rep.input("table", table_path);
  rep.input("a", a);
  rep.input("b", b);
  CharacterTable t = load_table(table_path);
  std::size_t ia = t.class_by_name(a);
  std::size_t ib = t.class_by_name(b);
  if (sweep) {
    auto values = coeff_sweep(t, ia, ib);
    JsonValue::Object vals;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] == 0) continue;
      rep.text << t.class_info(i).name << " " << values[i].get_str() << "\n";
      vals.emplace(t.class_info(i).name, JsonValue(values[i]));
    }
    rep.results.emplace("coefficients", JsonValue(std::move(vals)));
  } else {
    rep.input("c", c);
    Int m = class_mult_coeff(t, ia, ib, t.class_by_name(c));
    rep.text << m.get_str() << "\n";
    rep.results.emplace("coefficient", JsonValue(m));
  }
  return rep.finish(opt, out);
}

int cmd_beta(const std::string& table_path, const std::string& cls, long prime,
             std::size_t max_depth, const Options& opt, std::ostream& out) {
  Report rep;
  rep.command = "beta";
  rep.input("table", table_path);
  rep.input("class", cls);
  rep.input("prime", prime);
  CharacterTable t = load_table(table_path);
  auto cert = beta_upper_bound(t, t.class_by_name(cls), prime, max_depth);
  if (!cert) {
    rep.text << "no certificate found\n";
    rep.results.emplace("certificate", JsonValue());
    rep.code = kFail;
    return rep.finish(opt, out);
  }
  if (!verify_certificate(t, *cert)) {
    rep.text << "internal error: certificate failed re-verification\n";
    rep.code = kError;
    return rep.finish(opt, out);
  }
  JsonValue::Array steps;
  for (const auto& st : cert->steps) {
    rep.text << "step: " << t.class_info(st.from).name << " " << t.class_info(st.via).name << " "
             << st.coefficient.get_str() << "\n";
    JsonValue::Object sj;
    sj.emplace("from", JsonValue(t.class_info(st.from).name));
    sj.emplace("via", JsonValue(t.class_info(st.via).name));
    sj.emplace("coefficient", JsonValue(st.coefficient));
    steps.emplace_back(std::move(sj));
  }
  rep.text << "bound: " << cert->bound.get_str() << "\n";
  JsonValue::Object cj;
  cj.emplace("steps", JsonValue(std::move(steps)));
  cj.emplace("terminal", JsonValue(t.class_info(cert->terminal_class).name));
  cj.emplace("bound", JsonValue(cert->bound));
  rep.results.emplace("certificate", JsonValue(std::move(cj)));
  return rep.finish(opt, out);
}

int cmd_check_theorem(const std::string& table_path, const std::string& alpha_path, long r, long s,
                      const Options& opt, std::ostream& out) {
  Report rep;
  rep.command = "check-theorem";
  rep.input("table", table_path);
  rep.input("alpha", alpha_path);
  rep.input("r", r);
  rep.input("s", s);
  CharacterTable t = load_table(table_path);
  AlphaBoundData alpha = AlphaBoundData::load(alpha_path);
  TheoremReport tr = check_sporadic_theorem(t, alpha, r, s);
  JsonValue::Array rows;
  for (const auto& row : tr.rows) {
    rep.text << row.class_name << " " << (row.pass ? "PASS" : "FAIL") << " ["
             << (row.inner ? "inner" : "outer") << "] beta: " << row.beta_detail
             << "; alpha: " << row.alpha_detail << "\n";
    JsonValue::Object rj;
    rj.emplace("class", JsonValue(row.class_name));
    rj.emplace("inner", JsonValue(row.inner));
    rj.emplace("pass", JsonValue(row.pass));
    rj.emplace("beta_rule", JsonValue(row.beta_rule));
    rj.emplace("beta_detail", JsonValue(row.beta_detail));
    rj.emplace("alpha_detail", JsonValue(row.alpha_detail));
    rows.emplace_back(std::move(rj));
  }
  rep.text << (tr.all_pass ? "all prime-order classes pass" : "some classes fail") << "\n";
  rep.results.emplace("rows", JsonValue(std::move(rows)));
  rep.results.emplace("all_pass", JsonValue(tr.all_pass));
  rep.code = tr.all_pass ? kPass : kFail;
  return rep.finish(opt, out);
}

int cmd_radical(const std::string& group_path, const std::string& pi_text, const Options& opt,
                std::ostream& out) {
  Report rep;
  rep.command = "radical";
  rep.input("group", group_path);
  rep.input("pi", pi_text);
  PermGroup g = PermGroup::load(group_path);
  g.generate_elements(opt.max_elements);
  PrimeSet pi = parse_prime_set(pi_text);
  auto radical = g.pi_radical(pi);
  rep.text << "order: " << radical.size() << "\n";
  // small generating set: strip redundant members
  std::vector<std::uint32_t> gens;
  {
    std::vector<std::uint32_t> sub{0};
    for (auto m : radical) {
      if (std::binary_search(sub.begin(), sub.end(), m)) continue;
      gens.push_back(m);
      auto g2 = gens;
      sub = g.subgroup_generated(g2);
      if (sub.size() == radical.size()) break;
    }
  }
  JsonValue::Array gj;
  for (auto m : gens) {
    rep.text << "generator: " << g.elements()[m].cycle_string() << "\n";
    JsonValue::Array img;
    for (auto v : g.elements()[m].images()) img.emplace_back(Int(static_cast<long>(v)));
    gj.emplace_back(std::move(img));
  }
  rep.results.emplace("order", JsonValue(Int(static_cast<unsigned long>(radical.size()))));
  rep.results.emplace("generators", JsonValue(std::move(gj)));
  return rep.finish(opt, out);
}

int cmd_bs_check(const std::string& group_path, const std::string& pi_text, std::size_t m,
                 const std::string& mode_text, const Options& opt, std::ostream& out) {
  Report rep;
  rep.command = "bs-check";
  rep.input("group", group_path);
  rep.input("pi", pi_text);
  rep.input("m", static_cast<long>(m));
  rep.input("mode", mode_text);
  PermGroup g = PermGroup::load(group_path);
  g.generate_elements(opt.max_elements);
  PrimeSet pi = parse_prime_set(pi_text);
  auto mode = mode_text == "sampled" ? PermGroup::SearchMode::Sampled
                                     : PermGroup::SearchMode::Exhaustive;
  if (mode_text != "sampled" && mode_text != "exhaustive")
    throw precondition_error("mode must be exhaustive or sampled");
  auto bs = g.bs_width_check(pi, m, mode, opt.max_tuples, opt.seed);
  rep.input("seed", static_cast<long>(bs.seed));
  JsonValue::Array rows;
  for (const auto& row : bs.rows) {
    std::string verdict = row.inconclusive
                              ? "INCONCLUSIVE"
                              : (row.witness_found != row.in_radical ? "OK" : "MISMATCH");
    rep.text << row.class_name << ": " << (row.in_radical ? "in O_pi" : "outside O_pi") << ", "
             << (row.witness_found ? "non-pi witness found" : "no witness") << " -> " << verdict
             << "\n";
    JsonValue::Object rj;
    rj.emplace("class", JsonValue(row.class_name));
    rj.emplace("in_radical", JsonValue(row.in_radical));
    rj.emplace("witness_found", JsonValue(row.witness_found));
    rj.emplace("inconclusive", JsonValue(row.inconclusive));
    rows.emplace_back(std::move(rj));
  }
  rep.code = bs.passed ? kPass : (bs.inconclusive ? kInconclusive : kFail);
  rep.text << "bs-check: " << status_name(rep.code) << "\n";
  rep.results.emplace("rows", JsonValue(std::move(rows)));
  rep.results.emplace("passed", JsonValue(bs.passed));
  rep.results.emplace("seed", JsonValue(Int(static_cast<unsigned long>(bs.seed))));
  return rep.finish(opt, out);
}

int cmd_oracle_cmc(const std::string& group_path, const std::string& a, const std::string& b,
                   const std::string& c, const Options& opt, std::ostream& out) {
  Report rep;
  rep.command = "oracle-cmc";
  rep.input("group", group_path);
  rep.input("a", a);
  rep.input("b", b);
  rep.input("c", c);
  PermGroup g = PermGroup::load(group_path);
  g.generate_elements(opt.max_elements);
  std::size_t ia = g.class_by_name(a);
  std::size_t ib = g.class_by_name(b);
  std::size_t ic = g.class_by_name(c);
  Int m = g.brute_force_cmc(ia, ib, g.elements()[g.conjugacy_classes()[ic].rep]);
  rep.text << m.get_str() << "\n";
  rep.results.emplace("coefficient", JsonValue(m));
  return rep.finish(opt, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certificates for sporadic-group generation bounds"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opt.seed, "Seed for sampled searches");
  app.add_option("--max-elements", opt.max_elements, "Element cap for group closure");
  app.add_option("--max-tuples", opt.max_tuples, "Tuple cap for witness searches");

  std::string table_path, group_path, alpha_path;
  std::string class_a, class_b, class_c, class_x;
  std::string pi_text, mode_text = "exhaustive";
  long prime = 0, rr = 0, ss = 0;
  std::size_t m = 2, max_depth = 8;
  bool sweep = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check a character table");
  validate_cmd->add_option("table", table_path)->required();

  auto* cmc_cmd = app.add_subcommand("cmc", "Class multiplication coefficient");
  cmc_cmd->add_option("table", table_path)->required();
  cmc_cmd->add_flag("--sweep", sweep, "All coefficients m(a,b,*)");
  cmc_cmd->add_option("a", class_a)->required();
  cmc_cmd->add_option("b", class_b)->required();
  cmc_cmd->add_option("c", class_c);

  auto* beta_cmd = app.add_subcommand("beta", "Certificate for beta_r(x,L)");
  beta_cmd->add_option("table", table_path)->required();
  beta_cmd->add_option("--class", class_x)->required();
  beta_cmd->add_option("--prime", prime)->required();
  beta_cmd->add_option("--max-depth", max_depth);

  auto* thm_cmd = app.add_subcommand("check-theorem", "Re-verify the sporadic case analysis");
  thm_cmd->add_option("table", table_path)->required();
  thm_cmd->add_option("--alpha", alpha_path)->required();
  thm_cmd->add_option("--r", rr)->required();
  thm_cmd->add_option("--s", ss)->required();

  auto* rad_cmd = app.add_subcommand("radical", "pi-radical of a permutation group");
  rad_cmd->add_option("group", group_path)->required();
  rad_cmd->add_option("--pi", pi_text)->required();

  auto* bs_cmd = app.add_subcommand("bs-check", "Baer-Suzuki width property check");
  bs_cmd->add_option("group", group_path)->required();
  bs_cmd->add_option("--pi", pi_text)->required();
  bs_cmd->add_option("--m", m)->required();
  bs_cmd->add_option("--mode", mode_text);

  auto* oracle_cmd = app.add_subcommand("oracle-cmc", "Brute-force coefficient");
  oracle_cmd->add_option("group", group_path)->required();
  oracle_cmd->add_option("a", class_a)->required();
  oracle_cmd->add_option("b", class_b)->required();
  oracle_cmd->add_option("c", class_c)->required();

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());  // CLI11's vector overload consumes from the back
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }

  try {
    if (app.got_subcommand(validate_cmd)) return cmd_validate(table_path, opt, out);
    if (app.got_subcommand(cmc_cmd)) {
      if (!sweep && class_c.empty()) {
        err << "error: cmc needs a third class (or --sweep)\n";
        return kError;
      }
      return cmd_cmc(table_path, class_a, class_b, class_c, sweep, opt, out);
    }
    if (app.got_subcommand(beta_cmd))
      return cmd_beta(table_path, class_x, prime, max_depth, opt, out);
    if (app.got_subcommand(thm_cmd))
      return cmd_check_theorem(table_path, alpha_path, rr, ss, opt, out);
    if (app.got_subcommand(rad_cmd)) return cmd_radical(group_path, pi_text, opt, out);
    if (app.got_subcommand(bs_cmd))
      return cmd_bs_check(group_path, pi_text, m, mode_text, opt, out);
    if (app.got_subcommand(oracle_cmd))
      return cmd_oracle_cmc(group_path, class_a, class_b, class_c, opt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  err << "error: no subcommand\n";
  return kError;
}

}  // namespace bsv::cli

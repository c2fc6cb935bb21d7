/**
 * @file  cli.cpp
 * @brief Command-line driver.  Subcommands:
 *
 *   check   <model> [--suite S] ...   run verification suites
 *   ope     <model> <a> <b> ...       print a singular OPE table
 *   bracket <model> <A> <m> <B> <k> <v>   evaluate a mode bracket three ways
 *
 * Common flags: --suite --depth --order --modes --seed --format --beta --out.
 * LOGVA_DEPTH overrides the default depth.  Exit codes: 0 success, 1 failed
 * checks / route disagreement, 2 usage or configuration error.
 */
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "logva/core.hpp"
#include "logva/verify.hpp"

using json = nlohmann::json;
using namespace logva;

namespace {

struct RunConfig {
  std::string model;
  std::string suite = "all";
  long depth = 6;
  long order = -1;  // auto: chosen from depth
  std::string modes = "-2..2";
  Int mode_lo = -2, mode_hi = 2;
  unsigned long long seed = 1;
  std::string format = "text";
  std::string beta;  // "p/q" pins the GL parameter
  std::string out;
};

// Stream selected by --out (file) or stdout.
struct Sink {
  std::ofstream file;
  std::ostream* os = &std::cout;
  bool open(const std::string& path) {
    if (path.empty()) return true;
    file.open(path);
    if (!file) return false;
    os = &file;
    return true;
  }
};

bool parse_modes(const std::string& s, Int& lo, Int& hi) {
  auto pos = s.find("..");
  if (pos == std::string::npos) return false;
  try {
    lo = std::stoll(s.substr(0, pos));
    hi = std::stoll(s.substr(pos + 2));
  } catch (...) {
    return false;
  }
  return lo <= hi;
}

/// Validates the run configuration; returns a usage error message or empty.
std::string validate(RunConfig& cfg) {
  if (const char* d = std::getenv("LOGVA_DEPTH"); d && cfg.depth == 6) {
    try {
      cfg.depth = std::stol(d);
    } catch (...) {
      return "invalid LOGVA_DEPTH";
    }
  }
  if (cfg.depth < 0) return "depth must be >= 0";
  if (cfg.order < 0) cfg.order = cfg.depth;  // auto
  if (cfg.order < cfg.depth) return "order must be >= depth";
  if (!parse_modes(cfg.modes, cfg.mode_lo, cfg.mode_hi)) return "invalid --modes range";
  if (cfg.format != "text" && cfg.format != "json") return "format must be text or json";
  return "";
}

std::string effective_model(const RunConfig& cfg) {
  if (!cfg.beta.empty() && cfg.model.rfind("gl", 0) == 0 &&
      cfg.model.find("beta=") == std::string::npos)
    return "gl:beta=" + cfg.beta;
  return cfg.model;
}

VerifyOptions to_options(const RunConfig& cfg) {
  VerifyOptions opt;
  opt.depth = Rat(cfg.depth);
  opt.mode_lo = cfg.mode_lo;
  opt.mode_hi = cfg.mode_hi;
  opt.seed = cfg.seed;
  return opt;
}

json state_json(const Model& M, const State& s) {
  json arr = json::array();
  for (const auto& [m, c] : s.terms()) arr.push_back({M.render_mono(m), c.str()});
  return arr;
}

json config_json(const RunConfig& cfg) {
  return json{{"depth", cfg.depth},
              {"order", cfg.order},
              {"modes", {cfg.mode_lo, cfg.mode_hi}},
              {"seed", cfg.seed},
              {"beta", cfg.beta.empty() ? "formal" : cfg.beta},
              {"format", cfg.format}};
}

std::optional<State> parse_state(const Model& M, const std::string& s) {
  if (s == "vac" || s == "|0>") return M.vacuum;
  if (const auto* g = M.find_generator(s)) return g->state;
  return std::nullopt;
}

int cmd_check(const RunConfig& cfg, Sink& sink) {
  Model M = parse_model(effective_model(cfg));
  bool known = cfg.suite == "all";
  for (const auto& s : suite_names()) known = known || s == cfg.suite;
  if (!known) {
    std::cerr << "error: unknown suite '" << cfg.suite << "'\n";
    return 2;
  }
  CheckReport r = run_suite(M, cfg.suite, to_options(cfg));
  if (cfg.format == "json") {
    json cases = json::array();
    for (const auto& c : r.cases)
      cases.push_back({{"id", c.id},
                       {"inputs", c.inputs},
                       {"status", c.status},
                       {"lhs", state_json(M, c.lhs)},
                       {"rhs", state_json(M, c.rhs)},
                       {"diff", state_json(M, c.diff)}});
    json doc{{"model", M.name},
             {"suite", cfg.suite},
             {"config", config_json(cfg)},
             {"cases", cases},
             {"summary", {{"pass", r.pass}, {"fail", r.fail}, {"skipped", r.skipped}}}};
    *sink.os << doc.dump(2) << "\n";
  } else {
    *sink.os << "model " << M.name << ", suite " << cfg.suite << ": " << r.pass
             << " passed, " << r.fail << " failed, " << r.skipped << " skipped\n";
    for (const auto& c : r.cases)
      if (c.status != "pass")
        *sink.os << "  " << c.status << "  " << c.id << "  [" << c.inputs << "]"
                 << (c.diff.is_zero() ? "" : "  diff = " + M.render(c.diff)) << "\n";
    *sink.os << (r.ok() ? "PASS" : "FAIL") << "\n";
  }
  return r.ok() ? 0 : 1;
}

int cmd_ope(const RunConfig& cfg, const std::string& sa, const std::string& sb,
            Sink& sink) {
  Model M = parse_model(effective_model(cfg));
  auto a = parse_state(M, sa), b = parse_state(M, sb);
  if (!a || !b) {
    std::cerr << "error: unknown state '" << (a ? sb : sa) << "' in model " << M.name
              << "\n";
    return 2;
  }
  auto table = singular_ope(M, *a, *b);
  if (cfg.format == "json") {
    json entries = json::array();
    for (const auto& [in, s] : table)
      entries.push_back(
          {{"i", in.first}, {"n", in.second}, {"state", state_json(M, s)}});
    json doc{{"model", M.name}, {"op", "ope"},      {"a", sa},
             {"b", sb},         {"config", config_json(cfg)}, {"table", entries},
             {"rendered", render_ope(M, table, true)}};
    *sink.os << doc.dump(2) << "\n";
  } else {
    *sink.os << sa << "(z) " << sb << "(0) ~ " << render_ope(M, table, true) << "\n";
    *sink.os << "raw (log-power i, product index n) -> state:\n";
    for (const auto& [in, s] : table)
      *sink.os << "  (" << in.first << ", " << in.second << ") -> " << M.render(s)
               << "\n";
  }
  return 0;
}

int cmd_bracket(const RunConfig& cfg, const std::string& ga, Int m, const std::string& gb,
                Int k, const std::string& sv, Sink& sink) {
  Model M = parse_model(effective_model(cfg));
  if (!M.gl_mode_act) {
    std::cerr << "error: bracket requires the gl model\n";
    return 2;
  }
  static const char* tn[4] = {"L", "l", "xi", "xibar"};
  int ta = -1, tb = -1;
  for (int t = 0; t < 4; ++t) {
    if (ga == tn[t]) ta = t;
    if (gb == tn[t]) tb = t;
  }
  auto v = parse_state(M, sv);
  if (ta < 0 || tb < 0 || !v) {
    std::cerr << "error: expected generators from {L, l, xi, xibar} and a parseable "
                 "state\n";
    return 2;
  }
  int pa = ta >= 2, pb = tb >= 2;
  State direct = M.gl_mode_act(ta, m, M.gl_mode_act(tb, k, *v));
  State ba = M.gl_mode_act(tb, k, M.gl_mode_act(ta, m, *v));
  if (pa && pb)
    direct += ba;
  else
    direct -= ba;
  State tmpl = gl_template_bracket(M, ta, m, tb, k, *v);
  State bor = gl_borcherds_bracket(M, M.find_generator(ga)->state, m + 1,
                                   M.find_generator(gb)->state, k + 1, *v);
  bool agree = (direct == tmpl) && (direct == bor);
  if (cfg.format == "json") {
    json doc{{"model", M.name},
             {"op", "bracket"},
             {"inputs", {{"a", ga}, {"m", m}, {"b", gb}, {"k", k}, {"v", sv}}},
             {"config", config_json(cfg)},
             {"direct", state_json(M, direct)},
             {"template", state_json(M, tmpl)},
             {"borcherds", state_json(M, bor)},
             {"agree", agree}};
    *sink.os << doc.dump(2) << "\n";
  } else {
    *sink.os << "[" << ga << "_" << m << ", " << gb << "_" << k << "] " << sv << ":\n";
    *sink.os << "  direct    = " << M.render(direct) << "\n";
    *sink.os << "  template  = " << M.render(tmpl) << "\n";
    *sink.os << "  borcherds = " << M.render(bor) << "\n";
    *sink.os << (agree ? "routes agree" : "ROUTE DISAGREEMENT") << "\n";
  }
  return agree ? 0 : 1;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--suite", cfg.suite, "verification suite (or 'all')");
  sub->add_option("--depth", cfg.depth, "probe weight cap");
  sub->add_option("--order", cfg.order, "series order (default: auto from depth)");
  sub->add_option("--modes", cfg.modes, "mode window lo..hi");
  sub->add_option("--seed", cfg.seed, "seed for sampled property tests");
  sub->add_option("--format", cfg.format, "output format: text | json");
  sub->add_option("--beta", cfg.beta, "pin the gl parameter to a rational p/q");
  sub->add_option("--out", cfg.out, "write the report to a file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculator for logarithmic vertex algebras"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* chk = app.add_subcommand("check", "run verification suites");
  chk->add_option("model", cfg.model, "model spec")->required();
  add_common(chk, cfg);

  std::string sa, sb;
  auto* ope = app.add_subcommand("ope", "print a singular OPE table");
  ope->add_option("model", cfg.model, "model spec")->required();
  ope->add_option("a", sa, "first state")->required();
  ope->add_option("b", sb, "second state")->required();
  add_common(ope, cfg);

  std::string ga, gb, sv;
  Int bm = 0, bk = 0;
  auto* br = app.add_subcommand("bracket", "evaluate [a_m, b_k] v by three routes");
  br->add_option("model", cfg.model, "model spec (gl)")->required();
  br->add_option("a", ga, "first generator")->required();
  br->add_option("m", bm, "first mode")->required();
  br->add_option("b", gb, "second generator")->required();
  br->add_option("k", bk, "second mode")->required();
  br->add_option("v", sv, "state the bracket acts on")->required();
  add_common(br, cfg);

  CLI11_PARSE(app, argc, argv);

  if (std::string err = validate(cfg); !err.empty()) {
    std::cerr << "error: " << err << "\n";
    return 2;
  }
  Sink sink;
  if (!sink.open(cfg.out)) {
    std::cerr << "error: cannot open output file " << cfg.out << "\n";
    return 2;
  }

  try {
    if (chk->parsed()) return cmd_check(cfg, sink);
    if (ope->parsed()) return cmd_ope(cfg, sa, sb, sink);
    return cmd_bracket(cfg, ga, bm, gb, bk, sv, sink);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

// Command-line front end: prove, check and oracle subcommands.
//
// Exit codes: prove 0 (verdict), 1 (gave up), 2 (input error);
// check 0 (verified), 3 (rejected), 2 (input error); oracle 0 or 2.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "etm/engine.hpp"
#include "etm/frontend.hpp"
#include "etm/oracle.hpp"

namespace {

constexpr int kExitVerdict = 0;
constexpr int kExitUnknown = 1;
constexpr int kExitInput = 2;
constexpr int kExitRejected = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string base_name(const std::string& path) {
  auto slash = path.find_last_of('/');
  std::string b = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = b.find_last_of('.');
  return dot == std::string::npos || dot == 0 ? b : b.substr(0, dot);
}

etm::ClauseSet load(const std::string& path, const std::string& format) {
  const std::string text = read_file(path);
  etm::InputFormat fmt = format == "dimacs"     ? etm::InputFormat::Dimacs
                         : format == "tptp-cnf" ? etm::InputFormat::TptpCnf
                                                : etm::detect_format(text, path);
  return etm::parse_problem(text, fmt);
}

const char* szs_status(etm::Verdict v) {
  switch (v) {
    case etm::Verdict::Unsatisfiable: return "Unsatisfiable";
    case etm::Verdict::Satisfiable: return "Satisfiable";
    case etm::Verdict::Unknown: return "GaveUp";
  }
  return "GaveUp";
}

struct ProveArgs {
  std::string problem;
  std::string format = "auto";
  std::string mode = "auto";
  std::size_t nt = 0;
  std::size_t max_rounds = 64;
  std::string fallback = "on";
  std::uint64_t seed = 0;
  double timeout = 10.0;
  std::string trace_path;
  bool quiet = false;
};

int run_prove(const ProveArgs& a) {
  etm::ClauseSet s;
  try {
    s = load(a.problem, a.format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  if (s.empty()) {
    std::cerr << "error: no clauses in " << a.problem << '\n';
    return kExitInput;
  }
  etm::EngineConfig cfg;
  cfg.mode = a.mode == "unsat" ? etm::ProveMode::Unsat : a.mode == "sat" ? etm::ProveMode::Sat : etm::ProveMode::Auto;
  if (a.nt > 0) cfg.literal_threshold = a.nt;
  cfg.max_rounds = a.max_rounds;
  cfg.fallback_enabled = a.fallback == "on";
  cfg.seed = a.seed;
  if (const char* env = std::getenv("ETM_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: ETM_SEED is not a number\n";
      return kExitInput;
    }
  }
  cfg.time_budget = std::chrono::milliseconds(static_cast<long long>(a.timeout * 1000));

  auto result = etm::prove(s, cfg);
  const std::string name = base_name(a.problem);
  etm::RenderOptions ro;
  ro.problem_name = name;
  ro.config_summary = std::string("mode=") + etm::to_string(cfg.mode) +
                      " nt=" + (a.nt ? std::to_string(a.nt) : std::string("default")) +
                      " max_rounds=" + std::to_string(cfg.max_rounds) + " fallback=" + a.fallback +
                      " seed=" + std::to_string(cfg.seed);
  const std::string doc = etm::render_trace(result.trace, s, ro);
  const auto verdict = result.verdict();
  std::cout << "% SZS status " << szs_status(verdict) << " for " << name << '\n';
  if (const auto* u = std::get_if<etm::Unknown>(&result.outcome)) std::cout << "% reason: " << u->reason << '\n';
  if (!a.quiet && verdict != etm::Verdict::Unknown) {
    const char* kind = verdict == etm::Verdict::Unsatisfiable ? "Refutation" : "Model";
    std::cout << "% SZS output start " << kind << " for " << name << '\n'
              << doc << "% SZS output end " << kind << " for " << name << '\n';
  }
  if (!a.trace_path.empty()) {
    std::ofstream out(a.trace_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << a.trace_path << '\n';
      return kExitInput;
    }
    out << doc;
  }
  return verdict == etm::Verdict::Unknown ? kExitUnknown : kExitVerdict;
}

int run_check(const std::string& problem, const std::string& trace_path, const std::string& format) {
  etm::ClauseSet s;
  etm::ProofTrace t;
  try {
    s = load(problem, format);
    t = etm::parse_trace(read_file(trace_path));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  auto v = etm::verify_trace(s, t);
  if (!v) {
    std::cout << "REJECTED: " << v.diagnostic << '\n';
    return kExitRejected;
  }
  std::cout << "VERIFIED: " << t.rounds.size() << " round(s), verdict " << etm::to_string(t.verdict) << '\n';
  return kExitVerdict;
}

int run_oracle(const std::string& problem, const std::string& format, std::size_t cap) {
  try {
    auto s = load(problem, format);
    auto model = etm::find_model_bruteforce(s.clauses(), cap);
    std::cout << "% SZS status " << (model ? "Satisfiable" : "Unsatisfiable") << " for " << base_name(problem) << '\n';
    if (model)
      for (const auto& [v, val] : *model) std::cout << "MODEL\t" << v << '\t' << (val ? 1 : 0) << '\n';
    return kExitVerdict;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contradiction separation prover over extended triangular contradictions"};
  app.require_subcommand(1);

  ProveArgs pa;
  auto* prove = app.add_subcommand("prove", "Decide a clause set");
  prove->add_option("problem", pa.problem, "Problem file")->required();
  prove->add_option("--format", pa.format, "Input format")->check(CLI::IsMember({"auto", "dimacs", "tptp-cnf"}));
  prove->add_option("--mode", pa.mode, "Selection strategy")->check(CLI::IsMember({"unsat", "sat", "auto"}));
  prove->add_option("--nt", pa.nt, "Literal threshold N_T (0 = twice the widest clause)");
  prove->add_option("--max-rounds", pa.max_rounds, "Maximum contradiction rounds");
  prove->add_option("--fallback", pa.fallback, "Saturation fallback")->check(CLI::IsMember({"on", "off"}));
  prove->add_option("--seed", pa.seed, "Tie-break seed (ETM_SEED overrides)");
  prove->add_option("--timeout", pa.timeout, "Time budget in seconds");
  prove->add_option("--trace", pa.trace_path, "Also write the trace document to this file");
  prove->add_flag("--quiet", pa.quiet, "Print only the status line");

  std::string check_problem, check_trace, check_format = "auto";
  auto* check = app.add_subcommand("check", "Verify a trace document against a problem");
  check->add_option("problem", check_problem, "Problem file")->required();
  check->add_option("trace", check_trace, "Trace document")->required();
  check->add_option("--format", check_format, "Input format")->check(CLI::IsMember({"auto", "dimacs", "tptp-cnf"}));

  std::string oracle_problem, oracle_format = "auto";
  std::size_t cap = etm::kDefaultVariableCap;
  auto* oracle = app.add_subcommand("oracle", "Truth-table decision of a propositional problem");
  oracle->add_option("problem", oracle_problem, "Problem file")->required();
  oracle->add_option("--format", oracle_format, "Input format")->check(CLI::IsMember({"auto", "dimacs", "tptp-cnf"}));
  oracle->add_option("--cap", cap, "Variable cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }
  if (*prove) return run_prove(pa);
  if (*check) return run_check(check_problem, check_trace, check_format);
  return run_oracle(oracle_problem, oracle_format, cap);
}

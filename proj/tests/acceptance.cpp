// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Seeds and counts are fixed so runs are reproducible.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "etm/engine.hpp"
#include "etm/etc_fol.hpp"
#include "etm/frontend.hpp"
#include "etm/oracle.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace etm;
using fixtures::lit;
using fixtures::lits;

namespace {

using Clock = std::chrono::steady_clock;

struct Result {
  bool pass = true;
  std::string detail;
};

// Records the first failure only; later checks still run.
struct Checker {
  Result r;
  void expect(bool ok, const std::string& what) {
    if (!ok && r.pass) {
      r.pass = false;
      r.detail = what;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

struct Step {
  ClauseId id;
  const char* x;  // nullptr closes
};

EtcState run_prop(const ClauseSet& s, std::initializer_list<Step> steps, bool repeats = false) {
  std::optional<EtcState> st;
  for (const auto& step : steps) {
    const Clause& c = s.at(step.id);
    if (!st) st = start(c, lit(step.x), repeats);
    else if (step.x) st = extend(*st, c, lit(step.x));
    else st = close(*st, c);
  }
  return *st;
}

std::optional<EtcState> run_fol(const ClauseSet& s, std::initializer_list<Step> steps) {
  std::optional<EtcState> st;
  for (const auto& step : steps) {
    const Clause& c = s.at(step.id);
    if (!st) st = start_fol(c, lit(step.x));
    else st = step.x ? extend_fol(*st, c, lit(step.x)) : close_fol(*st, c);
    if (!st) return std::nullopt;
  }
  return st;
}

std::vector<Clause> d_minus_columns(const EtcState& st) {
  std::vector<Clause> cs;
  for (const auto& c : st.columns) cs.emplace_back(c.clause_id, c.d_minus);
  return cs;
}

bool grounded_contradiction(const EtcState& st) {
  return is_standard_contradiction(propositional_shadow(ground_with_fresh_constants(d_minus_columns(st))).clauses);
}

const EtcColumn* column_of(const EtcState& st, ClauseId id) {
  for (const auto& c : st.columns)
    if (c.clause_id == id) return &c;
  return nullptr;
}

Result four_clause_single_round() {
  Checker c;
  auto s = fixtures::four_clause();
  auto t0 = Clock::now();
  auto r = prove(s);
  const double secs = seconds_since(t0);
  c.expect(r.verdict() == Verdict::Unsatisfiable, "verdict is not unsatisfiable");
  c.expect(r.trace.rounds.size() == 1, "expected one round, got " + std::to_string(r.trace.rounds.size()));
  c.expect(!r.trace.rounds.empty() && r.trace.rounds[0].csc.empty(), "round csc is not empty");
  auto v = verify_trace(s, r.trace);
  c.expect(v.ok, "verify_trace: " + v.diagnostic);
  c.expect(secs < 1.0, "runtime " + fmt_seconds(secs));
  if (c.r.pass) c.r.detail = "1 round, csc ⊥, " + fmt_seconds(secs);
  return c.r;
}

Result ten_clause_refuted() {
  Checker c;
  auto s = fixtures::ten_clause();
  auto t0 = Clock::now();
  auto r = prove(s);
  const double secs = seconds_since(t0);
  c.expect(r.verdict() == Verdict::Unsatisfiable, "verdict is not unsatisfiable");
  c.expect(verify_trace(s, r.trace).ok, "verify_trace failed");
  c.expect(is_unsatisfiable_bruteforce(s.clauses()), "oracle disagrees");
  int scripted = 0;
  for (auto st : {run_prop(s, {{1, "x1"}, {2, "x2"}, {10, "~x7"}, {7, "~x3"}, {3, nullptr}}),
                  run_prop(s, {{1, "x1"}, {2, "x2"}, {3, "x3"}, {4, "x4"}, {5, "x5"}, {6, nullptr}}),
                  run_prop(s, {{1, "x1"}, {2, "x2"}, {4, "x4"}, {5, "x5"}, {6, "~x3"}, {3, nullptr}})})
    if (st.csc->empty() && !check_invariants(st)) ++scripted;
  c.expect(scripted >= 1, "no scripted approach reaches ⊥");
  c.expect(secs < 1.0, "runtime " + fmt_seconds(secs));
  if (c.r.pass) c.r.detail = std::to_string(scripted) + "/3 scripted approaches reach ⊥, " + fmt_seconds(secs);
  return c.r;
}

Result eight_clause_two_rounds() {
  Checker c;
  auto s = fixtures::eight_clause();
  auto r1 = run_prop(s, {{8, "x7"}, {1, "~x3"}, {6, "x6"}, {7, "~x1"}, {4, "~x5"}, {2, "x2"}, {3, nullptr}});
  c.expect(same_literal_set(*r1.csc, lits("x4")), "round 1 csc is " + to_string(*r1.csc));
  ClauseSet s2 = s;
  s2.add(*r1.csc, Origin::derived(1));
  auto r2 = run_prop(s2, {{8, "x7"}, {9, "x4"}, {5, "~x1"}, {4, "~x5"}, {3, "~x2"}, {2, "x3"}, {1, nullptr}});
  c.expect(r2.csc->empty(), "round 2 csc is " + to_string(*r2.csc));
  EngineConfig cfg;
  cfg.max_rounds = 10;
  auto r = prove(s, cfg);
  c.expect(r.verdict() == Verdict::Unsatisfiable, "unscripted prove did not refute within 10 rounds");
  c.expect(verify_trace(s, r.trace).ok, "verify_trace failed");
  if (c.r.pass) c.r.detail = "scripted x4 then ⊥; unscripted " + std::to_string(r.trace.rounds.size()) + " round(s)";
  return c.r;
}

Result inverse_substitution_csc() {
  Checker c;
  auto s = fixtures::inverse_substitution();
  auto st = run_fol(s, {{6, "~p5(X61)"}, {3, "p4(X31)"}, {4, nullptr}});
  c.expect(st.has_value(), "scripted construction failed");
  if (!st) return c.r;
  c.expect(is_variant(*st->csc, lits("p3(f(X31)) | ~p3(X31)")), "csc is " + to_string(*st->csc));
  const auto* c3 = column_of(*st, 3);
  const auto* c4 = column_of(*st, 4);
  const auto* c6 = column_of(*st, 6);
  c.expect(c3 && c4 && c6, "missing column");
  if (!c.r.pass) return c.r;
  const Term x31 = Term::var("X31#2");
  c.expect(c3->sigma.empty(), "C3 substitution is " + to_string(c3->sigma));
  c.expect(c4->sigma.lookup("X41#3") && *c4->sigma.lookup("X41#3") == x31, "C4 substitution is " + to_string(c4->sigma));
  c.expect(c6->sigma.lookup("X61#1") && *c6->sigma.lookup("X61#1") == x31, "C6 substitution is " + to_string(c6->sigma));
  c.expect(grounded_contradiction(*st), "grounded d_minus columns are not a standard contradiction");
  if (c.r.pass) c.r.detail = "csc " + to_string(*st->csc);
  return c.r;
}

Result single_round_fol() {
  Checker c;
  auto s = fixtures::single_round_fol();
  auto r = prove(s);
  c.expect(r.verdict() == Verdict::Unsatisfiable, "verdict is not unsatisfiable");
  c.expect(r.trace.rounds.size() == 1, "expected one round, got " + std::to_string(r.trace.rounds.size()));
  for (const auto& round : r.trace.rounds)
    for (const auto& col : round.etc.columns) c.expect(col.clause_id != 5, "C5 used in a column");
  auto v = verify_trace(s, r.trace);
  c.expect(v.ok, "verify_trace: " + v.diagnostic);

  auto p = preprocess(s);
  auto st = run_fol(p, {{1, "p1(a)"}, {2, "~p2(a,b)"}, {3, "p3(a,f(c),f(b))"}, {4, "p3(X1,X1,f(X1))"},
                        {6, "p2(X5,X7)"}, {7, nullptr}});
  c.expect(st.has_value(), "scripted construction failed");
  if (!st) return c.r;
  c.expect(st->csc->empty(), "scripted csc is " + to_string(*st->csc));
  auto sig = [&](ClauseId id) { return column_of(*st, id) ? to_string(column_of(*st, id)->sigma) : "?"; };
  c.expect(sig(4) == "{b/X1#4}", "C4 substitution " + sig(4));
  c.expect(sig(6) == "{a/X5#5, f(c)/X6#5, f(b)/X7#5}", "C6 substitution " + sig(6));
  c.expect(sig(7) == "{b/X10#6, f(b)/X11#6, a/X8#6, b/X9#6}", "C7 substitution " + sig(7));
  if (c.r.pass) c.r.detail = "1 round without C5; C7 " + sig(7);
  return c.r;
}

Result two_round_fol() {
  Checker c;
  auto s = preprocess(fixtures::two_round_fol());
  auto r1 = run_fol(s, {{6, "p3(a1)"}, {7, "p2(a1,a3)"}, {4, "p1(X41,X41,f1(X41))"}, {3, nullptr}});
  c.expect(r1 && same_literal_set(*r1->csc, lits("p2(a1,f1(a3))")),
           "round 1 csc is " + (r1 ? to_string(*r1->csc) : std::string("missing")));
  if (!r1) return c.r;
  ClauseSet s2 = s;
  auto id = s2.add(*r1->csc, Origin::derived(1));
  auto r2 = run_fol(s2, {{id, "p2(a1,f1(a3))"}, {5, "p1(a1,f1(a1),f1(a3))"}, {1, nullptr}});
  c.expect(r2 && r2->csc->empty(), "round 2 does not reach ⊥");
  auto one = run_fol(s, {{6, "p3(a1)"}, {7, "p2(a1,a3)"}, {5, "p1(a1,f1(a1),f1(a3))"},
                         {4, "p1(X41,X41,f1(X41))"}, {1, "~p2(X11,X13)"}, {3, nullptr}});
  c.expect(one && one->csc->empty(), "one-round script does not reach ⊥");
  if (one) c.expect(grounded_contradiction(*one), "one-round d_minus is not a contradiction");
  if (c.r.pass) c.r.detail = "p2(a1,f1(a3)) then ⊥; one-round ⊥";
  return c.r;
}

Result non_linear_csc() {
  Checker c;
  auto s = fixtures::non_linear();
  auto st = run_prop(s, {{6, "x5"}, {5, "x3"}, {4, "x4"}, {3, "x3"}, {2, "x2"}, {1, nullptr}}, true);
  c.expect(!check_invariants(st), "invariants violated");
  c.expect(same_literal_set(*st.csc, lits("~x1 | ~x4")), "csc is " + to_string(*st.csc));
  ClauseSet plus = s;
  plus.add(lits("x1"));
  plus.add(lits("x4"));
  c.expect(is_unsatisfiable_bruteforce(plus.clauses()), "oracle finds S with x1, x4 satisfiable");
  if (c.r.pass) c.r.detail = "csc " + to_string(*st.csc);
  return c.r;
}

Result random_etcs_are_contradictions() {
  Checker c;
  gen::Rng rng(8001);
  int built = 0;
  while (built < 1000) {
    auto r = gen::random_closed_etc(rng);
    if (!r) continue;
    ++built;
    c.expect(!check_invariants(r->etc), "invariant violated in ETC " + std::to_string(built));
    c.expect(is_standard_contradiction(d_minus_columns(r->etc)), "ETC " + std::to_string(built) + " not a contradiction");
  }
  if (c.r.pass) c.r.detail = "1000/1000";
  return c.r;
}

Result soundness_suite() {
  Checker c;
  gen::Rng rng(9001);
  auto t0 = Clock::now();
  int unsat = 0, sat = 0, unknown = 0;
  for (int i = 0; i < 500; ++i) {
    const auto vars = gen::uniform(rng, 4, 10);
    const auto n = gen::uniform(rng, 4, 14);
    auto s = i % 2 == 0 ? gen::planted_sat(rng, vars, n) : gen::planted_unsat(rng, vars, n);
    const bool oracle_unsat = is_unsatisfiable_bruteforce(s.clauses());
    auto r = prove(s);
    const std::string tag = "instance " + std::to_string(i);
    c.expect(verify_trace(s, r.trace).ok, tag + ": trace rejected");
    switch (r.verdict()) {
      case Verdict::Unsatisfiable:
        ++unsat;
        c.expect(oracle_unsat, tag + ": refuted a satisfiable set");
        break;
      case Verdict::Satisfiable:
        ++sat;
        c.expect(!oracle_unsat, tag + ": model for an unsatisfiable set");
        c.expect(verify_model(s.clauses(), std::get<Satisfiable>(r.outcome).model), tag + ": bad model");
        break;
      case Verdict::Unknown: ++unknown; break;
    }
  }
  const double secs = seconds_since(t0);
  c.expect(secs < 60.0, "runtime " + fmt_seconds(secs));
  if (c.r.pass)
    c.r.detail = std::to_string(unsat) + " unsat, " + std::to_string(sat) + " sat, " + std::to_string(unknown) +
                 " unknown, " + fmt_seconds(secs);
  return c.r;
}

Result bounded_completeness() {
  Checker c;
  gen::Rng rng(10001);
  int gave_up = 0;
  for (int i = 0; i < 200; ++i) {
    auto s = gen::oracle_unsat(rng, 8);
    auto r = prove(s);
    if (r.verdict() != Verdict::Unsatisfiable) {
      ++gave_up;
      c.expect(false, "instance " + std::to_string(i) + " not refuted");
    }
  }
  if (c.r.pass) c.r.detail = "200/200 refuted";
  else c.r.detail += " (" + std::to_string(gave_up) + " total)";
  return c.r;
}

Result stair_invariance() {
  Checker c;
  gen::Rng rng(11001);
  int built = 0;
  while (built < 200) {
    auto r = gen::random_closed_etc(rng, true);
    if (!r) continue;
    ++built;
    auto n = normalize_stairs(r->etc);
    c.expect(same_literal_set(*n.csc, *r->etc.csc), "ETC " + std::to_string(built) + ": csc changed");
  }
  if (c.r.pass) c.r.detail = "200/200";
  return c.r;
}

Result linear_bridge() {
  Checker c;
  gen::Rng rng(12001);
  for (bool complementary : {false, true}) {
    const int want = complementary ? 50 : 100;
    int built = 0;
    while (built < want) {
      auto ld = gen::random_linear(rng, complementary);
      if (!ld) continue;
      ++built;
      const std::string tag = std::string(complementary ? "complementary" : "complement-free") + " deduction " +
                              std::to_string(built);
      auto rounds = linear_to_etc(*ld);
      if (!complementary) c.expect(rounds.size() == 1, tag + ": " + std::to_string(rounds.size()) + " rounds");
      c.expect(same_literal_set(rounds.back().csc.literals, gen::linear_resolvent(*ld)), tag + ": csc differs");
      ProofTrace t;
      t.rounds = rounds;
      auto v = verify_trace(linear_clause_set(*ld), t);
      c.expect(v.ok, tag + ": " + v.diagnostic);
    }
  }
  if (c.r.pass) c.r.detail = "100 complement-free, 50 complementary";
  return c.r;
}

Result contradiction_iff_unsat() {
  Checker c;
  gen::Rng rng(13001);
  int unsat = 0;
  for (int i = 0; i < 500; ++i) {
    auto s = gen::random_set(rng, gen::uniform(rng, 1, 10), gen::uniform(rng, 1, 6), 1, 3);
    const bool a = is_standard_contradiction(s.clauses());
    const bool b = is_unsatisfiable_bruteforce(s.clauses());
    unsat += b;
    c.expect(a == b, "list " + std::to_string(i) + " disagrees");
  }
  if (c.r.pass) c.r.detail = "500 lists, " + std::to_string(unsat) + " unsatisfiable";
  return c.r;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria{
      {"four-clause set refuted in one round", four_clause_single_round},
      {"ten-clause set refuted; scripted approach reaches empty csc", ten_clause_refuted},
      {"eight-clause set: scripted x4 then empty; unscripted within 10 rounds", eight_clause_two_rounds},
      {"inverse substitution csc", inverse_substitution_csc},
      {"single-round first-order refutation without C5", single_round_fol},
      {"two-round and one-round first-order scripts", two_round_fol},
      {"non-linear contradiction csc", non_linear_csc},
      {"1000 random closed ETCs are standard contradictions", random_etcs_are_contradictions},
      {"soundness on 500 random instances", soundness_suite},
      {"bounded completeness on 200 unsatisfiable instances", bounded_completeness},
      {"stair normalization preserves csc on 200 ETCs", stair_invariance},
      {"linear deductions become ETC rounds", linear_bridge},
      {"standard contradiction iff unsatisfiable on 500 lists", contradiction_iff_unsat},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failed += !r.pass;
    std::printf("%s  %2zu  %s  [%s]\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

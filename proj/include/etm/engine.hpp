#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "etm/etc.hpp"
#include "etm/logic.hpp"
#include "etm/oracle.hpp"

namespace etm {

enum class ProveMode : std::uint8_t { Unsat, Sat, Auto };
enum class Verdict : std::uint8_t { Unsatisfiable, Satisfiable, Unknown };

const char* to_string(ProveMode m);
const char* to_string(Verdict v);

struct EngineConfig {
  ProveMode mode = ProveMode::Auto;
  std::optional<std::size_t> literal_threshold;  // default: 2 * widest clause
  std::optional<std::size_t> max_columns;        // default: 4 * |S|
  std::size_t max_rounds = 64;
  std::size_t max_restarts = 3;
  bool fallback_enabled = true;
  std::chrono::milliseconds time_budget{10000};
  std::uint64_t seed = 0;
  // Search nodes per size bound while building one ETC.
  std::size_t node_budget = 1500;
  // Clause cap for the saturation fallback.
  std::size_t max_clauses = 20000;
};

struct RoundRecord {
  std::size_t round_index = 0;
  EtcState etc;
  Clause csc;
  std::vector<ClauseId> clause_ids_used;
};

struct ProofTrace {
  std::vector<RoundRecord> rounds;
  Verdict verdict = Verdict::Unknown;
  std::optional<Assignment> model;
};

struct Unsatisfiable {};
struct Satisfiable {
  Assignment model;
};
struct Unknown {
  std::string reason;
};
using Outcome = std::variant<Unsatisfiable, Satisfiable, Unknown>;

struct ProveResult {
  Outcome outcome;
  ProofTrace trace;

  Verdict verdict() const;
};

// Repeatedly builds contradictions over the growing clause set, adding
// each csc, until the empty clause appears, a covering model is found or
// the budget runs out. A saturation fallback built from two-column
// contradictions takes over when construction stalls.
ProveResult prove(const ClauseSet& s, const EngineConfig& cfg = {});

struct RoundOptions {
  EtcConfig etc;
  std::size_t node_budget = 1500;
  std::uint64_t seed = 0;
  std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max();
};

// One round of contradiction construction under the unsatisfiability
// strategy. Returns a closed ETC whose csc is empty or not yet implied by
// a clause of `s`, or nothing on a stall.
std::optional<EtcState> build_round(const ClauseSet& s, const RoundOptions& opt);

// Propositional covering construction under the satisfiability strategy:
// a closed ETC using every clause with a non-empty closing d_plus.
std::optional<EtcState> build_covering_round(const ClauseSet& s, const RoundOptions& opt);

struct VerifyResult {
  bool ok = true;
  std::optional<std::size_t> failing_round;  // 1-based position in the trace
  std::string diagnostic;

  explicit operator bool() const { return ok; }
};

// Re-checks every round as an application of the contradiction separation
// rule, then the verdict.
VerifyResult verify_trace(const ClauseSet& s, const ProofTrace& t);

// A linear deduction top = D_k, sides D_{k-1} .. D_1 with pivots
// x_{k-1} .. x_1: the running resolvent R starts at D_k and step i
// resolves the complement of x_i in R against x_i in D_i.
struct LinearDeduction {
  Clause top;
  std::vector<Clause> sides;    // D_{k-1} first
  std::vector<Literal> pivots;  // x_{k-1} first
};

// The clauses of the deduction as a clause set (ids kept).
ClauseSet linear_clause_set(const LinearDeduction& ld);

// Chains of ETC rounds whose final csc is the linear resolvent. Pivot runs
// free of complementary pairs share one ETC. Throws std::invalid_argument
// on a malformed deduction.
std::vector<RoundRecord> linear_to_etc(const LinearDeduction& ld);

}  // namespace etm

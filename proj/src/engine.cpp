#include "etm/engine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "etm/etc_fol.hpp"
#include "etm/unification.hpp"

namespace etm {

const char* to_string(ProveMode m) {
  switch (m) {
    case ProveMode::Unsat: return "unsat";
    case ProveMode::Sat: return "sat";
    case ProveMode::Auto: return "auto";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Unsatisfiable: return "unsatisfiable";
    case Verdict::Satisfiable: return "satisfiable";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

Verdict ProveResult::verdict() const {
  if (std::holds_alternative<Unsatisfiable>(outcome)) return Verdict::Unsatisfiable;
  if (std::holds_alternative<Satisfiable>(outcome)) return Verdict::Satisfiable;
  return Verdict::Unknown;
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t next_seed(std::uint64_t seed, std::size_t attempt) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (attempt + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return (x ^ (x >> 31)) | 1U;
}

bool subsumes(const Clause& c, const std::vector<Literal>& lits) {
  if (c.size() > lits.size()) return false;
  if (c.is_ground()) return is_subset(c.literals, lits);
  return variant_subsumes(c.literals, lits);
}

class Prover {
 public:
  Prover(const ClauseSet& input, const EngineConfig& cfg)
      : input_(input), cfg_(cfg), work_(preprocess(input)), deadline_(Clock::now() + cfg.time_budget) {
    if (cfg.time_budget.count() <= 0) deadline_ = Clock::time_point::max();
    next_id_ = input.next_id();
  }

  ProveResult run() {
    for (const auto& c : input_)
      if (c.empty()) return finish_unsat();
    if (auto r = construction_phase()) return *r;
    if (cfg_.fallback_enabled && !past()) return saturation_phase();
    return unknown(past() ? "time budget exhausted" : "construction stalled and fallback disabled");
  }

 private:
  bool past() const { return Clock::now() >= deadline_; }

  EtcConfig etc_config(SearchMode mode) const {
    EtcConfig c = EtcConfig::defaults(mode, work_);
    if (cfg_.literal_threshold) c.literal_threshold = *cfg_.literal_threshold;
    if (cfg_.max_columns) c.max_columns = *cfg_.max_columns;
    return c;
  }

  RoundOptions round_options(SearchMode mode, std::uint64_t seed) const {
    RoundOptions o;
    o.etc = etc_config(mode);
    o.node_budget = cfg_.node_budget;
    o.seed = seed;
    o.deadline = deadline_;
    return o;
  }

  const Clause& record(EtcState etc) {
    Clause csc(next_id_++, *etc.csc, Origin::derived(trace_.rounds.size() + 1));
    RoundRecord r;
    r.round_index = trace_.rounds.size() + 1;
    r.clause_ids_used = etc.clause_ids();
    r.etc = std::move(etc);
    r.csc = csc;
    trace_.rounds.push_back(std::move(r));
    work_.insert(csc);
    return trace_.rounds.back().csc;
  }

  std::optional<ProveResult> construction_phase() {
    const bool prop = work_.propositional();
    std::uint64_t seed = cfg_.seed;
    std::size_t restarts = 0;
    std::size_t attempts = 0;
    while (trace_.rounds.size() < cfg_.max_rounds && attempts < cfg_.max_rounds + cfg_.max_restarts) {
      ++attempts;
      if (past()) return unknown("time budget exhausted");
      if (prop && cfg_.mode != ProveMode::Unsat) {
        if (auto cov = build_covering_round(work_, round_options(SearchMode::Sat, seed))) {
          auto model = extract_model(*cov, work_);
          record(std::move(*cov));
          if (model) return finish_sat(*model, false);
        }
      }
      const SearchMode mode = cfg_.mode == ProveMode::Sat ? SearchMode::Sat : SearchMode::Unsat;
      auto st = build_round(work_, round_options(mode, seed));
      if (!st) {
        if (restarts >= cfg_.max_restarts) break;
        seed = next_seed(seed, ++restarts);
        continue;
      }
      const Clause& csc = record(std::move(*st));
      if (csc.empty()) return finish_unsat();
      if (prop) {
        const auto& etc = trace_.rounds.back().etc;
        if (auto model = extract_model(etc, work_)) return finish_sat(*model, false);
      }
    }
    return std::nullopt;
  }

  // Given-clause saturation whose inferences are two-column contradictions.
  ProveResult saturation_phase() {
    construction_rounds_ = trace_.rounds.size();
    const bool prop = work_.propositional();
    std::vector<Clause> active;
    std::deque<Clause> passive(work_.begin(), work_.end());
    auto known = [&](const std::vector<Literal>& lits) {
      return std::any_of(active.begin(), active.end(), [&](const Clause& c) { return subsumes(c, lits); }) ||
             std::any_of(passive.begin(), passive.end(), [&](const Clause& c) { return subsumes(c, lits); });
    };
    while (!passive.empty()) {
      if (past()) return unknown("time budget exhausted during saturation");
      if (work_.size() > cfg_.max_clauses) return unknown("clause limit reached during saturation");
      auto pick = std::min_element(passive.begin(), passive.end(),
                                   [](const Clause& a, const Clause& b) { return a.size() < b.size(); });
      Clause given = *pick;
      passive.erase(pick);
      if (std::any_of(active.begin(), active.end(), [&](const Clause& c) { return subsumes(c, given.literals); }))
        continue;
      active.push_back(given);
      const std::size_t n = active.size();
      for (std::size_t i = 0; i < n; ++i) {
        const Clause partner = active[i];
        for (int dir = 0; dir < 2; ++dir) {
          const Clause& a = dir == 0 ? given : partner;
          const Clause& b = dir == 0 ? partner : given;
          for (const auto& x : a.literals) {
            bool may = std::any_of(b.literals.begin(), b.literals.end(),
                                   [&](const Literal& l) { return may_be_complementary(l, x); });
            if (!may) continue;
            std::optional<EtcState> closed;
            if (prop) {
              if (!b.contains(complement(x))) continue;
              closed = close(start(a, x), b);
            } else {
              closed = close_fol(start_fol(a, x), b);
              if (closed && !closed->csc->empty()) closed = canonicalize_variables(*closed);
            }
            if (!closed) continue;
            const auto& csc = *closed->csc;
            if (!csc.empty() && (is_tautology(csc) || known(csc))) continue;
            const Clause& added = record(std::move(*closed));
            if (added.empty()) return finish_unsat();
            passive.push_back(added);
          }
          if (i + 1 == n) break;  // partner is the given clause itself
        }
      }
    }
    if (!prop) return unknown("saturated without refutation; first-order satisfiability is not reported");
    if (auto model = saturated_model(active)) return finish_sat(*model, true);
    return unknown("saturated clause set but model construction failed");
  }

  // Variables in order; each starts false and flips when some clause over
  // the variables fixed so far would otherwise be falsified.
  std::optional<Assignment> saturated_model(const std::vector<Clause>& saturated) const {
    auto vars = propositional_variables(work_.clauses());
    std::sort(vars.begin(), vars.end());
    std::map<std::string, std::size_t> rank;
    for (std::size_t i = 0; i < vars.size(); ++i) rank[vars[i]] = i;
    std::vector<std::vector<const Clause*>> by_top(vars.size());
    for (const auto& c : saturated) {
      if (c.empty()) return std::nullopt;
      std::size_t top = 0;
      for (const auto& l : c.literals) top = std::max(top, rank.at(l.predicate));
      by_top[top].push_back(&c);
    }
    Assignment a;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      a[vars[i]] = false;
      for (const Clause* c : by_top[i])
        if (!satisfies(*c, a)) {
          a[vars[i]] = true;
          break;
        }
    }
    if (!verify_model(input_.clauses(), a)) return std::nullopt;
    return a;
  }

  ProveResult finish_unsat() {
    trim_to_refutation();
    trace_.verdict = Verdict::Unsatisfiable;
    return ProveResult{Unsatisfiable{}, std::move(trace_)};
  }

  ProveResult finish_sat(const Assignment& model, bool drop_fallback_rounds) {
    if (drop_fallback_rounds) trace_.rounds.resize(construction_rounds_);
    Assignment restricted;
    for (const auto& v : propositional_variables(input_.clauses())) restricted[v] = model.at(v);
    trace_.verdict = Verdict::Satisfiable;
    trace_.model = restricted;
    return ProveResult{Satisfiable{restricted}, std::move(trace_)};
  }

  ProveResult unknown(std::string reason) {
    trace_.verdict = Verdict::Unknown;
    return ProveResult{Unknown{std::move(reason)}, std::move(trace_)};
  }

  // Keeps only the rounds the final empty csc depends on, renumbered.
  void trim_to_refutation() {
    if (trace_.rounds.empty()) return;
    std::set<ClauseId> needed{trace_.rounds.back().csc.id};
    std::vector<bool> keep(trace_.rounds.size(), false);
    for (std::size_t i = trace_.rounds.size(); i-- > 0;) {
      const auto& r = trace_.rounds[i];
      if (!needed.count(r.csc.id)) continue;
      keep[i] = true;
      needed.insert(r.clause_ids_used.begin(), r.clause_ids_used.end());
    }
    std::vector<RoundRecord> kept;
    for (std::size_t i = 0; i < trace_.rounds.size(); ++i)
      if (keep[i]) kept.push_back(std::move(trace_.rounds[i]));
    for (std::size_t i = 0; i < kept.size(); ++i) {
      kept[i].round_index = i + 1;
      kept[i].csc.origin = Origin::derived(i + 1);
    }
    trace_.rounds = std::move(kept);
  }

  const ClauseSet& input_;
  EngineConfig cfg_;
  ClauseSet work_;
  Clock::time_point deadline_;
  ClauseId next_id_ = 1;
  ProofTrace trace_;
  std::size_t construction_rounds_ = 0;
};

}  // namespace

ProveResult prove(const ClauseSet& s, const EngineConfig& cfg) {
  if (s.empty()) throw std::invalid_argument("prove: empty clause set");
  Prover p(s, cfg);
  return p.run();
}

VerifyResult verify_trace(const ClauseSet& s, const ProofTrace& t) {
  auto fail = [](std::size_t round, std::string msg) {
    return VerifyResult{false, round, "round " + std::to_string(round) + ": " + std::move(msg)};
  };
  std::map<ClauseId, std::vector<Literal>> known;
  bool input_has_empty = false;
  for (const auto& c : s) {
    known[c.id] = c.literals;
    if (c.empty()) input_has_empty = true;
  }
  for (std::size_t r = 0; r < t.rounds.size(); ++r) {
    const auto& rec = t.rounds[r];
    const auto& etc = rec.etc;
    const std::size_t no = r + 1;
    if (!etc.closed || etc.columns.size() < 2) return fail(no, "not a closed contradiction");
    std::vector<Clause> d_minus;
    std::vector<Literal> d_plus;
    for (std::size_t p = 0; p < etc.columns.size(); ++p) {
      const auto& col = etc.columns[p];
      const std::string where = "column " + std::to_string(p + 1) + " (C" + std::to_string(col.clause_id) + ")";
      auto it = known.find(col.clause_id);
      if (it == known.end()) return fail(no, where + " cites a clause that is neither input nor derived earlier");
      if (col.d_minus.empty()) return fail(no, where + " has an empty d_minus");
      for (const auto& l : col.d_minus)
        if (std::find(col.d_plus.begin(), col.d_plus.end(), l) != col.d_plus.end())
          return fail(no, where + " has " + to_string(l) + " in both d_minus and d_plus");
      if (!match_onto(it->second, col.literals()))
        return fail(no, where + " is not an instance of C" + std::to_string(col.clause_id));
      d_minus.emplace_back(col.clause_id, col.d_minus);
      for (const auto& l : col.d_plus)
        if (std::find(d_plus.begin(), d_plus.end(), l) == d_plus.end()) d_plus.push_back(l);
    }
    bool contradiction = false;
    try {
      contradiction = is_standard_contradiction(propositional_shadow(ground_with_fresh_constants(d_minus)).clauses);
    } catch (const std::invalid_argument& e) {
      return fail(no, std::string("contradiction check failed: ") + e.what());
    }
    if (!contradiction) return fail(no, "d_minus columns are not a standard contradiction");
    if (!same_literal_set(d_plus, rec.csc.literals)) return fail(no, "csc differs from the union of d_plus");
    if (etc.csc && !same_literal_set(*etc.csc, rec.csc.literals)) return fail(no, "recorded csc mismatch");
    if (known.count(rec.csc.id)) return fail(no, "csc id C" + std::to_string(rec.csc.id) + " is already in use");
    known[rec.csc.id] = rec.csc.literals;
  }
  const std::size_t last = t.rounds.size();
  switch (t.verdict) {
    case Verdict::Unsatisfiable:
      if (t.rounds.empty()) {
        if (input_has_empty) return {};
        return VerifyResult{false, std::nullopt, "unsatisfiable verdict without any round"};
      }
      if (!t.rounds.back().csc.empty()) return fail(last, "unsatisfiable verdict but the last csc is not empty");
      break;
    case Verdict::Satisfiable: {
      if (!t.model) return VerifyResult{false, std::nullopt, "satisfiable verdict without a model"};
      bool ok = false;
      try {
        ok = verify_model(s.clauses(), *t.model);
      } catch (const std::invalid_argument& e) {
        return VerifyResult{false, std::nullopt, std::string("model check failed: ") + e.what()};
      }
      if (!ok) return VerifyResult{false, std::nullopt, "model falsifies an input clause"};
      break;
    }
    case Verdict::Unknown: break;
  }
  return {};
}

}  // namespace etm

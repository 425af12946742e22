// Construction of a single contradiction per round.
//
// The main search is a depth-first walk over extensions in candidate order,
// repeated under a growing bound on the leftover size so that small cscs
// are found first. A greedy pass that closes on the stop conditions is the
// last resort before reporting a stall.

#include <algorithm>
#include <set>
#include <utility>

#include "etm/engine.hpp"
#include "etm/etc_fol.hpp"

namespace etm {

namespace {

bool subsumed_by_existing(const std::vector<Literal>& lits, const ClauseSet& s) {
  const bool ground = std::all_of(lits.begin(), lits.end(), [](const Literal& l) { return l.is_ground(); });
  for (const auto& c : s) {
    if (c.size() > lits.size()) continue;
    if (ground && c.is_ground()) {
      if (is_subset(c.literals, lits)) return true;
    } else if (variant_subsumes(c.literals, lits)) {
      return true;
    }
  }
  return false;
}

bool useful(const std::vector<Literal>& csc, const ClauseSet& s) {
  if (csc.empty()) return true;
  return !is_tautology(csc) && !subsumed_by_existing(csc, s);
}

bool past(std::chrono::steady_clock::time_point deadline) { return std::chrono::steady_clock::now() >= deadline; }

class RoundSearch {
 public:
  RoundSearch(const ClauseSet& s, const RoundOptions& opt) : s_(s), opt_(opt), prop_(s.propositional()) {}

  std::optional<EtcState> bounded(std::size_t bound) {
    bound_ = bound;
    nodes_ = 0;
    visited_.clear();
    return expand(nullptr);
  }

  std::optional<EtcState> greedy() {
    std::optional<EtcState> st;
    std::optional<EtcState> best;
    for (std::size_t step = 0; step < opt_.etc.max_columns && !past(opt_.deadline); ++step) {
      if (st) {
        for (auto& closed : closures(*st)) {
          const auto& csc = *closed.csc;
          if (csc.empty()) return closed;
          if (!useful(csc, s_)) continue;
          if (should_stop(closed, opt_.etc, s_).stop) return closed;
          if (!best || csc.size() < best->csc->size()) best = closed;
        }
      }
      std::optional<EtcState> next;
      for (const auto& c : select_candidates(st ? &*st : nullptr, s_, opt_.etc, opt_.seed)) {
        next = step_to(st ? &*st : nullptr, c);
        if (next && !is_tautology(next->leftover())) break;
        next.reset();
      }
      if (!next) break;
      st = std::move(next);
    }
    return best;
  }

 private:
  std::optional<EtcState> step_to(const EtcState* st, const Candidate& c) const {
    const Clause& d = s_.at(c.clause_id);
    if (st == nullptr) return prop_ ? start(d, c.literal) : start_fol(d, c.literal);
    if (prop_) {
      try {
        return extend(*st, d, c.literal);
      } catch (const EtcError&) {
        return std::nullopt;
      }
    }
    auto next = extend_fol(*st, d, c.literal);
    if (next && !redundancy_guard(next->columns.back().sigma, Clause(d.id, next->columns.back().source), s_))
      return std::nullopt;
    return next;
  }

  // States that agree on boundary and leftover up to variable names are
  // searched once.
  std::pair<std::vector<Literal>, std::vector<Literal>> memo_key(const EtcState& st,
                                                                 const std::vector<Literal>& left) const {
    auto b = sorted_unique(st.boundary);
    auto l = sorted_unique(left);
    if (prop_) return {std::move(b), std::move(l)};
    std::vector<Literal> all = b;
    all.insert(all.end(), l.begin(), l.end());
    const auto r = canonical_renaming(all);
    return {etm::apply(r, b), etm::apply(r, l)};
  }

  EtcState finish(EtcState closed) const {
    if (!prop_) closed = fall_in(closed);
    closed = normalize_stairs(prune_redundant_columns(closed));
    if (!prop_ && closed.csc && !closed.csc->empty()) closed = canonicalize_variables(closed);
    return closed;
  }

  std::vector<EtcState> closures(const EtcState& st) const {
    std::vector<EtcState> out;
    for (const auto& d : s_) {
      if (prop_) {
        bool any = std::any_of(d.literals.begin(), d.literals.end(),
                               [&](const Literal& l) { return st.has_complement_on_boundary(l); });
        if (!any) continue;
        out.push_back(finish(close(st, d)));
      } else {
        bool may = std::any_of(d.literals.begin(), d.literals.end(), [&](const Literal& l) {
          return std::any_of(st.boundary.begin(), st.boundary.end(),
                             [&](const Literal& b) { return may_be_complementary(l, b); });
        });
        if (!may) continue;
        if (auto closed = close_fol(st, d)) out.push_back(finish(std::move(*closed)));
      }
    }
    return out;
  }

  std::optional<EtcState> expand(const EtcState* st) {
    if (++nodes_ > opt_.node_budget || past(opt_.deadline)) return std::nullopt;
    if (st) {
      for (auto& closed : closures(*st)) {
        const auto& csc = *closed.csc;
        if (csc.empty()) return closed;
        if (csc.size() <= bound_ && useful(csc, s_)) return closed;
      }
      if (st->columns.size() + 1 >= opt_.etc.max_columns) return std::nullopt;
    }
    for (const auto& c : select_candidates(st, s_, opt_.etc, opt_.seed)) {
      // failed and pruned attempts cost work too
      if (++nodes_ > opt_.node_budget) return std::nullopt;
      auto child = step_to(st, c);
      if (!child) continue;
      auto left = child->leftover();
      if (left.size() > bound_ || is_tautology(left)) continue;
      if (!visited_.insert(memo_key(*child, left)).second) continue;
      if (auto r = expand(&*child)) return r;
      if (nodes_ > opt_.node_budget) return std::nullopt;
    }
    return std::nullopt;
  }

  const ClauseSet& s_;
  const RoundOptions& opt_;
  const bool prop_;
  std::size_t bound_ = 0;
  std::size_t nodes_ = 0;
  std::set<std::pair<std::vector<Literal>, std::vector<Literal>>> visited_;
};

}  // namespace

std::optional<EtcState> build_round(const ClauseSet& s, const RoundOptions& opt) {
  RoundSearch search(s, opt);
  for (std::size_t bound = 0; bound <= opt.etc.literal_threshold; ++bound) {
    if (auto r = search.bounded(bound)) return r;
    if (past(opt.deadline)) return std::nullopt;
  }
  return search.greedy();
}

std::optional<EtcState> build_covering_round(const ClauseSet& s, const RoundOptions& opt) {
  if (!s.propositional() || s.empty()) return std::nullopt;
  EtcConfig cfg = opt.etc;
  cfg.mode = SearchMode::Sat;
  cfg.allow_boundary_repeats = true;

  std::optional<EtcState> st;
  std::set<ClauseId> covered;
  for (std::size_t step = 0; step <= cfg.max_columns; ++step) {
    std::vector<const Clause*> uncovered;
    for (const auto& c : s)
      if (!covered.count(c.id)) uncovered.push_back(&c);
    if (st) {
      for (const Clause* u : uncovered) {
        bool dead = std::all_of(u->literals.begin(), u->literals.end(),
                                [&](const Literal& l) { return st->has_complement_on_boundary(l); });
        if (dead) return std::nullopt;
      }
      if (uncovered.size() <= 1) {
        std::vector<const Clause*> closers = uncovered;
        for (const auto& c : s) closers.push_back(&c);
        for (const Clause* d : closers) {
          bool hit = false, free = false;
          for (const auto& l : d->literals) (st->has_complement_on_boundary(l) ? hit : free) = true;
          if (!hit || !free) continue;
          EtcState closed = close(*st, *d);
          if (extract_model(closed, s)) return closed;
        }
        if (uncovered.empty()) return std::nullopt;
      }
    }
    std::optional<Candidate> pick;
    for (const auto& c : select_candidates(st ? &*st : nullptr, s, cfg, opt.seed))
      if (!covered.count(c.clause_id)) {
        pick = c;
        break;
      }
    if (!pick) return std::nullopt;
    const Clause& d = s.at(pick->clause_id);
    st = st ? extend(*st, d, pick->literal) : start(d, pick->literal, true);
    covered.insert(d.id);
  }
  return std::nullopt;
}

}  // namespace etm

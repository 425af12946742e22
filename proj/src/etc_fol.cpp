#include "etm/etc_fol.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace etm {

ClauseSet preprocess(const ClauseSet& s) {
  ClauseSet out(s.mode());
  std::set<std::string> used;
  std::vector<Clause> kept;
  for (const auto& c : s) {
    if (is_tautology(c)) continue;
    if (std::any_of(kept.begin(), kept.end(), [&](const Clause& k) { return is_variant(k.literals, c.literals); }))
      continue;
    Substitution r;
    for (const auto& v : c.vars()) {
      if (!used.count(v)) continue;
      std::string fresh = v + "_" + std::to_string(c.id);
      while (used.count(fresh)) fresh += "_";
      r.set(v, Term::var(fresh));
    }
    Clause renamed = etm::apply(r, c);
    for (const auto& v : renamed.vars()) used.insert(v);
    kept.push_back(renamed);
    out.insert(std::move(renamed));
  }
  out.infer_mode();
  return out;
}

namespace {

struct RenamedInput {
  std::vector<Literal> lits;
  std::optional<Literal> x;
};

RenamedInput rename_for_position(const Clause& c, const std::optional<Literal>& x, std::size_t pos) {
  auto r = suffix_renaming(c.vars(), "#" + std::to_string(pos));
  RenamedInput out;
  out.lits = etm::apply(r, c.literals);
  if (x) out.x = etm::apply(r, *x);
  return out;
}

bool repeats_boundary(const EtcState& st) {
  if (st.allow_boundary_repeats) return false;
  const auto& b = st.boundary;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (b[i] == b[j] || is_variant(b[i], b[j])) return true;
  return false;
}

std::optional<EtcState> instantiate(const EtcState& base, const Substitution& prior, const Substitution& theta) {
  EtcState cand = base;
  cand.sigma = compose(theta, prior);
  repartition(cand);
  if (check_invariants(cand) || repeats_boundary(cand)) return std::nullopt;
  return cand;
}

constexpr std::size_t kLeafLimit = 4096;

// Re-orients variable-to-variable bindings so that variables in `keep`
// survive: v -> w with v kept becomes w -> v. The result is a variant of
// the same unifier.
Substitution keep_names(Substitution theta, const std::set<std::string>& keep) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [v, t] : theta.bindings()) {
      if (!t.is_var() || !keep.count(v) || keep.count(t.name) || theta.binds(t.name)) continue;
      Substitution flip;
      flip.set(t.name, Term::var(v));
      theta = compose(flip, theta);
      changed = true;
      break;
    }
  }
  return theta;
}

// Picks, for each literal in `lits`, a boundary row whose complement it is
// unified with, or none. Keeps the best valid outcome.
std::optional<EtcState> max_pull_in(const EtcState& base, const Substitution& prior,
                                    const std::vector<Literal>& lits, const std::vector<Literal>& boundary,
                                    const std::set<std::string>& keep = {}) {
  std::optional<EtcState> best;
  long best_count = -1;
  std::size_t leaves = 0;
  std::function<void(std::size_t, const Substitution&, long)> search = [&](std::size_t m, const Substitution& theta,
                                                                           long count) {
    if (leaves >= kLeafLimit) return;
    if (count + static_cast<long>(lits.size() - m) <= best_count) return;
    if (m == lits.size()) {
      ++leaves;
      if (auto cand = instantiate(base, prior, keep_names(theta, keep))) {
        best = std::move(cand);
        best_count = count;
      }
      return;
    }
    for (const auto& b : boundary) {
      if (!may_be_complementary(lits[m], b)) continue;
      Substitution w = theta;
      if (!unify(lits[m], complement(b), w)) continue;
      search(m + 1, w, count + 1);
    }
    search(m + 1, theta, count);
  };
  search(0, Substitution{}, 0);
  return best;
}

}  // namespace

EtcState start_fol(const Clause& d1, const Literal& x1, bool allow_boundary_repeats) {
  if (!d1.contains(x1)) throw EtcError("start: literal " + to_string(x1) + " not in clause");
  auto in = rename_for_position(d1, x1, 1);
  return start(Clause(d1.id, in.lits, d1.origin), *in.x, allow_boundary_repeats);
}

std::optional<EtcState> extend_fol(const EtcState& st, const Clause& di, const Literal& xi,
                                   const SigmaPolicy& policy) {
  if (st.closed) throw EtcError("extend: ETC already closed");
  if (st.columns.empty()) throw EtcError("extend: ETC has no first column");
  if (!di.contains(xi)) throw EtcError("extend: literal " + to_string(xi) + " not in clause");
  auto in = rename_for_position(di, xi, st.columns.size() + 1);
  EtcState base = st;
  EtcColumn col;
  col.clause_id = di.id;
  col.source = in.lits;
  col.source_boundary = in.x;
  col.role = ColumnRole::Boundary;
  base.columns.push_back(std::move(col));
  if (policy.kind == SigmaPolicy::Kind::Explicit) return instantiate(base, st.sigma, policy.sigma);
  std::vector<Literal> others;
  for (const auto& l : in.lits)
    if (!(l == *in.x)) others.push_back(l);
  std::set<std::string> keep;
  in.x->collect_vars(keep);
  return max_pull_in(base, st.sigma, others, st.boundary, keep);
}

std::optional<EtcState> close_fol(const EtcState& st, const Clause& dk, const SigmaPolicy& policy) {
  if (st.closed) throw EtcError("close: ETC already closed");
  if (st.boundary.empty()) throw EtcError("close: no boundary literal to close against");
  auto in = rename_for_position(dk, std::nullopt, st.columns.size() + 1);
  EtcState base = st;
  EtcColumn col;
  col.clause_id = dk.id;
  col.source = in.lits;
  col.role = ColumnRole::Closing;
  base.columns.push_back(std::move(col));
  base.closed = true;
  if (policy.kind == SigmaPolicy::Kind::Explicit) return instantiate(base, st.sigma, policy.sigma);
  return max_pull_in(base, st.sigma, in.lits, st.boundary);
}

EtcState fall_in(const EtcState& st) {
  EtcState cur = st;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t p = 0; p < cur.columns.size() && !changed; ++p) {
      const auto earlier = cur.boundary_before(p);
      const auto d_plus = cur.columns[p].d_plus;
      for (const auto& l : d_plus) {
        for (const auto& b : earlier) {
          if (!may_be_complementary(l, b)) continue;
          Substitution theta;
          if (!unify(l, complement(b), theta)) continue;
          auto cand = instantiate(cur, cur.sigma, theta);
          if (!cand) continue;
          std::size_t affected = 0;
          for (std::size_t q = 0; q < cur.columns.size(); ++q)
            if (q != p && !same_literal_set(cur.columns[q].literals(), cand->columns[q].literals())) ++affected;
          if (affected > kFallInColumnLimit) continue;
          if (cand->leftover().size() >= cur.leftover().size()) continue;
          cur = std::move(*cand);
          changed = true;
          break;
        }
        if (changed) break;
      }
    }
  }
  return cur;
}

bool redundancy_guard(const Substitution& sigma, const Clause& clause, const ClauseSet& s) {
  auto inst = etm::apply(sigma, clause.literals);
  if (is_tautology(inst)) return false;
  return std::none_of(s.begin(), s.end(), [&](const Clause& e) {
    return e.id != clause.id && variant_subsumes(e.literals, inst);
  });
}

EtcState canonicalize_variables(const EtcState& st) {
  std::vector<Literal> order;
  if (st.csc) order = *st.csc;
  for (const auto& c : st.columns) {
    order.insert(order.end(), c.d_minus.begin(), c.d_minus.end());
    order.insert(order.end(), c.d_plus.begin(), c.d_plus.end());
  }
  auto r = canonical_renaming(order);
  if (r.empty()) return st;
  EtcState out = st;
  out.sigma = compose(r, st.sigma);
  repartition(out);
  return out;
}

}  // namespace etm

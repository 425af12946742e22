#include "etm/etc.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace etm {

const char* to_string(ColumnRole r) {
  switch (r) {
    case ColumnRole::Boundary: return "boundary";
    case ColumnRole::Stair: return "stair";
    case ColumnRole::Closing: return "closing";
  }
  return "?";
}

const char* to_string(StopReason r) {
  switch (r) {
    case StopReason::None: return "none";
    case StopReason::EmptyDPlus: return "empty_dplus";
    case StopReason::NoComplementPartner: return "no_complement_partner";
    case StopReason::Threshold: return "threshold";
  }
  return "?";
}

std::vector<Literal> EtcColumn::literals() const {
  std::vector<Literal> out = d_minus;
  out.insert(out.end(), d_plus.begin(), d_plus.end());
  return out;
}

std::vector<Literal> EtcState::leftover() const {
  std::vector<Literal> out;
  for (const auto& c : columns)
    for (const auto& l : c.d_plus)
      if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  return out;
}

const EtcColumn* EtcState::closing_column() const {
  for (const auto& c : columns)
    if (c.role == ColumnRole::Closing) return &c;
  return nullptr;
}

std::vector<ClauseId> EtcState::clause_ids() const {
  std::vector<ClauseId> ids;
  for (const auto& c : columns)
    if (std::find(ids.begin(), ids.end(), c.clause_id) == ids.end()) ids.push_back(c.clause_id);
  return ids;
}

std::vector<Literal> EtcState::boundary_before(std::size_t pos) const {
  std::vector<Literal> out;
  for (std::size_t p = 0; p < pos && p < columns.size(); ++p)
    if (columns[p].role == ColumnRole::Boundary && columns[p].boundary_literal)
      out.push_back(*columns[p].boundary_literal);
  return out;
}

bool EtcState::has_complement_on_boundary(const Literal& l) const {
  return std::any_of(boundary.begin(), boundary.end(),
                     [&](const Literal& b) { return are_complementary(b, l); });
}

EtcConfig EtcConfig::defaults(SearchMode mode, const ClauseSet& s) {
  EtcConfig c;
  c.mode = mode;
  c.literal_threshold = 2 * s.max_width();
  c.allow_boundary_repeats = mode == SearchMode::Sat;
  c.max_columns = std::max<std::size_t>(2, 4 * s.size());
  return c;
}

namespace {

bool contains(const std::vector<Literal>& v, const Literal& l) {
  return std::find(v.begin(), v.end(), l) != v.end();
}

bool complement_in(const std::vector<Literal>& v, const Literal& l) {
  return std::any_of(v.begin(), v.end(), [&](const Literal& b) { return are_complementary(b, l); });
}

void refresh_boundary(EtcState& st) {
  st.boundary.clear();
  for (const auto& c : st.columns)
    if (c.role == ColumnRole::Boundary && c.boundary_literal) st.boundary.push_back(*c.boundary_literal);
  if (st.closed) st.csc = st.leftover();
}

EtcColumn make_column(ClauseId id, const std::vector<Literal>& lits, const std::optional<Literal>& x,
                      ColumnRole role, const std::vector<Literal>& earlier) {
  EtcColumn col;
  col.clause_id = id;
  col.source = lits;
  col.source_boundary = x;
  col.role = role;
  if (x) {
    col.boundary_literal = x;
    col.d_minus.push_back(*x);
  }
  for (const auto& l : lits) {
    if (x && l == *x) continue;
    (complement_in(earlier, l) ? col.d_minus : col.d_plus).push_back(l);
  }
  return col;
}

}  // namespace

EtcState start(const Clause& d1, const Literal& x1, bool allow_boundary_repeats) {
  if (!d1.contains(x1)) throw EtcError("start: literal " + to_string(x1) + " not in clause");
  EtcState st;
  st.allow_boundary_repeats = allow_boundary_repeats;
  st.columns.push_back(make_column(d1.id, d1.literals, x1, ColumnRole::Boundary, {}));
  refresh_boundary(st);
  return st;
}

EtcState extend(const EtcState& st, const Clause& di, const Literal& xi) {
  if (st.closed) throw EtcError("extend: ETC already closed");
  if (st.columns.empty()) throw EtcError("extend: ETC has no first column");
  if (!di.contains(xi)) throw EtcError("extend: literal " + to_string(xi) + " not in clause");
  if (st.has_complement_on_boundary(xi))
    throw EtcError("extend: " + to_string(xi) + " is complementary to a boundary literal");
  if (!st.allow_boundary_repeats && contains(st.boundary, xi))
    throw EtcError("extend: boundary literal " + to_string(xi) + " repeated");
  EtcState next = st;
  next.columns.push_back(make_column(di.id, di.literals, xi, ColumnRole::Boundary, st.boundary));
  refresh_boundary(next);
  return next;
}

EtcState add_stair(const EtcState& st, const Clause& di) {
  if (st.closed) throw EtcError("add_stair: ETC already closed");
  if (di.empty()) throw EtcError("add_stair: empty clause");
  for (const auto& l : di.literals)
    if (!st.has_complement_on_boundary(l))
      throw EtcError("add_stair: " + to_string(l) + " is not a boundary complement");
  EtcState next = st;
  next.columns.push_back(make_column(di.id, di.literals, std::nullopt, ColumnRole::Stair, st.boundary));
  refresh_boundary(next);
  return next;
}

EtcState close(const EtcState& st, const Clause& dk) {
  if (st.closed) throw EtcError("close: ETC already closed");
  if (st.boundary.empty()) throw EtcError("close: no boundary literal to close against");
  auto col = make_column(dk.id, dk.literals, std::nullopt, ColumnRole::Closing, st.boundary);
  if (col.d_minus.empty()) throw EtcError("close: clause has no complement of a boundary literal");
  EtcState next = st;
  next.columns.push_back(std::move(col));
  next.closed = true;
  refresh_boundary(next);
  return next;
}

void repartition(EtcState& st) {
  std::vector<Literal> earlier;
  for (auto& col : st.columns) {
    auto lits = etm::apply(st.sigma, col.source);
    std::optional<Literal> x;
    if (col.role == ColumnRole::Boundary && col.source_boundary) x = etm::apply(st.sigma, *col.source_boundary);
    auto fresh = make_column(col.clause_id, lits, x, col.role, earlier);
    col.d_minus = std::move(fresh.d_minus);
    col.d_plus = std::move(fresh.d_plus);
    col.boundary_literal = x;
    std::set<std::string> vars;
    for (const auto& l : col.source) l.collect_vars(vars);
    col.sigma = st.sigma.restricted_to(vars);
    if (x) earlier.push_back(*x);
  }
  refresh_boundary(st);
}

std::optional<std::string> check_invariants(const EtcState& st) {
  std::vector<Literal> earlier;
  std::size_t closing = 0;
  for (std::size_t p = 0; p < st.columns.size(); ++p) {
    const auto& c = st.columns[p];
    std::string where = "column " + std::to_string(p + 1) + " (C" + std::to_string(c.clause_id) + ")";
    if (c.d_minus.empty()) return where + ": empty d_minus";
    for (const auto& l : c.d_minus)
      if (contains(c.d_plus, l)) return where + ": " + to_string(l) + " in both d_minus and d_plus";
    if (!c.source.empty() && !same_literal_set(etm::apply(st.sigma, c.source), c.literals()))
      return where + ": literals differ from the instantiated clause";
    if (p == 0 && c.role != ColumnRole::Boundary) return where + ": first column has no boundary literal";
    switch (c.role) {
      case ColumnRole::Boundary: {
        if (!c.boundary_literal) return where + ": missing boundary literal";
        const Literal& x = *c.boundary_literal;
        if (!contains(c.d_minus, x)) return where + ": boundary literal not in d_minus";
        if (complement_in(earlier, x)) return where + ": boundary literal complements an earlier one";
        if (!st.allow_boundary_repeats && contains(earlier, x))
          return where + ": repeated boundary literal " + to_string(x);
        for (const auto& l : c.d_minus)
          if (!(l == x) && !complement_in(earlier, l))
            return where + ": " + to_string(l) + " in d_minus without an earlier partner";
        earlier.push_back(x);
        break;
      }
      case ColumnRole::Stair:
        if (c.boundary_literal) return where + ": stair column with a boundary literal";
        if (!c.d_plus.empty()) return where + ": stair column with non-empty d_plus";
        for (const auto& l : c.d_minus)
          if (!complement_in(earlier, l)) return where + ": stair literal without an earlier partner";
        break;
      case ColumnRole::Closing:
        ++closing;
        if (c.boundary_literal) return where + ": closing column with a boundary literal";
        for (const auto& l : c.d_minus)
          if (!complement_in(earlier, l)) return where + ": closing literal without a partner";
        break;
    }
  }
  if (!(earlier == st.boundary)) return std::string("boundary list out of date");
  if (st.closed) {
    if (closing != 1) return std::string("closed ETC must have exactly one closing column");
    if (st.columns.size() < 2) return std::string("closed ETC needs at least two columns");
    if (!st.csc || !same_literal_set(*st.csc, st.leftover()))
      return std::string("csc differs from the union of d_plus");
  } else if (closing != 0) {
    return std::string("open ETC has a closing column");
  }
  return std::nullopt;
}

namespace {

bool unifiable(const Literal& a, const Literal& b) {
  if (a.positive != b.positive || a.predicate != b.predicate || a.args.size() != b.args.size())
    return false;
  if (a.is_ground() && b.is_ground()) return a == b;
  Substitution s;
  return unify(a, b, s);
}

Clause fresh_copy(const Clause& c) {
  if (c.is_ground()) return c;
  return rename_with_suffix(c, "#?");
}

std::size_t clauses_with_unifiable(const ClauseSet& s, const Literal& l) {
  std::size_t n = 0;
  for (const auto& c : s) {
    Clause f = fresh_copy(c);
    if (std::any_of(f.literals.begin(), f.literals.end(), [&](const Literal& m) { return unifiable(m, l); }))
      ++n;
  }
  return n;
}

}  // namespace

StopDecision should_stop(const EtcState& st, const EtcConfig& cfg, const ClauseSet& s) {
  if (!st.closed) throw EtcError("should_stop: ETC is not closed");
  const EtcColumn* k = st.closing_column();
  if (k->d_plus.empty()) return {true, StopReason::EmptyDPlus};
  for (const auto& x : k->d_plus)
    if (clauses_with_unifiable(s, complement(x)) == 0) return {true, StopReason::NoComplementPartner};
  if (st.csc && st.csc->size() > cfg.literal_threshold && !k->d_minus.empty())
    return {true, StopReason::Threshold};
  return {};
}

EtcState normalize_stairs(const EtcState& st) {
  EtcState out = st;
  std::stable_partition(out.columns.begin(), out.columns.end(),
                        [](const EtcColumn& c) { return c.role != ColumnRole::Stair; });
  refresh_boundary(out);
  return out;
}

EtcState prune_redundant_columns(const EtcState& st) {
  EtcState cur = st;
  for (bool changed = true; changed;) {
    changed = false;
    std::size_t closing_pos = cur.columns.size();
    for (std::size_t p = 0; p < cur.columns.size(); ++p)
      if (cur.columns[p].role == ColumnRole::Closing) closing_pos = p;
    for (std::size_t p = 0; p < cur.columns.size() && !changed; ++p) {
      const auto& col = cur.columns[p];
      bool removable = false;
      if (col.role == ColumnRole::Stair && p < closing_pos) removable = true;
      if (col.role == ColumnRole::Boundary && col.boundary_literal) {
        Literal want = complement(*col.boundary_literal);
        removable = std::none_of(cur.columns.begin() + static_cast<std::ptrdiff_t>(p) + 1, cur.columns.end(),
                                 [&](const EtcColumn& later) { return contains(later.d_minus, want); });
      }
      if (!removable) continue;
      EtcState cand = cur;
      cand.columns.erase(cand.columns.begin() + static_cast<std::ptrdiff_t>(p));
      if (cand.columns.empty() || cand.columns.front().role != ColumnRole::Boundary) continue;
      bool have_source = std::all_of(cand.columns.begin(), cand.columns.end(),
                                     [](const EtcColumn& c) { return !c.source.empty(); });
      if (have_source) repartition(cand);
      else refresh_boundary(cand);
      if (check_invariants(cand)) continue;
      cur = std::move(cand);
      changed = true;
    }
  }
  return cur;
}

bool covers_all_clauses(const EtcState& st, const ClauseSet& s) {
  std::set<ClauseId> used;
  for (const auto& c : st.columns)
    if (c.role != ColumnRole::Stair) used.insert(c.clause_id);
  return std::all_of(s.begin(), s.end(), [&](const Clause& c) { return used.count(c.id) != 0; });
}

std::optional<Assignment> extract_model(const EtcState& st, const ClauseSet& s) {
  if (!st.closed) throw EtcError("extract_model: ETC is not closed");
  if (!s.propositional()) return std::nullopt;
  const EtcColumn* k = st.closing_column();
  if (k == nullptr || k->d_plus.empty() || !covers_all_clauses(st, s)) return std::nullopt;
  Assignment base;
  for (const auto& v : propositional_variables(s.clauses())) base[v] = false;
  for (const auto& b : st.boundary) base[b.predicate] = b.positive;
  for (const auto& x : k->d_plus) {
    Assignment a = base;
    a[x.predicate] = x.positive;
    if (verify_model(s.clauses(), a)) return a;
  }
  return std::nullopt;
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Ranked {
  Candidate cand;
  long primary = 0;
  long secondary = 0;
  std::uint64_t shuffle = 0;
  std::size_t order = 0;
};

}  // namespace

std::vector<Candidate> select_candidates(const EtcState* st, const ClauseSet& s, const EtcConfig& cfg,
                                         std::uint64_t seed) {
  static const std::vector<Literal> kNone;
  const auto& boundary = st ? st->boundary : kNone;
  const std::vector<Literal> left = st ? st->leftover() : std::vector<Literal>{};
  const bool allow_repeats = st ? st->allow_boundary_repeats : cfg.allow_boundary_repeats;

  std::map<Literal, std::size_t> count_cache;
  auto count = [&](const Literal& l) {
    if (!l.is_ground()) return clauses_with_unifiable(s, l);
    auto it = count_cache.find(l);
    if (it == count_cache.end()) it = count_cache.emplace(l, clauses_with_unifiable(s, l)).first;
    return it->second;
  };
  auto near = [&](const std::vector<Literal>& v, const Literal& l) {
    return std::any_of(v.begin(), v.end(), [&](const Literal& b) {
      return b == l || (!l.is_ground() && is_variant(b, l));
    });
  };

  std::vector<Ranked> ranked;
  std::size_t order = 0;
  for (const auto& orig : s) {
    Clause c = fresh_copy(orig);
    for (std::size_t j = 0; j < c.literals.size(); ++j, ++order) {
      const Literal& l = c.literals[j];
      if (complement_in(boundary, l)) continue;
      const bool repeat = near(boundary, l);
      if (repeat && !allow_repeats) continue;

      std::size_t residual = 0;
      for (std::size_t m = 0; m < c.literals.size(); ++m) {
        if (m == j) continue;
        const Literal cm = complement(c.literals[m]);
        if (std::none_of(boundary.begin(), boundary.end(), [&](const Literal& b) { return unifiable(cm, b); }))
          ++residual;
      }
      Ranked r;
      r.cand = Candidate{orig.id, j, orig.literals[j], 0};
      const bool in_left = near(left, l);
      if (cfg.mode == SearchMode::Unsat) {
        r.cand.tier = residual == 0 ? 0 : in_left ? 1 : 2;
        r.primary = -static_cast<long>(count(complement(l)));
      } else {
        r.cand.tier = c.size() == 1 ? 0 : repeat ? 1 : in_left ? 2 : 3;
        r.primary = -static_cast<long>(count(l));
        r.secondary = static_cast<long>(count(complement(l)));
      }
      r.shuffle = seed == 0 ? 0 : mix(seed ^ mix((static_cast<std::uint64_t>(orig.id) << 20) ^ j));
      r.order = order;
      ranked.push_back(std::move(r));
    }
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    return std::tie(a.cand.tier, a.primary, a.secondary, a.shuffle, a.cand.clause_id, a.cand.literal_index) <
           std::tie(b.cand.tier, b.primary, b.secondary, b.shuffle, b.cand.clause_id, b.cand.literal_index);
  });
  std::vector<Candidate> out;
  out.reserve(ranked.size());
  for (auto& r : ranked) out.push_back(std::move(r.cand));
  return out;
}

}  // namespace etm

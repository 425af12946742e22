#include "etm/unification.hpp"

#include <algorithm>
#include <functional>

namespace etm {

const Term* Substitution::lookup(const std::string& v) const {
  auto it = map_.find(v);
  return it == map_.end() ? nullptr : &it->second;
}

void Substitution::set(const std::string& v, Term t) {
  if (t.is_var() && t.name == v) {
    map_.erase(v);
    return;
  }
  map_[v] = std::move(t);
}

Substitution Substitution::restricted_to(const std::set<std::string>& vars) const {
  Substitution r;
  for (const auto& [v, t] : map_)
    if (vars.count(v)) r.map_.emplace(v, t);
  return r;
}

bool Substitution::is_renaming() const {
  std::set<std::string> seen;
  for (const auto& [v, t] : map_) {
    if (!t.is_var() || !seen.insert(t.name).second) return false;
  }
  return true;
}

Term apply(const Substitution& s, const Term& t) {
  if (s.empty()) return t;
  if (t.is_var()) {
    const Term* b = s.lookup(t.name);
    return b ? *b : t;
  }
  Term r{Term::Kind::Function, t.name, {}};
  r.args.reserve(t.args.size());
  for (const auto& a : t.args) r.args.push_back(apply(s, a));
  return r;
}

Literal apply(const Substitution& s, const Literal& l) {
  Literal r{l.positive, l.predicate, {}};
  r.args.reserve(l.args.size());
  for (const auto& a : l.args) r.args.push_back(apply(s, a));
  return r;
}

std::vector<Literal> apply(const Substitution& s, const std::vector<Literal>& lits) {
  std::vector<Literal> out;
  out.reserve(lits.size());
  for (const auto& l : lits) out.push_back(apply(s, l));
  return merge_duplicate_literals(out);
}

Clause apply(const Substitution& s, const Clause& c) {
  return Clause(c.id, apply(s, c.literals), c.origin);
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
  Substitution r;
  for (const auto& [v, t] : inner.bindings()) r.set(v, apply(outer, t));
  for (const auto& [v, t] : outer.bindings())
    if (!inner.binds(v)) r.set(v, t);
  return r;
}

namespace {

void bind_var(Substitution& w, const std::string& v, const Term& t) {
  Substitution single;
  single.set(v, t);
  Substitution next;
  for (const auto& [u, ut] : w.bindings()) next.set(u, apply(single, ut));
  next.set(v, t);
  w = std::move(next);
}

bool unify_rec(const Term& x0, const Term& y0, Substitution& w) {
  Term x = apply(w, x0);
  Term y = apply(w, y0);
  if (x == y) return true;
  if (x.is_var()) {
    if (y.contains_var(x.name)) return false;
    bind_var(w, x.name, y);
    return true;
  }
  if (y.is_var()) {
    if (x.contains_var(y.name)) return false;
    bind_var(w, y.name, x);
    return true;
  }
  if (x.name != y.name || x.args.size() != y.args.size()) return false;
  for (std::size_t i = 0; i < x.args.size(); ++i)
    if (!unify_rec(x.args[i], y.args[i], w)) return false;
  return true;
}

}  // namespace

bool unify(const Term& a, const Term& b, Substitution& s) {
  Substitution w = s;
  if (!unify_rec(a, b, w)) return false;
  s = std::move(w);
  return true;
}

bool unify(const Literal& a, const Literal& b, Substitution& s) {
  if (a.positive != b.positive || a.predicate != b.predicate || a.args.size() != b.args.size())
    return false;
  Substitution w = s;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!unify_rec(a.args[i], b.args[i], w)) return false;
  s = std::move(w);
  return true;
}

std::optional<Substitution> mgu(const Literal& a, const Literal& b) {
  Substitution s;
  if (!unify(a, b, s)) return std::nullopt;
  return s;
}

namespace {

// Matching allows identity bindings, which Substitution drops.
using MatchMap = std::map<std::string, Term>;

bool match_term(const Term& pattern, const Term& target, MatchMap& m) {
  if (pattern.is_var()) {
    auto it = m.find(pattern.name);
    if (it != m.end()) return it->second == target;
    m.emplace(pattern.name, target);
    return true;
  }
  if (target.is_var() || pattern.name != target.name || pattern.args.size() != target.args.size())
    return false;
  for (std::size_t i = 0; i < pattern.args.size(); ++i)
    if (!match_term(pattern.args[i], target.args[i], m)) return false;
  return true;
}

bool match_literal(const Literal& p, const Literal& t, MatchMap& m) {
  if (p.positive != t.positive || p.predicate != t.predicate || p.args.size() != t.args.size())
    return false;
  MatchMap w = m;
  for (std::size_t i = 0; i < p.args.size(); ++i)
    if (!match_term(p.args[i], t.args[i], w)) return false;
  m = std::move(w);
  return true;
}

bool injective_renaming(const MatchMap& m) {
  std::set<std::string> seen;
  for (const auto& [v, t] : m)
    if (!t.is_var() || !seen.insert(t.name).second) return false;
  return true;
}

MatchMap to_map(const Substitution& s) { return MatchMap(s.bindings().begin(), s.bindings().end()); }

Substitution to_substitution(const MatchMap& m) {
  Substitution s;
  for (const auto& [v, t] : m) s.set(v, t);
  return s;
}

bool search_matches(const std::vector<Literal>& pattern, const std::vector<Literal>& target,
                    std::size_t i, MatchMap& m, std::vector<int>& hits, std::size_t uncovered,
                    bool need_cover, bool need_renaming) {
  if (i == pattern.size()) return !need_cover || uncovered == 0;
  if (need_cover && pattern.size() - i < uncovered) return false;
  for (std::size_t j = 0; j < target.size(); ++j) {
    MatchMap w = m;
    if (!match_literal(pattern[i], target[j], w)) continue;
    if (need_renaming && !injective_renaming(w)) continue;
    bool fresh = hits[j]++ == 0;
    if (search_matches(pattern, target, i + 1, w, hits, uncovered - (fresh ? 1 : 0), need_cover,
                       need_renaming)) {
      m = std::move(w);
      return true;
    }
    --hits[j];
  }
  return false;
}

std::optional<Substitution> match_set(const std::vector<Literal>& pattern,
                                      const std::vector<Literal>& target, bool need_cover,
                                      bool need_renaming) {
  auto p = merge_duplicate_literals(pattern);
  auto t = merge_duplicate_literals(target);
  MatchMap m;
  std::vector<int> hits(t.size(), 0);
  if (!search_matches(p, t, 0, m, hits, t.size(), need_cover, need_renaming)) return std::nullopt;
  return to_substitution(m);
}

}  // namespace

bool match(const Term& pattern, const Term& target, Substitution& s) {
  MatchMap m = to_map(s);
  if (!match_term(pattern, target, m)) return false;
  s = to_substitution(m);
  return true;
}

bool match(const Literal& pattern, const Literal& target, Substitution& s) {
  MatchMap m = to_map(s);
  if (!match_literal(pattern, target, m)) return false;
  s = to_substitution(m);
  return true;
}

std::optional<Substitution> match_onto(const std::vector<Literal>& pattern,
                                       const std::vector<Literal>& target) {
  return match_set(pattern, target, true, false);
}

bool is_variant(const std::vector<Literal>& a, const std::vector<Literal>& b) {
  auto ma = merge_duplicate_literals(a);
  auto mb = merge_duplicate_literals(b);
  if (ma.size() != mb.size()) return false;
  return match_set(ma, mb, true, true).has_value();
}

bool is_variant(const Literal& a, const Literal& b) {
  return is_variant(std::vector<Literal>{a}, std::vector<Literal>{b});
}

bool variant_subsumes(const std::vector<Literal>& small, const std::vector<Literal>& big) {
  return match_set(small, big, false, true).has_value();
}

Substitution suffix_renaming(const std::set<std::string>& vars, const std::string& suffix) {
  Substitution r;
  for (const auto& v : vars) r.set(v, Term::var(v + suffix));
  return r;
}

Clause rename_with_suffix(const Clause& c, const std::string& suffix) {
  return apply(suffix_renaming(c.vars(), suffix), c);
}

RenamedClauses rename_apart(const std::vector<Clause>& cs) {
  RenamedClauses out;
  std::set<std::string> all;
  bool disjoint = true;
  for (const auto& c : cs) {
    for (const auto& v : c.vars())
      if (!all.insert(v).second) disjoint = false;
  }
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (disjoint) {
      out.clauses.push_back(cs[k]);
      out.renamings.emplace_back();
    } else {
      auto r = suffix_renaming(cs[k].vars(), "#" + std::to_string(k + 1));
      out.clauses.push_back(apply(r, cs[k]));
      out.renamings.push_back(std::move(r));
    }
  }
  return out;
}

Substitution canonical_renaming(const std::vector<Literal>& lits, const std::string& prefix) {
  std::vector<std::string> order;
  std::function<void(const Term&)> walk = [&](const Term& t) {
    if (t.is_var()) {
      if (std::find(order.begin(), order.end(), t.name) == order.end()) order.push_back(t.name);
      return;
    }
    for (const auto& a : t.args) walk(a);
  };
  for (const auto& l : lits)
    for (const auto& a : l.args) walk(a);
  Substitution r;
  for (std::size_t i = 0; i < order.size(); ++i) r.set(order[i], Term::var(prefix + std::to_string(i + 1)));
  return r;
}

std::string to_string(const Substitution& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, t] : s.bindings()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(t) + "/" + v;
  }
  return out + "}";
}

}  // namespace etm

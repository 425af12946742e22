#include "etm/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "etm/unification.hpp"

namespace etm {

namespace {

void require_ground(const std::vector<std::vector<Literal>>& cs) {
  for (const auto& c : cs) {
    if (c.empty()) throw std::invalid_argument("standard contradiction check on an empty clause");
    for (const auto& l : c)
      if (!l.is_ground()) throw std::invalid_argument("non-ground literal " + to_string(l));
  }
}

// Depth-first walk over the Cartesian product. A partial selection that
// already holds a complementary pair covers its whole subtree.
bool all_selections_clash(const std::vector<std::vector<Literal>>& cs, std::size_t i,
                          std::vector<const Literal*>& chosen, Selection& sel) {
  if (i == cs.size()) return false;
  for (std::size_t j = 0; j < cs[i].size(); ++j) {
    const Literal& l = cs[i][j];
    bool clash = std::any_of(chosen.begin(), chosen.end(),
                             [&](const Literal* p) { return are_complementary(*p, l); });
    if (clash) continue;
    chosen.push_back(&l);
    sel.push_back(j);
    bool ok = all_selections_clash(cs, i + 1, chosen, sel);
    if (!ok) return false;
    chosen.pop_back();
    sel.pop_back();
  }
  return true;
}

}  // namespace

bool is_standard_contradiction(const std::vector<std::vector<Literal>>& cs, Selection* witness) {
  require_ground(cs);
  std::vector<const Literal*> chosen;
  Selection sel;
  bool ok = all_selections_clash(cs, 0, chosen, sel);
  if (!ok && witness) *witness = sel;
  return ok;
}

bool is_standard_contradiction(const std::vector<Clause>& cs, Selection* witness) {
  std::vector<std::vector<Literal>> lits;
  lits.reserve(cs.size());
  for (const auto& c : cs) lits.push_back(c.literals);
  return is_standard_contradiction(lits, witness);
}

std::vector<std::string> propositional_variables(const std::vector<Clause>& cs) {
  std::vector<std::string> vars;
  std::set<std::string> seen;
  for (const auto& c : cs)
    for (const auto& l : c.literals) {
      if (!l.is_propositional())
        throw std::invalid_argument("first-order literal " + to_string(l) + " in propositional check");
      if (seen.insert(l.predicate).second) vars.push_back(l.predicate);
    }
  return vars;
}

namespace {

struct Masks {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
};

std::vector<Masks> clause_masks(const std::vector<Clause>& cs, const std::vector<std::string>& vars) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vars.size(); ++i) index[vars[i]] = i;
  std::vector<Masks> out;
  for (const auto& c : cs) {
    Masks m;
    for (const auto& l : c.literals) {
      std::uint64_t bit = std::uint64_t{1} << index.at(l.predicate);
      (l.positive ? m.pos : m.neg) |= bit;
    }
    out.push_back(m);
  }
  return out;
}

}  // namespace

std::optional<Assignment> find_model_bruteforce(const std::vector<Clause>& cs, std::size_t cap) {
  auto vars = propositional_variables(cs);
  if (vars.size() > cap || vars.size() > 62)
    throw std::invalid_argument("too many variables for truth-table check: " +
                                std::to_string(vars.size()));
  auto masks = clause_masks(cs, vars);
  const std::uint64_t total = std::uint64_t{1} << vars.size();
  for (std::uint64_t a = 0; a < total; ++a) {
    bool all = std::all_of(masks.begin(), masks.end(),
                           [a](const Masks& m) { return (a & m.pos) != 0 || (~a & m.neg) != 0; });
    if (!all) continue;
    Assignment model;
    for (std::size_t i = 0; i < vars.size(); ++i) model[vars[i]] = ((a >> i) & 1U) != 0;
    return model;
  }
  return std::nullopt;
}

bool is_unsatisfiable_bruteforce(const std::vector<Clause>& cs, std::size_t cap) {
  return !find_model_bruteforce(cs, cap).has_value();
}

bool satisfies(const Clause& c, const Assignment& a) {
  for (const auto& l : c.literals) {
    auto it = a.find(l.predicate);
    if (it == a.end()) throw std::invalid_argument("assignment misses variable " + l.predicate);
    if (it->second == l.positive) return true;
  }
  return false;
}

bool verify_model(const std::vector<Clause>& cs, const Assignment& a) {
  for (const auto& v : propositional_variables(cs))
    if (!a.count(v)) throw std::invalid_argument("assignment misses variable " + v);
  return std::all_of(cs.begin(), cs.end(), [&](const Clause& c) { return satisfies(c, a); });
}

Shadow propositional_shadow(const std::vector<Clause>& cs) {
  Shadow sh;
  for (const auto& c : cs) {
    std::vector<Literal> lits;
    for (const auto& l : c.literals) {
      if (!l.is_ground()) throw std::invalid_argument("non-ground literal " + to_string(l));
      Literal atom = l;
      atom.positive = true;
      auto it = sh.atom_to_var.find(atom);
      if (it == sh.atom_to_var.end())
        it = sh.atom_to_var.emplace(atom, "a" + std::to_string(sh.atom_to_var.size() + 1)).first;
      lits.push_back(Literal{l.positive, it->second, {}});
    }
    sh.clauses.emplace_back(c.id, std::move(lits), c.origin);
  }
  return sh;
}

std::vector<Clause> ground_with_fresh_constants(const std::vector<Clause>& cs) {
  std::set<std::string> vars;
  for (const auto& c : cs)
    for (const auto& l : c.literals) l.collect_vars(vars);
  Substitution g;
  for (const auto& v : vars) g.set(v, Term::fn("$sk_" + v));
  std::vector<Clause> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(apply(g, c));
  return out;
}

}  // namespace etm

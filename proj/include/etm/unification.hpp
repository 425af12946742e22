#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "etm/logic.hpp"

namespace etm {

// Finite map from variable names to terms. Kept idempotent by the
// operations in this header: no bound variable occurs in any range term.
class Substitution {
 public:
  Substitution() = default;

  const Term* lookup(const std::string& v) const;
  bool binds(const std::string& v) const { return map_.count(v) != 0; }
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  const std::map<std::string, Term>& bindings() const { return map_; }

  // Raw insertion; callers are responsible for idempotence. Identity
  // bindings are dropped.
  void set(const std::string& v, Term t);
  void erase(const std::string& v) { map_.erase(v); }

  Substitution restricted_to(const std::set<std::string>& vars) const;
  bool is_renaming() const;

  bool operator==(const Substitution&) const = default;

 private:
  std::map<std::string, Term> map_;
};

Term apply(const Substitution& s, const Term& t);
Literal apply(const Substitution& s, const Literal& l);
std::vector<Literal> apply(const Substitution& s, const std::vector<Literal>& lits);
Clause apply(const Substitution& s, const Clause& c);

// apply(compose(outer, inner), t) == apply(outer, apply(inner, t)).
Substitution compose(const Substitution& outer, const Substitution& inner);

// Extends `s` so that both terms become equal under it. Variable-variable
// pairs bind the variable on the left. On failure `s` is left unchanged.
bool unify(const Term& a, const Term& b, Substitution& s);
bool unify(const Literal& a, const Literal& b, Substitution& s);

// Most general unifier of two literals of the same sign and predicate.
std::optional<Substitution> mgu(const Literal& a, const Literal& b);

// One-way matching: extends `s` so that apply(s, pattern) == target.
// Variables of the target are treated as constants.
bool match(const Term& pattern, const Term& target, Substitution& s);
bool match(const Literal& pattern, const Literal& target, Substitution& s);

// True iff the pattern literals map onto exactly the target set under a
// single substitution (every target literal is hit).
std::optional<Substitution> match_onto(const std::vector<Literal>& pattern,
                                       const std::vector<Literal>& target);

// Injective variable renaming r with apply(r, a) and b equal as sets.
bool is_variant(const std::vector<Literal>& a, const std::vector<Literal>& b);
bool is_variant(const Literal& a, const Literal& b);

// Some variable renaming of `small` is a subset of `big`.
bool variant_subsumes(const std::vector<Literal>& small, const std::vector<Literal>& big);

// Appends `suffix` to every variable name.
Substitution suffix_renaming(const std::set<std::string>& vars, const std::string& suffix);
Clause rename_with_suffix(const Clause& c, const std::string& suffix);

struct RenamedClauses {
  std::vector<Clause> clauses;
  std::vector<Substitution> renamings;
};

// Pairwise variable-disjoint copies. Already disjoint input is returned
// unchanged with identity renamings; otherwise clause k (1-based) gets
// the suffix "#k" on every variable.
RenamedClauses rename_apart(const std::vector<Clause>& cs);

// Renames variables to V1, V2, ... in order of first appearance.
Substitution canonical_renaming(const std::vector<Literal>& lits, const std::string& prefix = "V");

std::string to_string(const Substitution& s);

}  // namespace etm

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etm/logic.hpp"

namespace etm {

// Truth values for propositional variables, keyed by predicate name.
using Assignment = std::map<std::string, bool>;

// One literal chosen per clause (indices into each clause's literals).
using Selection = std::vector<std::size_t>;

// Every way of picking one literal per clause contains a complementary
// pair. Returns the first offending selection in `witness` on failure.
// Requires ground clauses, each non-empty; throws std::invalid_argument
// otherwise.
bool is_standard_contradiction(const std::vector<Clause>& cs, Selection* witness = nullptr);
bool is_standard_contradiction(const std::vector<std::vector<Literal>>& cs,
                               Selection* witness = nullptr);

inline constexpr std::size_t kDefaultVariableCap = 24;

// Truth-table check. Throws std::invalid_argument on first-order input or
// when the number of variables exceeds `cap`.
bool is_unsatisfiable_bruteforce(const std::vector<Clause>& cs,
                                 std::size_t cap = kDefaultVariableCap);
std::optional<Assignment> find_model_bruteforce(const std::vector<Clause>& cs,
                                                std::size_t cap = kDefaultVariableCap);

// Throws std::invalid_argument when `a` misses a variable of `cs`.
bool verify_model(const std::vector<Clause>& cs, const Assignment& a);
bool satisfies(const Clause& c, const Assignment& a);

std::vector<std::string> propositional_variables(const std::vector<Clause>& cs);

struct Shadow {
  std::vector<Clause> clauses;
  std::map<Literal, std::string> atom_to_var;  // keyed by the positive atom
};

// Replaces each distinct ground atom by a propositional variable. Ids are
// preserved. Throws std::invalid_argument on non-ground input.
Shadow propositional_shadow(const std::vector<Clause>& cs);

// Replaces each variable by its own fresh constant.
std::vector<Clause> ground_with_fresh_constants(const std::vector<Clause>& cs);

}  // namespace etm

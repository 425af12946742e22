#pragma once

#include <cstddef>
#include <optional>

#include "etm/etc.hpp"
#include "etm/logic.hpp"
#include "etm/unification.hpp"

namespace etm {

// How the substitution for a new column is chosen.
struct SigmaPolicy {
  enum class Kind : std::uint8_t { MaxPullIn, Explicit };
  Kind kind = Kind::MaxPullIn;
  Substitution sigma;  // Explicit only; keys use the renamed "#k" names

  static SigmaPolicy max_pull_in() { return {}; }
  static SigmaPolicy explicit_sigma(Substitution s) { return {Kind::Explicit, std::move(s)}; }
};

// Drops tautologies and variant duplicates and makes the clauses pairwise
// variable-disjoint. Clause ids are kept.
ClauseSet preprocess(const ClauseSet& s);

// Column k (1-based) is built from the clause renamed with suffix "#k".
// `x` is given in the clause's own variable names.
EtcState start_fol(const Clause& d1, const Literal& x1, bool allow_boundary_repeats = false);

// With MaxPullIn, each other literal of the clause is either unified with
// the complement of a boundary literal or left in d_plus; the jointly
// unifiable assignment with the most pulled literals wins, ties going to
// the earliest boundary rows. The unifier is composed into the state's
// substitution, so earlier columns are re-instantiated as needed.
// Returns nothing when no substitution yields a valid state.
std::optional<EtcState> extend_fol(const EtcState& st, const Clause& di, const Literal& xi,
                                   const SigmaPolicy& policy = SigmaPolicy::max_pull_in());
std::optional<EtcState> close_fol(const EtcState& st, const Clause& dk,
                                  const SigmaPolicy& policy = SigmaPolicy::max_pull_in());

// Moves d_plus literals into d_minus by unifying them with an earlier
// boundary complement. A unifier that changes more than two other columns
// is rejected. Never increases the leftover size.
EtcState fall_in(const EtcState& st);

inline constexpr std::size_t kFallInColumnLimit = 2;

// False when the instance of `clause` under `sigma` is a tautology or is
// variant-subsumed by another clause of `s`.
bool redundancy_guard(const Substitution& sigma, const Clause& clause, const ClauseSet& s);

// Renames every variable of the state to V1, V2, ... in order of first
// appearance, csc first. Keeps derived clauses readable.
EtcState canonicalize_variables(const EtcState& st);

}  // namespace etm

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "etm/logic.hpp"
#include "etm/oracle.hpp"
#include "etm/unification.hpp"

namespace etm {

// Raised when an ETC operation is called outside its precondition.
class EtcError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class SearchMode : std::uint8_t { Unsat, Sat };

enum class ColumnRole : std::uint8_t {
  Boundary,  // contributes a boundary literal x_i
  Stair,     // every literal is a complement of an earlier boundary literal
  Closing,
};

const char* to_string(ColumnRole r);

struct EtcColumn {
  ClauseId clause_id = 0;
  // Literals of the renamed-apart clause copy before substitution, and the
  // boundary literal of that copy. Re-instantiation starts from these.
  std::vector<Literal> source;
  std::optional<Literal> source_boundary;
  // Restriction of the state's substitution to the variables of `source`.
  Substitution sigma;
  std::vector<Literal> d_minus;
  std::vector<Literal> d_plus;
  std::optional<Literal> boundary_literal;
  ColumnRole role = ColumnRole::Boundary;

  std::vector<Literal> literals() const;
};

// A (possibly open) extended triangular contradiction. Columns are kept in
// selection order; stair columns may be moved behind the closing column.
struct EtcState {
  std::vector<EtcColumn> columns;
  std::vector<Literal> boundary;  // x_1 .. x_{k-1}
  Substitution sigma;             // applied to every column's source
  bool allow_boundary_repeats = false;
  bool closed = false;
  std::optional<std::vector<Literal>> csc;

  // Union of d_plus over all columns, first occurrence order.
  std::vector<Literal> leftover() const;
  const EtcColumn* closing_column() const;
  std::vector<ClauseId> clause_ids() const;
  // Boundary literals of Boundary-role columns placed before `pos`.
  std::vector<Literal> boundary_before(std::size_t pos) const;
  bool has_complement_on_boundary(const Literal& l) const;
};

struct EtcConfig {
  SearchMode mode = SearchMode::Unsat;
  std::size_t literal_threshold = 0;  // N_T
  bool allow_boundary_repeats = false;
  std::size_t max_columns = 0;

  // N_T = 2 * widest clause, max_columns = 4 * |S|, repeats allowed only
  // in satisfiability mode.
  static EtcConfig defaults(SearchMode mode, const ClauseSet& s);
};

// Syntactic operations. In first-order use they treat variables as
// constants; the unifying variants live in etc_fol.hpp.
EtcState start(const Clause& d1, const Literal& x1, bool allow_boundary_repeats = false);
EtcState extend(const EtcState& st, const Clause& di, const Literal& xi);
EtcState add_stair(const EtcState& st, const Clause& di);
EtcState close(const EtcState& st, const Clause& dk);

// Recomputes every column from its source under `st.sigma` with maximal
// pull-in, then refreshes boundary, csc and per-column sigma.
void repartition(EtcState& st);

// First violated structural property, if any.
std::optional<std::string> check_invariants(const EtcState& st);

enum class StopReason : std::uint8_t { None, EmptyDPlus, NoComplementPartner, Threshold };
const char* to_string(StopReason r);

struct StopDecision {
  bool stop = false;
  StopReason reason = StopReason::None;
};

StopDecision should_stop(const EtcState& st, const EtcConfig& cfg, const ClauseSet& s);

// Moves stair columns behind the closing column, keeping their relative
// order. The csc is unchanged.
EtcState normalize_stairs(const EtcState& st);

// Drops columns that contribute nothing to the contradiction: stairs in
// front of the closing column, and boundary columns whose literal is
// never complemented later. Iterates to a fixpoint.
EtcState prune_redundant_columns(const EtcState& st);

// Propositional only. Requires a closed ETC over every clause of `s`
// (stairs excluded) with a non-empty closing d_plus.
std::optional<Assignment> extract_model(const EtcState& st, const ClauseSet& s);

bool covers_all_clauses(const EtcState& st, const ClauseSet& s);

struct Candidate {
  ClauseId clause_id = 0;
  std::size_t literal_index = 0;
  Literal literal;
  int tier = 0;
};

// Ranked (clause, literal) choices for the next boundary column; with no
// state, choices for the first column. Infeasible literals are left out.
std::vector<Candidate> select_candidates(const EtcState* st, const ClauseSet& s,
                                         const EtcConfig& cfg, std::uint64_t seed = 0);

}  // namespace etm

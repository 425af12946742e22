#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace etm {

// A first-order term. Variables and constants carry no arguments; a
// constant is a function symbol of arity zero.
struct Term {
  enum class Kind : std::uint8_t { Variable, Function };

  Kind kind = Kind::Function;
  std::string name;
  std::vector<Term> args;

  static Term var(std::string name);
  static Term fn(std::string name, std::vector<Term> args = {});

  bool is_var() const { return kind == Kind::Variable; }
  bool is_ground() const;
  void collect_vars(std::set<std::string>& out) const;
  bool contains_var(const std::string& v) const;
  std::size_t size() const;
};

bool operator==(const Term& a, const Term& b);
std::strong_ordering operator<=>(const Term& a, const Term& b);

struct Literal {
  bool positive = true;
  std::string predicate;
  std::vector<Term> args;

  static Literal pos(std::string predicate, std::vector<Term> args = {});
  static Literal neg(std::string predicate, std::vector<Term> args = {});

  std::size_t arity() const { return args.size(); }
  bool is_ground() const;
  bool is_propositional() const { return args.empty(); }
  void collect_vars(std::set<std::string>& out) const;
};

bool operator==(const Literal& a, const Literal& b);
std::strong_ordering operator<=>(const Literal& a, const Literal& b);

Literal complement(const Literal& l);
bool are_complementary(const Literal& a, const Literal& b);
// Same predicate, arity and opposite sign; arguments are not compared.
bool may_be_complementary(const Literal& a, const Literal& b);

using ClauseId = std::uint32_t;

struct Origin {
  enum class Kind : std::uint8_t { Input, Derived };
  Kind kind = Kind::Input;
  std::size_t round = 0;

  static Origin input() { return {}; }
  static Origin derived(std::size_t round) { return {Kind::Derived, round}; }
  bool operator==(const Origin&) const = default;
};

// Literals are duplicate-free and keep first-occurrence order.
struct Clause {
  ClauseId id = 0;
  std::vector<Literal> literals;
  Origin origin;

  Clause() = default;
  Clause(ClauseId id, std::vector<Literal> lits, Origin origin = Origin::input());

  bool empty() const { return literals.empty(); }
  std::size_t size() const { return literals.size(); }
  bool contains(const Literal& l) const;
  bool is_ground() const;
  std::set<std::string> vars() const;
};

// Compares literal sets only; ids and origins are ignored.
bool operator==(const Clause& a, const Clause& b);

enum class Mode : std::uint8_t { Propositional, FirstOrder };

class ClauseSet {
 public:
  ClauseSet() = default;
  explicit ClauseSet(Mode mode) : mode_(mode) {}

  // Assigns the next free id; returns it.
  ClauseId add(std::vector<Literal> lits, Origin origin = Origin::input());
  // Keeps the clause's own id. Throws if the id is taken.
  void insert(Clause c);

  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }
  const Clause* find(ClauseId id) const;
  const Clause& at(ClauseId id) const;
  ClauseId next_id() const { return next_id_; }

  Mode mode() const { return mode_; }
  bool propositional() const { return mode_ == Mode::Propositional; }
  // Recomputes the mode from the literals held.
  void infer_mode();

  std::size_t max_width() const;
  auto begin() const { return clauses_.begin(); }
  auto end() const { return clauses_.end(); }

 private:
  std::vector<Clause> clauses_;
  Mode mode_ = Mode::Propositional;
  ClauseId next_id_ = 1;
};

// Removes repeated literals, keeping the first occurrence.
std::vector<Literal> merge_duplicate_literals(const std::vector<Literal>& lits);
bool is_tautology(const std::vector<Literal>& lits);
bool is_tautology(const Clause& c);
bool same_literal_set(const std::vector<Literal>& a, const std::vector<Literal>& b);
bool is_subset(const std::vector<Literal>& a, const std::vector<Literal>& b);
std::vector<Literal> sorted_unique(std::vector<Literal> lits);

std::string to_string(const Term& t);
std::string to_string(const Literal& l);
// Literals joined with " | "; the empty list prints as "⊥".
std::string to_string(const std::vector<Literal>& lits);
std::string to_string(const Clause& c);

std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const Literal& l);
std::ostream& operator<<(std::ostream& os, const Clause& c);

inline constexpr const char* kEmptyClauseSymbol = "⊥";

}  // namespace etm

#include "etm/logic.hpp"

#include <algorithm>
#include <sstream>

namespace etm {

Term Term::var(std::string name) { return Term{Kind::Variable, std::move(name), {}}; }

Term Term::fn(std::string name, std::vector<Term> args) {
  return Term{Kind::Function, std::move(name), std::move(args)};
}

bool Term::is_ground() const {
  if (is_var()) return false;
  return std::all_of(args.begin(), args.end(), [](const Term& a) { return a.is_ground(); });
}

void Term::collect_vars(std::set<std::string>& out) const {
  if (is_var()) {
    out.insert(name);
    return;
  }
  for (const auto& a : args) a.collect_vars(out);
}

bool Term::contains_var(const std::string& v) const {
  if (is_var()) return name == v;
  return std::any_of(args.begin(), args.end(), [&](const Term& a) { return a.contains_var(v); });
}

std::size_t Term::size() const {
  std::size_t n = 1;
  for (const auto& a : args) n += a.size();
  return n;
}

bool operator==(const Term& a, const Term& b) {
  return a.kind == b.kind && a.name == b.name && a.args == b.args;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.name <=> b.name; c != 0) return c;
  if (auto c = a.args.size() <=> b.args.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (auto c = a.args[i] <=> b.args[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

Literal Literal::pos(std::string predicate, std::vector<Term> args) {
  return Literal{true, std::move(predicate), std::move(args)};
}

Literal Literal::neg(std::string predicate, std::vector<Term> args) {
  return Literal{false, std::move(predicate), std::move(args)};
}

bool Literal::is_ground() const {
  return std::all_of(args.begin(), args.end(), [](const Term& a) { return a.is_ground(); });
}

void Literal::collect_vars(std::set<std::string>& out) const {
  for (const auto& a : args) a.collect_vars(out);
}

bool operator==(const Literal& a, const Literal& b) {
  return a.positive == b.positive && a.predicate == b.predicate && a.args == b.args;
}

std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
  if (auto c = a.predicate <=> b.predicate; c != 0) return c;
  if (auto c = a.args.size() <=> b.args.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (auto c = a.args[i] <=> b.args[i]; c != 0) return c;
  // Negative before positive so that complementary literals sort together.
  return a.positive <=> b.positive;
}

Literal complement(const Literal& l) {
  Literal c = l;
  c.positive = !l.positive;
  return c;
}

bool are_complementary(const Literal& a, const Literal& b) {
  return a.positive != b.positive && a.predicate == b.predicate && a.args == b.args;
}

bool may_be_complementary(const Literal& a, const Literal& b) {
  return a.positive != b.positive && a.predicate == b.predicate && a.args.size() == b.args.size();
}

Clause::Clause(ClauseId id_, std::vector<Literal> lits, Origin origin_)
    : id(id_), literals(merge_duplicate_literals(lits)), origin(origin_) {}

bool Clause::contains(const Literal& l) const {
  return std::find(literals.begin(), literals.end(), l) != literals.end();
}

bool Clause::is_ground() const {
  return std::all_of(literals.begin(), literals.end(), [](const Literal& l) { return l.is_ground(); });
}

std::set<std::string> Clause::vars() const {
  std::set<std::string> out;
  for (const auto& l : literals) l.collect_vars(out);
  return out;
}

bool operator==(const Clause& a, const Clause& b) { return same_literal_set(a.literals, b.literals); }

ClauseId ClauseSet::add(std::vector<Literal> lits, Origin origin) {
  ClauseId id = next_id_;
  insert(Clause(id, std::move(lits), origin));
  return id;
}

void ClauseSet::insert(Clause c) {
  if (find(c.id) != nullptr) throw std::invalid_argument("duplicate clause id " + std::to_string(c.id));
  next_id_ = std::max(next_id_, c.id + 1);
  for (const auto& l : c.literals)
    if (!l.is_propositional()) mode_ = Mode::FirstOrder;
  clauses_.push_back(std::move(c));
}

const Clause* ClauseSet::find(ClauseId id) const {
  for (const auto& c : clauses_)
    if (c.id == id) return &c;
  return nullptr;
}

const Clause& ClauseSet::at(ClauseId id) const {
  const Clause* c = find(id);
  if (c == nullptr) throw std::out_of_range("no clause with id " + std::to_string(id));
  return *c;
}

void ClauseSet::infer_mode() {
  mode_ = Mode::Propositional;
  for (const auto& c : clauses_)
    for (const auto& l : c.literals)
      if (!l.is_propositional()) mode_ = Mode::FirstOrder;
}

std::size_t ClauseSet::max_width() const {
  std::size_t w = 0;
  for (const auto& c : clauses_) w = std::max(w, c.size());
  return w;
}

std::vector<Literal> merge_duplicate_literals(const std::vector<Literal>& lits) {
  std::vector<Literal> out;
  out.reserve(lits.size());
  for (const auto& l : lits)
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  return out;
}

bool is_tautology(const std::vector<Literal>& lits) {
  for (std::size_t i = 0; i < lits.size(); ++i)
    for (std::size_t j = i + 1; j < lits.size(); ++j)
      if (are_complementary(lits[i], lits[j])) return true;
  return false;
}

bool is_tautology(const Clause& c) { return is_tautology(c.literals); }

std::vector<Literal> sorted_unique(std::vector<Literal> lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  return lits;
}

bool same_literal_set(const std::vector<Literal>& a, const std::vector<Literal>& b) {
  return sorted_unique(a) == sorted_unique(b);
}

bool is_subset(const std::vector<Literal>& a, const std::vector<Literal>& b) {
  return std::all_of(a.begin(), a.end(),
                     [&](const Literal& l) { return std::find(b.begin(), b.end(), l) != b.end(); });
}

namespace {

void print_term(std::ostream& os, const Term& t) {
  os << t.name;
  if (t.args.empty()) return;
  os << '(';
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) os << ',';
    print_term(os, t.args[i]);
  }
  os << ')';
}

}  // namespace

std::string to_string(const Term& t) {
  std::ostringstream os;
  print_term(os, t);
  return os.str();
}

std::string to_string(const Literal& l) {
  std::ostringstream os;
  if (!l.positive) os << '~';
  os << l.predicate;
  if (!l.args.empty()) {
    os << '(';
    for (std::size_t i = 0; i < l.args.size(); ++i) {
      if (i) os << ',';
      print_term(os, l.args[i]);
    }
    os << ')';
  }
  return os.str();
}

std::string to_string(const std::vector<Literal>& lits) {
  if (lits.empty()) return kEmptyClauseSymbol;
  std::string s;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i) s += " | ";
    s += to_string(lits[i]);
  }
  return s;
}

std::string to_string(const Clause& c) { return to_string(c.literals); }

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << to_string(t); }
std::ostream& operator<<(std::ostream& os, const Literal& l) { return os << to_string(l); }
std::ostream& operator<<(std::ostream& os, const Clause& c) { return os << to_string(c); }

}  // namespace etm

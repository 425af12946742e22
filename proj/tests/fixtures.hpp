#pragma once

// Worked clause sets used across the test binaries. Variables are
// upper-case so that literals can be written in the trace syntax.

#include <initializer_list>
#include <string>
#include <vector>

#include "etm/frontend.hpp"
#include "etm/logic.hpp"

namespace fixtures {

inline etm::Literal lit(const std::string& s) { return etm::parse_literal(s); }
inline std::vector<etm::Literal> lits(const std::string& s) { return etm::parse_literal_list(s); }

// Clauses get ids 1..n in the order given.
inline etm::ClauseSet clause_set(std::initializer_list<const char*> cs) {
  etm::ClauseSet s;
  for (const char* c : cs) s.add(lits(c));
  s.infer_mode();
  return s;
}

// p1, p4 chained into p3 and closed by the last clause.
inline etm::ClauseSet four_clause() { return clause_set({"p1", "~p1 | p4", "p3 | ~p4", "~p1 | ~p3"}); }

// Ten clauses with three different one-round refutations.
inline etm::ClauseSet ten_clause() {
  return clause_set({"x1", "x2", "~x1 | ~x2 | x3", "~x1 | x4", "~x4 | x5", "~x3 | ~x5", "~x3 | x7", "~x5 | ~x7",
                     "~x3 | ~x4", "~x2 | ~x7"});
}

// Needs two rounds: the first yields x4, the second the empty clause.
inline etm::ClauseSet eight_clause() {
  return clause_set({"~x3 | ~x7", "x2 | x5 | x3", "x1 | ~x2", "x1 | ~x5", "~x1 | ~x4", "x6 | x4 | x3", "~x6 | ~x1",
                     "x7"});
}

// First-order set whose contradiction needs a substitution on an earlier
// column.
inline etm::ClauseSet inverse_substitution() {
  return clause_set({"~p1(X11) | p2(X11)", "~p1(X21) | p3(X21)", "~p3(X31) | p4(X31) | p5(X31)",
                     "~p4(X41) | p3(f(X41))", "p1(X51)", "~p5(X61)", "~p3(f(X71))"});
}

// First-order set refuted by one contradiction that leaves clause 5 out.
inline etm::ClauseSet single_round_fol() {
  return clause_set({"p1(a)", "~p2(a,b)", "p3(a,f(c),f(b))", "p3(X1,X1,f(X1))", "~p3(X2,X3,X4) | p3(X3,X2,X4)",
                     "~p3(X5,X6,X7) | p2(X5,X7)",
                     "~p1(X8) | ~p3(X9,X10,X11) | ~p2(X8,X11) | p2(X8,X9) | p2(X8,X10)"});
}

// First-order set with both a two-round and a one-round refutation.
inline etm::ClauseSet two_round_fol() {
  return clause_set({"~p1(X11,X12,X13) | ~p2(X11,X13)", "p1(X22,X21,X23) | ~p1(X21,X22,X23)",
                     "p2(X31,X34) | ~p3(X31) | ~p1(X32,X33,X34) | ~p2(X31,X32) | ~p2(X31,X33)",
                     "p1(X41,X41,f1(X41))", "p1(a1,f1(a1),f1(a3))", "p3(a1)", "p2(a1,a3)"});
}

// Six clauses whose contradiction has no linear counterpart.
inline etm::ClauseSet non_linear() {
  return clause_set({"~x2 | ~x5", "~x3 | x2", "x3 | ~x5", "x4 | ~x3", "x3 | ~x1", "x5 | ~x4"});
}

}  // namespace fixtures

#include <gtest/gtest.h>

#include "etm/logic.hpp"
#include "fixtures.hpp"

using namespace etm;
using fixtures::lit;
using fixtures::lits;

TEST(Term, VariablesAndGroundness) {
  Term x = Term::var("X");
  Term fa = Term::fn("f", {Term::fn("a")});
  Term fx = Term::fn("f", {x});
  EXPECT_TRUE(x.is_var());
  EXPECT_FALSE(x.is_ground());
  EXPECT_TRUE(fa.is_ground());
  EXPECT_FALSE(fx.is_ground());
  EXPECT_TRUE(fx.contains_var("X"));
  EXPECT_FALSE(fa.contains_var("X"));
  EXPECT_EQ(fx.size(), 2u);
  std::set<std::string> vs;
  Term::fn("g", {x, Term::var("Y"), x}).collect_vars(vs);
  EXPECT_EQ(vs, (std::set<std::string>{"X", "Y"}));
}

TEST(Term, EqualityDistinguishesKind) {
  EXPECT_NE(Term::var("a"), Term::fn("a"));
  EXPECT_EQ(Term::fn("f", {Term::var("X")}), Term::fn("f", {Term::var("X")}));
  EXPECT_LT(Term::var("Z"), Term::fn("a"));
}

TEST(Literal, ComplementRoundTrip) {
  Literal p = lit("p(X,a)");
  EXPECT_EQ(complement(complement(p)), p);
  EXPECT_TRUE(are_complementary(p, lit("~p(X,a)")));
  EXPECT_FALSE(are_complementary(p, lit("~p(Y,a)")));
  EXPECT_TRUE(may_be_complementary(p, lit("~p(Y,b)")));
  EXPECT_FALSE(may_be_complementary(p, lit("p(Y,b)")));
  EXPECT_FALSE(may_be_complementary(p, lit("~p(Y)")));
}

TEST(Literal, OrderingPutsComplementsTogether) {
  auto sorted = sorted_unique(lits("q | p | ~p | p"));
  ASSERT_EQ(sorted.size(), 3u);
  EXPECT_EQ(sorted[0], lit("~p"));
  EXPECT_EQ(sorted[1], lit("p"));
  EXPECT_EQ(sorted[2], lit("q"));
}

TEST(Clause, MergesDuplicatesKeepingOrder) {
  Clause c(1, lits("q | p | q"));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.literals[0], lit("q"));
  EXPECT_EQ(c.literals[1], lit("p"));
  EXPECT_TRUE(c.contains(lit("p")));
  EXPECT_FALSE(c.contains(lit("~p")));
}

TEST(Clause, EqualityIgnoresOrderAndId) {
  EXPECT_EQ(Clause(1, lits("p | q")), Clause(7, lits("q | p")));
  EXPECT_FALSE(Clause(1, lits("p | q")) == Clause(1, lits("p")));
}

TEST(Clause, Tautology) {
  EXPECT_TRUE(is_tautology(lits("p | q | ~p")));
  EXPECT_FALSE(is_tautology(lits("p(X) | ~p(Y)")));
  EXPECT_FALSE(is_tautology(std::vector<Literal>{}));
}

TEST(ClauseSet, AssignsIdsAndInfersMode) {
  ClauseSet s;
  EXPECT_EQ(s.add(lits("p")), 1u);
  EXPECT_EQ(s.add(lits("~p | q")), 2u);
  EXPECT_TRUE(s.propositional());
  EXPECT_EQ(s.max_width(), 2u);
  s.insert(Clause(10, lits("r(a)")));
  EXPECT_EQ(s.next_id(), 11u);
  EXPECT_FALSE(s.propositional());
  EXPECT_THROW(s.insert(Clause(2, lits("q"))), std::invalid_argument);
  EXPECT_EQ(s.at(10).literals[0], lit("r(a)"));
  EXPECT_EQ(s.find(5), nullptr);
}

TEST(Printing, EmptyClauseAndSeparators) {
  EXPECT_EQ(to_string(std::vector<Literal>{}), kEmptyClauseSymbol);
  EXPECT_EQ(to_string(lits("~p(f(X),a) | q")), "~p(f(X),a) | q");
}

TEST(Subsets, SetSemantics) {
  EXPECT_TRUE(is_subset(lits("p"), lits("q | p")));
  EXPECT_FALSE(is_subset(lits("p | r"), lits("q | p")));
  EXPECT_TRUE(same_literal_set(lits("p | q | p"), lits("q | p")));
}

#include <gtest/gtest.h>

#include <random>

#include "etm/unification.hpp"
#include "fixtures.hpp"

using namespace etm;
using fixtures::lit;
using fixtures::lits;

namespace {

Substitution subst(std::initializer_list<std::pair<const char*, const char*>> bs) {
  Substitution s;
  for (const auto& [v, t] : bs) s.set(v, lit(std::string("d(") + t + ")").args[0]);
  return s;
}

}  // namespace

TEST(Apply, ReplacesVariablesOnce) {
  auto s = subst({{"X", "f(Y)"}, {"Y", "a"}});
  EXPECT_EQ(etm::apply(s, lit("p(X,Y,Z)")), lit("p(f(Y),a,Z)"));
}

TEST(Apply, MergesCollapsedLiterals) {
  auto s = subst({{"X", "Y"}});
  EXPECT_EQ(etm::apply(s, lits("p(X) | p(Y)")).size(), 1u);
}

TEST(Compose, AppliesInnerThenOuter) {
  auto inner = subst({{"X", "f(Y)"}});
  auto outer = subst({{"Y", "a"}, {"Z", "b"}});
  auto c = compose(outer, inner);
  Literal l = lit("p(X,Y,Z,W)");
  EXPECT_EQ(etm::apply(c, l), etm::apply(outer, etm::apply(inner, l)));
  EXPECT_EQ(etm::apply(c, l), lit("p(f(a),a,b,W)"));
}

TEST(Unify, BindsVariableOnTheLeft) {
  auto m = mgu(lit("p(X)"), lit("p(Y)"));
  ASSERT_TRUE(m);
  ASSERT_TRUE(m->binds("X"));
  EXPECT_EQ(*m->lookup("X"), Term::var("Y"));
}

TEST(Unify, StructuralAndOccursCheck) {
  auto m = mgu(lit("p(X,f(X))"), lit("p(a,Y)"));
  ASSERT_TRUE(m);
  EXPECT_EQ(etm::apply(*m, lit("p(X,f(X))")), lit("p(a,f(a))"));
  EXPECT_FALSE(mgu(lit("p(X)"), lit("p(f(X))")));
  EXPECT_FALSE(mgu(lit("p(a)"), lit("p(b)")));
  EXPECT_FALSE(mgu(lit("p(X)"), lit("~p(X)")));
  EXPECT_FALSE(mgu(lit("p(X)"), lit("q(X)")));
}

TEST(Unify, ExtendsExistingSubstitutionAndLeavesItOnFailure) {
  Substitution s = subst({{"X", "a"}});
  EXPECT_FALSE(unify(lit("p(X)"), lit("p(b)"), s));
  EXPECT_EQ(s, subst({{"X", "a"}}));
  EXPECT_TRUE(unify(lit("p(X,Y)"), lit("p(Z,Z)"), s));
  EXPECT_EQ(etm::apply(s, lit("q(X,Y,Z)")), lit("q(a,a,a)"));
}

TEST(Unify, ResultIsIdempotent) {
  auto m = mgu(lit("p(X,Y,Z)"), lit("p(Y,Z,f(W))"));
  ASSERT_TRUE(m);
  for (const auto& [v, t] : m->bindings())
    for (const auto& [u, _] : m->bindings()) EXPECT_FALSE(t.contains_var(u)) << v;
}

TEST(Match, OneWayOnly) {
  Substitution s;
  EXPECT_TRUE(match(lit("p(X,f(Y))"), lit("p(a,f(Z))"), s));
  EXPECT_EQ(etm::apply(s, lit("p(X,f(Y))")), lit("p(a,f(Z))"));
  Substitution t;
  EXPECT_FALSE(match(lit("p(a)"), lit("p(X)"), t));
  Substitution u;
  EXPECT_FALSE(match(lit("p(X,X)"), lit("p(a,b)"), u));
}

TEST(Match, IdentityBindingsStayConsistent) {
  Substitution s;
  EXPECT_FALSE(match(lit("p(X,X)"), lit("p(X,a)"), s));
}

TEST(MatchOnto, RequiresCoverage) {
  EXPECT_TRUE(match_onto(lits("p(X) | q(X)"), lits("p(a) | q(a)")));
  EXPECT_TRUE(match_onto(lits("p(X) | p(Y)"), lits("p(a)")));
  EXPECT_FALSE(match_onto(lits("p(X)"), lits("p(a) | q(a)")));
  EXPECT_FALSE(match_onto(lits("p(X) | q(X)"), lits("p(a) | q(b)")));
}

TEST(Variant, InjectiveRenaming) {
  EXPECT_TRUE(is_variant(lits("p(X,Y) | q(Y)"), lits("q(B) | p(A,B)")));
  EXPECT_FALSE(is_variant(lits("p(X,Y)"), lits("p(A,A)")));
  EXPECT_FALSE(is_variant(lits("p(X)"), lits("p(a)")));
  EXPECT_TRUE(variant_subsumes(lits("p(X)"), lits("p(Y) | q(Y)")));
  EXPECT_FALSE(variant_subsumes(lits("p(X)"), lits("p(a) | q")));
}

TEST(Renaming, RenameApartLeavesDisjointInputAlone) {
  std::vector<Clause> cs{Clause(1, lits("p(X)")), Clause(2, lits("q(Y)"))};
  auto r = rename_apart(cs);
  EXPECT_EQ(r.clauses[0].literals, cs[0].literals);
  EXPECT_EQ(r.clauses[1].literals, cs[1].literals);
}

TEST(Renaming, RenameApartSuffixesOnClash) {
  std::vector<Clause> cs{Clause(1, lits("p(X)")), Clause(2, lits("q(X)"))};
  auto r = rename_apart(cs);
  EXPECT_EQ(r.clauses[0].literals[0], lit("p(X#1)"));
  EXPECT_EQ(r.clauses[1].literals[0], lit("q(X#2)"));
  EXPECT_TRUE(r.renamings[0].is_renaming());
}

TEST(Renaming, CanonicalNamesInOrderOfAppearance) {
  auto r = canonical_renaming(lits("p(B,A) | q(B)"));
  EXPECT_EQ(etm::apply(r, lits("p(B,A) | q(B)")), lits("p(V1,V2) | q(V1)"));
}

TEST(UnifyProperty, MguEqualisesRandomTerms) {
  std::mt19937_64 rng(7);
  const char* vars[] = {"X", "Y", "Z"};
  std::function<Term(int)> random_term = [&](int depth) -> Term {
    auto k = rng() % 4;
    if (depth == 0 || k == 0) return Term::var(vars[rng() % 3]);
    if (k == 1) return Term::fn(rng() % 2 ? "a" : "b");
    return Term::fn("f", {random_term(depth - 1), random_term(depth - 1)});
  };
  int unified = 0;
  for (int i = 0; i < 500; ++i) {
    Literal a{true, "p", {random_term(3), random_term(3)}};
    Literal b{true, "p", {random_term(3), random_term(3)}};
    if (auto m = mgu(a, b)) {
      ++unified;
      EXPECT_EQ(etm::apply(*m, a), etm::apply(*m, b)) << to_string(a) << " vs " << to_string(b);
      EXPECT_EQ(etm::apply(*m, etm::apply(*m, a)), etm::apply(*m, a));
    }
  }
  EXPECT_GT(unified, 0);
}

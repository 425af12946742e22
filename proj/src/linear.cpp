// Translation of linear deductions into chains of contradictions.

#include <algorithm>
#include <set>
#include <stdexcept>

#include "etm/engine.hpp"
#include "etm/unification.hpp"

namespace etm {

namespace {

bool has_vars(const LinearDeduction& ld) {
  if (!ld.top.is_ground()) return true;
  return std::any_of(ld.sides.begin(), ld.sides.end(), [](const Clause& c) { return !c.is_ground(); });
}

void check_shape(const LinearDeduction& ld) {
  if (ld.sides.empty()) throw std::invalid_argument("linear deduction without steps");
  if (ld.sides.size() != ld.pivots.size()) throw std::invalid_argument("one pivot per side clause expected");
}

std::vector<Literal> resolve(const std::vector<Literal>& r, const Clause& side, const Literal& x) {
  std::vector<Literal> out;
  for (const auto& l : r)
    if (!are_complementary(l, x)) out.push_back(l);
  for (const auto& l : side.literals)
    if (!(l == x)) out.push_back(l);
  return merge_duplicate_literals(out);
}

// Ground deduction: validates every step and emits one ETC per maximal
// complement-free run of pivots, taken from the top.
// `used` receives, per round, the side index behind each column (-1 for
// the top clause or an earlier csc).
std::vector<RoundRecord> ground_chain(const LinearDeduction& ld, ClauseId first_id,
                                      std::vector<std::vector<long>>* used = nullptr) {
  std::vector<Literal> r = ld.top.literals;
  for (std::size_t i = 0; i < ld.sides.size(); ++i) {
    const auto& x = ld.pivots[i];
    if (!ld.sides[i].contains(x))
      throw std::invalid_argument("pivot " + to_string(x) + " not in side clause C" + std::to_string(ld.sides[i].id));
    if (std::find(r.begin(), r.end(), complement(x)) == r.end())
      throw std::invalid_argument("complement of pivot " + to_string(x) + " not in the running resolvent");
    r = resolve(r, ld.sides[i], x);
  }

  std::vector<RoundRecord> rounds;
  Clause top = ld.top;
  std::size_t s = 0;
  while (s < ld.pivots.size()) {
    std::size_t e = s + 1;
    while (e < ld.pivots.size()) {
      bool clash = false;
      for (std::size_t j = s; j < e; ++j)
        if (are_complementary(ld.pivots[j], ld.pivots[e])) clash = true;
      if (clash) break;
      ++e;
    }
    EtcState st = start(ld.sides[e - 1], ld.pivots[e - 1], true);
    for (std::size_t j = e - 1; j-- > s;) st = extend(st, ld.sides[j], ld.pivots[j]);
    st = close(st, top);
    if (used) {
      std::vector<long> cols;
      for (std::size_t j = e; j-- > s;) cols.push_back(static_cast<long>(j));
      cols.push_back(-1);
      used->push_back(std::move(cols));
    }
    RoundRecord rec;
    rec.round_index = rounds.size() + 1;
    rec.clause_ids_used = st.clause_ids();
    rec.csc = Clause(first_id + static_cast<ClauseId>(rounds.size()), *st.csc, Origin::derived(rec.round_index));
    rec.etc = std::move(st);
    top = rec.csc;
    rounds.push_back(std::move(rec));
    s = e;
  }
  return rounds;
}

}  // namespace

ClauseSet linear_clause_set(const LinearDeduction& ld) {
  ClauseSet cs;
  cs.insert(ld.top);
  for (const auto& c : ld.sides)
    if (!cs.find(c.id)) cs.insert(c);
  cs.infer_mode();
  return cs;
}

std::vector<RoundRecord> linear_to_etc(const LinearDeduction& ld) {
  check_shape(ld);
  ClauseId max_id = ld.top.id;
  for (const auto& c : ld.sides) max_id = std::max(max_id, c.id);
  if (!has_vars(ld)) return ground_chain(ld, max_id + 1);

  // Rename apart, compute the step unifiers, and run the ground
  // construction on the instances under their composition.
  const std::size_t k = ld.sides.size() + 1;
  auto top_r = rename_with_suffix(ld.top, "#" + std::to_string(k));
  std::vector<Clause> sides_r;
  std::vector<Literal> pivots_r;
  for (std::size_t i = 0; i < ld.sides.size(); ++i) {
    const auto tag = "#" + std::to_string(k - 1 - i);
    auto ren = suffix_renaming(ld.sides[i].vars(), tag);
    if (!ld.sides[i].contains(ld.pivots[i]))
      throw std::invalid_argument("pivot " + to_string(ld.pivots[i]) + " not in side clause");
    sides_r.push_back(etm::apply(ren, ld.sides[i]));
    pivots_r.push_back(etm::apply(ren, ld.pivots[i]));
  }
  Substitution sigma;
  std::vector<Literal> r = top_r.literals;
  for (std::size_t i = 0; i < sides_r.size(); ++i) {
    const Literal x = etm::apply(sigma, pivots_r[i]);
    const Literal want = complement(x);
    bool found = false;
    for (const auto& l : etm::apply(sigma, r)) {
      Substitution w = sigma;
      if (unify(l, want, w)) {
        sigma = w;
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("complement of pivot " + to_string(x) + " not unifiable in the resolvent");
    r = resolve(etm::apply(sigma, r), etm::apply(sigma, sides_r[i]), etm::apply(sigma, x));
  }

  LinearDeduction inst;
  inst.top = etm::apply(sigma, top_r);
  for (std::size_t i = 0; i < sides_r.size(); ++i) {
    inst.sides.push_back(etm::apply(sigma, sides_r[i]));
    inst.pivots.push_back(etm::apply(sigma, pivots_r[i]));
  }
  std::vector<std::vector<long>> used;
  auto rounds = ground_chain(inst, max_id + 1, &used);
  // Re-express the columns as instances of the renamed copies.
  for (std::size_t n = 0; n < rounds.size(); ++n) {
    auto& cols = rounds[n].etc.columns;
    for (std::size_t p = 0; p < cols.size(); ++p) {
      const long side = used[n][p];
      const Clause* orig = side >= 0 ? &sides_r[static_cast<std::size_t>(side)] : (n == 0 ? &top_r : nullptr);
      if (orig == nullptr) continue;  // the csc of the previous round
      cols[p].source = orig->literals;
      cols[p].sigma = sigma.restricted_to(orig->vars());
      if (side >= 0) cols[p].source_boundary = pivots_r[static_cast<std::size_t>(side)];
    }
    rounds[n].etc.sigma = sigma;
  }
  return rounds;
}

}  // namespace etm

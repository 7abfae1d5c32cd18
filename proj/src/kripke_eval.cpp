#include "kripke_eval.hpp"

#include <algorithm>
#include <unordered_set>

namespace pdl {

bool TruthVector::all_true() const {
  for (std::size_t i = 0; i < size_; ++i)
    if (!get(i)) return false;
  return true;
}

bool TruthVector::constant() const {
  if (size_ <= 1) return true;
  const bool first = get(0);
  for (std::size_t i = 1; i < size_; ++i)
    if (get(i) != first) return false;
  return true;
}

void TruthVector::mask_tail() {
  if (size_ % 64 != 0 && !words_.empty())
    words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
}

const TruthVector& KripkeEvaluator::truth(FormulaId f) {
  auto it = cache_.find(f);
  if (it != cache_.end()) return it->second;
  TruthVector v = compute(f);
  return cache_.emplace(f, std::move(v)).first->second;
}

bool KripkeEvaluator::at(FormulaId f, std::size_t world) {
  if (world >= model_.world_count())
    throw ArgError("world index out of range (model has " +
                   std::to_string(model_.world_count()) + " worlds)");
  return truth(f).get(world);
}

bool KripkeEvaluator::global(FormulaId f) { return truth(f).all_true(); }

TruthVector KripkeEvaluator::constant_vector(bool v) const {
  TruthVector out(model_.world_count());
  if (v) {
    for (auto& w : out.words()) w = ~std::uint64_t{0};
    out.mask_tail();
  }
  return out;
}

std::uint64_t KripkeEvaluator::premise_tuple(std::span<const TruthVector* const> vecs,
                                             std::size_t w) const {
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < vecs.size(); ++i)
    t |= std::uint64_t{vecs[i]->get(w)} << i;
  return t;
}

TruthVector KripkeEvaluator::compute(FormulaId f) {
  const FormulaNode& n = node(f);
  const std::size_t wc = model_.world_count();
  switch (n.kind) {
    case Kind::Prop: {
      TruthVector out(wc);
      const int idx = model_.sig.index_of(n.name);
      if (idx >= 0)  // symbols outside the signature are uniformly false
        for (std::size_t w = 0; w < wc; ++w)
          if (model_.world_true(w, idx)) out.set(w, true);
      return out;
    }
    case Kind::Not: {
      TruthVector out = truth(n.kids[0]);
      for (auto& word : out.words()) word = ~word;
      out.mask_tail();
      return out;
    }
    case Kind::And: {
      TruthVector out = truth(n.kids[0]);
      const TruthVector& b = truth(n.kids[1]);
      for (std::size_t i = 0; i < out.words().size(); ++i) out.words()[i] &= b.words()[i];
      return out;
    }
    case Kind::Or: {
      TruthVector out = truth(n.kids[0]);
      const TruthVector& b = truth(n.kids[1]);
      for (std::size_t i = 0; i < out.words().size(); ++i) out.words()[i] |= b.words()[i];
      return out;
    }
    case Kind::Implies: {
      TruthVector out = truth(n.kids[0]);
      const TruthVector& b = truth(n.kids[1]);
      for (std::size_t i = 0; i < out.words().size(); ++i)
        out.words()[i] = ~out.words()[i] | b.words()[i];
      out.mask_tail();
      return out;
    }
    case Kind::UBox:
      return constant_vector(truth(n.kids[0]).all_true());
    case Kind::Dep: {
      const auto premises = dep_premises(f);
      if (premises.size() > 63) throw GuardError("determinacy arity exceeds 63");
      std::vector<const TruthVector*> pv;
      pv.reserve(premises.size());
      for (FormulaId p : premises) pv.push_back(&truth(p));
      const TruthVector& target = truth(dep_conclusion(f));
      std::unordered_map<std::uint64_t, bool> table;
      bool holds = true;
      for (std::size_t w = 0; w < wc && holds; ++w) {
        const auto [it, fresh] = table.emplace(premise_tuple(pv, w), target.get(w));
        if (!fresh && it->second != target.get(w)) holds = false;
      }
      return constant_vector(holds);
    }
    case Kind::RelDep: {
      const auto premises = reldep_premises(f);
      if (premises.size() > 63) throw GuardError("determinacy arity exceeds 63");
      const TruthVector& cond = truth(reldep_condition(f));
      std::vector<const TruthVector*> pv;
      pv.reserve(premises.size());
      for (FormulaId p : premises) pv.push_back(&truth(p));
      const TruthVector& target = truth(reldep_conclusion(f));
      std::unordered_map<std::uint64_t, bool> table;
      bool holds = true;
      for (std::size_t w = 0; w < wc && holds; ++w) {
        if (!cond.get(w)) continue;  // determinacy relativised to [[theta]]
        const auto [it, fresh] = table.emplace(premise_tuple(pv, w), target.get(w));
        if (!fresh && it->second != target.get(w)) holds = false;
      }
      return constant_vector(holds);
    }
    case Kind::Indep: {
      const auto left = indep_left(f);
      const auto conds = indep_conds(f);
      const auto right = indep_right(f);
      if (left.size() > 21 || conds.size() > 21 || right.size() > 21)
        throw GuardError("independence arity exceeds 21");
      if (conds.empty() && std::equal(left.begin(), left.end(), right.begin(), right.end())) {
        // unconditional self-independence asserts a constant joint value
        bool constant = true;
        for (FormulaId g : left) constant = constant && truth(g).constant();
        return constant_vector(constant);
      }
      std::vector<const TruthVector*> lv, cv, rv;
      for (FormulaId g : left) lv.push_back(&truth(g));
      for (FormulaId g : conds) cv.push_back(&truth(g));
      for (FormulaId g : right) rv.push_back(&truth(g));
      // Group worlds by condition tuple; within each group the realised
      // (left, right) value pairs must form the full product of the
      // realised left values with the realised right values.
      struct Group {
        std::unordered_set<std::uint64_t> lefts, rights, pairs;
      };
      std::unordered_map<std::uint64_t, Group> groups;
      for (std::size_t w = 0; w < wc; ++w) {
        Group& g = groups[premise_tuple(cv, w)];
        const std::uint64_t l = premise_tuple(lv, w);
        const std::uint64_t r = premise_tuple(rv, w);
        g.lefts.insert(l);
        g.rights.insert(r);
        g.pairs.insert((l << 21) | r);
      }
      bool holds = true;
      for (const auto& [tuple, g] : groups) {
        if (g.pairs.size() != g.lefts.size() * g.rights.size()) {
          holds = false;
          break;
        }
      }
      return constant_vector(holds);
    }
  }
  throw PdlError("unreachable");
}

bool eval_kripke(const SDModel& m, std::size_t world, FormulaId f, Fragment frag) {
  require_fragment(f, frag);
  KripkeEvaluator ev(m);
  return ev.at(f, world);
}

bool eval_global(const SDModel& m, FormulaId f, Fragment frag) {
  require_fragment(f, frag);
  KripkeEvaluator ev(m);
  return ev.global(f);
}

TruthVector truth_function(const SDModel& m, FormulaId f) {
  KripkeEvaluator ev(m);
  return ev.truth(f);
}

bool det_check(std::span<const TruthVector> premises, const TruthVector& target) {
  for (const auto& p : premises)
    if (p.size() != target.size()) throw ArgError("determinacy check: model mismatch");
  if (premises.size() > 63) throw GuardError("determinacy arity exceeds 63");
  std::unordered_map<std::uint64_t, bool> table;
  for (std::size_t w = 0; w < target.size(); ++w) {
    std::uint64_t t = 0;
    for (std::size_t i = 0; i < premises.size(); ++i)
      t |= std::uint64_t{premises[i].get(w)} << i;
    const auto [it, fresh] = table.emplace(t, target.get(w));
    if (!fresh && it->second != target.get(w)) return false;
  }
  return true;
}

std::optional<DeterminacyWitness> det_witness(std::span<const TruthVector> premises,
                                              const TruthVector& target) {
  if (premises.size() > 20) throw GuardError("witness table limited to 20 premises");
  if (!det_check(premises, target)) return std::nullopt;
  DeterminacyWitness w;
  w.arity = static_cast<int>(premises.size());
  w.values.assign(std::size_t{1} << premises.size(), false);  // default 0
  w.realized.assign(std::size_t{1} << premises.size(), false);
  for (std::size_t i = 0; i < target.size(); ++i) {
    std::uint64_t t = 0;
    for (std::size_t j = 0; j < premises.size(); ++j)
      t |= std::uint64_t{premises[j].get(i)} << j;
    w.values[t] = target.get(i);
    w.realized[t] = true;
  }
  return w;
}

}  // namespace pdl

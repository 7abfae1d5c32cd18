#include "team_eval.hpp"

#include <bit>

#include "kripke_eval.hpp"
#include <unordered_set>

namespace pdl {

namespace {

std::uint64_t memo_key(FormulaId f, TeamMask team) {
  return (std::uint64_t{f} << 32) | team;
}

}  // namespace

TeamEvaluator::TeamEvaluator(SDModel m, SplitStrategy strategy)
    : model_(std::move(m)), strategy_(strategy) {
  if (model_.world_count() > 32)
    throw GuardError("team evaluation limited to 32 worlds");
  full_ = model_.world_count() == 32 ? ~TeamMask{0}
                                     : (TeamMask{1} << model_.world_count()) - 1;
}

bool TeamEvaluator::on_team(FormulaId f, TeamMask team) {
  if ((team & ~full_) != 0) throw ArgError("team mask outside the model");
  return eval(f, team);
}

bool TeamEvaluator::on_full_team(FormulaId f) { return eval(f, full_); }

bool TeamEvaluator::eval(FormulaId f, TeamMask team) {
  const std::uint64_t key = memo_key(f, team);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const FormulaNode& n = node(f);
  bool result = false;
  switch (n.kind) {
    case Kind::Prop: {
      const int idx = model_.sig.index_of(n.name);
      result = true;
      for (TeamMask t = team; t != 0; t &= t - 1)
        if (!model_.world_true(std::countr_zero(t), idx)) { result = false; break; }
      break;
    }
    case Kind::Not: {
      const FormulaId inner = n.kids[0];
      if (kind(inner) == Kind::Prop) {
        const int idx = model_.sig.index_of(prop_name(inner));
        result = true;
        for (TeamMask t = team; t != 0; t &= t - 1)
          if (model_.world_true(std::countr_zero(t), idx)) { result = false; break; }
      } else if (kind(inner) == Kind::Dep) {
        result = team == 0;  // a negated D-atom holds only on the empty team
      } else {
        throw FragmentError("negation of a compound formula has no team semantics");
      }
      break;
    }
    case Kind::And:
      result = eval(n.kids[0], team) && eval(n.kids[1], team);
      break;
    case Kind::Or:
      result = split_or(f, team);
      break;
    case Kind::Dep:
      result = dep_atom(f, team);
      break;
    case Kind::Indep:
      result = indep_atom(f, team);
      break;
    default:
      throw FragmentError(std::string(kind_name(n.kind)) + " has no team semantics");
  }
  memo_.emplace(key, result);
  return result;
}

bool TeamEvaluator::split_or(FormulaId f, TeamMask team) {
  const FormulaId l = lhs(f), r = rhs(f);
  // Left subteam U ranges over all subsets of the team; the right subteam
  // must contain team \ U and may additionally take any part of U
  // (GENERAL) or nothing more (PARTITION).
  TeamMask u = team;
  for (;;) {
    if (eval(l, u)) {
      const TeamMask rest = team & ~u;
      if (strategy_ == SplitStrategy::Partition) {
        if (eval(r, rest)) return true;
      } else {
        TeamMask x = u;
        for (;;) {
          if (eval(r, rest | x)) return true;
          if (x == 0) break;
          x = (x - 1) & u;
        }
      }
    }
    if (u == 0) break;
    u = (u - 1) & team;
  }
  return false;
}

bool TeamEvaluator::dep_atom(FormulaId f, TeamMask team) {
  const auto premises = dep_premises(f);
  std::vector<int> pidx;
  pidx.reserve(premises.size());
  for (FormulaId p : premises) pidx.push_back(model_.sig.index_of(prop_name(p)));
  const int qidx = model_.sig.index_of(prop_name(dep_conclusion(f)));
  std::unordered_map<std::uint64_t, bool> table;
  for (TeamMask t = team; t != 0; t &= t - 1) {
    const std::size_t w = std::countr_zero(t);
    std::uint64_t tuple = 0;
    for (std::size_t i = 0; i < pidx.size(); ++i)
      tuple |= std::uint64_t{model_.world_true(w, pidx[i])} << i;
    const bool q = model_.world_true(w, qidx);
    const auto [it, fresh] = table.emplace(tuple, q);
    if (!fresh && it->second != q) return false;
  }
  return true;
}

bool TeamEvaluator::indep_atom(FormulaId f, TeamMask team) {
  std::vector<int> li, ci, ri;
  for (FormulaId p : indep_left(f)) li.push_back(model_.sig.index_of(prop_name(p)));
  for (FormulaId p : indep_conds(f)) ci.push_back(model_.sig.index_of(prop_name(p)));
  for (FormulaId p : indep_right(f)) ri.push_back(model_.sig.index_of(prop_name(p)));
  auto tuple_of = [this](std::size_t w, const std::vector<int>& idx) {
    std::uint64_t t = 0;
    for (std::size_t i = 0; i < idx.size(); ++i)
      t |= std::uint64_t{model_.world_true(w, idx[i])} << i;
    return t;
  };
  struct Group {
    std::unordered_set<std::uint64_t> lefts, rights, pairs;
  };
  std::unordered_map<std::uint64_t, Group> groups;
  for (TeamMask t = team; t != 0; t &= t - 1) {
    const std::size_t w = std::countr_zero(t);
    Group& g = groups[tuple_of(w, ci)];
    const std::uint64_t l = tuple_of(w, li);
    const std::uint64_t r = tuple_of(w, ri);
    g.lefts.insert(l);
    g.rights.insert(r);
    g.pairs.insert((l << 21) | r);
  }
  for (const auto& [tuple, g] : groups)
    if (g.pairs.size() != g.lefts.size() * g.rights.size()) return false;
  return true;
}

bool eval_team(const SDModel& m, FormulaId f, Fragment frag, SplitStrategy strategy) {
  if (!is_team_fragment(frag) && frag != Fragment::PL_NNF)
    throw ArgError("team evaluation needs a team fragment");
  require_fragment(f, frag);
  if (strategy == SplitStrategy::Partition && !in_fragment(f, Fragment::TEAM_D))
    throw ArgError("the partition strategy is only sound for the D fragment");
  const std::size_t limit =
      strategy == SplitStrategy::General ? k_max_team_general : k_max_team_partition;
  if (m.world_count() > limit)
    throw GuardError("team evaluation limited to " + std::to_string(limit) +
                     " worlds under this strategy");
  TeamEvaluator ev(m, strategy);
  return ev.on_full_team(f);
}

bool flatness_check(FormulaId f, const Signature& phi) {
  require_fragment(f, Fragment::PL_NNF);
  if (phi.size() > 3) throw GuardError("flatness check limited to 3 symbols");
  for (std::uint64_t i = 0; i < model_count(phi); ++i) {
    const SDModel m = model_from_index(phi, i);
    TeamEvaluator team(m, SplitStrategy::General);
    KripkeEvaluator kripke(m);
    if (team.on_full_team(f) != kripke.global(f)) return false;
  }
  return true;
}

std::optional<ClosureWitness> downward_closure_scan(FormulaId f, const Signature& phi) {
  if (!in_fragment(f, Fragment::TEAM_D)) require_fragment(f, Fragment::TEAM_I);
  if (phi.size() > 3) throw GuardError("downward-closure scan limited to 3 symbols");
  for (std::uint64_t i = 0; i < model_count(phi); ++i) {
    const SDModel m = model_from_index(phi, i);
    TeamEvaluator ev(m, SplitStrategy::General);
    if (!ev.on_full_team(f)) continue;
    const std::size_t wc = m.world_count();
    // Smallest counterexample subteam first; ties broken by descending
    // world-index mask (this makes the classic independence-atom witness
    // {all-true, all-false} the first one reported on the full model).
    for (std::size_t size = 0; size < wc; ++size) {
      for (TeamMask sub = ev.full_team();; --sub) {
        if (std::popcount(sub) == static_cast<int>(size) && !ev.on_team(f, sub)) {
          std::vector<WorldMask> worlds;
          for (TeamMask t = sub; t != 0; t &= t - 1)
            worlds.push_back(m.worlds[std::countr_zero(t)]);
          return ClosureWitness{m, SDModel{phi, std::move(worlds)}};
        }
        if (sub == 0) break;
      }
    }
  }
  return std::nullopt;
}

}  // namespace pdl

// Team satisfaction W ||- phi for the downward-closed D fragment and the
// independence fragment.
//
// Teams are bitmasks over the model's world indices.  Split disjunction
// enumerates covers U, V with U ∪ V = T; in GENERAL mode the subteams may
// overlap (3^|T| covers, needed because independence atoms are not
// downward closed), PARTITION mode restricts to disjoint covers (2^|T|)
// and is only sound for the D fragment.  Verdicts are memoised per
// (subformula, team), which bounds the recursion.

#pragma once

#include <optional>
#include <unordered_map>

#include "fragment.hpp"
#include "model.hpp"

namespace pdl {

enum class SplitStrategy : std::uint8_t { General, Partition };

inline constexpr std::size_t k_max_team_general = 14;
inline constexpr std::size_t k_max_team_partition = 20;

using TeamMask = std::uint32_t;

class TeamEvaluator {
 public:
  // Keeps its own copy of the model, so temporaries are fine.
  TeamEvaluator(SDModel m, SplitStrategy strategy);

  bool on_team(FormulaId f, TeamMask team);
  bool on_full_team(FormulaId f);
  TeamMask full_team() const noexcept { return full_; }

 private:
  bool eval(FormulaId f, TeamMask team);
  bool split_or(FormulaId f, TeamMask team);
  bool dep_atom(FormulaId f, TeamMask team);
  bool indep_atom(FormulaId f, TeamMask team);

  SDModel model_;
  SplitStrategy strategy_;
  TeamMask full_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

// Validated entry point: checks the fragment, the strategy precondition
// (PARTITION only for TEAM_D) and the team-size guards.
bool eval_team(const SDModel& m, FormulaId f, Fragment frag,
               SplitStrategy strategy = SplitStrategy::General);

// Prop-2.1-style check: team satisfaction of an NNF propositional formula
// coincides with world-by-world satisfaction on every model over phi.
bool flatness_check(FormulaId f, const Signature& phi);

struct ClosureWitness {
  SDModel team;
  SDModel subteam;
};

// Scans every model over phi; returns the first satisfying team with a
// non-satisfying subteam (smallest subteams first, ties by descending
// world-index mask), or nullopt when the formula is downward closed over
// phi.
std::optional<ClosureWitness> downward_closure_scan(FormulaId f, const Signature& phi);

}  // namespace pdl

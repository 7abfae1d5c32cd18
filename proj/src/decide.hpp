// Brute-force decision procedures over the finite model space of a
// formula's own symbols.
//
// Enumeration runs over props_of(phi) minus the reserved #T/#F witness
// `_t` (whose occurrences are confined to the tautological expansion
// patterns, so verdicts never depend on it), in the fixed order: empty
// model first, then ascending subset bitmask over the ascending world
// universe.  Counterexamples are the lexicographically first failure in
// that order, which keeps verdicts reproducible and lets scans be
// partitioned across threads.

#pragma once

#include <optional>

#include "enumerate.hpp"
#include "fragment.hpp"
#include "model.hpp"

namespace pdl {

struct Verdict {
  bool result = false;
  std::optional<SDModel> witness_model;
  std::optional<std::size_t> witness_world;
};

// Pointed validity / satisfiability / local equivalence for the
// Kripke-style fragments (signature guard: at most 4 enumerated symbols).
Verdict validity(FormulaId f, Fragment frag, int jobs = 1);
Verdict satisfiable(FormulaId f, Fragment frag, int jobs = 1);
Verdict equivalent(FormulaId a, FormulaId b, Fragment frag, int jobs = 1);

// Team-semantics analogues.
Verdict team_validity(FormulaId f, Fragment frag, int jobs = 1);
Verdict team_satisfiable(FormulaId f, Fragment frag, int jobs = 1);
Verdict team_equivalent(FormulaId a, FormulaId b, Fragment frag, int jobs = 1);

// Compares team satisfaction of `team_f` with global Kripke satisfaction
// of `kripke_f` over every model on the union signature.
Verdict team_vs_kripke(FormulaId team_f, Fragment team_frag, FormulaId kripke_f,
                       Fragment kripke_frag, int jobs = 1);

// The formula satisfied globally by exactly the models Phi-equivalent to
// W (for nonempty W over Phi): a possibility conjunct per world type plus
// the covering box.
FormulaId characteristic_formula(const SDModel& w, const Signature& phi);

// Disjunction of the characteristic formulas of the class's nonempty
// members; requires the empty model to belong to the class.  The class
// containing only the empty model yields #F.
FormulaId defining_formula(std::span<const SDModel> models, const Signature& phi);

struct EnumBudget {
  Signature sig;
  int max_size = 0;
};

// Enumerates the independence-fragment formulas within the budget and
// returns the first whose team semantics matches the target's global
// Kripke semantics on every model, or nullopt.
std::optional<FormulaId> inexpressibility_scan(FormulaId target, const EnumBudget& budget,
                                               Fragment source);

// The two-world/one-world transfer test: if the team {p-world, blank
// world} satisfies f, so must the single blank world.
bool transfer_check(FormulaId f);

}  // namespace pdl

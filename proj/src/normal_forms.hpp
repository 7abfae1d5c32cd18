// Types over formula lists, type normal forms, and split pairs.
//
// A type over base [b1,...,bk] is the conjunction of every bi or its
// negation; the polarity bitmask has bit i set when bi occurs un-negated.
// A type normal form is a disjunction of such types, kept symbolic as the
// base plus a sorted set of polarity masks and rendered to a Formula on
// demand.  Canonical order everywhere is ascending polarity mask; the
// empty conjunction renders as #T and the empty disjunction as #F.

#pragma once

#include <vector>

#include "kripke_eval.hpp"
#include "model.hpp"

namespace pdl {

struct TypeConjunction {
  std::vector<FormulaId> base;
  std::uint32_t polarity = 0;

  FormulaId render() const;
};

struct TypeNormalForm {
  std::vector<FormulaId> base;
  std::vector<std::uint32_t> disjuncts;  // sorted ascending, unique

  FormulaId render() const;
  static TypeNormalForm full(std::vector<FormulaId> base);  // all 2^k types
};

struct SplitPair {
  TypeNormalForm left;
  TypeNormalForm right;
};

// All 2^k types in polarity-mask order; the single type #T for an empty
// base.
std::vector<TypeConjunction> types_over(std::span<const FormulaId> base);

// All 2^(2^k) type normal forms in disjunct-set-mask order (so #F comes
// first).  Full enumeration is guarded at k <= 4.
std::vector<TypeNormalForm> dnf_over(std::span<const FormulaId> base);

// Rendered versions in the same canonical order, as used by the
// determinacy expansions.
std::vector<FormulaId> dnf_formulas_over(std::span<const FormulaId> base);

// All pairs (alpha, beta) whose disjunct sets union to chi's: each
// disjunct goes left-only, right-only, or both, 3^n pairs in all.
std::vector<SplitPair> split_pairs(const TypeNormalForm& chi);

// The unique type over `base` true at the given world.
TypeConjunction type_of_world(const SDModel& m, std::size_t world,
                              std::span<const FormulaId> base);
TypeConjunction type_of_world(KripkeEvaluator& ev, std::size_t world,
                              std::span<const FormulaId> base);

}  // namespace pdl

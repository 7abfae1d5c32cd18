// The inter-logic translations, each a total recursive map on its source
// fragment.
//
//   expand_dep       LD -> LC    D(a1..ak;b) into the [u]-normal-form disjunction
//   expand_indep     LI -> LC    I-atoms into the <u>-product conjunction
//   t_ld_to_li       LD -> LI    D(a1..ak;b) into b I_(a1..ak) b
//   tprime_d_to_i    D  -> I     team-level variant of t (no image for ~D)
//   s_li_to_ld       LI -> LD    I-atoms into the <u>-product conjunction
//   tchi_i_to_ld     I  -> LD    the chi-indexed global translation
//   plus_lc_to_lu    LC -> LU    C f into [U]f v [U]~f
//   circ_lu_to_lc    LU -> LC    [U]f into f & C f
//   star_lc_to_lc    LC -> LC    composition of the two previous maps
//   tr_ld_to_lc      LD -> LC    D(a1..ak;b) into the C-normal-form disjunction
//   reldep_eliminate LD_REL->LD  unfolds D^theta premise by premise
//
// All disjunction/conjunction families use the canonical normal-form
// ordering, so outputs are reproducible byte for byte.

#pragma once

#include "fragment.hpp"
#include "formula.hpp"

namespace pdl {

FormulaId expand_dep(FormulaId f);
FormulaId expand_indep(FormulaId f);
FormulaId t_ld_to_li(FormulaId f);
FormulaId tprime_d_to_i(FormulaId f);
FormulaId s_li_to_ld(FormulaId f);
FormulaId tchi_i_to_ld(FormulaId f);
FormulaId plus_lc_to_lu(FormulaId f);
FormulaId circ_lu_to_lc(FormulaId f);
FormulaId star_lc_to_lc(FormulaId f);
FormulaId tr_ld_to_lc(FormulaId f);
FormulaId reldep_eliminate(FormulaId f);

// Composite dispatcher behind the CLI: applies the unique defined path
// from `from` to `to`, or throws UnsupportedError when none exists (for
// example into the team fragments).
FormulaId translate(FormulaId f, Fragment from, Fragment to);

// Product-form expansion of a single independence atom over the given
// component tuples.  `dia` supplies the diamond (the [u] diamond for the
// determinacy-language translations, the [u'] diamond for the
// independence axiom schema); `chi` optionally prefixes every diamond
// argument, as in the chi-indexed translation.
FormulaId indep_expansion(std::span<const FormulaId> left, std::span<const FormulaId> conds,
                          std::span<const FormulaId> right, FormulaId (*dia)(FormulaId),
                          FormulaId chi = k_no_formula);

}  // namespace pdl

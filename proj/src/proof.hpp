// Hilbert-style axiom systems and derivation checking.
//
// Systems:
//   AXC  — contingency axioms Ax1..Ax5 plus MP and EQ_C
//   AXLD — AXC plus the determinacy normal-form schema Ax(D_k), k >= 1
//   AXLI — the I-rendered contingency axioms plus Ax(I_{k,m,n}) and EQ_I
//   S5U  — the universal-modality system (K, T, 5) with NEC_U
//
// "A complete set of axioms for PL" is realised as the TAUT justification
// backed by a truth-table oracle over the propositional skeleton, which
// is the granularity the derivations actually use.
//
// Schema shapes are formulas over metavariables; metavariables are Prop
// nodes whose names start with an uppercase letter, which keeps them
// disjoint from every parseable proposition symbol.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "formula.hpp"

namespace pdl {

enum class AxiomSystem : std::uint8_t { AXC, AXLD, AXLI, S5U };

const char* axiom_system_name(AxiomSystem s) noexcept;
std::optional<AxiomSystem> axiom_system_from_name(std::string_view name);

struct SchemaParams {
  int k = 0;
  int m = 0;
  int n = 0;
};

struct Schema {
  std::string id;
  FormulaId shape;  // over metavariables
};

// Non-parametric axiom identifiers of a system (Ax1C..Ax5C and so on).
std::vector<std::string> axiom_ids(AxiomSystem system);

// Shape of one axiom; parametric schemata (AxDk, AxIkmn) need params.
Schema axiom_schema(AxiomSystem system, const std::string& axiom_id,
                    const SchemaParams& params = {});

// Builds the concrete instance; throws ArgError when the substitution
// misses a metavariable or the arity parameters are out of range.
FormulaId instantiate_axiom(AxiomSystem system, const std::string& axiom_id,
                            const std::map<std::string, FormulaId>& binding,
                            const SchemaParams& params = {});

// The unique substitution making the shape equal the formula, if any.
std::optional<std::map<std::string, FormulaId>> match_schema(FormulaId shape,
                                                             FormulaId formula);

// Truth-table tautology test over the propositional skeleton: maximal
// non-Boolean subformulas count as opaque atoms.  At most 20 skeleton
// atoms.
bool taut_oracle(FormulaId f);

// ── derivations ─────────────────────────────────────────────────────────

enum class JustKind : std::uint8_t { Axiom, MP, EqC, EqI, NecU, NecC, Taut };

struct Justification {
  JustKind kind{};
  std::string axiom_id;                       // Axiom
  SchemaParams params;                        // Axiom
  std::map<std::string, FormulaId> bindings;  // Axiom
  int ref1 = -1;                              // MP / EqC / EqI / NecU / NecC
  int ref2 = -1;                              // MP only
};

struct DerivationLine {
  int index = 0;
  FormulaId formula = k_no_formula;
  Justification just;
};

struct Derivation {
  AxiomSystem system{};
  std::vector<DerivationLine> lines;

  FormulaId theorem() const;  // the last line's formula
};

struct CheckError {
  int line = 0;
  std::string reason;
};

// nullopt means every line is justified.
std::optional<CheckError> check_derivation(const Derivation& d);

// check_derivation plus a per-line brute-force validity audit (lines are
// limited to 3 enumerated symbols each).
std::optional<CheckError> soundness_audit(const Derivation& d);

// The NEC_C macro steps for a premise phi: derive phi <-> #T by PL, apply
// EQ_C, discharge with C #T.  Returned in order with the justification
// used for each step; check_derivation re-checks exactly this sequence.
struct MacroStep {
  FormulaId formula;
  JustKind kind;
  int premise = -1;  // index into the step list, -1 = the referenced line
};
std::vector<MacroStep> necc_expansion(FormulaId premise);

// ── .prf file format ────────────────────────────────────────────────────
//   system AXC
//   1: C #T                      ax Ax1C
//   2: (C p <-> C p)             taut
//   3: ((p & C p) & C (p -> q)) -> C q   ax Ax5C phi=p psi=q
//   4: <formula>                 mp 3 1
//   5: <formula>                 eqc 2
// Parametric schemata bind as `ax AxDk k=2 phi1=p phi2=q psi=r`.

Derivation parse_prf(std::string_view text);
Derivation read_prf_file(const std::string& path);

}  // namespace pdl

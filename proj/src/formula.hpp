// Interned formula DAG shared by every logic in the toolkit.
//
// All formulas live in one process-wide arena.  Two structurally equal
// formulas always receive the same FormulaId, so equality is id equality
// and ids are cheap cache keys.  Nodes are immutable once created; the
// arena only grows.
//
// Node layout (kids vector, interpreted per kind):
//   Not, UBox          : [child]
//   And, Or, Implies   : [lhs, rhs]
//   Dep                : [premise..., conclusion]          (k >= 0 premises)
//   Indep              : [left..., cond..., right...]      (split by left_len/cond_len)
//   RelDep             : [condition, premise..., conclusion]
//
// The biconditional, the boxes [u]/[u'] and their diamonds, and #T/#F are
// parser sugar, not node kinds; helpers below build the expansions.

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pdl {

using FormulaId = std::uint32_t;
inline constexpr FormulaId k_no_formula = 0xffffffffu;

// Reserved symbol used to expand the #T / #F abbreviations.  The parser
// rejects it in user input; it is outside the user prop grammar anyway
// (props must start with a lowercase letter).
inline constexpr std::string_view k_top_witness = "_t";

enum class Kind : std::uint8_t {
  Prop,
  Not,
  And,
  Or,
  Implies,
  Dep,
  Indep,
  RelDep,
  UBox,
};

const char* kind_name(Kind k) noexcept;

struct FormulaNode {
  Kind kind{};
  std::uint16_t left_len = 0;  // Indep: size of the left tuple
  std::uint16_t cond_len = 0;  // Indep: size of the condition tuple
  std::string name;            // Prop only
  std::vector<FormulaId> kids;

  bool operator==(const FormulaNode& o) const noexcept;
};

// ── errors ──────────────────────────────────────────────────────────────

// Every core error derives from PdlError; `code` maps onto the C API
// status values (see include/pdl/pdl.h).
struct PdlError : std::runtime_error {
  explicit PdlError(const std::string& msg) : std::runtime_error(msg) {}
  virtual int code() const noexcept { return 7; }  // PDL_ERR_INTERNAL
};
struct ParseError : PdlError {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : PdlError(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
  int code() const noexcept override { return 1; }
};
struct FragmentError : PdlError {
  using PdlError::PdlError;
  int code() const noexcept override { return 2; }
};
struct GuardError : PdlError {
  using PdlError::PdlError;
  int code() const noexcept override { return 3; }
};
struct IoError : PdlError {
  using PdlError::PdlError;
  int code() const noexcept override { return 4; }
};
struct ArgError : PdlError {
  using PdlError::PdlError;
  int code() const noexcept override { return 5; }
};
struct UnsupportedError : PdlError {
  using PdlError::PdlError;
  int code() const noexcept override { return 6; }
};

// ── constructors ────────────────────────────────────────────────────────
// Thread-safe; no syntactic validation happens here (that is the parser's
// and the fragment validators' job).

FormulaId mk_prop(std::string_view name);
FormulaId mk_not(FormulaId f);
FormulaId mk_and(FormulaId a, FormulaId b);
FormulaId mk_or(FormulaId a, FormulaId b);
FormulaId mk_implies(FormulaId a, FormulaId b);
FormulaId mk_dep(std::span<const FormulaId> premises, FormulaId conclusion);
FormulaId mk_c(FormulaId f);  // Dep with no premises (the constancy operator)
FormulaId mk_indep(std::span<const FormulaId> left, std::span<const FormulaId> conds,
                   std::span<const FormulaId> right);
FormulaId mk_reldep(FormulaId condition, std::span<const FormulaId> premises,
                    FormulaId conclusion);
FormulaId mk_ubox(FormulaId f);

// Sugar expansions.
FormulaId mk_iff(FormulaId a, FormulaId b);      // ((a->b) & (b->a))
FormulaId mk_top();                              // (_t | ~_t)
FormulaId mk_bot();                              // (_t & ~_t)
FormulaId mk_u_box(FormulaId f);                 // [u]f  = (f & C f)
FormulaId mk_u_dia(FormulaId f);                 // <u>f  = ~[u]~f
FormulaId mk_uprime_box(FormulaId f);            // [u']f = (f & I(f;;f))
FormulaId mk_uprime_dia(FormulaId f);            // <u'>f = ~[u']~f
FormulaId mk_selfindep(FormulaId f);             // I(f;;f)
FormulaId mk_ubig_dia(FormulaId f);              // <U>f  = ~[U]~f

// ── accessors ───────────────────────────────────────────────────────────

const FormulaNode& node(FormulaId f);
Kind kind(FormulaId f);
const std::string& prop_name(FormulaId f);
FormulaId child(FormulaId f);  // Not / UBox
FormulaId lhs(FormulaId f);
FormulaId rhs(FormulaId f);
std::span<const FormulaId> dep_premises(FormulaId f);
FormulaId dep_conclusion(FormulaId f);
std::span<const FormulaId> indep_left(FormulaId f);
std::span<const FormulaId> indep_conds(FormulaId f);
std::span<const FormulaId> indep_right(FormulaId f);
FormulaId reldep_condition(FormulaId f);
std::span<const FormulaId> reldep_premises(FormulaId f);
FormulaId reldep_conclusion(FormulaId f);

// ── operations ──────────────────────────────────────────────────────────

// Canonical fully parenthesised rendering; parse(print(f)) == f.
std::string print(FormulaId f);

// Sorted set of proposition symbols occurring in f (including _t when an
// abbreviation was expanded).
std::vector<std::string> props_of(FormulaId f);

// Simultaneous uniform substitution.  Symbols absent from the binding are
// left fixed.
FormulaId subst(FormulaId f, const std::map<std::string, FormulaId>& binding);

// Replaces every Dep node with more than `max_premises` premises by #F,
// innermost first.
FormulaId bot_substitute(FormulaId f, int max_premises);

// Node count of the formula read as a tree (shared subterms counted once
// per occurrence).
std::int64_t formula_size(FormulaId f);

}  // namespace pdl

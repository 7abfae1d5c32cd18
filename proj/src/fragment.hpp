// Fragment validators for the seven languages sharing the Formula tree.
//
//   PL_NNF  : literals, &, |                       (negation normal form)
//   TEAM_D  : literals, +/- D-atoms over props, &, |
//   TEAM_I  : literals, un-negated I-atoms over props, &, |
//   LC      : ~, ->, &, | and Dep only with empty premises (the C operator)
//   LD      : LC plus arbitrary Dep
//   LD_REL  : LD plus relativised Dep
//   LI      : ~, ->, &, | plus Indep over arbitrary formulas
//   LU      : ~, ->, &, | plus the universal box

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "formula.hpp"

namespace pdl {

enum class Fragment : std::uint8_t {
  PL_NNF,
  TEAM_D,
  TEAM_I,
  LC,
  LD,
  LD_REL,
  LI,
  LU,
};

const char* fragment_name(Fragment f) noexcept;
std::optional<Fragment> fragment_from_name(std::string_view name);  // "pl", "d", "ld", ...
bool is_team_fragment(Fragment f) noexcept;

struct Violation {
  FormulaId where;
  std::string rule;
};

std::vector<Violation> fragment_violations(FormulaId f, Fragment frag);
bool in_fragment(FormulaId f, Fragment frag);

// Throws FragmentError naming the offending subterm and broken rule.
void require_fragment(FormulaId f, Fragment frag);

}  // namespace pdl

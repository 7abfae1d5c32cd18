#pragma once

#include <string>

#include "decide.hpp"
#include "enumerate.hpp"
#include "fragment.hpp"
#include "formula.hpp"
#include "kripke_eval.hpp"
#include "model.hpp"
#include "normal_forms.hpp"
#include "parser.hpp"
#include "team_eval.hpp"

namespace t {

using namespace pdl;

inline FormulaId P(const char* name) { return mk_prop(name); }

inline FormulaId fml(const std::string& text) { return parse_formula(text); }

inline Signature sig(std::initializer_list<const char*> names) {
  std::vector<std::string> out;
  for (const char* n : names) out.emplace_back(n);
  return Signature::of(std::move(out));
}

inline SDModel model(const std::string& sdm_text) { return parse_sdm(sdm_text); }

inline std::string data_file(const std::string& rel) {
  return std::string(PDL_DATA_DIR) + "/" + rel;
}

inline bool team_sat(const SDModel& m, const std::string& formula, Fragment frag,
                     SplitStrategy strategy = SplitStrategy::General) {
  return eval_team(m, parse(formula, frag), frag, strategy);
}

}  // namespace t

#include "normal_forms.hpp"

#include <algorithm>

namespace pdl {

FormulaId TypeConjunction::render() const {
  if (base.empty()) return mk_top();
  FormulaId out = k_no_formula;
  for (std::size_t i = 0; i < base.size(); ++i) {
    const FormulaId lit = ((polarity >> i) & 1u) ? base[i] : mk_not(base[i]);
    out = i == 0 ? lit : mk_and(out, lit);
  }
  return out;
}

FormulaId TypeNormalForm::render() const {
  if (disjuncts.empty()) return mk_bot();
  FormulaId out = k_no_formula;
  for (std::size_t i = 0; i < disjuncts.size(); ++i) {
    const FormulaId t = TypeConjunction{base, disjuncts[i]}.render();
    out = i == 0 ? t : mk_or(out, t);
  }
  return out;
}

TypeNormalForm TypeNormalForm::full(std::vector<FormulaId> base) {
  if (base.size() > 20) throw GuardError("type base limited to 20 formulas");
  TypeNormalForm out;
  const std::uint32_t count = std::uint32_t{1} << base.size();
  out.base = std::move(base);
  out.disjuncts.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) out.disjuncts.push_back(i);
  return out;
}

std::vector<TypeConjunction> types_over(std::span<const FormulaId> base) {
  if (base.size() > 20) throw GuardError("type base limited to 20 formulas");
  std::vector<TypeConjunction> out;
  const std::uint32_t count = std::uint32_t{1} << base.size();
  out.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i)
    out.push_back(TypeConjunction{{base.begin(), base.end()}, i});
  return out;
}

std::vector<TypeNormalForm> dnf_over(std::span<const FormulaId> base) {
  if (base.size() > 4)
    throw GuardError("full normal-form enumeration limited to 4 base formulas");
  const std::uint32_t types = std::uint32_t{1} << base.size();
  const std::uint64_t count = std::uint64_t{1} << types;
  std::vector<TypeNormalForm> out;
  out.reserve(count);
  for (std::uint64_t sel = 0; sel < count; ++sel) {
    TypeNormalForm nf;
    nf.base.assign(base.begin(), base.end());
    for (std::uint32_t t = 0; t < types; ++t)
      if ((sel >> t) & 1u) nf.disjuncts.push_back(t);
    out.push_back(std::move(nf));
  }
  return out;
}

std::vector<FormulaId> dnf_formulas_over(std::span<const FormulaId> base) {
  std::vector<FormulaId> out;
  for (const auto& nf : dnf_over(base)) out.push_back(nf.render());
  return out;
}

std::vector<SplitPair> split_pairs(const TypeNormalForm& chi) {
  const std::size_t n = chi.disjuncts.size();
  if (n > 12) throw GuardError("split enumeration limited to 12 disjuncts");
  std::vector<SplitPair> out;
  const std::uint32_t all = n == 0 ? 0 : (std::uint32_t{1} << n) - 1;
  // Left picks any subset of the disjunct list; the right side must cover
  // the rest and may repeat part of the left.
  for (std::uint32_t left = 0;; ++left) {
    const std::uint32_t rest = all & ~left;
    std::uint32_t extra = left;
    for (;;) {
      SplitPair pair;
      pair.left.base = chi.base;
      pair.right.base = chi.base;
      for (std::size_t i = 0; i < n; ++i) {
        if ((left >> i) & 1u) pair.left.disjuncts.push_back(chi.disjuncts[i]);
        if (((rest | extra) >> i) & 1u) pair.right.disjuncts.push_back(chi.disjuncts[i]);
      }
      out.push_back(std::move(pair));
      if (extra == 0) break;
      extra = (extra - 1) & left;
    }
    if (left == all) break;
  }
  return out;
}

TypeConjunction type_of_world(KripkeEvaluator& ev, std::size_t world,
                              std::span<const FormulaId> base) {
  if (base.size() > 20) throw GuardError("type base limited to 20 formulas");
  TypeConjunction out{{base.begin(), base.end()}, 0};
  for (std::size_t i = 0; i < base.size(); ++i)
    if (ev.at(base[i], world)) out.polarity |= std::uint32_t{1} << i;
  return out;
}

TypeConjunction type_of_world(const SDModel& m, std::size_t world,
                              std::span<const FormulaId> base) {
  KripkeEvaluator ev(m);
  return type_of_world(ev, world, base);
}

}  // namespace pdl

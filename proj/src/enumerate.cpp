#include "enumerate.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace pdl {

namespace {

// All tuples over `atoms` of the given length, in lexicographic order.
void tuples(const std::vector<FormulaId>& atoms, std::size_t len,
            std::vector<FormulaId>& cur,
            const std::function<void(const std::vector<FormulaId>&)>& emit) {
  if (cur.size() == len) {
    emit(cur);
    return;
  }
  for (FormulaId a : atoms) {
    cur.push_back(a);
    tuples(atoms, len, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<FormulaId> enumerate_formulas(Fragment frag, const Signature& sig,
                                          int max_size, bool allow_negated_dep) {
  switch (frag) {
    case Fragment::PL_NNF:
    case Fragment::TEAM_D:
    case Fragment::TEAM_I:
    case Fragment::LC:
      break;
    default:
      throw UnsupportedError("exhaustive enumeration supports pl, d, i and lc only");
  }
  if (max_size < 1) throw ArgError("enumeration needs a positive size bound");
  if (max_size > 24) throw GuardError("enumeration size bound limited to 24");

  std::vector<FormulaId> props;
  for (const auto& s : sig.symbols()) props.push_back(mk_prop(s));

  std::vector<std::vector<FormulaId>> by_size(max_size + 1);
  std::unordered_set<FormulaId> seen;
  auto add = [&](int size, FormulaId f) {
    if (seen.insert(f).second) by_size[size].push_back(f);
  };

  for (int s = 1; s <= max_size; ++s) {
    // atoms of this size
    if (s == 1)
      for (FormulaId p : props) add(1, p);
    if (s == 2 && frag != Fragment::LC)
      for (FormulaId p : props) add(2, mk_not(p));
    if (frag == Fragment::TEAM_D) {
      // D-atoms: 1 + k premises + conclusion
      const int k = s - 2;
      if (k >= 0) {
        std::vector<FormulaId> cur;
        tuples(props, static_cast<std::size_t>(k), cur,
               [&](const std::vector<FormulaId>& prem) {
                 for (FormulaId q : props) add(s, mk_dep(prem, q));
               });
      }
      const int nk = s - 3;  // negated D-atoms
      if (allow_negated_dep && nk >= 0) {
        std::vector<FormulaId> cur;
        tuples(props, static_cast<std::size_t>(nk), cur,
               [&](const std::vector<FormulaId>& prem) {
                 for (FormulaId q : props) add(s, mk_not(mk_dep(prem, q)));
               });
      }
    }
    if (frag == Fragment::TEAM_I && s >= 3) {
      // I-atoms: 1 + k + m + n with k,n >= 1, m >= 0
      const int total = s - 1;
      for (int k = 1; k < total; ++k) {
        for (int m = 0; m + k < total; ++m) {
          const int n = total - k - m;
          std::vector<FormulaId> l, c, r;
          tuples(props, static_cast<std::size_t>(k), l,
                 [&](const std::vector<FormulaId>& lv) {
                   tuples(props, static_cast<std::size_t>(m), c,
                          [&](const std::vector<FormulaId>& cv) {
                            tuples(props, static_cast<std::size_t>(n), r,
                                   [&](const std::vector<FormulaId>& rv) {
                                     add(s, mk_indep(lv, cv, rv));
                                   });
                          });
                 });
        }
      }
    }
    // unary forms (LC only; team literals are handled as atoms above)
    if (frag == Fragment::LC && s >= 2) {
      for (FormulaId f : by_size[s - 1]) add(s, mk_not(f));
      for (FormulaId f : by_size[s - 1]) add(s, mk_c(f));
    }
    // binary forms
    if (s >= 3) {
      const bool with_implies = frag == Fragment::LC;
      for (int i = 1; i <= s - 2; ++i) {
        const int j = s - 1 - i;
        for (FormulaId a : by_size[i])
          for (FormulaId b : by_size[j]) {
            add(s, mk_and(a, b));
            add(s, mk_or(a, b));
            if (with_implies) add(s, mk_implies(a, b));
          }
      }
    }
  }

  std::vector<FormulaId> out;
  for (int s = 1; s <= max_size; ++s)
    out.insert(out.end(), by_size[s].begin(), by_size[s].end());
  return out;
}

FormulaSampler::FormulaSampler(Fragment frag, Signature sig, int max_size,
                               std::uint64_t seed)
    : frag_(frag), sig_(std::move(sig)), max_size_(max_size), rng_(seed) {
  if (sig_.size() == 0) throw ArgError("sampler needs a nonempty signature");
  if (max_size_ < 1) throw ArgError("sampler needs a positive size bound");
}

std::uint64_t FormulaSampler::pick(std::uint64_t n) { return rng_() % n; }

FormulaId FormulaSampler::next() {
  return gen(1 + static_cast<int>(pick(static_cast<std::uint64_t>(max_size_))));
}

FormulaId FormulaSampler::gen_atom() {
  return mk_prop(sig_.symbols()[pick(sig_.size())]);
}

FormulaId FormulaSampler::gen(int budget) {
  if (budget <= 1) return gen_atom();
  struct Choice {
    enum Tag { Lit, NotF, AndF, OrF, ImpliesF, DepF, NegDep, IndepF, RelDepF, UBoxF } tag;
  };
  std::vector<Choice::Tag> menu;
  switch (frag_) {
    case Fragment::PL_NNF:
      menu = {Choice::Lit, Choice::AndF, Choice::OrF};
      break;
    case Fragment::TEAM_D:
      menu = {Choice::Lit, Choice::AndF, Choice::OrF, Choice::DepF, Choice::NegDep};
      break;
    case Fragment::TEAM_I:
      menu = {Choice::Lit, Choice::AndF, Choice::OrF, Choice::IndepF};
      break;
    case Fragment::LC:
      menu = {Choice::NotF, Choice::AndF, Choice::OrF, Choice::ImpliesF, Choice::DepF};
      break;
    case Fragment::LD:
      menu = {Choice::NotF, Choice::AndF, Choice::OrF, Choice::ImpliesF, Choice::DepF};
      break;
    case Fragment::LD_REL:
      menu = {Choice::NotF, Choice::AndF, Choice::OrF, Choice::ImpliesF, Choice::DepF,
              Choice::RelDepF};
      break;
    case Fragment::LI:
      menu = {Choice::NotF, Choice::AndF, Choice::OrF, Choice::ImpliesF, Choice::IndepF};
      break;
    case Fragment::LU:
      menu = {Choice::NotF, Choice::AndF, Choice::OrF, Choice::ImpliesF, Choice::UBoxF};
      break;
  }
  const auto tag = menu[pick(menu.size())];
  const bool team = is_team_fragment(frag_) || frag_ == Fragment::PL_NNF;
  switch (tag) {
    case Choice::Lit:
      return budget >= 2 && pick(2) == 0 ? mk_not(gen_atom()) : gen_atom();
    case Choice::NotF:
      return mk_not(gen(budget - 1));
    case Choice::AndF:
    case Choice::OrF:
    case Choice::ImpliesF: {
      const int left = 1 + static_cast<int>(pick(static_cast<std::uint64_t>(
                               std::max(1, budget - 2))));
      const FormulaId a = gen(left);
      const FormulaId b = gen(budget - 1 - left);
      return tag == Choice::AndF  ? mk_and(a, b)
             : tag == Choice::OrF ? mk_or(a, b)
                                  : mk_implies(a, b);
    }
    case Choice::DepF:
    case Choice::NegDep: {
      const int extra = tag == Choice::NegDep ? 1 : 0;
      // only the constancy operator exists in the C fragment
      const int arity = frag_ == Fragment::LC ? 0 : static_cast<int>(pick(3));
      std::vector<FormulaId> premises;
      int rest = budget - 2 - extra;
      for (int i = 0; i < arity && rest > arity - i; ++i) {
        const int piece =
            team ? 1 : 1 + static_cast<int>(pick(static_cast<std::uint64_t>(
                               std::max(1, rest - (arity - i - 1) - 1))));
        premises.push_back(team ? gen_atom() : gen(piece));
        rest -= piece;
      }
      const FormulaId concl = team ? gen_atom() : gen(std::max(1, rest));
      const FormulaId dep = mk_dep(premises, concl);
      return extra != 0 ? mk_not(dep) : dep;
    }
    case Choice::IndepF: {
      const int k = 1 + static_cast<int>(pick(2));
      const int m = static_cast<int>(pick(2));
      const int n = 1 + static_cast<int>(pick(2));
      int rest = std::max(budget - 1, k + m + n);
      auto part = [&](int count) {
        std::vector<FormulaId> out;
        for (int i = 0; i < count; ++i) {
          const int piece =
              team ? 1 : 1 + static_cast<int>(pick(static_cast<std::uint64_t>(
                                 std::max(1, rest / std::max(1, count)))));
          out.push_back(team ? gen_atom() : gen(piece));
          rest -= piece;
        }
        return out;
      };
      const auto l = part(k), c = part(m), r = part(n);
      return mk_indep(l, c, r);
    }
    case Choice::RelDepF: {
      const int arity = static_cast<int>(pick(2));  // 0..1 premises
      const int third = std::max(1, (budget - 2) / (arity + 2));
      const FormulaId cond = gen(third);
      std::vector<FormulaId> premises;
      for (int i = 0; i < arity; ++i) premises.push_back(gen(third));
      return mk_reldep(cond, premises, gen(third));
    }
    case Choice::UBoxF:
      return mk_ubox(gen(budget - 1));
  }
  throw PdlError("unreachable");
}

}  // namespace pdl

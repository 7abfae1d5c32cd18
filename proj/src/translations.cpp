#include "translations.hpp"

#include <functional>
#include <unordered_map>

#include "normal_forms.hpp"

namespace pdl {

namespace {

// Memoised structural map: `special` may claim a node; otherwise the node
// is rebuilt from translated children.
class HomMap {
 public:
  using Special = std::function<FormulaId(FormulaId, HomMap&)>;

  explicit HomMap(Special special) : special_(std::move(special)) {}

  FormulaId run(FormulaId f) {
    auto it = memo_.find(f);
    if (it != memo_.end()) return it->second;
    FormulaId result = special_ ? special_(f, *this) : k_no_formula;
    if (result == k_no_formula) result = rebuild(f);
    memo_.emplace(f, result);
    return result;
  }

  FormulaId rebuild(FormulaId f) {
    const FormulaNode& n = node(f);
    if (n.kind == Kind::Prop) return f;
    std::vector<FormulaId> kids;
    kids.reserve(n.kids.size());
    for (FormulaId k : n.kids) kids.push_back(run(k));
    switch (n.kind) {
      case Kind::Not: return mk_not(kids[0]);
      case Kind::And: return mk_and(kids[0], kids[1]);
      case Kind::Or: return mk_or(kids[0], kids[1]);
      case Kind::Implies: return mk_implies(kids[0], kids[1]);
      case Kind::UBox: return mk_ubox(kids[0]);
      case Kind::Dep: return mk_dep({kids.data(), kids.size() - 1}, kids.back());
      case Kind::Indep:
        return mk_indep({kids.data(), n.left_len}, {kids.data() + n.left_len, n.cond_len},
                        {kids.data() + n.left_len + n.cond_len,
                         kids.size() - n.left_len - n.cond_len});
      case Kind::RelDep:
        return mk_reldep(kids[0], {kids.data() + 1, kids.size() - 2}, kids.back());
      case Kind::Prop: break;
    }
    throw PdlError("unreachable");
  }

 private:
  Special special_;
  std::unordered_map<FormulaId, FormulaId> memo_;
};

FormulaId fold_or(std::span<const FormulaId> fs) {
  FormulaId out = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) out = mk_or(out, fs[i]);
  return out;
}

std::vector<FormulaId> map_run(HomMap& m, std::span<const FormulaId> fs) {
  std::vector<FormulaId> out;
  out.reserve(fs.size());
  for (FormulaId f : fs) out.push_back(m.run(f));
  return out;
}

FormulaId expand_indep_impl(FormulaId f) {
  HomMap m([](FormulaId g, HomMap& self) -> FormulaId {
    if (kind(g) != Kind::Indep) return k_no_formula;
    const auto left = map_run(self, indep_left(g));
    const auto conds = map_run(self, indep_conds(g));
    const auto right = map_run(self, indep_right(g));
    return indep_expansion(left, conds, right, mk_u_dia);
  });
  return m.run(f);
}

}  // namespace

FormulaId indep_expansion(std::span<const FormulaId> left, std::span<const FormulaId> conds,
                          std::span<const FormulaId> right, FormulaId (*dia)(FormulaId),
                          FormulaId chi) {
  const auto lts = types_over(left);
  const auto cts = types_over(conds);
  const auto rts = types_over(right);
  FormulaId out = k_no_formula;
  for (const auto& lt : lts) {
    const FormulaId phi = lt.render();
    for (const auto& ct : cts) {
      const FormulaId theta = ct.render();
      const FormulaId prefix = chi == k_no_formula ? theta : mk_and(chi, theta);
      for (const auto& rt : rts) {
        const FormulaId psi = rt.render();
        const FormulaId both = dia(mk_and(mk_and(prefix, phi), psi));
        const FormulaId term =
            mk_implies(mk_and(dia(mk_and(prefix, phi)), dia(mk_and(prefix, psi))), both);
        out = out == k_no_formula ? term : mk_and(out, term);
      }
    }
  }
  return out;
}

FormulaId expand_dep(FormulaId f) {
  require_fragment(f, Fragment::LD);
  HomMap m([](FormulaId g, HomMap& self) -> FormulaId {
    if (kind(g) != Kind::Dep) return k_no_formula;
    const FormulaId concl = self.run(dep_conclusion(g));
    const auto premises = map_run(self, dep_premises(g));
    if (premises.empty())
      return mk_or(mk_u_box(concl), mk_u_box(mk_not(concl)));
    std::vector<FormulaId> disjuncts;
    for (FormulaId chi : dnf_formulas_over(premises))
      disjuncts.push_back(mk_u_box(mk_iff(chi, concl)));
    return fold_or(disjuncts);
  });
  return m.run(f);
}

FormulaId expand_indep(FormulaId f) {
  require_fragment(f, Fragment::LI);
  return expand_indep_impl(f);
}

FormulaId t_ld_to_li(FormulaId f) {
  require_fragment(f, Fragment::LD);
  HomMap m([](FormulaId g, HomMap& self) -> FormulaId {
    if (kind(g) != Kind::Dep) return k_no_formula;
    const FormulaId concl = self.run(dep_conclusion(g));
    const auto conds = map_run(self, dep_premises(g));
    const FormulaId one[1] = {concl};
    return mk_indep(one, conds, one);
  });
  return m.run(f);
}

FormulaId tprime_d_to_i(FormulaId f) {
  require_fragment(f, Fragment::TEAM_D);
  HomMap m([](FormulaId g, HomMap&) -> FormulaId {
    if (kind(g) == Kind::Not && kind(child(g)) == Kind::Dep)
      throw UnsupportedError(
          "negated D-atoms have no image in the independence fragment: " + print(g));
    if (kind(g) != Kind::Dep) return k_no_formula;
    const FormulaId one[1] = {dep_conclusion(g)};
    return mk_indep(one, dep_premises(g), one);
  });
  return m.run(f);
}

FormulaId s_li_to_ld(FormulaId f) {
  require_fragment(f, Fragment::LI);
  return expand_indep_impl(f);
}

FormulaId tchi_i_to_ld(FormulaId f) {
  require_fragment(f, Fragment::TEAM_I);
  std::vector<FormulaId> base;
  for (const auto& name : props_of(f)) base.push_back(mk_prop(name));
  if (base.size() > 4)
    throw GuardError("chi-indexed translation limited to 4 proposition symbols");
  const TypeNormalForm chi0 = TypeNormalForm::full(base);

  struct Impl {
    const std::vector<FormulaId>& base;
    // chi is identified by its disjunct-set mask over the 2^k types.
    std::unordered_map<std::uint64_t, FormulaId> memo;
    std::unordered_map<std::uint32_t, FormulaId> rendered;

    std::uint32_t mask_of(const TypeNormalForm& chi) const {
      std::uint32_t m = 0;
      for (std::uint32_t d : chi.disjuncts) m |= std::uint32_t{1} << d;
      return m;
    }

    FormulaId render(const TypeNormalForm& chi) {
      const std::uint32_t m = mask_of(chi);
      auto it = rendered.find(m);
      if (it != rendered.end()) return it->second;
      const FormulaId r = chi.render();
      rendered.emplace(m, r);
      return r;
    }

    FormulaId run(FormulaId g, const TypeNormalForm& chi) {
      const std::uint64_t key = (std::uint64_t{mask_of(chi)} << 32) | g;
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
      const FormulaNode& n = node(g);
      FormulaId result = k_no_formula;
      switch (n.kind) {
        case Kind::Prop:
          result = mk_u_box(mk_implies(render(chi), g));
          break;
        case Kind::Not:
          result = mk_u_box(mk_implies(render(chi), mk_not(child(g))));
          break;
        case Kind::And:
          result = mk_and(run(lhs(g), chi), run(rhs(g), chi));
          break;
        case Kind::Or: {
          std::vector<FormulaId> disjuncts;
          for (const SplitPair& sp : split_pairs(chi))
            disjuncts.push_back(mk_and(run(lhs(g), sp.left), run(rhs(g), sp.right)));
          result = fold_or(disjuncts);
          break;
        }
        case Kind::Indep:
          result = indep_expansion(indep_left(g), indep_conds(g), indep_right(g),
                                   mk_u_dia, render(chi));
          break;
        default:
          throw FragmentError("not an independence-fragment formula");
      }
      memo.emplace(key, result);
      return result;
    }
  } impl{base, {}, {}};
  return impl.run(f, chi0);
}

FormulaId plus_lc_to_lu(FormulaId f) {
  require_fragment(f, Fragment::LC);
  HomMap m([](FormulaId g, HomMap& self) -> FormulaId {
    if (kind(g) != Kind::Dep) return k_no_formula;
    const FormulaId inner = self.run(dep_conclusion(g));
    return mk_or(mk_ubox(inner), mk_ubox(mk_not(inner)));
  });
  return m.run(f);
}

FormulaId circ_lu_to_lc(FormulaId f) {
  require_fragment(f, Fragment::LU);
  HomMap m([](FormulaId g, HomMap& self) -> FormulaId {
    if (kind(g) != Kind::UBox) return k_no_formula;
    const FormulaId inner = self.run(child(g));
    return mk_and(inner, mk_c(inner));
  });
  return m.run(f);
}

FormulaId star_lc_to_lc(FormulaId f) {
  require_fragment(f, Fragment::LC);
  HomMap m([](FormulaId g, HomMap& self) -> FormulaId {
    if (kind(g) != Kind::Dep) return k_no_formula;
    const FormulaId inner = self.run(dep_conclusion(g));
    const FormulaId neg = mk_not(inner);
    return mk_or(mk_and(inner, mk_c(inner)), mk_and(neg, mk_c(neg)));
  });
  return m.run(f);
}

FormulaId tr_ld_to_lc(FormulaId f) {
  require_fragment(f, Fragment::LD);
  HomMap m([](FormulaId g, HomMap& self) -> FormulaId {
    if (kind(g) != Kind::Dep || dep_premises(g).empty()) return k_no_formula;
    const FormulaId concl = self.run(dep_conclusion(g));
    const auto premises = map_run(self, dep_premises(g));
    std::vector<FormulaId> disjuncts;
    for (FormulaId chi : dnf_formulas_over(premises)) {
      const FormulaId eq = mk_iff(chi, concl);
      disjuncts.push_back(mk_and(eq, mk_c(eq)));
    }
    return fold_or(disjuncts);
  });
  return m.run(f);
}

FormulaId reldep_eliminate(FormulaId f) {
  require_fragment(f, Fragment::LD_REL);
  // D^theta unfolds premise by premise, splitting theta on the last
  // premise each time; the base case is the relativised constancy
  // equivalence C^theta psi == [u](theta -> psi) v [u](theta -> ~psi).
  struct Unfold {
    FormulaId operator()(FormulaId theta, std::span<const FormulaId> premises,
                         FormulaId concl) const {
      if (premises.empty())
        return mk_or(mk_u_box(mk_implies(theta, concl)),
                     mk_u_box(mk_implies(theta, mk_not(concl))));
      const FormulaId last = premises.back();
      const auto rest = premises.first(premises.size() - 1);
      return mk_and((*this)(mk_and(theta, last), rest, concl),
                    (*this)(mk_and(theta, mk_not(last)), rest, concl));
    }
  };
  HomMap m([](FormulaId g, HomMap& self) -> FormulaId {
    if (kind(g) != Kind::RelDep) return k_no_formula;
    const FormulaId theta = self.run(reldep_condition(g));
    const auto premises = map_run(self, reldep_premises(g));
    const FormulaId concl = self.run(reldep_conclusion(g));
    return Unfold{}(theta, premises, concl);
  });
  return m.run(f);
}

FormulaId translate(FormulaId f, Fragment from, Fragment to) {
  using Step = FormulaId (*)(FormulaId);
  const auto apply = [&f](std::initializer_list<Step> steps) {
    FormulaId g = f;
    for (Step s : steps) g = s(g);
    return g;
  };
  const auto inclusion = [](Fragment frag) {
    return [frag](FormulaId g) {
      require_fragment(g, frag);
      return g;
    };
  };
  switch (from) {
    case Fragment::TEAM_D:
      switch (to) {
        case Fragment::TEAM_I: return apply({tprime_d_to_i});
        case Fragment::LD: return apply({tprime_d_to_i, tchi_i_to_ld});
        case Fragment::LC: return apply({tprime_d_to_i, tchi_i_to_ld, tr_ld_to_lc});
        case Fragment::LI: return apply({tprime_d_to_i, tchi_i_to_ld, t_ld_to_li});
        case Fragment::LU:
          return apply({tprime_d_to_i, tchi_i_to_ld, tr_ld_to_lc, plus_lc_to_lu});
        default: break;
      }
      break;
    case Fragment::TEAM_I:
      switch (to) {
        case Fragment::LD: return apply({tchi_i_to_ld});
        case Fragment::LC: return apply({tchi_i_to_ld, tr_ld_to_lc});
        case Fragment::LI: return apply({tchi_i_to_ld, t_ld_to_li});
        case Fragment::LU: return apply({tchi_i_to_ld, tr_ld_to_lc, plus_lc_to_lu});
        default: break;
      }
      break;
    case Fragment::LD:
      switch (to) {
        case Fragment::LI: return apply({t_ld_to_li});
        case Fragment::LC: return apply({tr_ld_to_lc});
        case Fragment::LU: return apply({tr_ld_to_lc, plus_lc_to_lu});
        case Fragment::LD_REL: return inclusion(Fragment::LD)(f);
        default: break;
      }
      break;
    case Fragment::LI:
      switch (to) {
        case Fragment::LD: return apply({s_li_to_ld});
        case Fragment::LC: return apply({s_li_to_ld, tr_ld_to_lc});
        case Fragment::LU: return apply({s_li_to_ld, tr_ld_to_lc, plus_lc_to_lu});
        default: break;
      }
      break;
    case Fragment::LC:
      switch (to) {
        case Fragment::LU: return apply({plus_lc_to_lu});
        case Fragment::LC: return apply({star_lc_to_lc});
        case Fragment::LD:
        case Fragment::LD_REL: return inclusion(Fragment::LC)(f);
        case Fragment::LI: return apply({t_ld_to_li});
        default: break;
      }
      break;
    case Fragment::LU:
      switch (to) {
        case Fragment::LC: return apply({circ_lu_to_lc});
        case Fragment::LD:
        case Fragment::LD_REL: return apply({circ_lu_to_lc});
        case Fragment::LI: return apply({circ_lu_to_lc, t_ld_to_li});
        default: break;
      }
      break;
    case Fragment::LD_REL:
      switch (to) {
        case Fragment::LD: return apply({reldep_eliminate});
        case Fragment::LC: return apply({reldep_eliminate, tr_ld_to_lc});
        case Fragment::LI: return apply({reldep_eliminate, t_ld_to_li});
        case Fragment::LU: return apply({reldep_eliminate, tr_ld_to_lc, plus_lc_to_lu});
        default: break;
      }
      break;
    default:
      break;
  }
  throw UnsupportedError(std::string("no translation path from ") + fragment_name(from) +
                         " to " + fragment_name(to));
}

}  // namespace pdl

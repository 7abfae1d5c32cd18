#include "fragment.hpp"

#include <unordered_set>

namespace pdl {

const char* fragment_name(Fragment f) noexcept {
  switch (f) {
    case Fragment::PL_NNF: return "pl";
    case Fragment::TEAM_D: return "d";
    case Fragment::TEAM_I: return "i";
    case Fragment::LC: return "lc";
    case Fragment::LD: return "ld";
    case Fragment::LD_REL: return "ld-rel";
    case Fragment::LI: return "li";
    case Fragment::LU: return "lu";
  }
  return "?";
}

std::optional<Fragment> fragment_from_name(std::string_view name) {
  if (name == "pl" || name == "pl-nnf") return Fragment::PL_NNF;
  if (name == "d") return Fragment::TEAM_D;
  if (name == "i") return Fragment::TEAM_I;
  if (name == "lc") return Fragment::LC;
  if (name == "ld") return Fragment::LD;
  if (name == "ld-rel") return Fragment::LD_REL;
  if (name == "li") return Fragment::LI;
  if (name == "lu") return Fragment::LU;
  return std::nullopt;
}

bool is_team_fragment(Fragment f) noexcept {
  return f == Fragment::TEAM_D || f == Fragment::TEAM_I;
}

namespace {

struct Checker {
  Fragment frag;
  std::vector<Violation> out;
  std::unordered_set<FormulaId> visited;

  void flag(FormulaId f, std::string rule) { out.push_back({f, std::move(rule)}); }

  bool team() const { return is_team_fragment(frag); }

  // In the team fragments, determinacy/independence operators take
  // proposition symbols only.
  void check_atom_args(FormulaId f, std::span<const FormulaId> args) {
    for (FormulaId a : args) {
      if (kind(a) != Kind::Prop)
        flag(f, std::string(kind_name(kind(f))) +
                    " arguments must be proposition symbols in this fragment");
    }
  }

  void walk(FormulaId f) {
    if (!visited.insert(f).second) return;
    const FormulaNode& n = node(f);
    switch (n.kind) {
      case Kind::Prop:
        return;
      case Kind::Not: {
        if (team() || frag == Fragment::PL_NNF) {
          const Kind ck = kind(n.kids[0]);
          const bool neg_dep_ok = frag == Fragment::TEAM_D && ck == Kind::Dep;
          if (ck != Kind::Prop && !neg_dep_ok) {
            flag(f, frag == Fragment::TEAM_D
                        ? "negation applies only to proposition symbols and D-atoms here"
                        : "negation applies only to proposition symbols here");
          }
          if (neg_dep_ok) {
            check_atom_args(n.kids[0], node(n.kids[0]).kids);
            return;  // the D-atom itself was just checked
          }
          return;
        }
        walk(n.kids[0]);
        return;
      }
      case Kind::And:
      case Kind::Or:
        walk(n.kids[0]);
        walk(n.kids[1]);
        return;
      case Kind::Implies:
        if (team() || frag == Fragment::PL_NNF) {
          flag(f, "implication is not part of this fragment");
          return;
        }
        walk(n.kids[0]);
        walk(n.kids[1]);
        return;
      case Kind::Dep:
        switch (frag) {
          case Fragment::PL_NNF:
          case Fragment::TEAM_I:
          case Fragment::LI:
          case Fragment::LU:
            flag(f, "determinacy operator is not part of this fragment");
            return;
          case Fragment::TEAM_D:
            check_atom_args(f, n.kids);
            return;
          case Fragment::LC:
            if (n.kids.size() > 1) {
              flag(f, "only the constancy operator C (no premises) is allowed here");
              return;
            }
            [[fallthrough]];
          case Fragment::LD:
          case Fragment::LD_REL:
            for (FormulaId k : n.kids) walk(k);
            return;
        }
        return;
      case Kind::Indep:
        switch (frag) {
          case Fragment::TEAM_I:
            check_atom_args(f, n.kids);
            return;
          case Fragment::LI:
            for (FormulaId k : n.kids) walk(k);
            return;
          default:
            flag(f, "independence operator is not part of this fragment");
            return;
        }
      case Kind::RelDep:
        if (frag == Fragment::LD_REL) {
          for (FormulaId k : n.kids) walk(k);
        } else {
          flag(f, "relativised determinacy is only part of the extended language");
        }
        return;
      case Kind::UBox:
        if (frag == Fragment::LU) {
          walk(n.kids[0]);
        } else {
          flag(f, "the universal box is only part of the [U] language");
        }
        return;
    }
  }
};

}  // namespace

std::vector<Violation> fragment_violations(FormulaId f, Fragment frag) {
  Checker c{frag, {}, {}};
  c.walk(f);
  return c.out;
}

bool in_fragment(FormulaId f, Fragment frag) {
  return fragment_violations(f, frag).empty();
}

void require_fragment(FormulaId f, Fragment frag) {
  auto vs = fragment_violations(f, frag);
  if (vs.empty()) return;
  std::string msg = "fragment violation in ";
  msg += fragment_name(frag);
  msg += ":";
  for (const auto& v : vs) {
    msg += "\n  ";
    msg += print(v.where);
    msg += ": ";
    msg += v.rule;
  }
  throw FragmentError(msg);
}

}  // namespace pdl

#include "proof.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "decide.hpp"
#include "normal_forms.hpp"
#include "parser.hpp"
#include "translations.hpp"

namespace pdl {

const char* axiom_system_name(AxiomSystem s) noexcept {
  switch (s) {
    case AxiomSystem::AXC: return "AXC";
    case AxiomSystem::AXLD: return "AXLD";
    case AxiomSystem::AXLI: return "AXLI";
    case AxiomSystem::S5U: return "S5U";
  }
  return "?";
}

std::optional<AxiomSystem> axiom_system_from_name(std::string_view name) {
  if (name == "AXC") return AxiomSystem::AXC;
  if (name == "AXLD") return AxiomSystem::AXLD;
  if (name == "AXLI") return AxiomSystem::AXLI;
  if (name == "S5U") return AxiomSystem::S5U;
  return std::nullopt;
}

namespace {

bool is_metavar(FormulaId f) {
  return kind(f) == Kind::Prop &&
         std::isupper(static_cast<unsigned char>(prop_name(f)[0]));
}

FormulaId mv(const std::string& name) { return mk_prop(name); }

std::vector<FormulaId> mv_list(const std::string& stem, int count) {
  std::vector<FormulaId> out;
  out.reserve(count);
  for (int i = 1; i <= count; ++i) out.push_back(mv(stem + std::to_string(i)));
  return out;
}

FormulaId c_schema(const std::string& id) {
  const FormulaId phi = mv("Phi"), psi = mv("Psi");
  if (id == "Ax1C") return mk_c(mk_top());
  if (id == "Ax2C") return mk_iff(mk_c(phi), mk_c(mk_not(phi)));
  if (id == "Ax3C") return mk_c(mk_and(phi, mk_c(phi)));
  if (id == "Ax4C")
    return mk_implies(mk_and(mk_c(phi), mk_c(psi)), mk_c(mk_and(phi, psi)));
  if (id == "Ax5C")
    return mk_implies(mk_and(mk_and(phi, mk_c(phi)), mk_c(mk_implies(phi, psi))),
                      mk_c(psi));
  throw ArgError("unknown axiom " + id);
}

FormulaId i_schema(const std::string& id) {
  const FormulaId phi = mv("Phi"), psi = mv("Psi");
  if (id == "Ax1I") return mk_selfindep(mk_top());
  if (id == "Ax2I") return mk_iff(mk_selfindep(phi), mk_selfindep(mk_not(phi)));
  if (id == "Ax3I") return mk_selfindep(mk_and(phi, mk_selfindep(phi)));
  if (id == "Ax4I")
    return mk_implies(mk_and(mk_selfindep(phi), mk_selfindep(psi)),
                      mk_selfindep(mk_and(phi, psi)));
  if (id == "Ax5I")
    return mk_implies(
        mk_and(mk_and(phi, mk_selfindep(phi)), mk_selfindep(mk_implies(phi, psi))),
        mk_selfindep(psi));
  throw ArgError("unknown axiom " + id);
}

FormulaId u_schema(const std::string& id) {
  const FormulaId phi = mv("Phi"), psi = mv("Psi");
  if (id == "Ax1U")
    return mk_implies(mk_ubox(mk_implies(phi, psi)),
                      mk_implies(mk_ubox(phi), mk_ubox(psi)));
  if (id == "Ax2U") return mk_implies(mk_ubox(phi), phi);
  if (id == "Ax3U") return mk_implies(mk_ubig_dia(phi), mk_ubox(mk_ubig_dia(phi)));
  throw ArgError("unknown axiom " + id);
}

FormulaId dk_schema(const SchemaParams& p) {
  if (p.k < 1) throw ArgError("Ax(D_k) needs k >= 1");
  if (p.k > 4) throw GuardError("Ax(D_k) instantiation limited to k <= 4");
  const auto premises = mv_list("Phi", p.k);
  const FormulaId psi = mv("Psi");
  FormulaId rhs = k_no_formula;
  for (FormulaId chi : dnf_formulas_over(premises)) {
    const FormulaId term = mk_u_box(mk_iff(chi, psi));
    rhs = rhs == k_no_formula ? term : mk_or(rhs, term);
  }
  return mk_iff(mk_dep(premises, psi), rhs);
}

FormulaId ikmn_schema(const SchemaParams& p) {
  if (p.k < 1 || p.n < 1 || p.m < 0)
    throw ArgError("Ax(I_{k,m,n}) needs k,n >= 1 and m >= 0");
  if (p.k > 4 || p.m > 4 || p.n > 4)
    throw GuardError("Ax(I_{k,m,n}) instantiation limited to arities <= 4");
  const auto lefts = mv_list("Phi", p.k);
  const auto conds = mv_list("Theta", p.m);
  const auto rights = mv_list("Psi", p.n);
  return mk_iff(mk_indep(lefts, conds, rights),
                indep_expansion(lefts, conds, rights, mk_uprime_dia));
}

}  // namespace

std::vector<std::string> axiom_ids(AxiomSystem system) {
  switch (system) {
    case AxiomSystem::AXC:
    case AxiomSystem::AXLD:
      return {"Ax1C", "Ax2C", "Ax3C", "Ax4C", "Ax5C"};
    case AxiomSystem::AXLI:
      return {"Ax1I", "Ax2I", "Ax3I", "Ax4I", "Ax5I"};
    case AxiomSystem::S5U:
      return {"Ax1U", "Ax2U", "Ax3U"};
  }
  return {};
}

Schema axiom_schema(AxiomSystem system, const std::string& axiom_id,
                    const SchemaParams& params) {
  switch (system) {
    case AxiomSystem::AXC:
      return {axiom_id, c_schema(axiom_id)};
    case AxiomSystem::AXLD:
      if (axiom_id == "AxDk") return {axiom_id, dk_schema(params)};
      return {axiom_id, c_schema(axiom_id)};
    case AxiomSystem::AXLI:
      if (axiom_id == "AxIkmn") return {axiom_id, ikmn_schema(params)};
      return {axiom_id, i_schema(axiom_id)};
    case AxiomSystem::S5U:
      return {axiom_id, u_schema(axiom_id)};
  }
  throw ArgError("unknown axiom system");
}

namespace {

void collect_metavars(FormulaId f, std::vector<std::string>& out) {
  for (const auto& name : props_of(f))
    if (std::isupper(static_cast<unsigned char>(name[0]))) out.push_back(name);
}

}  // namespace

FormulaId instantiate_axiom(AxiomSystem system, const std::string& axiom_id,
                            const std::map<std::string, FormulaId>& binding,
                            const SchemaParams& params) {
  const Schema schema = axiom_schema(system, axiom_id, params);
  std::vector<std::string> metavars;
  collect_metavars(schema.shape, metavars);
  std::map<std::string, FormulaId> full;
  for (const auto& name : metavars) {
    auto it = binding.find(name);
    if (it == binding.end())
      throw ArgError("missing metavariable " + name + " for " + axiom_id);
    full.emplace(name, it->second);
  }
  return subst(schema.shape, full);
}

namespace {

bool unify(FormulaId shape, FormulaId f, std::map<std::string, FormulaId>& binding) {
  if (is_metavar(shape)) {
    const std::string& name = prop_name(shape);
    auto it = binding.find(name);
    if (it != binding.end()) return it->second == f;
    binding.emplace(name, f);
    return true;
  }
  const FormulaNode& ns = node(shape);
  const FormulaNode& nf = node(f);
  if (ns.kind != nf.kind || ns.left_len != nf.left_len || ns.cond_len != nf.cond_len ||
      ns.kids.size() != nf.kids.size() || ns.name != nf.name)
    return false;
  for (std::size_t i = 0; i < ns.kids.size(); ++i)
    if (!unify(ns.kids[i], nf.kids[i], binding)) return false;
  return true;
}

}  // namespace

std::optional<std::map<std::string, FormulaId>> match_schema(FormulaId shape,
                                                             FormulaId formula) {
  std::map<std::string, FormulaId> binding;
  if (!unify(shape, formula, binding)) return std::nullopt;
  return binding;
}

bool taut_oracle(FormulaId f) {
  // Compile the Boolean skeleton into a postorder program; everything
  // that is not a Boolean connective is an opaque atom.
  enum : int { kNot, kAnd, kOr, kImplies, kAtom };
  struct Op {
    int code, a, b;
  };
  std::vector<Op> prog;
  std::unordered_map<FormulaId, int> slot;
  int atom_count = 0;
  std::function<int(FormulaId)> go = [&](FormulaId g) -> int {
    auto it = slot.find(g);
    if (it != slot.end()) return it->second;
    const FormulaNode& n = node(g);
    int s = -1;
    switch (n.kind) {
      case Kind::Not: {
        const int a = go(n.kids[0]);
        s = static_cast<int>(prog.size());
        prog.push_back({kNot, a, -1});
        break;
      }
      case Kind::And:
      case Kind::Or:
      case Kind::Implies: {
        const int a = go(n.kids[0]);
        const int b = go(n.kids[1]);
        s = static_cast<int>(prog.size());
        prog.push_back({n.kind == Kind::And ? kAnd : n.kind == Kind::Or ? kOr : kImplies,
                        a, b});
        break;
      }
      default: {
        if (atom_count >= 20)
          throw GuardError("tautology oracle limited to 20 skeleton atoms");
        s = static_cast<int>(prog.size());
        prog.push_back({kAtom, atom_count++, -1});
        break;
      }
    }
    slot.emplace(g, s);
    return s;
  };
  const int root = go(f);
  std::vector<char> val(prog.size());
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << atom_count); ++mask) {
    for (std::size_t i = 0; i < prog.size(); ++i) {
      const Op& op = prog[i];
      switch (op.code) {
        case kNot: val[i] = !val[op.a]; break;
        case kAnd: val[i] = val[op.a] && val[op.b]; break;
        case kOr: val[i] = val[op.a] || val[op.b]; break;
        case kImplies: val[i] = !val[op.a] || val[op.b]; break;
        case kAtom: val[i] = (mask >> op.a) & 1u; break;
      }
    }
    if (!val[root]) return false;
  }
  return true;
}

FormulaId Derivation::theorem() const {
  if (lines.empty()) throw ArgError("empty derivation");
  return lines.back().formula;
}

std::vector<MacroStep> necc_expansion(FormulaId premise) {
  // phi |- C phi, mechanised: phi <-> #T by PL, EQ_C, C #T, PL glue.
  const FormulaId phi = premise;
  const FormulaId top = mk_top();
  const FormulaId eq_top = mk_iff(phi, top);              // phi <-> #T
  const FormulaId eq_c = mk_iff(mk_c(phi), mk_c(top));    // C phi <-> C #T
  const FormulaId c_top = mk_c(top);                      // C #T
  const FormulaId goal = mk_c(phi);                       // C phi
  std::vector<MacroStep> steps;
  steps.push_back({mk_implies(phi, eq_top), JustKind::Taut, -1});          // 0
  steps.push_back({eq_top, JustKind::MP, -1});                             // 1: from ref line and 0
  steps.push_back({eq_c, JustKind::EqC, 1});                               // 2
  steps.push_back({c_top, JustKind::Axiom, -1});                           // 3: Ax1C
  steps.push_back({mk_implies(eq_c, mk_implies(c_top, goal)), JustKind::Taut, -1});  // 4
  steps.push_back({mk_implies(c_top, goal), JustKind::MP, 2});             // 5: from 2 and 4
  steps.push_back({goal, JustKind::MP, 3});                                // 6: from 3 and 5
  return steps;
}

namespace {

// Splits a desugared biconditional ((a -> b) & (b -> a)).
std::optional<std::pair<FormulaId, FormulaId>> split_iff(FormulaId f) {
  if (kind(f) != Kind::And) return std::nullopt;
  const FormulaId l = lhs(f), r = rhs(f);
  if (kind(l) != Kind::Implies || kind(r) != Kind::Implies) return std::nullopt;
  if (lhs(l) != rhs(r) || rhs(l) != lhs(r)) return std::nullopt;
  return std::make_pair(lhs(l), rhs(l));
}

struct LineChecker {
  AxiomSystem system;
  const std::unordered_map<int, FormulaId>& proved;

  std::optional<std::string> resolve(int ref, int current, FormulaId* out) const {
    if (ref >= current) return "reference to a line that is not strictly earlier";
    auto it = proved.find(ref);
    if (it == proved.end())
      return "reference to missing line " + std::to_string(ref);
    *out = it->second;
    return std::nullopt;
  }

  bool axiom_in_system(const std::string& id) const {
    for (const auto& known : axiom_ids(system))
      if (known == id) return true;
    if (system == AxiomSystem::AXLD && id == "AxDk") return true;
    if (system == AxiomSystem::AXLI && id == "AxIkmn") return true;
    return false;
  }

  std::optional<std::string> check(const DerivationLine& line) const {
    const Justification& j = line.just;
    switch (j.kind) {
      case JustKind::Taut:
        if (!taut_oracle(line.formula)) return "not a skeleton tautology";
        return std::nullopt;
      case JustKind::Axiom: {
        if (!axiom_in_system(j.axiom_id))
          return "axiom " + j.axiom_id + " is not part of " + axiom_system_name(system);
        const FormulaId inst =
            instantiate_axiom(system, j.axiom_id, j.bindings, j.params);
        if (inst != line.formula)
          return "formula is not the stated instance of " + j.axiom_id +
                 " (expected " + print(inst) + ")";
        return std::nullopt;
      }
      case JustKind::MP: {
        FormulaId minor = k_no_formula, major = k_no_formula;
        if (auto e = resolve(j.ref1, line.index, &minor)) return e;
        if (auto e = resolve(j.ref2, line.index, &major)) return e;
        if (major != mk_implies(minor, line.formula))
          return "line " + std::to_string(j.ref2) + " is not (line " +
                 std::to_string(j.ref1) + " -> this line)";
        return std::nullopt;
      }
      case JustKind::EqC: {
        if (system != AxiomSystem::AXC && system != AxiomSystem::AXLD)
          return "EQ_C is not a rule of this system";
        FormulaId prem = k_no_formula;
        if (auto e = resolve(j.ref1, line.index, &prem)) return e;
        const auto ab = split_iff(prem);
        if (!ab) return "EQ_C premise is not a biconditional";
        if (line.formula != mk_iff(mk_c(ab->first), mk_c(ab->second)))
          return "conclusion is not (C a <-> C b) for the premise (a <-> b)";
        return std::nullopt;
      }
      case JustKind::EqI: {
        if (system != AxiomSystem::AXLI) return "EQ_I is not a rule of this system";
        FormulaId prem = k_no_formula;
        if (auto e = resolve(j.ref1, line.index, &prem)) return e;
        const auto ab = split_iff(prem);
        if (!ab) return "EQ_I premise is not a biconditional";
        if (line.formula !=
            mk_iff(mk_selfindep(ab->first), mk_selfindep(ab->second)))
          return "conclusion is not (a I a <-> b I b) for the premise (a <-> b)";
        return std::nullopt;
      }
      case JustKind::NecU: {
        if (system != AxiomSystem::S5U) return "NEC_U is not a rule of this system";
        FormulaId prem = k_no_formula;
        if (auto e = resolve(j.ref1, line.index, &prem)) return e;
        if (line.formula != mk_ubox(prem)) return "conclusion is not [U] of the premise";
        return std::nullopt;
      }
      case JustKind::NecC: {
        if (system != AxiomSystem::AXC && system != AxiomSystem::AXLD)
          return "NEC_C is not derivable in this system";
        FormulaId prem = k_no_formula;
        if (auto e = resolve(j.ref1, line.index, &prem)) return e;
        if (line.formula != mk_c(prem))
          return "NEC_C conclusion must be C of the referenced line";
        // Re-check the macro's own steps.
        const auto steps = necc_expansion(prem);
        for (std::size_t i = 0; i < steps.size(); ++i) {
          const MacroStep& s = steps[i];
          switch (s.kind) {
            case JustKind::Taut:
              if (!taut_oracle(s.formula)) return "macro step is not a tautology";
              break;
            case JustKind::Axiom:
              if (s.formula != instantiate_axiom(system, "Ax1C", {}))
                return "macro step is not the Ax1C instance";
              break;
            case JustKind::MP: {
              const FormulaId minor = s.premise < 0
                                          ? prem
                                          : steps[static_cast<std::size_t>(s.premise)].formula;
              // the implication justifying the step is always the step
              // immediately before it in the expansion
              const FormulaId major = steps[i - 1].formula;
              if (major != mk_implies(minor, s.formula))
                return "macro modus-ponens step does not fit";
              break;
            }
            default:
              break;  // the EQ_C step is correct by construction
          }
        }
        if (steps.back().formula != line.formula)
          return "macro expansion does not end in the stated conclusion";
        return std::nullopt;
      }
    }
    return "unknown justification";
  }
};

}  // namespace

std::optional<CheckError> check_derivation(const Derivation& d) {
  if (d.lines.empty()) return CheckError{0, "empty derivation"};
  std::unordered_map<int, FormulaId> proved;
  int prev = 0;
  const LineChecker checker{d.system, proved};
  for (const auto& line : d.lines) {
    if (line.index <= prev)
      return CheckError{line.index, "line indices must be strictly increasing"};
    prev = line.index;
    try {
      if (auto reason = checker.check(line)) return CheckError{line.index, *reason};
    } catch (const PdlError& e) {
      return CheckError{line.index, e.what()};
    }
    proved.emplace(line.index, line.formula);
  }
  return std::nullopt;
}

std::optional<CheckError> soundness_audit(const Derivation& d) {
  if (auto err = check_derivation(d)) return err;
  const Fragment frag = d.system == AxiomSystem::AXLI  ? Fragment::LI
                        : d.system == AxiomSystem::S5U ? Fragment::LU
                        : d.system == AxiomSystem::AXC ? Fragment::LC
                                                       : Fragment::LD;
  for (const auto& line : d.lines) {
    try {
      if (!validity(line.formula, frag).result)
        return CheckError{line.index, "accepted line is not valid — checker defect"};
    } catch (const PdlError& e) {
      return CheckError{line.index, e.what()};
    }
  }
  return std::nullopt;
}

// ── .prf parsing ────────────────────────────────────────────────────────

namespace {

void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

std::string read_word(std::string_view s, std::size_t& i) {
  skip_ws(s, i);
  std::size_t j = i;
  while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != '=')
    ++j;
  std::string out(s.substr(i, j - i));
  i = j;
  return out;
}

int read_int(const std::string& word, std::size_t lineno, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(word, &used);
    if (used != word.size()) throw std::invalid_argument(word);
    return v;
  } catch (const std::exception&) {
    throw IoError("expected " + std::string(what) + " on line " + std::to_string(lineno));
  }
}

Justification parse_justification(std::string_view s, std::size_t lineno) {
  std::size_t i = 0;
  const std::string head = read_word(s, i);
  Justification j;
  const auto where = " on line " + std::to_string(lineno);
  if (head == "taut") {
    j.kind = JustKind::Taut;
  } else if (head == "mp") {
    j.kind = JustKind::MP;
    j.ref1 = read_int(read_word(s, i), lineno, "a line reference");
    j.ref2 = read_int(read_word(s, i), lineno, "a line reference");
  } else if (head == "eqc" || head == "eqi" || head == "necu" || head == "necc") {
    j.kind = head == "eqc"    ? JustKind::EqC
             : head == "eqi"  ? JustKind::EqI
             : head == "necu" ? JustKind::NecU
                              : JustKind::NecC;
    j.ref1 = read_int(read_word(s, i), lineno, "a line reference");
  } else if (head == "ax") {
    j.kind = JustKind::Axiom;
    j.axiom_id = read_word(s, i);
    if (j.axiom_id.empty()) throw IoError("missing axiom id" + where);
    for (;;) {
      skip_ws(s, i);
      if (i >= s.size()) break;
      const std::string name = read_word(s, i);
      skip_ws(s, i);
      if (i >= s.size() || s[i] != '=')
        throw IoError("expected name=value binding" + where);
      ++i;  // consume '='
      skip_ws(s, i);
      if (name == "k" || name == "m" || name == "n") {
        const std::string digits = read_word(s, i);
        const int v = read_int(digits, lineno, "an arity");
        if (name == "k") j.params.k = v;
        if (name == "m") j.params.m = v;
        if (name == "n") j.params.n = v;
      } else {
        std::size_t used = 0;
        FormulaId value;
        try {
          value = parse_formula_prefix(s.substr(i), &used);
        } catch (const ParseError& e) {
          throw IoError("bad binding for " + name + where + ": " + e.what());
        }
        i += used;
        std::string metavar = name;
        metavar[0] = static_cast<char>(
            std::toupper(static_cast<unsigned char>(metavar[0])));
        j.bindings.emplace(metavar, value);
      }
    }
  } else {
    throw IoError("unknown justification '" + head + "'" + where);
  }
  if (j.kind != JustKind::Axiom) {
    skip_ws(s, i);
    if (i < s.size()) throw IoError("trailing text after justification" + where);
  }
  return j;
}

}  // namespace

Derivation parse_prf(std::string_view text) {
  Derivation d;
  bool have_system = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::size_t i = 0;
    skip_ws(raw, i);
    if (i >= raw.size()) continue;
    if (!have_system) {
      const std::string head = read_word(raw, i);
      if (head != "system")
        throw IoError("derivation files start with a system line");
      const std::string name = read_word(raw, i);
      const auto sys = axiom_system_from_name(name);
      if (!sys) throw IoError("unknown axiom system '" + name + "'");
      d.system = *sys;
      have_system = true;
      continue;
    }
    // <index>: <formula> <justification>
    std::size_t colon = raw.find(':', i);
    if (colon == std::string::npos)
      throw IoError("expected '<index>:' on line " + std::to_string(lineno));
    const int index = read_int(raw.substr(i, colon - i), lineno, "a line index");
    std::size_t used = 0;
    FormulaId formula;
    try {
      formula = parse_formula_prefix(std::string_view(raw).substr(colon + 1), &used);
    } catch (const ParseError& e) {
      throw IoError("bad formula on line " + std::to_string(lineno) + ": " + e.what());
    }
    const std::string_view rest = std::string_view(raw).substr(colon + 1 + used);
    d.lines.push_back({index, formula, parse_justification(rest, lineno)});
  }
  if (!have_system) throw IoError("empty derivation file");
  return d;
}

Derivation read_prf_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open derivation file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_prf(ss.str());
}

}  // namespace pdl

#include <doctest.h>

#include <array>

#include "helpers.hpp"
#include "proof.hpp"

using namespace pdl;
using t::P;
using t::fml;

namespace {

Derivation corpus(const char* name) {
  return read_prf_file(t::data_file(std::string("proofs/") + name));
}

const std::array<const char*, 6> k_corpus = {
    "necc_macro.prf",        "necc_expanded.prf",      "s5_k_translated.prf",
    "s5_t_translated.prf",   "s5_five_translated.prf", "star_equiv_cp.prf",
};

}  // namespace

TEST_CASE("axiom instantiation") {
  CHECK(instantiate_axiom(AxiomSystem::AXC, "Ax1C", {}) == fml("C #T"));
  CHECK(instantiate_axiom(AxiomSystem::AXC, "Ax5C", {{"Phi", P("p")}, {"Psi", P("q")}}) ==
        fml("((p & C p) & C (p -> q)) -> C q"));
  CHECK(instantiate_axiom(AxiomSystem::AXLI, "Ax2I", {{"Phi", P("p")}}) ==
        fml("I(p;;p) <-> I(~p;;~p)"));
  CHECK(instantiate_axiom(AxiomSystem::S5U, "Ax2U", {{"Phi", P("p")}}) ==
        fml("[U]p -> p"));
  CHECK_THROWS_AS(instantiate_axiom(AxiomSystem::AXC, "Ax2C", {}), ArgError);
  CHECK_THROWS_AS(instantiate_axiom(AxiomSystem::AXC, "Ax9C", {}), ArgError);
  // parametric schemata
  const FormulaId d1 = instantiate_axiom(AxiomSystem::AXLD, "AxDk",
                                         {{"Phi1", P("p")}, {"Psi", P("q")}}, {1, 0, 0});
  CHECK(kind(d1) == Kind::And);  // a desugared biconditional
  CHECK(validity(d1, Fragment::LD).result);
  CHECK_THROWS_AS(
      instantiate_axiom(AxiomSystem::AXLD, "AxDk", {{"Psi", P("q")}}, {0, 0, 0}),
      ArgError);
  CHECK_THROWS_AS(instantiate_axiom(AxiomSystem::AXLI, "AxIkmn",
                                    {{"Phi1", P("p")}, {"Psi1", P("q")}}, {1, 0, 0}),
                  ArgError);  // n must be >= 1 — params name it explicitly
}

TEST_CASE("schema matching") {
  const Schema ax2 = axiom_schema(AxiomSystem::AXC, "Ax2C");
  const auto hit = match_schema(ax2.shape, fml("C p <-> C ~p"));
  REQUIRE(hit.has_value());
  CHECK(hit->at("Phi") == P("p"));
  CHECK_FALSE(match_schema(ax2.shape, fml("C p <-> C ~q")).has_value());
  // round trip through instantiation, including a parametric schema
  const SchemaParams params{1, 0, 0};
  const Schema d1 = axiom_schema(AxiomSystem::AXLD, "AxDk", params);
  const FormulaId inst = instantiate_axiom(AxiomSystem::AXLD, "AxDk",
                                           {{"Phi1", P("p")}, {"Psi", P("q")}}, params);
  const auto sub = match_schema(d1.shape, inst);
  REQUIRE(sub.has_value());
  CHECK(sub->at("Phi1") == P("p"));
  CHECK(sub->at("Psi") == P("q"));
  // a metavariable must bind consistently
  const Schema ax4 = axiom_schema(AxiomSystem::AXC, "Ax4C");
  CHECK(match_schema(ax4.shape, fml("(C p & C q) -> C (p & q)")).has_value());
  CHECK_FALSE(match_schema(ax4.shape, fml("(C p & C q) -> C (p & p)")).has_value());
}

TEST_CASE("the tautology oracle works on skeletons") {
  CHECK(taut_oracle(fml("(p & C p) -> p")));
  CHECK(taut_oracle(fml("C p -> C p")));
  CHECK_FALSE(taut_oracle(fml("C p -> C ~p")));  // distinct skeleton atoms
  CHECK(taut_oracle(fml("#T")));
  CHECK_FALSE(taut_oracle(fml("#F")));
  CHECK(taut_oracle(fml("D(p;q) | ~D(p;q)")));
  CHECK_FALSE(taut_oracle(fml("[U]p -> p")));  // boxes are opaque
}

TEST_CASE("axioms are valid under literal instantiation") {
  const std::vector<FormulaId> lits{P("p"), P("q"), P("r"),
                                    fml("~p"), fml("~q"), fml("~r")};
  for (AxiomSystem sys : {AxiomSystem::AXC, AxiomSystem::S5U, AxiomSystem::AXLI}) {
    const Fragment frag = sys == AxiomSystem::AXC    ? Fragment::LC
                          : sys == AxiomSystem::S5U ? Fragment::LU
                                                     : Fragment::LI;
    for (const auto& id : axiom_ids(sys)) {
      for (FormulaId a : lits) {
        for (FormulaId b : {lits[0], lits[4]}) {
          const FormulaId inst =
              instantiate_axiom(sys, id, {{"Phi", a}, {"Psi", b}});
          CAPTURE(id);
          CHECK(validity(inst, frag).result);
        }
      }
    }
  }
}

TEST_CASE("rules preserve validity on sampled premises") {
  // For sampled formulas, build premises that are valid by construction
  // and check that each rule's conclusion is valid too.
  FormulaSampler gen(Fragment::LC, t::sig({"p", "q"}), 5, 37);
  FormulaSampler gen_u(Fragment::LU, t::sig({"p", "q"}), 5, 38);
  FormulaSampler gen_i(Fragment::LI, t::sig({"p", "q"}), 5, 39);
  for (int i = 0; i < 25; ++i) {
    const FormulaId a = gen.next();
    const FormulaId b = gen.next();
    // EQ_C: from the valid (a <-> a) to (C a <-> C a)
    REQUIRE(validity(mk_iff(a, a), Fragment::LC).result);
    CHECK(validity(mk_iff(mk_c(a), mk_c(a)), Fragment::LC).result);
    // EQ_I on the I-rendered side
    const FormulaId ai = gen_i.next();
    CHECK(validity(mk_iff(mk_selfindep(ai), mk_selfindep(ai)), Fragment::LI).result);
    // MP: theta and theta -> (theta | b) are valid, so theta | b must be
    const FormulaId theta = mk_implies(a, a);
    REQUIRE(validity(theta, Fragment::LC).result);
    REQUIRE(validity(mk_implies(theta, mk_or(theta, b)), Fragment::LC).result);
    CHECK(validity(mk_or(theta, b), Fragment::LC).result);
    // NEC_U: from a valid formula to its box
    const FormulaId u = gen_u.next();
    const FormulaId valid_u = mk_implies(u, u);
    REQUIRE(validity(valid_u, Fragment::LU).result);
    CHECK(validity(mk_ubox(valid_u), Fragment::LU).result);
  }
}

TEST_CASE("the derivation corpus checks") {
  for (const char* name : k_corpus) {
    const Derivation d = corpus(name);
    const auto err = check_derivation(d);
    CAPTURE(name);
    if (err) {
      CAPTURE(err->line);
      CAPTURE(err->reason);
    }
    CHECK_FALSE(err.has_value());
  }
}

TEST_CASE("corpus theorems are what they should be") {
  CHECK(corpus("necc_macro.prf").theorem() == fml("C C #T"));
  CHECK(corpus("necc_expanded.prf").theorem() == fml("C (p -> p)"));
  // the translated K axiom
  CHECK(corpus("s5_k_translated.prf").theorem() ==
        fml("((p -> q) & C (p -> q)) -> ((p & C p) -> (q & C q))"));
  // the translated T axiom
  CHECK(corpus("s5_t_translated.prf").theorem() == fml("(p & C p) -> p"));
  // the translated 5 axiom
  CHECK(corpus("s5_five_translated.prf").theorem() ==
        fml("~(~p & C ~p) -> (~(~p & C ~p) & C ~(~p & C ~p))"));
  // the star round trip on C p
  CHECK(corpus("star_equiv_cp.prf").theorem() ==
        fml("C p <-> ((p & C p) | (~p & C ~p))"));
}

TEST_CASE("the soundness audit accepts the corpus") {
  for (const char* name : k_corpus) {
    CAPTURE(name);
    CHECK_FALSE(soundness_audit(corpus(name)).has_value());
  }
}

TEST_CASE("the NEC_C macro expands to the textbook steps") {
  const FormulaId phi = fml("p -> p");
  const auto steps = necc_expansion(phi);
  // the expansion passes through phi <-> #T, C phi <-> C #T, C #T, C phi
  std::vector<FormulaId> formulas;
  for (const auto& s : steps) formulas.push_back(s.formula);
  const FormulaId eq_top = mk_iff(phi, mk_top());
  const FormulaId eq_c = mk_iff(mk_c(phi), mk_c(mk_top()));
  auto contains = [&formulas](FormulaId f) {
    return std::find(formulas.begin(), formulas.end(), f) != formulas.end();
  };
  CHECK(contains(eq_top));
  CHECK(contains(eq_c));
  CHECK(contains(mk_c(mk_top())));
  CHECK(formulas.back() == mk_c(phi));
  // and in that order
  const auto pos = [&formulas](FormulaId f) {
    return std::find(formulas.begin(), formulas.end(), f) - formulas.begin();
  };
  CHECK(pos(eq_top) < pos(eq_c));
  CHECK(pos(eq_c) < pos(mk_c(mk_top())));
}

TEST_CASE("derivation parsing rejects malformed files") {
  CHECK_THROWS_AS(parse_prf(""), IoError);
  CHECK_THROWS_AS(parse_prf("system NOPE\n"), IoError);
  CHECK_THROWS_AS(parse_prf("1: p taut\n"), IoError);  // missing system line
  CHECK_THROWS_AS(parse_prf("system AXC\n1: p wat\n"), IoError);
  CHECK_THROWS_AS(parse_prf("system AXC\nx: p taut\n"), IoError);
  CHECK_THROWS_AS(parse_prf("system AXC\n1: (p & ) taut\n"), IoError);  // formula error
}

TEST_CASE("parametric axiom lines in derivation files") {
  const FormulaId inst = instantiate_axiom(AxiomSystem::AXLD, "AxDk",
                                           {{"Phi1", P("p")}, {"Psi", P("q")}}, {1, 0, 0});
  const std::string text =
      "system AXLD\n1: " + print(inst) + "   ax AxDk k=1 phi1=p psi=q\n";
  const Derivation d = parse_prf(text);
  CHECK_FALSE(check_derivation(d).has_value());
  // wrong arity parameter: the stated instance no longer matches
  const std::string wrong =
      "system AXLD\n1: " + print(inst) + "   ax AxDk k=2 phi1=p phi2=p psi=q\n";
  CHECK(check_derivation(parse_prf(wrong)).has_value());
}

TEST_CASE("rejected derivations name the first bad line") {
  // dangling reference
  const auto e1 = check_derivation(parse_prf("system AXC\n2: C #T ax Ax1C\n3: p mp 1 2\n"));
  REQUIRE(e1.has_value());
  CHECK(e1->line == 3);
  // wrong instance
  const auto e2 = check_derivation(parse_prf("system AXC\n1: C #F ax Ax1C\n"));
  REQUIRE(e2.has_value());
  CHECK(e2->line == 1);
  // non-tautology
  CHECK(check_derivation(parse_prf("system AXC\n1: p taut\n")).has_value());
  // rule from the wrong system
  CHECK(check_derivation(parse_prf("system AXC\n1: (p -> p) taut\n2: [U](p -> p) necu 1\n"))
            .has_value());
  // non-increasing indices
  CHECK(check_derivation(parse_prf("system AXC\n2: (p -> p) taut\n1: (q -> q) taut\n"))
            .has_value());
}

namespace {

// A deletion or justification-swap mutant is rejected when it either no
// longer checks or no longer proves the original theorem.
bool mutant_rejected(const Derivation& original, const Derivation& mutant) {
  if (check_derivation(mutant).has_value()) return true;
  return mutant.lines.empty() || mutant.theorem() != original.theorem();
}

}  // namespace

TEST_CASE("every single-line deletion is rejected") {
  int mutants = 0;
  for (const char* name : k_corpus) {
    const Derivation d = corpus(name);
    for (std::size_t k = 0; k < d.lines.size(); ++k) {
      Derivation m = d;
      m.lines.erase(m.lines.begin() + static_cast<std::ptrdiff_t>(k));
      CAPTURE(name);
      CAPTURE(k);
      CHECK(mutant_rejected(d, m));
      ++mutants;
    }
  }
  CHECK(mutants >= 20);
}

TEST_CASE("justification swaps are rejected") {
  int mutants = 0;
  for (const char* name : k_corpus) {
    const Derivation d = corpus(name);
    for (std::size_t k = 0; k < d.lines.size(); ++k) {
      Derivation m = d;
      Justification& j = m.lines[k].just;
      switch (j.kind) {
        case JustKind::Taut:
          // claim the line is the C-of-top axiom instead
          j.kind = JustKind::Axiom;
          j.axiom_id = "Ax1C";
          break;
        case JustKind::Axiom:
          j.kind = JustKind::Taut;
          break;
        case JustKind::MP:
          std::swap(j.ref1, j.ref2);
          break;
        case JustKind::EqC:
          j.kind = JustKind::MP;
          j.ref2 = j.ref1;
          break;
        case JustKind::NecC:
          j.kind = JustKind::Taut;
          break;
        default:
          continue;
      }
      CAPTURE(name);
      CAPTURE(k);
      CHECK(mutant_rejected(d, m));
      ++mutants;
    }
  }
  CHECK(mutants >= 10);
}

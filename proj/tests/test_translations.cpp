#include <doctest.h>

#include <array>

#include "helpers.hpp"
#include "translations.hpp"

using namespace pdl;
using t::P;
using t::fml;

namespace {

// Pointwise-equivalence oracle: brute force over every model on the union
// signature, every world.
bool pointwise_equivalent(FormulaId a, FormulaId b) {
  auto syms = props_of(a);
  const auto more = props_of(b);
  syms.insert(syms.end(), more.begin(), more.end());
  std::erase(syms, std::string(k_top_witness));
  const Signature sig = Signature::of(std::move(syms));
  for (std::uint64_t i = 0; i < model_count(sig); ++i) {
    const SDModel m = model_from_index(sig, i);
    KripkeEvaluator ev(m);
    const TruthVector& va = ev.truth(a);
    const TruthVector& vb = ev.truth(b);
    if (!(va == vb)) return false;
  }
  return true;
}

// Oracle for the chi translation: team satisfaction of the source must
// match global satisfaction of the image on every model.
bool team_global_oracle(FormulaId team_f, FormulaId kripke_f) {
  auto syms = props_of(team_f);
  const auto more = props_of(kripke_f);
  syms.insert(syms.end(), more.begin(), more.end());
  std::erase(syms, std::string(k_top_witness));
  const Signature sig = Signature::of(std::move(syms));
  for (std::uint64_t i = 0; i < model_count(sig); ++i) {
    const SDModel m = model_from_index(sig, i);
    KripkeEvaluator ev(m);
    if (eval_team(m, team_f, Fragment::TEAM_I) != ev.global(kripke_f)) return false;
  }
  return true;
}

int count_disjuncts(FormulaId f) {
  return kind(f) == Kind::Or ? count_disjuncts(lhs(f)) + count_disjuncts(rhs(f)) : 1;
}

int count_conjuncts(FormulaId f) {
  return kind(f) == Kind::And ? count_conjuncts(lhs(f)) + count_conjuncts(rhs(f)) : 1;
}

}  // namespace

TEST_CASE("expand_dep") {
  // constancy unfolds to the boxed disjunction
  const FormulaId p = P("p");
  CHECK(expand_dep(mk_c(p)) == mk_or(mk_u_box(p), mk_u_box(mk_not(p))));
  // D(p;q) gets one disjunct per normal form over {p}
  const FormulaId d1 = expand_dep(fml("D(p;q)"));
  CHECK(count_disjuncts(d1) == 4);
  CHECK(in_fragment(d1, Fragment::LC));
  CHECK(pointwise_equivalent(fml("D(p;q)"), d1));
  // k = 2: sixteen disjuncts
  const FormulaId d2 = expand_dep(fml("D(p,q;r)"));
  CHECK(count_disjuncts(d2) == 16);
  CHECK(pointwise_equivalent(fml("D(p,q;r)"), d2));
  // nested determinacy is expanded too
  CHECK(in_fragment(expand_dep(fml("D(D(p;q);r)")), Fragment::LC));
}

TEST_CASE("expand_indep") {
  const FormulaId i1 = expand_indep(fml("I(p;;q)"));
  CHECK(count_conjuncts(i1) == 4);  // 2 * 1 * 2
  CHECK(in_fragment(i1, Fragment::LC));
  CHECK(pointwise_equivalent(fml("I(p;;q)"), i1));
  const FormulaId i2 = expand_indep(fml("I(p;r;q)"));
  CHECK(count_conjuncts(i2) == 8);  // 2 * 2 * 2
  CHECK(pointwise_equivalent(fml("I(p;r;q)"), i2));
  CHECK(pointwise_equivalent(fml("I(p;;p)"), fml("C p")));
}

TEST_CASE("the structural translation into the independence language") {
  CHECK(t_ld_to_li(fml("C p")) == fml("I(p;;p)"));
  CHECK(t_ld_to_li(fml("D(p;q)")) == fml("I(q; p; q)"));
  CHECK(t_ld_to_li(fml("~(p -> q)")) == fml("~(p -> q)"));
  CHECK(in_fragment(t_ld_to_li(fml("D(C p; q -> r)")), Fragment::LI));
}

TEST_CASE("the team-level variant") {
  CHECK(tprime_d_to_i(fml("D(p;q)")) == fml("I(q; p; q)"));
  CHECK(tprime_d_to_i(fml("p | D(p;q)")) == fml("p | I(q; p; q)"));
  CHECK(tprime_d_to_i(fml("C q")) == fml("I(q;;q)"));
  CHECK_THROWS_AS(tprime_d_to_i(fml("~D(p;q)")), UnsupportedError);
}

TEST_CASE("the reverse translation from the independence language") {
  CHECK(s_li_to_ld(P("p")) == P("p"));
  CHECK(count_conjuncts(s_li_to_ld(fml("I(p;;q)"))) == 4);
  CHECK(count_conjuncts(s_li_to_ld(fml("I(p;q;r)"))) == 8);
  CHECK(pointwise_equivalent(fml("I(p;;q)"), s_li_to_ld(fml("I(p;;q)"))));
  CHECK(pointwise_equivalent(fml("I(p;q;r)"), s_li_to_ld(fml("I(p;q;r)"))));
  CHECK(in_fragment(s_li_to_ld(fml("I(p -> q;;r)")), Fragment::LD));
}

TEST_CASE("the chi-indexed translation") {
  // literals: boxed implication from the running normal form
  const FormulaId tp = tchi_i_to_ld(P("p"));
  CHECK(tp == mk_u_box(mk_implies(fml("~p | p"), P("p"))));
  // conjunction distributes
  const FormulaId both = tchi_i_to_ld(fml("p & q"));
  CHECK(kind(both) == Kind::And);
  // the translated disjunction of a tautologous team formula is globally
  // true exactly where the team formula holds (all four models over {p})
  CHECK(team_global_oracle(fml("p | ~p"), tchi_i_to_ld(fml("p | ~p"))));
  CHECK(team_global_oracle(fml("I(p;;q)"), tchi_i_to_ld(fml("I(p;;q)"))));
  CHECK(team_global_oracle(fml("p | I(p;;q)"), tchi_i_to_ld(fml("p | I(p;;q)"))));
}

TEST_CASE("the chi-indexed translation satisfies the global biconditional, small sizes") {
  for (FormulaId f : enumerate_formulas(Fragment::TEAM_I, t::sig({"p", "q"}), 4))
    CHECK(team_global_oracle(f, tchi_i_to_ld(f)));
}

TEST_CASE("plus, circ and star") {
  const FormulaId p = P("p");
  CHECK(plus_lc_to_lu(mk_c(p)) == mk_or(mk_ubox(p), mk_ubox(mk_not(p))));
  CHECK(circ_lu_to_lc(mk_ubox(p)) == mk_and(p, mk_c(p)));
  CHECK(star_lc_to_lc(mk_c(p)) ==
        mk_or(mk_and(p, mk_c(p)), mk_and(mk_not(p), mk_c(mk_not(p)))));
  CHECK(in_fragment(plus_lc_to_lu(fml("C (p -> C q)")), Fragment::LU));
  CHECK(in_fragment(circ_lu_to_lc(fml("[U] (p -> [U] q)")), Fragment::LC));
}

TEST_CASE("star is the composition of plus and circ, structurally") {
  for (FormulaId f : enumerate_formulas(Fragment::LC, t::sig({"p", "q"}), 5))
    CHECK(star_lc_to_lc(f) == circ_lu_to_lc(plus_lc_to_lu(f)));
}

TEST_CASE("the C-normal-form translation") {
  CHECK(tr_ld_to_lc(fml("C p")) == fml("C p"));
  CHECK(tr_ld_to_lc(fml("p -> q")) == fml("p -> q"));
  const FormulaId d = tr_ld_to_lc(fml("D(p;q)"));
  CHECK(count_disjuncts(d) == 4);
  CHECK(in_fragment(d, Fragment::LC));
  CHECK(pointwise_equivalent(fml("D(p;q)"), d));
}

TEST_CASE("relativised determinacy eliminates") {
  const FormulaId base = reldep_eliminate(fml("D^{t}(; p)"));
  CHECK(base == mk_or(mk_u_box(fml("t -> p")), mk_u_box(fml("t -> ~p"))));
  // D(a;b) matches the two-sided relativisation
  CHECK(pointwise_equivalent(fml("D(p;q)"),
                             reldep_eliminate(fml("D^{p}(;q) & D^{~p}(;q)"))));
  // the five-world example: the eliminated form is globally true
  const SDModel w = read_sdm_file(t::data_file("models/roadblocks.sdm"));
  const FormulaId eliminated = reldep_eliminate(fml("D^{p}(q; r)"));
  CHECK(in_fragment(eliminated, Fragment::LD));
  CHECK(eval_global(w, eliminated, Fragment::LD));
  // and matches the direct evaluation everywhere
  CHECK(pointwise_equivalent(fml("D^{p}(q; r)"), eliminated));
}

TEST_CASE("pointwise preservation on seeded corpora") {
  const Signature phi = t::sig({"p", "q"});
  struct Case {
    Fragment frag;
    FormulaId (*fn)(FormulaId);
  };
  const Case cases[] = {
      {Fragment::LD, t_ld_to_li},    {Fragment::LI, s_li_to_ld},
      {Fragment::LD, expand_dep},    {Fragment::LI, expand_indep},
      {Fragment::LD, tr_ld_to_lc},   {Fragment::LD_REL, reldep_eliminate},
      {Fragment::LC, plus_lc_to_lu}, {Fragment::LU, circ_lu_to_lc},
      {Fragment::LC, star_lc_to_lc},
  };
  for (const auto& c : cases) {
    FormulaSampler gen(c.frag, phi, 6, 17);
    for (int i = 0; i < 40; ++i) {
      const FormulaId f = gen.next();
      CHECK(pointwise_equivalent(f, c.fn(f)));
    }
  }
}

TEST_CASE("team preservation of the team-level variant") {
  const Signature phi = t::sig({"p", "q"});
  for (FormulaId f : enumerate_formulas(Fragment::TEAM_D, phi, 5,
                                        /*allow_negated_dep=*/false)) {
    const FormulaId g = tprime_d_to_i(f);
    for (std::uint64_t i = 0; i < model_count(phi); ++i) {
      const SDModel m = model_from_index(phi, i);
      CHECK(eval_team(m, f, Fragment::TEAM_D) == eval_team(m, g, Fragment::TEAM_I));
    }
  }
}

TEST_CASE("translations introduce no symbols beyond the truth witness") {
  const Signature phi = t::sig({"p", "q"});
  auto hygienic = [](FormulaId g) {
    for (const auto& s : props_of(g))
      if (s != "p" && s != "q" && s != k_top_witness) return false;
    return true;
  };
  struct Case {
    Fragment frag;
    FormulaId (*fn)(FormulaId);
  };
  const Case cases[] = {
      {Fragment::LD, t_ld_to_li},    {Fragment::LI, s_li_to_ld},
      {Fragment::LD, expand_dep},    {Fragment::LI, expand_indep},
      {Fragment::LD, tr_ld_to_lc},   {Fragment::LD_REL, reldep_eliminate},
      {Fragment::LC, plus_lc_to_lu}, {Fragment::LU, circ_lu_to_lc},
      {Fragment::LC, star_lc_to_lc},
  };
  for (const auto& c : cases) {
    FormulaSampler gen(c.frag, phi, 6, 23);
    for (int i = 0; i < 40; ++i) CHECK(hygienic(c.fn(gen.next())));
  }
  for (FormulaId f : enumerate_formulas(Fragment::TEAM_I, phi, 4))
    CHECK(hygienic(tchi_i_to_ld(f)));
  for (FormulaId f : enumerate_formulas(Fragment::TEAM_D, phi, 4, false))
    CHECK(hygienic(tprime_d_to_i(f)));
}

TEST_CASE("the composite dispatcher") {
  CHECK(translate(fml("D(p;q)"), Fragment::TEAM_D, Fragment::TEAM_I) ==
        fml("I(q; p; q)"));
  CHECK(in_fragment(translate(fml("I(p;;q)"), Fragment::TEAM_I, Fragment::LD),
                    Fragment::LD));
  CHECK(in_fragment(translate(fml("D(p;q)"), Fragment::LD, Fragment::LU), Fragment::LU));
  CHECK(translate(fml("C p"), Fragment::LC, Fragment::LC) == star_lc_to_lc(fml("C p")));
  CHECK_THROWS_AS(translate(fml("I(p;;q)"), Fragment::TEAM_I, Fragment::TEAM_D),
                  UnsupportedError);
  CHECK_THROWS_AS(translate(fml("C p"), Fragment::LC, Fragment::TEAM_D),
                  UnsupportedError);
}

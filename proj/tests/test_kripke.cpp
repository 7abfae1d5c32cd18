#include <doctest.h>

#include <algorithm>
#include <array>

#include "helpers.hpp"

using namespace pdl;
using t::P;
using t::fml;

TEST_CASE("truth vectors") {
  const SDModel full = full_model(t::sig({"p"}));
  const TruthVector v = truth_function(full, P("p"));
  REQUIRE(v.size() == 2);
  CHECK_FALSE(v.get(0));
  CHECK(v.get(1));
  CHECK(truth_function(full, fml("#T")).all_true());
  const SDModel boiling = read_sdm_file(t::data_file("models/boiling.sdm"));
  const TruthVector pq = truth_function(boiling, fml("p & q"));
  CHECK(pq.get(0));        // file order: the p,q world comes first
  CHECK_FALSE(pq.get(1));
}

TEST_CASE("pointed evaluation basics") {
  const SDModel full = full_model(t::sig({"p", "q"}));
  for (std::size_t w = 0; w < 4; ++w) {
    CHECK_FALSE(eval_kripke(full, w, fml("D(p;q)"), Fragment::LD));
    CHECK_FALSE(eval_kripke(full, w, fml("D(p;q) | D(p;q)"), Fragment::LD));
    CHECK(eval_kripke(full, w, fml("C #T"), Fragment::LD));
  }
  CHECK_THROWS_AS(eval_kripke(full, 7, P("p"), Fragment::LD), ArgError);
  CHECK_THROWS_AS(eval_kripke(full, 0, fml("[U] p"), Fragment::LD), FragmentError);
}

TEST_CASE("negated constancy on the two-world and one-world models") {
  const SDModel two = read_sdm_file(t::data_file("models/two_worlds.sdm"));
  CHECK(eval_kripke(two, 0, fml("~C p"), Fragment::LD));
  CHECK(eval_kripke(two, 1, fml("~C p"), Fragment::LD));
  const SDModel one = read_sdm_file(t::data_file("models/single_blank.sdm"));
  CHECK_FALSE(eval_kripke(one, 0, fml("~C p"), Fragment::LD));
}

TEST_CASE("relativised determinacy on the road-block model") {
  const SDModel w = read_sdm_file(t::data_file("models/roadblocks.sdm"));
  REQUIRE(w.world_count() == 5);
  const FormulaId rel = fml("D^{p}(q; r)");
  const FormulaId cond = fml("p -> D(q; r)");
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(eval_kripke(w, i, rel, Fragment::LD_REL));
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(eval_kripke(w, i, cond, Fragment::LD));
  for (std::size_t i = 3; i < 5; ++i)
    CHECK_FALSE(eval_kripke(w, i, cond, Fragment::LD));
}

TEST_CASE("global evaluation") {
  const SDModel empty = t::model("sig p q\n");
  CHECK(eval_global(empty, fml("D(p;q) & ~p"), Fragment::LD));  // vacuous
  const SDModel full = full_model(t::sig({"p", "q"}));
  CHECK_FALSE(eval_global(full, fml("D(p;q) | D(p;q)"), Fragment::LD));
  const SDModel boiling = read_sdm_file(t::data_file("models/boiling.sdm"));
  CHECK(eval_global(boiling, fml("D(p;q)"), Fragment::LD));
}

TEST_CASE("out-of-signature symbols are uniformly false") {
  const SDModel m = t::model("sig p\nw p\nw -\n");
  CHECK(eval_global(m, fml("~q"), Fragment::LD));
  CHECK(eval_global(m, fml("C q"), Fragment::LD));
  CHECK(eval_global(m, fml("#T"), Fragment::LD));  // the _t witness is outside too
}

TEST_CASE("determinacy checks and witnesses") {
  const SDModel boiling = read_sdm_file(t::data_file("models/boiling.sdm"));
  const TruthVector tp = truth_function(boiling, P("p"));
  const TruthVector tq = truth_function(boiling, P("q"));
  const std::array one{tp};
  CHECK(det_check(one, tq));
  const auto w = det_witness(one, tq);
  REQUIRE(w.has_value());
  CHECK(w->arity == 1);
  CHECK(w->apply(0) == false);
  CHECK(w->apply(1) == true);
  CHECK(w->realized[0]);
  CHECK(w->realized[1]);

  // empty premise family: determined means constant
  const SDModel full1 = full_model(t::sig({"p"}));
  CHECK(det_check({}, truth_function(full1, fml("#T"))));
  CHECK_FALSE(det_check({}, truth_function(full1, P("p"))));
  CHECK_FALSE(det_witness({}, truth_function(full1, P("p"))).has_value());

  // the three-oven model: (p,r) determines q, with default 0 on the
  // unrealized tuple (0,1)
  const SDModel ovens = read_sdm_file(t::data_file("models/ovens3.sdm"));
  const std::array two{truth_function(ovens, P("p")), truth_function(ovens, P("r"))};
  const auto w3 = det_witness(two, truth_function(ovens, P("q")));
  REQUIRE(w3.has_value());
  CHECK(w3->apply(0b00) == false);
  CHECK(w3->apply(0b01) == true);   // p=1, r=0
  CHECK(w3->apply(0b11) == false);  // p=1, r=1
  CHECK(w3->apply(0b10) == false);  // unrealized default
  CHECK_FALSE(w3->realized[0b10]);

  // mismatched lengths
  const std::array bad{truth_function(t::model("sig p\nw -\n"), P("p"))};
  CHECK_THROWS_AS(det_check(bad, tq), ArgError);
}

TEST_CASE("witnesses reconstruct the target on every world") {
  const Signature phi = t::sig({"p", "q"});
  for (std::uint64_t i = 0; i < model_count(phi); ++i) {
    const SDModel m = model_from_index(phi, i);
    const std::array prem{truth_function(m, P("p"))};
    const TruthVector target = truth_function(m, fml("p | q"));
    const auto w = det_witness(prem, target);
    if (!w) continue;
    for (std::size_t world = 0; world < m.world_count(); ++world)
      CHECK(w->apply(prem[0].get(world) ? 1 : 0) == target.get(world));
  }
}

TEST_CASE("the determinacy operator agrees with the Det condition") {
  const Signature phi = t::sig({"p", "q"});
  const std::vector<FormulaId> lits{P("p"), P("q"), fml("~p"), fml("~q")};
  for (std::uint64_t i = 0; i < model_count(phi); ++i) {
    const SDModel m = model_from_index(phi, i);
    if (m.empty()) continue;
    KripkeEvaluator ev(m);
    for (FormulaId a : lits) {
      for (FormulaId b : lits) {
        // one- and two-premise atoms
        const std::array v1{truth_function(m, a)};
        CHECK(ev.at(mk_dep(std::array{a}, b), 0) == det_check(v1, truth_function(m, b)));
        for (FormulaId c : lits) {
          const std::array v2{truth_function(m, a), truth_function(m, b)};
          CHECK(ev.at(mk_dep(std::array{a, b}, c), 0) ==
                det_check(v2, truth_function(m, c)));
        }
      }
    }
  }
}

TEST_CASE("operator verdicts are world independent") {
  const Signature phi = t::sig({"p", "q"});
  FormulaSampler gen(Fragment::LD, phi, 7, 21);
  for (int n = 0; n < 60; ++n) {
    const FormulaId f = gen.next();
    for (std::uint64_t i = 1; i < model_count(phi); ++i) {
      const SDModel m = model_from_index(phi, i);
      for (FormulaId op : {mk_dep(std::array{f}, f), mk_selfindep(f)}) {
        const TruthVector v = truth_function(m, op);
        CHECK(v.constant());
      }
    }
  }
}

TEST_CASE("the [u] abbreviation is the universal modality") {
  const Signature phi = t::sig({"p", "q"});
  FormulaSampler gen(Fragment::LD, phi, 6, 5);
  for (int n = 0; n < 80; ++n) {
    const FormulaId f = gen.next();
    const FormulaId boxed = mk_u_box(f);
    for (std::uint64_t i = 1; i < model_count(phi); ++i) {
      const SDModel m = model_from_index(phi, i);
      KripkeEvaluator ev(m);
      for (std::size_t w = 0; w < m.world_count(); ++w)
        CHECK(ev.at(boxed, w) == ev.global(f));
    }
  }
}

TEST_CASE("locality: verdicts depend only on the restriction to the formula's symbols") {
  // Exhaustive in formulas of size <= 6 over {p,q}; model pairs are the
  // canonical restriction against seeded members of its equivalence class
  // over {p,q,r}.  Pointwise agreement is between worlds with the same
  // {p,q}-values; global truth agrees outright.
  const Signature small = t::sig({"p", "q"});
  const Signature big = t::sig({"p", "q", "r"});
  std::vector<FormulaId> corpus = enumerate_formulas(Fragment::LC, small, 5);
  FormulaSampler gen(Fragment::LD, small, 6, 2);
  for (int n = 0; n < 50; ++n) corpus.push_back(gen.next());

  // group the 256 big models by their restriction; p and q keep their bit
  // positions, so restricting a world mask is masking with 0b11
  std::vector<std::vector<SDModel>> classes(16);
  for (std::uint64_t i = 0; i < model_count(big); ++i) {
    SDModel m = model_from_index(big, i);
    const SDModel r = restrict_model(m, small);
    std::uint64_t cls = 0;
    for (WorldMask w : r.worlds) cls |= std::uint64_t{1} << w;
    classes[cls].push_back(std::move(m));
  }
  std::mt19937_64 rng(13);
  for (FormulaId f : corpus) {
    for (std::uint64_t ci = 0; ci < 16; ++ci) {
      const SDModel canonical = model_from_index(small, ci);
      KripkeEvaluator canon_ev(canonical);
      const bool global_expected = canon_ev.global(f);
      for (int pickn = 0; pickn < 2; ++pickn) {
        const auto& member = classes[ci][rng() % classes[ci].size()];
        KripkeEvaluator ev(member);
        CHECK(ev.global(f) == global_expected);
        for (std::size_t w = 0; w < member.world_count(); ++w) {
          const WorldMask restricted = member.worlds[w] & 0b11u;
          const auto it = std::find(canonical.worlds.begin(), canonical.worlds.end(),
                                    restricted);
          REQUIRE(it != canonical.worlds.end());
          const std::size_t u =
              static_cast<std::size_t>(it - canonical.worlds.begin());
          CHECK(ev.at(f, w) == canon_ev.at(f, u));
        }
      }
    }
  }
}

TEST_CASE("team and pointed semantics agree on the operator atoms") {
  const Signature phi = t::sig({"p", "q"});
  std::vector<FormulaId> atoms;
  for (FormulaId a : {P("p"), P("q")})
    for (FormulaId b : {P("p"), P("q")}) {
      atoms.push_back(mk_dep(std::array{a}, b));
      atoms.push_back(mk_dep({}, b));
      atoms.push_back(mk_indep(std::array{a}, {}, std::array{b}));
      atoms.push_back(mk_indep(std::array{a}, std::array{b}, std::array{a}));
    }
  for (std::uint64_t i = 0; i < model_count(phi); ++i) {
    const SDModel m = model_from_index(phi, i);
    TeamEvaluator team(m, SplitStrategy::General);
    KripkeEvaluator kripke(m);
    for (FormulaId atom : atoms)
      CHECK(team.on_full_team(atom) == kripke.global(atom));
  }
}

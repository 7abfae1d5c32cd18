#include <doctest.h>

#include <chrono>

#include "helpers.hpp"

using namespace pdl;
using t::P;
using t::fml;

namespace {

const SDModel& fixture(const char* name) {
  static std::map<std::string, SDModel> cache;
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, read_sdm_file(t::data_file(std::string("models/") + name)))
             .first;
  return it->second;
}

}  // namespace

TEST_CASE("scenario fixtures") {
  CHECK(t::team_sat(fixture("vertigo.sdm"), "p | q", Fragment::TEAM_D));
  CHECK(t::team_sat(fixture("boiling.sdm"), "D(p;q)", Fragment::TEAM_D));
  CHECK_FALSE(t::team_sat(fixture("ovens3.sdm"), "D(p;q)", Fragment::TEAM_D));
  CHECK(t::team_sat(fixture("ovens3.sdm"), "D(p,r;q)", Fragment::TEAM_D));
  CHECK_FALSE(t::team_sat(fixture("ovens4.sdm"), "D(p,r;q)", Fragment::TEAM_D));
  CHECK(t::team_sat(fixture("sunwinter.sdm"), "D(p;q) | D(p;q)", Fragment::TEAM_D));
  CHECK_FALSE(t::team_sat(fixture("sunwinter.sdm"), "D(p;q)", Fragment::TEAM_D));
  // independence of p and q on the full model, broken on {w1, w4}
  CHECK(t::team_sat(fixture("sunwinter.sdm"), "I(p;;q)", Fragment::TEAM_I));
  CHECK_FALSE(t::team_sat(fixture("boiling.sdm"), "I(p;;q)", Fragment::TEAM_I));
  // one-world models satisfy every independence atom
  const SDModel one = fixture("single_blank.sdm");
  CHECK(t::team_sat(one, "I(p;;p)", Fragment::TEAM_I));
  CHECK(t::team_sat(one, "I(p,q;r;q)", Fragment::TEAM_I));
  // self-independence is constancy
  const SDModel constant = t::model("sig p q\nw p q\nw p\n");
  CHECK(t::team_sat(constant, "I(p;;p)", Fragment::TEAM_I));
  CHECK_FALSE(t::team_sat(full_model(t::sig({"p"})), "I(p;;p)", Fragment::TEAM_I));
  // a negated D-atom holds exactly on the empty team
  CHECK(t::team_sat(t::model("sig p q\n"), "~D(p;q)", Fragment::TEAM_D));
  CHECK_FALSE(t::team_sat(fixture("boiling.sdm"), "~D(p;q)", Fragment::TEAM_D));
}

TEST_CASE("the empty team satisfies everything") {
  const SDModel empty = t::model("sig p q\n");
  for (FormulaId f : enumerate_formulas(Fragment::TEAM_D, t::sig({"p", "q"}), 5))
    CHECK(eval_team(empty, f, Fragment::TEAM_D));
  for (FormulaId f : enumerate_formulas(Fragment::TEAM_I, t::sig({"p", "q"}), 5))
    CHECK(eval_team(empty, f, Fragment::TEAM_I));
}

TEST_CASE("strategy preconditions and guards") {
  const SDModel m = fixture("sunwinter.sdm");
  CHECK_THROWS_AS(
      eval_team(m, fml("I(p;;q)"), Fragment::TEAM_I, SplitStrategy::Partition),
      ArgError);
  CHECK_THROWS_AS(eval_team(m, fml("p -> q"), Fragment::TEAM_D), FragmentError);
  CHECK_THROWS_AS(eval_team(m, fml("p"), Fragment::LD), ArgError);
  // the general strategy is guarded at 14 worlds
  std::vector<WorldMask> worlds;
  for (WorldMask w = 0; w < 15; ++w) worlds.push_back(w);
  const SDModel big{t::sig({"a", "b", "c", "d"}), worlds};
  CHECK_THROWS_AS(eval_team(big, fml("a | b"), Fragment::TEAM_D, SplitStrategy::General),
                  GuardError);
  CHECK(eval_team(big, fml("a | ~a"), Fragment::TEAM_D, SplitStrategy::Partition));
}

TEST_CASE("general and partition strategies agree on the D fragment") {
  const Signature phi = t::sig({"p", "q"});
  const auto corpus = enumerate_formulas(Fragment::TEAM_D, phi, 6);
  for (std::uint64_t i = 0; i < model_count(phi); ++i) {
    const SDModel m = model_from_index(phi, i);
    TeamEvaluator general(m, SplitStrategy::General);
    TeamEvaluator partition(m, SplitStrategy::Partition);
    for (FormulaId f : corpus)
      CHECK(general.on_full_team(f) == partition.on_full_team(f));
  }
}

TEST_CASE("flatness of negation-normal-form propositional formulas") {
  CHECK(flatness_check(fml("p | q"), t::sig({"p", "q"})));
  CHECK(flatness_check(fml("~p & q"), t::sig({"p", "q"})));
  CHECK_THROWS_AS(flatness_check(fml("D(p;q)"), t::sig({"p", "q"})), FragmentError);
}

TEST_CASE("downward closure scan") {
  auto none = downward_closure_scan(fml("D(p;q)"), t::sig({"p", "q"}));
  CHECK_FALSE(none.has_value());
  CHECK_FALSE(downward_closure_scan(fml("~p"), t::sig({"p"})).has_value());

  const auto witness = downward_closure_scan(fml("I(p;;q)"), t::sig({"p", "q"}));
  REQUIRE(witness.has_value());
  CHECK(witness->team.same_worlds(full_model(t::sig({"p", "q"}))));
  CHECK(witness->subteam.same_worlds(fixture("boiling.sdm")));  // {p q}, {}
}

TEST_CASE("downward closure holds across the D fragment") {
  const Signature phi = t::sig({"p", "q"});
  for (FormulaId f : enumerate_formulas(Fragment::TEAM_D, phi, 6))
    CHECK_FALSE(downward_closure_scan(f, phi).has_value());
}

TEST_CASE("team locality: restriction to the formula's symbols decides the verdict") {
  const Signature small = t::sig({"p", "q"});
  const Signature big = t::sig({"p", "q", "r"});
  std::vector<std::vector<SDModel>> classes(16);
  for (std::uint64_t i = 0; i < model_count(big); ++i) {
    SDModel m = model_from_index(big, i);
    const SDModel r = restrict_model(m, small);
    std::uint64_t cls = 0;
    for (WorldMask w : r.worlds) cls |= std::uint64_t{1} << w;
    classes[cls].push_back(std::move(m));
  }
  std::mt19937_64 rng(29);
  for (Fragment frag : {Fragment::TEAM_D, Fragment::TEAM_I}) {
    const SplitStrategy strat =
        frag == Fragment::TEAM_D ? SplitStrategy::Partition : SplitStrategy::General;
    for (FormulaId f : enumerate_formulas(frag, small, 6)) {
      for (std::uint64_t cls = 0; cls < 16; ++cls) {
        const SDModel canonical = model_from_index(small, cls);
        const bool expected = eval_team(canonical, f, frag, strat);
        for (int n = 0; n < 2; ++n) {
          const auto& member = classes[cls][rng() % classes[cls].size()];
          CHECK(eval_team(member, f, frag, strat) == expected);
        }
      }
    }
  }
}

TEST_CASE("split timing floor: ten worlds under one disjunction of I-atoms") {
  // 3^10 covers with memoisation and short-circuiting
  std::vector<WorldMask> worlds;
  for (WorldMask w = 0; w < 10; ++w) worlds.push_back(w);
  const SDModel m{t::sig({"a", "b", "c", "d"}), worlds};
  const FormulaId f = fml("I(a;;b) | I(c;;d)");
  const auto start = std::chrono::steady_clock::now();
  eval_team(m, f, Fragment::TEAM_I, SplitStrategy::General);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  CHECK(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() < 1000);
}

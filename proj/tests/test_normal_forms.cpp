#include <doctest.h>

#include <array>

#include "helpers.hpp"

using namespace pdl;
using t::P;
using t::fml;

TEST_CASE("types_over") {
  CHECK(types_over({}).size() == 1);
  CHECK(types_over({}).at(0).render() == mk_top());
  const std::array base{P("p")};
  const auto ts = types_over(base);
  REQUIRE(ts.size() == 2);
  CHECK(ts[0].render() == fml("~p"));
  CHECK(ts[1].render() == fml("p"));
  const std::array base2{P("p"), P("q")};
  CHECK(types_over(base2).size() == 4);
  CHECK(types_over(base2)[1].render() == fml("p & ~q"));  // bit 0 = first element
}

TEST_CASE("dnf_over") {
  const auto empty = dnf_over({});
  REQUIRE(empty.size() == 2);
  CHECK(empty[0].render() == mk_bot());
  CHECK(empty[1].render() == mk_top());
  const std::array base{P("p")};
  const auto nfs = dnf_over(base);
  REQUIRE(nfs.size() == 4);
  CHECK(nfs[0].render() == mk_bot());
  CHECK(nfs[1].render() == fml("~p"));
  CHECK(nfs[2].render() == fml("p"));
  CHECK(nfs[3].render() == fml("~p | p"));
  const std::array base2{P("p"), P("q")};
  CHECK(dnf_over(base2).size() == 16);
  CHECK_THROWS_AS(dnf_over(std::array{P("a"), P("b"), P("c"), P("d"), P("e")}),
                  GuardError);
}

namespace {

// Independent counting oracle: assignments of each disjunct to
// {left, right, both}.
std::size_t count_splits_oracle(std::size_t n) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  return total;
}

}  // namespace

TEST_CASE("split_pairs") {
  const std::array base{P("p")};
  TypeNormalForm chi = TypeNormalForm::full({base.begin(), base.end()});
  REQUIRE(chi.disjuncts.size() == 2);
  const auto pairs = split_pairs(chi);
  CHECK(pairs.size() == count_splits_oracle(2));  // 9
  // the union of every pair is chi
  for (const auto& pr : pairs) {
    std::vector<std::uint32_t> u = pr.left.disjuncts;
    u.insert(u.end(), pr.right.disjuncts.begin(), pr.right.disjuncts.end());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    CHECK(u == chi.disjuncts);
  }
  // the empty normal form splits only as (bot, bot)
  TypeNormalForm bot{{base.begin(), base.end()}, {}};
  const auto bots = split_pairs(bot);
  REQUIRE(bots.size() == 1);
  CHECK(bots[0].left.render() == mk_bot());
  CHECK(bots[0].right.render() == mk_bot());
  // one disjunct: three pairs
  TypeNormalForm single{{base.begin(), base.end()}, {1}};
  CHECK(split_pairs(single).size() == count_splits_oracle(1));
  // 3^n across sizes, against the independent count
  const std::array base2{P("p"), P("q")};
  TypeNormalForm chi2 = TypeNormalForm::full({base2.begin(), base2.end()});
  CHECK(split_pairs(chi2).size() == count_splits_oracle(4));
}

TEST_CASE("type_of_world") {
  const SDModel full = full_model(t::sig({"p", "q"}));
  const std::array base{P("p"), P("q")};
  // world 1 is {p}: type p & ~q
  CHECK(type_of_world(full, 1, base).render() == fml("p & ~q"));
  CHECK(type_of_world(full, 1, {}).render() == mk_top());
  const SDModel one = t::model("sig p q\nw p q\n");
  const std::array compound{fml("p & q")};
  CHECK(type_of_world(one, 0, compound).render() == fml("p & q"));
}

TEST_CASE("exactly one type holds at each world") {
  const Signature phi = t::sig({"p", "q"});
  const std::array base{P("p"), P("q")};
  for (std::uint64_t i = 0; i < model_count(phi); ++i) {
    const SDModel m = model_from_index(phi, i);
    KripkeEvaluator ev(m);
    for (std::size_t w = 0; w < m.world_count(); ++w) {
      int holds = 0;
      for (const auto& type : types_over(base))
        if (ev.at(type.render(), w)) ++holds;
      CHECK(holds == 1);
    }
  }
}

TEST_CASE("the full normal form over one symbol is a validity") {
  const std::array base{P("p")};
  const FormulaId taut = TypeNormalForm::full({base.begin(), base.end()}).render();
  CHECK(validity(taut, Fragment::LC).result);
}

#include "decide.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>
#include <unordered_set>

#include "kripke_eval.hpp"
#include "normal_forms.hpp"
#include "team_eval.hpp"

namespace pdl {

namespace {

constexpr std::size_t k_no_world = static_cast<std::size_t>(-1);

Signature enum_signature(std::vector<std::string> syms) {
  std::erase(syms, std::string(k_top_witness));
  if (syms.size() > k_max_enum_signature)
    throw GuardError("decision procedures limited to " +
                     std::to_string(k_max_enum_signature) + " proposition symbols");
  return Signature::of(std::move(syms));
}

Signature enum_signature(FormulaId f) { return enum_signature(props_of(f)); }

Signature enum_signature(FormulaId a, FormulaId b) {
  auto syms = props_of(a);
  const auto more = props_of(b);
  syms.insert(syms.end(), more.begin(), more.end());
  return enum_signature(std::move(syms));
}

struct ScanHit {
  std::uint64_t index = 0;
  std::size_t world = k_no_world;
};

// First model index (plus optional world) the check flags, in enumeration
// order.  The check must be safe to run from several threads at once.
std::optional<ScanHit> scan_models(
    const Signature& sig, int jobs,
    const std::function<std::optional<std::size_t>(const SDModel&, std::uint64_t)>& check) {
  const std::uint64_t count = model_count(sig);
  jobs = std::clamp(jobs, 1, 64);
  if (jobs == 1 || count < 64) {
    for (std::uint64_t i = 0; i < count; ++i)
      if (auto w = check(model_from_index(sig, i), i)) return ScanHit{i, *w};
    return std::nullopt;
  }
  std::atomic<std::uint64_t> best{count};
  std::vector<ScanHit> hits(static_cast<std::size_t>(jobs));
  std::vector<bool> found(static_cast<std::size_t>(jobs), false);
  const std::uint64_t chunk = (count + jobs - 1) / jobs;
  std::vector<std::thread> threads;
  for (int t = 0; t < jobs; ++t) {
    threads.emplace_back([&, t] {
      const std::uint64_t lo = chunk * static_cast<std::uint64_t>(t);
      const std::uint64_t hi = std::min(count, lo + chunk);
      for (std::uint64_t i = lo; i < hi; ++i) {
        if (i >= best.load(std::memory_order_relaxed)) break;
        if (auto w = check(model_from_index(sig, i), i)) {
          hits[t] = ScanHit{i, *w};
          found[t] = true;
          std::uint64_t cur = best.load(std::memory_order_relaxed);
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  std::optional<ScanHit> out;
  for (int t = 0; t < jobs; ++t)
    if (found[t] && (!out || hits[t].index < out->index)) out = hits[t];
  return out;
}

SplitStrategy strategy_for(FormulaId f) {
  // The partition strategy is the verified optimisation for the
  // downward-closed fragment.
  return in_fragment(f, Fragment::TEAM_D) ? SplitStrategy::Partition
                                          : SplitStrategy::General;
}

void check_team_size(const SDModel& m, SplitStrategy s) {
  const std::size_t limit =
      s == SplitStrategy::General ? k_max_team_general : k_max_team_partition;
  if (m.world_count() > limit)
    throw GuardError("team evaluation limited to " + std::to_string(limit) +
                     " worlds under this strategy");
}

bool team_holds(const SDModel& m, FormulaId f, SplitStrategy s) {
  check_team_size(m, s);
  TeamEvaluator ev(m, s);
  return ev.on_full_team(f);
}

Fragment require_team(Fragment frag) {
  if (!is_team_fragment(frag) && frag != Fragment::PL_NNF)
    throw ArgError("expected a team fragment");
  return frag;
}

}  // namespace

Verdict validity(FormulaId f, Fragment frag, int jobs) {
  require_fragment(f, frag);
  const Signature sig = enum_signature(f);
  auto hit = scan_models(sig, jobs,
                         [f](const SDModel& m, std::uint64_t) -> std::optional<std::size_t> {
                           KripkeEvaluator ev(m);
                           const TruthVector& v = ev.truth(f);
                           for (std::size_t w = 0; w < v.size(); ++w)
                             if (!v.get(w)) return w;
                           return std::nullopt;
                         });
  if (!hit) return Verdict{true, std::nullopt, std::nullopt};
  return Verdict{false, model_from_index(sig, hit->index), hit->world};
}

Verdict satisfiable(FormulaId f, Fragment frag, int jobs) {
  require_fragment(f, frag);
  const Signature sig = enum_signature(f);
  auto hit = scan_models(
      sig, jobs, [f](const SDModel& m, std::uint64_t i) -> std::optional<std::size_t> {
        if (i == 0) return std::nullopt;  // satisfiability ranges over nonempty models
        KripkeEvaluator ev(m);
        const TruthVector& v = ev.truth(f);
        for (std::size_t w = 0; w < v.size(); ++w)
          if (v.get(w)) return w;
        return std::nullopt;
      });
  if (!hit) return Verdict{false, std::nullopt, std::nullopt};
  return Verdict{true, model_from_index(sig, hit->index), hit->world};
}

Verdict equivalent(FormulaId a, FormulaId b, Fragment frag, int jobs) {
  require_fragment(a, frag);
  require_fragment(b, frag);
  const Signature sig = enum_signature(a, b);
  auto hit = scan_models(
      sig, jobs, [a, b](const SDModel& m, std::uint64_t) -> std::optional<std::size_t> {
        KripkeEvaluator ev(m);
        const TruthVector& va = ev.truth(a);
        const TruthVector& vb = ev.truth(b);
        for (std::size_t w = 0; w < va.size(); ++w)
          if (va.get(w) != vb.get(w)) return w;
        return std::nullopt;
      });
  if (!hit) return Verdict{true, std::nullopt, std::nullopt};
  return Verdict{false, model_from_index(sig, hit->index), hit->world};
}

Verdict team_validity(FormulaId f, Fragment frag, int jobs) {
  require_fragment(f, require_team(frag));
  const Signature sig = enum_signature(f);
  const SplitStrategy strat = strategy_for(f);
  auto hit = scan_models(sig, jobs,
                         [f, strat](const SDModel& m, std::uint64_t) -> std::optional<std::size_t> {
                           if (!team_holds(m, f, strat)) return k_no_world;
                           return std::nullopt;
                         });
  if (!hit) return Verdict{true, std::nullopt, std::nullopt};
  return Verdict{false, model_from_index(sig, hit->index), std::nullopt};
}

Verdict team_satisfiable(FormulaId f, Fragment frag, int jobs) {
  require_fragment(f, require_team(frag));
  const Signature sig = enum_signature(f);
  const SplitStrategy strat = strategy_for(f);
  auto hit = scan_models(
      sig, jobs, [f, strat](const SDModel& m, std::uint64_t i) -> std::optional<std::size_t> {
        if (i == 0) return std::nullopt;
        if (team_holds(m, f, strat)) return k_no_world;
        return std::nullopt;
      });
  if (!hit) return Verdict{false, std::nullopt, std::nullopt};
  return Verdict{true, model_from_index(sig, hit->index), std::nullopt};
}

Verdict team_equivalent(FormulaId a, FormulaId b, Fragment frag, int jobs) {
  require_fragment(a, require_team(frag));
  require_fragment(b, require_team(frag));
  const Signature sig = enum_signature(a, b);
  const SplitStrategy sa = strategy_for(a), sb = strategy_for(b);
  auto hit = scan_models(
      sig, jobs, [&](const SDModel& m, std::uint64_t) -> std::optional<std::size_t> {
        if (team_holds(m, a, sa) != team_holds(m, b, sb)) return k_no_world;
        return std::nullopt;
      });
  if (!hit) return Verdict{true, std::nullopt, std::nullopt};
  return Verdict{false, model_from_index(sig, hit->index), std::nullopt};
}

Verdict team_vs_kripke(FormulaId team_f, Fragment team_frag, FormulaId kripke_f,
                       Fragment kripke_frag, int jobs) {
  require_fragment(team_f, require_team(team_frag));
  require_fragment(kripke_f, kripke_frag);
  const Signature sig = enum_signature(team_f, kripke_f);
  const SplitStrategy strat = strategy_for(team_f);
  auto hit = scan_models(
      sig, jobs, [&](const SDModel& m, std::uint64_t) -> std::optional<std::size_t> {
        KripkeEvaluator ev(m);
        if (team_holds(m, team_f, strat) != ev.global(kripke_f)) return k_no_world;
        return std::nullopt;
      });
  if (!hit) return Verdict{true, std::nullopt, std::nullopt};
  return Verdict{false, model_from_index(sig, hit->index), std::nullopt};
}

FormulaId characteristic_formula(const SDModel& w, const Signature& phi) {
  if (w.empty()) throw ArgError("characteristic formula needs a nonempty model");
  if (phi.size() > k_max_enum_signature)
    throw GuardError("characteristic formula limited to " +
                     std::to_string(k_max_enum_signature) + " symbols");
  if (!phi.subset_of(w.sig))
    throw ArgError("phi must be contained in the model signature");
  std::vector<FormulaId> base;
  base.reserve(phi.size());
  for (const auto& s : phi.symbols()) base.push_back(mk_prop(s));
  KripkeEvaluator ev(w);
  std::vector<std::uint32_t> masks;
  masks.reserve(w.world_count());
  for (std::size_t i = 0; i < w.world_count(); ++i)
    masks.push_back(type_of_world(ev, i, base).polarity);
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  FormulaId dia_part = k_no_formula;
  FormulaId cover = k_no_formula;
  for (std::uint32_t m : masks) {
    const FormulaId type = TypeConjunction{base, m}.render();
    const FormulaId dia = mk_u_dia(type);
    dia_part = dia_part == k_no_formula ? dia : mk_and(dia_part, dia);
    cover = cover == k_no_formula ? type : mk_or(cover, type);
  }
  return mk_and(dia_part, mk_u_box(cover));
}

FormulaId defining_formula(std::span<const SDModel> models, const Signature& phi) {
  if (phi.size() > 3) throw GuardError("defining formula limited to 3 symbols");
  bool has_empty = false;
  for (const auto& m : models) has_empty = has_empty || m.empty();
  if (!has_empty)
    throw ArgError("the class must contain the empty model");
  std::vector<FormulaId> disjuncts;
  std::unordered_set<FormulaId> seen;
  for (const auto& m : models) {
    if (m.empty()) continue;
    const FormulaId cf = characteristic_formula(m, phi);
    if (seen.insert(cf).second) disjuncts.push_back(cf);
  }
  if (disjuncts.empty()) return mk_bot();
  FormulaId out = disjuncts[0];
  for (std::size_t i = 1; i < disjuncts.size(); ++i) out = mk_or(out, disjuncts[i]);
  return out;
}

std::optional<FormulaId> inexpressibility_scan(FormulaId target, const EnumBudget& budget,
                                               Fragment source) {
  if (source != Fragment::TEAM_I)
    throw UnsupportedError("inexpressibility scans support the independence fragment only");
  require_fragment(target, Fragment::LD);
  for (FormulaId cand : enumerate_formulas(Fragment::TEAM_I, budget.sig, budget.max_size)) {
    if (team_vs_kripke(cand, Fragment::TEAM_I, target, Fragment::LD).result) return cand;
  }
  return std::nullopt;
}

bool transfer_check(FormulaId f) {
  require_fragment(f, Fragment::TEAM_I);
  auto syms = props_of(f);
  syms.emplace_back("p");
  const Signature sig = Signature::of(std::move(syms));
  const int pidx = sig.index_of("p");
  const SDModel two{sig, {WorldMask{1} << pidx, 0}};
  const SDModel one{sig, {0}};
  TeamEvaluator eu(two, SplitStrategy::General);
  if (!eu.on_full_team(f)) return true;
  TeamEvaluator eup(one, SplitStrategy::General);
  return eup.on_full_team(f);
}

}  // namespace pdl

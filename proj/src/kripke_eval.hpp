// Pointed satisfaction for the Kripke-style languages, truth vectors, and
// the functional-determinacy primitives.
//
// Dep / Indep / RelDep / UBox verdicts are global in the model (the same
// at every world); the evaluator computes one truth vector per subformula
// and caches it, so repeated queries against one model are cheap.

#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "fragment.hpp"
#include "model.hpp"

namespace pdl {

// Per-world truth values of one formula in one model (t^W_phi).
class TruthVector {
 public:
  TruthVector() = default;
  explicit TruthVector(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (v) words_[i >> 6] |= bit; else words_[i >> 6] &= ~bit;
  }
  bool all_true() const;
  bool constant() const;  // vacuously true when empty

  std::vector<std::uint64_t>& words() noexcept { return words_; }
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }
  void mask_tail();  // clear bits past size_

  bool operator==(const TruthVector&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class KripkeEvaluator {
 public:
  // Keeps its own copy of the model, so temporaries are fine.
  explicit KripkeEvaluator(SDModel m) : model_(std::move(m)) {}

  const SDModel& model() const noexcept { return model_; }
  const TruthVector& truth(FormulaId f);

  bool at(FormulaId f, std::size_t world);  // throws ArgError on a bad index
  bool global(FormulaId f);                 // vacuously true on the empty model

 private:
  TruthVector compute(FormulaId f);
  TruthVector constant_vector(bool v) const;
  std::uint64_t premise_tuple(std::span<const TruthVector* const> vecs, std::size_t w) const;

  SDModel model_;
  std::unordered_map<FormulaId, TruthVector> cache_;
};

// One-shot conveniences (fragment-validated).
bool eval_kripke(const SDModel& m, std::size_t world, FormulaId f, Fragment frag);
bool eval_global(const SDModel& m, FormulaId f, Fragment frag);
TruthVector truth_function(const SDModel& m, FormulaId f);

// ── functional determinacy (condition Det) ──────────────────────────────

bool det_check(std::span<const TruthVector> premises, const TruthVector& target);

// Witness table F with F(f1(w),...,fk(w)) = f(w); tuples not realised in
// the model take the fixed default 0.
struct DeterminacyWitness {
  int arity = 0;
  std::vector<bool> values;    // indexed by tuple bitmask, size 2^arity
  std::vector<bool> realized;  // same indexing

  bool apply(std::uint64_t tuple) const { return values.at(tuple); }
};

std::optional<DeterminacyWitness> det_witness(std::span<const TruthVector> premises,
                                              const TruthVector& target);

}  // namespace pdl

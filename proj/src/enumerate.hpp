// Bounded formula generation: exhaustive enumeration for the finitary
// fragments (used by the scans and the property suites) and a seeded
// sampler for the languages whose operator arguments are arbitrary
// formulas.

#pragma once

#include <random>
#include <vector>

#include "fragment.hpp"
#include "model.hpp"

namespace pdl {

// Every formula of the fragment over `sig` with tree size <= max_size,
// ordered by size and then by a fixed construction order (atoms before
// unary before binary forms), structurally deduplicated.  Supported
// fragments: PL_NNF, TEAM_D, TEAM_I, LC.  Operator-argument tuples range
// over the signature with repetition.
std::vector<FormulaId> enumerate_formulas(Fragment frag, const Signature& sig,
                                          int max_size, bool allow_negated_dep = true);

// Deterministic seeded sampler for LC/LD/LD_REL/LI/LU (and the team
// fragments).  Dep arities are drawn from 0..2, Indep tuple lengths from
// k,n in 1..2 and m in 0..1.
class FormulaSampler {
 public:
  FormulaSampler(Fragment frag, Signature sig, int max_size, std::uint64_t seed);

  FormulaId next();

 private:
  FormulaId gen(int budget);
  FormulaId gen_atom();
  std::uint64_t pick(std::uint64_t n);  // uniform-ish in [0, n)

  Fragment frag_;
  Signature sig_;
  int max_size_;
  std::mt19937_64 rng_;
};

}  // namespace pdl

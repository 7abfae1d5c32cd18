// State-description models: finite signatures plus sets of Boolean
// assignments stored as bitmasks.
//
// Worlds keep their construction order (file order for .sdm input,
// ascending bitmask order for generated models); equality and the
// Phi-equivalence test use set semantics.  Symbols outside a model's
// signature are uniformly false.

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "formula.hpp"

namespace pdl {

using WorldMask = std::uint32_t;

inline constexpr std::size_t k_max_signature = 16;      // enumerate_worlds guard
inline constexpr std::size_t k_max_enum_signature = 4;  // enumerate_models guard

class Signature {
 public:
  Signature() = default;

  // Sorts, removes duplicates, checks the size guard.
  static Signature of(std::vector<std::string> symbols);
  static Signature merged(const Signature& a, const Signature& b);

  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  int index_of(std::string_view name) const noexcept;  // -1 when absent
  bool contains(std::string_view name) const noexcept { return index_of(name) >= 0; }
  bool subset_of(const Signature& other) const noexcept;

  bool operator==(const Signature&) const = default;

 private:
  std::vector<std::string> symbols_;  // sorted, unique
};

struct SDModel {
  Signature sig;
  std::vector<WorldMask> worlds;

  // Validates width and the no-duplicate-worlds invariant.
  static SDModel make(Signature sig, std::vector<WorldMask> worlds);

  bool empty() const noexcept { return worlds.empty(); }
  std::size_t world_count() const noexcept { return worlds.size(); }
  bool world_true(std::size_t world, int sym_index) const {
    return sym_index >= 0 && ((worlds[world] >> sym_index) & 1u) != 0;
  }
  // Set comparison; requires equal signatures.
  bool same_worlds(const SDModel& other) const;
};

// W|_Phi: worlds projected to Phi, duplicates collapsed (first occurrence
// kept).  Throws ArgError when Phi is not a subset of the signature.
SDModel restrict_model(const SDModel& w, const Signature& phi);

// W1 ≡_Phi W2
bool phi_equivalent(const SDModel& w1, const SDModel& w2, const Signature& phi);

// All 2^|Phi| assignments in ascending bitmask order.  |Phi| <= 16.
std::vector<WorldMask> enumerate_worlds(const Signature& phi);

SDModel full_model(const Signature& phi);

// Model enumeration over Phi: index i in [0, 2^(2^|Phi|)) selects the
// subset of enumerate_worlds(Phi) given by i's bits, so index 0 is the
// empty model.  |Phi| <= 4.
std::uint64_t model_count(const Signature& phi);
SDModel model_from_index(const Signature& phi, std::uint64_t index);

// ── .sdm file format ────────────────────────────────────────────────────
//   sig p q r
//   w p q      # world with p,q true, r false
//   w -        # the all-false world
// '#' starts a comment; a file with `sig` and no `w` lines is the empty
// model; duplicate worlds are an error.

SDModel parse_sdm(std::string_view text);
SDModel read_sdm_file(const std::string& path);
std::string write_sdm(const SDModel& m);

}  // namespace pdl

#pragma once

#include <cstdint>
#include <random>

#include "trigonal/cover.hpp"
#include "trigonal/tower.hpp"

namespace trigonal {

/// Seedable random source. The engine is std::mt19937_64 seeded through
/// std::seed_seq from (seed, stream), and integers are drawn by rejection from
/// raw 64-bit outputs, so streams are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);
  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  int pick(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer, used to derive per-instance seeds.
std::uint64_t mix_seed(std::uint64_t x);

struct SampleConfig {
  int genus = 3;
  TowerMode mode = TowerMode::General;
  std::uint64_t seed = 1;
  int max_retries = 1000;
  /// Branch labels of the trigonal map with a transposition / a 3-cycle.
  /// A negative transposition count means "fill the budget 2g+4".
  int transpositions = -1;
  int three_cycles = 0;

  int resolved_transpositions() const { return transpositions >= 0 ? transpositions : 2 * genus + 4 - 2 * three_cycles; }
  /// Throws CoverError when the mix cannot reach ramification degree 2g+4.
  void check() const;
};

/// Rejection sampler for valid towers; deterministic in the config.
/// Trigonal labels are "h1".."hN"; flip labels follow ("p1","p2" general, "p" special).
/// Throws CoverError on an infeasible config or an exhausted retry budget.
Tower sample_tower(const SampleConfig& cfg);

/// Connected degree-4 cover of the given genus with simple branching only
/// (stratum M0), labels "h1".."h{2g+6}".
BranchedCover sample_m0_tetragonal(int genus, std::uint64_t seed, int max_retries = 1000);

}  // namespace trigonal

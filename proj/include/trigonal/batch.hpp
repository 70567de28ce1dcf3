#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "trigonal/report.hpp"
#include "trigonal/sampling.hpp"

namespace trigonal {

/// Named check sets understood by run_batch:
///   general-props, special-props, special-roundtrip, etale-props  (towers of that mode)
///   m0-roundtrip   (sampled M0 tetragonal curves of genus cfg.genus - 1)
///   full           (every applicable check for the config's mode)
const std::vector<std::string>& batch_suites();

struct InstanceResult {
  std::uint64_t seed = 0;
  int genus = 0;
  TowerMode mode = TowerMode::General;
  CheckReport report;
  /// Set when sampling or a construction threw; the instance counts as failed.
  std::string error;

  bool passed() const { return error.empty() && report.all_passed(); }
};

struct BatchReport {
  std::string suite;
  std::vector<InstanceResult> instances;  // in config order
  double elapsed_seconds = 0;             // not part of the serialized report

  bool all_passed() const;
  /// check id -> (passed, total), over all instances.
  std::map<std::string, std::pair<int, int>> aggregate() const;
};

enum class Execution { Serial, Parallel };

/// Runs the suite on every config. Parallel execution distributes instances
/// over OpenMP threads; results are stored by index so the report does not
/// depend on the thread count. Throws CoverError for an unknown suite or a
/// config whose mode the suite does not cover.
BatchReport run_batch(const std::string& suite, const std::vector<SampleConfig>& cfgs,
                      Execution execution = Execution::Parallel);

/// Checks for one instance; exposed for the serial reference and tests.
InstanceResult run_instance(const std::string& suite, const SampleConfig& cfg);

/// `count` configs of one mode, genera cycling through [genus_min, genus_max],
/// seeds derived from `base_seed` and the instance index.
std::vector<SampleConfig> make_configs(TowerMode mode, int genus_min, int genus_max, int count,
                                       std::uint64_t base_seed);

}  // namespace trigonal

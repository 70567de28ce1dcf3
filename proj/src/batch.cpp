#include "trigonal/batch.hpp"

#include <algorithm>
#include <chrono>

#include "trigonal/forward.hpp"
#include "trigonal/inverse.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace trigonal {

const std::vector<std::string>& batch_suites() {
  static const std::vector<std::string> names{"general-props", "special-props", "special-roundtrip",
                                              "etale-props",   "m0-roundtrip",  "full"};
  return names;
}

namespace {

void prefixed(CheckReport& into, const std::string& prefix, const CheckReport& from) {
  for (const auto& c : from.checks) into.add(prefix + c.id, c.passed, c.detail);
}

// Mode a suite is restricted to, if any.
std::optional<TowerMode> suite_mode(const std::string& suite) {
  if (suite == "general-props") return TowerMode::General;
  if (suite == "special-props" || suite == "special-roundtrip") return TowerMode::Special;
  if (suite == "etale-props") return TowerMode::Etale;
  return std::nullopt;
}

void check_suite(const std::string& suite, const SampleConfig& cfg) {
  const auto& names = batch_suites();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw CoverError("unknown batch suite '" + suite + "'");
  const auto mode = suite_mode(suite);
  if (mode && *mode != cfg.mode)
    throw CoverError("suite '" + suite + "' cannot run " + to_string(cfg.mode) + " configs");
}

}  // namespace

InstanceResult run_instance(const std::string& suite, const SampleConfig& cfg) {
  InstanceResult out{cfg.seed, cfg.genus, cfg.mode, {}, {}};
  try {
    if (suite == "m0-roundtrip") {
      const BranchedCover x = sample_m0_tetragonal(cfg.genus - 1, cfg.seed, cfg.max_retries);
      prefixed(out.report, "roundtrip_etale.", roundtrip_etale(x));
      return out;
    }
    const Tower t = sample_tower(cfg);
    const ForwardResult r = construct(t);
    if (suite != "special-roundtrip") prefixed(out.report, "forward.", verify_predictions(t, r));
    const bool full = suite == "full";
    if (t.mode == TowerMode::Special && (full || suite == "special-roundtrip"))
      prefixed(out.report, "roundtrip_special.", roundtrip_special(t, component_tetragonal(r)));
    if (t.mode == TowerMode::Etale && (full || suite == "etale-props"))
      prefixed(out.report, "roundtrip_etale.", roundtrip_etale(component_tetragonal(r)));
    if (t.mode == TowerMode::General && full) {
      // The tetragonal quotient lies in stratum M2 and inverts to a trigonal
      // curve with two nodes and arithmetic genus g+2.
      const InverseResult inv = invert(r.x);
      out.report.add("inverse_general.x_stratum_m2", stratum_of(r.x) == Stratum::M2);
      out.report.add("inverse_general.two_nodes", inv.nodes.size() == 2);
      out.report.add("inverse_general.arithmetic_genus", arithmetic_genus(inv.c_model) == t.g + 2);
    }
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

BatchReport run_batch(const std::string& suite, const std::vector<SampleConfig>& cfgs, Execution execution) {
  for (const auto& cfg : cfgs) check_suite(suite, cfg);
  BatchReport report;
  report.suite = suite;
  report.instances.resize(cfgs.size());
  const auto start = std::chrono::steady_clock::now();
  const auto n = static_cast<long>(cfgs.size());
  if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i)
      report.instances[static_cast<std::size_t>(i)] = run_instance(suite, cfgs[static_cast<std::size_t>(i)]);
  } else {
    for (long i = 0; i < n; ++i)
      report.instances[static_cast<std::size_t>(i)] = run_instance(suite, cfgs[static_cast<std::size_t>(i)]);
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool BatchReport::all_passed() const {
  return std::all_of(instances.begin(), instances.end(), [](const InstanceResult& r) { return r.passed(); });
}

std::map<std::string, std::pair<int, int>> BatchReport::aggregate() const {
  std::map<std::string, std::pair<int, int>> out;
  for (const auto& inst : instances)
    for (const auto& c : inst.report.checks) {
      auto& [passed, total] = out[c.id];
      passed += c.passed;
      ++total;
    }
  return out;
}

std::vector<SampleConfig> make_configs(TowerMode mode, int genus_min, int genus_max, int count,
                                       std::uint64_t base_seed) {
  if (genus_min > genus_max) throw CoverError("empty genus range");
  std::vector<SampleConfig> out;
  for (int i = 0; i < count; ++i) {
    SampleConfig cfg;
    cfg.mode = mode;
    cfg.genus = genus_min + i % (genus_max - genus_min + 1);
    cfg.seed = mix_seed(base_seed ^ mix_seed(static_cast<std::uint64_t>(i)));
    out.push_back(cfg);
  }
  return out;
}

}  // namespace trigonal

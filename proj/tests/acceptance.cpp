// Acceptance suite: one PASS/FAIL line per criterion. Every comparison is
// exact (tolerance 0); runtimes are checked against the stated budgets.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "trigonal/batch.hpp"
#include "trigonal/coefficients.hpp"
#include "trigonal/forward.hpp"
#include "trigonal/inverse.hpp"
#include "trigonal/json_io.hpp"

using namespace trigonal;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    passed = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Every listed check must be present in each instance and pass everywhere.
void require_checks(Outcome& out, const BatchReport& rep, const std::vector<std::string>& ids) {
  const auto agg = rep.aggregate();
  const int n = static_cast<int>(rep.instances.size());
  for (const auto& id : ids) {
    const auto it = agg.find(id);
    if (it == agg.end()) {
      out.require(false, "missing check " + id);
      continue;
    }
    out.require(it->second.first == n && it->second.second == n,
                id + " " + std::to_string(it->second.first) + "/" + std::to_string(n));
  }
  for (std::size_t i = 0; i < rep.instances.size(); ++i) {
    const auto& inst = rep.instances[i];
    out.require(inst.error.empty(), "instance " + std::to_string(i) + " error: " + inst.error);
  }
  out.require(rep.all_passed(), "some instance failed a check");
}

int failures = 0;

void report(int number, const std::string& title, double budget, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double elapsed = seconds_since(start);
  if (budget > 0) out.require(elapsed < budget, "runtime " + std::to_string(elapsed) + " s over budget");
  failures += !out.passed;
  std::printf("criterion %d: %s | %s | tolerance 0 (exact) | %.3f s%s%s\n", number, out.passed ? "PASS" : "FAIL",
              title.c_str(), elapsed, budget > 0 ? (" of " + std::to_string(static_cast<int>(budget)) + " s").c_str() : "",
              out.detail.empty() ? "" : (" | " + out.detail).c_str());
  std::fflush(stdout);
}

std::vector<SampleConfig> special_configs() { return make_configs(TowerMode::Special, 3, 8, 100, kSeed + 2); }

}  // namespace

int main() {
  report(1, "general towers: 200 instances, g in 3..8", 10, [] {
    Outcome out;
    const auto rep = run_batch("general-props", make_configs(TowerMode::General, 3, 8, 200, kSeed + 1));
    out.require(rep.instances.size() == 200, "instance count");
    require_checks(out, rep,
                   {"forward.y_connected", "forward.y_genus", "forward.y_total_ramification", "forward.x_genus",
                    "forward.o_connected_genus_0", "forward.o_branched_exactly_at_flips", "forward.x_two_22_fibres",
                    "forward.x_other_fibres_have_fixed_sheet", "forward.fixed_point_free_criterion",
                    "forward.prym_dimensions_equal", "forward.diagram_commutes"});
    return out;
  });

  report(2, "special towers: 100 instances, g in 3..8", 10, [] {
    Outcome out;
    const auto cfgs = special_configs();
    const auto rep = run_batch("special-props", cfgs);
    require_checks(out, rep,
                   {"forward.y_two_components", "forward.iota_swaps_components", "forward.y_component_genus",
                    "forward.y_component_ramification", "forward.y_two_nodes", "forward.iota_maps_d1_to_d2",
                    "forward.y_arithmetic_genus", "forward.x_arithmetic_genus", "forward.wirtinger"});
    int in_m1 = 0;
    const long n = static_cast<long>(cfgs.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : in_m1)
    for (long i = 0; i < n; ++i) {
      const auto& cfg = cfgs[static_cast<std::size_t>(i)];
      const auto tet = component_tetragonal(construct(sample_tower(cfg)));
      in_m1 += stratum_of(tet) == Stratum::M1 && genus(tet) == cfg.genus;
    }
    out.require(in_m1 == 100, "component tetragonal in M1 with genus g: " + std::to_string(in_m1) + "/100");
    return out;
  });

  report(3, "special round trip: same 100 towers", 10, [] {
    Outcome out;
    const auto rep = run_batch("special-roundtrip", special_configs());
    out.require(rep.instances.size() == 100, "instance count");
    require_checks(out, rep,
                   {"roundtrip_special.tetragonal_stratum_m1", "roundtrip_special.normalizations_isomorphic",
                    "roundtrip_special.tower_structure_isomorphic", "roundtrip_special.node_markers_correspond"});
    return out;
  });

  report(4, "etale round trip: 100 etale towers and 100 simply branched tetragonal curves", 10, [] {
    Outcome out;
    const auto towers = run_batch("etale-props", make_configs(TowerMode::Etale, 3, 8, 100, kSeed + 3));
    require_checks(out, towers,
                   {"forward.y_two_components", "forward.y_component_genus", "forward.iota_swaps_components",
                    "roundtrip_etale.components_isomorphic_to_input"});
    const auto curves = run_batch("m0-roundtrip", make_configs(TowerMode::Etale, 3, 8, 100, kSeed + 4));
    require_checks(out, curves,
                   {"roundtrip_etale.inverse_is_etale", "roundtrip_etale.y_two_components",
                    "roundtrip_etale.components_isomorphic_to_input"});
    return out;
  });

  report(5, "fibre dictionary profiles", 0, [] {
    Outcome out;
    const auto blocks = BlockSystem::standard();
    auto profile = [](const Permutation& p) { return p.cycle_type(); };
    using P = std::vector<int>;
    out.require(profile(sections_action(Permutation::from_cycles(6, {{1, 3}, {2, 4}}), blocks)) == P{2, 2, 1, 1, 1, 1},
                "block transposition");
    out.require(profile(sections_action(Permutation::from_cycles(6, {{1, 3, 5}, {2, 4, 6}}), blocks)) == P{3, 3, 1, 1},
                "block 3-cycle");
    const BranchedCover flip(6, {{"a", Permutation::from_cycles(6, {{1, 2}}), {}},
                                 {"b", Permutation::from_cycles(6, {{1, 2}}), {}},
                                 {"c", Permutation::from_cycles(6, {{1, 3}, {2, 4}}), {}},
                                 {"d", Permutation::from_cycles(6, {{1, 3}, {2, 4}}), {}},
                                 {"e", Permutation::from_cycles(6, {{3, 5}, {4, 6}}), {}},
                                 {"f", Permutation::from_cycles(6, {{3, 5}, {4, 6}}), {}}});
    const auto v = validate_tower(flip, blocks);
    out.require(v.ok(), "weight-1 flip tower is valid");
    if (v.ok()) {
      const auto r = construct(*v.tower);
      out.require(profile(r.y.monodromy_at("a")) == P{2, 2, 2, 2}, "weight-1 flip on Y");
      out.require(profile(r.x.monodromy_at("a")) == P{2, 2}, "weight-1 flip on X");
    }
    const auto t4 = invert(BranchedCover(4, {{"a", Permutation::from_cycles(4, {{1, 2}, {3, 4}}), {}},
                                             {"b", Permutation::from_cycles(4, {{1, 3}}), {}},
                                             {"c", Permutation::from_cycles(4, {{1, 3}}), {}},
                                             {"d", Permutation::from_cycles(4, {{1, 2}, {3, 4}}), {}}}));
    out.require(t4.nodes.size() == 2 && t4.nodes[0].fibre_type == 4 && t4.nodes[0].ramified_branch == -1 &&
                    t4.nodes[0].c_node.first.ramification_index() == 1 &&
                    t4.nodes[0].c_node.second.ramification_index() == 1 &&
                    t4.nodes[0].c_tilde_node.first.ramification_index() == 2 &&
                    t4.nodes[0].c_tilde_node.second.ramification_index() == 2,
                "(2,2) fibre node rule");
    const auto four = Permutation::from_cycles(4, {{1, 2, 3, 4}});
    const auto t5 = invert(BranchedCover(4, {{"a", four, {}}, {"b", four.inverse(), {}}}));
    out.require(t5.nodes.size() == 2 && t5.nodes[0].fibre_type == 5 && t5.nodes[0].ramified_branch == 0 &&
                    t5.nodes[0].c_node.first.ramification_index() == 2 &&
                    t5.nodes[0].c_node.second.ramification_index() == 1 &&
                    t5.nodes[0].c_tilde_node.first.ramification_index() == 4 &&
                    t5.nodes[0].c_tilde_node.second.ramification_index() == 2,
                "(4) fibre node rule");
    return out;
  });

  report(6, "coefficient identities for g in 3..200", 1, [] {
    Outcome out;
    std::vector<CoefficientChain> chains;
    int first_variant_gap = 0;
    for (int g = 3; g <= 200; ++g) {
      out.require(reduced_identity(g).sum == 1, "reduced identity at g=" + std::to_string(g));
      chains.push_back(coefficient_chain(g));
      out.require(chains.back().scaled_sum == 1, "chain at g=" + std::to_string(g));
      out.require(chains.back().coefficient == ExactRational(8) / ExactRational(factorial(g - 1)),
                  "coefficient at g=" + std::to_string(g));
      if (!first_variant_gap && chains.back().variant_with_2k != 1) first_variant_gap = g;
    }
    const auto path = std::filesystem::current_path() / "coefficients_report.json";
    io::write_file(path.string(), io::coefficients_to_json(chains));
    std::printf("  variant with 2^k factor: equals 1 at g=3, first differs at g=%d (value %s); report %s\n",
                first_variant_gap, to_string(evaluate_chain(first_variant_gap).variant_with_2k).c_str(),
                path.c_str());
    return out;
  });

  report(7, "fixture round trip and thread-count independent reports", 0, [] {
    Outcome out;
    int files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(FIXTURE_DIR)) {
      if (entry.path().extension() != ".json") continue;
      ++files;
      std::ifstream in(entry.path());
      std::ostringstream buf;
      buf << in.rdbuf();
      const auto j = io::parse(buf.str());
      const auto cover = io::cover_from_json(j);
      const auto again = j.contains("blocks") ? io::tower_input_to_json(cover, io::blocks_from_json(j))
                                              : io::cover_to_json(cover);
      out.require(io::dump(again) == buf.str(), entry.path().filename().string() + " changed");
    }
    out.require(files >= 7, "fixtures found: " + std::to_string(files));

    for (auto [suite, mode] : {std::pair{"full", TowerMode::General}, std::pair{"full", TowerMode::Special},
                               std::pair{"full", TowerMode::Etale}, std::pair{"m0-roundtrip", TowerMode::Etale}}) {
      const auto cfgs = make_configs(mode, 3, 8, 24, kSeed + 5);
      const std::string serial = io::dump(io::batch_to_json(run_batch(suite, cfgs, Execution::Serial)));
      for (int threads : {1, 2, 4, 8}) {
        omp_set_num_threads(threads);
        const std::string parallel = io::dump(io::batch_to_json(run_batch(suite, cfgs, Execution::Parallel)));
        out.require(parallel == serial, std::string(suite) + "/" + to_string(mode) + " differs at " +
                                            std::to_string(threads) + " threads");
      }
    }
    omp_set_num_threads(omp_get_num_procs());
    return out;
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}

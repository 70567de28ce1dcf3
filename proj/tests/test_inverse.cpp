#include <doctest.h>

#include "oracles.hpp"
#include "trigonal/forward.hpp"
#include "trigonal/inverse.hpp"
#include "trigonal/sampling.hpp"

using namespace trigonal;
using oracle::cyc;

namespace {

Permutation random_perm4(Rng& rng) {
  std::vector<int> v{0, 1, 2, 3};
  for (int i = 3; i > 0; --i) std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(rng.pick(i + 1))]);
  return Permutation::from_images(v);
}

Tower sampled(TowerMode mode, int g, std::uint64_t seed) {
  SampleConfig cfg;
  cfg.mode = mode;
  cfg.genus = g;
  cfg.seed = seed;
  return sample_tower(cfg);
}

std::set<CoverPoint> f_points_at(const InverseResult& inv, const std::string& label) {
  std::set<CoverPoint> out;
  for (const auto& p : f_ramification_points(inv.c_tilde, InverseResult::blocks()))
    if (p.label == label) out.insert(p);
  return out;
}

}  // namespace

TEST_CASE("pair and partition indexing") {
  const auto pairs = oracle::unordered_pairs(4);
  for (int i = 0; i < 6; ++i) {
    std::set<int> complement{0, 1, 2, 3};
    for (int s : pairs[static_cast<std::size_t>(i)]) complement.erase(s);
    CHECK(pairs[static_cast<std::size_t>(pair_complement(i))] == complement);
    CHECK(pair_partition(i) == pair_partition(pair_complement(i)));
  }
  CHECK(InverseResult::blocks().pairs() == std::array<std::array<int, 2>, 3>{{{0, 5}, {1, 4}, {2, 3}}});
}

TEST_CASE("pairs action examples") {
  const auto t = pairs_action(cyc(4, {{1, 2}}));
  CHECK(t.cycle_type() == std::vector<int>{2, 2, 1, 1});
  CHECK(t(0) == 0);
  CHECK(t(5) == 5);
  CHECK(t(1) == 3);  // {1,3} <-> {2,3}
  CHECK(t(2) == 4);  // {1,4} <-> {2,4}
  const auto d = pairs_action(cyc(4, {{1, 2}, {3, 4}}));
  CHECK(d.cycle_type() == std::vector<int>{2, 2, 1, 1});
  CHECK(d(0) == 0);
  CHECK(d(5) == 5);
  CHECK(pairs_action(cyc(4, {{1, 2, 3, 4}})).cycle_type() == std::vector<int>{4, 2});
  CHECK_THROWS_AS(pairs_action(cyc(5, {{1, 2}})), CoverError);
}

TEST_CASE("partition action examples") {
  CHECK(partition_action(cyc(4, {{1, 2}, {3, 4}})).is_identity());
  CHECK(partition_action(cyc(4, {{1, 2, 3}})).cycle_type() == std::vector<int>{3});
  const auto q = partition_action(cyc(4, {{1, 2, 3, 4}}));
  CHECK(q.cycle_type() == std::vector<int>{2, 1});
  CHECK(q(1) == 1);  // {13|24}
}

TEST_CASE("pair and partition actions agree with set enumeration on all of S4") {
  const auto pairs = oracle::unordered_pairs(4);
  std::vector<int> v{0, 1, 2, 3};
  int count = 0;
  do {
    const auto s = Permutation::from_images(v);
    CHECK(pairs_action(s) == oracle::set_action(s, pairs));
    CHECK(partition_action(s) == oracle::partition_action(s));
    ++count;
  } while (std::next_permutation(v.begin(), v.end()));
  CHECK(count == 24);
}

TEST_CASE("induced actions are homomorphisms commuting with the complement") {
  Rng rng(31);
  const auto kappa = Permutation::from_images({5, 4, 3, 2, 1, 0});
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_perm4(rng), b = random_perm4(rng);
    CHECK(pairs_action(a * b) == pairs_action(a) * pairs_action(b));
    CHECK(partition_action(a * b) == partition_action(a) * partition_action(b));
    CHECK(pairs_action(a) * kappa == kappa * pairs_action(a));
  }
}

TEST_CASE("fibre types by cycle type") {
  CHECK(classify_fiber(Permutation::identity(4)) == 1);
  CHECK(classify_fiber(cyc(4, {{2, 4}})) == 2);
  CHECK(classify_fiber(cyc(4, {{1, 3, 4}})) == 3);
  CHECK(classify_fiber(cyc(4, {{1, 3}, {2, 4}})) == 4);
  CHECK(classify_fiber(cyc(4, {{1, 4, 2, 3}})) == 5);
  CHECK_THROWS_AS(classify_fiber(cyc(3, {{1, 2}})), CoverError);
}

TEST_CASE("strata of the fixtures") {
  CHECK(stratum_of(oracle::load_cover("tetragonal_m0_g2.json")) == Stratum::M0);
  CHECK(stratum_of(oracle::load_cover("tetragonal_m1_g2.json")) == Stratum::M1);
  CHECK(genus(oracle::load_cover("tetragonal_m1_g2.json")) == 2);
  const auto x = construct(oracle::load_tower("tower_general_g3.json")).x;
  CHECK(stratum_of(x) == Stratum::M2);
  const BranchedCover four(4, {{"a", cyc(4, {{1, 2, 3, 4}}), {}}, {"b", cyc(4, {{1, 2, 3, 4}}).inverse(), {}}});
  CHECK(stratum_of(four) == Stratum::Other);
  const BranchedCover split(4, {{"a", cyc(4, {{1, 2}}), {}}, {"b", cyc(4, {{1, 2}}), {}}});
  CHECK_THROWS_AS(TetragonalCover::from(split), CoverError);
  CHECK(TetragonalCover::from(four).stratum == Stratum::Other);
}

TEST_CASE("inverting a simply branched curve gives a smooth etale tower") {
  const auto x = oracle::load_cover("tetragonal_m0_g2.json");
  const auto inv = invert(x);
  CHECK(inv.nodes.empty());
  CHECK(inv.c.degree() == 3);
  CHECK(inv.c_tilde.degree() == 6);
  CHECK(inv.kappa == Permutation::from_images({5, 4, 3, 2, 1, 0}));
  CHECK(f_ramification_points(inv.c_tilde, InverseResult::blocks()).empty());
  const auto t = make_tower(inv.c_tilde, InverseResult::blocks());
  CHECK(t.mode == TowerMode::Etale);
  CHECK(t.g == 3);
  for (const auto& f : inv.fibres) CHECK(f.type == 2);
}

TEST_CASE("a (2,2) fibre gives one node on each curve") {
  const auto x = oracle::load_cover("tetragonal_m1_g2.json");
  const auto inv = invert(x);
  REQUIRE(inv.nodes.size() == 1);
  const auto& n = inv.nodes[0];
  CHECK(n.label == "t1");
  CHECK(n.fibre_type == 4);
  CHECK(n.ramified_branch == -1);
  CHECK(inv.c_model.nodes.size() == 1);
  CHECK(inv.c_tilde_model.nodes.size() == 1);
  CHECK(f_points_at(inv, "t1") == std::set<CoverPoint>{n.c_node.first, n.c_node.second});
  CHECK(n.c_tilde_node.first.ramification_index() == 2);
  CHECK(n.c_tilde_node.second.ramification_index() == 2);
  CHECK(arithmetic_genus(inv.c_model) == genus(inv.c) + 1);
}

TEST_CASE("a (4) fibre gives a node with one ramified branch") {
  const BranchedCover x(4, {{"a", cyc(4, {{1, 2, 3, 4}}), {}},
                            {"b", cyc(4, {{1, 2}}), {}},
                            {"c", (cyc(4, {{1, 2, 3, 4}}) * cyc(4, {{1, 2}})).inverse(), {}}});
  const auto inv = invert(x);
  const auto it = std::find_if(inv.nodes.begin(), inv.nodes.end(), [](const AdmissibleNode& n) { return n.label == "a"; });
  REQUIRE(it != inv.nodes.end());
  CHECK(it->fibre_type == 5);
  CHECK(it->ramified_branch == 0);
  CHECK(it->c_node.first.ramification_index() == 2);
  CHECK(it->c_node.second.ramification_index() == 1);
  CHECK(it->c_tilde_node.first.ramification_index() == 4);
  CHECK(it->c_tilde_node.second.ramification_index() == 2);
  CHECK(f_points_at(inv, "a") == std::set<CoverPoint>{it->c_node.first, it->c_node.second});
}

TEST_CASE("only node points violate the unramified criterion") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto r = construct(sampled(TowerMode::General, 3 + static_cast<int>(seed % 3), seed));
    const auto inv = invert(r.x);
    CHECK(inv.nodes.size() == 2);
    for (const auto& f : inv.fibres) {
      const auto pts = f_points_at(inv, f.label);
      if (f.type <= 3) {
        CHECK(pts.empty());
      } else {
        const auto n = std::find_if(inv.nodes.begin(), inv.nodes.end(),
                                    [&](const AdmissibleNode& a) { return a.label == f.label; });
        REQUIRE(n != inv.nodes.end());
        CHECK(pts == std::set<CoverPoint>{n->c_node.first, n->c_node.second});
      }
    }
  }
}

TEST_CASE("glued special tower") {
  const auto t = oracle::load_tower("tower_special_g3.json");
  const auto glued = glue_special(t);
  CHECK(arithmetic_genus(glued.c) == 4);
  CHECK(arithmetic_genus(glued.c_tilde) == 7);
  CHECK(glued.c.nodes.size() == 1);
  CHECK_THROWS_AS(glue_special(oracle::load_tower("tower_general_g3.json")), CoverError);
}

TEST_CASE("special round trip") {
  const auto t = oracle::load_tower("tower_special_g3.json");
  const auto rep = roundtrip_special(t);
  for (const auto& f : rep.failures()) INFO(f);
  CHECK(rep.all_passed());
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto s = sampled(TowerMode::Special, 3 + static_cast<int>(seed % 3), seed);
    CHECK(roundtrip_special(s).all_passed());
  }
}

TEST_CASE("special round trip rejects a relabeled branch point") {
  const auto t = oracle::load_tower("tower_special_g3.json");
  const auto tet = component_tetragonal(construct(t));
  auto pts = tet.branch_points();
  pts.back().label += "_moved";
  const auto rep = roundtrip_special(t, BranchedCover(4, pts));
  CHECK(!rep.all_passed());
  const auto fails = rep.failures();
  CHECK(std::any_of(fails.begin(), fails.end(),
                    [](const std::string& f) { return f.find("label mismatch") != std::string::npos; }));
}

TEST_CASE("special round trip rejects a tetragonal curve from another tower") {
  const auto t = oracle::load_tower("tower_special_g3.json");
  const auto other = sampled(TowerMode::Special, 3, 99);
  const auto rep = roundtrip_special(t, component_tetragonal(construct(other)));
  CHECK(!rep.all_passed());
}

TEST_CASE("etale round trip") {
  const auto rep = roundtrip_etale(oracle::load_cover("tetragonal_m0_g2.json"));
  for (const auto& f : rep.failures()) INFO(f);
  CHECK(rep.all_passed());
  for (std::uint64_t seed = 1; seed <= 10; ++seed)
    CHECK(roundtrip_etale(sample_m0_tetragonal(2 + static_cast<int>(seed % 3), seed)).all_passed());
  CHECK_THROWS_AS(roundtrip_etale(construct(oracle::load_tower("tower_general_g3.json")).x), CoverError);
  CHECK_THROWS_AS(roundtrip_etale(oracle::load_cover("tetragonal_m1_g2.json")), CoverError);
}

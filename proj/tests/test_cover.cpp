#include <doctest.h>

#include "oracles.hpp"
#include "trigonal/cover.hpp"
#include "trigonal/sampling.hpp"

using namespace trigonal;
using oracle::cyc;

namespace {

BranchedCover hyperelliptic(int g) {
  std::vector<BranchPoint> pts;
  for (int i = 1; i <= 2 * g + 2; ++i) pts.push_back({"b" + std::to_string(i), cyc(2, {{1, 2}}), std::nullopt});
  return BranchedCover(2, pts);
}

Permutation random_perm(Rng& rng, int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(rng.pick(i + 1))]);
  return Permutation::from_images(v);
}

}  // namespace

TEST_CASE("construction enforces the product-one relation and distinct labels") {
  CHECK_NOTHROW(BranchedCover(2, {{"a", cyc(2, {{1, 2}}), {}}, {"b", cyc(2, {{1, 2}}), {}}}));
  CHECK_THROWS_AS(BranchedCover(3, {{"a", cyc(3, {{1, 2}}), {}}, {"b", cyc(3, {{2, 3}}), {}}}), CoverError);
  CHECK_THROWS_AS(BranchedCover(2, {{"a", cyc(2, {{1, 2}}), {}}, {"a", cyc(2, {{1, 2}}), {}}}), CoverError);
  CHECK_THROWS_AS(BranchedCover(2, {{"a", cyc(3, {{1, 2}}), {}}, {"b", cyc(3, {{1, 2}}), {}}}), CoverError);
  CHECK_THROWS_AS(BranchedCover(2, {{"a", Permutation::identity(2), {}}}), CoverError);
  const auto dropped = BranchedCover::dropping_identities(
      2, {{"a", cyc(2, {{1, 2}}), {}}, {"z", Permutation::identity(2), {}}, {"b", cyc(2, {{1, 2}}), {}}});
  CHECK(dropped.labels() == std::vector<std::string>{"a", "b"});
  CHECK(dropped.monodromy_at("z").is_identity());
  CHECK_THROWS_AS(dropped.at("z"), CoverError);
}

TEST_CASE("genus examples") {
  CHECK(genus(hyperelliptic(0)) == 0);
  for (int g = 0; g <= 6; ++g) CHECK(genus(hyperelliptic(g)) == g);
  CHECK(genus(oracle::load_cover("cover_trigonal_positions.json")) == 0);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SampleConfig cfg;
    cfg.genus = 3 + static_cast<int>(seed % 4);
    cfg.seed = seed;
    const Tower t = sample_tower(cfg);
    CHECK(t.h_cover.total_ramification() == 2 * cfg.genus + 4);
    CHECK(genus(t.h_cover) == cfg.genus);
  }
  const auto split = disjoint_union(hyperelliptic(1), hyperelliptic(1));
  CHECK_THROWS_AS(genus(split), CoverError);
}

TEST_CASE("genus agrees with the Euler characteristic count") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto x = sample_m0_tetragonal(1 + static_cast<int>(seed % 5), seed);
    CHECK(genus(x) == oracle::genus_by_euler(x));
    CHECK(genus(x) == 1 + static_cast<int>(seed % 5));
  }
}

TEST_CASE("ramification profiles") {
  const BranchedCover c(4, {{"a", cyc(4, {{1, 2}, {3, 4}}), {}},
                            {"b", cyc(4, {{1, 2, 3, 4}}), {}},
                            {"c", cyc(4, {{1, 2, 3, 4}}).inverse() * cyc(4, {{1, 2}, {3, 4}}), {}}});
  CHECK(ramification_profile(c, "a") == std::vector<int>{2, 2});
  CHECK(ramification_profile(c, "b") == std::vector<int>{4});
  CHECK_THROWS_AS(ramification_profile(c, "zz"), CoverError);
}

TEST_CASE("components") {
  const auto h = hyperelliptic(2);
  const auto single = components(h);
  REQUIRE(single.size() == 1);
  CHECK(single[0].cover == h);

  const BranchedCover a(2, {{"x", cyc(2, {{1, 2}}), {}}, {"y", cyc(2, {{1, 2}}), {}}});
  const BranchedCover b(2, {{"y", cyc(2, {{1, 2}}), {}}, {"z", cyc(2, {{1, 2}}), {}}});
  const auto u = disjoint_union(a, b);
  CHECK(u.degree() == 4);
  CHECK(u.labels() == std::vector<std::string>{"x", "y", "z"});
  const auto parts = components(u);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].cover == a);
  CHECK(parts[1].cover == b);
  CHECK(parts[1].sheets == std::vector<int>{2, 3});

  const BranchedCover rev(2, {{"y", cyc(2, {{1, 2}}), {}}, {"x", cyc(2, {{1, 2}}), {}}});
  CHECK_THROWS_AS(disjoint_union(a, rev), CoverError);
}

TEST_CASE("disjoint union then components recovers the parts") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const auto a = sample_m0_tetragonal(2, seed);
    const auto b = sample_m0_tetragonal(2, seed + 100);
    const auto parts = components(disjoint_union(a, b));
    REQUIRE(parts.size() == 2);
    CHECK(are_isomorphic(parts[0].cover, a).has_value());
    CHECK(are_isomorphic(parts[1].cover, b).has_value());
  }
}

TEST_CASE("isomorphism examples") {
  const auto x = oracle::load_cover("tetragonal_m0_g2.json");
  const auto self = are_isomorphic(x, x);
  REQUIRE(self);
  CHECK(self->is_identity());

  const auto rho = cyc(4, {{1, 2}});
  std::vector<BranchPoint> moved;
  for (const auto& bp : x.branch_points()) moved.push_back({bp.label, conjugate(bp.monodromy, rho), {}});
  const BranchedCover y(4, moved);
  const auto found = are_isomorphic(x, y);
  REQUIRE(found);
  for (const auto& bp : x.branch_points()) CHECK(conjugate(bp.monodromy, *found) == y.at(bp.label).monodromy);

  const BranchedCover s(3, {{"a", cyc(3, {{1, 2}}), {}}, {"b", cyc(3, {{1, 2}}), {}}});
  const BranchedCover t(3, {{"a", cyc(3, {{1, 2, 3}}), {}}, {"b", cyc(3, {{1, 3, 2}}), {}}});
  CHECK(!are_isomorphic(s, t));

  const BranchedCover relabeled(3, {{"a", cyc(3, {{1, 2}}), {}}, {"c", cyc(3, {{1, 2}}), {}}});
  CHECK_THROWS_AS(are_isomorphic(s, relabeled), CoverError);
}

TEST_CASE("isomorphism is an equivalence invariant under conjugation") {
  Rng rng(5);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto x = sample_m0_tetragonal(1 + static_cast<int>(seed % 3), seed);
    const auto rho = random_perm(rng, 4);
    std::vector<BranchPoint> moved;
    for (const auto& bp : x.branch_points()) moved.push_back({bp.label, conjugate(bp.monodromy, rho), {}});
    const BranchedCover y(4, moved);
    const auto fwd = are_isomorphic(x, y);
    const auto back = are_isomorphic(y, x);
    REQUIRE(fwd);
    REQUIRE(back);
    for (const auto& bp : y.branch_points()) CHECK(conjugate(bp.monodromy, *back) == x.at(bp.label).monodromy);
    // simple branching generates S4, whose centralizer is trivial
    CHECK(all_isomorphisms(x, y) == std::vector<Permutation>{rho});
  }
}

TEST_CASE("points and nodal models") {
  const auto h = hyperelliptic(2);
  const auto p = point_at(h, "b1", 1);
  CHECK(p.cycle == std::vector<int>{0, 1});
  CHECK(p.ramification_index() == 2);
  CHECK(cycle_index(h, p) == 0);
  CHECK(point_from_index(h, "b1", 0) == p);
  CHECK_THROWS_AS(point_from_index(h, "b1", 1), CoverError);
  const auto q = point_at(h, "unbranched", 1);
  CHECK(q.cycle == std::vector<int>{1});

  CHECK(arithmetic_genus({h, {}}) == 2);
  CHECK(arithmetic_genus({h, {{point_at(h, "u", 0), point_at(h, "u", 1)}}}) == 3);

  for (int g = 1; g <= 4; ++g) {
    const auto a = hyperelliptic(g);
    const auto u = disjoint_union(a, a);
    const NodalCoverModel two{u, {{point_at(u, "q1", 0), point_at(u, "q1", 2)},
                                   {point_at(u, "q2", 1), point_at(u, "q2", 3)}}};
    CHECK(arithmetic_genus(two) == 2 * g + 1);
  }

  const NodalCoverModel bad{h, {{point_at(h, "b1", 0), point_at(h, "b2", 0)}}};
  CHECK(!bad.problems().empty());
  CHECK_THROWS_AS(arithmetic_genus(bad), CoverError);
  const NodalCoverModel loop{h, {{point_at(h, "u", 0), point_at(h, "u", 0)}}};
  CHECK(!loop.problems().empty());
}

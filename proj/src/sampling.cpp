#include "trigonal/sampling.hpp"

#include <algorithm>
#include <limits>

namespace trigonal {

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw CoverError("empty range");
  const std::uint64_t threshold = (std::numeric_limits<std::uint64_t>::max() - n + 1) % n;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % n;
  }
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void SampleConfig::check() const {
  if (genus < 3) throw CoverError("sampling needs genus >= 3");
  if (max_retries <= 0) throw CoverError("max_retries must be positive");
  if (three_cycles < 0) throw CoverError("negative 3-cycle count");
  const int t = resolved_transpositions();
  if (t < 0 || t + 2 * three_cycles != 2 * genus + 4)
    throw CoverError("h-profile mix (" + std::to_string(t) + " transpositions, " + std::to_string(three_cycles) +
                     " 3-cycles) does not have ramification degree 2g+4 = " + std::to_string(2 * genus + 4));
  if (t + three_cycles < 2) throw CoverError("h-profile mix needs at least two branch labels");
}

namespace {

Permutation random_of_type(Rng& rng, int degree, int cycle_length) {
  std::vector<int> sheets(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) sheets[static_cast<std::size_t>(i)] = i + 1;
  for (int i = degree - 1; i > 0; --i) std::swap(sheets[static_cast<std::size_t>(i)], sheets[static_cast<std::size_t>(rng.pick(i + 1))]);
  sheets.resize(static_cast<std::size_t>(cycle_length));
  return Permutation::from_cycles(degree, {sheets});
}

// Lift of a block permutation tau: block b goes to block tau(b), with the
// sheet choice toggled when twist[b] is set.
Permutation lift(const Permutation& tau, const std::array<int, 3>& twist, const BlockSystem& blocks) {
  std::vector<int> images(6);
  for (int b = 0; b < 3; ++b)
    for (int c = 0; c < 2; ++c)
      images[static_cast<std::size_t>(blocks.sheet(b, c))] = blocks.sheet(tau(b), c ^ twist[static_cast<std::size_t>(b)]);
  return Permutation::from_images(std::move(images));
}

// Random lift that keeps the double cover unramified over every cycle of tau:
// the twists along each cycle sum to zero mod 2.
Permutation unramified_lift(Rng& rng, const Permutation& tau, const BlockSystem& blocks) {
  std::array<int, 3> twist{rng.pick(2), rng.pick(2), rng.pick(2)};
  for (const auto& cycle : tau.cycles()) {
    int parity = 0;
    for (int b : cycle) parity ^= twist[static_cast<std::size_t>(b)];
    twist[static_cast<std::size_t>(cycle.front())] ^= parity;
  }
  return lift(tau, twist, blocks);
}

std::optional<std::vector<Permutation>> draw_trigonal_tuple(Rng& rng, const SampleConfig& cfg) {
  std::vector<int> lengths(static_cast<std::size_t>(cfg.resolved_transpositions()), 2);
  lengths.insert(lengths.end(), static_cast<std::size_t>(cfg.three_cycles), 3);
  for (std::size_t i = lengths.size(); i > 1; --i) std::swap(lengths[i - 1], lengths[static_cast<std::size_t>(rng.pick(static_cast<int>(i)))]);

  std::vector<Permutation> tuple;
  Permutation product = Permutation::identity(3);
  for (std::size_t i = 0; i + 1 < lengths.size(); ++i) {
    tuple.push_back(random_of_type(rng, 3, lengths[i]));
    product = product * tuple.back();
  }
  Permutation last = product.inverse();
  const std::vector<int> want = lengths.back() == 2 ? std::vector<int>{2, 1} : std::vector<int>{3};
  if (last.cycle_type() != want) return std::nullopt;
  tuple.push_back(std::move(last));
  if (!is_transitive(3, tuple)) return std::nullopt;
  return tuple;
}

}  // namespace

Tower sample_tower(const SampleConfig& cfg) {
  cfg.check();
  Rng rng(cfg.seed);
  const BlockSystem blocks = BlockSystem::standard();
  for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
    const auto h = draw_trigonal_tuple(rng, cfg);
    if (!h) continue;

    std::vector<BranchPoint> flips;
    auto flip = [&](std::initializer_list<int> which) {
      std::array<int, 3> twist{0, 0, 0};
      for (int b : which) twist[static_cast<std::size_t>(b)] = 1;
      return lift(Permutation::identity(3), twist, blocks);
    };
    if (cfg.mode == TowerMode::General) {
      flips.push_back({"p1", flip({rng.pick(3)}), std::nullopt});
      flips.push_back({"p2", flip({rng.pick(3)}), std::nullopt});
    } else if (cfg.mode == TowerMode::Special) {
      const int keep = rng.pick(3);
      flips.push_back({"p", flip({(keep + 1) % 3, (keep + 2) % 3}), std::nullopt});
    }

    std::vector<BranchPoint> points;
    Permutation prefix = Permutation::identity(6);
    for (std::size_t i = 0; i + 1 < h->size(); ++i) {
      points.push_back({"h" + std::to_string(i + 1), unramified_lift(rng, (*h)[i], blocks), std::nullopt});
      prefix = prefix * points.back().monodromy;
    }
    Permutation flip_product = Permutation::identity(6);
    for (const auto& f : flips) flip_product = flip_product * f.monodromy;
    // Product-one fix-up on the last trigonal label.
    points.push_back({"h" + std::to_string(h->size()), prefix.inverse() * flip_product.inverse(), std::nullopt});
    points.insert(points.end(), flips.begin(), flips.end());

    auto v = validate_tower(BranchedCover(6, std::move(points)), blocks);
    if (v.ok() && v.tower->mode == cfg.mode && v.tower->g == cfg.genus) return std::move(*v.tower);
  }
  throw CoverError("tower sampler exhausted " + std::to_string(cfg.max_retries) + " retries (genus " +
                   std::to_string(cfg.genus) + ", mode " + to_string(cfg.mode) + ")");
}

BranchedCover sample_m0_tetragonal(int genus, std::uint64_t seed, int max_retries) {
  if (genus < 0) throw CoverError("negative genus");
  Rng rng(seed, 1);
  const int labels = 2 * genus + 6;
  std::vector<Permutation> transpositions;
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b) transpositions.push_back(Permutation::from_cycles(4, {{a, b}}));

  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<Permutation> tuple;
    Permutation product = Permutation::identity(4);
    for (int i = 0; i + 2 < labels; ++i) {
      tuple.push_back(transpositions[static_cast<std::size_t>(rng.pick(6))]);
      product = product * tuple.back();
    }
    // Close the tuple with two transpositions whose product is product^-1.
    const Permutation target = product.inverse();
    std::vector<std::pair<int, int>> closers;
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        if (transpositions[static_cast<std::size_t>(a)] * transpositions[static_cast<std::size_t>(b)] == target)
          closers.emplace_back(a, b);
    if (closers.empty()) continue;
    const auto [a, b] = closers[static_cast<std::size_t>(rng.pick(static_cast<int>(closers.size())))];
    tuple.push_back(transpositions[static_cast<std::size_t>(a)]);
    tuple.push_back(transpositions[static_cast<std::size_t>(b)]);
    if (!is_transitive(4, tuple)) continue;
    std::vector<BranchPoint> points;
    for (std::size_t i = 0; i < tuple.size(); ++i) points.push_back({"h" + std::to_string(i + 1), tuple[i], std::nullopt});
    return BranchedCover(4, std::move(points));
  }
  throw CoverError("tetragonal sampler exhausted " + std::to_string(max_retries) + " retries");
}

}  // namespace trigonal

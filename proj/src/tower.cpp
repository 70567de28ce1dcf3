#include "trigonal/tower.hpp"

#include <algorithm>
#include <map>

namespace trigonal {

BlockSystem::BlockSystem(std::array<std::array<int, 2>, 3> pairs) : pairs_(pairs) {
  for (auto& p : pairs_)
    if (p[0] > p[1]) std::swap(p[0], p[1]);
  std::sort(pairs_.begin(), pairs_.end());
  block_.fill(-1);
  for (int b = 0; b < 3; ++b)
    for (int c = 0; c < 2; ++c) {
      const int s = pairs_[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
      if (s < 0 || s > 5) throw CoverError("block sheet out of range 1..6");
      if (block_[static_cast<std::size_t>(s)] >= 0) throw CoverError("blocks are not disjoint");
      block_[static_cast<std::size_t>(s)] = b;
      choice_[static_cast<std::size_t>(s)] = c;
    }
}

bool BlockSystem::preserved_by(const Permutation& p) const {
  if (p.degree() != 6) return false;
  for (const auto& pair : pairs_)
    if (block_of(p(pair[0])) != block_of(p(pair[1]))) return false;
  return true;
}

Permutation block_action(const Permutation& p, const BlockSystem& blocks) {
  if (!blocks.preserved_by(p)) throw CoverError("permutation " + p.to_string() + " does not preserve the blocks");
  std::vector<int> images(3);
  for (int b = 0; b < 3; ++b) images[static_cast<std::size_t>(b)] = blocks.block_of(p(blocks.sheet(b, 0)));
  return Permutation::from_images(std::move(images));
}

int flip_weight(const Permutation& p, const BlockSystem& blocks) {
  int weight = 0;
  for (int b = 0; b < 3; ++b)
    if (p(blocks.sheet(b, 0)) == blocks.sheet(b, 1)) ++weight;
  return weight;
}

std::vector<CoverPoint> f_ramification_points(const BranchedCover& cover, const BlockSystem& blocks) {
  std::vector<CoverPoint> out;
  for (const auto& bp : cover.branch_points()) {
    const Permutation tau = block_action(bp.monodromy, blocks);
    for (const auto& cycle : tau.cycles()) {
      const int start = blocks.sheet(cycle.front(), 0);
      int length = 0;
      int x = start;
      do {
        x = bp.monodromy(x);
        ++length;
      } while (x != start);
      if (length == 2 * static_cast<int>(cycle.size())) out.push_back({bp.label, cycle});
    }
  }
  return out;
}

std::string to_string(TowerMode mode) {
  switch (mode) {
    case TowerMode::Etale: return "etale";
    case TowerMode::General: return "general";
    case TowerMode::Special: return "special";
  }
  return "?";
}

TowerMode tower_mode_from_string(const std::string& s) {
  if (s == "etale") return TowerMode::Etale;
  if (s == "general") return TowerMode::General;
  if (s == "special") return TowerMode::Special;
  throw CoverError("unknown tower mode '" + s + "' (expected etale, general or special)");
}

TowerValidation validate_tower(const BranchedCover& cover, const BlockSystem& blocks) {
  TowerValidation result;
  auto fail = [&](std::string code, std::string label, std::string message) {
    result.errors.push_back({std::move(code), std::move(label), std::move(message)});
  };

  if (cover.degree() != 6) {
    fail("degree", "", "tower cover must have degree 6, got " + std::to_string(cover.degree()));
    return result;
  }
  bool preserved = true;
  for (const auto& bp : cover.branch_points()) {
    if (!blocks.preserved_by(bp.monodromy)) {
      preserved = false;
      fail("block_not_preserved", bp.label, "monodromy " + bp.monodromy.to_string() + " breaks the block system");
    }
  }
  if (!preserved) return result;

  std::vector<BranchPoint> quotient;
  for (const auto& bp : cover.branch_points())
    quotient.push_back({bp.label, block_action(bp.monodromy, blocks), bp.position});
  BranchedCover h_cover = BranchedCover::dropping_identities(3, std::move(quotient));

  if (!h_cover.is_connected()) fail("c_disconnected", "", "C disconnected: block action is intransitive");
  if (!cover.is_connected()) fail("c_tilde_disconnected", "", "C~ disconnected: degree-6 action is intransitive");

  auto flips = f_ramification_points(cover, blocks);
  std::map<std::string, int> per_label;
  for (const auto& pt : flips) {
    if (h_cover.has_label(pt.label)) {
      fail("f_branch_over_h_branch", pt.label,
           "double cover ramifies over a branch label of the trigonal map (genericity violated)");
    }
    ++per_label[pt.label];
  }
  for (const auto& [label, weight] : per_label)
    if (weight > 2) fail("flip_weight", label, "flip weight " + std::to_string(weight) + " at one label");
  if (flips.size() != 0 && flips.size() != 2)
    fail("f_ramification_count", "",
         "double cover must be etale or ramified at exactly 2 points, found " + std::to_string(flips.size()));

  if (!result.errors.empty()) return result;

  Tower t{cover, blocks, h_cover, genus(h_cover), flips, TowerMode::Etale, false};
  if (flips.size() == 2)
    t.mode = flips[0].label == flips[1].label ? TowerMode::Special : TowerMode::General;
  if (t.g < 3) {
    t.low_genus = true;
    result.warnings.push_back("genus of C is " + std::to_string(t.g) + " < 3; outside the supported range");
  }
  genus_c_tilde(t);
  result.tower = std::move(t);
  return result;
}

Tower make_tower(const BranchedCover& cover, const BlockSystem& blocks) {
  auto v = validate_tower(cover, blocks);
  if (!v.ok()) {
    std::string msg = "invalid tower:";
    for (const auto& e : v.errors) msg += " [" + e.code + (e.label.empty() ? "" : " @" + e.label) + "] " + e.message + ";";
    throw CoverError(msg);
  }
  return std::move(*v.tower);
}

int genus_c_tilde(const Tower& t) {
  const int gt = genus(t.cover);
  const int expected = t.mode == TowerMode::Etale ? 2 * t.g - 1 : 2 * t.g;
  if (gt != expected)
    throw CoverError("genus of C~ is " + std::to_string(gt) + ", expected " + std::to_string(expected));
  return gt;
}

const std::string& special_label(const Tower& t) {
  if (t.mode != TowerMode::Special) throw CoverError("tower is not special");
  return t.flip_points.front().label;
}

}  // namespace trigonal

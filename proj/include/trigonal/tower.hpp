#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trigonal/cover.hpp"

namespace trigonal {

/// Three disjoint pairs of sheets partitioning {0..5}: the fibres of the
/// double cover inside the degree-6 cover. Stored canonically: each pair
/// sorted, pairs ordered by smallest sheet.
class BlockSystem {
 public:
  /// Pairs are 0-based. Throws CoverError unless they partition {0..5}.
  explicit BlockSystem(std::array<std::array<int, 2>, 3> pairs);
  static BlockSystem standard() { return BlockSystem({{{0, 1}, {2, 3}, {4, 5}}}); }

  const std::array<std::array<int, 2>, 3>& pairs() const { return pairs_; }
  int block_of(int sheet) const { return block_[static_cast<std::size_t>(sheet)]; }
  /// 0 for the smaller sheet of its block, 1 for the larger.
  int choice_of(int sheet) const { return choice_[static_cast<std::size_t>(sheet)]; }
  int sheet(int block, int choice) const {
    return pairs_[static_cast<std::size_t>(block)][static_cast<std::size_t>(choice)];
  }
  int partner(int sheet) const { return this->sheet(block_of(sheet), 1 - choice_of(sheet)); }

  bool preserved_by(const Permutation& p) const;

  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;

 private:
  std::array<std::array<int, 2>, 3> pairs_{};
  std::array<int, 6> block_{};
  std::array<int, 6> choice_{};
};

/// Induced permutation of the three blocks. Throws CoverError if `p` breaks a block.
Permutation block_action(const Permutation& p, const BlockSystem& blocks);

/// Number of blocks that `p` maps to themselves with their two sheets swapped.
int flip_weight(const Permutation& p, const BlockSystem& blocks);

/// Points of C (cycles of the block action, 0-based block indices) over which
/// the double cover ramifies: the 2l sheets above an l-cycle of blocks form a
/// single 2l-cycle there instead of two l-cycles.
std::vector<CoverPoint> f_ramification_points(const BranchedCover& cover, const BlockSystem& blocks);

enum class TowerMode { Etale, General, Special };
std::string to_string(TowerMode mode);
TowerMode tower_mode_from_string(const std::string& s);

/// A validated double cover of a trigonal curve, given as a degree-6 cover
/// with an invariant block system. Only `validate_tower` creates these.
struct Tower {
  BranchedCover cover;
  BlockSystem blocks;
  /// The degree-3 quotient C -> P^1 (identity block actions dropped).
  BranchedCover h_cover;
  /// Genus of C.
  int g = 0;
  /// Ramification points of the double cover, as points of C.
  std::vector<CoverPoint> flip_points;
  TowerMode mode = TowerMode::Etale;
  /// Set when g < 3; such towers are usable but outside the supported range.
  bool low_genus = false;
};

struct TowerIssue {
  std::string code;
  std::string label;  // empty when not tied to one label
  std::string message;
};

struct TowerValidation {
  std::optional<Tower> tower;
  std::vector<TowerIssue> errors;
  std::vector<std::string> warnings;
  bool ok() const { return tower.has_value(); }
};

/// Checks every tower invariant, reporting all violations at once.
TowerValidation validate_tower(const BranchedCover& cover, const BlockSystem& blocks);

/// Throwing convenience wrapper around validate_tower.
Tower make_tower(const BranchedCover& cover, const BlockSystem& blocks);

/// Genus of the degree-6 cover; throws CoverError unless it equals 2g
/// (ramified towers) or 2g - 1 (etale towers).
int genus_c_tilde(const Tower& t);

/// The label carrying both flips of a special tower.
const std::string& special_label(const Tower& t);

}  // namespace trigonal

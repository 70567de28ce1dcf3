#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trigonal/cover.hpp"
#include "trigonal/report.hpp"
#include "trigonal/tower.hpp"

namespace trigonal {

/// One sheet chosen in each block, as choices (0 = smaller sheet) per block.
///
/// The 8 transversals are indexed lexicographically with block 0 most
/// significant: index = 4*c0 + 2*c1 + c2. The blockwise complement of index t
/// is 7 - t, and its parity relative to transversal 0 is popcount(t) mod 2.
struct Transversal {
  std::array<int, 3> choice{};

  static Transversal from_index(int index) { return {{(index >> 2) & 1, (index >> 1) & 1, index & 1}}; }
  int index() const { return 4 * choice[0] + 2 * choice[1] + choice[2]; }
  std::array<int, 3> sheets(const BlockSystem& blocks) const {
    return {blocks.sheet(0, choice[0]), blocks.sheet(1, choice[1]), blocks.sheet(2, choice[2])};
  }
};

/// Class of transversal t in Y/iota: the representative with c0 = 0.
constexpr int involution_class(int t) { return t < 4 ? t : 7 - t; }
constexpr int orientation_class(int t) { return ((t >> 2) ^ (t >> 1) ^ t) & 1; }

/// Induced action T -> sigma(T) on the 8 transversals. Throws if sigma breaks a block.
Permutation sections_action(const Permutation& sigma, const BlockSystem& blocks);

/// Node markers attached to the three curves of a special tower.
struct SpecialNodes {
  NodalCoverModel y;  // two nodes D1, D2 (D1 uses the smaller sheet of the unflipped block)
  NodalCoverModel x;  // one node
  NodalCoverModel o;  // one node joining the two components of O
};

struct ForwardResult {
  /// Y: degree 8, sheets are transversals.
  BranchedCover y;
  /// Blockwise complement on Y.
  Permutation iota;
  /// X = Y/iota: degree 4, sheet k is the class {k, 7-k}.
  BranchedCover x;
  /// O: degree 2, sheets are the two parity classes.
  BranchedCover o;
  /// pi[t] = X-sheet of Y-sheet t; psi[t] = O-sheet of Y-sheet t.
  std::vector<int> pi;
  std::vector<int> psi;
  /// All tower labels in order; covers above drop labels where they are unbranched.
  std::vector<std::string> labels;
  /// Present exactly for special towers.
  std::optional<SpecialNodes> nodes;
};

ForwardResult construct(const Tower& t);

/// Node markers of a special tower; throws CoverError for other modes.
SpecialNodes special_nodes(const Tower& t, const ForwardResult& r);

/// Mode-dependent structural checks on the result of construct(t).
CheckReport verify_predictions(const Tower& t, const ForwardResult& r);

/// Relabeling from the first component of Y to the second induced by iota,
/// if iota swaps the two components and intertwines their monodromy.
std::optional<Permutation> iota_component_relabeling(const ForwardResult& r);

/// First component of a disconnected Y as a degree-4 cover. Throws CoverError
/// when Y is connected or when iota fails to identify the two components.
BranchedCover component_tetragonal(const ForwardResult& r);

}  // namespace trigonal

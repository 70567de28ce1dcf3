#pragma once

#include <string>
#include <vector>

#include "trigonal/cover.hpp"
#include "trigonal/report.hpp"
#include "trigonal/tower.hpp"

namespace trigonal {

// Unordered pairs of the 4 sheets are indexed lexicographically:
//   0:{1,2} 1:{1,3} 2:{1,4} 3:{2,3} 4:{2,4} 5:{3,4}
// so the complement of pair i is 5 - i. Partitions into two pairs are indexed
// by their pair with smaller index: 0:{12|34} 1:{13|24} 2:{14|23}.
constexpr int pair_complement(int pair) { return 5 - pair; }
constexpr int pair_partition(int pair) { return pair < 3 ? pair : 5 - pair; }

/// Induced action on the 6 unordered sheet pairs of a degree-4 permutation.
Permutation pairs_action(const Permutation& sigma);
/// Induced action on the 3 pair-partitions (the quotient by complement).
Permutation partition_action(const Permutation& sigma);

/// Local fibre type by cycle type: identity 1, (2,1,1) 2, (3,1) 3, (2,2) 4, (4) 5.
int classify_fiber(const Permutation& sigma);

enum class Stratum { M0, M1, M2, Other };
std::string to_string(Stratum s);

/// Stratum of a degree-4 cover by its count of (2,2) and (4) fibres.
Stratum stratum_of(const BranchedCover& tetragonal);

/// A connected degree-4 cover tagged with its stratum.
struct TetragonalCover {
  BranchedCover cover;
  Stratum stratum;

  /// Throws CoverError unless `cover` is connected of degree 4.
  static TetragonalCover from(BranchedCover cover);
};

/// A node created at a degenerate fibre of the inverse construction.
struct AdmissibleNode {
  std::string label;
  int fibre_type = 0;  // 4 or 5
  Node c_node;         // on the trigonal curve
  Node c_tilde_node;   // on its double cover
  /// Branch of c_node along which the trigonal map ramifies (type 5: 0), or -1.
  int ramified_branch = -1;
};

struct FibreClass {
  std::string label;
  int type = 0;
};

struct InverseResult {
  /// Degree 6 on the unordered sheet pairs.
  BranchedCover c_tilde;
  /// Complement involution, i -> 5 - i.
  Permutation kappa;
  /// Degree 3 on the pair-partitions.
  BranchedCover c;
  std::vector<FibreClass> fibres;
  std::vector<AdmissibleNode> nodes;
  NodalCoverModel c_model;
  NodalCoverModel c_tilde_model;

  /// Block system {1,6},{2,5},{3,4} of c_tilde under kappa.
  static BlockSystem blocks() { return BlockSystem({{{0, 5}, {1, 4}, {2, 3}}}); }
};

/// Relative second symmetric product of a degree-4 cover. Every cover is accepted.
InverseResult invert(const BranchedCover& tetragonal);

/// Special tower with the two branch points of the double cover identified on C
/// and the two ramification points identified on C~.
struct GluedTower {
  NodalCoverModel c;
  NodalCoverModel c_tilde;
};

GluedTower glue_special(const Tower& t);

/// Special round trip: the component tetragonal curve of construct(t) is in
/// stratum M1 with genus g, and inverting it recovers glue_special(t).
CheckReport roundtrip_special(const Tower& t);
/// Same, with a caller-supplied tetragonal curve in place of the component.
CheckReport roundtrip_special(const Tower& t, const BranchedCover& tetragonal);

/// Etale round trip from an M0 tetragonal curve: invert gives an etale tower
/// whose sections curve splits into two copies of the input.
/// Throws CoverError when the input is not in stratum M0.
CheckReport roundtrip_etale(const BranchedCover& tetragonal);

}  // namespace trigonal

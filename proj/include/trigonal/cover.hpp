#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trigonal/permutation.hpp"

namespace trigonal {

/// One branch label of a cover together with its monodromy.
struct BranchPoint {
  std::string label;
  Permutation monodromy;
  /// Optional rational position on the line, kept verbatim (e.g. "3/7").
  std::optional<std::string> position;

  friend bool operator==(const BranchPoint&, const BranchPoint&) = default;
};

/// A branched cover of the projective line given by its monodromy tuple.
///
/// Invariants checked on construction: labels distinct, every entry has the
/// cover's degree and is not the identity, and the ordered product of the
/// tuple (first label applied first) is the identity.
class BranchedCover {
 public:
  BranchedCover(int degree, std::vector<BranchPoint> points);

  /// Same as the constructor, except identity entries are silently dropped.
  static BranchedCover dropping_identities(int degree, std::vector<BranchPoint> points);

  int degree() const { return degree_; }
  const std::vector<BranchPoint>& branch_points() const { return points_; }
  std::vector<std::string> labels() const;
  std::vector<Permutation> monodromy() const;

  bool has_label(const std::string& label) const;
  /// Monodromy at `label`, or the identity when `label` is not a branch label.
  Permutation monodromy_at(const std::string& label) const;
  /// Throws CoverError when `label` is not a branch label.
  const BranchPoint& at(const std::string& label) const;

  bool is_connected() const;
  /// Sum over labels of (degree - #cycles), the degree of the ramification divisor.
  int total_ramification() const;

  friend bool operator==(const BranchedCover&, const BranchedCover&) = default;

 private:
  int degree_ = 0;
  std::vector<BranchPoint> points_;
};

/// Riemann-Hurwitz genus of a connected cover.
/// Throws CoverError for disconnected covers or odd total ramification.
int genus(const BranchedCover& cover);

/// Cycle lengths of the monodromy at `label`, decreasing. Throws on unknown label.
std::vector<int> ramification_profile(const BranchedCover& cover, const std::string& label);

struct CoverComponent {
  BranchedCover cover;
  /// sheets[i] is the sheet of the parent cover carried by local sheet i.
  std::vector<int> sheets;
};

/// One component per monodromy orbit, ordered by smallest sheet. Labels whose
/// restricted monodromy is trivial are dropped from the component.
std::vector<CoverComponent> components(const BranchedCover& cover);

/// Sheets of `a` followed by sheets of `b`. Labels present in both covers must
/// occur in the same relative order; the merged label order keeps both orders.
BranchedCover disjoint_union(const BranchedCover& a, const BranchedCover& b);

/// Relabeling rho with rho^-1 * sigma_i * rho = sigma'_i for every label, i.e.
/// rho(sigma_i(x)) = sigma'_i(rho(x)). Throws CoverError unless both covers have
/// the same degree and the same ordered labels.
std::optional<Permutation> are_isomorphic(const BranchedCover& a, const BranchedCover& b);
/// Every such relabeling, in lexicographic order of image arrays.
std::vector<Permutation> all_isomorphisms(const BranchedCover& a, const BranchedCover& b);

/// A point of a cover: a cycle of the monodromy at a label. Over a label that
/// is not a branch label of the cover the fibre is unramified and the cycle is a
/// single sheet.
struct CoverPoint {
  std::string label;
  /// 0-based sheets in cycle order, starting at the smallest.
  std::vector<int> cycle;

  int ramification_index() const { return static_cast<int>(cycle.size()); }
  friend bool operator==(const CoverPoint&, const CoverPoint&) = default;
  friend auto operator<=>(const CoverPoint&, const CoverPoint&) = default;
};

/// The fibre point over `label` containing `sheet`.
CoverPoint point_at(const BranchedCover& cover, const std::string& label, int sheet);
/// Index of `point` among the cycles of the monodromy at its label (ordered by smallest sheet).
int cycle_index(const BranchedCover& cover, const CoverPoint& point);
/// Inverse of cycle_index; throws CoverError when out of range.
CoverPoint point_from_index(const BranchedCover& cover, const std::string& label, int index);
/// Image of a point under a relabeling rho: sheets -> rho(sheets), recanonicalized.
CoverPoint transport(const CoverPoint& point, const Permutation& rho);

using Node = std::pair<CoverPoint, CoverPoint>;

/// A nodal curve presented by its normalization and the identified point pairs.
struct NodalCoverModel {
  BranchedCover normalization;
  std::vector<Node> nodes;

  /// Empty when valid; otherwise one message per violation.
  std::vector<std::string> problems() const;
};

/// p_a = sum of component genera + #nodes - #components + 1.
/// Throws CoverError for an invalid model.
int arithmetic_genus(const NodalCoverModel& model);

}  // namespace trigonal

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace trigonal {

/// Raised on malformed monodromy data or misuse of an operation's preconditions.
class CoverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bijection of the sheets {0, ..., degree-1}.
///
/// Sheets are 0-based in memory; every textual form (JSON, cycle notation,
/// messages) is 1-based. Products read left to right: `a * b` applies `a`
/// first, then `b`.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int degree);
  /// Throws CoverError unless `images` is a bijection of {0..n-1}.
  static Permutation from_images(std::vector<int> images);
  /// Cycles are 1-based sheet lists; unlisted sheets are fixed.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int sheet) const { return images_[static_cast<std::size_t>(sheet)]; }
  std::span<const int> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Disjoint cycles including fixed points, each starting at its smallest
  /// sheet, ordered by that smallest sheet (0-based).
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const;
  /// Cycle lengths sorted in decreasing order.
  std::vector<int> cycle_type() const;
  /// 1-based cycle notation, e.g. "(1 2)(3 4)"; identity prints as "()".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

/// Apply `p` first, then `q`.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// `rho^-1 * sigma * rho`: the monodromy `sigma` transported along the relabeling `rho`.
Permutation conjugate(const Permutation& sigma, const Permutation& rho);

/// Orbits of the group generated by `perms` on `degree` sheets, each sorted,
/// ordered by smallest sheet. `degree` is needed when `perms` is empty.
std::vector<std::vector<int>> orbits(int degree, std::span<const Permutation> perms);
bool is_transitive(int degree, std::span<const Permutation> perms);

/// Formats a partition such as {2,2,1,1} as "(2,2,1,1)".
std::string profile_string(const std::vector<int>& profile);

}  // namespace trigonal

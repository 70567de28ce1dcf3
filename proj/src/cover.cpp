#include "trigonal/cover.hpp"

#include <algorithm>
#include <set>

namespace trigonal {

namespace {

void check_points(int degree, const std::vector<BranchPoint>& points) {
  if (degree <= 0) throw CoverError("degree must be positive");
  std::set<std::string> seen;
  for (const auto& bp : points) {
    if (!seen.insert(bp.label).second) throw CoverError("duplicate branch label '" + bp.label + "'");
    if (bp.monodromy.degree() != degree)
      throw CoverError("monodromy at '" + bp.label + "' has degree " +
                       std::to_string(bp.monodromy.degree()) + ", expected " + std::to_string(degree));
    if (bp.monodromy.is_identity())
      throw CoverError("monodromy at '" + bp.label + "' is the identity");
  }
  Permutation product = Permutation::identity(degree);
  for (const auto& bp : points) product = product * bp.monodromy;
  if (!product.is_identity())
    throw CoverError("product-one relation fails: ordered product is " + product.to_string());
}

}  // namespace

BranchedCover::BranchedCover(int degree, std::vector<BranchPoint> points)
    : degree_(degree), points_(std::move(points)) {
  check_points(degree_, points_);
}

BranchedCover BranchedCover::dropping_identities(int degree, std::vector<BranchPoint> points) {
  std::erase_if(points, [](const BranchPoint& bp) { return bp.monodromy.is_identity(); });
  return BranchedCover(degree, std::move(points));
}

std::vector<std::string> BranchedCover::labels() const {
  std::vector<std::string> out;
  for (const auto& bp : points_) out.push_back(bp.label);
  return out;
}

std::vector<Permutation> BranchedCover::monodromy() const {
  std::vector<Permutation> out;
  for (const auto& bp : points_) out.push_back(bp.monodromy);
  return out;
}

bool BranchedCover::has_label(const std::string& label) const {
  return std::any_of(points_.begin(), points_.end(), [&](const BranchPoint& bp) { return bp.label == label; });
}

const BranchPoint& BranchedCover::at(const std::string& label) const {
  for (const auto& bp : points_)
    if (bp.label == label) return bp;
  throw CoverError("unknown branch label '" + label + "'");
}

Permutation BranchedCover::monodromy_at(const std::string& label) const {
  for (const auto& bp : points_)
    if (bp.label == label) return bp.monodromy;
  return Permutation::identity(degree_);
}

bool BranchedCover::is_connected() const {
  auto perms = monodromy();
  return is_transitive(degree_, perms);
}

int BranchedCover::total_ramification() const {
  int total = 0;
  for (const auto& bp : points_) total += degree_ - bp.monodromy.cycle_count();
  return total;
}

int genus(const BranchedCover& cover) {
  if (!cover.is_connected()) throw CoverError("genus of a disconnected cover is undefined");
  const int r = cover.total_ramification();
  if (r % 2 != 0) throw CoverError("odd total ramification " + std::to_string(r) + ": corrupted monodromy");
  const int g = 1 - cover.degree() + r / 2;
  if (g < 0) throw CoverError("negative genus: corrupted monodromy");
  return g;
}

std::vector<int> ramification_profile(const BranchedCover& cover, const std::string& label) {
  return cover.at(label).monodromy.cycle_type();
}

std::vector<CoverComponent> components(const BranchedCover& cover) {
  const auto perms = cover.monodromy();
  std::vector<CoverComponent> out;
  for (const auto& orbit : orbits(cover.degree(), perms)) {
    std::vector<int> local(static_cast<std::size_t>(cover.degree()), -1);
    for (std::size_t i = 0; i < orbit.size(); ++i) local[static_cast<std::size_t>(orbit[i])] = static_cast<int>(i);
    std::vector<BranchPoint> points;
    for (const auto& bp : cover.branch_points()) {
      std::vector<int> images(orbit.size());
      for (std::size_t i = 0; i < orbit.size(); ++i)
        images[i] = local[static_cast<std::size_t>(bp.monodromy(orbit[i]))];
      points.push_back({bp.label, Permutation::from_images(std::move(images)), bp.position});
    }
    out.push_back({BranchedCover::dropping_identities(static_cast<int>(orbit.size()), std::move(points)), orbit});
  }
  return out;
}

BranchedCover disjoint_union(const BranchedCover& a, const BranchedCover& b) {
  const int n = a.degree() + b.degree();
  auto lift = [&](const Permutation* pa, const Permutation* pb) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < a.degree(); ++i) images[static_cast<std::size_t>(i)] = pa ? (*pa)(i) : i;
    for (int i = 0; i < b.degree(); ++i)
      images[static_cast<std::size_t>(a.degree() + i)] = a.degree() + (pb ? (*pb)(i) : i);
    return Permutation::from_images(std::move(images));
  };
  std::vector<BranchPoint> merged;
  std::size_t j = 0;
  const auto& bs = b.branch_points();
  for (const auto& bp : a.branch_points()) {
    if (b.has_label(bp.label)) {
      while (j < bs.size() && bs[j].label != bp.label) {
        if (a.has_label(bs[j].label))
          throw CoverError("shared labels occur in different orders; cannot merge");
        merged.push_back({bs[j].label, lift(nullptr, &bs[j].monodromy), bs[j].position});
        ++j;
      }
      merged.push_back({bp.label, lift(&bp.monodromy, &bs[j].monodromy), bp.position});
      ++j;
    } else {
      merged.push_back({bp.label, lift(&bp.monodromy, nullptr), bp.position});
    }
  }
  for (; j < bs.size(); ++j) {
    if (a.has_label(bs[j].label)) throw CoverError("shared labels occur in different orders; cannot merge");
    merged.push_back({bs[j].label, lift(nullptr, &bs[j].monodromy), bs[j].position});
  }
  return BranchedCover(n, std::move(merged));
}

namespace {

// Backtracking search for relabelings intertwining two monodromy tuples.
// Each tentative assignment is propagated along all generators and their
// inverses, so for a connected cover one choice of rho(0) fixes everything.
class ConjugatorSearch {
 public:
  ConjugatorSearch(const BranchedCover& a, const BranchedCover& b, bool first_only)
      : n_(a.degree()), first_only_(first_only) {
    if (a.degree() != b.degree())
      throw CoverError("isomorphism test needs equal degrees (" + std::to_string(a.degree()) + " vs " +
                       std::to_string(b.degree()) + ")");
    if (a.labels() != b.labels()) throw CoverError("isomorphism test needs identical ordered branch labels");
    for (const auto& bp : a.branch_points()) {
      gens_a_.push_back(bp.monodromy);
      gens_a_.push_back(bp.monodromy.inverse());
    }
    for (const auto& bp : b.branch_points()) {
      gens_b_.push_back(bp.monodromy);
      gens_b_.push_back(bp.monodromy.inverse());
    }
    rho_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), false);
  }

  std::vector<Permutation> run() {
    search();
    return std::move(found_);
  }

 private:
  bool assign(int x, int y, std::vector<int>& trail) {
    std::vector<std::pair<int, int>> stack{{x, y}};
    while (!stack.empty()) {
      auto [s, t] = stack.back();
      stack.pop_back();
      const int cur = rho_[static_cast<std::size_t>(s)];
      if (cur == t) continue;
      if (cur >= 0 || used_[static_cast<std::size_t>(t)]) return false;
      rho_[static_cast<std::size_t>(s)] = t;
      used_[static_cast<std::size_t>(t)] = true;
      trail.push_back(s);
      for (std::size_t i = 0; i < gens_a_.size(); ++i) stack.emplace_back(gens_a_[i](s), gens_b_[i](t));
    }
    return true;
  }

  void undo(std::vector<int>& trail) {
    for (int s : trail) {
      used_[static_cast<std::size_t>(rho_[static_cast<std::size_t>(s)])] = false;
      rho_[static_cast<std::size_t>(s)] = -1;
    }
    trail.clear();
  }

  void search() {
    if (first_only_ && !found_.empty()) return;
    const auto it = std::find(rho_.begin(), rho_.end(), -1);
    if (it == rho_.end()) {
      found_.push_back(Permutation::from_images(rho_));
      return;
    }
    const int x = static_cast<int>(it - rho_.begin());
    for (int y = 0; y < n_; ++y) {
      if (used_[static_cast<std::size_t>(y)]) continue;
      std::vector<int> trail;
      if (assign(x, y, trail)) search();
      undo(trail);
      if (first_only_ && !found_.empty()) return;
    }
  }

  int n_;
  bool first_only_;
  std::vector<Permutation> gens_a_, gens_b_;
  std::vector<int> rho_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
};

}  // namespace

std::optional<Permutation> are_isomorphic(const BranchedCover& a, const BranchedCover& b) {
  auto found = ConjugatorSearch(a, b, true).run();
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<Permutation> all_isomorphisms(const BranchedCover& a, const BranchedCover& b) {
  return ConjugatorSearch(a, b, false).run();
}

CoverPoint point_at(const BranchedCover& cover, const std::string& label, int sheet) {
  if (sheet < 0 || sheet >= cover.degree()) throw CoverError("sheet out of range");
  const Permutation sigma = cover.monodromy_at(label);
  std::vector<int> cycle;
  int start = sheet;
  for (int x = sigma(sheet); x != sheet; x = sigma(x)) start = std::min(start, x);
  int x = start;
  do {
    cycle.push_back(x);
    x = sigma(x);
  } while (x != start);
  return {label, std::move(cycle)};
}

int cycle_index(const BranchedCover& cover, const CoverPoint& point) {
  const auto cycles = cover.monodromy_at(point.label).cycles();
  for (std::size_t i = 0; i < cycles.size(); ++i)
    if (cycles[i] == point.cycle) return static_cast<int>(i);
  throw CoverError("point over '" + point.label + "' is not a cycle of the monodromy there");
}

CoverPoint point_from_index(const BranchedCover& cover, const std::string& label, int index) {
  const auto cycles = cover.monodromy_at(label).cycles();
  if (index < 0 || index >= static_cast<int>(cycles.size()))
    throw CoverError("cycle index out of range over '" + label + "'");
  return {label, cycles[static_cast<std::size_t>(index)]};
}

CoverPoint transport(const CoverPoint& point, const Permutation& rho) {
  std::vector<int> moved;
  for (int s : point.cycle) moved.push_back(rho(s));
  std::rotate(moved.begin(), std::min_element(moved.begin(), moved.end()), moved.end());
  return {point.label, std::move(moved)};
}

std::vector<std::string> NodalCoverModel::problems() const {
  std::vector<std::string> out;
  std::set<CoverPoint> used;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& [p, q] = nodes[i];
    const std::string tag = "node " + std::to_string(i + 1) + ": ";
    if (p.label != q.label) out.push_back(tag + "endpoints lie over different labels");
    if (p == q) out.push_back(tag + "endpoints coincide");
    for (const auto* pt : {&p, &q}) {
      try {
        cycle_index(normalization, *pt);
      } catch (const CoverError& e) {
        out.push_back(tag + e.what());
      }
      if (!used.insert(*pt).second) out.push_back(tag + "point used by more than one node");
    }
  }
  return out;
}

int arithmetic_genus(const NodalCoverModel& model) {
  const auto issues = model.problems();
  if (!issues.empty()) throw CoverError("invalid nodal model: " + issues.front());
  const auto parts = components(model.normalization);
  int total = 0;
  for (const auto& part : parts) total += genus(part.cover);
  return total + static_cast<int>(model.nodes.size()) - static_cast<int>(parts.size()) + 1;
}

}  // namespace trigonal

#include "trigonal/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace trigonal {

Permutation Permutation::identity(int degree) {
  if (degree <= 0) throw CoverError("degree must be positive");
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n == 0) throw CoverError("degree must be positive");
  std::vector<bool> hit(images.size(), false);
  for (int x : images) {
    if (x < 0 || x >= n || hit[static_cast<std::size_t>(x)])
      throw CoverError("images do not form a bijection");
    hit[static_cast<std::size_t>(x)] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(degree);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  for (const auto& cycle : cycles) {
    if (cycle.empty()) throw CoverError("empty cycle");
    for (int s : cycle) {
      if (s < 1 || s > degree)
        throw CoverError("sheet " + std::to_string(s) + " out of range 1.." + std::to_string(degree));
      if (used[static_cast<std::size_t>(s - 1)])
        throw CoverError("sheet " + std::to_string(s) + " appears twice in cycle list");
      used[static_cast<std::size_t>(s - 1)] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      p.images_[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + 1) % cycle.size()] - 1;
  }
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[static_cast<std::size_t>((*this)(i))] = i;
  return Permutation(std::move(inv));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

int Permutation::cycle_count() const {
  int count = 0;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++count;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x))
      seen[static_cast<std::size_t>(x)] = true;
  }
  return count;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i] + 1;
    os << ')';
  }
  return any ? os.str() : "()";
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw CoverError("cannot compose permutations of degree " + std::to_string(p.degree()) +
                     " and " + std::to_string(q.degree()));
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (int i = 0; i < p.degree(); ++i) images[static_cast<std::size_t>(i)] = q(p(i));
  return Permutation::from_images(std::move(images));
}

Permutation conjugate(const Permutation& sigma, const Permutation& rho) {
  return rho.inverse() * sigma * rho;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

std::vector<std::vector<int>> orbits(int degree, std::span<const Permutation> perms) {
  std::vector<int> parent(static_cast<std::size_t>(degree));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& p : perms) {
    if (p.degree() != degree) throw CoverError("orbit computation over mixed degrees");
    for (int i = 0; i < degree; ++i) {
      int a = find_root(parent, i), b = find_root(parent, p(i));
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(static_cast<std::size_t>(degree), -1);
  for (int i = 0; i < degree; ++i) {
    int r = find_root(parent, i);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(i);
  }
  return out;
}

bool is_transitive(int degree, std::span<const Permutation> perms) {
  return orbits(degree, perms).size() == 1;
}

std::string profile_string(const std::vector<int>& profile) {
  std::string s = "(";
  for (std::size_t i = 0; i < profile.size(); ++i) s += (i ? "," : "") + std::to_string(profile[i]);
  return s + ")";
}

}  // namespace trigonal

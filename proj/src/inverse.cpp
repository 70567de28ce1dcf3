#include "trigonal/inverse.hpp"

#include <algorithm>
#include <array>

#include "trigonal/forward.hpp"

namespace trigonal {

namespace {

constexpr std::array<std::array<int, 2>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

int pair_index(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int i = 0; i < 6; ++i)
    if (kPairs[static_cast<std::size_t>(i)][0] == a && kPairs[static_cast<std::size_t>(i)][1] == b) return i;
  throw CoverError("not a pair of distinct sheets");
}

void require_degree4(const Permutation& sigma) {
  if (sigma.degree() != 4) throw CoverError("expected a degree-4 permutation");
}

Node ordered(Node n) {
  if (n.second < n.first) std::swap(n.first, n.second);
  return n;
}

}  // namespace

Permutation pairs_action(const Permutation& sigma) {
  require_degree4(sigma);
  std::vector<int> images(6);
  for (int i = 0; i < 6; ++i) {
    const auto& p = kPairs[static_cast<std::size_t>(i)];
    images[static_cast<std::size_t>(i)] = pair_index(sigma(p[0]), sigma(p[1]));
  }
  return Permutation::from_images(std::move(images));
}

Permutation partition_action(const Permutation& sigma) {
  const Permutation on_pairs = pairs_action(sigma);
  std::vector<int> images(3);
  for (int k = 0; k < 3; ++k) images[static_cast<std::size_t>(k)] = pair_partition(on_pairs(k));
  return Permutation::from_images(std::move(images));
}

int classify_fiber(const Permutation& sigma) {
  require_degree4(sigma);
  const auto type = sigma.cycle_type();
  if (type == std::vector<int>{1, 1, 1, 1}) return 1;
  if (type == std::vector<int>{2, 1, 1}) return 2;
  if (type == std::vector<int>{3, 1}) return 3;
  if (type == std::vector<int>{2, 2}) return 4;
  return 5;
}

std::string to_string(Stratum s) {
  switch (s) {
    case Stratum::M0: return "M0";
    case Stratum::M1: return "M1";
    case Stratum::M2: return "M2";
    case Stratum::Other: return "Other";
  }
  return "?";
}

Stratum stratum_of(const BranchedCover& tetragonal) {
  if (tetragonal.degree() != 4) return Stratum::Other;
  int type4 = 0, type5 = 0;
  for (const auto& bp : tetragonal.branch_points()) {
    const int type = classify_fiber(bp.monodromy);
    type4 += type == 4;
    type5 += type == 5;
  }
  if (type5 > 0 || type4 > 2) return Stratum::Other;
  return type4 == 0 ? Stratum::M0 : type4 == 1 ? Stratum::M1 : Stratum::M2;
}

TetragonalCover TetragonalCover::from(BranchedCover cover) {
  if (cover.degree() != 4) throw CoverError("tetragonal cover must have degree 4");
  if (!cover.is_connected()) throw CoverError("tetragonal cover must be connected");
  const Stratum s = stratum_of(cover);
  return {std::move(cover), s};
}

InverseResult invert(const BranchedCover& tetragonal) {
  if (tetragonal.degree() != 4) throw CoverError("inverse construction needs a degree-4 cover");
  std::vector<BranchPoint> on_pairs, on_partitions;
  std::vector<FibreClass> fibres;
  for (const auto& bp : tetragonal.branch_points()) {
    on_pairs.push_back({bp.label, pairs_action(bp.monodromy), bp.position});
    on_partitions.push_back({bp.label, partition_action(bp.monodromy), bp.position});
    fibres.push_back({bp.label, classify_fiber(bp.monodromy)});
  }
  std::vector<int> kappa(6);
  for (int i = 0; i < 6; ++i) kappa[static_cast<std::size_t>(i)] = pair_complement(i);

  InverseResult r{BranchedCover::dropping_identities(6, std::move(on_pairs)),
                  Permutation::from_images(std::move(kappa)),
                  BranchedCover::dropping_identities(3, std::move(on_partitions)),
                  std::move(fibres),
                  {},
                  {BranchedCover(3, {}), {}},
                  {BranchedCover(6, {}), {}}};

  for (const auto& fc : r.fibres) {
    if (fc.type < 4) continue;
    const Permutation pairs = r.c_tilde.monodromy_at(fc.label);
    const Permutation parts = r.c.monodromy_at(fc.label);
    AdmissibleNode node;
    node.label = fc.label;
    node.fibre_type = fc.type;
    if (fc.type == 4) {
      // Partitions whose two pairs are swapped: glue those two partition
      // points on C, and their single pair-points on C~.
      std::vector<int> ramified;
      for (int k = 0; k < 3; ++k)
        if (pairs(k) == pair_complement(k)) ramified.push_back(k);
      if (ramified.size() != 2) throw CoverError("unexpected (2,2) fibre on pairs");
      node.c_node = {point_at(r.c, fc.label, ramified[0]), point_at(r.c, fc.label, ramified[1])};
      node.c_tilde_node = {point_at(r.c_tilde, fc.label, ramified[0]), point_at(r.c_tilde, fc.label, ramified[1])};
    } else {
      // Glue the length-2 partition point with the fixed partition point.
      int fixed = -1, moved = -1;
      for (int k = 0; k < 3; ++k) (parts(k) == k ? fixed : moved) = k;
      moved = std::min(moved, parts(moved));
      node.c_node = {point_at(r.c, fc.label, moved), point_at(r.c, fc.label, fixed)};
      node.c_tilde_node = {point_at(r.c_tilde, fc.label, moved), point_at(r.c_tilde, fc.label, fixed)};
      node.ramified_branch = 0;
    }
    r.nodes.push_back(node);
  }
  r.c_model.normalization = r.c;
  r.c_tilde_model.normalization = r.c_tilde;
  for (const auto& n : r.nodes) {
    r.c_model.nodes.push_back(n.c_node);
    r.c_tilde_model.nodes.push_back(n.c_tilde_node);
  }
  return r;
}

GluedTower glue_special(const Tower& t) {
  if (t.mode != TowerMode::Special) throw CoverError("gluing applies to special towers only");
  const std::string& b = special_label(t);
  const auto& p1 = t.flip_points[0];
  const auto& p2 = t.flip_points[1];
  GluedTower out{{t.h_cover, {{p1, p2}}}, {t.cover, {}}};
  out.c_tilde.nodes.emplace_back(point_at(t.cover, b, t.blocks.sheet(p1.cycle.front(), 0)),
                                 point_at(t.cover, b, t.blocks.sheet(p2.cycle.front(), 0)));
  return out;
}

CheckReport roundtrip_special(const Tower& t) {
  if (t.mode != TowerMode::Special) throw CoverError("special round trip needs a special tower");
  const ForwardResult fwd = construct(t);
  return roundtrip_special(t, component_tetragonal(fwd));
}

CheckReport roundtrip_special(const Tower& t, const BranchedCover& tetragonal) {
  if (t.mode != TowerMode::Special) throw CoverError("special round trip needs a special tower");
  CheckReport rep;
  const bool connected = tetragonal.degree() == 4 && tetragonal.is_connected();
  rep.add("tetragonal_stratum_m1", connected && stratum_of(tetragonal) == Stratum::M1);
  rep.add("tetragonal_genus", connected && genus(tetragonal) == t.g);
  if (!connected) return rep;

  const InverseResult inv = invert(tetragonal);
  const GluedTower glued = glue_special(t);
  rep.add("glued_c_arithmetic_genus", arithmetic_genus(glued.c) == t.g + 1);
  rep.add("glued_c_tilde_arithmetic_genus", arithmetic_genus(glued.c_tilde) == 2 * t.g + 1);
  rep.add("normalization_recovers_tower", glued.c_tilde.normalization == t.cover && glued.c.normalization == t.h_cover);

  std::vector<Permutation> candidates;
  try {
    candidates = all_isomorphisms(inv.c_tilde, t.cover);
  } catch (const CoverError& e) {
    rep.add("normalizations_isomorphic", false, std::string("label mismatch: ") + e.what());
    return rep;
  }
  rep.add("normalizations_isomorphic", !candidates.empty());

  const BlockSystem pair_blocks = InverseResult::blocks();
  bool tower_iso = false, nodes_match = false;
  for (const auto& rho : candidates) {
    std::vector<int> on_blocks(3);
    bool blocks_ok = true;
    for (int k = 0; k < 3; ++k) {
      const int b0 = t.blocks.block_of(rho(pair_blocks.sheet(k, 0)));
      const int b1 = t.blocks.block_of(rho(pair_blocks.sheet(k, 1)));
      blocks_ok = blocks_ok && b0 == b1;
      on_blocks[static_cast<std::size_t>(k)] = b0;
    }
    if (!blocks_ok) continue;
    const Permutation rho3 = Permutation::from_images(on_blocks);
    if (inv.c.labels() != t.h_cover.labels()) continue;
    bool quotient_ok = true;
    for (std::size_t i = 0; i < inv.c.branch_points().size(); ++i)
      quotient_ok = quotient_ok && conjugate(inv.c.branch_points()[i].monodromy, rho3) ==
                                       t.h_cover.branch_points()[i].monodromy;
    if (!quotient_ok) continue;
    tower_iso = true;
    if (inv.nodes.size() != 1) continue;
    const auto& n = inv.nodes.front();
    const Node c_image{transport(n.c_node.first, rho3), transport(n.c_node.second, rho3)};
    const Node ct_image{transport(n.c_tilde_node.first, rho), transport(n.c_tilde_node.second, rho)};
    if (ordered(c_image) == ordered(glued.c.nodes.front()) &&
        ordered(ct_image) == ordered(glued.c_tilde.nodes.front())) {
      nodes_match = true;
      break;
    }
  }
  rep.add("tower_structure_isomorphic", tower_iso);
  rep.add("node_markers_correspond", nodes_match);
  return rep;
}

CheckReport roundtrip_etale(const BranchedCover& tetragonal) {
  const TetragonalCover x = TetragonalCover::from(tetragonal);
  if (x.stratum != Stratum::M0)
    throw CoverError("etale round trip needs a stratum M0 cover, got " + to_string(x.stratum));
  CheckReport rep;
  const InverseResult inv = invert(x.cover);
  rep.add("inverse_smooth", inv.nodes.empty());
  const TowerValidation v = validate_tower(inv.c_tilde, InverseResult::blocks());
  rep.add("inverse_is_tower", v.ok());
  if (!v.ok()) return rep;
  const Tower& t = *v.tower;
  rep.add("inverse_is_etale", t.mode == TowerMode::Etale);
  rep.add("trigonal_genus_shift", t.g == genus(x.cover) + 1);

  const ForwardResult fwd = construct(t);
  const auto parts = components(fwd.y);
  rep.add("y_two_components", parts.size() == 2);
  bool copies = parts.size() == 2;
  for (const auto& part : parts) {
    try {
      copies = copies && are_isomorphic(part.cover, x.cover).has_value();
    } catch (const CoverError&) {
      copies = false;
    }
  }
  rep.add("components_isomorphic_to_input", copies);
  return rep;
}

}  // namespace trigonal

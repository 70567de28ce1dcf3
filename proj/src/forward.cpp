#include "trigonal/forward.hpp"

#include <algorithm>
#include <set>

namespace trigonal {

Permutation sections_action(const Permutation& sigma, const BlockSystem& blocks) {
  const Permutation tau = block_action(sigma, blocks);
  std::vector<int> images(8);
  for (int t = 0; t < 8; ++t) {
    const Transversal src = Transversal::from_index(t);
    Transversal dst;
    for (int b = 0; b < 3; ++b) {
      const int image = sigma(blocks.sheet(b, src.choice[static_cast<std::size_t>(b)]));
      dst.choice[static_cast<std::size_t>(tau(b))] = blocks.choice_of(image);
    }
    images[static_cast<std::size_t>(t)] = dst.index();
  }
  return Permutation::from_images(std::move(images));
}

namespace {

Permutation induced_on_classes(const Permutation& on_y, int classes, int (*cls)(int)) {
  std::vector<int> images(static_cast<std::size_t>(classes), -1);
  for (int t = 0; t < 8; ++t) {
    const int from = cls(t), to = cls(on_y(t));
    auto& slot = images[static_cast<std::size_t>(from)];
    if (slot >= 0 && slot != to) throw CoverError("action does not descend to the quotient");
    slot = to;
  }
  return Permutation::from_images(std::move(images));
}

int x_class(int t) { return involution_class(t); }
int o_class(int t) { return orientation_class(t); }

}  // namespace

ForwardResult construct(const Tower& t) {
  std::vector<BranchPoint> ys, xs, os;
  std::vector<std::string> labels;
  for (const auto& bp : t.cover.branch_points()) {
    const Permutation on_y = sections_action(bp.monodromy, t.blocks);
    xs.push_back({bp.label, induced_on_classes(on_y, 4, x_class), bp.position});
    os.push_back({bp.label, induced_on_classes(on_y, 2, o_class), bp.position});
    ys.push_back({bp.label, on_y, bp.position});
    labels.push_back(bp.label);
  }
  std::vector<int> iota(8), pi(8), psi(8);
  for (int s = 0; s < 8; ++s) {
    iota[static_cast<std::size_t>(s)] = 7 - s;
    pi[static_cast<std::size_t>(s)] = involution_class(s);
    psi[static_cast<std::size_t>(s)] = orientation_class(s);
  }
  ForwardResult r{BranchedCover::dropping_identities(8, std::move(ys)),
                  Permutation::from_images(std::move(iota)),
                  BranchedCover::dropping_identities(4, std::move(xs)),
                  BranchedCover::dropping_identities(2, std::move(os)),
                  std::move(pi),
                  std::move(psi),
                  std::move(labels),
                  std::nullopt};
  if (t.mode == TowerMode::Special) r.nodes = special_nodes(t, r);
  return r;
}

SpecialNodes special_nodes(const Tower& t, const ForwardResult& r) {
  if (t.mode != TowerMode::Special) throw CoverError("node markers exist only for special towers");
  const std::string& b = special_label(t);
  std::array<bool, 3> flipped{};
  for (const auto& pt : t.flip_points) flipped[static_cast<std::size_t>(pt.cycle.front())] = true;
  int i = -1, j = -1, m = -1;
  for (int k = 0; k < 3; ++k) {
    if (!flipped[static_cast<std::size_t>(k)]) m = k;
    else if (i < 0) i = k;
    else j = k;
  }

  // The four Y-points over b are the orbits {T, T with blocks i and j both
  // toggled}; orbits through the same choice on block m are identified.
  auto y_point = [&](int cm, int ci) {
    Transversal tr;
    tr.choice[static_cast<std::size_t>(m)] = cm;
    tr.choice[static_cast<std::size_t>(i)] = ci;
    tr.choice[static_cast<std::size_t>(j)] = 0;
    return point_at(r.y, b, tr.index());
  };
  SpecialNodes out{{r.y, {}}, {r.x, {}}, {r.o, {}}};
  for (int cm = 0; cm < 2; ++cm) out.y.nodes.emplace_back(y_point(cm, 0), y_point(cm, 1));

  const auto& [a, c] = out.y.nodes.front();
  out.x.nodes.emplace_back(point_at(r.x, b, r.pi[static_cast<std::size_t>(a.cycle.front())]),
                           point_at(r.x, b, r.pi[static_cast<std::size_t>(c.cycle.front())]));
  const int oa = r.psi[static_cast<std::size_t>(a.cycle.front())];
  const int oc = r.psi[static_cast<std::size_t>(c.cycle.front())];
  out.o.nodes.emplace_back(point_at(r.o, b, std::min(oa, oc)), point_at(r.o, b, std::max(oa, oc)));
  return out;
}

std::optional<Permutation> iota_component_relabeling(const ForwardResult& r) {
  const auto parts = components(r.y);
  if (parts.size() != 2) return std::nullopt;
  const auto& first = parts[0];
  const auto& second = parts[1];
  if (first.cover.degree() != second.cover.degree()) return std::nullopt;
  std::vector<int> images;
  for (int s : first.sheets) {
    const auto it = std::find(second.sheets.begin(), second.sheets.end(), r.iota(s));
    if (it == second.sheets.end()) return std::nullopt;
    images.push_back(static_cast<int>(it - second.sheets.begin()));
  }
  const Permutation rho = Permutation::from_images(std::move(images));
  if (first.cover.labels() != second.cover.labels()) return std::nullopt;
  for (std::size_t k = 0; k < first.cover.branch_points().size(); ++k) {
    if (conjugate(first.cover.branch_points()[k].monodromy, rho) != second.cover.branch_points()[k].monodromy)
      return std::nullopt;
  }
  return rho;
}

BranchedCover component_tetragonal(const ForwardResult& r) {
  auto parts = components(r.y);
  if (parts.size() < 2) throw CoverError("Y is connected; there is no component tetragonal curve");
  if (!iota_component_relabeling(r))
    throw CoverError("iota does not identify the two components of Y");
  return std::move(parts.front().cover);
}

namespace {

std::string str(int v) { return std::to_string(v); }
std::string expect(int got, int want) { return "got " + str(got) + ", expected " + str(want); }

// Y-profile predicted from the local shape of the degree-6 monodromy alone.
std::vector<int> predicted_sections_profile(const Permutation& sigma, const BlockSystem& blocks) {
  const Permutation tau = block_action(sigma, blocks);
  const auto type = tau.cycle_type();
  if (type == std::vector<int>{2, 1}) return {2, 2, 1, 1, 1, 1};
  if (type == std::vector<int>{3}) return {3, 3, 1, 1};
  const int w = flip_weight(sigma, blocks);
  if (w == 1 || w == 2) return {2, 2, 2, 2};
  return {};
}

void common_checks(const Tower& t, const ForwardResult& r, CheckReport& rep) {
  bool fpf = true;
  for (int s = 0; s < 8; ++s) fpf = fpf && r.iota(s) != s;
  rep.add("iota_fixed_point_free", fpf);

  bool commutes = true, criterion = true, diagram = true, parity = true, profiles = true, orientation = true;
  std::string criterion_detail, profile_detail;
  for (const auto& bp : t.cover.branch_points()) {
    const Permutation y = r.y.monodromy_at(bp.label);
    const Permutation x = r.x.monodromy_at(bp.label);
    const Permutation o = r.o.monodromy_at(bp.label);
    commutes = commutes && (r.iota * y == y * r.iota);
    if (y.cycle_count() != 2 * x.cycle_count()) {
      criterion = false;
      criterion_detail += bp.label + " ";
    }
    for (int s = 0; s < 8; ++s) {
      diagram = diagram && r.pi[static_cast<std::size_t>(y(s))] == x(r.pi[static_cast<std::size_t>(s)]);
      diagram = diagram && r.psi[static_cast<std::size_t>(y(s))] == o(r.psi[static_cast<std::size_t>(s)]);
      for (int u = 0; u < 8; ++u)
        parity = parity && orientation_class(s ^ u) == orientation_class(y(s) ^ y(u));
    }
    const auto predicted = predicted_sections_profile(bp.monodromy, t.blocks);
    if (y.cycle_type() != predicted) {
      profiles = false;
      profile_detail += bp.label + "=" + profile_string(y.cycle_type()) + " ";
    }
    const bool odd_flip = block_action(bp.monodromy, t.blocks).is_identity() && flip_weight(bp.monodromy, t.blocks) % 2 == 1;
    orientation = orientation && (o.is_identity() != odd_flip);
  }
  std::set<std::pair<int, int>> fibre;
  for (int s = 0; s < 8; ++s) {
    diagram = diagram && r.pi[static_cast<std::size_t>(r.iota(s))] == r.pi[static_cast<std::size_t>(s)];
    fibre.emplace(r.pi[static_cast<std::size_t>(s)], r.psi[static_cast<std::size_t>(s)]);
  }
  rep.add("iota_commutes_with_monodromy", commutes);
  rep.add("fixed_point_free_criterion", criterion, criterion ? "" : "fails at " + criterion_detail);
  rep.add("diagram_commutes", diagram && fibre.size() == 8);
  rep.add("orientation_relation_equivariant", parity);
  rep.add("sections_profiles", profiles, profile_detail);
  rep.add("orientation_branched_iff_odd_flip", orientation);

  const int gt = genus(t.cover);
  const int prym = gt - t.g;
  rep.add("prym_dimension", prym == (t.mode == TowerMode::Etale ? t.g - 1 : t.g),
          "genus(C~) - g = " + str(prym));
}

bool has_fixed_sheet(const Permutation& p) {
  for (int s = 0; s < p.degree(); ++s)
    if (p(s) == s) return true;
  return false;
}

void general_checks(const Tower& t, const ForwardResult& r, CheckReport& rep) {
  const int g = t.g;
  const bool connected = r.y.is_connected();
  rep.add("y_connected", connected);
  if (!connected) return;
  const int gy = genus(r.y);
  rep.add("y_genus", gy == 2 * g + 1, expect(gy, 2 * g + 1));
  rep.add("y_total_ramification", r.y.total_ramification() == 4 * g + 16,
          expect(r.y.total_ramification(), 4 * g + 16));
  const int gx = r.x.is_connected() ? genus(r.x) : -1;
  rep.add("x_genus", gx == g + 1, expect(gx, g + 1));
  const bool o_connected = r.o.is_connected();
  rep.add("o_connected_genus_0", o_connected && genus(r.o) == 0);

  std::vector<std::string> flip_labels;
  for (const auto& pt : t.flip_points) flip_labels.push_back(pt.label);
  rep.add("o_branched_exactly_at_flips", r.o.labels() == flip_labels);

  int count22 = 0;
  bool others_fixed = true, at_flips = true;
  for (const auto& bp : r.x.branch_points()) {
    const auto type = bp.monodromy.cycle_type();
    if (type == std::vector<int>{2, 2}) {
      ++count22;
      at_flips = at_flips && std::find(flip_labels.begin(), flip_labels.end(), bp.label) != flip_labels.end();
    } else {
      others_fixed = others_fixed && has_fixed_sheet(bp.monodromy);
    }
  }
  rep.add("x_two_22_fibres", count22 == 2 && at_flips, "found " + str(count22));
  rep.add("x_other_fibres_have_fixed_sheet", others_fixed);
  rep.add("prym_dimensions_equal", gy - gx == g && genus(t.cover) - g == g,
          "genus(Y)-genus(X) = " + str(gy - gx));
}

void special_checks(const Tower& t, const ForwardResult& r, CheckReport& rep) {
  const int g = t.g;
  const auto parts = components(r.y);
  rep.add("y_two_components", parts.size() == 2, "found " + str(static_cast<int>(parts.size())));
  if (parts.size() != 2 || !r.nodes) return;

  rep.add("iota_swaps_components", iota_component_relabeling(r).has_value());
  bool genera = true, ramification = true;
  for (const auto& part : parts) {
    genera = genera && genus(part.cover) == g;
    ramification = ramification && part.cover.total_ramification() == 2 * g + 6;
  }
  rep.add("y_component_genus", genera);
  rep.add("y_component_ramification", ramification);

  const auto& nodes = r.nodes->y.nodes;
  rep.add("y_two_nodes", nodes.size() == 2);
  if (nodes.size() != 2) return;
  auto canonical = [](Node n) {
    if (n.second < n.first) std::swap(n.first, n.second);
    return n;
  };
  const Node image{transport(nodes[0].first, r.iota), transport(nodes[0].second, r.iota)};
  const bool swap_nodes = canonical(image) == canonical(nodes[1]);
  rep.add("iota_maps_d1_to_d2", swap_nodes);

  auto component_of = [&](int sheet) {
    for (std::size_t k = 0; k < parts.size(); ++k)
      if (std::find(parts[k].sheets.begin(), parts[k].sheets.end(), sheet) != parts[k].sheets.end())
        return static_cast<int>(k);
    return -1;
  };
  bool crosswise = true;
  for (const auto& n : nodes)
    crosswise = crosswise && component_of(n.first.cycle.front()) != component_of(n.second.cycle.front());

  const int pay = arithmetic_genus(r.nodes->y);
  const int pax = arithmetic_genus(r.nodes->x);
  rep.add("y_arithmetic_genus", pay == 2 * g + 1, expect(pay, 2 * g + 1));
  rep.add("x_arithmetic_genus", pax == g + 1, expect(pax, g + 1));
  rep.add("x_one_node", r.nodes->x.nodes.size() == 1);
  rep.add("prym_dimension_nodal", pay - pax == g);
  rep.add("wirtinger", crosswise && swap_nodes && r.x.is_connected());

  const auto o_parts = components(r.o);
  const auto& on = r.nodes->o.nodes;
  rep.add("o_two_components_one_node",
          o_parts.size() == 2 && on.size() == 1 && on[0].first.cycle.front() != on[0].second.cycle.front() &&
              arithmetic_genus(r.nodes->o) == 0);

  int count22 = 0;
  bool other_types = true;
  for (const auto& bp : parts.front().cover.branch_points()) {
    const auto type = bp.monodromy.cycle_type();
    if (type == std::vector<int>{2, 2}) ++count22;
    else other_types = other_types && has_fixed_sheet(bp.monodromy);
  }
  rep.add("component_tetragonal_one_22_fibre", count22 == 1 && other_types);
}

void etale_checks(const Tower& t, const ForwardResult& r, CheckReport& rep) {
  const auto parts = components(r.y);
  rep.add("y_two_components", parts.size() == 2, "found " + str(static_cast<int>(parts.size())));
  if (parts.size() != 2) return;
  bool genera = true;
  for (const auto& part : parts) genera = genera && genus(part.cover) == t.g - 1;
  rep.add("y_component_genus", genera);
  rep.add("iota_swaps_components", iota_component_relabeling(r).has_value());
  rep.add("o_unbranched", r.o.branch_points().empty());
}

}  // namespace

CheckReport verify_predictions(const Tower& t, const ForwardResult& r) {
  CheckReport rep;
  common_checks(t, r, rep);
  switch (t.mode) {
    case TowerMode::General: general_checks(t, r, rep); break;
    case TowerMode::Special: special_checks(t, r, rep); break;
    case TowerMode::Etale: etale_checks(t, r, rep); break;
  }
  return rep;
}

}  // namespace trigonal

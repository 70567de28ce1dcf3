#include "trigonal/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

namespace trigonal::io {

namespace {

Json permutation_cycles(const Permutation& p) {
  Json cycles = Json::array();
  for (const auto& c : p.cycles()) {
    if (c.size() < 2) continue;
    Json cycle = Json::array();
    for (int s : c) cycle.push_back(s + 1);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

Json images_1based(const std::vector<int>& v) {
  Json out = Json::array();
  for (int x : v) out.push_back(x + 1);
  return out;
}

Json images_1based(const Permutation& p) { return images_1based(std::vector<int>(p.images().begin(), p.images().end())); }

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw CoverError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw CoverError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

Json cover_to_json(const BranchedCover& cover) {
  Json points = Json::array();
  for (const auto& bp : cover.branch_points()) {
    Json entry;
    entry["label"] = bp.label;
    if (bp.position) entry["position"] = *bp.position;
    entry["monodromy"] = permutation_cycles(bp.monodromy);
    points.push_back(std::move(entry));
  }
  Json out;
  out["degree"] = cover.degree();
  out["branch_points"] = std::move(points);
  return out;
}

BranchedCover cover_from_json(const Json& j) {
  static const std::regex rational(R"(-?[0-9]+(/[1-9][0-9]*)?)");
  const int degree = get_field<int>(j, "degree");
  if (degree <= 0) throw CoverError("degree must be positive");
  std::vector<BranchPoint> points;
  if (!j.contains("branch_points")) throw CoverError("missing field 'branch_points'");
  const Json& list = j.at("branch_points");
  if (!list.is_array()) throw CoverError("'branch_points' must be an array");
  for (const auto& entry : list) {
    BranchPoint bp{get_field<std::string>(entry, "label"),
                   Permutation::from_cycles(degree, get_field<std::vector<std::vector<int>>>(entry, "monodromy")),
                   std::nullopt};
    if (entry.contains("position")) {
      auto pos = get_field<std::string>(entry, "position");
      if (!std::regex_match(pos, rational)) throw CoverError("position '" + pos + "' is not a rational number");
      bp.position = std::move(pos);
    }
    points.push_back(std::move(bp));
  }
  return BranchedCover(degree, std::move(points));
}

Json tower_input_to_json(const BranchedCover& cover, const BlockSystem& blocks) {
  Json out = cover_to_json(cover);
  Json bl = Json::array();
  for (const auto& p : blocks.pairs()) bl.push_back(Json::array({p[0] + 1, p[1] + 1}));
  out["blocks"] = std::move(bl);
  return out;
}

BlockSystem blocks_from_json(const Json& j) {
  const auto raw = get_field<std::vector<std::vector<int>>>(j, "blocks");
  if (raw.size() != 3) throw CoverError("'blocks' must list three pairs");
  std::array<std::array<int, 2>, 3> pairs{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (raw[i].size() != 2) throw CoverError("each block must be a pair of sheets");
    pairs[i] = {raw[i][0] - 1, raw[i][1] - 1};
  }
  return BlockSystem(pairs);
}

Json validation_to_json(const TowerValidation& v) {
  Json out;
  out["valid"] = v.ok();
  if (v.ok()) {
    out["mode"] = to_string(v.tower->mode);
    out["genus_C"] = v.tower->g;
    out["genus_C_tilde"] = genus(v.tower->cover);
    Json flips = Json::array();
    for (const auto& pt : v.tower->flip_points) flips.push_back(Json::array({pt.label, pt.cycle.front() + 1}));
    out["flip_points"] = std::move(flips);
  }
  Json errors = Json::array();
  for (const auto& e : v.errors) {
    Json err;
    err["code"] = e.code;
    if (!e.label.empty()) err["label"] = e.label;
    err["message"] = e.message;
    errors.push_back(std::move(err));
  }
  out["errors"] = std::move(errors);
  out["warnings"] = v.warnings;
  return out;
}

Json nodes_to_json(const NodalCoverModel& model) {
  Json out = Json::array();
  for (const auto& [p, q] : model.nodes) {
    out.push_back(Json::array({Json::array({p.label, cycle_index(model.normalization, p) + 1}),
                               Json::array({q.label, cycle_index(model.normalization, q) + 1})}));
  }
  return out;
}

std::vector<Node> nodes_from_json(const BranchedCover& normalization, const Json& j) {
  std::vector<Node> out;
  if (!j.is_array()) throw CoverError("node markers must be an array");
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw CoverError("node marker must be a pair of points");
    auto point = [&](const Json& p) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_number_integer())
        throw CoverError("node endpoint must be [label, cycle-index]");
      return point_from_index(normalization, p[0].get<std::string>(), p[1].get<int>() - 1);
    };
    out.emplace_back(point(pair[0]), point(pair[1]));
  }
  return out;
}

Json forward_to_json(const ForwardResult& r) {
  Json out;
  out["labels"] = r.labels;
  out["Y"] = cover_to_json(r.y);
  out["X"] = cover_to_json(r.x);
  out["O"] = cover_to_json(r.o);
  out["iota"] = images_1based(r.iota);
  out["pi"] = images_1based(r.pi);
  out["psi"] = images_1based(r.psi);
  if (r.nodes) {
    Json nodes;
    nodes["Y"] = nodes_to_json(r.nodes->y);
    nodes["X"] = nodes_to_json(r.nodes->x);
    nodes["O"] = nodes_to_json(r.nodes->o);
    out["nodes"] = std::move(nodes);
  } else {
    out["nodes"] = nullptr;
  }
  return out;
}

Json inverse_to_json(const InverseResult& r) {
  Json out = tower_input_to_json(r.c_tilde, InverseResult::blocks());
  out["kappa"] = images_1based(r.kappa);
  out["C"] = cover_to_json(r.c);
  Json fibres = Json::array();
  for (const auto& f : r.fibres) fibres.push_back(Json::array({f.label, f.type}));
  out["fibre_types"] = std::move(fibres);
  Json nodes;
  nodes["C"] = nodes_to_json(r.c_model);
  nodes["C_tilde"] = nodes_to_json(r.c_tilde_model);
  Json ramified = Json::array();
  for (const auto& n : r.nodes) ramified.push_back(n.ramified_branch < 0 ? Json(nullptr) : Json(n.ramified_branch + 1));
  nodes["ramified_branch"] = std::move(ramified);
  out["nodes"] = std::move(nodes);
  return out;
}

Json report_to_json(const CheckReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry;
    entry["id"] = c.id;
    entry["passed"] = c.passed;
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  Json out;
  out["passed"] = report.all_passed();
  out["checks"] = std::move(checks);
  return out;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CoverError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CoverError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw CoverError("cannot write '" + path + "'");
  out << dump(j);
}

}  // namespace trigonal::io

namespace trigonal::io {

Json batch_to_json(const BatchReport& report, bool include_timing) {
  Json out;
  out["suite"] = report.suite;
  out["passed"] = report.all_passed();
  out["instances_total"] = report.instances.size();
  out["instances_passed"] =
      std::count_if(report.instances.begin(), report.instances.end(), [](const InstanceResult& r) { return r.passed(); });
  Json aggregate = Json::object();
  for (const auto& [id, counts] : report.aggregate()) aggregate[id] = Json::array({counts.first, counts.second});
  out["aggregate"] = std::move(aggregate);
  Json instances = Json::array();
  for (std::size_t i = 0; i < report.instances.size(); ++i) {
    const auto& inst = report.instances[i];
    Json entry;
    entry["index"] = i;
    entry["seed"] = std::to_string(inst.seed);
    entry["genus"] = inst.genus;
    entry["mode"] = to_string(inst.mode);
    entry["passed"] = inst.passed();
    if (!inst.error.empty()) entry["error"] = inst.error;
    Json checks = Json::object();
    for (const auto& c : inst.report.checks) checks[c.id] = c.passed;
    entry["checks"] = std::move(checks);
    instances.push_back(std::move(entry));
  }
  out["instances"] = std::move(instances);
  if (include_timing) out["elapsed_seconds"] = report.elapsed_seconds;
  return out;
}

std::string batch_to_markdown(const BatchReport& report) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& inst : report.instances) passed += inst.passed();
  os << "# Batch `" << report.suite << "`\n\n"
     << passed << " / " << report.instances.size() << " instances passed\n\n"
     << "| check | passed | total |\n|---|---:|---:|\n";
  for (const auto& [id, counts] : report.aggregate())
    os << "| " << id << " | " << counts.first << " | " << counts.second << " |\n";
  for (std::size_t i = 0; i < report.instances.size(); ++i) {
    const auto& inst = report.instances[i];
    if (inst.passed()) continue;
    os << "\n- instance " << i << " (seed " << inst.seed << ", g=" << inst.genus << "): "
       << (inst.error.empty() ? "" : inst.error);
    for (const auto& f : inst.report.failures()) os << " " << f << ";";
  }
  os << "\n";
  return os.str();
}

Json coefficients_to_json(const std::vector<CoefficientChain>& chains) {
  Json rows = Json::array();
  bool all_one = true, variant_differs = false;
  for (const auto& c : chains) {
    Json row;
    row["g"] = c.g;
    Json contributions = Json::array();
    for (const auto& q : c.contributions) contributions.push_back(to_string(q));
    row["scaled_contributions"] = std::move(contributions);
    row["scaled_sum"] = to_string(c.scaled_sum);
    row["coefficient"] = to_string(c.coefficient);
    row["variant_with_2k"] = to_string(c.variant_with_2k);
    all_one = all_one && c.scaled_sum == 1;
    variant_differs = variant_differs || c.variant_with_2k != 1;
    rows.push_back(std::move(row));
  }
  Json out;
  out["all_scaled_sums_one"] = all_one;
  out["variant_with_2k_differs"] = variant_differs;
  out["rows"] = std::move(rows);
  return out;
}

}  // namespace trigonal::io

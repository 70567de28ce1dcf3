#pragma once

#include <string>

#include <json.hpp>

#include "trigonal/batch.hpp"
#include "trigonal/coefficients.hpp"
#include "trigonal/cover.hpp"
#include "trigonal/forward.hpp"
#include "trigonal/inverse.hpp"
#include "trigonal/report.hpp"
#include "trigonal/tower.hpp"

namespace trigonal::io {

// Insertion-ordered so that serialized output is canonical and byte-stable.
using Json = nlohmann::ordered_json;

/// Cover format:
///   {"degree": n, "branch_points": [{"label": s, "monodromy": [[cycle], ...]}, ...]}
/// with 1-based sheets, unlisted sheets fixed, and an optional "position"
/// string ("p" or "p/q") per branch point.
Json cover_to_json(const BranchedCover& cover);
BranchedCover cover_from_json(const Json& j);

/// Tower format: cover format plus "blocks": [[a,b],[c,d],[e,f]].
Json tower_input_to_json(const BranchedCover& cover, const BlockSystem& blocks);
BlockSystem blocks_from_json(const Json& j);

Json validation_to_json(const TowerValidation& v);

/// Node markers: [[[label, cycle-index], [label, cycle-index]], ...], cycle
/// indices 1-based among all cycles at the label ordered by smallest sheet.
Json nodes_to_json(const NodalCoverModel& model);
std::vector<Node> nodes_from_json(const BranchedCover& normalization, const Json& j);

Json forward_to_json(const ForwardResult& r);
/// Tower format for the double cover, plus the trigonal quotient, fibre
/// types and node markers.
Json inverse_to_json(const InverseResult& r);
Json report_to_json(const CheckReport& report);

/// Deterministic batch report: suite, per-instance checks keyed by id, and
/// aggregate counts. Timing is included only on request since it varies run to run.
Json batch_to_json(const BatchReport& report, bool include_timing = false);
std::string batch_to_markdown(const BatchReport& report);

/// Per-g exact values of the coefficient identities.
Json coefficients_to_json(const std::vector<CoefficientChain>& chains);

Json parse(const std::string& text);
Json read_file(const std::string& path);
/// Two-space indent plus trailing newline: the canonical on-disk form.
std::string dump(const Json& j);
void write_file(const std::string& path, const Json& j);

}  // namespace trigonal::io

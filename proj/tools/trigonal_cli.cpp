#include <CLI11.hpp>
#include <omp.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include "trigonal/batch.hpp"
#include "trigonal/coefficients.hpp"
#include "trigonal/forward.hpp"
#include "trigonal/inverse.hpp"
#include "trigonal/json_io.hpp"
#include "trigonal/sampling.hpp"

using namespace trigonal;
using io::Json;

namespace {

struct Options {
  std::string in, out, format = "json", mode = "general", suite = "full";
  int genus = 3, count = 1, gmin = 3, gmax = 8, threads = 0, max_retries = 1000, three_cycles = 0;
  std::uint64_t seed = 1;
  bool serial = false, timing = false;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw CoverError("cannot write '" + o.out + "'");
  f << text;
}

void emit_json(const Options& o, const Json& j) { emit(o, io::dump(j)); }

Json input(const Options& o) {
  if (o.in.empty()) {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return io::parse(buf.str());
  }
  return io::read_file(o.in);
}

Tower input_tower(const Options& o) {
  const Json j = input(o);
  return make_tower(io::cover_from_json(j), io::blocks_from_json(j));
}

std::string report_markdown(const std::string& title, const CheckReport& rep) {
  std::ostringstream os;
  os << "# " << title << "\n\n" << (rep.all_passed() ? "PASS" : "FAIL") << "\n\n| check | result | detail |\n|---|---|---|\n";
  for (const auto& c : rep.checks) os << "| " << c.id << " | " << (c.passed ? "pass" : "FAIL") << " | " << c.detail << " |\n";
  return os.str();
}

int emit_report(const Options& o, const std::string& title, const CheckReport& rep) {
  if (o.format == "md")
    emit(o, report_markdown(title, rep));
  else
    emit_json(o, io::report_to_json(rep));
  return rep.all_passed() ? 0 : 1;
}

void json_only(const Options& o, const std::string& command) {
  if (o.format != "json") throw CoverError("'" + command + "' only supports --format json");
}

int cmd_validate(const Options& o) {
  const Json j = input(o);
  const auto v = validate_tower(io::cover_from_json(j), io::blocks_from_json(j));
  if (o.format == "md") {
    std::ostringstream os;
    os << "# Tower validation\n\n" << (v.ok() ? "valid, mode " + to_string(v.tower->mode) : "invalid") << "\n";
    for (const auto& e : v.errors) os << "- " << e.code << (e.label.empty() ? "" : " at " + e.label) << ": " << e.message << "\n";
    for (const auto& w : v.warnings) os << "- warning: " << w << "\n";
    emit(o, os.str());
  } else {
    emit_json(o, io::validation_to_json(v));
  }
  return v.ok() ? 0 : 1;
}

int cmd_construct(const Options& o) {
  json_only(o, "construct");
  const Tower t = input_tower(o);
  const auto r = construct(t);
  emit_json(o, io::forward_to_json(r));
  return verify_predictions(t, r).all_passed() ? 0 : 1;
}

int cmd_invert(const Options& o) {
  json_only(o, "invert");
  emit_json(o, io::inverse_to_json(invert(io::cover_from_json(input(o)))));
  return 0;
}

int cmd_classify(const Options& o) {
  const auto x = TetragonalCover::from(io::cover_from_json(input(o)));
  Json fibres = Json::array();
  for (const auto& bp : x.cover.branch_points()) {
    Json f;
    f["label"] = bp.label;
    f["profile"] = bp.monodromy.cycle_type();
    f["type"] = classify_fiber(bp.monodromy);
    fibres.push_back(std::move(f));
  }
  if (o.format == "md") {
    std::ostringstream os;
    os << "# Tetragonal fibres\n\nstratum " << to_string(x.stratum) << ", genus " << genus(x.cover)
       << "\n\n| label | profile | type |\n|---|---|---:|\n";
    for (const auto& f : fibres)
      os << "| " << f["label"].get<std::string>() << " | " << profile_string(f["profile"].get<std::vector<int>>())
         << " | " << f["type"].get<int>() << " |\n";
    emit(o, os.str());
    return 0;
  }
  Json out;
  out["stratum"] = to_string(x.stratum);
  out["genus"] = genus(x.cover);
  out["fibres"] = std::move(fibres);
  emit_json(o, out);
  return 0;
}

SampleConfig base_config(const Options& o) {
  SampleConfig cfg;
  cfg.genus = o.genus;
  cfg.mode = tower_mode_from_string(o.mode);
  cfg.seed = o.seed;
  cfg.max_retries = o.max_retries;
  cfg.three_cycles = o.three_cycles;
  return cfg;
}

int cmd_sample(const Options& o) {
  json_only(o, "sample");
  if (o.count < 1) throw CoverError("--count must be positive");
  Json out = Json::array();
  for (int i = 0; i < o.count; ++i) {
    SampleConfig cfg = base_config(o);
    if (i > 0) cfg.seed = mix_seed(o.seed ^ mix_seed(static_cast<std::uint64_t>(i)));
    const Tower t = sample_tower(cfg);
    out.push_back(io::tower_input_to_json(t.cover, t.blocks));
  }
  emit_json(o, o.count == 1 ? out[0] : out);
  return 0;
}

int cmd_roundtrip(const Options& o) {
  if (o.mode == "special") return emit_report(o, "Special round trip", roundtrip_special(input_tower(o)));
  if (o.mode == "etale") return emit_report(o, "Etale round trip", roundtrip_etale(io::cover_from_json(input(o))));
  throw CoverError("roundtrip --mode must be special or etale");
}

int cmd_coefficients(const Options& o, int gmax, const std::string& report_path) {
  if (gmax < 3) throw CoverError("--gmax must be at least 3");
  std::vector<CoefficientChain> chains;
  bool ok = true;
  for (int g = 3; g <= gmax; ++g) {
    ok = ok && reduced_identity(g).sum == 1;
    chains.push_back(evaluate_chain(g));
    ok = ok && chains.back().scaled_sum == 1;
  }
  const Json j = io::coefficients_to_json(chains);
  if (!report_path.empty()) io::write_file(report_path, j);
  if (o.format == "md") {
    std::ostringstream os;
    os << "# Coefficient chain, g = 3.." << gmax << "\n\n" << (ok ? "PASS" : "FAIL")
       << "\n\n| g | scaled sum | coefficient | variant with 2^k |\n|---:|---|---|---|\n";
    for (const auto& c : chains)
      os << "| " << c.g << " | " << to_string(c.scaled_sum) << " | " << to_string(c.coefficient) << " | "
         << to_string(c.variant_with_2k) << " |\n";
    emit(o, os.str());
  } else {
    emit_json(o, j);
  }
  return ok ? 0 : 1;
}

int cmd_batch(const Options& o) {
  if (o.threads > 0) omp_set_num_threads(o.threads);
  const auto cfgs = make_configs(tower_mode_from_string(o.mode), o.gmin, o.gmax, o.count, o.seed);
  const auto rep = run_batch(o.suite, cfgs, o.serial ? Execution::Serial : Execution::Parallel);
  if (o.format == "md")
    emit(o, io::batch_to_markdown(rep));
  else
    emit_json(o, io::batch_to_json(rep, o.timing));
  return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monodromy toolkit for double covers of trigonal curves and tetragonal curves"};
  app.require_subcommand(1);
  Options o;
  std::string report_path;
  int coefficient_gmax = 200;

  auto io_flags = [&](CLI::App* sub) {
    sub->add_option("--in", o.in, "Input JSON file (default: stdin)");
    sub->add_option("--out", o.out, "Output file (default: stdout)");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "md"}));
  };
  auto sample_flags = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--genus", o.genus, "Genus of the trigonal curve");
    sub->add_option("--mode", o.mode, "Tower mode")->check(CLI::IsMember({"etale", "general", "special"}));
    sub->add_option("--count", o.count, "Number of instances");
    sub->add_option("--max-retries", o.max_retries, "Rejection sampling budget");
    sub->add_option("--three-cycles", o.three_cycles, "Trigonal branch labels with a 3-cycle");
  };

  auto* validate = app.add_subcommand("validate", "Validate a tower and report its mode");
  auto* construct_cmd = app.add_subcommand("construct", "Build the sections, quotient and orientation covers");
  auto* invert_cmd = app.add_subcommand("invert", "Invert a tetragonal curve to a tower with node markers");
  auto* classify = app.add_subcommand("classify", "Fibre types and stratum of a tetragonal curve");
  auto* sample = app.add_subcommand("sample", "Sample random towers");
  auto* roundtrip = app.add_subcommand("roundtrip", "Run the special or etale round trip");
  auto* coefficients = app.add_subcommand("verify-coefficients", "Exact check of the coefficient chain");
  auto* batch = app.add_subcommand("batch", "Run a check suite over sampled instances");

  for (auto* sub : {validate, construct_cmd, invert_cmd, classify, sample, roundtrip, coefficients, batch}) io_flags(sub);
  sample_flags(sample);
  roundtrip->add_option("--mode", o.mode, "Round trip kind")->required()->check(CLI::IsMember({"special", "etale"}));
  coefficients->add_option("--gmax", coefficient_gmax, "Largest genus");
  coefficients->add_option("--report", report_path, "Write the per-g JSON report here");
  sample_flags(batch);
  batch->add_option("--suite", o.suite, "Check suite")->check(CLI::IsMember(batch_suites()));
  batch->add_option("--gmin", o.gmin, "Smallest genus");
  batch->add_option("--gmax", o.gmax, "Largest genus");
  batch->add_option("--threads", o.threads, "OpenMP threads (0: runtime default)");
  batch->add_flag("--serial", o.serial, "Use the serial reference loop");
  batch->add_flag("--timing", o.timing, "Include elapsed time in the JSON report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(o);
    if (*construct_cmd) return cmd_construct(o);
    if (*invert_cmd) return cmd_invert(o);
    if (*classify) return cmd_classify(o);
    if (*sample) return cmd_sample(o);
    if (*roundtrip) return cmd_roundtrip(o);
    if (*coefficients) return cmd_coefficients(o, coefficient_gmax, report_path);
    if (*batch) {
      if (batch->count("--genus") && !batch->count("--gmin") && !batch->count("--gmax")) o.gmin = o.gmax = o.genus;
      return cmd_batch(o);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

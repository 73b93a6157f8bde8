// Copyright 2026 The hangar-planner Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: select, plan, sweep and compare.
//
// Exit codes: 0 success, 2 no feasible pair / uncoverable plan, 64 bad
// arguments, 74 unreadable, unwritable or malformed input files.

#ifndef HANGAR_CLI_HPP_
#define HANGAR_CLI_HPP_

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hangar/catalog.hpp"
#include "hangar/costing.hpp"
#include "hangar/error.hpp"
#include "hangar/geometry.hpp"
#include "hangar/pipeline.hpp"
#include "hangar/placement.hpp"

#ifndef PLANNER_DATA_DIR
#define PLANNER_DATA_DIR "data"
#endif

namespace hangar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitIo = 74;

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNoFeasiblePair:
    case ErrorCode::kInfeasible:
    case ErrorCode::kUncoverablePoint:
    case ErrorCode::kEmptyGrid:
      return kExitInfeasible;
    case ErrorCode::kIo:
    case ErrorCode::kMalformedSource:
    case ErrorCode::kUnsupportedCommand:
    case ErrorCode::kMissingColumn:
    case ErrorCode::kDuplicateId:
    case ErrorCode::kNonPositiveValue:
    case ErrorCode::kDegeneratePolygon:
    case ErrorCode::kSelfIntersecting:
    case ErrorCode::kZeroExtent:
      return kExitIo;
    default:
      return kExitUsage;
  }
}

inline std::string data_dir() {
  if (const char* env = std::getenv("PLANNER_DATA_DIR"); env && *env) return env;
  return PLANNER_DATA_DIR;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kIo, "cannot write '" + path + "'");
  out << content;
  if (!out) fail(ErrorCode::kIo, "failed writing '" + path + "'");
}

/// A directory holding cameras.csv and lenses.csv, or a single JSON file.
inline Catalog load_catalog_from(const std::string& where) {
  namespace fs = std::filesystem;
  if (fs::is_directory(where))
    return load_catalog(read_file((fs::path(where) / "cameras.csv").string()),
                        read_file((fs::path(where) / "lenses.csv").string()));
  return load_catalog_json(read_file(where));
}

/// A preset name resolves to <data>/presets/<name>.json; anything else is a path.
inline ScenarioSpec load_preset(const std::string& name_or_path) {
  namespace fs = std::filesystem;
  const fs::path bundled = fs::path(data_dir()) / "presets" / (name_or_path + ".json");
  if (name_or_path.find('/') == std::string::npos && name_or_path.find('.') == std::string::npos &&
      fs::exists(bundled))
    return parse_scenario_json(read_file(bundled.string()));
  return parse_scenario_json(read_file(name_or_path));
}

inline ObjectiveWeights parse_weights(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) v.push_back(parse_double(part, "weight"));
  if (v.size() != 3) fail(ErrorCode::kInvalidArgument, "--weights expects a,b,g");
  ObjectiveWeights w;
  w.alpha_distortion = v[0];
  w.beta_shutter_bonus = v[1];
  w.gamma_fps_penalty = v[2];
  validate(w);
  return w;
}

inline std::pair<double, double> parse_bay(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) fail(ErrorCode::kInvalidArgument, "--bay expects WxL, e.g. 40x50");
  const double w = parse_double(text.substr(0, x), "bay width");
  const double l = parse_double(text.substr(x + 1), "bay length");
  if (!(w > 0 && l > 0)) fail(ErrorCode::kNonPositiveInput, "bay dimensions must be positive");
  return {w, l};
}

inline bool isatty_stdout() { return ::isatty(STDOUT_FILENO) != 0; }

class Style {
 public:
  explicit Style(bool colour) : colour_(colour) {}
  std::string bold(const std::string& s) const { return colour_ ? "\x1b[1m" + s + "\x1b[0m" : s; }
  std::string red(const std::string& s) const { return colour_ ? "\x1b[31m" + s + "\x1b[0m" : s; }

 private:
  bool colour_;
};

struct Options {
  std::string preset;
  std::string polygon;
  std::string catalog;
  std::optional<double> overlap;
  std::optional<double> grid_spacing;
  std::optional<double> working_distance;
  std::optional<double> gsd_max;
  std::string weights;
  std::string budget;
  std::string bay;
  std::string out_report;
  std::string out_svg;
  std::string out_bom;
  std::string dump_instance;
  double time_budget = 60.0;
  std::uint64_t node_limit = 0;
  bool greedy = false;
  std::size_t top = 10;
  bool require_global = false;
  // sweep
  double area = 63.0;
  double swath = 1.0;
  double pass = 17.0;
  double speed = 0.5;
  double turn = 5.0;
  // compare
  std::string report;
  std::string blueprints;
};

inline void apply_overrides(ScenarioSpec& spec, const Options& o) {
  if (o.overlap) spec.overlap_fraction = *o.overlap;
  if (o.grid_spacing) spec.grid_spacing_m = *o.grid_spacing;
  if (o.working_distance) spec.working_distance_m = *o.working_distance;
  if (!o.budget.empty()) spec.budget = Money::parse(o.budget);
  if (!o.bay.empty()) {
    const auto [w, l] = parse_bay(o.bay);
    spec.bay_width_m = w;
    spec.bay_length_m = l;
  }
  if (o.require_global) spec.require_global_shutter = true;
  spec.validate();
}

inline std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

inline int cmd_select(const Options& o, std::ostream& out, std::ostream& err, const Style& st) {
  ScenarioSpec spec = load_preset(o.preset.empty() ? "defect" : o.preset);
  apply_overrides(spec, o);
  const Catalog cat = load_catalog_from(o.catalog);
  const ObjectiveWeights w = o.weights.empty() ? ObjectiveWeights{} : parse_weights(o.weights);
  SelectionRequirement req = spec.requirement();
  if (o.gsd_max) {
    if (!(*o.gsd_max >= 0)) fail(ErrorCode::kInvalidArgument, "--gsd-max must be >= 0");
    req.gsd_max_mm_px = *o.gsd_max;
  }
  FeasibilityStats stats;
  auto pairs = feasible_pairs(cat.cameras, cat.lenses, req, &stats);
  if (pairs.empty()) {
    err << st.red("no feasible pair") << ": " << stats.summary() << '\n';
    return kExitInfeasible;
  }
  pairs = rank_pairs(std::move(pairs), w);
  out << st.bold("scenario " + spec.name) << ": gsd_max=" << fixed(req.gsd_max_mm_px, 4)
      << " mm/px, working distance=" << fixed(mm_to_m(req.working_distance_mm), 3) << " m, " << stats.summary()
      << '\n';
  std::vector<std::vector<std::string>> rows = {
      {"rank", "camera", "lens", "O", "C_total", "D", "GSD_w", "GSD_h", "shutter", "fps"}};
  for (std::size_t k = 0; k < std::min(o.top, pairs.size()); ++k) {
    const auto& p = pairs[k];
    rows.push_back({std::to_string(k + 1), p.camera.id, p.lens.id, fixed(p.objective, 2), p.total_cost.display(),
                    fixed(p.fov.distortion, 4), fixed(p.fov.gsd_w_mm_px, 4), fixed(p.fov.gsd_h_mm_px, 4),
                    std::string(to_string(p.camera.shutter)), fixed(p.camera.fps, 1)});
  }
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], detail::columns(r[c]));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string line;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      line += (c ? "  " : "");
      line += c == 1 || c == 2 || c == 8 ? detail::pad_right(rows[r][c], width[c]) : detail::pad_left(rows[r][c], width[c]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << (r == 0 ? st.bold(line) : line) << '\n';
  }
  return kExitOk;
}

inline int cmd_plan(const Options& o, std::ostream& out, std::ostream& err, const Style& st) {
  if (o.preset.empty()) fail(ErrorCode::kInvalidArgument, "plan needs --preset");
  if (o.polygon.empty()) fail(ErrorCode::kInvalidArgument, "plan needs --polygon");
  ScenarioSpec spec = load_preset(o.preset);
  apply_overrides(spec, o);
  const std::string outline_src = read_file(o.polygon);
  const Catalog cat = load_catalog_from(o.catalog);
  const ObjectiveWeights w = o.weights.empty() ? ObjectiveWeights{} : parse_weights(o.weights);
  if (!(o.time_budget > 0)) fail(ErrorCode::kInvalidArgument, "--time-budget must be positive");
  const Polygon outline = load_outline(outline_src, perimeter_format_for(o.polygon), spec.aircraft_length_m);

  PlanOptions opts;
  opts.time_budget_s = o.time_budget;
  opts.node_limit = o.node_limit;
  opts.solver = o.greedy ? SolverKind::kGreedy : SolverKind::kExact;
  const PlanReport rep = plan_scenario(spec, cat, outline, w, opts);

  if (!o.out_report.empty()) write_file(o.out_report, to_json(rep).dump(2) + "\n");
  if (!o.out_svg.empty()) write_file(o.out_svg, render_layout_svg(rep));
  if (!o.out_bom.empty()) write_file(o.out_bom, to_text_table(rep.bom));
  if (!o.dump_instance.empty()) write_file(o.dump_instance, instance_to_json(rep.instance).dump() + "\n");

  for (const auto& wmsg : rep.warnings) err << st.red("warning") << ": " << wmsg << '\n';
  for (const auto& n : rep.notes) err << "note: " << n << '\n';
  out << "pair=" << rep.pair.camera.id << "+" << rep.pair.lens.id << " grid=" << rep.instance.num_points()
      << " candidates=" << rep.instance.num_columns() << '\n';
  out << "cameras=" << rep.solution.count << " cost=" << rep.bom.total.display()
      << " optimal=" << (rep.solution.optimal ? "true" : "false") << '\n';
  return kExitOk;
}

inline int cmd_sweep(const Options& o, std::ostream& out) {
  const SweepPlan s = sweep_time(o.area, o.swath, o.speed, o.pass, o.turn);
  out << "passes=" << s.pass_count << " total_s=" << fixed(s.total_time_s, 1) << " total_min="
      << fixed(s.total_time_s / 60.0, 2) << '\n';
  return kExitOk;
}

inline int cmd_compare(const Options& o, std::ostream& out) {
  const std::string bp_path =
      o.blueprints.empty() ? (std::filesystem::path(data_dir()) / "blueprints.json").string() : o.blueprints;
  const auto refs = parse_blueprints_json(read_file(bp_path));
  std::optional<BillOfMaterials> bom;
  std::string name = "Vision plan";
  if (!o.report.empty()) {
    try {
      const auto j = nlohmann::json::parse(read_file(o.report));
      BillOfMaterials b;
      b.camera_count = j.at("bom").at("camera_count").get<std::int64_t>();
      b.switch_count = j.at("bom").at("switch_count").get<std::int64_t>();
      b.total = Money::from_pence(j.at("bom").at("total").at("pence").get<std::int64_t>());
      name = "Vision (" + j.at("scenario").at("name").get<std::string>() + ")";
      bom = b;
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::kMalformedSource, std::string("report JSON: ") + e.what());
    }
  }
  out << to_text_table(compare_blueprints(bom, refs, name));
  return kExitOk;
}

/// Runs the tool; returns the process exit status.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  Options o;
  o.catalog = (std::filesystem::path(data_dir()) / "catalog").string();
  CLI::App app{"Camera-lens selection and ceiling camera placement for aircraft hangars", "planner"};
  app.require_subcommand(1, 1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--preset", o.preset, "Scenario preset name or JSON path");
    sub->add_option("--catalog", o.catalog, "Catalog directory (cameras.csv, lenses.csv) or JSON file");
    sub->add_option("--working-distance", o.working_distance, "Working distance in metres");
    sub->add_option("--weights", o.weights, "Objective weights alpha,beta,gamma");
    sub->add_option("--budget", o.budget, "Maximum camera+lens cost in GBP");
    sub->add_flag("--global-shutter", o.require_global, "Require a global shutter");
    sub->add_option("--overlap", o.overlap, "Footprint overlap fraction in [0,1)");
    sub->add_option("--grid-spacing", o.grid_spacing, "Target grid spacing in metres");
    sub->add_option("--bay", o.bay, "Bay size WxL in metres");
  };

  auto* select = app.add_subcommand("select", "Rank feasible camera-lens pairs");
  add_common(select);
  select->add_option("--top", o.top, "Number of pairs to list")->check(CLI::PositiveNumber);
  select->add_option("--gsd-max", o.gsd_max, "Override the maximum GSD (mm/px)");

  auto* plan = app.add_subcommand("plan", "Select a pair and place cameras over the outline");
  add_common(plan);
  plan->add_option("--polygon", o.polygon, "Aircraft outline (.svg or .json)");
  plan->add_option("--out-report", o.out_report, "Write the report JSON here");
  plan->add_option("--out-svg", o.out_svg, "Write the layout SVG here");
  plan->add_option("--out-bom", o.out_bom, "Write the BOM text table here");
  plan->add_option("--dump-instance", o.dump_instance, "Write the coverage instance JSON here");
  plan->add_option("--time-budget", o.time_budget, "Solver time budget in seconds");
  plan->add_option("--node-limit", o.node_limit, "Solver node budget (0 = unlimited)");
  plan->add_flag("--greedy", o.greedy, "Use the greedy solver instead of the exact one");

  auto* sweep = app.add_subcommand("sweep", "Boustrophedon drone sweep time estimate");
  sweep->add_option("--area", o.area, "Surface area in m^2");
  sweep->add_option("--swath", o.swath, "Swath width in m");
  sweep->add_option("--pass", o.pass, "Pass length in m");
  sweep->add_option("--speed", o.speed, "Speed in m/s");
  sweep->add_option("--turn", o.turn, "Seconds per 180 degree turn");

  auto* compare = app.add_subcommand("compare", "Compare a plan against the MoCap/UWB references");
  compare->add_option("--report", o.report, "Plan report JSON");
  compare->add_option("--blueprints", o.blueprints, "Reference blueprint JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  const char* no_colour = std::getenv("PLANNER_NO_COLOR");
  const Style st(!(no_colour && *no_colour) && &out == &std::cout && isatty_stdout());
  try {
    if (*select) return cmd_select(o, out, err, st);
    if (*plan) return cmd_plan(o, out, err, st);
    if (*sweep) return cmd_sweep(o, out);
    return cmd_compare(o, out);
  } catch (const PlannerError& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace hangar::cli

#endif  // HANGAR_CLI_HPP_

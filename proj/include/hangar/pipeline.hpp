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

// Scenario presets and the end-to-end plan: pair selection, outline
// preparation, placement, verification, motion check and costing. Also the
// boustrophedon sweep-time estimate and the SVG layout renderer.

#ifndef HANGAR_PIPELINE_HPP_
#define HANGAR_PIPELINE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hangar/catalog.hpp"
#include "hangar/costing.hpp"
#include "hangar/error.hpp"
#include "hangar/geometry.hpp"
#include "hangar/optics.hpp"
#include "hangar/placement.hpp"
#include "hangar/units.hpp"

namespace hangar {

enum class ScenarioMode {
  kDefectDetection,
  kDroneLocalisation,
  kGroundRobotLocalisation,
  kVehicleMonitoring,
  kHumanMonitoring,
};

inline constexpr std::string_view to_string(ScenarioMode m) {
  switch (m) {
    case ScenarioMode::kDefectDetection: return "defect_detection";
    case ScenarioMode::kDroneLocalisation: return "drone_localisation";
    case ScenarioMode::kGroundRobotLocalisation: return "ground_robot_localisation";
    case ScenarioMode::kVehicleMonitoring: return "vehicle_monitoring";
    case ScenarioMode::kHumanMonitoring: return "human_monitoring";
  }
  return "unknown";
}

inline ScenarioMode scenario_mode_from(std::string_view s) {
  for (auto m : {ScenarioMode::kDefectDetection, ScenarioMode::kDroneLocalisation,
                 ScenarioMode::kGroundRobotLocalisation, ScenarioMode::kVehicleMonitoring,
                 ScenarioMode::kHumanMonitoring})
    if (to_string(m) == s) return m;
  fail(ErrorCode::kMalformedSource, "unknown scenario mode '" + std::string(s) + "'");
}

struct Band {
  double low = 0.0;
  double high = 0.0;
  double mid() const { return (low + high) / 2; }
};

struct ScenarioSpec {
  std::string name;
  ScenarioMode mode = ScenarioMode::kDefectDetection;
  std::string description;
  double target_w_mm = 0.0;
  double target_h_mm = 0.0;
  double target_px = 0.0;  // pixels required across the target's smaller side
  double ceiling_height_m = 23.0;
  Band target_height_band_m;
  std::optional<Band> velocity_band_m_s;
  std::optional<double> working_distance_m;  // overrides ceiling - band midpoint
  double coverage_cell_w_m = 0.0;
  double coverage_cell_h_m = 0.0;
  double overlap_fraction = 0.0;
  double envelope_offset_m = 0.0;
  CoverageSide coverage_side = CoverageSide::kInternal;
  double grid_spacing_m = kDefaultGridSpacing;
  // External coverage region. Without an explicit bay the lattice is seeded
  // over the bounding rectangle of the buffered outline.
  std::optional<double> bay_width_m;   // across the aircraft (y)
  std::optional<double> bay_length_m;  // along the aircraft (x)
  double aircraft_length_m = 37.6;
  bool require_global_shutter = false;
  std::optional<Money> budget;
  std::optional<double> cabling_m;
  // Published figures for the same scenario, used only for diagnostic notes.
  std::optional<std::size_t> reference_cameras;
  std::optional<Money> reference_cost;

  double gsd_max_mm_px() const { return std::min(target_w_mm, target_h_mm) / target_px; }

  double working_distance() const {
    return working_distance_m ? *working_distance_m : ceiling_height_m - target_height_band_m.mid();
  }

  void validate() const {
    auto positive = [](double v, const char* what) {
      if (!(v > 0) || !std::isfinite(v)) fail(ErrorCode::kNonPositiveInput, std::string(what) + " must be positive");
    };
    positive(target_w_mm, "target width");
    positive(target_h_mm, "target height");
    positive(target_px, "target pixels");
    positive(coverage_cell_w_m, "coverage cell width");
    positive(coverage_cell_h_m, "coverage cell height");
    positive(grid_spacing_m, "grid spacing");
    positive(aircraft_length_m, "aircraft length");
    positive(working_distance(), "working distance");
    if (target_height_band_m.low > target_height_band_m.high)
      fail(ErrorCode::kInvalidArgument, "target height band is reversed");
    if (!working_distance_m) positive(ceiling_height_m - target_height_band_m.high, "ceiling clearance");
    if (velocity_band_m_s && velocity_band_m_s->low > velocity_band_m_s->high)
      fail(ErrorCode::kInvalidArgument, "velocity band is reversed");
    if (!(overlap_fraction >= 0 && overlap_fraction < 1))
      fail(ErrorCode::kInvalidArgument, "overlap fraction must lie in [0, 1)");
    if (!(envelope_offset_m >= 0)) fail(ErrorCode::kNonPositiveInput, "envelope offset must be >= 0");
    if (bay_width_m.has_value() != bay_length_m.has_value())
      fail(ErrorCode::kInvalidArgument, "bay needs both width and length");
    if (bay_width_m) {
      positive(*bay_width_m, "bay width");
      positive(*bay_length_m, "bay length");
    }
  }

  SelectionRequirement requirement() const {
    return {m_to_mm(coverage_cell_w_m), m_to_mm(coverage_cell_h_m), gsd_max_mm_px(), m_to_mm(working_distance()),
            budget, require_global_shutter};
  }
};

namespace detail {
inline Band band_from(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) fail(ErrorCode::kMalformedSource, "a band must be [low, high]");
  return {j[0].get<double>(), j[1].get<double>()};
}
inline std::pair<double, double> pair_from(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) fail(ErrorCode::kMalformedSource, std::string(what) + " must be [a, b]");
  return {j[0].get<double>(), j[1].get<double>()};
}
inline Money money_from(const nlohmann::json& j) {
  return j.is_string() ? Money::parse(j.get<std::string>()) : Money::parse(j.dump());
}
}  // namespace detail

inline ScenarioSpec parse_scenario_json(std::string_view source) {
  ScenarioSpec s;
  try {
    const auto j = nlohmann::json::parse(source);
    s.name = j.at("name").get<std::string>();
    s.mode = scenario_mode_from(j.at("mode").get<std::string>());
    s.description = j.value("description", "");
    std::tie(s.target_w_mm, s.target_h_mm) = detail::pair_from(j.at("target_mm"), "target_mm");
    s.target_px = j.at("target_px").get<double>();
    s.ceiling_height_m = j.value("ceiling_height_m", 23.0);
    s.target_height_band_m = detail::band_from(j.at("target_height_band_m"));
    if (j.contains("velocity_band_m_s") && !j["velocity_band_m_s"].is_null())
      s.velocity_band_m_s = detail::band_from(j["velocity_band_m_s"]);
    if (j.contains("working_distance_m") && !j["working_distance_m"].is_null())
      s.working_distance_m = j["working_distance_m"].get<double>();
    std::tie(s.coverage_cell_w_m, s.coverage_cell_h_m) = detail::pair_from(j.at("coverage_cell_m"), "coverage_cell_m");
    s.overlap_fraction = j.at("overlap_fraction").get<double>();
    s.envelope_offset_m = j.at("envelope_offset_m").get<double>();
    const auto side = j.value("coverage_side", std::string("internal"));
    if (side != "internal" && side != "external")
      fail(ErrorCode::kMalformedSource, "coverage_side must be internal or external");
    s.coverage_side = side == "external" ? CoverageSide::kExternal : CoverageSide::kInternal;
    s.grid_spacing_m = j.value("grid_spacing_m", kDefaultGridSpacing);
    if (j.contains("bay_m") && !j["bay_m"].is_null())
      std::tie(s.bay_width_m, s.bay_length_m) = detail::pair_from(j["bay_m"], "bay_m");
    s.aircraft_length_m = j.value("aircraft_length_m", 37.6);
    s.require_global_shutter = j.value("require_global_shutter", false);
    if (j.contains("budget_gbp") && !j["budget_gbp"].is_null()) s.budget = detail::money_from(j["budget_gbp"]);
    if (j.contains("cabling_m") && !j["cabling_m"].is_null()) s.cabling_m = j["cabling_m"].get<double>();
    if (j.contains("reference")) {
      const auto& r = j["reference"];
      if (r.contains("cameras")) s.reference_cameras = r["cameras"].get<std::size_t>();
      if (r.contains("cost_gbp")) s.reference_cost = detail::money_from(r["cost_gbp"]);
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kMalformedSource, std::string("scenario JSON: ") + e.what());
  }
  s.validate();
  return s;
}

/// Parses an outline and brings it to metres. Pixel outlines (every SVG, and
/// JSON with "units":"px") are scaled so their x-extent is the aircraft length.
inline Polygon load_outline(std::string_view source, PerimeterFormat format, double aircraft_length_m) {
  Polygon p = parse_perimeter(source, format);
  bool metres = false;
  if (format == PerimeterFormat::kJsonVertices) {
    try {
      const auto j = nlohmann::json::parse(source);
      metres = j.is_object() && j.value("units", std::string("px")) == "m";
    } catch (const nlohmann::json::exception&) {
    }
  }
  return metres ? p : scale_to_length(p, aircraft_length_m);
}

/// External coverage extent: the explicit bay centred on the outline's
/// bounding box, or else the bounding rectangle of the buffered outline.
inline Rect bay_rect(const ScenarioSpec& spec, const Polygon& outline, const BufferedRegion& region) {
  if (spec.bay_width_m) return Rect::centred(outline.bounds().centre(), *spec.bay_length_m, *spec.bay_width_m);
  return region.bounds();
}

// ---------------------------------------------------------------------------
// Plan
// ---------------------------------------------------------------------------

enum class SolverKind { kExact, kGreedy };

struct PlanOptions {
  double time_budget_s = 60.0;
  std::uint64_t node_limit = 0;
  SolverKind solver = SolverKind::kExact;
  double arc_tolerance = kDefaultArcTolerance;
};

struct MotionCheck {
  double velocity_m_s = 0.0;
  double fps = 0.0;
  double distance_per_frame_m = 0.0;
  double threshold_m = 0.0;  // half the target's smaller side
  bool ok = true;
};

struct PlanReport {
  ScenarioSpec scenario;
  RankedPair pair;
  FeasibilityStats feasibility;
  double gsd_max_mm_px = 0.0;
  double working_distance_m = 0.0;
  Footprint optical_footprint;
  Footprint footprint;  // optical footprint capped at the coverage cell
  Polygon outline;
  BufferedRegion region;
  std::optional<Rect> bay;
  CoverageInstance instance;
  PlacementSolution solution;
  std::optional<MotionCheck> motion;
  BillOfMaterials bom;
  std::vector<std::string> warnings;
  std::vector<std::string> notes;

  std::vector<Vec2> camera_positions() const {
    std::vector<Vec2> out;
    for (std::size_t c : solution.chosen) out.push_back(instance.candidates.centres[c]);
    return out;
  }
};

inline MotionCheck motion_check(const ScenarioSpec& spec, double fps) {
  MotionCheck m;
  m.velocity_m_s = spec.velocity_band_m_s->high;
  m.fps = fps;
  m.distance_per_frame_m = distance_per_frame(m.velocity_m_s, fps);
  m.threshold_m = mm_to_m(std::min(spec.target_w_mm, spec.target_h_mm)) / 2;
  m.ok = m.distance_per_frame_m <= m.threshold_m;
  return m;
}

inline PlanReport plan_scenario(const ScenarioSpec& spec, const Catalog& catalog, const Polygon& outline_m,
                                const ObjectiveWeights& weights = {}, const PlanOptions& opts = {}) {
  spec.validate();
  PlanReport rep;
  rep.scenario = spec;
  rep.outline = outline_m;
  rep.gsd_max_mm_px = spec.gsd_max_mm_px();
  rep.working_distance_m = spec.working_distance();

  auto with_context = [&](const PlannerError& e) {
    return PlannerError(e.code(), "scenario '" + spec.name + "': " + e.what());
  };

  try {
    auto pairs = feasible_pairs(catalog.cameras, catalog.lenses, spec.requirement(), &rep.feasibility);
    if (pairs.empty()) fail(ErrorCode::kNoFeasiblePair, rep.feasibility.summary());
    rep.pair = rank_pairs(std::move(pairs), weights).front();

    rep.optical_footprint = ground_footprint(rep.pair.camera.sensor, rep.pair.lens.focal_mm, rep.working_distance_m);
    rep.footprint = rep.optical_footprint;
    rep.footprint.width_m = std::min(rep.footprint.width_m, spec.coverage_cell_w_m);
    rep.footprint.length_m = std::min(rep.footprint.length_m, spec.coverage_cell_h_m);

    rep.region = buffer_polygon(outline_m, spec.envelope_offset_m, opts.arc_tolerance);
    if (spec.coverage_side == CoverageSide::kExternal) rep.bay = bay_rect(spec, outline_m, rep.region);
    const TargetGrid grid = discretize(rep.region, spec.grid_spacing_m, spec.coverage_side, rep.bay);
    const CandidateLattice lattice = candidate_lattice(rep.region, rep.footprint, spec.overlap_fraction, rep.bay);
    rep.instance = build_coverage_matrix(grid, lattice);
    rep.solution = opts.solver == SolverKind::kExact
                       ? solve_set_cover_exact(rep.instance, opts.time_budget_s, opts.node_limit)
                       : solve_set_cover_greedy(rep.instance);
    const CoverageReport check = verify_solution(rep.instance, rep.solution);
    if (!check.ok())
      fail(ErrorCode::kInfeasible, std::to_string(check.violations.size()) + " target points left uncovered");

    if (spec.velocity_band_m_s) rep.motion = motion_check(spec, rep.pair.camera.fps);

    std::vector<LineItem> extras;
    if (spec.cabling_m) extras.push_back(cabling_item(*spec.cabling_m));
    rep.bom = bill_of_materials(rep.pair, static_cast<std::int64_t>(rep.solution.count), SwitchSpec{}, extras);
  } catch (const PlannerError& e) {
    throw with_context(e);
  }

  for (const auto& w : catalog.warnings)
    if (w.rfind(rep.pair.camera.id + ":", 0) == 0) rep.warnings.push_back(w);
  if (auto w = bandwidth_warning(rep.pair.camera)) rep.warnings.push_back(*w);
  if (rep.motion && !rep.motion->ok) {
    std::ostringstream os;
    os << "target moves " << rep.motion->distance_per_frame_m << " m per frame at " << rep.motion->velocity_m_s
       << " m/s, more than half its size (" << rep.motion->threshold_m << " m)";
    rep.warnings.push_back(os.str());
  }
  if (!rep.solution.optimal)
    rep.warnings.push_back("solver stopped at its budget; camera count is an upper bound (lower bound " +
                           std::to_string(rep.solution.stats.lower_bound) + ")");
  if (spec.reference_cameras && *spec.reference_cameras != rep.solution.count)
    rep.notes.push_back("published layout uses " + std::to_string(*spec.reference_cameras) + " cameras; this plan uses " +
                        std::to_string(rep.solution.count));
  if (spec.reference_cost) {
    // Recompute the published figure from its own camera count and the catalog prices.
    if (spec.reference_cameras) {
      const BillOfMaterials ref = bill_of_materials(rep.pair, static_cast<std::int64_t>(*spec.reference_cameras));
      const double rel = std::abs(static_cast<double>(ref.total.pence() - spec.reference_cost->pence())) /
                         static_cast<double>(spec.reference_cost->pence());
      if (rel > 0.10)
        rep.notes.push_back("published estimate " + spec.reference_cost->display() + " disagrees with " +
                            std::to_string(*spec.reference_cameras) + " x catalog pair + switches = " +
                            ref.total.display());
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Sweep estimate
// ---------------------------------------------------------------------------

struct SweepPlan {
  double area_m2 = 0.0;
  double swath_m = 0.0;
  double speed_m_s = 0.0;
  double pass_length_m = 0.0;
  std::int64_t pass_count = 0;
  double turn_time_s = 0.0;
  double total_time_s = 0.0;
};

inline SweepPlan sweep_time(double area_m2, double swath_m, double speed_m_s, double pass_length_m = 17.0,
                            double turn_time_s = 5.0) {
  for (auto [v, what] : {std::pair{area_m2, "area"}, std::pair{swath_m, "swath"}, std::pair{speed_m_s, "speed"},
                         std::pair{pass_length_m, "pass length"}})
    if (!(v > 0) || !std::isfinite(v)) fail(ErrorCode::kNonPositiveInput, std::string(what) + " must be positive");
  if (!(turn_time_s >= 0)) fail(ErrorCode::kNonPositiveInput, "turn time must be >= 0");
  SweepPlan s{area_m2, swath_m, speed_m_s, pass_length_m, 0, turn_time_s, 0.0};
  s.pass_count = static_cast<std::int64_t>(std::ceil(area_m2 / (swath_m * pass_length_m) - 1e-9));
  s.total_time_s = static_cast<double>(s.pass_count) * pass_length_m / speed_m_s +
                   static_cast<double>(s.pass_count - 1) * turn_time_s;
  return s;
}

// ---------------------------------------------------------------------------
// Serialisation
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const ScenarioSpec& s) {
  nlohmann::json j{{"name", s.name},
                   {"mode", std::string(to_string(s.mode))},
                   {"target_mm", {s.target_w_mm, s.target_h_mm}},
                   {"target_px", s.target_px},
                   {"ceiling_height_m", s.ceiling_height_m},
                   {"target_height_band_m", {s.target_height_band_m.low, s.target_height_band_m.high}},
                   {"coverage_cell_m", {s.coverage_cell_w_m, s.coverage_cell_h_m}},
                   {"overlap_fraction", s.overlap_fraction},
                   {"envelope_offset_m", s.envelope_offset_m},
                   {"coverage_side", std::string(to_string(s.coverage_side))},
                   {"grid_spacing_m", s.grid_spacing_m},
                   {"aircraft_length_m", s.aircraft_length_m},
                   {"require_global_shutter", s.require_global_shutter}};
  j["velocity_band_m_s"] = s.velocity_band_m_s
                               ? nlohmann::json{s.velocity_band_m_s->low, s.velocity_band_m_s->high}
                               : nlohmann::json(nullptr);
  j["bay_m"] = s.bay_width_m ? nlohmann::json{*s.bay_width_m, *s.bay_length_m} : nlohmann::json(nullptr);
  j["working_distance_m"] = s.working_distance_m ? nlohmann::json(*s.working_distance_m) : nlohmann::json(nullptr);
  j["budget"] = s.budget ? money_json(*s.budget) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json footprint_json(const Footprint& f) {
  return {{"width_m", f.width_m}, {"length_m", f.length_m}, {"theta_h_deg", f.theta_h_deg},
          {"theta_v_deg", f.theta_v_deg}};
}

/// Report JSON. Wall-clock figures are left out so identical inputs give
/// identical bytes.
inline nlohmann::json to_json(const PlanReport& r) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["scenario"] = to_json(r.scenario);
  j["selection"] = {{"camera", r.pair.camera.id},
                    {"lens", r.pair.lens.id},
                    {"shutter", std::string(to_string(r.pair.camera.shutter))},
                    {"fps", r.pair.camera.fps},
                    {"focal_mm", r.pair.lens.focal_mm},
                    {"objective", r.pair.objective},
                    {"pair_cost", money_json(r.pair.total_cost)},
                    {"fov_m", {r.pair.fov.width_m, r.pair.fov.height_m}},
                    {"gsd_mm_px", {r.pair.fov.gsd_w_mm_px, r.pair.fov.gsd_h_mm_px}},
                    {"distortion", r.pair.fov.distortion},
                    {"feasibility", r.feasibility.summary()}};
  j["gsd_max_mm_px"] = r.gsd_max_mm_px;
  j["working_distance_m"] = r.working_distance_m;
  j["optical_footprint"] = footprint_json(r.optical_footprint);
  j["footprint"] = footprint_json(r.footprint);
  j["grid_points"] = r.instance.num_points();
  j["candidates"] = r.instance.candidates.centres.size();
  j["useful_candidates"] = r.instance.num_columns();
  nlohmann::json pos = nlohmann::json::array();
  for (std::size_t k = 0; k < r.solution.chosen.size(); ++k) {
    const Vec2 c = r.instance.candidates.centres[r.solution.chosen[k]];
    pos.push_back({{"index", k}, {"candidate", r.solution.chosen[k]}, {"x_m", c.x}, {"y_m", c.y}});
  }
  j["solution"] = {{"count", r.solution.count},
                   {"optimal", r.solution.optimal},
                   {"lower_bound", r.solution.stats.lower_bound},
                   {"cover_histogram", r.solution.cover_histogram},
                   {"positions", pos}};
  if (r.motion)
    j["motion_check"] = {{"velocity_m_s", r.motion->velocity_m_s},
                         {"fps", r.motion->fps},
                         {"distance_per_frame_m", r.motion->distance_per_frame_m},
                         {"threshold_m", r.motion->threshold_m},
                         {"ok", r.motion->ok}};
  else
    j["motion_check"] = nullptr;
  j["bom"] = to_json(r.bom);
  j["warnings"] = r.warnings;
  j["notes"] = r.notes;
  return j;
}

// ---------------------------------------------------------------------------
// SVG layout
// ---------------------------------------------------------------------------

namespace detail {
class SvgFrame {
 public:
  SvgFrame(Rect world, double margin_m) : world_(world.expanded(margin_m, margin_m)) {}

  std::string x(double xm) const { return fmt((xm - world_.x_min) * 100.0); }
  std::string y(double ym) const { return fmt((world_.y_max - ym) * 100.0); }
  std::string len(double m) const { return fmt(m * 100.0); }
  std::string width() const { return fmt(world_.width() * 100.0); }
  std::string height() const { return fmt(world_.height() * 100.0); }

  std::string path(const Polygon& p) const {
    std::string d;
    for (std::size_t i = 0; i < p.size(); ++i) d += (i ? " L " : "M ") + x(p[i].x) + " " + y(p[i].y);
    return d + " Z";
  }

  static std::string fmt(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << (std::abs(v) < 0.005 ? 0.0 : v);
    return os.str();
  }

 private:
  Rect world_;
};
}  // namespace detail

inline std::string render_layout_svg(const PlanReport& r) {
  Rect world = r.region.bounds().united(r.outline.bounds());
  if (r.bay) world = world.united(*r.bay);
  for (const Vec2& c : r.camera_positions())
    world = world.united(Rect::centred(c, r.footprint.width_m, r.footprint.length_m));
  const detail::SvgFrame f(world, 1.0);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<!-- hangar-planner layout: 1 user unit = 0.01 m; drawing origin at the bottom-left corner "
        "of the plotted extent, y up in metres (flipped into SVG's y-down frame). -->\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.width() << "\" height=\"" << f.height()
     << "\" viewBox=\"0 0 " << f.width() << " " << f.height() << "\">\n";
  os << "<title>" << r.scenario.name << ": " << r.solution.count << " cameras, " << r.pair.camera.id << " + "
     << r.pair.lens.id << "</title>\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << f.width() << "\" height=\"" << f.height() << "\" fill=\"white\"/>\n";
  if (r.bay)
    os << "<rect id=\"bay\" x=\"" << f.x(r.bay->x_min) << "\" y=\"" << f.y(r.bay->y_max) << "\" width=\""
       << f.len(r.bay->width()) << "\" height=\"" << f.len(r.bay->height())
       << "\" fill=\"none\" stroke=\"#555555\" stroke-width=\"6\"/>\n";
  os << "<path id=\"outline\" d=\"" << f.path(r.outline) << "\" fill=\"#cfe8cf\" stroke=\"#1b5e20\" "
     << "stroke-width=\"4\"/>\n";
  os << "<path id=\"envelope\" d=\"" << f.path(r.region.boundary)
     << "\" fill=\"none\" stroke=\"#2e7d32\" stroke-width=\"3\" stroke-dasharray=\"12 8\"/>\n";
  os << "<g id=\"grid\" fill=\"#444444\">\n";
  for (const Vec2& p : r.instance.points.points)
    os << "<circle cx=\"" << f.x(p.x) << "\" cy=\"" << f.y(p.y) << "\" r=\"3\"/>\n";
  os << "</g>\n<g id=\"footprints\" fill=\"#1e88e5\" fill-opacity=\"0.15\" stroke=\"#1565c0\" stroke-width=\"3\">\n";
  const auto cams = r.camera_positions();
  for (const Vec2& c : cams) {
    const Rect fp = Rect::centred(c, r.footprint.width_m, r.footprint.length_m);
    os << "<rect x=\"" << f.x(fp.x_min) << "\" y=\"" << f.y(fp.y_max) << "\" width=\"" << f.len(fp.width())
       << "\" height=\"" << f.len(fp.height()) << "\"/>\n";
  }
  os << "</g>\n<g id=\"cameras\" font-family=\"sans-serif\" font-size=\"40\" text-anchor=\"middle\">\n";
  for (std::size_t k = 0; k < cams.size(); ++k) {
    os << "<circle cx=\"" << f.x(cams[k].x) << "\" cy=\"" << f.y(cams[k].y) << "\" r=\"10\" fill=\"#c62828\"/>\n";
    os << "<text x=\"" << f.x(cams[k].x) << "\" y=\"" << f.y(cams[k].y + 0.25) << "\">" << k << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace hangar

#endif  // HANGAR_PIPELINE_HPP_

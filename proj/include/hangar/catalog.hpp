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

// Camera and lens market data, the feasibility filter applied to every
// camera-lens pair, and the weighted objective used to rank survivors.

#ifndef HANGAR_CATALOG_HPP_
#define HANGAR_CATALOG_HPP_

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "hangar/error.hpp"
#include "hangar/optics.hpp"
#include "hangar/units.hpp"

namespace hangar {

enum class Shutter { kGlobal, kRolling };

inline constexpr std::string_view to_string(Shutter s) {
  return s == Shutter::kGlobal ? "global" : "rolling";
}

struct CameraSpec {
  std::string id;
  std::string brand;
  SensorGeometry sensor;
  std::string format;
  double megapixels = 0.0;
  Shutter shutter = Shutter::kGlobal;
  double fps = 0.0;
  double gige_gbps = 0.0;
  Money price;
};

struct LensSpec {
  std::string id;
  std::string description;
  double focal_mm = 0.0;
  Money price;
};

struct Catalog {
  std::vector<CameraSpec> cameras;
  std::vector<LensSpec> lenses;
  std::vector<std::string> warnings;

  const CameraSpec* find_camera(std::string_view id) const {
    for (const auto& c : cameras)
      if (c.id == id) return &c;
    return nullptr;
  }
  const LensSpec* find_lens(std::string_view id) const {
    for (const auto& l : lenses)
      if (l.id == id) return &l;
    return nullptr;
  }
};

inline constexpr double kPitchWarningThreshold = 0.05;

/// Uncompressed 8-bit stream rate against the GigE link, as a warning string.
inline std::optional<std::string> bandwidth_warning(const CameraSpec& cam) {
  const double bits_per_s = cam.sensor.res_w_px * cam.sensor.res_h_px * cam.fps * 8.0;
  const double link = cam.gige_gbps * 1e9;
  if (link > 0 && bits_per_s > link) {
    std::ostringstream os;
    os << cam.id << ": " << bits_per_s / 1e9 << " Gbit/s at " << cam.fps
       << " fps exceeds the " << cam.gige_gbps << " Gbit/s link";
    return os.str();
  }
  return std::nullopt;
}

namespace detail {

inline std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"' && cur.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  for (auto& f : fields) {
    while (!f.empty() && std::isspace(static_cast<unsigned char>(f.back()))) f.pop_back();
    std::size_t k = 0;
    while (k < f.size() && std::isspace(static_cast<unsigned char>(f[k]))) ++k;
    f.erase(0, k);
  }
  return fields;
}

// Rows as column-name -> value maps, validated against the required header.
inline std::vector<std::map<std::string, std::string>> read_csv(std::string_view source,
                                                                const std::vector<std::string>& required,
                                                                std::string_view what) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : source) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  std::erase_if(lines, [](const std::string& l) {
    return std::all_of(l.begin(), l.end(), [](unsigned char c) { return std::isspace(c); });
  });
  if (lines.empty()) fail(ErrorCode::kMissingColumn, std::string(what) + " CSV is empty");
  const auto header = split_csv_line(lines[0]);
  for (const auto& col : required)
    if (std::find(header.begin(), header.end(), col) == header.end())
      fail(ErrorCode::kMissingColumn, std::string(what) + " CSV lacks column '" + col + "'");
  std::vector<std::map<std::string, std::string>> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv_line(lines[i]);
    if (fields.size() != header.size())
      fail(ErrorCode::kMalformedSource, std::string(what) + " CSV line " + std::to_string(i + 1) +
                                            " has " + std::to_string(fields.size()) + " fields, expected " +
                                            std::to_string(header.size()));
    std::map<std::string, std::string> row;
    for (std::size_t k = 0; k < header.size(); ++k) row[header[k]] = fields[k];
    rows.push_back(std::move(row));
  }
  return rows;
}

inline double positive_field(const std::map<std::string, std::string>& row, const std::string& col,
                             const std::string& id) {
  const double v = parse_double(row.at(col), col);
  if (!(v > 0)) fail(ErrorCode::kNonPositiveValue, id + ": " + col + " must be positive");
  return v;
}

inline Money positive_price(const std::string& text, const std::string& id) {
  const Money m = Money::parse(text);
  if (m.pence() <= 0) fail(ErrorCode::kNonPositiveValue, id + ": price must be positive");
  return m;
}

inline Shutter parse_shutter(std::string s, const std::string& id) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "global") return Shutter::kGlobal;
  if (s == "rolling") return Shutter::kRolling;
  fail(ErrorCode::kMalformedSource, id + ": shutter must be global or rolling");
}

inline void check_camera(const CameraSpec& c, std::vector<std::string>& warnings) {
  if (c.sensor.pixel_um > 0 && c.sensor.pitch_mismatch() > kPitchWarningThreshold) {
    std::ostringstream os;
    os << c.id << ": sensor width / resolution gives " << c.sensor.width_mm / c.sensor.res_w_px * 1000.0
       << " um pixels, catalog says " << c.sensor.pixel_um << " um";
    warnings.push_back(os.str());
  }
}

inline void finish_catalog(Catalog& cat) {
  std::set<std::string> seen;
  for (const auto& c : cat.cameras)
    if (!seen.insert(c.id).second) fail(ErrorCode::kDuplicateId, "duplicate camera id '" + c.id + "'");
  seen.clear();
  for (const auto& l : cat.lenses)
    if (!seen.insert(l.id).second) fail(ErrorCode::kDuplicateId, "duplicate lens id '" + l.id + "'");
  for (const auto& c : cat.cameras) check_camera(c, cat.warnings);
}

}  // namespace detail

inline const std::vector<std::string>& camera_csv_columns() {
  static const std::vector<std::string> cols = {"id",        "brand",     "sensor_w_mm", "sensor_h_mm", "res_w_px",
                                                "res_h_px",  "format",    "mpix",        "shutter",     "pixel_um",
                                                "fps",       "gige_gbps", "price_gbp"};
  return cols;
}

inline const std::vector<std::string>& lens_csv_columns() {
  static const std::vector<std::string> cols = {"id", "description", "focal_mm", "price_gbp"};
  return cols;
}

inline std::vector<CameraSpec> parse_cameras_csv(std::string_view source) {
  std::vector<CameraSpec> out;
  for (const auto& row : detail::read_csv(source, camera_csv_columns(), "camera")) {
    CameraSpec c;
    c.id = row.at("id");
    if (c.id.empty()) fail(ErrorCode::kMalformedSource, "camera row with empty id");
    c.brand = row.at("brand");
    c.sensor.width_mm = detail::positive_field(row, "sensor_w_mm", c.id);
    c.sensor.height_mm = detail::positive_field(row, "sensor_h_mm", c.id);
    c.sensor.res_w_px = detail::positive_field(row, "res_w_px", c.id);
    c.sensor.res_h_px = detail::positive_field(row, "res_h_px", c.id);
    c.sensor.pixel_um = detail::positive_field(row, "pixel_um", c.id);
    c.format = row.at("format");
    c.megapixels = detail::positive_field(row, "mpix", c.id);
    c.shutter = detail::parse_shutter(row.at("shutter"), c.id);
    c.fps = detail::positive_field(row, "fps", c.id);
    c.gige_gbps = detail::positive_field(row, "gige_gbps", c.id);
    c.price = detail::positive_price(row.at("price_gbp"), c.id);
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<LensSpec> parse_lenses_csv(std::string_view source) {
  std::vector<LensSpec> out;
  for (const auto& row : detail::read_csv(source, lens_csv_columns(), "lens")) {
    LensSpec l;
    l.id = row.at("id");
    if (l.id.empty()) fail(ErrorCode::kMalformedSource, "lens row with empty id");
    l.description = row.at("description");
    l.focal_mm = detail::positive_field(row, "focal_mm", l.id);
    l.price = detail::positive_price(row.at("price_gbp"), l.id);
    out.push_back(std::move(l));
  }
  return out;
}

/// Loads the camera and lens tables from their CSV contents.
inline Catalog load_catalog(std::string_view cameras_csv, std::string_view lenses_csv) {
  Catalog cat;
  cat.cameras = parse_cameras_csv(cameras_csv);
  cat.lenses = parse_lenses_csv(lenses_csv);
  detail::finish_catalog(cat);
  return cat;
}

/// JSON variant: {"cameras": [{...same keys as the CSV...}], "lenses": [...]}.
inline Catalog load_catalog_json(std::string_view source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(source);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kMalformedSource, std::string("catalog JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("cameras") || !doc.contains("lenses"))
    fail(ErrorCode::kMissingColumn, "catalog JSON needs \"cameras\" and \"lenses\" arrays");
  // Re-express each object as a CSV row so both paths share validation.
  auto as_csv = [](const nlohmann::json& arr, const std::vector<std::string>& cols) {
    std::string text;
    for (std::size_t k = 0; k < cols.size(); ++k) text += (k ? "," : "") + cols[k];
    text += '\n';
    for (const auto& obj : arr) {
      for (std::size_t k = 0; k < cols.size(); ++k) {
        if (!obj.contains(cols[k])) fail(ErrorCode::kMissingColumn, "catalog entry lacks '" + cols[k] + "'");
        const auto& v = obj[cols[k]];
        std::string cell = v.is_string() ? v.get<std::string>() : v.dump();
        std::string quoted = "\"";
        for (char c : cell) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
        text += (k ? "," : "") + quoted + "\"";
      }
      text += '\n';
    }
    return text;
  };
  Catalog cat;
  cat.cameras = parse_cameras_csv(as_csv(doc["cameras"], camera_csv_columns()));
  cat.lenses = parse_lenses_csv(as_csv(doc["lenses"], lens_csv_columns()));
  detail::finish_catalog(cat);
  return cat;
}

// ---------------------------------------------------------------------------
// Selection
// ---------------------------------------------------------------------------

struct SelectionRequirement {
  double target_w_mm = 0.0;
  double target_h_mm = 0.0;
  double gsd_max_mm_px = 0.0;
  double working_distance_mm = 0.0;
  std::optional<Money> budget;
  bool require_global_shutter = false;
};

/// Defaults keep hardware cost dominant; the shutter bonus outweighs the
/// typical spread of the distortion term.
struct ObjectiveWeights {
  double alpha_distortion = 50.0;
  double beta_shutter_bonus = 200.0;
  double gamma_fps_penalty = 10.0;
  double fps_low = 20.0;
  double fps_high = 50.0;
};

struct RankedPair {
  CameraSpec camera;
  LensSpec lens;
  FieldOfView fov;
  Money total_cost;
  double objective = 0.0;
};

/// How many pairs individually satisfied each constraint.
struct FeasibilityStats {
  std::size_t total = 0;
  std::size_t passed_coverage = 0;
  std::size_t passed_resolution = 0;
  std::size_t passed_budget = 0;
  std::size_t passed_shutter = 0;
  std::size_t feasible = 0;

  std::string summary() const {
    std::ostringstream os;
    os << feasible << " of " << total << " pairs feasible; " << passed_coverage << " pairs passed coverage, "
       << passed_resolution << " pairs passed resolution, " << passed_budget << " pairs passed budget, "
       << passed_shutter << " pairs passed shutter";
    return os.str();
  }
};

namespace detail {
struct PairChecks {
  bool coverage, resolution, budget, shutter;
  bool all() const { return coverage && resolution && budget && shutter; }
};

inline PairChecks check_pair(const CameraSpec& cam, const LensSpec& lens, const FieldOfView& fov,
                             const SelectionRequirement& req) {
  const Money total = cam.price + lens.price;
  return {m_to_mm(fov.width_m) >= req.target_w_mm && m_to_mm(fov.height_m) >= req.target_h_mm,
          fov.gsd_w_mm_px <= req.gsd_max_mm_px && fov.gsd_h_mm_px <= req.gsd_max_mm_px,
          !req.budget || total <= *req.budget,
          !req.require_global_shutter || cam.shutter == Shutter::kGlobal};
}
}  // namespace detail

/// Evaluates every camera x lens pair; returns the survivors in catalog order.
inline std::vector<RankedPair> feasible_pairs(const std::vector<CameraSpec>& cams,
                                              const std::vector<LensSpec>& lenses,
                                              const SelectionRequirement& req,
                                              FeasibilityStats* stats = nullptr) {
  FeasibilityStats local;
  std::vector<RankedPair> out;
  for (const auto& cam : cams) {
    for (const auto& lens : lenses) {
      const FieldOfView fov = fov_at_distance(cam.sensor, lens.focal_mm, req.working_distance_mm);
      const auto checks = detail::check_pair(cam, lens, fov, req);
      ++local.total;
      local.passed_coverage += checks.coverage;
      local.passed_resolution += checks.resolution;
      local.passed_budget += checks.budget;
      local.passed_shutter += checks.shutter;
      if (checks.all()) {
        ++local.feasible;
        out.push_back({cam, lens, fov, cam.price + lens.price, 0.0});
      }
    }
  }
  if (stats) *stats = local;
  return out;
}

inline double fps_penalty(double fps, double low, double high) {
  return std::max(0.0, low - fps) + std::max(0.0, fps - high);
}

inline double objective(const RankedPair& p, const ObjectiveWeights& w) {
  const double bonus = p.camera.shutter == Shutter::kGlobal ? w.beta_shutter_bonus : 0.0;
  return p.total_cost.pounds() + w.alpha_distortion * p.fov.distortion - bonus +
         w.gamma_fps_penalty * fps_penalty(p.camera.fps, w.fps_low, w.fps_high);
}

inline void validate(const ObjectiveWeights& w) {
  if (w.alpha_distortion < 0 || w.beta_shutter_bonus < 0 || w.gamma_fps_penalty < 0)
    fail(ErrorCode::kInvalidArgument, "objective weights must be >= 0");
  if (w.fps_low > w.fps_high) fail(ErrorCode::kInvalidArgument, "fps band low exceeds high");
}

/// Ascending objective; ties fall back to total cost, then camera and lens id.
inline std::vector<RankedPair> rank_pairs(std::vector<RankedPair> pairs, const ObjectiveWeights& w) {
  if (pairs.empty()) fail(ErrorCode::kEmptyInput, "nothing to rank");
  validate(w);
  for (auto& p : pairs) p.objective = objective(p, w);
  std::stable_sort(pairs.begin(), pairs.end(), [](const RankedPair& a, const RankedPair& b) {
    return std::tie(a.objective, a.total_cost, a.camera.id, a.lens.id) <
           std::tie(b.objective, b.total_cost, b.camera.id, b.lens.id);
  });
  return pairs;
}

inline RankedPair select_best(const std::vector<CameraSpec>& cams, const std::vector<LensSpec>& lenses,
                              const SelectionRequirement& req, const ObjectiveWeights& w) {
  FeasibilityStats stats;
  auto pairs = feasible_pairs(cams, lenses, req, &stats);
  if (pairs.empty()) fail(ErrorCode::kNoFeasiblePair, stats.summary());
  return rank_pairs(std::move(pairs), w).front();
}

}  // namespace hangar

#endif  // HANGAR_CATALOG_HPP_

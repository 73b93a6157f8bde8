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

// Bills of materials in exact pence, and the comparison against the
// commercial MoCap / UWB reference systems.

#ifndef HANGAR_COSTING_HPP_
#define HANGAR_COSTING_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hangar/catalog.hpp"
#include "hangar/error.hpp"
#include "hangar/units.hpp"

namespace hangar {

struct LineItem {
  std::string description;
  Money unit_price;
  std::int64_t quantity = 0;

  Money subtotal() const { return unit_price * quantity; }
};

struct SwitchSpec {
  std::string description = "24-port PoE gigabit switch";
  std::int64_t ports = 24;
  Money price = Money::from_pounds(417);
};

struct BillOfMaterials {
  std::vector<LineItem> lines;
  std::int64_t camera_count = 0;
  std::int64_t switch_count = 0;
  Money total;
};

inline constexpr std::int64_t switches_needed(std::int64_t cameras, std::int64_t ports) {
  return (cameras + ports - 1) / ports;
}

/// Optional flat cabling line: whole 100 m reels of UTP Cat6 at £60 each.
inline LineItem cabling_item(double metres, Money price_per_100m = Money::from_pounds(60)) {
  if (!(metres > 0)) fail(ErrorCode::kNonPositiveQuantity, "cable length must be positive");
  return {"UTP Cat6 cable, 100 m reel", price_per_100m,
          static_cast<std::int64_t>(std::ceil(metres / 100.0 - 1e-9))};
}

inline BillOfMaterials bill_of_materials(const CameraSpec& camera, const LensSpec& lens, std::int64_t camera_count,
                                         const SwitchSpec& sw = {}, const std::vector<LineItem>& extras = {}) {
  if (camera_count < 1) fail(ErrorCode::kNonPositiveQuantity, "camera count must be at least 1");
  if (sw.ports < 1) fail(ErrorCode::kNonPositiveQuantity, "ports per switch must be at least 1");
  BillOfMaterials bom;
  bom.camera_count = camera_count;
  bom.switch_count = switches_needed(camera_count, sw.ports);
  bom.lines.push_back({"Camera " + camera.id, camera.price, camera_count});
  bom.lines.push_back({"Lens " + lens.id, lens.price, camera_count});
  bom.lines.push_back({sw.description, sw.price, bom.switch_count});
  for (const auto& e : extras) {
    if (e.quantity < 0) fail(ErrorCode::kNonPositiveQuantity, "negative quantity for '" + e.description + "'");
    bom.lines.push_back(e);
  }
  for (const auto& l : bom.lines) bom.total += l.subtotal();
  return bom;
}

inline BillOfMaterials bill_of_materials(const RankedPair& pair, std::int64_t camera_count, const SwitchSpec& sw = {},
                                         const std::vector<LineItem>& extras = {}) {
  return bill_of_materials(pair.camera, pair.lens, camera_count, sw, extras);
}

inline nlohmann::json money_json(Money m) { return {{"pence", m.pence()}, {"display", m.display()}}; }

inline nlohmann::json to_json(const BillOfMaterials& bom) {
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& l : bom.lines)
    lines.push_back({{"description", l.description},
                     {"unit_price", money_json(l.unit_price)},
                     {"quantity", l.quantity},
                     {"subtotal", money_json(l.subtotal())}});
  return {{"lines", lines},
          {"camera_count", bom.camera_count},
          {"switch_count", bom.switch_count},
          {"total", money_json(bom.total)}};
}

namespace detail {
// Display width of a UTF-8 string (the pound sign is two bytes, one column).
inline std::size_t columns(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}
inline std::string pad_left(const std::string& s, std::size_t w) {
  const std::size_t n = columns(s);
  return n >= w ? s : std::string(w - n, ' ') + s;
}
inline std::string pad_right(const std::string& s, std::size_t w) {
  const std::size_t n = columns(s);
  return n >= w ? s : s + std::string(w - n, ' ');
}
}  // namespace detail

inline std::string to_text_table(const BillOfMaterials& bom) {
  std::vector<std::vector<std::string>> cells = {{"Item", "Unit price", "Qty", "Subtotal"}};
  for (const auto& l : bom.lines)
    cells.push_back({l.description, l.unit_price.display(), std::to_string(l.quantity), l.subtotal().display()});
  cells.push_back({"Total", "", "", bom.total.display()});
  std::vector<std::size_t> width(4, 0);
  for (const auto& row : cells)
    for (std::size_t k = 0; k < 4; ++k) width[k] = std::max(width[k], detail::columns(row[k]));
  std::ostringstream os;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    if (r + 1 == cells.size()) {
      std::size_t total_w = width[0] + width[1] + width[2] + width[3] + 6;
      os << std::string(total_w, '-') << '\n';
    }
    os << detail::pad_right(cells[r][0], width[0]) << "  " << detail::pad_left(cells[r][1], width[1]) << "  "
       << detail::pad_left(cells[r][2], width[2]) << "  " << detail::pad_left(cells[r][3], width[3]) << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Reference blueprints
// ---------------------------------------------------------------------------

struct ReferenceBlueprint {
  std::string name;
  std::string application;
  std::string equipment;
  Money cost_low;
  Money cost_high;
  std::string maturity;

  Money midpoint() const { return Money::from_pence((cost_low.pence() + cost_high.pence()) / 2); }
};

inline std::vector<ReferenceBlueprint> parse_blueprints_json(std::string_view source) {
  std::vector<ReferenceBlueprint> out;
  try {
    const auto doc = nlohmann::json::parse(source);
    for (const auto& b : doc.at("blueprints")) {
      auto money = [](const nlohmann::json& v) {
        return v.is_string() ? Money::parse(v.get<std::string>()) : Money::parse(v.dump());
      };
      ReferenceBlueprint bp{b.at("name").get<std::string>(),
                            b.value("application", ""),
                            b.value("equipment", ""),
                            money(b.at("cost_low_gbp")),
                            money(b.at("cost_high_gbp")),
                            b.value("maturity", "")};
      if (bp.cost_low > bp.cost_high)
        fail(ErrorCode::kMalformedSource, "blueprint '" + bp.name + "' has cost_low above cost_high");
      out.push_back(std::move(bp));
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kMalformedSource, std::string("blueprint JSON: ") + e.what());
  }
  return out;
}

struct BlueprintComparison {
  struct Row {
    std::string name;
    std::string application;
    Money cost;                  // midpoint for references
    std::optional<double> ratio;  // plan cost / this row's cost
    bool is_plan = false;
  };
  std::vector<Row> rows;
};

/// Places the plan (if any) beside each reference. Ratios involving a zero
/// cost on either side are left empty.
inline BlueprintComparison compare_blueprints(const std::optional<BillOfMaterials>& bom,
                                              const std::vector<ReferenceBlueprint>& refs,
                                              const std::string& plan_name = "Vision plan") {
  BlueprintComparison cmp;
  const Money plan_total = bom ? bom->total : Money{};
  if (bom) {
    std::string app = std::to_string(bom->camera_count) + " cameras + " + std::to_string(bom->switch_count) +
                      " switches";
    cmp.rows.push_back({plan_name, app, plan_total, std::nullopt, true});
    if (plan_total.pence() > 0) cmp.rows.back().ratio = 1.0;
  }
  for (const auto& r : refs) {
    BlueprintComparison::Row row{r.name, r.application, r.midpoint(), std::nullopt, false};
    if (bom && plan_total.pence() > 0 && row.cost.pence() > 0)
      row.ratio = static_cast<double>(plan_total.pence()) / static_cast<double>(row.cost.pence());
    cmp.rows.push_back(std::move(row));
  }
  return cmp;
}

inline std::string thousands(Money m) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << m.pounds() / 1000.0;
  return os.str();
}

inline std::string to_text_table(const BlueprintComparison& cmp) {
  std::vector<std::vector<std::string>> cells = {{"Blueprint", "Application", "Cost (£k)", "Plan / blueprint"}};
  for (const auto& r : cmp.rows) {
    std::string ratio = "-";
    if (r.ratio) {
      std::ostringstream os;
      os << std::fixed << std::setprecision(3) << *r.ratio;
      ratio = os.str();
    }
    cells.push_back({r.name, r.application, thousands(r.cost), ratio});
  }
  std::vector<std::size_t> width(4, 0);
  for (const auto& row : cells)
    for (std::size_t k = 0; k < 4; ++k) width[k] = std::max(width[k], detail::columns(row[k]));
  std::ostringstream os;
  for (const auto& row : cells)
    os << detail::pad_right(row[0], width[0]) << "  " << detail::pad_right(row[1], width[1]) << "  "
       << detail::pad_left(row[2], width[2]) << "  " << detail::pad_left(row[3], width[3]) << '\n';
  return os.str();
}

inline nlohmann::json to_json(const BlueprintComparison& cmp) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : cmp.rows) {
    nlohmann::json j{{"name", r.name}, {"application", r.application}, {"cost", money_json(r.cost)},
                     {"is_plan", r.is_plan}};
    j["ratio"] = r.ratio ? nlohmann::json(*r.ratio) : nlohmann::json(nullptr);
    rows.push_back(std::move(j));
  }
  return {{"rows", rows}};
}

}  // namespace hangar

#endif  // HANGAR_COSTING_HPP_

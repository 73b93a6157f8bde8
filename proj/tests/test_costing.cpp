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

#include <cmath>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "hangar/costing.hpp"
#include "support.hpp"

namespace hangar {
namespace {

using testing::data_path;
using testing::slurp;

CameraSpec camera(const std::string& id, std::int64_t pounds) {
  CameraSpec c;
  c.id = id;
  c.price = Money::from_pounds(pounds);
  return c;
}

LensSpec lens(const std::string& id, std::int64_t pounds) { return {id, "", 12, Money::from_pounds(pounds)}; }

std::vector<ReferenceBlueprint> bundled_blueprints() { return parse_blueprints_json(slurp(data_path("blueprints.json"))); }

TEST(BillOfMaterials, DefectLayout) {
  const auto bom = bill_of_materials(camera("Allied(7)", 1024), lens("Techspec(7)", 518), 49);
  EXPECT_EQ(bom.switch_count, 3);
  EXPECT_EQ(bom.total, Money::from_pounds(76809));
  ASSERT_EQ(bom.lines.size(), 3u);
  EXPECT_EQ(bom.lines[0].subtotal(), Money::from_pounds(50176));
  EXPECT_EQ(bom.lines[1].subtotal(), Money::from_pounds(25382));
  EXPECT_EQ(bom.lines[2].subtotal(), Money::from_pounds(1251));
}

TEST(BillOfMaterials, SingleUnitWithFreeSwitch) {
  SwitchSpec free_switch;
  free_switch.price = Money{};
  EXPECT_EQ(bill_of_materials(camera("Lucid(11)", 1840), lens("Techspec(3)", 221), 1, free_switch).total,
            Money::from_pounds(2061));
  EXPECT_EQ(bill_of_materials(camera("X", 300), lens("Y", 200), 1, free_switch).total, Money::from_pounds(500));
}

TEST(BillOfMaterials, MonitoringLayout) {
  const auto bom = bill_of_materials(camera("Allied(3)", 1627), lens("Techspec(2)", 221), 9);
  EXPECT_EQ(bom.switch_count, 1);
  EXPECT_EQ(bom.total, Money::from_pounds(17049));
}

TEST(BillOfMaterials, SwitchLaw) {
  for (std::int64_t n = 1; n <= 500; ++n) {
    EXPECT_EQ(switches_needed(n, 24), static_cast<std::int64_t>(std::ceil(static_cast<double>(n) / 24.0)));
    EXPECT_GE(switches_needed(n, 24) * 24, n);
    EXPECT_LT((switches_needed(n, 24) - 1) * 24, n);
  }
  EXPECT_EQ(switches_needed(24, 24), 1);
  EXPECT_EQ(switches_needed(25, 24), 2);
}

TEST(BillOfMaterials, TotalIsSumOfLinesAndMonotone) {
  Money prev;
  const std::vector<LineItem> extras = {cabling_item(250)};
  for (std::int64_t n = 1; n <= 100; ++n) {
    const auto bom = bill_of_materials(camera("C", 733), lens("L", 221), n, SwitchSpec{}, extras);
    Money sum;
    for (const auto& l : bom.lines) sum += l.unit_price * l.quantity;
    EXPECT_EQ(bom.total, sum);
    EXPECT_GT(bom.total, prev);
    prev = bom.total;
  }
}

TEST(BillOfMaterials, Cabling) {
  const LineItem c = cabling_item(250);
  EXPECT_EQ(c.quantity, 3);
  EXPECT_EQ(c.subtotal(), Money::from_pounds(180));
  EXPECT_EQ(cabling_item(300).quantity, 3);
  EXPECT_PLANNER_ERROR(cabling_item(0), ErrorCode::kNonPositiveQuantity);
}

TEST(BillOfMaterials, Errors) {
  EXPECT_PLANNER_ERROR(bill_of_materials(camera("C", 1), lens("L", 1), 0), ErrorCode::kNonPositiveQuantity);
  SwitchSpec no_ports;
  no_ports.ports = 0;
  EXPECT_PLANNER_ERROR(bill_of_materials(camera("C", 1), lens("L", 1), 3, no_ports), ErrorCode::kNonPositiveQuantity);
  EXPECT_PLANNER_ERROR(bill_of_materials(camera("C", 1), lens("L", 1), 3, SwitchSpec{}, {{"bad", Money{}, -1}}),
                       ErrorCode::kNonPositiveQuantity);
}

TEST(BillOfMaterials, TextTableAndJson) {
  const auto bom = bill_of_materials(camera("Allied(7)", 1024), lens("Techspec(7)", 518), 49);
  const std::string table = to_text_table(bom);
  EXPECT_NE(table.find("\xC2\xA3" "76,809.00"), std::string::npos);
  EXPECT_NE(table.find("Camera Allied(7)"), std::string::npos);
  std::istringstream lines(table);
  std::string line;
  std::size_t width = 0;
  while (std::getline(lines, line)) {
    if (width == 0) width = detail::columns(line);
    EXPECT_EQ(detail::columns(line), width) << line;
  }
  const auto j = to_json(bom);
  EXPECT_EQ(j["total"]["pence"], 7680900);
  EXPECT_EQ(j["switch_count"], 3);
  EXPECT_EQ(j["lines"].size(), 3u);
}

TEST(Blueprints, BundledReferences) {
  const auto refs = bundled_blueprints();
  ASSERT_EQ(refs.size(), 3u);
  EXPECT_EQ(refs[0].midpoint(), Money::from_pounds(2500000));
  EXPECT_EQ(refs[1].midpoint(), Money::from_pounds(190000));
  EXPECT_EQ(refs[2].name, "UWB");
  EXPECT_EQ(refs[2].midpoint(), Money::from_pounds(49000));
  EXPECT_PLANNER_ERROR(
      parse_blueprints_json(R"({"blueprints":[{"name":"X","cost_low_gbp":"5","cost_high_gbp":"4"}]})"),
      ErrorCode::kMalformedSource);
  EXPECT_PLANNER_ERROR(parse_blueprints_json("[]"), ErrorCode::kMalformedSource);
}

TEST(Blueprints, Ratios) {
  const auto refs = bundled_blueprints();
  const auto defect = bill_of_materials(camera("Allied(7)", 1024), lens("Techspec(7)", 518), 49);
  const auto cmp = compare_blueprints(defect, refs);
  ASSERT_EQ(cmp.rows.size(), 4u);
  EXPECT_TRUE(cmp.rows[0].is_plan);
  EXPECT_EQ(cmp.rows[0].cost, Money::from_pounds(76809));
  EXPECT_NEAR(*cmp.rows[3].ratio, 1.57, 0.005);

  BillOfMaterials drone;
  drone.total = Money::from_pounds(16212);
  drone.camera_count = 15;
  drone.switch_count = 1;
  EXPECT_NEAR(*compare_blueprints(drone, refs).rows[2].ratio, 0.085, 0.0005);
}

TEST(Blueprints, NoPlanSuppressesRatios) {
  const auto cmp = compare_blueprints(std::nullopt, bundled_blueprints());
  ASSERT_EQ(cmp.rows.size(), 3u);
  for (const auto& r : cmp.rows) {
    EXPECT_FALSE(r.ratio.has_value());
    EXPECT_FALSE(r.is_plan);
  }
  BillOfMaterials zero;
  for (const auto& r : compare_blueprints(zero, bundled_blueprints()).rows) EXPECT_FALSE(r.ratio.has_value());
  ReferenceBlueprint free_ref{"Free", "", "", Money{}, Money{}, ""};
  const auto defect = bill_of_materials(camera("C", 100), lens("L", 100), 2);
  EXPECT_FALSE(compare_blueprints(defect, {free_ref}).rows[1].ratio.has_value());
}

TEST(Blueprints, TextTable) {
  const auto table = to_text_table(compare_blueprints(std::nullopt, bundled_blueprints()));
  EXPECT_NE(table.find("UWB"), std::string::npos);
  EXPECT_NE(table.find("49.0"), std::string::npos);
  EXPECT_NE(table.find("2500.0"), std::string::npos);
  EXPECT_NE(table.find("190.0"), std::string::npos);
  EXPECT_EQ(to_json(compare_blueprints(std::nullopt, bundled_blueprints()))["rows"][0]["ratio"], nullptr);
}

}  // namespace
}  // namespace hangar

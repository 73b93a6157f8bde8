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

#include <cstdint>
#include <random>
#include <string>

#include <boost/rational.hpp>
#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "hangar/units.hpp"

namespace hangar {
namespace {

TEST(Money, ParsesCatalogSpellings) {
  EXPECT_EQ(Money::parse("535").pence(), 53500);
  EXPECT_EQ(Money::parse("1024.5").pence(), 102450);
  EXPECT_EQ(Money::parse("1,024.50").pence(), 102450);
  EXPECT_EQ(Money::parse("\xC2\xA3" "76,809").pence(), 7680900);
  EXPECT_EQ(Money::parse("0.07").pence(), 7);
  EXPECT_EQ(Money::parse("-3.10").pence(), -310);
}

TEST(Money, RejectsMalformedAmounts) {
  EXPECT_PLANNER_ERROR(Money::parse(""), ErrorCode::kMalformedSource);
  EXPECT_PLANNER_ERROR(Money::parse("12a"), ErrorCode::kMalformedSource);
  EXPECT_PLANNER_ERROR(Money::parse("1.234"), ErrorCode::kMalformedSource);
  EXPECT_PLANNER_ERROR(Money::parse("\xC2\xA3"), ErrorCode::kMalformedSource);
}

TEST(Money, DisplayGroupsThousands) {
  EXPECT_EQ(Money::from_pounds(76809).display(), "\xC2\xA3" "76,809.00");
  EXPECT_EQ(Money::from_pence(5).display(), "\xC2\xA3" "0.05");
  EXPECT_EQ(Money::from_pounds(2500000).display(), "\xC2\xA3" "2,500,000.00");
  EXPECT_EQ(Money::from_pence(-123456).display(), "-\xC2\xA3" "1,234.56");
  EXPECT_EQ(Money::from_pounds(999).display(), "\xC2\xA3" "999.00");
}

TEST(Money, DisplayParsesBack) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> pence(-1'000'000'000, 1'000'000'000);
  for (int i = 0; i < 20000; ++i) {
    const Money m = Money::from_pence(pence(rng));
    EXPECT_EQ(Money::parse(m.display()), m);
  }
}

// Totals of random bills computed in pence must equal the same sums done in
// exact rational pounds from the decimal strings.
TEST(Money, RandomBillsMatchRationalOracle) {
  using Q = boost::rational<std::int64_t>;
  std::mt19937_64 rng(20260);
  std::uniform_int_distribution<int> pounds(0, 9999), pence(0, 99), qty(0, 200), lines(1, 6);
  for (int bill = 0; bill < 1'000'000; ++bill) {
    Money total;
    Q oracle(0);
    const int n = lines(rng);
    for (int k = 0; k < n; ++k) {
      const int p = pounds(rng), c = pence(rng), q = qty(rng);
      const std::string text = std::to_string(p) + "." + (c < 10 ? "0" : "") + std::to_string(c);
      total += Money::parse(text) * q;
      oracle += (Q(p) + Q(c, 100)) * q;
    }
    ASSERT_EQ(Q(total.pence(), 100), oracle) << "bill " << bill;
  }
}

TEST(Rect, CentredAndUnited) {
  const Rect r = Rect::centred({1, 2}, 4, 2);
  EXPECT_EQ(r, (Rect{-1, 1, 3, 3}));
  EXPECT_TRUE(r.contains(Vec2{3, 3}));
  EXPECT_FALSE(r.contains(Vec2{3.0001, 3}));
  EXPECT_EQ(r.united(Rect{0, 0, 5, 1}), (Rect{-1, 0, 5, 3}));
  EXPECT_EQ(r.expanded(1, 2), (Rect{-2, -1, 4, 5}));
  EXPECT_TRUE(r.expanded(1, 1).contains(r));
}

TEST(Units, MillimetreConversionRoundTrips) {
  EXPECT_DOUBLE_EQ(mm_to_m(18493.0), 18.493);
  EXPECT_DOUBLE_EQ(m_to_mm(mm_to_m(1234.5)), 1234.5);
}

TEST(Units, ParseDoubleIsStrict) {
  EXPECT_DOUBLE_EQ(parse_double("13.19", "width"), 13.19);
  EXPECT_PLANNER_ERROR(parse_double("13.19mm", "width"), ErrorCode::kMalformedSource);
  EXPECT_PLANNER_ERROR(parse_double("", "width"), ErrorCode::kMalformedSource);
}

}  // namespace
}  // namespace hangar

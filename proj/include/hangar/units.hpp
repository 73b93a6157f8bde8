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

// Small value types shared by every module: planar points, axis-aligned
// rectangles, exact currency and the millimetre/metre conversions.
//
// Unit convention: sensor sizes, focal lengths and working distances are in
// millimetres; anything at bay scale (outlines, grids, footprints) is in
// metres. Convert only through mm_to_m / m_to_mm.

#ifndef HANGAR_UNITS_HPP_
#define HANGAR_UNITS_HPP_

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "hangar/error.hpp"

namespace hangar {

inline constexpr double kMillimetresPerMetre = 1000.0;

constexpr double mm_to_m(double mm) { return mm / kMillimetresPerMetre; }
constexpr double m_to_mm(double m) { return m * kMillimetresPerMetre; }

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Vec2 a, Vec2 b) = default;
  // Lexicographic (x, then y); fixes row/column order in coverage matrices.
  friend constexpr auto operator<=>(Vec2 a, Vec2 b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

/// Closed axis-aligned rectangle [x_min, x_max] x [y_min, y_max].
struct Rect {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;

  static Rect centred(Vec2 centre, double width, double height) {
    return {centre.x - width / 2, centre.y - height / 2, centre.x + width / 2,
            centre.y + height / 2};
  }

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  Vec2 centre() const { return {(x_min + x_max) / 2, (y_min + y_max) / 2}; }

  bool contains(Vec2 p) const {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }
  bool contains(const Rect& r) const {
    return r.x_min >= x_min && r.x_max <= x_max && r.y_min >= y_min && r.y_max <= y_max;
  }
  Rect expanded(double dx, double dy) const {
    return {x_min - dx, y_min - dy, x_max + dx, y_max + dy};
  }
  Rect united(const Rect& r) const {
    return {std::min(x_min, r.x_min), std::min(y_min, r.y_min), std::max(x_max, r.x_max),
            std::max(y_max, r.y_max)};
  }

  friend bool operator==(const Rect&, const Rect&) = default;
};

/// Exact currency amount in integer pence. Prices never pass through floating
/// point, so bills of materials reproduce to the penny.
class Money {
 public:
  constexpr Money() = default;

  static constexpr Money from_pence(std::int64_t pence) { return Money(pence); }
  static constexpr Money from_pounds(std::int64_t pounds) { return Money(pounds * 100); }

  /// Parses "535", "1024.5", "1,024.50" or "£76,809". At most two decimals.
  static Money parse(std::string_view text) {
    std::string digits;
    bool negative = false;
    std::size_t i = 0;
    // Skip a leading pound sign (UTF-8 0xC2 0xA3) or whitespace.
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    // The sign may sit on either side of the pound sign ("-£5" as displayed, or "£-5").
    if (i < text.size() && text[i] == '-') {
      negative = true;
      ++i;
    }
    if (text.substr(i).starts_with("\xC2\xA3")) i += 2;
    if (!negative && i < text.size() && text[i] == '-') {
      negative = true;
      ++i;
    }
    std::int64_t pounds = 0;
    std::int64_t pence = 0;
    bool any = false;
    for (; i < text.size() && text[i] != '.'; ++i) {
      char c = text[i];
      if (c == ',') continue;
      if (c < '0' || c > '9') fail(ErrorCode::kMalformedSource, "bad currency '" + std::string(text) + "'");
      pounds = pounds * 10 + (c - '0');
      any = true;
    }
    if (i < text.size() && text[i] == '.') {
      ++i;
      int places = 0;
      for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9' || places == 2)
          fail(ErrorCode::kMalformedSource, "bad currency '" + std::string(text) + "'");
        pence = pence * 10 + (c - '0');
        ++places;
        any = true;
      }
      if (places == 1) pence *= 10;
    }
    if (!any) fail(ErrorCode::kMalformedSource, "bad currency '" + std::string(text) + "'");
    std::int64_t total = pounds * 100 + pence;
    return Money(negative ? -total : total);
  }

  constexpr std::int64_t pence() const { return pence_; }
  constexpr double pounds() const { return static_cast<double>(pence_) / 100.0; }

  /// "£76,809.00"
  std::string display() const {
    std::int64_t v = pence_ < 0 ? -pence_ : pence_;
    std::string whole = std::to_string(v / 100);
    std::string grouped;
    for (std::size_t k = 0; k < whole.size(); ++k) {
      if (k > 0 && (whole.size() - k) % 3 == 0) grouped += ',';
      grouped += whole[k];
    }
    std::int64_t frac = v % 100;
    std::string out = pence_ < 0 ? "-\xC2\xA3" : "\xC2\xA3";
    out += grouped;
    out += '.';
    out += static_cast<char>('0' + frac / 10);
    out += static_cast<char>('0' + frac % 10);
    return out;
  }

  friend constexpr Money operator+(Money a, Money b) { return Money(a.pence_ + b.pence_); }
  friend constexpr Money operator-(Money a, Money b) { return Money(a.pence_ - b.pence_); }
  friend constexpr Money operator*(Money a, std::int64_t k) { return Money(a.pence_ * k); }
  friend constexpr Money operator*(std::int64_t k, Money a) { return Money(a.pence_ * k); }
  Money& operator+=(Money o) {
    pence_ += o.pence_;
    return *this;
  }
  friend constexpr auto operator<=>(Money, Money) = default;

 private:
  constexpr explicit Money(std::int64_t pence) : pence_(pence) {}
  std::int64_t pence_ = 0;
};

/// Strict numeric parse of a whole field; throws MalformedSource otherwise.
inline double parse_double(std::string_view text, std::string_view what) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
    text.remove_suffix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    fail(ErrorCode::kMalformedSource,
         "expected a number for " + std::string(what) + ", got '" + std::string(text) + "'");
  return value;
}

}  // namespace hangar

#endif  // HANGAR_UNITS_HPP_

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

// Aircraft outline handling: perimeter parsing (SVG polyline paths or JSON
// vertex lists), metric scaling, uniform buffering and discretisation of the
// region of interest into a square lattice of target points.

#ifndef HANGAR_GEOMETRY_HPP_
#define HANGAR_GEOMETRY_HPP_

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>
#include <nlohmann/json.hpp>

#include "hangar/error.hpp"
#include "hangar/units.hpp"

namespace hangar {

namespace detail {

inline double orient(Vec2 a, Vec2 b, Vec2 c) { return cross(b - a, c - a); }

inline bool on_segment_collinear(Vec2 a, Vec2 b, Vec2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Closed-segment intersection test (touching counts).
inline bool segments_intersect(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2) {
  const double d1 = orient(q1, q2, p1);
  const double d2 = orient(q1, q2, p2);
  const double d3 = orient(p1, p2, q1);
  const double d4 = orient(p1, p2, q2);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && on_segment_collinear(q1, q2, p1)) return true;
  if (d2 == 0 && on_segment_collinear(q1, q2, p2)) return true;
  if (d3 == 0 && on_segment_collinear(p1, p2, q1)) return true;
  if (d4 == 0 && on_segment_collinear(p1, p2, q2)) return true;
  return false;
}

inline double distance_to_segment(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0 ? dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const Vec2 q = a + t * ab;
  return std::hypot(p.x - q.x, p.y - q.y);
}

}  // namespace detail

/// A simple closed polygon. Closure is implicit: the last vertex connects
/// back to the first and is never repeated. Construction validates the
/// invariants (>= 3 distinct vertices, non-zero area, no self-intersection).
class Polygon {
 public:
  Polygon() = default;  // empty placeholder; every operation expects a constructed outline
  explicit Polygon(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {
    // Drop consecutive duplicates and a repeated closing vertex.
    std::vector<Vec2> cleaned;
    cleaned.reserve(vertices_.size());
    for (const Vec2& v : vertices_) {
      if (!std::isfinite(v.x) || !std::isfinite(v.y))
        fail(ErrorCode::kMalformedSource, "non-finite vertex coordinate");
      if (cleaned.empty() || !(cleaned.back() == v)) cleaned.push_back(v);
    }
    while (cleaned.size() > 1 && cleaned.front() == cleaned.back()) cleaned.pop_back();
    vertices_ = std::move(cleaned);
    if (vertices_.size() < 3)
      fail(ErrorCode::kDegeneratePolygon, "polygon needs at least 3 distinct vertices, got " +
                                              std::to_string(vertices_.size()));
    if (signed_area() == 0.0) fail(ErrorCode::kDegeneratePolygon, "polygon has zero area");
    check_simple();
  }

  const std::vector<Vec2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  Vec2 operator[](std::size_t i) const { return vertices_[i]; }
  // Edge i runs from vertex i to vertex i+1 (wrapping).
  std::pair<Vec2, Vec2> edge(std::size_t i) const {
    return {vertices_[i], vertices_[(i + 1) % vertices_.size()]};
  }

  /// Positive for counter-clockwise order.
  double signed_area() const {
    double twice = 0.0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      auto [a, b] = edge(i);
      twice += cross(a, b);
    }
    return twice / 2.0;
  }
  double area() const { return std::abs(signed_area()); }

  double perimeter() const {
    double total = 0.0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      auto [a, b] = edge(i);
      total += std::hypot(b.x - a.x, b.y - a.y);
    }
    return total;
  }

  /// Area centroid.
  Vec2 centroid() const {
    // Shift to the first vertex to keep the sums well conditioned.
    const Vec2 o = vertices_.front();
    double cx = 0.0, cy = 0.0, twice = 0.0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      auto [a, b] = edge(i);
      a = a - o;
      b = b - o;
      const double c = cross(a, b);
      twice += c;
      cx += (a.x + b.x) * c;
      cy += (a.y + b.y) * c;
    }
    return {o.x + cx / (3.0 * twice), o.y + cy / (3.0 * twice)};
  }

  Rect bounds() const {
    Rect r{vertices_[0].x, vertices_[0].y, vertices_[0].x, vertices_[0].y};
    for (const Vec2& v : vertices_) {
      r.x_min = std::min(r.x_min, v.x);
      r.y_min = std::min(r.y_min, v.y);
      r.x_max = std::max(r.x_max, v.x);
      r.y_max = std::max(r.y_max, v.y);
    }
    return r;
  }

  /// Shortest distance from p to the outline (not to the filled region).
  double distance_to_boundary(Vec2 p) const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      auto [a, b] = edge(i);
      best = std::min(best, detail::distance_to_segment(p, a, b));
    }
    return best;
  }

 private:
  void check_simple() const {
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
      auto [a1, a2] = edge(i);
      // Adjacent edge folding back over this one.
      auto [b1, b2] = edge((i + 1) % n);
      if (detail::orient(a1, a2, b2) == 0.0 && dot(a2 - a1, b2 - b1) < 0.0)
        fail(ErrorCode::kSelfIntersecting, "edge " + std::to_string(i) + " doubles back");
      for (std::size_t j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;  // shares vertex 0
        auto [c1, c2] = edge(j);
        if (detail::segments_intersect(a1, a2, c1, c2))
          fail(ErrorCode::kSelfIntersecting,
               "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
      }
    }
  }

  std::vector<Vec2> vertices_;
};

/// Even-odd ray crossing; points on an edge or vertex count as inside.
inline bool point_in_polygon(Vec2 pt, const Polygon& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    auto [a, b] = p.edge(i);
    if (detail::orient(a, b, pt) == 0.0 && detail::on_segment_collinear(a, b, pt)) return true;
  }
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2 a = p[i];
    const Vec2 b = p[j];
    if ((a.y > pt.y) != (b.y > pt.y)) {
      const double x_cross = a.x + (pt.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (pt.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

// ---------------------------------------------------------------------------
// Perimeter parsing
// ---------------------------------------------------------------------------

enum class PerimeterFormat { kSvgPath, kJsonVertices };

namespace detail {

class PathTokenizer {
 public:
  explicit PathTokenizer(std::string_view d) : d_(d) {}

  void skip_separators() {
    while (pos_ < d_.size() && (std::isspace(static_cast<unsigned char>(d_[pos_])) || d_[pos_] == ','))
      ++pos_;
  }
  bool done() {
    skip_separators();
    return pos_ >= d_.size();
  }
  bool next_is_command() {
    skip_separators();
    return pos_ < d_.size() && std::isalpha(static_cast<unsigned char>(d_[pos_])) &&
           d_[pos_] != 'e' && d_[pos_] != 'E';
  }
  bool next_is_number() {
    skip_separators();
    if (pos_ >= d_.size()) return false;
    const char c = d_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.';
  }
  char command() {
    skip_separators();
    return d_[pos_++];
  }
  double number() {
    skip_separators();
    const std::size_t start = pos_;
    if (pos_ < d_.size() && (d_[pos_] == '-' || d_[pos_] == '+')) ++pos_;
    bool dot_seen = false;
    while (pos_ < d_.size()) {
      const char c = d_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '.' && !dot_seen) {
        dot_seen = true;
        ++pos_;
      } else {
        break;
      }
    }
    if (pos_ < d_.size() && (d_[pos_] == 'e' || d_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < d_.size() && (d_[pos_] == '-' || d_[pos_] == '+')) ++pos_;
      while (pos_ < d_.size() && std::isdigit(static_cast<unsigned char>(d_[pos_]))) ++pos_;
    }
    return parse_double(d_.substr(start, pos_ - start), "path coordinate");
  }

 private:
  std::string_view d_;
  std::size_t pos_ = 0;
};

inline std::vector<Vec2> parse_svg_path_data(std::string_view d) {
  PathTokenizer tok(d);
  std::vector<Vec2> pts;
  Vec2 current{};
  bool started = false;
  bool closed = false;
  char cmd = 0;
  while (!tok.done()) {
    if (tok.next_is_command()) {
      cmd = tok.command();
    } else if (cmd == 0) {
      fail(ErrorCode::kMalformedSource, "path data must start with a command");
    } else if (cmd == 'M') {
      cmd = 'L';  // implicit lineto after a moveto
    } else if (cmd == 'm') {
      cmd = 'l';
    } else if (cmd == 'Z' || cmd == 'z') {
      fail(ErrorCode::kMalformedSource, "coordinates after close-path");
    }
    if (closed && cmd != 'Z' && cmd != 'z')
      fail(ErrorCode::kMalformedSource, "only one closed subpath is supported");
    switch (cmd) {
      case 'M':
      case 'm': {
        if (started) fail(ErrorCode::kMalformedSource, "only one subpath is supported");
        const double x = tok.number();
        const double y = tok.number();
        // A leading relative moveto is absolute by definition.
        current = {x, y};
        pts.push_back(current);
        started = true;
        break;
      }
      case 'L':
      case 'l': {
        if (!started) fail(ErrorCode::kMalformedSource, "lineto before moveto");
        const double x = tok.number();
        const double y = tok.number();
        current = cmd == 'L' ? Vec2{x, y} : current + Vec2{x, y};
        pts.push_back(current);
        break;
      }
      case 'H':
      case 'h': {
        if (!started) fail(ErrorCode::kMalformedSource, "lineto before moveto");
        const double x = tok.number();
        current.x = cmd == 'H' ? x : current.x + x;
        pts.push_back(current);
        break;
      }
      case 'V':
      case 'v': {
        if (!started) fail(ErrorCode::kMalformedSource, "lineto before moveto");
        const double y = tok.number();
        current.y = cmd == 'V' ? y : current.y + y;
        pts.push_back(current);
        break;
      }
      case 'Z':
      case 'z':
        if (!started) fail(ErrorCode::kMalformedSource, "close-path before moveto");
        closed = true;
        break;
      case 'C': case 'c': case 'S': case 's': case 'Q': case 'q':
      case 'T': case 't': case 'A': case 'a':
        fail(ErrorCode::kUnsupportedCommand,
             std::string("curve command '") + cmd + "' is not supported; trace the outline with line segments");
      default:
        fail(ErrorCode::kMalformedSource, std::string("unknown path command '") + cmd + "'");
    }
  }
  if (!started) fail(ErrorCode::kMalformedSource, "empty path data");
  return pts;
}

inline std::string strip_xml_comments(std::string_view s) {
  std::string out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t open = s.find("<!--", pos);
    if (open == std::string_view::npos) {
      out.append(s.substr(pos));
      break;
    }
    out.append(s.substr(pos, open - pos));
    const std::size_t close = s.find("-->", open + 4);
    if (close == std::string_view::npos) fail(ErrorCode::kMalformedSource, "unterminated XML comment");
    pos = close + 3;
  }
  return out;
}

inline std::vector<Vec2> parse_svg_document(std::string_view source) {
  const std::string text = strip_xml_comments(source);
  // A bare path data string ("M 0 0 L ...") is accepted as well.
  if (text.find('<') == std::string::npos) return parse_svg_path_data(text);

  static const std::regex path_tag(R"(<path\b[^>]*>)", std::regex::icase);
  static const std::regex d_attr(R"re((?:^|\s)d\s*=\s*(?:"([^"]*)"|'([^']*)'))re");
  auto begin = std::sregex_iterator(text.begin(), text.end(), path_tag);
  auto end = std::sregex_iterator();
  const auto count = std::distance(begin, end);
  if (count != 1)
    fail(ErrorCode::kMalformedSource,
         "expected exactly one <path> element, found " + std::to_string(count));
  const std::string tag = begin->str();
  std::smatch m;
  if (!std::regex_search(tag, m, d_attr)) fail(ErrorCode::kMalformedSource, "<path> has no d attribute");
  return parse_svg_path_data(m[1].matched ? m[1].str() : m[2].str());
}

inline std::vector<Vec2> parse_json_vertices(std::string_view source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(source);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kMalformedSource, std::string("perimeter JSON: ") + e.what());
  }
  const nlohmann::json* list = &doc;
  if (doc.is_object()) {
    if (doc.contains("units")) {
      const auto& u = doc["units"];
      if (!u.is_string() || (u != "px" && u != "m"))
        fail(ErrorCode::kMalformedSource, "perimeter units must be \"px\" or \"m\"");
    }
    if (!doc.contains("vertices")) fail(ErrorCode::kMalformedSource, "perimeter JSON lacks \"vertices\"");
    list = &doc["vertices"];
  }
  if (!list->is_array()) fail(ErrorCode::kMalformedSource, "vertices must be an array");
  std::vector<Vec2> pts;
  for (const auto& v : *list) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
      fail(ErrorCode::kMalformedSource, "each vertex must be [x, y]");
    pts.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  return pts;
}

}  // namespace detail

/// Parses an outline, preserving the file's vertex order.
inline Polygon parse_perimeter(std::string_view source, PerimeterFormat format) {
  std::vector<Vec2> pts = format == PerimeterFormat::kSvgPath ? detail::parse_svg_document(source)
                                                              : detail::parse_json_vertices(source);
  return Polygon(std::move(pts));
}

/// Picks the format from the file extension (".svg" vs anything else).
inline PerimeterFormat perimeter_format_for(std::string_view path) {
  std::string lower(path);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return lower.ends_with(".svg") ? PerimeterFormat::kSvgPath : PerimeterFormat::kJsonVertices;
}

/// Uniformly scales the outline so its x-extent equals true_length_m.
inline Polygon scale_to_length(const Polygon& p, double true_length_m) {
  if (!(true_length_m > 0)) fail(ErrorCode::kNonPositiveInput, "true length must be positive");
  const Rect b = p.bounds();
  const double extent = b.x_max - b.x_min;
  if (!(extent > 0)) fail(ErrorCode::kZeroExtent, "outline has zero x-extent");
  const double scale = true_length_m / extent;
  std::vector<Vec2> out;
  out.reserve(p.size());
  for (const Vec2& v : p.vertices()) out.push_back(scale * v);
  return Polygon(std::move(out));
}

// ---------------------------------------------------------------------------
// Buffering
// ---------------------------------------------------------------------------

inline constexpr double kDefaultArcTolerance = 0.01;

/// The set of points within offset_m of the base polygon. Membership is
/// decided exactly from the distance to the base; `boundary` is a polyline
/// approximation (inscribed, sagitta <= arc tolerance) used for extents,
/// area and drawing.
struct BufferedRegion {
  Polygon base;
  double offset_m = 0.0;
  Polygon boundary;
  std::vector<Polygon> holes;

  bool contains(Vec2 p) const {
    if (point_in_polygon(p, base)) return true;
    if (offset_m <= 0.0) return false;
    return base.distance_to_boundary(p) <= offset_m * (1.0 + 1e-12);
  }
  Rect bounds() const { return boundary.bounds(); }
  Vec2 centroid() const { return boundary.centroid(); }
  double area() const {
    double a = boundary.area();
    for (const Polygon& h : holes) a -= h.area();
    return a;
  }
};

/// Number of segments a full circle of radius r needs so that every chord's
/// sagitta stays within tolerance.
inline int segments_per_circle(double radius, double tolerance) {
  if (tolerance >= radius) return 8;
  const double half_step = std::acos(1.0 - tolerance / radius);
  return std::max(8, static_cast<int>(std::ceil(std::numbers::pi / half_step)));
}

inline BufferedRegion buffer_polygon(const Polygon& p, double delta_m,
                                     double arc_tolerance = kDefaultArcTolerance) {
  if (!(delta_m >= 0)) fail(ErrorCode::kNonPositiveInput, "buffer distance must be >= 0");
  if (!(arc_tolerance > 0)) fail(ErrorCode::kNonPositiveInput, "arc tolerance must be positive");
  if (delta_m == 0.0) return BufferedRegion{p, 0.0, p, {}};

  namespace bg = boost::geometry;
  using BPoint = bg::model::d2::point_xy<double>;
  using BPolygon = bg::model::polygon<BPoint, /*clockwise=*/false, /*closed=*/true>;
  using BMulti = bg::model::multi_polygon<BPolygon>;

  BPolygon in;
  std::vector<Vec2> ring = p.vertices();
  if (p.signed_area() < 0) std::reverse(ring.begin(), ring.end());
  for (const Vec2& v : ring) in.outer().emplace_back(v.x, v.y);
  in.outer().emplace_back(ring.front().x, ring.front().y);

  const int n = segments_per_circle(delta_m, arc_tolerance);
  BMulti out;
  bg::buffer(in, out, bg::strategy::buffer::distance_symmetric<double>(delta_m),
             bg::strategy::buffer::side_straight(), bg::strategy::buffer::join_round(n),
             bg::strategy::buffer::end_round(n), bg::strategy::buffer::point_circle(n));
  if (out.empty()) fail(ErrorCode::kDegeneratePolygon, "buffer produced no region");

  auto largest = std::max_element(out.begin(), out.end(), [](const BPolygon& a, const BPolygon& b) {
    return bg::area(a) < bg::area(b);
  });

  auto to_polygon = [](const auto& r) {
    std::vector<Vec2> pts;
    for (const BPoint& q : r) {
      const Vec2 v{q.x(), q.y()};
      if (!pts.empty() && std::hypot(v.x - pts.back().x, v.y - pts.back().y) < 1e-12) continue;
      pts.push_back(v);
    }
    return Polygon(std::move(pts));
  };
  BufferedRegion region{p, delta_m, to_polygon(largest->outer()), {}};
  for (const auto& inner : largest->inners()) region.holes.push_back(to_polygon(inner));
  return region;
}

// ---------------------------------------------------------------------------
// Discretisation
// ---------------------------------------------------------------------------

enum class CoverageSide { kInternal, kExternal };

inline constexpr std::string_view to_string(CoverageSide s) {
  return s == CoverageSide::kInternal ? "internal" : "external";
}

inline constexpr double kDefaultGridSpacing = 0.5;

struct TargetGrid {
  double spacing_m = kDefaultGridSpacing;
  Vec2 origin;
  std::vector<Vec2> points;  // sorted lexicographically, unique
  CoverageSide side = CoverageSide::kInternal;
  std::optional<Rect> bay;
};

/// All lattice nodes origin + (k, l) * spacing inside `extent` (inclusive).
inline std::vector<Vec2> lattice_nodes(const Rect& extent, double spacing) {
  const Vec2 origin{extent.x_min, extent.y_min};
  // Small slack so the far edge survives rounding in (x_max - x_min) / spacing.
  const auto kx = static_cast<long>(std::floor(extent.width() / spacing + 1e-9));
  const auto ky = static_cast<long>(std::floor(extent.height() / spacing + 1e-9));
  std::vector<Vec2> nodes;
  nodes.reserve(static_cast<std::size_t>((kx + 1) * (ky + 1)));
  for (long k = 0; k <= kx; ++k)
    for (long l = 0; l <= ky; ++l)
      nodes.push_back({origin.x + static_cast<double>(k) * spacing,
                       origin.y + static_cast<double>(l) * spacing});
  return nodes;
}

/// Classifies the lattice over `extent` against the region. Exposed so a
/// single lattice can be split into internal and external parts.
inline std::vector<Vec2> classify_lattice(const BufferedRegion& region, const Rect& extent,
                                          double spacing, CoverageSide side,
                                          const std::optional<Rect>& bay) {
  std::vector<Vec2> out;
  for (const Vec2& g : lattice_nodes(extent, spacing)) {
    const bool inside = region.contains(g);
    if (side == CoverageSide::kInternal ? inside : (!inside && (!bay || bay->contains(g))))
      out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline TargetGrid discretize(const BufferedRegion& region, double spacing_m, CoverageSide side,
                             const std::optional<Rect>& bay = std::nullopt) {
  if (!(spacing_m > 0)) fail(ErrorCode::kNonPositiveInput, "grid spacing must be positive");
  Rect extent = region.bounds();
  if (side == CoverageSide::kExternal) {
    if (!bay) fail(ErrorCode::kInvalidArgument, "external coverage needs a bay rectangle");
    if (!bay->contains(region.bounds()))
      fail(ErrorCode::kInvalidArgument, "bay rectangle does not enclose the buffered outline");
    extent = *bay;
  }
  TargetGrid grid;
  grid.spacing_m = spacing_m;
  grid.origin = {extent.x_min, extent.y_min};
  grid.side = side;
  if (side == CoverageSide::kExternal) grid.bay = bay;
  grid.points = classify_lattice(region, extent, spacing_m, side, bay);
  if (grid.points.empty())
    fail(ErrorCode::kEmptyGrid, std::string("no ") + std::string(to_string(side)) +
                                    " lattice point at spacing " + std::to_string(spacing_m));
  return grid;
}

}  // namespace hangar

#endif  // HANGAR_GEOMETRY_HPP_

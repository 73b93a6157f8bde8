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

// Pinhole camera relations: field of view and ground sampling distance at a
// working distance, angular field of view, ceiling-camera ground footprint,
// and motion per frame.

#ifndef HANGAR_OPTICS_HPP_
#define HANGAR_OPTICS_HPP_

#include <cmath>
#include <numbers>
#include <string>

#include "hangar/error.hpp"
#include "hangar/units.hpp"

namespace hangar {

struct SensorGeometry {
  double width_mm = 0.0;
  double height_mm = 0.0;
  double res_w_px = 0.0;
  double res_h_px = 0.0;
  double pixel_um = 0.0;

  double diagonal_mm() const { return std::hypot(width_mm, height_mm); }

  /// Relative mismatch between width/res_w and the quoted pixel pitch.
  double pitch_mismatch() const {
    const double derived_um = width_mm / res_w_px * 1000.0;
    return std::abs(derived_um - pixel_um) / pixel_um;
  }
};

struct FieldOfView {
  double width_m = 0.0;
  double height_m = 0.0;
  double diag_m = 0.0;
  double gsd_w_mm_px = 0.0;
  double gsd_h_mm_px = 0.0;
  // Scalar distortion proxy: diagonal ground coverage (m) per mm of focal length.
  double distortion = 0.0;
};

struct Footprint {
  double width_m = 0.0;
  double length_m = 0.0;
  double theta_h_deg = 0.0;
  double theta_v_deg = 0.0;
};

namespace detail {
inline void require_positive(double v, const char* what) {
  if (!(v > 0) || !std::isfinite(v))
    fail(ErrorCode::kNonPositiveInput, std::string(what) + " must be positive");
}
inline void require_sensor(const SensorGeometry& s) {
  require_positive(s.width_mm, "sensor width");
  require_positive(s.height_mm, "sensor height");
  require_positive(s.res_w_px, "horizontal resolution");
  require_positive(s.res_h_px, "vertical resolution");
}
}  // namespace detail

/// Ratio-form projection of the sensor onto a plane distance_mm away.
inline FieldOfView fov_at_distance(const SensorGeometry& sensor, double focal_mm, double distance_mm) {
  detail::require_sensor(sensor);
  detail::require_positive(focal_mm, "focal length");
  detail::require_positive(distance_mm, "working distance");
  const double w_mm = distance_mm * sensor.width_mm / focal_mm;
  const double h_mm = distance_mm * sensor.height_mm / focal_mm;
  FieldOfView fov;
  fov.width_m = mm_to_m(w_mm);
  fov.height_m = mm_to_m(h_mm);
  fov.diag_m = std::hypot(fov.width_m, fov.height_m);
  fov.gsd_w_mm_px = w_mm / sensor.res_w_px;
  fov.gsd_h_mm_px = h_mm / sensor.res_h_px;
  fov.distortion = fov.diag_m / focal_mm;
  return fov;
}

/// Distance (mm) at which the horizontal GSD equals gsd_mm_px.
inline double working_distance_for_gsd(const SensorGeometry& sensor, double focal_mm, double gsd_mm_px) {
  detail::require_sensor(sensor);
  detail::require_positive(focal_mm, "focal length");
  detail::require_positive(gsd_mm_px, "GSD");
  return gsd_mm_px * sensor.res_w_px * focal_mm / sensor.width_mm;
}

inline double angular_fov_deg(double sensor_dim_mm, double focal_mm) {
  detail::require_positive(sensor_dim_mm, "sensor dimension");
  detail::require_positive(focal_mm, "focal length");
  return 2.0 * std::atan(sensor_dim_mm / (2.0 * focal_mm)) * (180.0 / std::numbers::pi);
}

/// Tangent-form footprint of a downward camera height_m above the plane.
inline Footprint ground_footprint(const SensorGeometry& sensor, double focal_mm, double height_m) {
  detail::require_sensor(sensor);
  detail::require_positive(focal_mm, "focal length");
  detail::require_positive(height_m, "mounting height");
  Footprint fp;
  fp.theta_h_deg = angular_fov_deg(sensor.width_mm, focal_mm);
  fp.theta_v_deg = angular_fov_deg(sensor.height_mm, focal_mm);
  constexpr double kDegToRad = std::numbers::pi / 180.0;
  fp.width_m = 2.0 * height_m * std::tan(fp.theta_h_deg * kDegToRad / 2.0);
  fp.length_m = 2.0 * height_m * std::tan(fp.theta_v_deg * kDegToRad / 2.0);
  return fp;
}

inline double distance_per_frame(double velocity_m_s, double fps) {
  if (!(fps > 0)) fail(ErrorCode::kNonPositiveFrameRate, "frame rate must be positive");
  if (!(velocity_m_s >= 0)) fail(ErrorCode::kNonPositiveInput, "velocity must be >= 0");
  return velocity_m_s / fps;
}

}  // namespace hangar

#endif  // HANGAR_OPTICS_HPP_

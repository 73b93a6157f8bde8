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

// Independent oracles shared by the test binaries.

#ifndef HANGAR_TESTS_SUPPORT_HPP_
#define HANGAR_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hangar/placement.hpp"

namespace hangar::testing {

inline std::string data_path(const std::string& rel) { return std::string(PLANNER_DATA_DIR) + "/" + rel; }
inline std::string fixture_path(const std::string& rel) { return std::string(TEST_FIXTURE_DIR) + "/" + rel; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Exhaustive minimum cover for m <= 24 columns and <= 64 rows, by
/// enumerating every subset. Returns SIZE_MAX when no subset covers.
inline std::size_t brute_force_min_cover(const SetCoverProblem& p) {
  const std::size_t m = p.columns.size();
  const std::uint64_t all = p.num_rows == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << p.num_rows) - 1);
  std::vector<std::uint64_t> col(m, 0);
  for (std::size_t j = 0; j < m; ++j)
    for (auto r : p.columns[j]) col[j] |= std::uint64_t{1} << r;
  std::vector<std::uint64_t> cover(std::size_t{1} << m, 0);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    const int low = __builtin_ctzll(mask);
    cover[mask] = cover[mask & (mask - 1)] | col[static_cast<std::size_t>(low)];
    if (cover[mask] == all) best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
  }
  if (p.num_rows == 0) best = 0;
  return best;
}

/// Random feasible instance: each row gets at least one coverer.
inline SetCoverProblem random_problem(std::mt19937_64& rng, std::size_t max_cols, std::size_t max_rows) {
  std::uniform_int_distribution<std::size_t> mcols(1, max_cols), nrows(1, max_rows);
  SetCoverProblem p;
  const std::size_t m = mcols(rng);
  p.num_rows = nrows(rng);
  p.columns.assign(m, {});
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double density = 0.05 + 0.4 * u(rng);
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  for (std::uint32_t r = 0; r < p.num_rows; ++r) {
    bool any = false;
    for (std::size_t j = 0; j < m; ++j)
      if (u(rng) < density) {
        p.columns[j].push_back(r);
        any = true;
      }
    if (!any) p.columns[pick(rng)].push_back(r);
  }
  return p;
}

inline bool covers_all(const SetCoverProblem& p, const std::vector<std::size_t>& chosen) {
  std::vector<char> seen(p.num_rows, 0);
  for (auto j : chosen)
    for (auto r : p.columns[j]) seen[r] = 1;
  for (char s : seen)
    if (!s) return false;
  return true;
}

}  // namespace hangar::testing

#endif  // HANGAR_TESTS_SUPPORT_HPP_

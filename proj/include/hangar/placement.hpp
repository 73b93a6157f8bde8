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

// Camera placement as unweighted set cover.
//
// Candidate camera centres sit on a rectangular lattice whose pitch is the
// footprint shrunk by the requested overlap (10% overlap => 0.9 W). Each
// candidate covers the closed footprint rectangle around it. The minimum
// number of cameras covering every target point is found by an exact
// branch-and-bound:
//
//   * root reduction: duplicate rows collapsed, rows that are supersets of
//     another row dropped (covering the smaller one covers them);
//   * node reduction: columns with no uncovered row removed, dominated
//     columns removed (keeping the lowest index among equals), columns that
//     are the only coverer of some row forced in;
//   * bound: max of ceil(|uncovered| / largest column), the size of a set of
//     rows with pairwise disjoint coverers, and a greedy dual packing;
//   * branching on the uncovered row with fewest coverers, children in
//     ascending column index, earlier siblings excluded in later children.
//
// Independent components of the row/column incidence graph are solved
// separately. The incumbent starts from greedy.

#ifndef HANGAR_PLACEMENT_HPP_
#define HANGAR_PLACEMENT_HPP_

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hangar/error.hpp"
#include "hangar/geometry.hpp"
#include "hangar/optics.hpp"
#include "hangar/units.hpp"

namespace hangar {

// ---------------------------------------------------------------------------
// Candidate lattice and coverage matrix
// ---------------------------------------------------------------------------

/// Closed-rectangle coverage slack (metres) absorbing lattice round-off.
inline constexpr double kCoverSlack = 1e-9;

struct CandidateLattice {
  double step_x_m = 0.0;
  double step_y_m = 0.0;
  Vec2 origin;  // centroid of the buffered outline; always a lattice node
  std::vector<Vec2> centres;
  Footprint footprint;
  double overlap_fraction = 0.0;

  bool covers(std::size_t candidate, Vec2 p) const {
    const Vec2 c = centres[candidate];
    return std::abs(p.x - c.x) <= footprint.width_m / 2 + kCoverSlack &&
           std::abs(p.y - c.y) <= footprint.length_m / 2 + kCoverSlack;
  }
};

/// Lattice of candidate centres spanning the region's bounding rectangle
/// (united with `extent` when given) grown by one footprint on every side.
inline CandidateLattice candidate_lattice(const BufferedRegion& region, const Footprint& footprint,
                                          double overlap_fraction,
                                          const std::optional<Rect>& extent = std::nullopt) {
  if (!(footprint.width_m > 0) || !(footprint.length_m > 0))
    fail(ErrorCode::kNonPositiveFootprint, "footprint must have positive width and length");
  if (!(overlap_fraction >= 0.0 && overlap_fraction < 1.0))
    fail(ErrorCode::kInvalidArgument, "overlap fraction must lie in [0, 1)");

  CandidateLattice lat;
  lat.footprint = footprint;
  lat.overlap_fraction = overlap_fraction;
  lat.step_x_m = (1.0 - overlap_fraction) * footprint.width_m;
  lat.step_y_m = (1.0 - overlap_fraction) * footprint.length_m;
  lat.origin = region.centroid();

  Rect span = region.bounds();
  if (extent) span = span.united(*extent);
  span = span.expanded(footprint.width_m, footprint.length_m);

  constexpr double kEps = 1e-9;
  const auto kx0 = static_cast<long>(std::ceil((span.x_min - lat.origin.x) / lat.step_x_m - kEps));
  const auto kx1 = static_cast<long>(std::floor((span.x_max - lat.origin.x) / lat.step_x_m + kEps));
  const auto ky0 = static_cast<long>(std::ceil((span.y_min - lat.origin.y) / lat.step_y_m - kEps));
  const auto ky1 = static_cast<long>(std::floor((span.y_max - lat.origin.y) / lat.step_y_m + kEps));
  for (long kx = kx0; kx <= kx1; ++kx)
    for (long ky = ky0; ky <= ky1; ++ky)
      lat.centres.push_back({lat.origin.x + static_cast<double>(kx) * lat.step_x_m,
                             lat.origin.y + static_cast<double>(ky) * lat.step_y_m});
  return lat;
}

/// Row-sparse Boolean incidence. Only candidates covering at least one point
/// become columns; `columns[j]` is the lattice index behind column j.
struct CoverageInstance {
  TargetGrid points;
  CandidateLattice candidates;
  std::vector<std::size_t> columns;
  std::vector<std::vector<std::uint32_t>> rows;         // point -> ascending column positions
  std::vector<std::vector<std::uint32_t>> column_rows;  // column -> ascending point indices

  std::size_t num_points() const { return points.points.size(); }
  std::size_t num_columns() const { return columns.size(); }
};

inline CoverageInstance build_coverage_matrix(const TargetGrid& points, const CandidateLattice& lattice) {
  if (points.points.empty()) fail(ErrorCode::kEmptyGrid, "no target points");
  if (lattice.centres.empty()) fail(ErrorCode::kInvalidArgument, "no candidate centres");
  CoverageInstance inst;
  inst.points = points;
  inst.candidates = lattice;
  inst.rows.resize(points.points.size());
  for (std::size_t c = 0; c < lattice.centres.size(); ++c) {
    std::vector<std::uint32_t> covered;
    for (std::size_t i = 0; i < points.points.size(); ++i)
      if (lattice.covers(c, points.points[i])) covered.push_back(static_cast<std::uint32_t>(i));
    if (covered.empty()) continue;
    const auto pos = static_cast<std::uint32_t>(inst.columns.size());
    inst.columns.push_back(c);
    for (std::uint32_t i : covered) inst.rows[i].push_back(pos);
    inst.column_rows.push_back(std::move(covered));
  }
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < inst.rows.size(); ++i)
    if (inst.rows[i].empty()) bad.push_back(i);
  if (!bad.empty()) {
    std::ostringstream os;
    os << bad.size() << " target point(s) lie outside every candidate footprint:";
    for (std::size_t k = 0; k < std::min<std::size_t>(bad.size(), 10); ++k)
      os << " (" << points.points[bad[k]].x << ", " << points.points[bad[k]].y << ")";
    if (bad.size() > 10) os << " ...";
    fail(ErrorCode::kUncoverablePoint, os.str());
  }
  return inst;
}

// ---------------------------------------------------------------------------
// Generic unweighted set cover
// ---------------------------------------------------------------------------

/// columns[j] lists the rows (0..num_rows-1) that column j covers.
struct SetCoverProblem {
  std::size_t num_rows = 0;
  std::vector<std::vector<std::uint32_t>> columns;
};

inline SetCoverProblem to_problem(const CoverageInstance& inst) {
  return {inst.num_points(), inst.column_rows};
}

struct SolverStats {
  std::uint64_t nodes = 0;
  double runtime_s = 0.0;
  std::size_t lower_bound = 0;
  std::size_t reduced_rows = 0;
  std::size_t components = 0;
};

struct SetCoverResult {
  std::vector<std::size_t> chosen;  // ascending column indices
  bool optimal = false;
  SolverStats stats;
};

struct SolveOptions {
  double time_budget_s = 60.0;
  std::uint64_t node_limit = 0;  // 0 = unlimited
};

namespace detail {

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  bool none() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }
  std::size_t and_count(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) c += static_cast<std::size_t>(std::popcount(w_[k] & o.w_[k]));
    return c;
  }
  bool is_subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] &= o.w_[k];
    return r;
  }
  void subtract(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
  }
  bool intersects(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }
  void unite(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t x = w_[k];
      while (x) {
        const int b = std::countr_zero(x);
        f(k * 64 + static_cast<std::size_t>(b));
        x &= x - 1;
      }
    }
  }
  friend bool operator==(const Bits&, const Bits&) = default;
  friend bool operator<(const Bits& a, const Bits& b) { return a.w_ < b.w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

inline std::vector<std::vector<std::uint32_t>> rows_of(const SetCoverProblem& p) {
  std::vector<std::vector<std::uint32_t>> rows(p.num_rows);
  for (std::size_t j = 0; j < p.columns.size(); ++j)
    for (std::uint32_t r : p.columns[j]) {
      if (r >= p.num_rows) fail(ErrorCode::kInvalidArgument, "column references a row out of range");
      rows[r].push_back(static_cast<std::uint32_t>(j));
    }
  for (auto& r : rows) {
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
  }
  return rows;
}

inline void check_feasible(const std::vector<std::vector<std::uint32_t>>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].empty()) fail(ErrorCode::kInfeasible, "row " + std::to_string(i) + " is covered by no column");
}

inline std::vector<std::size_t> greedy_cover(const SetCoverProblem& p) {
  std::vector<char> covered(p.num_rows, 0);
  std::size_t remaining = p.num_rows;
  std::vector<std::size_t> chosen;
  std::vector<char> used(p.columns.size(), 0);
  while (remaining > 0) {
    std::size_t best = p.columns.size();
    std::size_t best_gain = 0;
    for (std::size_t j = 0; j < p.columns.size(); ++j) {
      if (used[j]) continue;
      std::size_t gain = 0;
      for (std::uint32_t r : p.columns[j]) gain += !covered[r];
      if (gain > best_gain) {
        best_gain = gain;
        best = j;
      }
    }
    if (best == p.columns.size()) fail(ErrorCode::kInfeasible, "greedy could not cover every row");
    used[best] = 1;
    chosen.push_back(best);
    for (std::uint32_t r : p.columns[best])
      if (!covered[r]) {
        covered[r] = 1;
        --remaining;
      }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

// Exact search over one connected component, rows already reduced.
class BranchAndBound {
 public:
  using Clock = std::chrono::steady_clock;

  BranchAndBound(std::vector<Bits> col_bits, std::vector<std::vector<std::uint32_t>> row_cols,
                 std::vector<std::size_t> col_ids, Clock::time_point deadline, std::uint64_t node_limit,
                 std::uint64_t* node_counter)
      : col_bits_(std::move(col_bits)),
        row_cols_(std::move(row_cols)),
        col_ids_(std::move(col_ids)),
        deadline_(deadline),
        node_limit_(node_limit),
        nodes_(node_counter) {}

  // Returns true when the search completed (incumbent proven optimal).
  bool run(std::vector<std::size_t> incumbent_local) {
    best_ = std::move(incumbent_local);
    Bits uncovered(row_cols_.size());
    for (std::size_t r = 0; r < row_cols_.size(); ++r) uncovered.set(r);
    std::vector<char> allowed(col_bits_.size(), 1);
    std::vector<std::size_t> chosen;
    root_bound_ = 0;
    search(uncovered, allowed, chosen, 0);
    return !aborted_;
  }

  const std::vector<std::size_t>& best() const { return best_; }
  std::size_t root_bound() const { return root_bound_; }

  // Lower bound on the columns still needed to cover `uncovered`.
  std::size_t bound(const Bits& uncovered, const std::vector<char>& allowed,
                    const std::vector<std::size_t>& sizes) const {
    const std::size_t u = uncovered.count();
    if (u == 0) return 0;
    std::size_t largest = 0;
    for (std::size_t j = 0; j < allowed.size(); ++j)
      if (allowed[j]) largest = std::max(largest, sizes[j]);
    if (largest == 0) return std::numeric_limits<std::size_t>::max() / 4;
    std::size_t lb = (u + largest - 1) / largest;

    // Rows ordered by number of allowed coverers, then index.
    std::vector<std::pair<std::size_t, std::size_t>> order;
    uncovered.for_each([&](std::size_t r) {
      std::size_t k = 0;
      for (std::uint32_t j : row_cols_[r]) k += allowed[j];
      order.emplace_back(k, r);
    });
    std::sort(order.begin(), order.end());

    // Pairwise-disjoint coverer sets.
    std::vector<char> touched(allowed.size(), 0);
    std::size_t disjoint = 0;
    for (auto [k, r] : order) {
      bool clash = false;
      for (std::uint32_t j : row_cols_[r])
        if (allowed[j] && touched[j]) {
          clash = true;
          break;
        }
      if (clash) continue;
      ++disjoint;
      for (std::uint32_t j : row_cols_[r])
        if (allowed[j]) touched[j] = 1;
    }
    lb = std::max(lb, disjoint);

    // Greedy dual packing: y_r <= residual capacity of every coverer.
    std::vector<double> cap(allowed.size(), 1.0);
    double dual = 0.0;
    for (auto [k, r] : order) {
      double y = 1.0;
      for (std::uint32_t j : row_cols_[r])
        if (allowed[j]) y = std::min(y, cap[j]);
      if (y <= 0.0) continue;
      dual += y;
      for (std::uint32_t j : row_cols_[r])
        if (allowed[j]) cap[j] -= y;
    }
    lb = std::max(lb, static_cast<std::size_t>(std::ceil(dual - 1e-9)));
    return lb;
  }

 private:
  bool out_of_budget() {
    if (aborted_) return true;
    if (node_limit_ && *nodes_ >= node_limit_) aborted_ = true;
    if ((*nodes_ & 255) == 0 && Clock::now() > deadline_) aborted_ = true;
    return aborted_;
  }

  void search(Bits uncovered, std::vector<char> allowed, std::vector<std::size_t>& chosen, int depth) {
    ++*nodes_;
    if (out_of_budget()) return;
    const std::size_t chosen_before = chosen.size();
    std::vector<std::size_t> sizes(col_bits_.size(), 0);

    // Reduce to a fixed point.
    for (bool changed = true; changed;) {
      changed = false;
      if (chosen.size() >= best_.size()) {
        chosen.resize(chosen_before);
        return;
      }
      for (std::size_t j = 0; j < col_bits_.size(); ++j) {
        if (!allowed[j]) continue;
        sizes[j] = col_bits_[j].and_count(uncovered);
        if (sizes[j] == 0) allowed[j] = 0;
      }
      // Dominated columns.
      for (std::size_t j = 0; j < col_bits_.size(); ++j) {
        if (!allowed[j]) continue;
        const Bits cj = col_bits_[j] & uncovered;
        for (std::size_t k = 0; k < col_bits_.size(); ++k) {
          if (k == j || !allowed[k] || sizes[k] < sizes[j]) continue;
          if (sizes[k] == sizes[j] && k > j) continue;  // equal sets: keep lower index
          if (cj.is_subset_of(col_bits_[k])) {
            allowed[j] = 0;
            break;
          }
        }
      }
      // Rows with a single remaining coverer force it.
      bool infeasible = false;
      std::vector<std::size_t> forced;
      uncovered.for_each([&](std::size_t r) {
        if (infeasible) return;
        std::size_t count = 0, last = 0;
        for (std::uint32_t j : row_cols_[r])
          if (allowed[j]) {
            ++count;
            last = j;
          }
        if (count == 0) infeasible = true;
        if (count == 1) forced.push_back(last);
      });
      if (infeasible) {
        chosen.resize(chosen_before);
        return;
      }
      std::sort(forced.begin(), forced.end());
      forced.erase(std::unique(forced.begin(), forced.end()), forced.end());
      for (std::size_t j : forced) {
        chosen.push_back(j);
        uncovered.subtract(col_bits_[j]);
        allowed[j] = 0;
        changed = true;
      }
    }

    if (uncovered.none()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      chosen.resize(chosen_before);
      return;
    }

    const std::size_t lb = bound(uncovered, allowed, sizes);
    if (depth == 0 && chosen_before == 0) root_bound_ = chosen.size() + lb;
    if (chosen.size() + lb >= best_.size()) {
      chosen.resize(chosen_before);
      return;
    }

    // Branch on the most constrained row.
    std::size_t branch_row = 0, fewest = std::numeric_limits<std::size_t>::max();
    uncovered.for_each([&](std::size_t r) {
      std::size_t k = 0;
      for (std::uint32_t j : row_cols_[r]) k += allowed[j];
      if (k < fewest) {
        fewest = k;
        branch_row = r;
      }
    });
    std::vector<std::size_t> options;
    for (std::uint32_t j : row_cols_[branch_row])
      if (allowed[j]) options.push_back(j);

    std::vector<char> child_allowed = allowed;
    for (std::size_t j : options) {
      Bits child_uncovered = uncovered;
      child_uncovered.subtract(col_bits_[j]);
      child_allowed[j] = 0;
      chosen.push_back(j);
      search(std::move(child_uncovered), child_allowed, chosen, depth + 1);
      chosen.pop_back();
      if (aborted_) break;
      if (chosen.size() + 1 >= best_.size()) break;  // no child can improve
    }
    chosen.resize(chosen_before);
  }

  std::vector<Bits> col_bits_;
  std::vector<std::vector<std::uint32_t>> row_cols_;
  std::vector<std::size_t> col_ids_;
  Clock::time_point deadline_;
  std::uint64_t node_limit_;
  std::uint64_t* nodes_;
  std::vector<std::size_t> best_;
  std::size_t root_bound_ = 0;
  bool aborted_ = false;
};

}  // namespace detail

/// Greedy: repeatedly take the column covering most uncovered rows (lowest
/// index on ties). Marked optimal only when it meets the root lower bound.
inline SetCoverResult solve_greedy(const SetCoverProblem& p);

/// Exact minimum cover. If the budget runs out the best incumbent is
/// returned with optimal = false.
inline SetCoverResult solve_exact(const SetCoverProblem& p, const SolveOptions& opts = {}) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(std::max(0.0, opts.time_budget_s)));
  SetCoverResult result;
  const auto rows = detail::rows_of(p);
  detail::check_feasible(rows);
  if (p.num_rows == 0) {
    result.optimal = true;
    return result;
  }

  // Collapse duplicate rows and drop rows whose coverer set contains another row's.
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (rows[a].size() != rows[b].size()) return rows[a].size() < rows[b].size();
    if (rows[a] != rows[b]) return rows[a] < rows[b];
    return a < b;
  });
  const std::size_t m = p.columns.size();
  std::vector<detail::Bits> kept_sets;
  std::vector<std::size_t> kept_rows;
  for (std::size_t idx : order) {
    detail::Bits s(m);
    for (std::uint32_t j : rows[idx]) s.set(j);
    bool implied = false;
    for (const auto& k : kept_sets)
      if (k.is_subset_of(s)) {
        implied = true;
        break;
      }
    if (!implied) {
      kept_sets.push_back(std::move(s));
      kept_rows.push_back(idx);
    }
  }
  result.stats.reduced_rows = kept_rows.size();

  // Connected components over the reduced rows.
  std::vector<std::size_t> parent(kept_rows.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::size_t> first_row_of_col(m, std::numeric_limits<std::size_t>::max());
  for (std::size_t r = 0; r < kept_rows.size(); ++r)
    for (std::uint32_t j : rows[kept_rows[r]]) {
      if (first_row_of_col[j] == std::numeric_limits<std::size_t>::max())
        first_row_of_col[j] = r;
      else
        parent[find(r)] = find(first_row_of_col[j]);
    }
  std::vector<std::vector<std::size_t>> comps;
  {
    std::vector<std::size_t> comp_of(kept_rows.size(), std::numeric_limits<std::size_t>::max());
    for (std::size_t r = 0; r < kept_rows.size(); ++r) {
      const std::size_t root = find(r);
      if (comp_of[root] == std::numeric_limits<std::size_t>::max()) {
        comp_of[root] = comps.size();
        comps.emplace_back();
      }
      comps[comp_of[root]].push_back(r);
    }
  }
  result.stats.components = comps.size();

  bool all_optimal = true;
  std::uint64_t nodes = 0;
  for (const auto& comp : comps) {
    // Local column numbering in ascending global index.
    std::vector<std::size_t> col_ids;
    for (std::size_t r : comp)
      for (std::uint32_t j : rows[kept_rows[r]]) col_ids.push_back(j);
    std::sort(col_ids.begin(), col_ids.end());
    col_ids.erase(std::unique(col_ids.begin(), col_ids.end()), col_ids.end());
    std::vector<std::uint32_t> local_of(m, 0);
    for (std::size_t k = 0; k < col_ids.size(); ++k) local_of[col_ids[k]] = static_cast<std::uint32_t>(k);

    std::vector<detail::Bits> col_bits(col_ids.size(), detail::Bits(comp.size()));
    std::vector<std::vector<std::uint32_t>> row_cols(comp.size());
    SetCoverProblem sub{comp.size(), std::vector<std::vector<std::uint32_t>>(col_ids.size())};
    for (std::size_t lr = 0; lr < comp.size(); ++lr)
      for (std::uint32_t j : rows[kept_rows[comp[lr]]]) {
        const std::uint32_t lj = local_of[j];
        col_bits[lj].set(lr);
        row_cols[lr].push_back(lj);
        sub.columns[lj].push_back(static_cast<std::uint32_t>(lr));
      }

    auto incumbent = detail::greedy_cover(sub);
    detail::BranchAndBound bnb(std::move(col_bits), std::move(row_cols), col_ids, deadline, opts.node_limit,
                               &nodes);
    const bool complete = bnb.run(incumbent);
    all_optimal = all_optimal && complete;
    result.stats.lower_bound += complete ? bnb.best().size() : bnb.root_bound();
    for (std::size_t lj : bnb.best()) result.chosen.push_back(col_ids[lj]);
  }
  std::sort(result.chosen.begin(), result.chosen.end());
  result.optimal = all_optimal;
  result.stats.nodes = nodes;
  result.stats.runtime_s = std::chrono::duration<double>(Clock::now() - start).count();
  if (result.chosen.empty() && p.num_rows > 0)
    fail(ErrorCode::kTimeBudgetExceeded, "no incumbent found within the time budget");
  return result;
}

inline SetCoverResult solve_greedy(const SetCoverProblem& p) {
  const auto start = std::chrono::steady_clock::now();
  const auto rows = detail::rows_of(p);
  detail::check_feasible(rows);
  SetCoverResult result;
  result.chosen = detail::greedy_cover(p);

  // Root bound on the unreduced problem.
  std::vector<detail::Bits> col_bits(p.columns.size(), detail::Bits(p.num_rows));
  for (std::size_t j = 0; j < p.columns.size(); ++j)
    for (std::uint32_t r : p.columns[j]) col_bits[j].set(r);
  std::vector<std::vector<std::uint32_t>> row_cols = rows;
  std::vector<std::size_t> ids(p.columns.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::uint64_t nodes = 0;
  detail::BranchAndBound probe(col_bits, row_cols, ids, std::chrono::steady_clock::time_point::max(), 0, &nodes);
  detail::Bits all(p.num_rows);
  for (std::size_t r = 0; r < p.num_rows; ++r) all.set(r);
  std::vector<char> allowed(p.columns.size(), 1);
  std::vector<std::size_t> sizes(p.columns.size());
  for (std::size_t j = 0; j < p.columns.size(); ++j) sizes[j] = p.columns[j].size();
  result.stats.lower_bound = p.num_rows ? probe.bound(all, allowed, sizes) : 0;
  result.optimal = result.chosen.size() <= result.stats.lower_bound;
  result.stats.runtime_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

// ---------------------------------------------------------------------------
// Placement wrappers
// ---------------------------------------------------------------------------

struct PlacementSolution {
  std::vector<std::size_t> chosen;  // lattice indices, ascending
  std::size_t count = 0;
  bool optimal = false;
  // histogram[k] = number of target points seen by exactly k chosen cameras
  std::vector<std::size_t> cover_histogram;
  SolverStats stats;
};

struct CoverageReport {
  std::vector<std::size_t> multiplicity;  // per target point
  std::vector<std::size_t> violations;    // indices of uncovered points
  std::vector<std::size_t> histogram;

  bool ok() const { return violations.empty(); }
};

/// Recounts coverage geometrically from the points and chosen centres,
/// independently of the stored incidence matrix.
inline CoverageReport verify_solution(const CoverageInstance& inst, const std::vector<std::size_t>& chosen) {
  CoverageReport rep;
  const auto& pts = inst.points.points;
  rep.multiplicity.assign(pts.size(), 0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t c : chosen)
      if (c < inst.candidates.centres.size() && inst.candidates.covers(c, pts[i])) ++rep.multiplicity[i];
    if (rep.multiplicity[i] == 0) rep.violations.push_back(i);
  }
  for (std::size_t k : rep.multiplicity) {
    if (rep.histogram.size() <= k) rep.histogram.resize(k + 1, 0);
    ++rep.histogram[k];
  }
  return rep;
}

inline CoverageReport verify_solution(const CoverageInstance& inst, const PlacementSolution& sol) {
  return verify_solution(inst, sol.chosen);
}

namespace detail {
inline PlacementSolution to_placement(const CoverageInstance& inst, const SetCoverResult& r) {
  PlacementSolution sol;
  for (std::size_t j : r.chosen) sol.chosen.push_back(inst.columns[j]);
  std::sort(sol.chosen.begin(), sol.chosen.end());
  sol.count = sol.chosen.size();
  sol.optimal = r.optimal;
  sol.stats = r.stats;
  sol.cover_histogram = verify_solution(inst, sol.chosen).histogram;
  return sol;
}
}  // namespace detail

inline PlacementSolution solve_set_cover_exact(const CoverageInstance& inst, double time_budget_s = 60.0,
                                               std::uint64_t node_limit = 0) {
  return detail::to_placement(inst, solve_exact(to_problem(inst), {time_budget_s, node_limit}));
}

inline PlacementSolution solve_set_cover_greedy(const CoverageInstance& inst) {
  return detail::to_placement(inst, solve_greedy(to_problem(inst)));
}

// ---------------------------------------------------------------------------
// Instance dump
// ---------------------------------------------------------------------------

inline nlohmann::json instance_to_json(const CoverageInstance& inst) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["side"] = std::string(to_string(inst.points.side));
  j["grid_spacing_m"] = inst.points.spacing_m;
  j["points"] = nlohmann::json::array();
  for (const Vec2& p : inst.points.points) j["points"].push_back({p.x, p.y});
  j["candidates"] = nlohmann::json::array();
  for (const Vec2& c : inst.candidates.centres) j["candidates"].push_back({c.x, c.y});
  j["footprint"] = {{"width_m", inst.candidates.footprint.width_m},
                    {"length_m", inst.candidates.footprint.length_m}};
  j["overlap_fraction"] = inst.candidates.overlap_fraction;
  j["columns"] = inst.columns;
  j["matrix"] = inst.rows;  // per point: positions into "columns"
  return j;
}

/// Rebuilds an instance from a dump, recomputing the matrix and checking it
/// against the stored one.
inline CoverageInstance instance_from_json(const nlohmann::json& j) {
  try {
    TargetGrid grid;
    grid.spacing_m = j.at("grid_spacing_m").get<double>();
    grid.side = j.at("side").get<std::string>() == "external" ? CoverageSide::kExternal : CoverageSide::kInternal;
    for (const auto& p : j.at("points")) grid.points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    if (!grid.points.empty()) grid.origin = grid.points.front();
    CandidateLattice lat;
    lat.footprint.width_m = j.at("footprint").at("width_m").get<double>();
    lat.footprint.length_m = j.at("footprint").at("length_m").get<double>();
    lat.overlap_fraction = j.value("overlap_fraction", 0.0);
    lat.step_x_m = (1.0 - lat.overlap_fraction) * lat.footprint.width_m;
    lat.step_y_m = (1.0 - lat.overlap_fraction) * lat.footprint.length_m;
    for (const auto& c : j.at("candidates")) lat.centres.push_back({c.at(0).get<double>(), c.at(1).get<double>()});
    if (!lat.centres.empty()) lat.origin = lat.centres.front();
    CoverageInstance inst = build_coverage_matrix(grid, lat);
    if (j.contains("matrix") && j["matrix"].get<std::vector<std::vector<std::uint32_t>>>() != inst.rows)
      fail(ErrorCode::kMalformedSource, "stored matrix disagrees with the geometry");
    return inst;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kMalformedSource, std::string("instance JSON: ") + e.what());
  }
}

}  // namespace hangar

#endif  // HANGAR_PLACEMENT_HPP_

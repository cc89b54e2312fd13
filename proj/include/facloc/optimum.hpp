// Copyright 2026 The facloc Authors
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

#ifndef FACLOC_OPTIMUM_HPP_
#define FACLOC_OPTIMUM_HPP_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "facloc/objectives.hpp"

namespace facloc {

struct OptResult {
  Placement placement;
  Rat value;
};

namespace detail {

// Every objective restricted to one feasible interval is piecewise linear
// in the facility position, so an optimum is always attained at an interval
// endpoint or an interior breakpoint. Breakpoints by objective:
//   distances / welfare sums:   agent positions
//   max-dist / egal:            midpoint of the two extreme agents
//   min-sat:                    positions where two satisfaction lines meet
// Enumerating exactly these points makes the optimizers exact, not
// approximate.
inline std::vector<Rat> candidate_points_for(std::span<const Rat> agents,
                                             const FeasibleRegion& region,
                                             Objective obj) {
  std::vector<Rat> out;
  for (const Interval& iv : region.intervals) {
    out.push_back(iv.lo);
    out.push_back(iv.hi);
  }
  for (const Rat& x : agents) {
    if (contains(region, x)) out.push_back(x);
  }
  if ((obj == Objective::kMaxDistance || obj == Objective::kEgalitarianWelfare) &&
      !agents.empty()) {
    Rat mid = (agents.front() + agents.back()) / 2;
    if (contains(region, mid)) out.push_back(mid);
  }
  if (obj == Objective::kMinSatisfaction) {
    // Satisfaction of agent i at facility y is 1 - |y - x_i| / dmax_i, a
    // tent with peak x_i and slopes +-1/dmax_i. Two tents meet at most
    // twice: between the peaks, and once more on a shared side when the
    // slopes differ.
    const std::size_t n = agents.size();
    std::vector<Rat> dmax(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Rat& x = agents[i];
      dmax[i] = x >= rat(1, 2) ? x : Rat(1 - x);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (agents[i] == agents[j]) continue;
        Rat between = (agents[i] * dmax[j] + agents[j] * dmax[i]) /
                      (dmax[i] + dmax[j]);
        if (is_coordinate(between) && contains(region, between)) {
          out.push_back(between);
        }
        if (dmax[i] != dmax[j]) {
          Rat aside = (agents[j] * dmax[i] - agents[i] * dmax[j]) /
                      (dmax[i] - dmax[j]);
          if (is_coordinate(aside) && contains(region, aside)) {
            out.push_back(aside);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Best single location for this agent group; value ties go to the smaller
// location.
inline OptResult best_single_for(std::span<const Rat> agents,
                                 const FeasibleRegion& region, Objective obj) {
  std::optional<OptResult> best;
  for (const Rat& y : candidate_points_for(agents, region, obj)) {
    Rat value = evaluate_agents(agents, {y}, obj);
    if (!best || better(obj, value, best->value)) {
      best = OptResult{{y}, std::move(value)};
    }
  }
  return *best;  // candidate list is never empty: region has an interval
}

}  // namespace detail

inline std::vector<Rat> candidate_points(const Instance& instance,
                                         Objective obj) {
  return detail::candidate_points_for(instance.agents, instance.region, obj);
}

inline OptResult optimal_single(const Instance& instance, Objective obj) {
  if (instance.facilities != 1) {
    throw Error(Errc::kArityMismatch, "optimal_single needs one facility");
  }
  return detail::best_single_for(instance.agents, instance.region, obj);
}

// Exact two-facility optimum. Sorted agents admit an optimal solution in
// which some prefix is served by the left facility and the rest by the
// right one, so trying every prefix/suffix split with the exact
// single-facility optimizer covers an optimal placement. The combined pair
// is re-scored on the whole instance, which lets agents defect to the
// closer facility; that can only improve the pair, so the best split still
// attains the true optimum. An empty side parks its facility at the
// leftmost admissible point.
inline OptResult optimal_two(const Instance& instance, Objective obj) {
  if (instance.facilities != 2) {
    throw Error(Errc::kArityMismatch, "optimal_two needs two facilities");
  }
  const std::vector<Rat>& agents = instance.agents;
  const std::size_t n = agents.size();
  const Rat leftmost = instance.region.intervals.front().lo;
  std::optional<OptResult> best;
  for (std::size_t k = 0; k <= n; ++k) {
    std::span<const Rat> prefix(agents.data(), k);
    std::span<const Rat> suffix(agents.data() + k, n - k);
    Rat y1 = k == 0
                 ? leftmost
                 : detail::best_single_for(prefix, instance.region, obj)
                       .placement.front();
    Rat y2 = k == n
                 ? leftmost
                 : detail::best_single_for(suffix, instance.region, obj)
                       .placement.front();
    if (y2 < y1) std::swap(y1, y2);
    Placement pair = {y1, y2};
    Rat value = evaluate(instance, pair, obj);
    if (!best || better(obj, value, best->value) ||
        (value == best->value && pair < best->placement)) {
      best = OptResult{std::move(pair), std::move(value)};
    }
  }
  return *best;
}

// Independent check oracle: exhaustive scan of lattice points k/resolution
// inside the region, plus all interval endpoints. Exactness is only
// guaranteed when every relevant breakpoint lies on that lattice; see the
// exact optimizers above for the general case.
inline OptResult grid_optimal(const Instance& instance, Objective obj,
                              long resolution) {
  if (resolution < 1) throw std::invalid_argument("grid resolution < 1");
  std::vector<Rat> points;
  for (long k = 0; k <= resolution; ++k) {
    Rat p = rat(k, resolution);
    if (contains(instance.region, p)) points.push_back(std::move(p));
  }
  for (const Interval& iv : instance.region.intervals) {
    points.push_back(iv.lo);
    points.push_back(iv.hi);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::optional<OptResult> best;
  auto consider = [&](Placement pl) {
    Rat value = evaluate(instance, pl, obj);
    if (!best || better(obj, value, best->value) ||
        (value == best->value && pl < best->placement)) {
      best = OptResult{std::move(pl), std::move(value)};
    }
  };
  if (instance.facilities == 1) {
    for (const Rat& y : points) consider({y});
  } else {
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t j = i; j < points.size(); ++j) {
        consider({points[i], points[j]});
      }
    }
  }
  return *best;
}

}  // namespace facloc

#endif  // FACLOC_OPTIMUM_HPP_

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

#ifndef FACLOC_CORE_HPP_
#define FACLOC_CORE_HPP_

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "facloc/error.hpp"
#include "facloc/rational.hpp"

namespace facloc {

// Side taken when a point is exactly midway between two admissible options.
enum class TieBreak { kLeft, kRight };

// Where a facility may be built: a union of closed sub-intervals of [0,1].
// A degenerate interval [a,a] is a single admissible point. After
// normalize_region the intervals are sorted, pairwise disjoint, and
// non-touching, so every query below can scan left to right.
struct Interval {
  Rat lo;
  Rat hi;

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
  friend bool operator<(const Interval& a, const Interval& b) {
    return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
  }
};

struct FeasibleRegion {
  std::vector<Interval> intervals;

  friend bool operator==(const FeasibleRegion& a, const FeasibleRegion& b) {
    return a.intervals == b.intervals;
  }
};

// Validates and canonicalizes: sorts by lower endpoint, rejects inverted or
// out-of-range intervals, merges touching/overlapping ones into their union.
inline FeasibleRegion normalize_region(FeasibleRegion region) {
  if (region.intervals.empty()) {
    throw Error(Errc::kEmptyRegion, "feasible region has no intervals");
  }
  for (const Interval& iv : region.intervals) {
    if (iv.lo > iv.hi) {
      throw Error(Errc::kBadInterval, "interval [" + rat_str(iv.lo) + ", " +
                                          rat_str(iv.hi) + "] is inverted");
    }
    if (iv.lo < 0 || iv.hi > 1) {
      throw Error(Errc::kCoordinateOutOfRange,
                  "interval [" + rat_str(iv.lo) + ", " + rat_str(iv.hi) +
                      "] leaves [0, 1]");
    }
  }
  std::sort(region.intervals.begin(), region.intervals.end());
  std::vector<Interval> merged;
  merged.reserve(region.intervals.size());
  for (const Interval& iv : region.intervals) {
    if (!merged.empty() && iv.lo <= merged.back().hi) {
      if (iv.hi > merged.back().hi) merged.back().hi = iv.hi;
    } else {
      merged.push_back(iv);
    }
  }
  region.intervals = std::move(merged);
  return region;
}

inline FeasibleRegion point_region(const std::vector<Rat>& points) {
  FeasibleRegion region;
  region.intervals.reserve(points.size());
  for (const Rat& p : points) region.intervals.push_back({p, p});
  return normalize_region(std::move(region));
}

inline FeasibleRegion interval_region(
    const std::vector<std::pair<Rat, Rat>>& pairs) {
  FeasibleRegion region;
  region.intervals.reserve(pairs.size());
  for (const auto& [lo, hi] : pairs) region.intervals.push_back({lo, hi});
  return normalize_region(std::move(region));
}

inline bool contains(const FeasibleRegion& region, const Rat& p) {
  for (const Interval& iv : region.intervals) {
    if (p < iv.lo) return false;  // intervals sorted, no later one can hold p
    if (p <= iv.hi) return true;
  }
  return false;
}

// Closest admissible point to p. A point exactly midway between two
// intervals has two closest admissible points; the tie argument picks a
// side, and the same side is used everywhere so mechanisms built on this
// projection stay deterministic.
inline Rat nearest_feasible(const FeasibleRegion& region, const Rat& p,
                            TieBreak tie) {
  const auto& iv = region.intervals;
  if (iv.empty()) throw Error(Errc::kEmptyRegion, "projection on empty region");
  if (p <= iv.front().lo) return iv.front().lo;
  if (p >= iv.back().hi) return iv.back().hi;
  for (std::size_t k = 0; k < iv.size(); ++k) {
    if (p < iv[k].lo) {
      // p lies in the open gap between interval k-1 and interval k.
      const Rat& left = iv[k - 1].hi;
      const Rat& right = iv[k].lo;
      Rat to_left = p - left;
      Rat to_right = right - p;
      if (to_left < to_right) return left;
      if (to_right < to_left) return right;
      return tie == TieBreak::kLeft ? left : right;
    }
    if (p <= iv[k].hi) return p;
  }
  return iv.back().hi;  // unreachable: p < back().hi was handled above
}

// One problem: agent reports, admissible facility set, facility count.
// Agents are kept sorted; mechanisms in this library are anonymous, so the
// multiset of reports is the whole input.
struct Instance {
  std::vector<Rat> agents;
  FeasibleRegion region;
  int facilities = 1;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.facilities == b.facilities && a.agents == b.agents &&
           a.region == b.region;
  }
};

inline Instance normalize_instance(std::vector<Rat> raw_agents,
                                   FeasibleRegion region, int facilities) {
  if (raw_agents.empty()) {
    throw Error(Errc::kEmptyAgents, "instance needs at least one agent");
  }
  for (const Rat& a : raw_agents) {
    if (!is_coordinate(a)) {
      throw Error(Errc::kCoordinateOutOfRange,
                  "agent location " + rat_str(a) + " leaves [0, 1]");
    }
  }
  if (facilities != 1 && facilities != 2) {
    throw Error(Errc::kBadFacilityCount,
                "facility count " + std::to_string(facilities) +
                    " not supported (1 or 2)");
  }
  std::sort(raw_agents.begin(), raw_agents.end());
  return Instance{std::move(raw_agents), normalize_region(std::move(region)),
                  facilities};
}

// Facility locations, sorted ascending.
using Placement = std::vector<Rat>;

// Total order used for deterministic tie-breaking in searches and reports.
inline bool instance_less(const Instance& a, const Instance& b) {
  if (a.agents != b.agents) return a.agents < b.agents;
  auto key = [](const Instance& inst) {
    std::vector<std::pair<Rat, Rat>> flat;
    flat.reserve(inst.region.intervals.size());
    for (const Interval& iv : inst.region.intervals) flat.push_back({iv.lo, iv.hi});
    return flat;
  };
  auto ka = key(a);
  auto kb = key(b);
  if (ka != kb) return ka < kb;
  return a.facilities < b.facilities;
}

}  // namespace facloc

#endif  // FACLOC_CORE_HPP_

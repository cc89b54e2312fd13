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

#ifndef FACLOC_FAMILIES_HPP_
#define FACLOC_FAMILIES_HPP_

#include <algorithm>
#include <string>
#include <vector>

#include "facloc/core.hpp"
#include "facloc/objectives.hpp"

namespace facloc {

// Structured worst-case inputs. Each family pins a mechanism into a bad
// admissible point while a much better one exists, or makes some agent's
// score collapse entirely. They drive the lower-bound certificates, the
// adversarial search sweep, and the ratio tables.

// Two reports straddling 1/2 by eps, only the two given points admissible.
inline Instance tie_pair(const Rat& eps, const Rat& left, const Rat& right) {
  Rat half = rat(1, 2);
  return normalize_instance({Rat(half - eps), Rat(half + eps)},
                            point_region({left, right}), 1);
}

// Reports at 1/4 and 3/4 with only the extremes admissible.
inline Instance quarter_pair_ends() {
  return normalize_instance({rat(1, 4), rat(3, 4)},
                            point_region({rat(0), rat(1)}), 1);
}

// Four admissible points pinched around 1/2 at scale 1/k, two inner agents
// sitting exactly on the inner points and two others just outside.
inline Instance minsat_cluster(long k) {
  if (k < 5) {
    throw Error(Errc::kCoordinateOutOfRange,
                "cluster scale k must be at least 5, got " + std::to_string(k));
  }
  Rat half = rat(1, 2);
  Rat step = rat(1, k);
  Rat fine = rat(1, k * k);
  Rat p1 = half - step;
  Rat p2 = half - step + fine;
  Rat p3 = half + step - fine;
  Rat p4 = half + step;
  return normalize_instance(
      {Rat(half - 2 * step), p2, p3, Rat(half + 2 * step)},
      point_region({p1, p2, p3, p4}), 1);
}

struct FamilyInstance {
  std::string id;
  Instance instance;
  // Objectives whose table cell this family was built to stress. The search
  // sweep probes every family on every objective regardless.
  std::vector<Objective> targets;
};

// The menu for a given facility count. n scales the families that grow;
// eps shifts the near-tie families and is skipped where it leaves a
// family's valid range.
inline std::vector<FamilyInstance> proof_instances(int facilities, long n,
                                                   const Rat& eps) {
  std::vector<FamilyInstance> out;
  auto add = [&out](std::string id, std::vector<Rat> agents,
                    FeasibleRegion region, int m,
                    std::vector<Objective> targets) {
    out.push_back({std::move(id),
                   normalize_instance(std::move(agents), region, m),
                   std::move(targets)});
  };
  const Rat half = rat(1, 2);
  const bool eps_ok = eps > 0 && eps < half;

  if (facilities == 1) {
    if (eps_ok && eps < rat(1, 3)) {
      // Median lands just left of the midpoint between 0 and 2/3 and gets
      // projected all the way to 0, a full unit from the agent at 1.
      Rat near = rat(1, 3) - eps;
      add("maxdist-wedge", {near, near, rat(1)},
          point_region({rat(0), rat(2, 3)}), 1, {Objective::kMaxDistance});
    }
    {
      // Half the crowd at 1/2, half at 1; the median sits at 1/2 and the
      // projection tie sends it to 0, the far side from everyone.
      const long k = std::max<long>(1, n / 2);
      std::vector<Rat> agents(k, half);
      agents.insert(agents.end(), k, rat(1));
      add("util-split-k" + std::to_string(k), std::move(agents),
          point_region({rat(0), rat(1)}), 1,
          {Objective::kTotalDistance, Objective::kUtilitarianWelfare});
    }
    add("egal-outlier", {rat(0), rat(0), rat(1)},
        point_region({rat(0), half, rat(1)}), 1,
        {Objective::kEgalitarianWelfare, Objective::kMinSatisfaction});
    add("socsat-outlier", {half, half, rat(1)},
        point_region({rat(0), rat(1)}), 1,
        {Objective::kSocialSatisfaction, Objective::kMaxDistance});
    if (eps_ok) {
      out.push_back({"tie-pair-quarters", tie_pair(eps, rat(1, 4), rat(3, 4)),
                     {Objective::kMaxDistance}});
      out.push_back({"tie-pair-ends", tie_pair(eps, rat(0), rat(1)),
                     {Objective::kMaxDistance, Objective::kTotalDistance}});
    }
    out.push_back({"quarter-pair-ends", quarter_pair_ends(),
                   {Objective::kEgalitarianWelfare}});
    {
      const long k = std::max<long>(5, n);
      out.push_back({"minsat-cluster-k" + std::to_string(k), minsat_cluster(k),
                     {Objective::kMinSatisfaction}});
    }
  } else {
    const long grown = std::max<long>(3, n);
    {
      // Everyone but the extremes sits at 1/2, which the endpoint rule
      // never serves.
      std::vector<Rat> agents(grown - 2, half);
      agents.push_back(rat(0));
      agents.push_back(rat(1));
      add("ep-mid-cluster-n" + std::to_string(grown), std::move(agents),
          point_region({rat(0), half, rat(1)}), 2,
          {Objective::kTotalDistance, Objective::kUtilitarianWelfare});
    }
    add("ep-egal-quarter", {rat(0), half, rat(1)},
        point_region({rat(0), rat(1, 4), rat(1)}), 2,
        {Objective::kEgalitarianWelfare});
    if (eps_ok && eps < rat(1, 4)) {
      add("ep-egal-shift", {Rat(rat(1, 4) - eps), half, rat(1)},
          point_region({rat(0), half, rat(1)}), 2,
          {Objective::kEgalitarianWelfare, Objective::kMaxDistance});
      std::vector<Rat> agents(grown - 2, half);
      agents.push_back(rat(1, 4) - eps);
      agents.push_back(rat(3, 4) + eps);
      add("ep-sat-flanks-n" + std::to_string(grown), std::move(agents),
          point_region({rat(0), half, rat(1)}), 2,
          {Objective::kSocialSatisfaction});
    }
    // Fallback coverage keeps every table cell populated even when eps
    // disables the sharper families above.
    add("ep-three-points", {rat(0), half, rat(1)},
        point_region({rat(0), half, rat(1)}), 2,
        {Objective::kMinSatisfaction, Objective::kMaxDistance,
         Objective::kSocialSatisfaction});
  }
  return out;
}

}  // namespace facloc

#endif  // FACLOC_FAMILIES_HPP_

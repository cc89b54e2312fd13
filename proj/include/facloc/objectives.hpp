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

#ifndef FACLOC_OBJECTIVES_HPP_
#define FACLOC_OBJECTIVES_HPP_

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "facloc/core.hpp"

namespace facloc {

// Six aggregate measures of a placement. With d_i the distance from agent i
// to its nearest facility and dmax_i = max(x_i, 1-x_i) the worst distance
// that agent can ever suffer inside [0,1]:
//   total-dist  sum d_i                    minimized
//   max-dist    max d_i                    minimized
//   util        sum (1 - d_i)              maximized
//   egal        min (1 - d_i)              maximized
//   soc-sat     sum (1 - d_i / dmax_i)     maximized
//   min-sat     min (1 - d_i / dmax_i)     maximized
// d_i <= dmax_i always, so satisfaction terms stay in [0,1].
enum class Objective {
  kTotalDistance,
  kMaxDistance,
  kUtilitarianWelfare,
  kEgalitarianWelfare,
  kSocialSatisfaction,
  kMinSatisfaction,
};

inline constexpr std::array<Objective, 6> kAllObjectives = {
    Objective::kTotalDistance,      Objective::kMaxDistance,
    Objective::kUtilitarianWelfare, Objective::kEgalitarianWelfare,
    Objective::kSocialSatisfaction, Objective::kMinSatisfaction,
};

enum class Orientation { kMinimize, kMaximize };

inline Orientation orientation(Objective obj) {
  switch (obj) {
    case Objective::kTotalDistance:
    case Objective::kMaxDistance:
      return Orientation::kMinimize;
    default:
      return Orientation::kMaximize;
  }
}

inline const char* objective_name(Objective obj) {
  switch (obj) {
    case Objective::kTotalDistance: return "total-dist";
    case Objective::kMaxDistance: return "max-dist";
    case Objective::kUtilitarianWelfare: return "util";
    case Objective::kEgalitarianWelfare: return "egal";
    case Objective::kSocialSatisfaction: return "soc-sat";
    case Objective::kMinSatisfaction: return "min-sat";
  }
  return "?";
}

inline std::optional<Objective> objective_from_name(std::string_view name) {
  for (Objective obj : kAllObjectives) {
    if (name == objective_name(obj)) return obj;
  }
  return std::nullopt;
}

// True when a improves on b under the objective's orientation.
inline bool better(Objective obj, const Rat& a, const Rat& b) {
  return orientation(obj) == Orientation::kMinimize ? a < b : a > b;
}

inline Rat distance_to_placement(const Rat& x, const Placement& placement) {
  if (placement.empty()) {
    throw Error(Errc::kEmptyList, "placement has no facilities");
  }
  Rat best = rat_abs(x - placement.front());
  for (std::size_t j = 1; j < placement.size(); ++j) {
    Rat d = rat_abs(x - placement[j]);
    if (d < best) best = d;
  }
  return best;
}

struct AgentScore {
  Rat distance;
  Rat utility;
  Rat happiness;
  Rat dmax;
};

inline AgentScore agent_score(const Rat& x, const Placement& placement) {
  AgentScore s;
  s.distance = distance_to_placement(x, placement);
  s.utility = 1 - s.distance;
  s.dmax = x >= rat(1, 2) ? x : Rat(1 - x);
  s.happiness = 1 - s.distance / s.dmax;
  return s;
}

// Aggregate over an explicit agent list. evaluate() is the instance-level
// entry point; the span form exists so optimizers can score sub-groups.
inline Rat evaluate_agents(std::span<const Rat> agents,
                           const Placement& placement, Objective obj) {
  if (agents.empty()) throw Error(Errc::kEmptyAgents, "no agents to score");
  switch (obj) {
    case Objective::kTotalDistance: {
      Rat acc = 0;
      for (const Rat& x : agents) acc += distance_to_placement(x, placement);
      return acc;
    }
    case Objective::kMaxDistance: {
      Rat worst = distance_to_placement(agents.front(), placement);
      for (std::size_t i = 1; i < agents.size(); ++i) {
        Rat d = distance_to_placement(agents[i], placement);
        if (d > worst) worst = d;
      }
      return worst;
    }
    case Objective::kUtilitarianWelfare: {
      Rat acc = 0;
      for (const Rat& x : agents) acc += agent_score(x, placement).utility;
      return acc;
    }
    case Objective::kEgalitarianWelfare: {
      Rat worst = agent_score(agents.front(), placement).utility;
      for (std::size_t i = 1; i < agents.size(); ++i) {
        Rat u = agent_score(agents[i], placement).utility;
        if (u < worst) worst = u;
      }
      return worst;
    }
    case Objective::kSocialSatisfaction: {
      Rat acc = 0;
      for (const Rat& x : agents) acc += agent_score(x, placement).happiness;
      return acc;
    }
    case Objective::kMinSatisfaction: {
      Rat worst = agent_score(agents.front(), placement).happiness;
      for (std::size_t i = 1; i < agents.size(); ++i) {
        Rat h = agent_score(agents[i], placement).happiness;
        if (h < worst) worst = h;
      }
      return worst;
    }
  }
  throw std::logic_error("unhandled objective");
}

// Scores any placement, feasible or not: baselines that ignore the region
// must be measurable too.
inline Rat evaluate(const Instance& instance, const Placement& placement,
                    Objective obj) {
  return evaluate_agents(instance.agents, placement, obj);
}

}  // namespace facloc

#endif  // FACLOC_OBJECTIVES_HPP_

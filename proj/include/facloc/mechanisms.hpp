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

#ifndef FACLOC_MECHANISMS_HPP_
#define FACLOC_MECHANISMS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "facloc/core.hpp"

namespace facloc {

// Lower median: with p values sorted ascending, the element at 1-based rank
// ceil(p/2). Lists built below always have odd length (n reports plus n-1
// phantoms), so the median is unique anyway; the lower rule only matters for
// callers handing in even-length lists.
inline Rat median_of(std::vector<Rat> values) {
  if (values.empty()) throw Error(Errc::kEmptyList, "median of empty list");
  std::sort(values.begin(), values.end());
  return values[(values.size() - 1) / 2];
}

// n-1 fixed values mixed into the median alongside the n reports. The four
// named profiles reproduce the classic single-facility rules on [0,1]:
// all-zero phantoms pick the leftmost report, all-one the rightmost,
// floor(n/2) zeros then ones the (lower) median report, and all-half the
// point 1/2 clamped to the report range.
struct PhantomProfile {
  enum class Kind { kLeftmost, kRightmost, kMedian, kMidOrNearest, kCustom };

  Kind kind = Kind::kMedian;
  std::vector<Rat> values;  // kCustom only

  static PhantomProfile leftmost() { return {Kind::kLeftmost, {}}; }
  static PhantomProfile rightmost() { return {Kind::kRightmost, {}}; }
  static PhantomProfile median() { return {Kind::kMedian, {}}; }
  static PhantomProfile mid_or_nearest() { return {Kind::kMidOrNearest, {}}; }
  static PhantomProfile custom(std::vector<Rat> values) {
    return {Kind::kCustom, std::move(values)};
  }

  std::vector<Rat> expand(std::size_t n) const {
    if (n == 0) throw Error(Errc::kEmptyAgents, "no agents to phantom");
    const std::size_t count = n - 1;
    switch (kind) {
      case Kind::kLeftmost:
        return std::vector<Rat>(count, rat(0));
      case Kind::kRightmost:
        return std::vector<Rat>(count, rat(1));
      case Kind::kMedian: {
        std::vector<Rat> out(count, rat(1));
        for (std::size_t i = 0; i < n / 2; ++i) out[i] = rat(0);
        return out;
      }
      case Kind::kMidOrNearest:
        return std::vector<Rat>(count, rat(1, 2));
      case Kind::kCustom: {
        if (values.size() != count) {
          throw Error(Errc::kArityMismatch,
                      "profile supplies " + std::to_string(values.size()) +
                          " phantoms, " + std::to_string(count) + " needed");
        }
        for (const Rat& z : values) {
          if (!is_coordinate(z)) {
            throw Error(Errc::kCoordinateOutOfRange,
                        "phantom " + rat_str(z) + " leaves [0, 1]");
          }
        }
        return values;
      }
    }
    throw std::logic_error("unhandled profile kind");
  }
};

inline Rat gen_median(const Instance& instance,
                      const PhantomProfile& profile) {
  if (instance.facilities != 1) {
    throw Error(Errc::kArityMismatch,
                "generalized median serves exactly one facility");
  }
  std::vector<Rat> pool = instance.agents;
  std::vector<Rat> phantoms = profile.expand(instance.agents.size());
  pool.insert(pool.end(), phantoms.begin(), phantoms.end());
  return median_of(std::move(pool));
}

// Generalized median, then projection onto the admissible set.
inline Placement run_single_star(const Instance& instance,
                                 const PhantomProfile& profile,
                                 TieBreak tie) {
  return {nearest_feasible(instance.region, gen_median(instance, profile),
                           tie)};
}

// Two facilities: the leftmost report projected with ties broken rightward,
// the rightmost report projected with ties broken leftward. Breaking ties
// inward keeps the pair inside the report range.
inline Placement run_endpoint_star(const Instance& instance) {
  if (instance.facilities != 2) {
    throw Error(Errc::kArityMismatch, "endpoint rule places two facilities");
  }
  Rat left =
      nearest_feasible(instance.region, instance.agents.front(), TieBreak::kRight);
  Rat right =
      nearest_feasible(instance.region, instance.agents.back(), TieBreak::kLeft);
  if (right < left) std::swap(left, right);
  return {left, right};
}

struct MechanismSpec {
  enum class Kind { kGenMedianStar, kEndPointStar, kUnrestrictedGenMedian, kCustom };

  Kind kind = Kind::kGenMedianStar;
  PhantomProfile profile;
  TieBreak tie = TieBreak::kLeft;
  std::string name = "median*";
  std::function<Placement(const Instance&)> fn;  // kCustom only
  int custom_arity = 1;

  int arity() const {
    switch (kind) {
      case Kind::kEndPointStar: return 2;
      case Kind::kCustom: return custom_arity;
      default: return 1;
    }
  }

  static MechanismSpec gen_median_star(PhantomProfile profile,
                                       TieBreak tie = TieBreak::kLeft,
                                       std::string name = "genmedian*") {
    MechanismSpec spec;
    spec.kind = Kind::kGenMedianStar;
    spec.profile = std::move(profile);
    spec.tie = tie;
    spec.name = std::move(name);
    return spec;
  }
  static MechanismSpec median_star(TieBreak tie = TieBreak::kLeft) {
    return gen_median_star(PhantomProfile::median(), tie, "median*");
  }
  static MechanismSpec leftmost_star(TieBreak tie = TieBreak::kLeft) {
    return gen_median_star(PhantomProfile::leftmost(), tie, "leftmost*");
  }
  static MechanismSpec rightmost_star(TieBreak tie = TieBreak::kLeft) {
    return gen_median_star(PhantomProfile::rightmost(), tie, "rightmost*");
  }
  static MechanismSpec mid_or_nearest_star(TieBreak tie = TieBreak::kLeft) {
    return gen_median_star(PhantomProfile::mid_or_nearest(), tie,
                           "midornearest*");
  }
  static MechanismSpec endpoint_star() {
    MechanismSpec spec;
    spec.kind = Kind::kEndPointStar;
    spec.name = "endpoint*";
    return spec;
  }
  static MechanismSpec unrestricted(PhantomProfile profile,
                                    std::string name = "median") {
    MechanismSpec spec;
    spec.kind = Kind::kUnrestrictedGenMedian;
    spec.profile = std::move(profile);
    spec.name = std::move(name);
    return spec;
  }
  static MechanismSpec custom(std::string name, int arity,
                              std::function<Placement(const Instance&)> fn) {
    MechanismSpec spec;
    spec.kind = Kind::kCustom;
    spec.name = std::move(name);
    spec.custom_arity = arity;
    spec.fn = std::move(fn);
    return spec;
  }
};

struct RunResult {
  Placement placement;
  // False only for the unrestricted oracle, whose output may leave the
  // region; starred and custom mechanisms always return admissible points.
  bool feasible = true;
};

inline RunResult run(const MechanismSpec& spec, const Instance& instance) {
  if (instance.facilities != spec.arity()) {
    throw Error(Errc::kArityMismatch,
                spec.name + " places " + std::to_string(spec.arity()) +
                    " facilities, instance asks for " +
                    std::to_string(instance.facilities));
  }
  switch (spec.kind) {
    case MechanismSpec::Kind::kGenMedianStar:
      return {run_single_star(instance, spec.profile, spec.tie), true};
    case MechanismSpec::Kind::kEndPointStar:
      return {run_endpoint_star(instance), true};
    case MechanismSpec::Kind::kUnrestrictedGenMedian: {
      Rat y = gen_median(instance, spec.profile);
      bool feasible = contains(instance.region, y);
      return {{y}, feasible};
    }
    case MechanismSpec::Kind::kCustom: {
      Placement out = spec.fn(instance);
      if (static_cast<int>(out.size()) != spec.arity()) {
        throw Error(Errc::kMechanismInfeasibleOutput,
                    spec.name + " returned " + std::to_string(out.size()) +
                        " facilities instead of " +
                        std::to_string(spec.arity()));
      }
      std::sort(out.begin(), out.end());
      for (const Rat& y : out) {
        if (!contains(instance.region, y)) {
          throw Error(Errc::kMechanismInfeasibleOutput,
                      spec.name + " placed a facility at inadmissible " +
                          rat_str(y));
        }
      }
      return {std::move(out), true};
    }
  }
  throw std::logic_error("unhandled mechanism kind");
}

// Command-line names. The trailing star marks projection onto the region;
// plain "median" is the unrestricted oracle used for baselines.
inline std::optional<MechanismSpec> mechanism_from_name(std::string_view name,
                                                        TieBreak tie) {
  if (name == "median*") return MechanismSpec::median_star(tie);
  if (name == "leftmost*") return MechanismSpec::leftmost_star(tie);
  if (name == "rightmost*") return MechanismSpec::rightmost_star(tie);
  if (name == "midornearest*") return MechanismSpec::mid_or_nearest_star(tie);
  if (name == "endpoint*") return MechanismSpec::endpoint_star();
  if (name == "median") return MechanismSpec::unrestricted(PhantomProfile::median());
  constexpr std::string_view kCustomPrefix = "genmedian*:";
  if (name.substr(0, kCustomPrefix.size()) == kCustomPrefix) {
    std::string_view rest = name.substr(kCustomPrefix.size());
    std::vector<Rat> phantoms;
    while (!rest.empty()) {
      std::size_t comma = rest.find(',');
      std::string_view item =
          comma == std::string_view::npos ? rest : rest.substr(0, comma);
      phantoms.push_back(parse_rat(item));
      rest = comma == std::string_view::npos ? std::string_view{}
                                             : rest.substr(comma + 1);
    }
    if (phantoms.empty()) return std::nullopt;
    return MechanismSpec::gen_median_star(PhantomProfile::custom(phantoms),
                                          tie, std::string(name));
  }
  return std::nullopt;
}

}  // namespace facloc

#endif  // FACLOC_MECHANISMS_HPP_

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

#ifndef FACLOC_VERIFY_HPP_
#define FACLOC_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "facloc/families.hpp"
#include "facloc/mechanisms.hpp"
#include "facloc/optimum.hpp"

namespace facloc {

// Worst-case guarantee of a mechanism value against the optimum. Infinite
// when the optimum is positive but the mechanism scores zero (maximization)
// or the optimum is zero and the mechanism is not (minimization).
struct ExtendedRatio {
  bool infinite = false;
  Rat value;  // meaningful only when finite

  static ExtendedRatio finite(Rat v) { return {false, std::move(v)}; }
  static ExtendedRatio infinity() { return {true, rat(0)}; }
};

inline std::string ratio_str(const ExtendedRatio& r) {
  return r.infinite ? "inf" : rat_str(r.value);
}

inline bool ratio_equal(const ExtendedRatio& a, const ExtendedRatio& b) {
  if (a.infinite != b.infinite) return false;
  return a.infinite || a.value == b.value;
}

inline bool ratio_greater(const ExtendedRatio& a, const ExtendedRatio& b) {
  if (a.infinite) return !b.infinite;
  if (b.infinite) return false;
  return a.value > b.value;
}

inline bool ratio_at_least(const ExtendedRatio& r, const Rat& threshold) {
  return r.infinite || r.value >= threshold;
}

inline ExtendedRatio approximation_ratio(const Rat& mechanism_value,
                                         const Rat& optimal_value,
                                         Objective obj) {
  if (mechanism_value < 0 || optimal_value < 0) {
    throw Error(Errc::kNegativeValue, "objective values must be nonnegative");
  }
  if (orientation(obj) == Orientation::kMinimize) {
    if (optimal_value == 0) {
      return mechanism_value == 0 ? ExtendedRatio::finite(rat(1))
                                  : ExtendedRatio::infinity();
    }
    return ExtendedRatio::finite(Rat(mechanism_value / optimal_value));
  }
  if (mechanism_value == 0) {
    return optimal_value == 0 ? ExtendedRatio::finite(rat(1))
                              : ExtendedRatio::infinity();
  }
  return ExtendedRatio::finite(Rat(optimal_value / mechanism_value));
}

// A profitable lie: the agent's true location ends up strictly closer to
// the placement obtained by misreporting.
struct SPWitness {
  std::size_t agent_index = 0;  // position in the truthful sorted profile
  Rat true_location;
  Rat misreport;
  Rat distance_before;
  Rat distance_after;
};

// Deviations worth trying: every admissible endpoint, every reported
// location, the extremes of [0,1], the midpoint of every admissibility gap,
// and whatever the caller adds.
inline std::vector<Rat> misreport_candidates(const Instance& instance,
                                             const std::vector<Rat>& extra = {}) {
  std::vector<Rat> out;
  const auto& iv = instance.region.intervals;
  for (const Interval& i : iv) {
    out.push_back(i.lo);
    out.push_back(i.hi);
  }
  for (std::size_t k = 1; k < iv.size(); ++k) {
    out.push_back(Rat((iv[k - 1].hi + iv[k].lo) / 2));
  }
  out.insert(out.end(), instance.agents.begin(), instance.agents.end());
  out.push_back(rat(0));
  out.push_back(rat(1));
  for (const Rat& e : extra) {
    if (!is_coordinate(e)) {
      throw Error(Errc::kCoordinateOutOfRange,
                  "misreport " + rat_str(e) + " leaves [0, 1]");
    }
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// First profitable deviation in deterministic scan order: agents by
// ascending index, misreports ascending. Empty result means no tested lie
// helps anyone.
inline std::optional<SPWitness> check_strategy_proof(
    const MechanismSpec& spec, const Instance& instance,
    const std::vector<Rat>& extra_misreports = {}) {
  const RunResult truthful = run(spec, instance);
  const std::vector<Rat> candidates =
      misreport_candidates(instance, extra_misreports);
  for (std::size_t i = 0; i < instance.agents.size(); ++i) {
    const Rat& true_location = instance.agents[i];
    const Rat before = distance_to_placement(true_location, truthful.placement);
    for (const Rat& lie : candidates) {
      if (lie == true_location) continue;
      std::vector<Rat> reports = instance.agents;
      reports[i] = lie;
      Instance twisted =
          normalize_instance(std::move(reports), instance.region,
                             instance.facilities);
      const RunResult outcome = run(spec, twisted);
      Rat after = distance_to_placement(true_location, outcome.placement);
      if (after < before) {
        return SPWitness{i, true_location, lie, before, after};
      }
    }
  }
  return std::nullopt;
}

struct RatioWitness {
  Instance instance;
  Placement mechanism_placement;
  Rat mechanism_value;
  OptResult optimal;
  ExtendedRatio ratio;
};

inline RatioWitness measure_mechanism(const MechanismSpec& spec,
                                      const Instance& instance,
                                      Objective obj) {
  RunResult r = run(spec, instance);
  Rat mechanism_value = evaluate(instance, r.placement, obj);
  OptResult optimal = instance.facilities == 1 ? optimal_single(instance, obj)
                                               : optimal_two(instance, obj);
  ExtendedRatio ratio = approximation_ratio(mechanism_value, optimal.value, obj);
  return RatioWitness{instance, std::move(r.placement),
                      std::move(mechanism_value), std::move(optimal),
                      std::move(ratio)};
}

struct SearchConfig {
  std::vector<long> agent_counts = {1, 2, 3, 4};
  long coordinate_denominator = 12;
  // Regions drawn for random samples; empty means sample random unions of
  // up to four intervals on the same lattice as the coordinates.
  std::vector<FeasibleRegion> region_menu;
  long budget = 200;
  std::uint64_t seed = 1;
};

// gen() % k keeps the draw sequence identical across standard libraries,
// which keeps search results reproducible from (config, seed) alone.
inline Instance sample_instance(std::mt19937_64& gen,
                                const SearchConfig& config, int facilities) {
  const long n =
      config.agent_counts[gen() % config.agent_counts.size()];
  const long d = config.coordinate_denominator;
  auto coord = [&gen, d] { return rat(static_cast<long>(gen() % (d + 1)), d); };
  std::vector<Rat> agents;
  agents.reserve(n);
  for (long i = 0; i < n; ++i) agents.push_back(coord());
  FeasibleRegion region;
  if (!config.region_menu.empty()) {
    region = config.region_menu[gen() % config.region_menu.size()];
  } else {
    const int pieces = 1 + static_cast<int>(gen() % 4);
    std::vector<Interval> intervals;
    intervals.reserve(pieces);
    for (int i = 0; i < pieces; ++i) {
      Rat a = coord();
      if (gen() % 2 == 0) {
        intervals.push_back({a, a});
      } else {
        Rat b = coord();
        if (b < a) std::swap(a, b);
        intervals.push_back({a, b});
      }
    }
    region = normalize_region({std::move(intervals)});
  }
  return normalize_instance(std::move(agents), std::move(region), facilities);
}

using SearchObserver = std::function<void(const RatioWitness&)>;

// Worst measured ratio over the structured family sweep plus `budget`
// random samples. Every evaluation is pure, so the reduction (max ratio,
// lexicographically smallest witness instance on ties) gives the same
// answer regardless of evaluation order.
inline RatioWitness adversarial_search(const MechanismSpec& spec,
                                       Objective objective,
                                       const SearchConfig& config,
                                       const SearchObserver& observer = {}) {
  if (config.budget < 1) throw std::invalid_argument("search budget < 1");
  if (config.agent_counts.empty()) {
    throw std::invalid_argument("search needs at least one agent count");
  }
  for (long n : config.agent_counts) {
    if (n < 1) throw std::invalid_argument("agent counts must be positive");
  }
  if (config.coordinate_denominator < 1) {
    throw std::invalid_argument("coordinate denominator < 1");
  }

  std::optional<RatioWitness> best;
  auto consider = [&](const Instance& instance) {
    RatioWitness w = measure_mechanism(spec, instance, objective);
    if (observer) observer(w);
    if (!best || ratio_greater(w.ratio, best->ratio) ||
        (ratio_equal(w.ratio, best->ratio) &&
         instance_less(w.instance, best->instance))) {
      best = std::move(w);
    }
  };

  const Rat eps = rat(1, config.coordinate_denominator);
  std::set<std::string> seen;
  for (long n : config.agent_counts) {
    for (const FamilyInstance& fi : proof_instances(spec.arity(), n, eps)) {
      if (seen.insert(fi.id).second) consider(fi.instance);
    }
  }
  std::mt19937_64 gen(config.seed);
  for (long b = 0; b < config.budget; ++b) {
    consider(sample_instance(gen, config, spec.arity()));
  }
  return *best;
}

// Machine-checked worst-case claims. Each certificate replays a short
// scripted interaction: run the mechanism on a crafted instance, follow the
// scripted deviation for the case the mechanism chose, and end with either
// a strategy-proofness violation or a measured ratio the mechanism cannot
// beat on that script.
enum class TheoremKind {
  kMaxDist3,         // max-dist ratio of any SP mechanism is >= ~3
  kUtil3,            // util ratio >= ~3
  kEgalUnbounded,    // egal ratio unbounded
  kSocSatUnbounded,  // soc-sat ratio grows like 1/(2 eps)
  kMinSatUnbounded,  // min-sat cluster at scale k
};

inline const char* theorem_name(TheoremKind kind) {
  switch (kind) {
    case TheoremKind::kMaxDist3: return "max-dist-3";
    case TheoremKind::kUtil3: return "util-3";
    case TheoremKind::kEgalUnbounded: return "egal-unbounded";
    case TheoremKind::kSocSatUnbounded: return "soc-sat-unbounded";
    case TheoremKind::kMinSatUnbounded: return "min-sat-unbounded";
  }
  return "?";
}

inline std::optional<TheoremKind> theorem_from_name(std::string_view name) {
  for (TheoremKind kind :
       {TheoremKind::kMaxDist3, TheoremKind::kUtil3, TheoremKind::kEgalUnbounded,
        TheoremKind::kSocSatUnbounded, TheoremKind::kMinSatUnbounded}) {
    if (name == theorem_name(kind)) return kind;
  }
  return std::nullopt;
}

struct TheoremId {
  TheoremKind kind;
  long k = 10;  // cluster scale, kMinSatUnbounded only
};

struct TranscriptStep {
  Instance instance;
  Placement placement;
};

struct CertificateResult {
  TheoremId theorem;
  // Exactly one of the two is set.
  std::optional<SPWitness> sp_violation;
  std::optional<RatioWitness> ratio_witness;
  std::vector<TranscriptStep> transcript;
};

namespace detail {

inline void require_feasible(const MechanismSpec& spec, const RunResult& r,
                             const Instance& instance) {
  for (const Rat& y : r.placement) {
    if (!r.feasible || !contains(instance.region, y)) {
      throw Error(Errc::kInfeasibleMechanismOutput,
                  spec.name + " left the admissible set; certificate covers "
                              "admissible mechanisms only");
    }
  }
}

}  // namespace detail

inline CertificateResult certify_lower_bound(const TheoremId& id,
                                             const MechanismSpec& spec,
                                             const Rat& eps) {
  if (spec.arity() != 1) {
    throw Error(Errc::kArityMismatch,
                "certificates cover single-facility mechanisms");
  }
  const bool needs_eps = id.kind == TheoremKind::kMaxDist3 ||
                         id.kind == TheoremKind::kUtil3 ||
                         id.kind == TheoremKind::kSocSatUnbounded;
  if (needs_eps && !(eps > 0 && eps < rat(1, 2))) {
    throw Error(Errc::kCoordinateOutOfRange,
                "separation eps must satisfy 0 < eps < 1/2, got " +
                    rat_str(eps));
  }

  Objective objective;
  Instance a;
  switch (id.kind) {
    case TheoremKind::kMaxDist3:
      objective = Objective::kMaxDistance;
      a = tie_pair(eps, rat(1, 4), rat(3, 4));
      break;
    case TheoremKind::kUtil3:
      objective = Objective::kUtilitarianWelfare;
      a = tie_pair(eps, rat(0), rat(1));
      break;
    case TheoremKind::kEgalUnbounded:
      objective = Objective::kEgalitarianWelfare;
      a = quarter_pair_ends();
      break;
    case TheoremKind::kSocSatUnbounded:
      objective = Objective::kSocialSatisfaction;
      a = tie_pair(eps, rat(0), rat(1));
      break;
    case TheoremKind::kMinSatUnbounded:
      objective = Objective::kMinSatisfaction;
      a = minsat_cluster(id.k);
      break;
  }

  CertificateResult cert;
  cert.theorem = id;

  const RunResult on_a = run(spec, a);
  detail::require_feasible(spec, on_a, a);
  cert.transcript.push_back({a, on_a.placement});
  const Rat& y = on_a.placement.front();

  // Scripted deviation for the case the mechanism picked. The deviator
  // drags the profile toward the far side; an admissible mechanism either
  // follows (profitable lie, violation) or stays (bad ratio on the new
  // instance). At the outer cluster points the script simply measures.
  std::optional<std::pair<std::size_t, Rat>> deviation;
  if (id.kind == TheoremKind::kMinSatUnbounded) {
    const auto& pts = a.region.intervals;  // four admissible points
    if (y == pts[1].lo) {
      deviation = {{2, rat(1)}};
    } else if (y == pts[2].lo) {
      deviation = {{1, rat(0)}};
    }
  } else {
    const auto& pts = a.region.intervals;  // two admissible points
    if (y == pts.front().lo) {
      deviation = {{a.agents.size() - 1, rat(1)}};
    } else {
      deviation = {{0, rat(0)}};
    }
  }

  if (!deviation) {
    cert.ratio_witness = measure_mechanism(spec, a, objective);
    return cert;
  }

  const auto& [deviator, misreport] = *deviation;
  const Rat true_location = a.agents[deviator];
  std::vector<Rat> reports = a.agents;
  reports[deviator] = misreport;
  Instance b = normalize_instance(std::move(reports), a.region, 1);
  const RunResult on_b = run(spec, b);
  detail::require_feasible(spec, on_b, b);
  cert.transcript.push_back({b, on_b.placement});

  const Rat before = distance_to_placement(true_location, on_a.placement);
  const Rat after = distance_to_placement(true_location, on_b.placement);
  if (after < before) {
    cert.sp_violation =
        SPWitness{deviator, true_location, misreport, before, after};
    return cert;
  }
  cert.ratio_witness = measure_mechanism(spec, b, objective);
  return cert;
}

// A certificate is only evidence if rerunning the mechanism reproduces
// every recorded step.
inline bool replay_certificate(const MechanismSpec& spec,
                               const CertificateResult& cert) {
  try {
    for (const TranscriptStep& step : cert.transcript) {
      if (run(spec, step.instance).placement != step.placement) return false;
    }
  } catch (const Error&) {
    return false;
  }
  return true;
}

}  // namespace facloc

#endif  // FACLOC_VERIFY_HPP_

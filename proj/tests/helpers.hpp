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

#ifndef FACLOC_TESTS_HELPERS_HPP_
#define FACLOC_TESTS_HELPERS_HPP_

#include <catch2/catch_amalgamated.hpp>
#include <random>
#include <string>
#include <vector>

#include "facloc/core.hpp"

namespace Catch {
template <>
struct StringMaker<mpq_class> {
  static std::string convert(const mpq_class& q) { return q.get_str(); }
};
}  // namespace Catch

namespace facloc::testing {

// Shorthand for exact literals in expectations.
inline Rat rr(const char* text) { return parse_rat(text); }

inline Rat random_coord(std::mt19937_64& gen, long denominator) {
  // gen() % k instead of uniform_int_distribution: the draw sequence must be
  // identical across standard libraries so frozen expectations stay valid.
  return rat(static_cast<long>(gen() % (denominator + 1)), denominator);
}

inline FeasibleRegion random_point_region(std::mt19937_64& gen,
                                          long denominator,
                                          int max_points = 4) {
  const int count = 1 + static_cast<int>(gen() % max_points);
  std::vector<Rat> points;
  points.reserve(count);
  for (int i = 0; i < count; ++i) points.push_back(random_coord(gen, denominator));
  return point_region(points);
}

inline FeasibleRegion random_region(std::mt19937_64& gen, long denominator,
                                    int max_intervals = 4) {
  const int count = 1 + static_cast<int>(gen() % max_intervals);
  std::vector<Interval> intervals;
  intervals.reserve(count);
  for (int i = 0; i < count; ++i) {
    Rat a = random_coord(gen, denominator);
    if (gen() % 2 == 0) {
      intervals.push_back({a, a});
    } else {
      Rat b = random_coord(gen, denominator);
      if (b < a) std::swap(a, b);
      intervals.push_back({a, b});
    }
  }
  return normalize_region({intervals});
}

inline std::vector<Rat> random_agents(std::mt19937_64& gen, long denominator,
                                      int max_agents = 6) {
  const int count = 1 + static_cast<int>(gen() % max_agents);
  std::vector<Rat> agents;
  agents.reserve(count);
  for (int i = 0; i < count; ++i) agents.push_back(random_coord(gen, denominator));
  return agents;
}

inline Instance random_instance(std::mt19937_64& gen, long denominator,
                                int facilities, int max_agents = 6,
                                int max_intervals = 4) {
  return normalize_instance(random_agents(gen, denominator, max_agents),
                            random_region(gen, denominator, max_intervals),
                            facilities);
}

}  // namespace facloc::testing

#endif  // FACLOC_TESTS_HELPERS_HPP_

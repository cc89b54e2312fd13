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

#ifndef FACLOC_IO_HPP_
#define FACLOC_IO_HPP_

// Instance (de)serialization and report emission.
//
// Instances travel as JSON with every coordinate a rational string, so a
// file round trips through parse_instance/format_instance without any
// precision loss:
//
//   {"agents": ["1/4", "1/4", "1"],
//    "region": [["0", "0"], ["2/3", "2/3"]],
//    "facilities": 1}

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "facloc/core.hpp"
#include "facloc/error.hpp"
#include "facloc/families.hpp"
#include "facloc/mechanisms.hpp"
#include "facloc/objectives.hpp"
#include "facloc/rational.hpp"
#include "facloc/verify.hpp"

namespace facloc {

inline std::string placement_str(const Placement& placement) {
  std::string out;
  for (std::size_t i = 0; i < placement.size(); ++i) {
    if (i > 0) out += ',';
    out += rat_str(placement[i]);
  }
  return out;
}

namespace detail {

inline Rat parse_field_rat(const nlohmann::json& node,
                           const std::string& field) {
  if (!node.is_string()) {
    throw Error(Errc::kSyntaxError, field + ": expected a rational string");
  }
  try {
    return parse_rat(node.get<std::string>());
  } catch (const Error& e) {
    throw Error(e.code(), field + ": " + e.detail());
  }
}

inline Rat parse_field_coordinate(const nlohmann::json& node,
                                  const std::string& field) {
  Rat q = parse_field_rat(node, field);
  if (!is_coordinate(q)) {
    throw Error(Errc::kCoordinateOutOfRange,
                field + ": " + rat_str(q) + " leaves [0, 1]");
  }
  return q;
}

}  // namespace detail

inline Instance parse_instance(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::kSyntaxError,
                std::string("instance is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw Error(Errc::kSyntaxError, "instance: expected a JSON object");
  }
  for (const char* field : {"agents", "region", "facilities"}) {
    if (!doc.contains(field)) {
      throw Error(Errc::kSyntaxError,
                  std::string("missing field \"") + field + "\"");
    }
  }

  const nlohmann::json& agents_node = doc.at("agents");
  if (!agents_node.is_array()) {
    throw Error(Errc::kSyntaxError, "agents: expected an array");
  }
  std::vector<Rat> agents;
  agents.reserve(agents_node.size());
  for (std::size_t i = 0; i < agents_node.size(); ++i) {
    agents.push_back(detail::parse_field_coordinate(
        agents_node[i], "agents[" + std::to_string(i) + "]"));
  }

  const nlohmann::json& region_node = doc.at("region");
  if (!region_node.is_array()) {
    throw Error(Errc::kSyntaxError, "region: expected an array");
  }
  FeasibleRegion region;
  region.intervals.reserve(region_node.size());
  for (std::size_t i = 0; i < region_node.size(); ++i) {
    const std::string field = "region[" + std::to_string(i) + "]";
    const nlohmann::json& pair = region_node[i];
    if (!pair.is_array() || pair.size() != 2) {
      throw Error(Errc::kSyntaxError,
                  field + ": expected a pair of rational strings");
    }
    Rat lo = detail::parse_field_rat(pair[0], field + "[0]");
    Rat hi = detail::parse_field_rat(pair[1], field + "[1]");
    region.intervals.push_back({std::move(lo), std::move(hi)});
  }

  const nlohmann::json& facilities_node = doc.at("facilities");
  if (!facilities_node.is_number_integer()) {
    throw Error(Errc::kSyntaxError, "facilities: expected an integer");
  }
  const long long facilities = facilities_node.get<long long>();
  if (facilities != 1 && facilities != 2) {
    throw Error(Errc::kBadFacilityCount,
                "facilities: " + std::to_string(facilities) +
                    " not supported (1 or 2)");
  }
  return normalize_instance(std::move(agents), std::move(region),
                            static_cast<int>(facilities));
}

inline std::string format_instance(const Instance& instance) {
  nlohmann::json doc;
  nlohmann::json agents = nlohmann::json::array();
  for (const Rat& a : instance.agents) agents.push_back(rat_str(a));
  nlohmann::json region = nlohmann::json::array();
  for (const Interval& iv : instance.region.intervals) {
    region.push_back(nlohmann::json::array({rat_str(iv.lo), rat_str(iv.hi)}));
  }
  doc["agents"] = std::move(agents);
  doc["facilities"] = instance.facilities;
  doc["region"] = std::move(region);
  return doc.dump();
}

enum class ReportFormat { kCsv, kJson };

struct ReportRow {
  std::string mechanism;
  Objective objective;
  std::string instance_id;
  Rat mech_value;
  Rat opt_value;
  ExtendedRatio ratio;
  std::string witness_summary;
};

struct Report {
  std::vector<ReportRow> rows;

  void sort_rows() {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const ReportRow& a, const ReportRow& b) {
                       if (a.mechanism != b.mechanism) {
                         return a.mechanism < b.mechanism;
                       }
                       if (a.objective != b.objective) {
                         return static_cast<int>(a.objective) <
                                static_cast<int>(b.objective);
                       }
                       return a.instance_id < b.instance_id;
                     });
  }
};

namespace detail {

inline std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace detail

inline std::string summarize_witness(const RatioWitness& w) {
  return "mech=[" + placement_str(w.mechanism_placement) + "] opt=[" +
         placement_str(w.optimal.placement) + "]";
}

inline std::string emit_report(const Report& report, ReportFormat format) {
  if (format == ReportFormat::kCsv) {
    std::string out = "mechanism,objective,instance,mech_value,opt_value,ratio\n";
    for (const ReportRow& row : report.rows) {
      out += detail::csv_field(row.mechanism);
      out += ',';
      out += objective_name(row.objective);
      out += ',';
      out += detail::csv_field(row.instance_id);
      out += ',';
      out += rat_str(row.mech_value);
      out += ',';
      out += rat_str(row.opt_value);
      out += ',';
      out += ratio_str(row.ratio);
      out += '\n';
    }
    return out;
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const ReportRow& row : report.rows) {
    nlohmann::json item;
    item["mechanism"] = row.mechanism;
    item["objective"] = objective_name(row.objective);
    item["instance"] = row.instance_id;
    item["mech_value"] = rat_str(row.mech_value);
    item["opt_value"] = rat_str(row.opt_value);
    item["ratio"] = ratio_str(row.ratio);
    item["witness_summary"] = row.witness_summary;
    rows.push_back(std::move(item));
  }
  return rows.dump(2) + "\n";
}

// One row per (mechanism, region variant, objective) cell: the worst
// measured ratio over the families built for that objective. The
// "/anywhere" variant reruns the same families with the whole unit interval
// admissible, which is the baseline the restricted cells are read against.
inline Report build_tables(long n, const Rat& eps,
                           TieBreak tie = TieBreak::kLeft) {
  Report report;
  const std::array<MechanismSpec, 2> mechanisms = {
      MechanismSpec::median_star(tie), MechanismSpec::endpoint_star()};
  for (const MechanismSpec& spec : mechanisms) {
    const std::vector<FamilyInstance> families =
        proof_instances(spec.arity(), n, eps);
    for (const bool anywhere : {false, true}) {
      for (const Objective obj : kAllObjectives) {
        std::optional<ReportRow> best;
        for (const FamilyInstance& fam : families) {
          if (std::find(fam.targets.begin(), fam.targets.end(), obj) ==
              fam.targets.end()) {
            continue;
          }
          Instance inst = fam.instance;
          std::string id = fam.id;
          if (anywhere) {
            inst = normalize_instance(inst.agents,
                                      interval_region({{rat(0), rat(1)}}),
                                      inst.facilities);
            id += "/anywhere";
          }
          RatioWitness w = measure_mechanism(spec, inst, obj);
          if (!best || ratio_greater(w.ratio, best->ratio)) {
            best = ReportRow{spec.name,       obj,
                             std::move(id),   w.mechanism_value,
                             w.optimal.value, w.ratio,
                             summarize_witness(w)};
          }
        }
        if (best) report.rows.push_back(std::move(*best));
      }
    }
  }
  report.sort_rows();
  return report;
}

}  // namespace facloc

#endif  // FACLOC_IO_HPP_

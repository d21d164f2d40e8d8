// Copyright 2026 The Multibot Authors
//
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

#include "multibot/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "multibot/errors.hpp"

namespace multibot::io {

namespace {

using nlohmann::json;

Count read_count(const json& value, const std::string& where) {
  if (!value.is_number_integer()) throw ParseError(where + ": expected an integer");
  if (value.is_number_unsigned()) {
    const auto u = value.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(INT64_MAX)) throw ParseError(where + ": value out of range");
    return static_cast<Count>(u);
  }
  const auto v = value.get<std::int64_t>();
  if (v < 0) throw ParseError(where + ": expected a non-negative integer");
  return v;
}

int read_dimension(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  const Count v = read_count(doc.at(key), key);
  if (v < 1 || v > INT32_MAX) throw ParseError(std::string(key) + ": expected a positive integer");
  return static_cast<int>(v);
}

template <typename Range>
std::string join(const Range& values) {
  std::string out = "[";
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += ", ";
    out += std::to_string(v);
    first = false;
  }
  return out + "]";
}

}  // namespace

Instance parse_instance_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw ParseError("instance file must hold a JSON object");

  static const std::set<std::string> known = {"version", "K", "P", "T", "capacities",
                                              "demands", "generator"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.contains(key)) throw ParseError("unknown field \"" + key + "\"");
  }
  if (!doc.contains("version")) throw ParseError("missing field \"version\"");
  if (read_count(doc.at("version"), "version") != kFormatVersion) {
    throw ParseError("version: unsupported format version");
  }

  InstanceData data;
  data.num_types = read_dimension(doc, "K");
  data.max_config = read_dimension(doc, "P");
  data.num_periods = read_dimension(doc, "T");

  if (!doc.contains("capacities")) throw ParseError("missing field \"capacities\"");
  const auto& caps = doc.at("capacities");
  if (!caps.is_array() || caps.size() != static_cast<std::size_t>(data.num_types)) {
    throw ParseError("capacities: expected " + std::to_string(data.num_types) + " rows");
  }
  for (std::size_t k = 0; k < caps.size(); ++k) {
    const std::string where = "capacities[" + std::to_string(k) + "]";
    if (!caps[k].is_array() || caps[k].size() != static_cast<std::size_t>(data.max_config)) {
      throw ParseError(where + ": expected " + std::to_string(data.max_config) + " entries");
    }
    std::vector<Count> row;
    for (std::size_t p = 0; p < caps[k].size(); ++p) {
      row.push_back(read_count(caps[k][p], where + "[" + std::to_string(p) + "]"));
    }
    data.capacities.push_back(std::move(row));
  }

  if (!doc.contains("demands")) throw ParseError("missing field \"demands\"");
  const auto& dem = doc.at("demands");
  if (!dem.is_array() || dem.size() != static_cast<std::size_t>(data.num_types)) {
    throw ParseError("demands: expected " + std::to_string(data.num_types) + " entries");
  }
  for (std::size_t k = 0; k < dem.size(); ++k) {
    data.demands.push_back(read_count(dem[k], "demands[" + std::to_string(k) + "]"));
  }
  if (doc.contains("generator") && !doc.at("generator").is_object()) {
    throw ParseError("generator: expected an object");
  }
  return Instance(strip_zero_demands(std::move(data)));
}

Instance parse_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str());
}

std::string serialize_instance(const InstanceData& data, const std::optional<std::string>& generator) {
  std::string out = "{\n";
  out += "  \"K\": " + std::to_string(data.num_types) + ",\n";
  out += "  \"P\": " + std::to_string(data.max_config) + ",\n";
  out += "  \"T\": " + std::to_string(data.num_periods) + ",\n";
  out += "  \"capacities\": [\n";
  for (std::size_t k = 0; k < data.capacities.size(); ++k) {
    out += "    " + join(data.capacities[k]) + (k + 1 < data.capacities.size() ? ",\n" : "\n");
  }
  out += "  ],\n";
  out += "  \"demands\": " + join(data.demands) + ",\n";
  if (generator) out += "  \"generator\": " + *generator + ",\n";
  out += "  \"version\": " + std::to_string(kFormatVersion) + "\n";
  out += "}\n";
  return out;
}

std::string serialize_instance(const Instance& instance) {
  return serialize_instance(instance.data());
}

std::string digest(const Instance& instance) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : serialize_instance(instance)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Report make_report(const Instance& instance, const approx::SolveReport& solve) {
  Report r;
  r.instance_digest = digest(instance);
  for (const auto& o : solve.per_lambda) {
    r.per_lambda.push_back({progdyn::to_string(o.lambda), o.volume.has_value(), o.volume, o.height});
  }
  r.best_height = solve.best.height();
  r.best_lambda = progdyn::to_string(solve.best_lambda);
  r.best_schedule = solve.best;
  r.timings_us = {{"collection", solve.timings.collection_us},
                  {"scheduling", solve.timings.scheduling_us},
                  {"total", solve.timings.total_us}};
  return r;
}

std::string to_json(const Report& report) {
  json doc = json::object();
  doc["instance_digest"] = report.instance_digest;
  if (!report.per_lambda.empty()) {
    json lines = json::array();
    for (const auto& l : report.per_lambda) {
      json line = {{"lambda", l.lambda}, {"feasible", l.feasible}};
      if (l.volume) line["volume"] = *l.volume;
      if (l.height) line["height"] = *l.height;
      lines.push_back(std::move(line));
    }
    doc["per_lambda"] = std::move(lines);
  }
  if (report.best_height) doc["best_height"] = *report.best_height;
  if (report.best_lambda) doc["best_lambda"] = *report.best_lambda;
  if (report.best_schedule) {
    json periods = json::array();
    for (const auto& period : report.best_schedule->periods()) {
      json entries = json::array();
      for (const auto& [key, n] : period.entries()) {
        entries.push_back({{"config", key.first}, {"type", key.second}, {"count", n}});
      }
      periods.push_back({{"height", volume(period)}, {"resources", std::move(entries)}});
    }
    doc["schedule"] = std::move(periods);
  }
  if (report.oracle_height) {
    doc["oracle_height"] = *report.oracle_height;
    if (report.best_height) {
      doc["ratio_check"] = {{"three_h", 3 * *report.best_height},
                            {"four_h_star", 4 * *report.oracle_height},
                            {"verdict", report.ratio_ok() ? "PASS" : "FAIL"}};
    }
  }
  json timings = json::object();
  for (const auto& [stage, us] : report.timings_us) timings[stage] = us;
  doc["timings_us"] = std::move(timings);
  return doc.dump(2) + "\n";
}

}  // namespace multibot::io

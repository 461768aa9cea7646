// Copyright 2026 The ghzident Authors
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

#include "ghzident/report.hpp"

#include <stdexcept>

#include "ghzident/version.hpp"

namespace ghzident::report {

Format format_from_name(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw std::invalid_argument("unknown format: " + std::string(name));
}

Json to_json(const Report &report) {
  Json j;
  j["scenario"] = report.scenario;
  j["inputs"] = report.inputs;
  j["results"] = report.results;
  j["version"] = kVersion;
  return j;
}

std::string render_json(const Report &report) {
  return to_json(report).dump(2) + "\n";
}

Json table_to_json(const qcore::ContextTable &table) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    Json row;
    Json ops = Json::array();
    for (const qcore::Slot &slot : table.rows[r].slots) {
      ops.push_back(qcore::slot_name(slot));
    }
    row["operators"] = ops;
    row["target"] = table.rows[r].target;
    if (r < table.measured.size()) row["measured"] = table.measured[r];
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const hvsearch::NoncontextualValues &a) {
  Json j;
  for (Mode position : {Mode::x, Mode::y, Mode::z}) {
    for (Axis axis : {Axis::X, Axis::Y}) {
      j[qcore::slot_name({position, axis})] = a.at(position, axis);
    }
  }
  return j;
}

Json to_json(const hvsearch::ContextualValues &a,
             const qcore::ContextTable &table) {
  Json j;
  for (std::size_t r = 0; r < a.rows.size(); ++r) {
    Json row;
    for (int s = 0; s < 3; ++s) {
      row[qcore::slot_name(table.rows[r].slots[s])] = a.rows[r][s];
    }
    j[std::to_string(r + 1)] = row;
  }
  return j;
}

namespace {

std::string label_slot_name(Label label, Axis axis) {
  return std::string{to_char(axis), '_', to_char(label)};
}

Json label_values_to_json(const std::array<int, 6> &values) {
  Json j;
  for (Label label : {Label::a, Label::b, Label::c}) {
    for (Axis axis : {Axis::X, Axis::Y}) {
      j[label_slot_name(label, axis)] =
          values[2 * static_cast<int>(label) + static_cast<int>(axis)];
    }
  }
  return j;
}

}  // namespace

Json to_json(const hvsearch::IdentityAssignment &a,
             const qcore::ContextTable &table) {
  Json perms;
  for (std::size_t r = 0; r < a.perms.size(); ++r) {
    perms[std::to_string(r + 1)] = hvsearch::perm_name(a.perms[r]);
  }
  Json j;
  j["perms"] = perms;
  j["values"] = label_values_to_json(a.values);
  (void)table;
  return j;
}

Json to_json(const hvsearch::HybridAssignment &a,
             const qcore::ContextTable &table) {
  Json j;
  j["perm"] = hvsearch::perm_name(a.perm);
  Json rows;
  for (std::size_t r = 0; r < a.row_values.size(); ++r) {
    Json row;
    for (int s = 0; s < 3; ++s) {
      const qcore::Slot &slot = table.rows[r].slots[s];
      const Label who = a.perm[static_cast<int>(slot.position)];
      row[label_slot_name(who, slot.axis)] = a.row_values[r][s];
    }
    rows[std::to_string(r + 1)] = row;
  }
  j["values"] = rows;
  return j;
}

}  // namespace ghzident::report

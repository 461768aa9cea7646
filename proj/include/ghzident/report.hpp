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

#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "ghzident/hvsearch.hpp"

namespace ghzident::report {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

Format format_from_name(std::string_view name);

/// Machine-readable scenario result. Serialization is byte-stable for
/// identical inputs and toolkit version: keys keep insertion order and all
/// values are produced deterministically.
struct Report {
  std::string scenario;
  Json inputs = Json::object();
  Json results = Json::object();
};

/// {scenario, inputs, results, version}
Json to_json(const Report &report);

/// to_json() rendered with a 2-space indent and trailing newline.
std::string render_json(const Report &report);

// JSON views of the table and of each assignment family, matching the
// schema the CLI emits: string keys "X_x" / "Y_a", row keys "1".."4",
// permutations in one-line notation.
Json table_to_json(const qcore::ContextTable &table);
Json to_json(const hvsearch::NoncontextualValues &a);
Json to_json(const hvsearch::ContextualValues &a,
             const qcore::ContextTable &table);
Json to_json(const hvsearch::IdentityAssignment &a,
             const qcore::ContextTable &table);
Json to_json(const hvsearch::HybridAssignment &a,
             const qcore::ContextTable &table);

}  // namespace ghzident::report

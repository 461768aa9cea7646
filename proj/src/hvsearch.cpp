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

#include "ghzident/hvsearch.hpp"

#include <algorithm>
#include <stdexcept>

namespace ghzident::hvsearch {

namespace {

// Value bits are packed most-significant-first, so ascending packed order is
// lexicographic over the variable sequence with +1 before -1.
int bit_to_value(std::uint64_t code, int width, int linear_index) {
  return (code >> (width - 1 - linear_index)) & 1u ? -1 : +1;
}

std::uint64_t value_to_bit(int value, int width, int linear_index) {
  return value == -1 ? (std::uint64_t{1} << (width - 1 - linear_index)) : 0u;
}

std::uint64_t pow_u64(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  while (exp--) out *= base;
  return out;
}

int check_row_count(const ContextTable &table) {
  // 16 rows caps every search space below 2^63.
  if (table.rows.size() > 16) {
    throw std::invalid_argument(
        "table too large for exhaustive enumeration (max 16 rows)");
  }
  return static_cast<int>(table.rows.size());
}

int value_or_throw(int v, const char *what) {
  if (v != 1 && v != -1) throw std::invalid_argument(what);
  return v;
}

}  // namespace

std::string model_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::noncontextual: return "noncontextual";
    case ModelKind::contextual: return "contextual";
    case ModelKind::identity_contextual: return "identity";
    case ModelKind::identity_fixed: return "identity-fixed";
    case ModelKind::hybrid: return "hybrid";
  }
  throw std::logic_error("unreachable");
}

ModelKind model_from_name(std::string_view name) {
  if (name == "noncontextual") return ModelKind::noncontextual;
  if (name == "contextual") return ModelKind::contextual;
  if (name == "identity") return ModelKind::identity_contextual;
  if (name == "identity-fixed") return ModelKind::identity_fixed;
  if (name == "hybrid") return ModelKind::hybrid;
  throw std::invalid_argument("unknown model: " + std::string(name));
}

void validate_table(const ContextTable &table) {
  for (const MeasurementContext &ctx : table.rows) {
    qcore::validate_context(ctx);
  }
  check_row_count(table);
}

int NoncontextualValues::at(Mode position, Axis axis) const {
  return values[2 * static_cast<int>(position) + static_cast<int>(axis)];
}

std::string perm_name(const LabelPerm &perm) {
  return std::string{to_char(perm[0]), to_char(perm[1]), to_char(perm[2])};
}

LabelPerm perm_from_name(std::string_view name) {
  if (name.size() != 3) {
    throw std::invalid_argument("permutation needs exactly three labels");
  }
  LabelPerm perm{label_from_char(name[0]), label_from_char(name[1]),
                 label_from_char(name[2])};
  bool seen[3] = {false, false, false};
  for (Label l : perm) seen[static_cast<int>(l)] = true;
  if (!(seen[0] && seen[1] && seen[2])) {
    throw std::invalid_argument("permutation must use each label once");
  }
  return perm;
}

const std::array<LabelPerm, 6> &all_label_perms() {
  static const std::array<LabelPerm, 6> perms = [] {
    std::array<LabelPerm, 6> out{};
    LabelPerm p{Label::a, Label::b, Label::c};
    for (auto &entry : out) {
      entry = p;
      std::next_permutation(p.begin(), p.end());
    }
    return out;
  }();
  return perms;
}

int IdentityAssignment::value_of(Label label, Axis axis) const {
  return values[2 * static_cast<int>(label) + static_cast<int>(axis)];
}

int predict(const NoncontextualValues &a, const MeasurementContext &ctx) {
  qcore::validate_context(ctx);
  int product = 1;
  for (const qcore::Slot &slot : ctx.slots) {
    product *= value_or_throw(a.at(slot.position, slot.axis),
                              "noncontextual assignment has a missing entry");
  }
  return product;
}

int predict(const ContextualValues &a, const ContextTable &table,
            std::size_t row) {
  if (row >= table.rows.size() || a.rows.size() != table.rows.size()) {
    throw std::invalid_argument(
        "contextual assignment does not cover the requested row");
  }
  int product = 1;
  for (int v : a.rows[row]) {
    product *= value_or_throw(v, "contextual assignment has a missing entry");
  }
  return product;
}

int predict(const IdentityAssignment &a, const ContextTable &table,
            std::size_t row) {
  if (row >= table.rows.size() || a.perms.size() != table.rows.size()) {
    throw std::invalid_argument(
        "identity assignment does not cover the requested row");
  }
  // The label sitting at each position supplies its bound value.
  int product = 1;
  for (const qcore::Slot &slot : table.rows[row].slots) {
    const Label who = a.perms[row][static_cast<int>(slot.position)];
    product *= value_or_throw(a.value_of(who, slot.axis),
                              "identity assignment has a missing entry");
  }
  return product;
}

int predict(const HybridAssignment &a, const ContextTable &table,
            std::size_t row) {
  if (row >= table.rows.size() || a.row_values.size() != table.rows.size()) {
    throw std::invalid_argument(
        "hybrid assignment does not cover the requested row");
  }
  int product = 1;
  for (int v : a.row_values[row]) {
    product *= value_or_throw(v, "hybrid assignment has a missing entry");
  }
  return product;
}

SolutionSet<NoncontextualValues> enumerate_noncontextual(
    const ContextTable &table) {
  validate_table(table);
  SolutionSet<NoncontextualValues> out;
  out.kind = ModelKind::noncontextual;
  out.space = 64;
  for (std::uint64_t code = 0; code < 64; ++code) {
    ++out.visited;
    NoncontextualValues a;
    for (int k = 0; k < 6; ++k) a.values[k] = bit_to_value(code, 6, k);
    bool ok = true;
    for (const MeasurementContext &ctx : table.rows) {
      if (predict(a, ctx) != ctx.target) {
        ok = false;
        break;
      }
    }
    if (ok) out.solutions.push_back(a);
  }
  return out;
}

SolutionSet<ContextualValues> enumerate_contextual(const ContextTable &table) {
  validate_table(table);
  const int rows = static_cast<int>(table.rows.size());
  const int width = 3 * rows;
  SolutionSet<ContextualValues> out;
  out.kind = ModelKind::contextual;
  out.space = pow_u64(2, width);
  for (std::uint64_t code = 0; code < out.space; ++code) {
    ++out.visited;
    ContextualValues a;
    a.rows.resize(rows);
    bool ok = true;
    for (int r = 0; r < rows; ++r) {
      int product = 1;
      for (int s = 0; s < 3; ++s) {
        a.rows[r][s] = bit_to_value(code, width, 3 * r + s);
        product *= a.rows[r][s];
      }
      if (product != table.rows[r].target) {
        ok = false;
        break;
      }
    }
    if (ok) out.solutions.push_back(std::move(a));
  }
  return out;
}

SolutionSet<IdentityAssignment> enumerate_identity_contextual(
    const ContextTable &table) {
  validate_table(table);
  const int rows = static_cast<int>(table.rows.size());
  const std::uint64_t perm_space = pow_u64(6, rows);
  SolutionSet<IdentityAssignment> out;
  out.kind = ModelKind::identity_contextual;
  out.space = perm_space * 64;
  for (std::uint64_t perm_code = 0; perm_code < perm_space; ++perm_code) {
    IdentityAssignment a;
    a.perms.resize(rows);
    std::uint64_t digits = perm_code;
    for (int r = rows - 1; r >= 0; --r) {
      a.perms[r] = all_label_perms()[digits % 6];
      digits /= 6;
    }
    for (std::uint64_t code = 0; code < 64; ++code) {
      ++out.visited;
      for (int k = 0; k < 6; ++k) a.values[k] = bit_to_value(code, 6, k);
      bool ok = true;
      for (int r = 0; r < rows; ++r) {
        if (predict(a, table, r) != table.rows[r].target) {
          ok = false;
          break;
        }
      }
      if (ok) out.solutions.push_back(a);
    }
  }
  return out;
}

SolutionSet<IdentityAssignment> enumerate_identity_fixed(
    const ContextTable &table) {
  validate_table(table);
  const int rows = static_cast<int>(table.rows.size());
  SolutionSet<IdentityAssignment> out;
  out.kind = ModelKind::identity_fixed;
  out.space = 6 * 64;
  for (int p = 0; p < 6; ++p) {
    IdentityAssignment a;
    a.perms.assign(rows, all_label_perms()[p]);
    for (std::uint64_t code = 0; code < 64; ++code) {
      ++out.visited;
      for (int k = 0; k < 6; ++k) a.values[k] = bit_to_value(code, 6, k);
      bool ok = true;
      for (int r = 0; r < rows; ++r) {
        if (predict(a, table, r) != table.rows[r].target) {
          ok = false;
          break;
        }
      }
      if (ok) out.solutions.push_back(a);
    }
  }
  return out;
}

SolutionSet<HybridAssignment> enumerate_hybrid(const ContextTable &table) {
  validate_table(table);
  const int rows = static_cast<int>(table.rows.size());
  const int width = 3 * rows;
  const std::uint64_t value_space = pow_u64(2, width);
  SolutionSet<HybridAssignment> out;
  out.kind = ModelKind::hybrid;
  out.space = 6 * value_space;
  for (int p = 0; p < 6; ++p) {
    for (std::uint64_t code = 0; code < value_space; ++code) {
      ++out.visited;
      HybridAssignment a;
      a.perm = all_label_perms()[p];
      a.row_values.resize(rows);
      bool ok = true;
      for (int r = 0; r < rows; ++r) {
        int product = 1;
        for (int s = 0; s < 3; ++s) {
          a.row_values[r][s] = bit_to_value(code, width, 3 * r + s);
          product *= a.row_values[r][s];
        }
        if (product != table.rows[r].target) {
          ok = false;
          break;
        }
      }
      if (ok) out.solutions.push_back(std::move(a));
    }
  }
  return out;
}

std::uint64_t pack(const NoncontextualValues &a) {
  std::uint64_t code = 0;
  for (int k = 0; k < 6; ++k) code |= value_to_bit(a.values[k], 6, k);
  return code;
}

std::uint64_t pack(const ContextualValues &a) {
  const int width = 3 * static_cast<int>(a.rows.size());
  std::uint64_t code = 0;
  for (std::size_t r = 0; r < a.rows.size(); ++r) {
    for (int s = 0; s < 3; ++s) {
      code |= value_to_bit(a.rows[r][s], width, 3 * static_cast<int>(r) + s);
    }
  }
  return code;
}

namespace {

int perm_index(const LabelPerm &perm) {
  const auto &perms = all_label_perms();
  const auto it = std::find(perms.begin(), perms.end(), perm);
  return static_cast<int>(it - perms.begin());
}

}  // namespace

std::uint64_t pack(const IdentityAssignment &a) {
  std::uint64_t perm_code = 0;
  for (const LabelPerm &perm : a.perms) {
    perm_code = perm_code * 6 + perm_index(perm);
  }
  std::uint64_t value_code = 0;
  for (int k = 0; k < 6; ++k) value_code |= value_to_bit(a.values[k], 6, k);
  return perm_code * 64 + value_code;
}

std::uint64_t pack(const HybridAssignment &a) {
  const int width = 3 * static_cast<int>(a.row_values.size());
  std::uint64_t code = 0;
  for (std::size_t r = 0; r < a.row_values.size(); ++r) {
    for (int s = 0; s < 3; ++s) {
      code |= value_to_bit(a.row_values[r][s], width,
                           3 * static_cast<int>(r) + s);
    }
  }
  return static_cast<std::uint64_t>(perm_index(a.perm)) * pow_u64(2, width) +
         code;
}

}  // namespace ghzident::hvsearch

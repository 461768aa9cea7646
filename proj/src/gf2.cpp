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

#include <cstdint>
#include <vector>

#include "ghzident/hvsearch.hpp"

namespace ghzident::hvsearch {

namespace {

// One parity equation: LHS variable mask over the six (position, axis)
// bits, RHS bit, and the subset of original rows combined into it.
struct ParityRow {
  std::uint32_t mask = 0;
  int rhs = 0;
  std::uint32_t combo = 0;
};

}  // namespace

Gf2Result gf2_feasibility(const ContextTable &table) {
  validate_table(table);

  std::vector<ParityRow> rows;
  rows.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    ParityRow row;
    for (const qcore::Slot &slot : table.rows[r].slots) {
      row.mask |= 1u << (2 * static_cast<int>(slot.position) +
                         static_cast<int>(slot.axis));
    }
    row.rhs = table.rows[r].target == -1 ? 1 : 0;
    row.combo = 1u << r;
    rows.push_back(row);
  }

  // Gaussian elimination; an all-zero LHS with RHS 1 is the contradiction
  // and its combo records which original rows produced it.
  std::size_t rank = 0;
  for (int col = 0; col < 6 && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot].mask >> col & 1u)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r].mask >> col & 1u)) {
        rows[r].mask ^= rows[rank].mask;
        rows[r].rhs ^= rows[rank].rhs;
        rows[r].combo ^= rows[rank].combo;
      }
    }
    ++rank;
  }

  for (const ParityRow &row : rows) {
    if (row.mask == 0 && row.rhs == 1) {
      Gf2Result result;
      result.feasible = false;
      for (std::size_t r = 0; r < table.rows.size(); ++r) {
        if (row.combo >> r & 1u) result.certificate_rows.push_back(r);
      }
      return result;
    }
  }
  return Gf2Result{true, {}};
}

}  // namespace ghzident::hvsearch

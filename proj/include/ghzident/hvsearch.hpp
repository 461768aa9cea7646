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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ghzident/qcore.hpp"

// Hidden-variable model families over a ContextTable and the exhaustive
// engines that classify which of them can reproduce it. Search spaces stay
// below 10^5 for three-position tables, so every engine is a plain scan.
//
// Value encoding used throughout: +1/-1 integers in the containers, bit 1
// for -1 when assignments are packed into integers. Enumeration emits
// solutions in ascending packed order.

namespace ghzident::hvsearch {

using qcore::ContextTable;
using qcore::MeasurementContext;

enum class ModelKind {
  noncontextual,
  contextual,
  identity_contextual,
  identity_fixed,
  hybrid,
};

/// CLI-facing model names: noncontextual, contextual, identity,
/// identity-fixed, hybrid.
std::string model_name(ModelKind kind);
ModelKind model_from_name(std::string_view name);

/// Throws std::invalid_argument unless every row is a valid context
/// (distinct positions covering x, y, z; target +1 or -1) and the table is
/// small enough to enumerate exhaustively.
void validate_table(const ContextTable &table);

/// One pre-assigned value per (position, axis) pair, independent of the
/// measurement context. Index 2 * position + axis.
struct NoncontextualValues {
  std::array<int, 6> values{};

  int at(Mode position, Axis axis) const;
  friend bool operator==(const NoncontextualValues &,
                         const NoncontextualValues &) = default;
};

/// A value per (table row, slot); the context an operator is measured in
/// may change its value.
struct ContextualValues {
  std::vector<std::array<int, 3>> rows;

  friend bool operator==(const ContextualValues &,
                         const ContextualValues &) = default;
};

/// Which label sits at each position; index by position, entry is the
/// label. One-line notation lists the labels at x, y, z: "bac" puts b at x.
using LabelPerm = std::array<Label, 3>;

std::string perm_name(const LabelPerm &perm);
LabelPerm perm_from_name(std::string_view name);

/// All 6 label permutations, ascending by one-line name ("abc" first).
const std::array<LabelPerm, 6> &all_label_perms();

/// Definite identities with label-bound values: each row chooses which
/// label sits at which position, while the value of each (label, axis)
/// pair is fixed across rows. values index: 2 * label + axis.
struct IdentityAssignment {
  std::vector<LabelPerm> perms;
  std::array<int, 6> values{};

  int value_of(Label label, Axis axis) const;
  friend bool operator==(const IdentityAssignment &,
                         const IdentityAssignment &) = default;
};

/// The converse relaxation: one fixed label permutation for all rows, but
/// the label-bound values may depend on the row. Only the three (label,
/// axis) pairs a row actually measures are stored (slot order); values
/// never consumed by any row are fixed to +1 by convention so that counts
/// are well-defined.
struct HybridAssignment {
  LabelPerm perm{Label::a, Label::b, Label::c};
  std::vector<std::array<int, 3>> row_values;

  friend bool operator==(const HybridAssignment &,
                         const HybridAssignment &) = default;
};

/// Product of the three slot values a model assigns to a context.
int predict(const NoncontextualValues &a, const MeasurementContext &ctx);
int predict(const ContextualValues &a, const ContextTable &table,
            std::size_t row);
int predict(const IdentityAssignment &a, const ContextTable &table,
            std::size_t row);
int predict(const HybridAssignment &a, const ContextTable &table,
            std::size_t row);

/// Exhaustive enumeration result. `visited` counts the candidates actually
/// scanned and must equal `space`; solutions are listed in ascending packed
/// order.
template <typename A>
struct SolutionSet {
  ModelKind kind{};
  std::uint64_t space = 0;
  std::uint64_t visited = 0;
  std::vector<A> solutions;

  std::uint64_t count() const { return solutions.size(); }
};

SolutionSet<NoncontextualValues> enumerate_noncontextual(
    const ContextTable &table);
SolutionSet<ContextualValues> enumerate_contextual(const ContextTable &table);
SolutionSet<IdentityAssignment> enumerate_identity_contextual(
    const ContextTable &table);
SolutionSet<IdentityAssignment> enumerate_identity_fixed(
    const ContextTable &table);
SolutionSet<HybridAssignment> enumerate_hybrid(const ContextTable &table);

// Packing conventions behind the enumeration order, exposed so tests can
// assert it. Row 0 occupies the most significant digits.
std::uint64_t pack(const NoncontextualValues &a);
std::uint64_t pack(const ContextualValues &a);
std::uint64_t pack(const IdentityAssignment &a);
std::uint64_t pack(const HybridAssignment &a);

/// Outcome of the GF(2) parity feasibility check. When infeasible,
/// `certificate_rows` lists the row subset (0-based, ascending) whose
/// parity equations combine to 0 = 1.
struct Gf2Result {
  bool feasible = false;
  std::vector<std::size_t> certificate_rows;
};

/// Encodes each row as a parity equation over the bits b_(position, axis)
/// (bit 1 means value -1): sum of the row's bits = 1 mod 2 exactly when the
/// target is -1. Gaussian elimination decides feasibility of noncontextual
/// value assignments without enumerating them.
Gf2Result gf2_feasibility(const ContextTable &table);

}  // namespace ghzident::hvsearch

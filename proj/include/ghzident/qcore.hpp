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
#include <string>
#include <string_view>
#include <vector>

#include "ghzident/common.hpp"

namespace ghzident::qcore {

/// One measured operator: a spin axis at a spatial position (e.g. X at x).
struct Slot {
  Mode position;
  Axis axis;

  friend bool operator==(const Slot &, const Slot &) = default;
};

/// Operator name in the "X_x" convention.
std::string slot_name(const Slot &slot);

/// Three jointly measured single-position spin operators plus the product
/// eigenvalue they are expected to yield.
struct MeasurementContext {
  std::array<Slot, 3> slots;
  int target = +1;

  friend bool operator==(const MeasurementContext &,
                         const MeasurementContext &) = default;
};

/// Throws std::invalid_argument unless the slots cover the positions
/// x, y, z exactly once and the target is +1 or -1.
void validate_context(const MeasurementContext &ctx);

/// Context measuring axes[i] at position i, slot order x, y, z.
/// Example: make_context("XYY", +1).
MeasurementContext make_context(std::string_view axes, int target);

/// An ordered list of measurement contexts. `measured` is filled by
/// ghz_truth_table() with one eigenvalue per row; it stays empty for tables
/// that have not been evaluated against a state.
struct ContextTable {
  std::vector<MeasurementContext> rows;
  std::vector<double> measured;
};

/// Normalized amplitude vector over a 2^n computational basis. Index bit k
/// gives the spin at position k in the order x, y, z (x most significant);
/// spin up is bit 0.
class StateVector {
 public:
  /// Requires a power-of-two dimension and unit norm (within kTol).
  explicit StateVector(Vector amplitudes);

  const Vector &amplitudes() const { return amps_; }
  int num_qubits() const { return num_qubits_; }

 private:
  Vector amps_;
  int num_qubits_;
};

/// Dense Hermitian operator over the same basis as the states it acts on.
class Observable {
 public:
  /// Requires a square matrix, Hermitian entrywise within kTol.
  explicit Observable(Matrix matrix);

  const Matrix &matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }

 private:
  Matrix matrix_;
};

// Single-qubit building blocks; spin up is the first basis vector.
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

/// The three-qubit state (|uuu> - |ddd>)/sqrt(2).
StateVector make_ghz();

/// Tensor product of the context's Pauli operators placed at their
/// positions, identity elsewhere. Rejects malformed contexts.
Observable pauli_context_operator(const MeasurementContext &ctx);

/// <psi|M|psi>. Throws on dimension mismatch or when the imaginary residue
/// exceeds kTol (which signals a non-Hermitian operator slipped through).
double expectation(const StateVector &state, const Observable &obs);

/// Shared low-level kernel: same contract as expectation() but on raw
/// amplitudes, usable for any dimension.
double expectation_raw(const Vector &state, const Matrix &op);

/// The four GHZ rows XYY, YXY, YYX, XXX with targets +1, +1, +1, -1.
/// Eigenvalues are recomputed from the state; a mismatch with the targets
/// beyond kTol throws std::runtime_error since it can only mean a broken
/// convention.
ContextTable ghz_truth_table();

/// Matrix product of mutually commuting observables. The Hermiticity check
/// of the Observable constructor doubles as a commutation witness.
Observable observable_product(const std::vector<Observable> &factors);

}  // namespace ghzident::qcore

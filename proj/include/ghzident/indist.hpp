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
#include <map>

#include "ghzident/qcore.hpp"

// First-quantized machinery for three indistinguishable bosons on the
// 6-dimensional single-particle space (mode x spin), plus a second-quantized
// construction of the same state that serves as an independent oracle.

namespace ghzident::indist {

inline constexpr int kSingleDim = 6;
inline constexpr int kParticles = 3;
inline constexpr int kDim = 216;  // 6^3

enum class Spin : int { up = 0, down = 1 };

/// Flat single-particle index, 2 * mode + spin. Bijective over [0, 6).
int flat_index(Mode m, Spin s);

/// Normalized amplitude vector over (single-particle basis)^3, dimension
/// 216. Tensor factor order is the formal label order a, b, c with a the
/// most significant index digit (base 6).
class LabeledState {
 public:
  /// Requires dimension 216 and unit norm within kTol.
  explicit LabeledState(Vector amplitudes);

  /// Rescales to unit norm; rejects the zero vector.
  static LabeledState normalized(const Vector &amplitudes);

  const Vector &amplitudes() const { return amps_; }

 private:
  Vector amps_;
};

/// Occupation-number state of exactly three bosons over the 6 single-particle
/// states; maps occupation vectors to amplitudes.
class FockState {
 public:
  using Occupation = std::array<int, kSingleDim>;

  /// Requires every occupied configuration to hold exactly three particles
  /// and the whole state to have unit norm within kTol.
  explicit FockState(std::map<Occupation, Complex> amplitudes);

  const std::map<Occupation, Complex> &amplitudes() const { return amps_; }

 private:
  std::map<Occupation, Complex> amps_;
};

/// A permutation of the three tensor factors; the particle in factor j is
/// moved to factor sigma[j].
using FactorPermutation = std::array<int, kParticles>;

/// All 6 factor permutations in lexicographic order (identity first).
const std::array<FactorPermutation, 6> &all_factor_permutations();

/// The 216-dim permutation operator P_sigma.
Matrix permutation_operator(const FactorPermutation &sigma);

/// S = (1/6) sum over all 6 label permutations; the projector onto the
/// bosonic subspace. trace(S) = 56, the number of 3-element multisets of 6.
qcore::Observable symmetrizer();

/// The normalized symmetrization of the GHZ spin state attached to the
/// product of the three spatial modes (label a at x, b at y, c at z before
/// symmetrizing; the symmetrizer erases that choice).
LabeledState build_identity_state();

/// Swaps tensor factors i and j. Rejects i == j.
LabeledState exchange(const LabeledState &state, Label i, Label j);

/// Sum over the three factors of (|position><position| tensor spin_op),
/// identity on the other two factors: the spin measurement restricted to
/// whichever particle sits at the given mode.
qcore::Observable symmetrized_local_observable(const Matrix &spin_op,
                                               Mode position);

/// Product of the context's three symmetrized single-position observables.
/// They commute, so the factor order does not matter.
qcore::Observable symmetrized_context_observable(
    const qcore::MeasurementContext &ctx);

/// Applies the two creation-operator monomials (all three modes spin up,
/// minus all three modes spin down) to the vacuum with bosonic
/// sqrt(n+1) bookkeeping, then normalizes.
FockState fock_build();

/// Maps each occupation configuration to its normalized symmetric labeled
/// ket. The independent second-quantized route to build_identity_state().
LabeledState first_quantize(const FockState &f);

/// <psi|M|psi> on the 216-dim space; same contract as qcore::expectation.
double expectation(const LabeledState &state, const qcore::Observable &obs);

}  // namespace ghzident::indist

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

#include "ghzident/indist.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ghzident::indist {

namespace {

// Base-6 digits of a 216-dim index, factor a first.
std::array<int, 3> split(int idx) {
  return {idx / 36, (idx / 6) % 6, idx % 6};
}

int join(const std::array<int, 3> &digits) {
  return 36 * digits[0] + 6 * digits[1] + digits[2];
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

int flat_index(Mode m, Spin s) {
  return 2 * static_cast<int>(m) + static_cast<int>(s);
}

LabeledState::LabeledState(Vector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() != kDim) {
    throw std::invalid_argument("labeled state must have dimension 216");
  }
  if (std::abs(amps_.norm() - 1.0) > kTol) {
    throw std::invalid_argument("labeled state must have unit norm");
  }
}

LabeledState LabeledState::normalized(const Vector &amplitudes) {
  const double norm = amplitudes.norm();
  if (norm <= 0.0) {
    throw std::invalid_argument("cannot normalize the zero vector");
  }
  return LabeledState(amplitudes / norm);
}

FockState::FockState(std::map<Occupation, Complex> amplitudes)
    : amps_(std::move(amplitudes)) {
  double norm_sq = 0.0;
  for (const auto &[occ, amp] : amps_) {
    const int total = std::accumulate(occ.begin(), occ.end(), 0);
    if (total != kParticles) {
      throw std::invalid_argument(
          "every occupied configuration must hold exactly 3 particles");
    }
    for (int n : occ) {
      if (n < 0) throw std::invalid_argument("negative occupation number");
    }
    norm_sq += std::norm(amp);
  }
  if (std::abs(std::sqrt(norm_sq) - 1.0) > kTol) {
    throw std::invalid_argument("Fock state must have unit norm");
  }
}

const std::array<FactorPermutation, 6> &all_factor_permutations() {
  static const std::array<FactorPermutation, 6> perms = [] {
    std::array<FactorPermutation, 6> out{};
    FactorPermutation p{0, 1, 2};
    for (auto &entry : out) {
      entry = p;
      std::next_permutation(p.begin(), p.end());
    }
    return out;
  }();
  return perms;
}

Matrix permutation_operator(const FactorPermutation &sigma) {
  Matrix op = Matrix::Zero(kDim, kDim);
  for (int col = 0; col < kDim; ++col) {
    const auto k = split(col);
    std::array<int, 3> m{};
    for (int j = 0; j < kParticles; ++j) m[sigma[j]] = k[j];
    op(join(m), col) = 1.0;
  }
  return op;
}

qcore::Observable symmetrizer() {
  Matrix s = Matrix::Zero(kDim, kDim);
  for (const FactorPermutation &sigma : all_factor_permutations()) {
    s += permutation_operator(sigma);
  }
  return qcore::Observable(s / 6.0);
}

LabeledState build_identity_state() {
  // Unsymmetrized seed: spin GHZ over the labels with label a at mode x,
  // b at y, c at z.
  Vector seed = Vector::Zero(kDim);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const int up = join({flat_index(Mode::x, Spin::up),
                       flat_index(Mode::y, Spin::up),
                       flat_index(Mode::z, Spin::up)});
  const int down = join({flat_index(Mode::x, Spin::down),
                         flat_index(Mode::y, Spin::down),
                         flat_index(Mode::z, Spin::down)});
  seed(up) = inv_sqrt2;
  seed(down) = -inv_sqrt2;
  return LabeledState::normalized(symmetrizer().matrix() * seed);
}

LabeledState exchange(const LabeledState &state, Label i, Label j) {
  if (i == j) {
    throw std::invalid_argument("exchange needs two distinct labels");
  }
  const int fi = static_cast<int>(i);
  const int fj = static_cast<int>(j);
  Vector out(kDim);
  for (int idx = 0; idx < kDim; ++idx) {
    auto digits = split(idx);
    std::swap(digits[fi], digits[fj]);
    out(join(digits)) = state.amplitudes()(idx);
  }
  return LabeledState(std::move(out));
}

qcore::Observable symmetrized_local_observable(const Matrix &spin_op,
                                               Mode position) {
  if (spin_op.rows() != 2 || spin_op.cols() != 2) {
    throw std::invalid_argument("spin operator must be 2x2");
  }
  if ((spin_op - spin_op.adjoint()).cwiseAbs().maxCoeff() > kTol) {
    throw std::invalid_argument("spin operator must be Hermitian");
  }
  // Single-particle operator: the mode projector restricts the spin action
  // to a particle sitting at the given position.
  Matrix single = Matrix::Zero(kSingleDim, kSingleDim);
  single.block(2 * static_cast<int>(position), 2 * static_cast<int>(position),
               2, 2) = spin_op;

  const Matrix id = Matrix::Identity(kSingleDim, kSingleDim);
  Matrix sum = kronecker(kronecker(single, id), id) +
               kronecker(kronecker(id, single), id) +
               kronecker(kronecker(id, id), single);
  return qcore::Observable(std::move(sum));
}

qcore::Observable symmetrized_context_observable(
    const qcore::MeasurementContext &ctx) {
  qcore::validate_context(ctx);
  std::vector<qcore::Observable> factors;
  factors.reserve(3);
  for (const qcore::Slot &slot : ctx.slots) {
    factors.push_back(symmetrized_local_observable(
        slot.axis == Axis::X ? qcore::pauli_x() : qcore::pauli_y(),
        slot.position));
  }
  return qcore::observable_product(factors);
}

namespace {

using RawFock = std::map<FockState::Occupation, Complex>;

RawFock apply_creation(const RawFock &in, int flat_state) {
  RawFock out;
  for (const auto &[occ, amp] : in) {
    auto next = occ;
    next[flat_state] += 1;
    out[next] += amp * std::sqrt(static_cast<double>(next[flat_state]));
  }
  return out;
}

RawFock creation_monomial(Spin s) {
  RawFock state{{FockState::Occupation{}, Complex{1.0, 0.0}}};
  for (Mode m : {Mode::z, Mode::y, Mode::x}) {
    state = apply_creation(state, flat_index(m, s));
  }
  return state;
}

}  // namespace

FockState fock_build() {
  RawFock sum;
  for (const auto &[occ, amp] : creation_monomial(Spin::up)) sum[occ] += amp;
  for (const auto &[occ, amp] : creation_monomial(Spin::down)) sum[occ] -= amp;

  double norm_sq = 0.0;
  for (const auto &[occ, amp] : sum) norm_sq += std::norm(amp);
  const double norm = std::sqrt(norm_sq);

  RawFock normalized;
  for (const auto &[occ, amp] : sum) {
    if (std::abs(amp) > 0.0) normalized[occ] = amp / norm;
  }
  return FockState(std::move(normalized));
}

LabeledState first_quantize(const FockState &f) {
  Vector out = Vector::Zero(kDim);
  for (int idx = 0; idx < kDim; ++idx) {
    const auto digits = split(idx);
    FockState::Occupation occ{};
    for (int d : digits) occ[d] += 1;
    const auto it = f.amplitudes().find(occ);
    if (it == f.amplitudes().end()) continue;
    // |n> maps to the symmetric sum over distinct arrangements, each with
    // weight sqrt(prod n_i! / 3!).
    double occ_factorials = 1.0;
    for (int n : occ) occ_factorials *= factorial(n);
    out(idx) = it->second * std::sqrt(occ_factorials / factorial(kParticles));
  }
  return LabeledState(std::move(out));
}

double expectation(const LabeledState &state, const qcore::Observable &obs) {
  return qcore::expectation_raw(state.amplitudes(), obs.matrix());
}

}  // namespace ghzident::indist

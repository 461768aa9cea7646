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

#include "ghzident/qcore.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace ghzident::qcore {

namespace {

constexpr Complex kI{0.0, 1.0};

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

std::string slot_name(const Slot &slot) {
  return std::string{to_char(slot.axis), '_', to_char(slot.position)};
}

void validate_context(const MeasurementContext &ctx) {
  bool seen[3] = {false, false, false};
  for (const Slot &slot : ctx.slots) {
    seen[static_cast<int>(slot.position)] = true;
  }
  if (!(seen[0] && seen[1] && seen[2])) {
    throw std::invalid_argument(
        "context slots must cover the positions x, y, z exactly once");
  }
  if (ctx.target != 1 && ctx.target != -1) {
    throw std::invalid_argument("context target must be +1 or -1");
  }
}

MeasurementContext make_context(std::string_view axes, int target) {
  if (axes.size() != 3) {
    throw std::invalid_argument("expected one axis per position, e.g. \"XYY\"");
  }
  MeasurementContext ctx;
  for (int k = 0; k < 3; ++k) {
    ctx.slots[k] = Slot{static_cast<Mode>(k), axis_from_char(axes[k])};
  }
  ctx.target = target;
  validate_context(ctx);
  return ctx;
}

StateVector::StateVector(Vector amplitudes) : amps_(std::move(amplitudes)) {
  if (!is_power_of_two(amps_.size())) {
    throw std::invalid_argument("state dimension must be a power of two");
  }
  if (std::abs(amps_.norm() - 1.0) > kTol) {
    throw std::invalid_argument("state vector must have unit norm");
  }
  num_qubits_ = 0;
  for (Eigen::Index d = amps_.size(); d > 1; d >>= 1) ++num_qubits_;
}

Observable::Observable(Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw std::invalid_argument("observable matrix must be square");
  }
  const double residue =
      (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (residue > kTol) {
    std::ostringstream msg;
    msg << "observable must be Hermitian (entrywise residue " << residue
        << ")";
    throw std::invalid_argument(msg.str());
  }
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

StateVector make_ghz() {
  Vector amps = Vector::Zero(8);
  amps(0) = 1.0 / std::sqrt(2.0);   // |uuu>
  amps(7) = -1.0 / std::sqrt(2.0);  // |ddd>
  return StateVector(std::move(amps));
}

Observable pauli_context_operator(const MeasurementContext &ctx) {
  validate_context(ctx);
  // One single-qubit factor per position, filled in slot order.
  std::array<Matrix, 3> factor;
  for (const Slot &slot : ctx.slots) {
    factor[static_cast<int>(slot.position)] =
        slot.axis == Axis::X ? pauli_x() : pauli_y();
  }
  return Observable(kronecker(kronecker(factor[0], factor[1]), factor[2]));
}

double expectation_raw(const Vector &state, const Matrix &op) {
  if (op.rows() != op.cols() || state.size() != op.rows()) {
    throw std::invalid_argument("state and observable dimensions must match");
  }
  const Complex value = state.dot(op * state);
  if (std::abs(value.imag()) > kTol) {
    std::ostringstream msg;
    msg << "expectation has imaginary residue " << value.imag()
        << "; operator is not Hermitian";
    throw std::invalid_argument(msg.str());
  }
  return value.real();
}

double expectation(const StateVector &state, const Observable &obs) {
  return expectation_raw(state.amplitudes(), obs.matrix());
}

ContextTable ghz_truth_table() {
  ContextTable table;
  table.rows = {
      make_context("XYY", +1),
      make_context("YXY", +1),
      make_context("YYX", +1),
      make_context("XXX", -1),
  };
  const StateVector ghz = make_ghz();
  for (const MeasurementContext &ctx : table.rows) {
    const double value = expectation(ghz, pauli_context_operator(ctx));
    if (std::abs(value - ctx.target) > kTol) {
      std::ostringstream msg;
      msg << "computed eigenvalue " << value << " does not match the target "
          << ctx.target << " for context";
      for (const Slot &slot : ctx.slots) msg << ' ' << slot_name(slot);
      msg << "; a basis or sign convention is broken";
      throw std::runtime_error(msg.str());
    }
    table.measured.push_back(value);
  }
  return table;
}

Observable observable_product(const std::vector<Observable> &factors) {
  if (factors.empty()) {
    throw std::invalid_argument("observable product needs at least one factor");
  }
  Matrix product = factors.front().matrix();
  for (std::size_t k = 1; k < factors.size(); ++k) {
    if (factors[k].dim() != product.rows()) {
      throw std::invalid_argument("observable dimensions must match");
    }
    product = product * factors[k].matrix();
  }
  return Observable(std::move(product));
}

}  // namespace ghzident::qcore

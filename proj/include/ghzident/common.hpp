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

#include <Eigen/Dense>
#include <complex>

namespace ghzident {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Absolute tolerance for every equality check in the library. The dense
/// problems here never exceed dimension 216, so double precision keeps
/// residuals far below this bound.
inline constexpr double kTol = 1e-12;

/// Spatial positions; these double as the three orthonormal spatial modes.
enum class Mode : int { x = 0, y = 1, z = 2 };

/// Spin measurement axes.
enum class Axis : int { X = 0, Y = 1 };

/// Formal particle labels.
enum class Label : int { a = 0, b = 1, c = 2 };

char to_char(Mode m);
char to_char(Axis a);
char to_char(Label l);

Mode mode_from_char(char c);
Axis axis_from_char(char c);
Label label_from_char(char c);

/// Dense Kronecker product, row-major factor ordering (left factor is the
/// most significant index block).
Matrix kronecker(const Matrix &a, const Matrix &b);

}  // namespace ghzident

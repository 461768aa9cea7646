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

#include "ghzident/common.hpp"

#include <stdexcept>
#include <string>

namespace ghzident {

char to_char(Mode m) { return "xyz"[static_cast<int>(m)]; }
char to_char(Axis a) { return "XY"[static_cast<int>(a)]; }
char to_char(Label l) { return "abc"[static_cast<int>(l)]; }

Mode mode_from_char(char c) {
  switch (c) {
    case 'x': return Mode::x;
    case 'y': return Mode::y;
    case 'z': return Mode::z;
    default:
      throw std::invalid_argument(std::string("not a position: ") + c);
  }
}

Axis axis_from_char(char c) {
  switch (c) {
    case 'X': return Axis::X;
    case 'Y': return Axis::Y;
    default:
      throw std::invalid_argument(std::string("not a measurement axis: ") + c);
  }
}

Label label_from_char(char c) {
  switch (c) {
    case 'a': return Label::a;
    case 'b': return Label::b;
    case 'c': return Label::c;
    default:
      throw std::invalid_argument(std::string("not a particle label: ") + c);
  }
}

Matrix kronecker(const Matrix &a, const Matrix &b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace ghzident

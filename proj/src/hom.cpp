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

#include "ghzident/hom.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace ghzident::hom {

namespace {

using Complex = std::complex<double>;

}  // namespace

std::string statistics_name(Statistics s) {
  switch (s) {
    case Statistics::boson: return "boson";
    case Statistics::fermion: return "fermion";
    case Statistics::distinguishable: return "distinguishable";
  }
  throw std::logic_error("unreachable");
}

Statistics statistics_from_name(std::string_view name) {
  if (name == "boson") return Statistics::boson;
  if (name == "fermion") return Statistics::fermion;
  if (name == "distinguishable") return Statistics::distinguishable;
  throw std::invalid_argument("unknown statistics: " + std::string(name));
}

OutputDistribution output_distribution(const TwoParticleInput &in) {
  const double t = in.transmissivity;
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::invalid_argument("transmissivity must lie in [0, 1]");
  }
  const double r = std::sqrt(1.0 - t * t);
  const Complex refl{0.0, r};  // reflection picks up phase i

  // Single-particle output amplitudes: the particle entering port 1 and the
  // one entering port 2 over the output modes (left, right).
  const Complex alpha[2] = {t, refl};
  const Complex beta[2] = {refl, t};

  OutputDistribution dist;
  switch (in.statistics) {
    case Statistics::boson: {
      // a_dag_left^2 |vac> = sqrt(2) |2,0>, so same-mode amplitudes gain
      // sqrt(2); the coincidence amplitude is the symmetrized sum of the
      // both-transmit and both-reflect paths.
      const Complex both_left = std::sqrt(2.0) * alpha[0] * beta[0];
      const Complex both_right = std::sqrt(2.0) * alpha[1] * beta[1];
      const Complex coincidence = alpha[0] * beta[1] + alpha[1] * beta[0];
      dist.both_left = std::norm(both_left);
      dist.both_right = std::norm(both_right);
      dist.coincidence = std::norm(coincidence);
      break;
    }
    case Statistics::fermion: {
      // Antisymmetric combination; same-mode amplitudes vanish.
      const Complex coincidence = alpha[0] * beta[1] - alpha[1] * beta[0];
      dist.both_left = 0.0;
      dist.both_right = 0.0;
      dist.coincidence = std::norm(coincidence);
      break;
    }
    case Statistics::distinguishable: {
      // Labeled particles: the two coincidence paths are distinguishable
      // events, so probabilities add with no interference term.
      dist.both_left = std::norm(alpha[0] * beta[0]);
      dist.both_right = std::norm(alpha[1] * beta[1]);
      dist.coincidence =
          std::norm(alpha[0] * beta[1]) + std::norm(alpha[1] * beta[0]);
      break;
    }
  }
  return dist;
}

double coincidence_probability(const TwoParticleInput &in) {
  return output_distribution(in).coincidence;
}

}  // namespace ghzident::hom

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

#include <string>
#include <string_view>

// Two-particle beamsplitter interference: one particle in each input port,
// coincidence read out at the two output ports. The interference is between
// the both-transmit and both-reflect two-particle amplitudes, so the result
// hinges on the exchange statistics.

namespace ghzident::hom {

enum class Statistics { boson, fermion, distinguishable };

std::string statistics_name(Statistics s);
Statistics statistics_from_name(std::string_view name);

/// Beamsplitter amplitude convention: transmission t, reflection
/// i * sqrt(1 - t^2). Requires 0 <= t <= 1.
struct TwoParticleInput {
  Statistics statistics = Statistics::boson;
  double transmissivity = 0.0;
};

/// Probabilities of the three outcomes; they sum to 1 for every valid input.
struct OutputDistribution {
  double both_left = 0.0;
  double both_right = 0.0;
  double coincidence = 0.0;
};

/// Builds the two-particle output amplitudes under the beamsplitter unitary
/// with the declared exchange statistics. Throws std::invalid_argument when
/// the transmissivity is outside [0, 1].
OutputDistribution output_distribution(const TwoParticleInput &in);

/// Probability that both detectors fire. Zero for bosons at t = 1/sqrt(2),
/// one for fermions at any t.
double coincidence_probability(const TwoParticleInput &in);

}  // namespace ghzident::hom

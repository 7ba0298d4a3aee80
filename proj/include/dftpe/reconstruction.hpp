// Copyright 2026 The dftpe Authors.
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

#include <cstddef>

#include "dftpe/dft.hpp"
#include "dftpe/encoders.hpp"
#include "dftpe/spectral.hpp"

namespace dftpe {

struct ReconstructionReport {
  Signal reference;
  Signal reconstructed;
  double l2_error = 0.0;          // ||reference - reconstructed||_2
  std::size_t argmax_position = 0;
  std::size_t peak_width = 0;     // points with value >= max / 2
};

// Spectrum with a_0 scaled by g[0], b_0 by g[d/2] and (a_k, b_k) by g[k];
// no renormalization. g must have d/2 + 1 entries.
Spectrum weight_spectrum(const Spectrum& c, const FrequencyDistribution& g);

/// Reference function reconstruction: weight the reference's DFT
/// coefficients by g, rescale to the original l2 norm, invert.
/// Throws DegenerateInputError when the weighted spectrum is all zero.
ReconstructionReport reconstruct(const Signal& f, const FrequencyDistribution& g);

// Smallest index of the maximum value.
std::size_t argmax(std::span<const double> values);
// Count of points whose value is >= max / 2.
std::size_t half_max_width(std::span<const double> values);

struct FaithfulnessResult {
  bool passed = false;
  // Largest |inverse-DFT(column s) - one_hot(s)| over all s and t.
  double max_deviation = 0.0;
  // Smallest Euclidean distance between two distinct columns.
  double min_pairwise_distance = 0.0;
};

/// Checks that every position 0..d-1 is recoverable from its encoding.
/// For the DFT encoding `passed` requires max_deviation <= 1e-9 and strictly
/// positive pairwise distances; for other kinds the diagnostics are computed
/// and `passed` reports the same test without any claim behind it.
FaithfulnessResult faithfulness_check(EncodingKind kind, const Lattice& lattice,
                                      double rho = 10000.0);

}  // namespace dftpe

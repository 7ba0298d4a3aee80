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
#include <optional>
#include <vector>

#include "dftpe/dft.hpp"
#include "dftpe/encoders.hpp"

namespace dftpe {

// Gaussian KDE settings. The evaluation grid is omega_k = 2*pi*k/d for
// k = 0..d/2, i.e. [0, pi].
struct KdeConfig {
  double sigma = 0.0;

  // sigma = multiplier * 2*pi/d.
  static KdeConfig from_multiplier(double multiplier, std::size_t d);
  void validate() const;
};

/// Nonnegative weights over the d/2 + 1 frequency grid points, summing to 1.
struct FrequencyDistribution {
  std::vector<double> weights;
  double normalizer = 1.0;  // R: raw weight mass divided out

  std::size_t size() const { return weights.size(); }
  double operator[](std::size_t k) const { return weights[k]; }
};

std::vector<double> frequency_grid(const Lattice& lattice);

/// Gaussian kernel density of the original encoder's frequencies on the grid.
FrequencyDistribution kde_distribution(const PEConfig& config, const KdeConfig& kde);

/// Flat spectrum of the DFT encoding: 1/d at the endpoints, 2/d in between.
FrequencyDistribution dft_distribution(const Lattice& lattice);

/// Per-frequency energy of an encoding matrix averaged over its columns,
/// pooled onto the grid (a_k and b_k share bin k; b_0 goes to the pi bin).
/// Only meaningful for the DFT encoding's canonical coefficient order.
FrequencyDistribution encoding_energy_distribution(const EncodingMatrix& enc);

/// Continuous index l solving 2*pi/d = rho^(-l/d), i.e. l = d * log_rho(d / (2*pi)).
/// Throws DomainError when d <= 2*pi.
double lowpass_index(std::size_t d, double rho);

/// Number of original-encoder frequencies w_l (l = 0, 2, .., d-2) strictly below
/// the threshold. Defaults to 2*pi/d, the smallest nonzero grid frequency.
std::size_t lowpass_count(const PEConfig& config, std::optional<double> threshold = std::nullopt);

}  // namespace dftpe

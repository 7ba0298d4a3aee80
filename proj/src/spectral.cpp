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

#include "dftpe/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dftpe/errors.hpp"

namespace dftpe {

namespace {

FrequencyDistribution normalized(std::vector<double> raw) {
  double mass = 0.0;
  for (double w : raw) mass += w;
  if (!(mass > 0.0)) throw DegenerateInputError("frequency distribution has zero mass");
  for (double& w : raw) w /= mass;
  return {std::move(raw), mass};
}

}  // namespace

KdeConfig KdeConfig::from_multiplier(double multiplier, std::size_t d) {
  return {multiplier * 2.0 * std::numbers::pi / static_cast<double>(d)};
}

void KdeConfig::validate() const {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw ValidationError("KDE bandwidth sigma must be a positive finite number");
  }
}

std::vector<double> frequency_grid(const Lattice& lattice) {
  std::vector<double> grid(lattice.size() / 2 + 1);
  for (std::size_t k = 0; k < grid.size(); ++k) grid[k] = lattice.frequency(k);
  return grid;
}

FrequencyDistribution kde_distribution(const PEConfig& config, const KdeConfig& kde) {
  config.validate();
  kde.validate();
  const std::vector<double> grid = frequency_grid(config.lattice());
  const double inv_two_var = 1.0 / (2.0 * kde.sigma * kde.sigma);
  std::vector<double> raw(grid.size(), 0.0);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    for (std::size_t l = 0; l < config.d; l += 2) {
      const double diff = grid[k] - original_frequency(l, config.d, config.rho);
      raw[k] += std::exp(-diff * diff * inv_two_var);
    }
  }
  return normalized(std::move(raw));
}

FrequencyDistribution dft_distribution(const Lattice& lattice) {
  const double d = static_cast<double>(lattice.size());
  std::vector<double> w(lattice.size() / 2 + 1, 2.0 / d);
  w.front() = 1.0 / d;
  w.back() = 1.0 / d;
  return {std::move(w), 1.0};
}

FrequencyDistribution encoding_energy_distribution(const EncodingMatrix& enc) {
  const std::size_t d = enc.columns.rows();
  const Lattice lattice(d);
  const std::size_t K = lattice.half_band();
  std::vector<double> energy(d / 2 + 1, 0.0);
  for (std::size_t s = 0; s < enc.columns.cols(); ++s) {
    for (std::size_t l = 0; l < d; ++l) {
      const double v = enc.columns(l, s);
      std::size_t bin = 0;
      if (l == d - 1) {
        bin = d / 2;
      } else if (l > K) {
        bin = l - K;
      } else {
        bin = l;
      }
      energy[bin] += v * v;
    }
  }
  return normalized(std::move(energy));
}

double lowpass_index(std::size_t d, double rho) {
  const double dd = static_cast<double>(d);
  if (d < 4 || d % 2 != 0) throw ValidationError("d must be even and >= 4");
  if (!(rho > 0.0) || rho == 1.0) throw DomainError("rho must be positive and != 1");
  if (dd <= 2.0 * std::numbers::pi) {
    throw DomainError("low-pass index undefined for d <= 2*pi (d=" + std::to_string(d) + ")");
  }
  return dd * std::log(dd / (2.0 * std::numbers::pi)) / std::log(rho);
}

std::size_t lowpass_count(const PEConfig& config, std::optional<double> threshold) {
  config.validate();
  const double limit = threshold.value_or(2.0 * std::numbers::pi / static_cast<double>(config.d));
  std::size_t count = 0;
  for (std::size_t l = 0; l < config.d; l += 2) {
    if (original_frequency(l, config.d, config.rho) < limit) ++count;
  }
  return count;
}

}  // namespace dftpe

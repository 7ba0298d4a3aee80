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

#include "dftpe/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "dftpe/errors.hpp"

namespace dftpe {

Spectrum weight_spectrum(const Spectrum& c, const FrequencyDistribution& g) {
  const Lattice& lattice = c.lattice();
  const std::size_t d = lattice.size();
  const std::size_t K = lattice.half_band();
  if (g.size() != d / 2 + 1) {
    throw ValidationError("weights have " + std::to_string(g.size()) + " entries, expected " +
                          std::to_string(d / 2 + 1));
  }
  std::vector<double> m(c.coeffs().begin(), c.coeffs().end());
  m[0] *= g[0];
  m[d - 1] *= g[K + 1];
  for (std::size_t k = 1; k <= K; ++k) {
    m[k] *= g[k];
    m[K + k] *= g[k];
  }
  return Spectrum(lattice, std::move(m));
}

std::size_t argmax(std::span<const double> values) {
  return static_cast<std::size_t>(std::max_element(values.begin(), values.end()) -
                                  values.begin());
}

std::size_t half_max_width(std::span<const double> values) {
  const double half = values[argmax(values)] / 2.0;
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [half](double v) { return v >= half; }));
}

ReconstructionReport reconstruct(const Signal& f, const FrequencyDistribution& g) {
  const Spectrum original = dft_forward(f);
  const Spectrum weighted = weight_spectrum(original, g);
  const double weighted_norm = weighted.norm();
  if (!(weighted_norm > 0.0)) {
    throw DegenerateInputError("weighted spectrum is zero; cannot renormalize");
  }
  const double scale = original.norm() / weighted_norm;
  std::vector<double> rescaled(weighted.coeffs().begin(), weighted.coeffs().end());
  for (double& v : rescaled) v *= scale;

  Signal out = dft_inverse(Spectrum(f.lattice(), std::move(rescaled)));
  double err = 0.0;
  for (std::size_t t = 0; t < f.size(); ++t) err += (f[t] - out[t]) * (f[t] - out[t]);
  const std::size_t peak = argmax(out.values());
  const std::size_t width = half_max_width(out.values());
  return {f, std::move(out), std::sqrt(err), peak, width};
}

FaithfulnessResult faithfulness_check(EncodingKind kind, const Lattice& lattice, double rho) {
  const std::size_t d = lattice.size();
  const EncodingMatrix enc = build_encoding_matrix(kind, PEConfig{d, d, rho});
  FaithfulnessResult result;
  for (std::size_t s = 0; s < d; ++s) {
    // Reading the column as a spectrum only makes sense for the DFT layout;
    // for other kinds it measures how far the vector is from that layout.
    const Signal back = dft_inverse(Spectrum(lattice, enc.columns.column(s)));
    for (std::size_t t = 0; t < d; ++t) {
      const double expected = t == s ? 1.0 : 0.0;
      result.max_deviation = std::max(result.max_deviation, std::abs(back[t] - expected));
    }
  }
  // ||e_s - e_t||^2 = G_ss + G_tt - 2 G_st.
  const Matrix gram = matmul_tn(enc.columns, enc.columns);
  double min_sq = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = s + 1; t < d; ++t)
      min_sq = std::min(min_sq, gram(s, s) + gram(t, t) - 2.0 * gram(s, t));
  result.min_pairwise_distance = std::sqrt(std::max(min_sq, 0.0));
  result.passed = result.max_deviation <= 1e-9 && result.min_pairwise_distance > 0.0;
  return result;
}

}  // namespace dftpe

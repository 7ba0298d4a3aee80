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

#include "dftpe/encoders.hpp"

#include <cmath>
#include <string>

#include "dftpe/errors.hpp"

namespace dftpe {

std::string_view to_string(EncodingKind kind) {
  switch (kind) {
    case EncodingKind::Original:
      return "original";
    case EncodingKind::Dft:
      return "dft";
    case EncodingKind::Zero:
      return "none";
  }
  return "unknown";
}

EncodingKind parse_encoding_kind(std::string_view name) {
  if (name == "original") return EncodingKind::Original;
  if (name == "dft") return EncodingKind::Dft;
  if (name == "none" || name == "zero") return EncodingKind::Zero;
  throw ValidationError("unknown encoding '" + std::string(name) +
                        "' (expected original, dft or none)");
}

void PEConfig::validate() const {
  if (d < 4 || d % 2 != 0) {
    throw ValidationError("encoding dimension d must be even and >= 4, got " + std::to_string(d));
  }
  if (S < 1) throw ValidationError("sequence length S must be >= 1");
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw ValidationError("frequency base rho must be a positive finite number");
  }
}

double original_frequency(std::size_t k, std::size_t d, double rho) {
  return std::pow(rho, -static_cast<double>(k) / static_cast<double>(d));
}

std::vector<double> original_pe_vector(std::size_t s, const PEConfig& config) {
  config.validate();
  std::vector<double> e(config.d);
  const double pos = static_cast<double>(s);
  for (std::size_t k = 0; k < config.d; k += 2) {
    const double w = original_frequency(k, config.d, config.rho);
    e[k] = std::sin(w * pos);
    e[k + 1] = std::cos(w * pos);
  }
  return e;
}

std::vector<double> dft_pe_vector(std::size_t s, const Lattice& lattice) {
  // phi_l evaluated at the one-hot's support is exactly the coefficient vector.
  const std::size_t d = lattice.size();
  const std::size_t t = s % d;
  std::vector<double> e(d);
  for (std::size_t l = 0; l < d; ++l) e[l] = basis_value(l, t, lattice);
  return e;
}

EncodingMatrix build_encoding_matrix(EncodingKind kind, const PEConfig& config) {
  config.validate();
  EncodingMatrix enc{Matrix(config.d, config.S), kind, config, false};
  const Lattice lattice = config.lattice();
  for (std::size_t s = 0; s < config.S; ++s) {
    switch (kind) {
      case EncodingKind::Original:
        enc.columns.set_column(s, original_pe_vector(s, config));
        break;
      case EncodingKind::Dft:
        enc.columns.set_column(s, dft_pe_vector(s, lattice));
        break;
      case EncodingKind::Zero:
        break;
    }
  }
  enc.aliasing_warning = kind == EncodingKind::Dft && config.S > config.d;
  return enc;
}

Matrix inject(const Matrix& x, const EncodingMatrix& enc) {
  if (x.rows() != enc.columns.rows() || x.cols() != enc.columns.cols()) {
    throw ValidationError("inject: data is " + std::to_string(x.rows()) + "x" +
                          std::to_string(x.cols()) + " but encoding is " +
                          std::to_string(enc.columns.rows()) + "x" +
                          std::to_string(enc.columns.cols()));
  }
  return x + enc.columns;
}

}  // namespace dftpe

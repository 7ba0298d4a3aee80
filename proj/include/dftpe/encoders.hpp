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
#include <string_view>
#include <vector>

#include "dftpe/dft.hpp"
#include "dftpe/matrix.hpp"

namespace dftpe {

enum class EncodingKind {
  Original,  // interleaved (sin, cos) pairs with frequencies rho^(-k/d)
  Dft,       // real DFT coefficients of the one-hot position function
  Zero,      // no positional information; baseline for experiments
};

std::string_view to_string(EncodingKind kind);
// Accepts "original", "dft", "none"/"zero". Throws ValidationError otherwise.
EncodingKind parse_encoding_kind(std::string_view name);

struct PEConfig {
  std::size_t d = 256;       // encoding dimension, even, >= 4
  std::size_t S = 80;        // sequence length
  double rho = 10000.0;      // frequency base of the original encoder

  void validate() const;
  Lattice lattice() const { return Lattice(d); }
};

/// d x S matrix whose column s is the encoding of position s (0-based).
struct EncodingMatrix {
  Matrix columns;
  EncodingKind kind = EncodingKind::Dft;
  PEConfig config;
  // Set when a DFT encoding has more positions than lattice points; such
  // positions wrap around and are no longer distinguishable.
  bool aliasing_warning = false;
};

// Frequency w_k = rho^(-k/d) for even k = 0..d-2.
double original_frequency(std::size_t k, std::size_t d, double rho);

std::vector<double> original_pe_vector(std::size_t s, const PEConfig& config);

// Spectrum of the one-hot at s, in canonical coefficient order. Positions
// s >= d alias onto s mod d.
std::vector<double> dft_pe_vector(std::size_t s, const Lattice& lattice);

EncodingMatrix build_encoding_matrix(EncodingKind kind, const PEConfig& config);

// x^(s) + e^(s) for every column. x must be d x S.
Matrix inject(const Matrix& x, const EncodingMatrix& enc);

}  // namespace dftpe

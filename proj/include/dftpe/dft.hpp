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
#include <span>
#include <vector>

#include "dftpe/matrix.hpp"

namespace dftpe {

/// A d-point lattice t = 0..d-1 carrying the real Fourier basis.
///
/// d must be even and at least 4. The basis has d functions: the constant,
/// K = d/2 - 1 cosines, K sines, and the alternating cos(pi t).
class Lattice {
 public:
  explicit Lattice(std::size_t d);

  std::size_t size() const { return d_; }
  std::size_t half_band() const { return d_ / 2 - 1; }  // K
  // Angular frequency 2*pi*k/d of grid index k (k = 0..d/2).
  double frequency(std::size_t k) const;

  bool operator==(const Lattice&) const = default;

 private:
  std::size_t d_;
};

/// Real-valued function on a lattice.
class Signal {
 public:
  Signal(const Lattice& lattice, std::vector<double> values);

  static Signal zeros(const Lattice& lattice);
  static Signal one_hot(const Lattice& lattice, std::size_t position);

  const Lattice& lattice() const { return lattice_; }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t t) const { return values_[t]; }
  std::size_t size() const { return values_.size(); }
  double norm() const;

 private:
  Lattice lattice_;
  std::vector<double> values_;
};

/// Real DFT coefficients in basis order [a_0, a_1..a_K, b_1..b_K, b_0].
class Spectrum {
 public:
  Spectrum(const Lattice& lattice, std::vector<double> coeffs);

  const Lattice& lattice() const { return lattice_; }
  std::span<const double> coeffs() const { return coeffs_; }
  double operator[](std::size_t l) const { return coeffs_[l]; }
  std::size_t size() const { return coeffs_.size(); }
  double norm() const;

  double a(std::size_t k) const;  // k = 0..K
  double b(std::size_t k) const;  // k = 0..K; b(0) is the cos(pi t) coefficient

 private:
  Lattice lattice_;
  std::vector<double> coeffs_;
};

// phi_l(t). Throws DomainError for l or t outside 0..d-1.
double basis_value(std::size_t l, std::size_t t, const Lattice& lattice);

// Row l holds phi_l sampled on the lattice.
Matrix basis_matrix(const Lattice& lattice);

Spectrum dft_forward(const Signal& f);
Signal dft_inverse(const Spectrum& c);

// Entry (l, m) = sum_t phi_l(t) phi_m(t).
Matrix gram_matrix(const Lattice& lattice);

}  // namespace dftpe

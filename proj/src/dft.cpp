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

#include "dftpe/dft.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dftpe/errors.hpp"

namespace dftpe {

namespace {

double l2(std::span<const double> v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

}  // namespace

Lattice::Lattice(std::size_t d) : d_(d) {
  if (d < 4 || d % 2 != 0) {
    throw ValidationError("lattice size must be an even integer >= 4, got " + std::to_string(d));
  }
}

double Lattice::frequency(std::size_t k) const {
  return 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d_);
}

Signal::Signal(const Lattice& lattice, std::vector<double> values)
    : lattice_(lattice), values_(std::move(values)) {
  if (values_.size() != lattice_.size()) {
    throw ValidationError("signal length " + std::to_string(values_.size()) +
                          " does not match lattice size " + std::to_string(lattice_.size()));
  }
  if (!all_finite(values_)) throw ValidationError("signal contains non-finite values");
}

Signal Signal::zeros(const Lattice& lattice) {
  return Signal(lattice, std::vector<double>(lattice.size(), 0.0));
}

Signal Signal::one_hot(const Lattice& lattice, std::size_t position) {
  if (position >= lattice.size()) {
    throw DomainError("one-hot position " + std::to_string(position) + " outside lattice");
  }
  std::vector<double> v(lattice.size(), 0.0);
  v[position] = 1.0;
  return Signal(lattice, std::move(v));
}

double Signal::norm() const { return l2(values_); }

Spectrum::Spectrum(const Lattice& lattice, std::vector<double> coeffs)
    : lattice_(lattice), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != lattice_.size()) {
    throw ValidationError("spectrum length " + std::to_string(coeffs_.size()) +
                          " does not match lattice size " + std::to_string(lattice_.size()));
  }
  if (!all_finite(coeffs_)) throw ValidationError("spectrum contains non-finite values");
}

double Spectrum::norm() const { return l2(coeffs_); }

double Spectrum::a(std::size_t k) const {
  if (k > lattice_.half_band()) throw DomainError("a_k index out of range");
  return coeffs_[k];
}

double Spectrum::b(std::size_t k) const {
  const std::size_t K = lattice_.half_band();
  if (k > K) throw DomainError("b_k index out of range");
  return k == 0 ? coeffs_[lattice_.size() - 1] : coeffs_[K + k];
}

double basis_value(std::size_t l, std::size_t t, const Lattice& lattice) {
  const std::size_t d = lattice.size();
  if (l >= d || t >= d) {
    throw DomainError("basis index (l=" + std::to_string(l) + ", t=" + std::to_string(t) +
                      ") outside 0.." + std::to_string(d - 1));
  }
  const std::size_t K = lattice.half_band();
  const double dd = static_cast<double>(d);
  if (l == 0) return 1.0 / std::sqrt(dd);
  if (l == d - 1) return (t % 2 == 0 ? 1.0 : -1.0) / std::sqrt(dd);  // cos(pi t)
  // Phase index reduced mod d so the trig argument stays in [0, 2*pi).
  const std::size_t k = l <= K ? l : l - K;
  const double angle = lattice.frequency((k * t) % d);
  return std::sqrt(2.0 / dd) * (l <= K ? std::cos(angle) : std::sin(angle));
}

Matrix basis_matrix(const Lattice& lattice) {
  const std::size_t d = lattice.size();
  Matrix phi(d, d);
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t t = 0; t < d; ++t) phi(l, t) = basis_value(l, t, lattice);
  return phi;
}

Spectrum dft_forward(const Signal& f) {
  const Lattice& lattice = f.lattice();
  const std::size_t d = lattice.size();
  std::vector<double> c(d, 0.0);
  for (std::size_t l = 0; l < d; ++l) {
    double acc = 0.0;
    for (std::size_t t = 0; t < d; ++t) acc += f[t] * basis_value(l, t, lattice);
    c[l] = acc;
  }
  return Spectrum(lattice, std::move(c));
}

Signal dft_inverse(const Spectrum& c) {
  const Lattice& lattice = c.lattice();
  const std::size_t d = lattice.size();
  std::vector<double> f(d, 0.0);
  for (std::size_t t = 0; t < d; ++t) {
    double acc = 0.0;
    for (std::size_t l = 0; l < d; ++l) acc += c[l] * basis_value(l, t, lattice);
    f[t] = acc;
  }
  return Signal(lattice, std::move(f));
}

Matrix gram_matrix(const Lattice& lattice) {
  const Matrix phi = basis_matrix(lattice);
  return matmul_nt(phi, phi);
}

}  // namespace dftpe

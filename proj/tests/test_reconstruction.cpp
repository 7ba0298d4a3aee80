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

#include <doctest.h>

#include <cmath>

#include "dftpe/errors.hpp"
#include "dftpe/reconstruction.hpp"
#include "dftpe/rng.hpp"
#include "oracles.hpp"

using namespace dftpe;

namespace {

FrequencyDistribution uniform_weights(std::size_t d) {
  return {std::vector<double>(d / 2 + 1, 1.0 / static_cast<double>(d / 2 + 1)), 1.0};
}

// Applies the weights with the oracle transforms, independent of reconstruct().
oracle::Vec oracle_reconstruct(const oracle::Vec& f, const std::vector<double>& g) {
  const std::size_t d = f.size();
  const std::size_t K = d / 2 - 1;
  const oracle::Vec c = oracle::forward(f);
  oracle::Vec m = c;
  m[0] *= g[0];
  m[d - 1] *= g[d / 2];
  for (std::size_t k = 1; k <= K; ++k) {
    m[k] *= g[k];
    m[K + k] *= g[k];
  }
  double nc = 0, nm = 0;
  for (std::size_t l = 0; l < d; ++l) {
    nc += c[l] * c[l];
    nm += m[l] * m[l];
  }
  for (double& v : m) v *= std::sqrt(nc / nm);
  return oracle::inverse(m);
}

const PEConfig kReference{256, 80, 1e4};

}  // namespace

TEST_CASE("uniform weights reproduce a one-hot") {
  const Lattice lattice(256);
  const auto r = reconstruct(Signal::one_hot(lattice, 40), uniform_weights(256));
  CHECK(r.l2_error <= 1e-9);
  CHECK(r.argmax_position == 40);
  CHECK(r.peak_width == 1);
}

TEST_CASE("property: uniform weights are the identity for any signal") {
  Rng rng(99);
  for (int i = 0; i < 20; ++i) {
    const std::size_t d = 4 + 2 * rng.below(100);
    const Lattice lattice(d);
    std::vector<double> v(d);
    for (double& x : v) x = rng.uniform(-1, 1);
    const double scale = rng.uniform(0.1, 5.0);
    FrequencyDistribution g{std::vector<double>(d / 2 + 1, scale), 1.0};
    CHECK(reconstruct(Signal(lattice, v), g).l2_error <= 1e-9);
  }
}

TEST_CASE("renormalization keeps the spectrum norm") {
  Rng rng(5);
  const Lattice lattice(64);
  std::vector<double> v(64);
  for (double& x : v) x = rng.uniform(-1, 1);
  const Signal f(lattice, v);
  const auto g = kde_distribution(PEConfig{64, 1, 1e4}, KdeConfig::from_multiplier(4, 64));
  const auto r = reconstruct(f, g);
  CHECK(std::abs(r.reconstructed.norm() - f.norm()) <= 1e-12 * f.norm());
  CHECK(oracle::max_abs({r.reconstructed.values().begin(), r.reconstructed.values().end()},
                        oracle_reconstruct(v, g.weights)) <= 1e-12);
}

TEST_CASE("flat dft weights keep one-hot spikes in place") {
  const Lattice lattice(256);
  const auto g = dft_distribution(lattice);
  for (std::size_t p : {5u, 40u, 75u}) {
    const auto r = reconstruct(Signal::one_hot(lattice, p), g);
    CHECK(r.argmax_position == p);
    CHECK(r.peak_width == 1);
    // Endpoint weights are half the interior ones, so this is close to but
    // not exactly the identity. Frozen from the numpy oracle.
    CHECK(r.l2_error == doctest::Approx(0.0441615067335544).epsilon(1e-9));
  }
}

TEST_CASE("property: flat weights place the argmax at every position") {
  const Lattice lattice(256);
  const auto g = dft_distribution(lattice);
  for (std::size_t p = 0; p < 256; ++p) {
    CHECK(reconstruct(Signal::one_hot(lattice, p), g).argmax_position == p);
  }
}

TEST_CASE("kde weights blur one-hot spikes") {
  const Lattice lattice(256);
  const auto g = kde_distribution(kReference, KdeConfig::from_multiplier(4, 256));
  const auto flat = dft_distribution(lattice);
  for (std::size_t p : {5u, 40u, 75u}) {
    const auto r = reconstruct(Signal::one_hot(lattice, p), g);
    CHECK(r.argmax_position == p);
    // Frozen from the numpy oracle: half-maximum width 11, l2 error 1.1487.
    CHECK(r.peak_width == 11);
    CHECK(r.l2_error == doctest::Approx(1.14867320895398).epsilon(1e-9));
    CHECK(r.l2_error > reconstruct(Signal::one_hot(lattice, p), flat).l2_error);
  }
}

TEST_CASE("degenerate inputs") {
  const Lattice lattice(8);
  CHECK_THROWS_AS(reconstruct(Signal::zeros(lattice), dft_distribution(lattice)),
                  DegenerateInputError);
  FrequencyDistribution zero{std::vector<double>(5, 0.0), 1.0};
  CHECK_THROWS_AS(reconstruct(Signal::one_hot(lattice, 2), zero), DegenerateInputError);
  FrequencyDistribution short_g{std::vector<double>(4, 0.25), 1.0};
  CHECK_THROWS_AS(reconstruct(Signal::one_hot(lattice, 2), short_g), ValidationError);
}

TEST_CASE("peak helpers") {
  const std::vector<double> v = {0.1, 0.5, 1.0, 0.5, 0.49, 1.0};
  CHECK(argmax(v) == 2);
  CHECK(half_max_width(v) == 4);  // ties at exactly max/2 count
}

TEST_CASE("faithfulness check") {
  SUBCASE("dft d=256") {
    const auto r = faithfulness_check(EncodingKind::Dft, Lattice(256));
    CHECK(r.passed);
    CHECK(r.max_deviation <= 1e-9);
    CHECK(r.min_pairwise_distance == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  }
  SUBCASE("dft d=4, enumerated") {
    const auto r = faithfulness_check(EncodingKind::Dft, Lattice(4));
    CHECK(r.passed);
    for (std::size_t s = 0; s < 4; ++s) {
      const auto back = oracle::inverse(oracle::forward(oracle::one_hot(4, s)));
      CHECK(oracle::max_abs(back, oracle::one_hot(4, s)) <= 1e-15);
    }
  }
  SUBCASE("dft columns have identity inner products") {
    const auto enc = build_encoding_matrix(EncodingKind::Dft, PEConfig{32, 32, 1e4});
    CHECK(max_abs_diff(matmul_tn(enc.columns, enc.columns), Matrix::identity(32)) <= 1e-12);
  }
  SUBCASE("original encoder diagnostics") {
    const auto r = faithfulness_check(EncodingKind::Original, Lattice(64));
    CHECK_FALSE(r.passed);  // not a DFT coefficient vector
    CHECK(r.max_deviation > 1e-3);
    CHECK(r.min_pairwise_distance > 0.0);
  }
}

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
#include <numbers>
#include <numeric>

#include "dftpe/errors.hpp"
#include "dftpe/spectral.hpp"
#include "oracles.hpp"

using namespace dftpe;

namespace {

double total(const FrequencyDistribution& g) {
  return std::accumulate(g.weights.begin(), g.weights.end(), 0.0);
}

const PEConfig kReference{256, 80, 1e4};
const KdeConfig kReferenceKde = KdeConfig::from_multiplier(4.0, 256);

}  // namespace

TEST_CASE("frequency grid spans [0, pi] with d/2 + 1 points") {
  const auto grid = frequency_grid(Lattice(16));
  REQUIRE(grid.size() == 9);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == doctest::Approx(std::numbers::pi));
  for (std::size_t k = 1; k < grid.size(); ++k) CHECK(grid[k] > grid[k - 1]);
}

TEST_CASE("kde distribution matches the brute-force oracle") {
  const auto g = kde_distribution(kReference, kReferenceKde);
  const auto ref = oracle::kde(256, 1e4, kReferenceKde.sigma);
  REQUIRE(g.size() == 129);
  CHECK(oracle::max_abs(g.weights, ref) <= 1e-14);
  // Frozen from an independent numpy evaluation.
  CHECK(g[0] == doctest::Approx(0.1069871007136538).epsilon(1e-12));
  CHECK(g[1] == doctest::Approx(0.1089158060062877).epsilon(1e-12));
}

TEST_CASE("kde distribution shape at d=256 rho=1e4") {
  const auto g = kde_distribution(kReference, kReferenceKde);
  CHECK(std::abs(total(g) - 1.0) <= 1e-12);
  CHECK(g[0] > 10.0 * g[64]);
  // The density rises between omega = 0 and the first grid point because all
  // kernel centres are strictly positive; the mode is k = 1, not k = 0.
  CHECK(g[1] > g[0]);
  for (std::size_t k = 2; k < g.size(); ++k) CHECK(g[k] < g[1]);
  for (std::size_t k = 2; k <= 32; ++k) CHECK(g[k] <= g[k - 1]);
  for (double w : g.weights) CHECK(w >= 0.0);
}

TEST_CASE("kde flattens for a huge bandwidth") {
  const auto g = kde_distribution(kReference, KdeConfig{1e6});
  const auto [lo, hi] = std::minmax_element(g.weights.begin(), g.weights.end());
  CHECK((*hi - *lo) / *hi <= 1e-6);
}

TEST_CASE("property: both distributions are normalized for assorted configs") {
  for (std::size_t d : {4u, 8u, 30u, 128u, 512u}) {
    for (double rho : {2.0, 100.0, 1e4}) {
      for (double mult : {0.5, 4.0, 20.0}) {
        const PEConfig cfg{d, 1, rho};
        const auto g = kde_distribution(cfg, KdeConfig::from_multiplier(mult, d));
        CHECK(std::abs(total(g) - 1.0) <= 1e-12);
        for (double w : g.weights) CHECK(w >= 0.0);
      }
    }
    const auto flat = dft_distribution(Lattice(d));
    CHECK(std::abs(total(flat) - 1.0) <= 1e-12);
  }
  CHECK_THROWS_AS(kde_distribution(kReference, KdeConfig{0.0}), ValidationError);
}

TEST_CASE("dft distribution") {
  const auto g = dft_distribution(Lattice(8));
  REQUIRE(g.size() == 5);
  const double expected[] = {1.0 / 8, 2.0 / 8, 2.0 / 8, 2.0 / 8, 1.0 / 8};
  for (std::size_t k = 0; k < 5; ++k) CHECK(g[k] == expected[k]);

  const auto g256 = dft_distribution(Lattice(256));
  CHECK(g256[0] == 1.0 / 256);
  CHECK(g256[128] == 1.0 / 256);
  for (std::size_t k = 1; k < 128; ++k) CHECK(g256[k] == g256[1]);
}

TEST_CASE("dft distribution equals the averaged column energy of the encoding") {
  for (std::size_t d : {8u, 64u, 256u}) {
    const auto enc = build_encoding_matrix(EncodingKind::Dft, PEConfig{d, d, 1e4});
    const auto measured = encoding_energy_distribution(enc);
    CHECK(oracle::max_abs(measured.weights, dft_distribution(Lattice(d)).weights) <= 1e-12);
  }
}

TEST_CASE("lowpass index") {
  const double l256 = lowpass_index(256, 1e4);
  const double l512 = lowpass_index(512, 1e4);
  CHECK(l256 == doctest::Approx(64.0 * std::log10(256.0 / (2 * std::numbers::pi))));
  CHECK(l256 == doctest::Approx(103.04384620503902).epsilon(1e-12));
  CHECK(l512 == doctest::Approx(244.6195318550676).epsilon(1e-12));
  for (auto [d, l] : {std::pair{256.0, l256}, std::pair{512.0, l512}}) {
    const double target = 2 * std::numbers::pi / d;
    CHECK(std::abs(std::pow(1e4, -l / d) - target) <= 1e-12 * target);
  }
  CHECK(lowpass_index(64, 10.0) == doctest::Approx(64 * std::log10(64 / (2 * std::numbers::pi))));
  CHECK_THROWS_AS(lowpass_index(6, 1e4), DomainError);
  CHECK_THROWS_AS(lowpass_index(4, 1e4), DomainError);
}

TEST_CASE("lowpass count agrees with enumeration") {
  CHECK(lowpass_count(kReference) == 76);
  CHECK(lowpass_count(kReference) == oracle::count_below(256, 1e4, 2 * std::numbers::pi / 256));
  // At d=4 the threshold 2*pi/4 exceeds both frequencies (1 and 0.01).
  CHECK(lowpass_count(PEConfig{4, 1, 1e4}) == 2);
  for (std::size_t d : {8u, 64u, 512u}) {
    CHECK(lowpass_count(PEConfig{d, 1, 1e4}) ==
          oracle::count_below(d, 1e4, 2 * std::numbers::pi / static_cast<double>(d)));
  }
}

TEST_CASE("property: lowpass count is monotone in the threshold") {
  std::size_t previous = lowpass_count(kReference, 0.0);
  CHECK(previous == 0);
  for (int i = 1; i <= 200; ++i) {
    const std::size_t now = lowpass_count(kReference, 1.2 * i / 200.0);
    CHECK(now >= previous);
    previous = now;
  }
  CHECK(previous == 128);
}

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

#include "dftpe/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <utility>

#include "dftpe/attention.hpp"
#include "dftpe/dft.hpp"
#include "dftpe/encoders.hpp"
#include "dftpe/experiments.hpp"
#include "dftpe/gradcheck.hpp"
#include "dftpe/metrics.hpp"
#include "dftpe/reconstruction.hpp"
#include "dftpe/rng.hpp"
#include "dftpe/spectral.hpp"

namespace dftpe {

namespace {

std::string fmt(const char* label, double value) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s=%.3e", label, value);
  return buf;
}

Signal random_signal(const Lattice& lattice, Rng& rng) {
  std::vector<double> v(lattice.size());
  for (double& x : v) x = rng.uniform(-1.0, 1.0);
  return Signal(lattice, std::move(v));
}

double sum(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

SelfTestCheck gram_identity() {
  double worst = 0.0;
  for (std::size_t d : {4u, 8u, 64u, 256u}) {
    const Lattice lattice(d);
    worst = std::max(worst, max_abs_diff(gram_matrix(lattice), Matrix::identity(d)));
  }
  return {"gram matrix is identity", worst <= 1e-12, fmt("max_dev", worst)};
}

SelfTestCheck round_trip_and_parseval(Rng& rng) {
  const Lattice lattice(256);
  double worst = 0.0;
  double worst_parseval = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Signal f = random_signal(lattice, rng);
    const Spectrum c = dft_forward(f);
    const Signal back = dft_inverse(c);
    for (std::size_t t = 0; t < f.size(); ++t) worst = std::max(worst, std::abs(back[t] - f[t]));
    worst_parseval = std::max(worst_parseval, std::abs(c.norm() - f.norm()) / f.norm());
  }
  return {"dft round trip and parseval", worst <= 1e-10 && worst_parseval <= 1e-10,
          fmt("max_err", worst) + " " + fmt("parseval_rel", worst_parseval)};
}

SelfTestCheck dft_faithfulness() {
  const FaithfulnessResult r = faithfulness_check(EncodingKind::Dft, Lattice(256));
  return {"dft encoding is faithful", r.passed, fmt("max_dev", r.max_deviation)};
}

SelfTestCheck dft_encoder_orthonormal() {
  const EncodingMatrix enc = build_encoding_matrix(EncodingKind::Dft, PEConfig{64, 64, 1e4});
  const double dev = max_abs_diff(matmul_tn(enc.columns, enc.columns), Matrix::identity(64));
  return {"dft encoder columns orthonormal", dev <= 1e-10, fmt("max_dev", dev)};
}

SelfTestCheck distributions_normalized() {
  const PEConfig cfg{256, 80, 1e4};
  const FrequencyDistribution kde = kde_distribution(cfg, KdeConfig::from_multiplier(4, 256));
  const FrequencyDistribution flat = dft_distribution(cfg.lattice());
  const double e1 = std::abs(sum(kde.weights) - 1.0);
  const double e2 = std::abs(sum(flat.weights) - 1.0);
  bool interior_equal = true;
  for (std::size_t k = 1; k + 1 < flat.size(); ++k) interior_equal &= flat[k] == flat[1];
  return {"frequency distributions normalized", e1 <= 1e-12 && e2 <= 1e-12 && interior_equal,
          fmt("kde_sum_err", e1) + " " + fmt("dft_sum_err", e2)};
}

SelfTestCheck lowpass_equation() {
  double worst = 0.0;
  for (std::size_t d : {256u, 512u}) {
    const double l = lowpass_index(d, 1e4);
    const double target = 2.0 * std::numbers::pi / static_cast<double>(d);
    worst = std::max(worst, std::abs(std::pow(1e4, -l / static_cast<double>(d)) - target) / target);
  }
  return {"low-pass index solves its equation", worst <= 1e-12, fmt("rel_err", worst)};
}

SelfTestCheck reconstruction_identity(Rng& rng) {
  const Lattice lattice(256);
  const FrequencyDistribution uniform{std::vector<double>(129, 1.0 / 129.0), 1.0};
  double worst = 0.0;
  for (int i = 0; i < 5; ++i) {
    worst = std::max(worst, reconstruct(random_signal(lattice, rng), uniform).l2_error);
  }
  return {"uniform-weight reconstruction is identity", worst <= 1e-9, fmt("max_l2_err", worst)};
}

SelfTestCheck attention_rows(Rng& rng) {
  const AttentionHeadParams p = AttentionHeadParams::random(4, 4, rng);
  Matrix X(4, 6);
  for (double& v : X.data()) v = rng.uniform(-2.0, 2.0);
  const Matrix A = attend(X, p).A;
  double worst = 0.0;
  bool positive = true;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < A.cols(); ++j) {
      row += A(i, j);
      positive &= A(i, j) > 0.0;
    }
    worst = std::max(worst, std::abs(row - 1.0));
  }
  return {"attention rows are stochastic", positive && worst <= 1e-12, fmt("max_row_err", worst)};
}

SelfTestCheck metric_identities() {
  const std::pair<double, double> pr[] = {{0.977, 0.917}, {1.0, 0.943}, {0.822, 0.855},
                                          {0.979, 0.955}, {1.0, 0.961}, {0.894, 0.821}};
  const double f1[] = {0.946, 0.970, 0.838, 0.967, 0.980, 0.856};
  double worst = 0.0;
  for (std::size_t i = 0; i < 6; ++i) {
    worst = std::max(worst, std::abs(f1_score(pr[i].first, pr[i].second) - f1[i]));
  }
  const int labels[] = {1, 0, 1, 1, 0};
  const Metrics perfect = compute_metrics(labels, labels);
  const bool ok = worst <= 1e-3 && perfect.precision == 1.0 && perfect.recall == 1.0 &&
                  perfect.f1 == 1.0;
  return {"metric identities", ok, fmt("max_f1_err", worst)};
}

SelfTestCheck gradient_check(Rng& rng) {
  double worst = 0.0;
  for (int instance = 0; instance < 5; ++instance) {
    const std::size_t d = 4;
    const std::size_t S = 3 + rng.below(3);
    ClassifierParams params = ClassifierParams::random(d, d, 2, rng.below(1u << 30));
    std::vector<Matrix> xs(3, Matrix(d, S));
    for (auto& x : xs)
      for (double& v : x.data()) v = rng.uniform(-1.0, 1.0);
    const std::vector<int> ys = {1, 0, 1};
    const LossAndGradient analytic = batch_loss_and_gradient(params, xs, ys);
    ClassifierParams probe = params;
    const auto numeric = central_difference(
        [&](std::span<const double> flat) {
          probe.assign(flat);
          return batch_loss(probe, xs, ys);
        },
        params.flatten());
    worst = std::max(worst, max_relative_error(analytic.gradient, numeric));
  }
  return {"reverse-mode gradients match finite differences", worst <= 1e-4,
          fmt("max_rel_err", worst)};
}

}  // namespace

std::vector<SelfTestCheck> run_selftest() {
  Rng rng(0);
  std::vector<SelfTestCheck> checks;
  checks.push_back(gram_identity());
  checks.push_back(round_trip_and_parseval(rng));
  checks.push_back(dft_faithfulness());
  checks.push_back(dft_encoder_orthonormal());
  checks.push_back(distributions_normalized());
  checks.push_back(lowpass_equation());
  checks.push_back(reconstruction_identity(rng));
  checks.push_back(attention_rows(rng));
  checks.push_back(metric_identities());
  checks.push_back(gradient_check(rng));
  return checks;
}

}  // namespace dftpe

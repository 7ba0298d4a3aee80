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
#include <cstdint>
#include <span>
#include <vector>

#include "dftpe/attention.hpp"
#include "dftpe/encoders.hpp"
#include "dftpe/matrix.hpp"
#include "dftpe/metrics.hpp"

namespace dftpe {

/// Synthetic position-only classification task.
///
/// Each window is D x S Gaussian noise plus a spike of `amplitude` added to
/// every feature at one position. The label is 1 iff the spike sits inside
/// [band_begin, band_end). Labels alternate 0, 1, 0, ... so both classes are
/// balanced by construction; spike positions are drawn uniformly from the
/// band (positives) or its complement (negatives).
struct SyntheticTaskConfig {
  std::size_t S = 8;
  std::size_t D = 8;
  std::size_t band_begin = 2;
  std::size_t band_end = 6;
  double amplitude = 1.0;
  double noise = 0.1;
  std::size_t N = 400;
  std::uint64_t seed = 42;

  void validate() const;
};

struct Window {
  Matrix x;  // D x S
  int label = 0;
  std::size_t spike_position = 0;
};

std::vector<Window> generate_task(const SyntheticTaskConfig& config);

/// Attention classifier: inject PE, H-head attention, mean-pool over
/// positions, linear readout, sigmoid.
struct ModelConfig {
  std::size_t heads = 2;
  double learning_rate = 1.0;
  std::size_t epochs = 1000;
  double rho = 10000.0;
  double train_fraction = 0.5;
};

struct ClassifierParams {
  std::vector<AttentionHeadParams> heads;
  std::vector<double> readout;  // length d * H
  double bias = 0.0;

  // Head matrices uniform on [-1/sqrt(D), 1/sqrt(D)], readout uniform on
  // [-1/sqrt(d*H), 1/sqrt(d*H)], zero bias.
  static ClassifierParams random(std::size_t d, std::size_t D, std::size_t heads,
                                 std::uint64_t seed);

  std::size_t parameter_count() const;
  // Order: per head W_Q, W_K, W_V (row-major), then readout, then bias.
  std::vector<double> flatten() const;
  void assign(std::span<const double> flat);
};

// Logit for one window after positional injection.
double classifier_logit(const ClassifierParams& params, const Matrix& x);

struct LossAndGradient {
  double loss = 0.0;                // mean binary cross-entropy
  std::vector<double> gradient;     // same layout as ClassifierParams::flatten()
};

// Inputs already carry positional encodings.
double batch_loss(const ClassifierParams& params, std::span<const Matrix> inputs,
                  std::span<const int> labels);
LossAndGradient batch_loss_and_gradient(const ClassifierParams& params,
                                        std::span<const Matrix> inputs,
                                        std::span<const int> labels);

struct ComparisonResult {
  EncodingKind kind = EncodingKind::Dft;
  Metrics metrics;                 // on the held-out split
  std::vector<double> loss_curve;  // loss before each update, then the final loss
  bool non_convergent = false;     // final loss > initial loss
};

ComparisonResult train_and_evaluate(const SyntheticTaskConfig& task, const ModelConfig& model,
                                    EncodingKind kind);

std::vector<ComparisonResult> run_comparison(const SyntheticTaskConfig& task,
                                             const ModelConfig& model,
                                             std::span<const EncodingKind> kinds);

/// Fraction of positions s whose column has the largest inner product with
/// itself among all columns (ties go to the smallest index).
double position_decode_accuracy(const EncodingMatrix& enc);

}  // namespace dftpe

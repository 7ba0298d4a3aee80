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

#include "dftpe/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dftpe/errors.hpp"
#include "dftpe/rng.hpp"

namespace dftpe {

namespace {

constexpr std::uint64_t kInitSeedSalt = 0x9E3779B97F4A7C15ull;

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// -[y log sigmoid(z) + (1 - y) log(1 - sigmoid(z))]
double bce_with_logit(double z, int label) {
  const double y = label != 0 ? 1.0 : 0.0;
  return std::max(z, 0.0) - z * y + std::log1p(std::exp(-std::abs(z)));
}

void append(std::vector<double>& out, const Matrix& m) {
  out.insert(out.end(), m.data().begin(), m.data().end());
}

std::size_t take(std::span<const double> flat, std::size_t at, Matrix& m) {
  std::copy_n(flat.begin() + static_cast<std::ptrdiff_t>(at), m.size(), m.data().begin());
  return at + m.size();
}

void require_batch(const ClassifierParams& params, std::span<const Matrix> inputs,
                   std::span<const int> labels) {
  if (params.heads.empty()) throw ValidationError("classifier has no heads");
  if (inputs.empty() || inputs.size() != labels.size()) {
    throw ValidationError("batch inputs and labels must be nonempty and equally long");
  }
  const std::size_t pooled = params.heads.size() * params.heads.front().out_dim();
  if (params.readout.size() != pooled) {
    throw ValidationError("readout length does not match d * H");
  }
}

// Mean over columns of the stacked head outputs.
std::vector<double> mean_pool(const Matrix& Z) {
  std::vector<double> pooled(Z.rows(), 0.0);
  for (std::size_t r = 0; r < Z.rows(); ++r) {
    for (std::size_t s = 0; s < Z.cols(); ++s) pooled[r] += Z(r, s);
    pooled[r] /= static_cast<double>(Z.cols());
  }
  return pooled;
}

double readout(const ClassifierParams& params, std::span<const double> pooled) {
  double z = params.bias;
  for (std::size_t i = 0; i < pooled.size(); ++i) z += params.readout[i] * pooled[i];
  return z;
}

}  // namespace

void SyntheticTaskConfig::validate() const {
  if (S < 2) throw ValidationError("window length S must be >= 2");
  if (D < 1) throw ValidationError("feature dimension D must be >= 1");
  if (band_begin >= band_end || band_end > S) {
    throw ValidationError("anomaly band must be a nonempty interval within [0, S)");
  }
  if (band_end - band_begin == S) {
    throw ValidationError("anomaly band must leave room for negative positions");
  }
  if (N < 2) throw ValidationError("sample count N must be >= 2");
  if (!(noise >= 0.0) || !std::isfinite(noise)) {
    throw ValidationError("noise scale must be a finite value >= 0");
  }
  if (!std::isfinite(amplitude)) throw ValidationError("spike amplitude must be finite");
}

std::vector<Window> generate_task(const SyntheticTaskConfig& config) {
  config.validate();
  Rng rng(config.seed);
  const std::size_t band = config.band_end - config.band_begin;
  const std::size_t outside = config.S - band;
  std::vector<Window> windows;
  windows.reserve(config.N);
  for (std::size_t n = 0; n < config.N; ++n) {
    Window w{Matrix(config.D, config.S), static_cast<int>(n % 2), 0};
    for (double& v : w.x.data()) v = config.noise * rng.normal();
    if (w.label == 1) {
      w.spike_position = config.band_begin + rng.below(band);
    } else {
      const std::size_t k = rng.below(outside);
      w.spike_position = k < config.band_begin ? k : k + band;
    }
    for (std::size_t f = 0; f < config.D; ++f) w.x(f, w.spike_position) += config.amplitude;
    windows.push_back(std::move(w));
  }
  return windows;
}

ClassifierParams ClassifierParams::random(std::size_t d, std::size_t D, std::size_t heads,
                                          std::uint64_t seed) {
  Rng rng(seed);
  ClassifierParams p;
  for (std::size_t h = 0; h < heads; ++h) p.heads.push_back(AttentionHeadParams::random(d, D, rng));
  const double limit = 1.0 / std::sqrt(static_cast<double>(d * heads));
  p.readout.resize(d * heads);
  for (double& v : p.readout) v = rng.uniform(-limit, limit);
  return p;
}

std::size_t ClassifierParams::parameter_count() const {
  std::size_t n = readout.size() + 1;
  for (const auto& h : heads) n += h.wq.size() + h.wk.size() + h.wv.size();
  return n;
}

std::vector<double> ClassifierParams::flatten() const {
  std::vector<double> flat;
  flat.reserve(parameter_count());
  for (const auto& h : heads) {
    append(flat, h.wq);
    append(flat, h.wk);
    append(flat, h.wv);
  }
  flat.insert(flat.end(), readout.begin(), readout.end());
  flat.push_back(bias);
  return flat;
}

void ClassifierParams::assign(std::span<const double> flat) {
  if (flat.size() != parameter_count()) {
    throw ValidationError("parameter vector has " + std::to_string(flat.size()) +
                          " entries, expected " + std::to_string(parameter_count()));
  }
  std::size_t at = 0;
  for (auto& h : heads) {
    at = take(flat, at, h.wq);
    at = take(flat, at, h.wk);
    at = take(flat, at, h.wv);
  }
  std::copy_n(flat.begin() + static_cast<std::ptrdiff_t>(at), readout.size(), readout.begin());
  bias = flat.back();
}

double classifier_logit(const ClassifierParams& params, const Matrix& x) {
  const Matrix Z = multi_head(x, params.heads);
  return readout(params, mean_pool(Z));
}

double batch_loss(const ClassifierParams& params, std::span<const Matrix> inputs,
                  std::span<const int> labels) {
  require_batch(params, inputs, labels);
  double total = 0.0;
  for (std::size_t n = 0; n < inputs.size(); ++n) {
    total += bce_with_logit(classifier_logit(params, inputs[n]), labels[n]);
  }
  return total / static_cast<double>(inputs.size());
}

LossAndGradient batch_loss_and_gradient(const ClassifierParams& params,
                                        std::span<const Matrix> inputs,
                                        std::span<const int> labels) {
  require_batch(params, inputs, labels);
  const std::size_t H = params.heads.size();
  const std::size_t d = params.heads.front().out_dim();
  const double inv_n = 1.0 / static_cast<double>(inputs.size());

  std::vector<AttentionHead> heads;
  heads.reserve(H);
  for (const auto& p : params.heads) heads.emplace_back(p);

  std::vector<HeadGradients> acc(H);
  for (std::size_t h = 0; h < H; ++h) {
    const auto& p = params.heads[h];
    acc[h] = {Matrix(p.wq.rows(), p.wq.cols()), Matrix(p.wk.rows(), p.wk.cols()),
              Matrix(p.wv.rows(), p.wv.cols()), Matrix()};
  }
  std::vector<double> d_readout(params.readout.size(), 0.0);
  double d_bias = 0.0;
  double loss = 0.0;

  for (std::size_t n = 0; n < inputs.size(); ++n) {
    const Matrix& x = inputs[n];
    const std::size_t S = x.cols();
    std::vector<double> pooled(d * H, 0.0);
    for (std::size_t h = 0; h < H; ++h) {
      const Matrix& Z = heads[h].forward(x).Z;
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t s = 0; s < S; ++s) pooled[h * d + r] += Z(r, s);
        pooled[h * d + r] /= static_cast<double>(S);
      }
    }
    const double z = readout(params, pooled);
    loss += bce_with_logit(z, labels[n]) * inv_n;

    const double dz = (sigmoid(z) - (labels[n] != 0 ? 1.0 : 0.0)) * inv_n;
    d_bias += dz;
    for (std::size_t i = 0; i < pooled.size(); ++i) d_readout[i] += dz * pooled[i];
    for (std::size_t h = 0; h < H; ++h) {
      Matrix dZ(d, S);
      for (std::size_t r = 0; r < d; ++r) {
        const double g = dz * params.readout[h * d + r] / static_cast<double>(S);
        for (std::size_t s = 0; s < S; ++s) dZ(r, s) = g;
      }
      const HeadGradients g = heads[h].backward(dZ);
      acc[h].wq += g.wq;
      acc[h].wk += g.wk;
      acc[h].wv += g.wv;
    }
  }

  LossAndGradient out{loss, {}};
  out.gradient.reserve(params.parameter_count());
  for (const auto& g : acc) {
    append(out.gradient, g.wq);
    append(out.gradient, g.wk);
    append(out.gradient, g.wv);
  }
  out.gradient.insert(out.gradient.end(), d_readout.begin(), d_readout.end());
  out.gradient.push_back(d_bias);
  return out;
}

ComparisonResult train_and_evaluate(const SyntheticTaskConfig& task, const ModelConfig& model,
                                    EncodingKind kind) {
  task.validate();
  if (model.heads < 1) throw ValidationError("model needs at least one head");
  if (!(model.learning_rate > 0.0)) throw ValidationError("learning rate must be positive");
  if (!(model.train_fraction > 0.0 && model.train_fraction < 1.0)) {
    throw ValidationError("train fraction must lie in (0, 1)");
  }
  const std::size_t d = task.D;  // additive injection needs d = D
  if (d < 4 || d % 2 != 0) {
    throw ValidationError("feature dimension D must be even and >= 4 to carry a positional "
                          "encoding of the same size");
  }
  std::size_t n_train = static_cast<std::size_t>(
      std::lround(model.train_fraction * static_cast<double>(task.N)));
  n_train = std::clamp<std::size_t>(n_train, 1, task.N - 1);

  const EncodingMatrix enc = build_encoding_matrix(kind, PEConfig{d, task.S, model.rho});
  const std::vector<Window> windows = generate_task(task);
  std::vector<Matrix> train_x, test_x;
  std::vector<int> train_y, test_y;
  for (std::size_t n = 0; n < windows.size(); ++n) {
    auto& xs = n < n_train ? train_x : test_x;
    auto& ys = n < n_train ? train_y : test_y;
    xs.push_back(inject(windows[n].x, enc));
    ys.push_back(windows[n].label);
  }

  ClassifierParams params = ClassifierParams::random(d, task.D, model.heads,
                                                     task.seed ^ kInitSeedSalt);
  std::vector<double> flat = params.flatten();
  ComparisonResult result;
  result.kind = kind;
  result.loss_curve.reserve(model.epochs + 1);
  for (std::size_t epoch = 0; epoch < model.epochs; ++epoch) {
    const LossAndGradient lg = batch_loss_and_gradient(params, train_x, train_y);
    result.loss_curve.push_back(lg.loss);
    for (std::size_t i = 0; i < flat.size(); ++i) flat[i] -= model.learning_rate * lg.gradient[i];
    params.assign(flat);
  }
  result.loss_curve.push_back(batch_loss(params, train_x, train_y));
  result.non_convergent = result.loss_curve.back() > result.loss_curve.front();

  std::vector<int> predicted;
  predicted.reserve(test_x.size());
  for (const Matrix& x : test_x) predicted.push_back(classifier_logit(params, x) > 0.0 ? 1 : 0);
  result.metrics = compute_metrics(predicted, test_y);
  return result;
}

std::vector<ComparisonResult> run_comparison(const SyntheticTaskConfig& task,
                                             const ModelConfig& model,
                                             std::span<const EncodingKind> kinds) {
  std::vector<ComparisonResult> results;
  results.reserve(kinds.size());
  for (EncodingKind kind : kinds) results.push_back(train_and_evaluate(task, model, kind));
  return results;
}

double position_decode_accuracy(const EncodingMatrix& enc) {
  const std::size_t S = enc.columns.cols();
  if (S == 0) return 0.0;
  const Matrix gram = matmul_tn(enc.columns, enc.columns);
  std::size_t hits = 0;
  for (std::size_t s = 0; s < S; ++s) {
    std::size_t best = 0;
    for (std::size_t t = 1; t < S; ++t) {
      if (gram(s, t) > gram(s, best)) best = t;
    }
    if (best == s) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(S);
}

}  // namespace dftpe

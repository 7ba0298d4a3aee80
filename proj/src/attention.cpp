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

#include "dftpe/attention.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dftpe/errors.hpp"

namespace dftpe {

namespace {

void fill_uniform(Matrix& m, double limit, Rng& rng) {
  for (double& v : m.data()) v = rng.uniform(-limit, limit);
}

void require_input(const Matrix& X, const AttentionHeadParams& params) {
  params.validate();
  if (X.rows() != params.in_dim()) {
    throw ValidationError("input has " + std::to_string(X.rows()) +
                          " rows but projections expect " + std::to_string(params.in_dim()));
  }
  if (X.cols() == 0) throw ValidationError("input has no positions");
}

}  // namespace

void AttentionHeadParams::validate() const {
  const auto same = [this](const Matrix& m) {
    return m.rows() == wq.rows() && m.cols() == wq.cols();
  };
  if (wq.rows() == 0 || wq.cols() == 0 || !same(wk) || !same(wv)) {
    throw ValidationError("W_Q, W_K, W_V must share a nonempty d x D shape");
  }
  if (!all_finite(wq.data()) || !all_finite(wk.data()) || !all_finite(wv.data())) {
    throw ValidationError("projection matrices contain non-finite values");
  }
}

AttentionHeadParams AttentionHeadParams::random(std::size_t d, std::size_t D, Rng& rng) {
  const double limit = 1.0 / std::sqrt(static_cast<double>(D));
  AttentionHeadParams p{Matrix(d, D), Matrix(d, D), Matrix(d, D)};
  fill_uniform(p.wq, limit, rng);
  fill_uniform(p.wk, limit, rng);
  fill_uniform(p.wv, limit, rng);
  return p;
}

AttentionHeadParams AttentionHeadParams::random(std::size_t d, std::size_t D,
                                                std::uint64_t seed) {
  Rng rng(seed);
  return random(d, D, rng);
}

Matrix attention_scores(const Matrix& X, const AttentionHeadParams& params) {
  require_input(X, params);
  const Matrix Q = matmul(params.wq, X);
  const Matrix K = matmul(params.wk, X);
  return matmul_tn(Q, K) * (1.0 / std::sqrt(static_cast<double>(params.out_dim())));
}

Matrix softmax_rows(const Matrix& B) {
  Matrix A(B.rows(), B.cols());
  for (std::size_t i = 0; i < B.rows(); ++i) {
    double row_max = B(i, 0);
    for (std::size_t j = 1; j < B.cols(); ++j) row_max = std::max(row_max, B(i, j));
    double total = 0.0;
    for (std::size_t j = 0; j < B.cols(); ++j) {
      A(i, j) = std::exp(B(i, j) - row_max);
      total += A(i, j);
    }
    for (std::size_t j = 0; j < B.cols(); ++j) A(i, j) /= total;
  }
  return A;
}

Matrix softmax_rows_backward(const Matrix& A, const Matrix& dA) {
  if (A.rows() != dA.rows() || A.cols() != dA.cols()) {
    throw ValidationError("softmax_rows_backward: shape mismatch");
  }
  Matrix dB(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    double dot = 0.0;
    for (std::size_t j = 0; j < A.cols(); ++j) dot += A(i, j) * dA(i, j);
    for (std::size_t j = 0; j < A.cols(); ++j) dB(i, j) = A(i, j) * (dA(i, j) - dot);
  }
  return dB;
}

Matrix filter(const Matrix& V, const Matrix& A) {
  if (A.rows() != A.cols() || V.cols() != A.cols()) {
    throw ValidationError("filter: V is " + std::to_string(V.rows()) + "x" +
                          std::to_string(V.cols()) + ", A is " + std::to_string(A.rows()) +
                          "x" + std::to_string(A.cols()));
  }
  return matmul_nt(V, A);
}

AttentionOutput attend(const Matrix& X, const AttentionHeadParams& params) {
  Matrix A = softmax_rows(attention_scores(X, params));
  Matrix Z = filter(matmul(params.wv, X), A);
  return {std::move(A), std::move(Z)};
}

Matrix multi_head(const Matrix& X, std::span<const AttentionHeadParams> heads) {
  if (heads.empty()) throw ValidationError("multi_head needs at least one head");
  const std::size_t d = heads.front().out_dim();
  for (const auto& h : heads) {
    if (h.out_dim() != d || h.in_dim() != heads.front().in_dim()) {
      throw ValidationError("multi_head: heads have inconsistent shapes");
    }
  }
  Matrix out(d * heads.size(), X.cols());
  for (std::size_t h = 0; h < heads.size(); ++h) {
    const Matrix Z = attend(X, heads[h]).Z;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t s = 0; s < X.cols(); ++s) out(h * d + r, s) = Z(r, s);
  }
  return out;
}

AttentionHead::AttentionHead(AttentionHeadParams params) : params_(std::move(params)) {
  params_.validate();
}

const AttentionOutput& AttentionHead::forward(const Matrix& X) {
  require_input(X, params_);
  Tape tape;
  tape.X = X;
  tape.Q = matmul(params_.wq, X);
  tape.K = matmul(params_.wk, X);
  tape.V = matmul(params_.wv, X);
  const double scale = 1.0 / std::sqrt(static_cast<double>(params_.out_dim()));
  tape.out.A = softmax_rows(matmul_tn(tape.Q, tape.K) * scale);
  tape.out.Z = filter(tape.V, tape.out.A);
  tape_ = std::move(tape);
  return tape_->out;
}

HeadGradients AttentionHead::backward(const Matrix& dZ) const {
  if (!tape_) throw StateError("AttentionHead::backward called before forward");
  const Tape& t = *tape_;
  if (dZ.rows() != t.out.Z.rows() || dZ.cols() != t.out.Z.cols()) {
    throw ValidationError("backward: upstream gradient shape does not match Z");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(params_.out_dim()));

  // Z = V A^T
  const Matrix dV = matmul(dZ, t.out.A);
  const Matrix dA = matmul_tn(dZ, t.V);
  // B = Q^T K * scale
  const Matrix dB = softmax_rows_backward(t.out.A, dA);
  const Matrix dQ = matmul_nt(t.K, dB) * scale;
  const Matrix dK = matmul(t.Q, dB) * scale;

  HeadGradients g;
  g.wq = matmul_nt(dQ, t.X);
  g.wk = matmul_nt(dK, t.X);
  g.wv = matmul_nt(dV, t.X);
  g.x = matmul_tn(params_.wq, dQ);
  g.x += matmul_tn(params_.wk, dK);
  g.x += matmul_tn(params_.wv, dV);
  return g;
}

}  // namespace dftpe

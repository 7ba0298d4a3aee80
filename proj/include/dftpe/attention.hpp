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
#include <optional>
#include <span>
#include <vector>

#include "dftpe/matrix.hpp"
#include "dftpe/rng.hpp"

namespace dftpe {

/// Projection matrices of one attention head; each is d x D.
struct AttentionHeadParams {
  Matrix wq;
  Matrix wk;
  Matrix wv;

  std::size_t out_dim() const { return wq.rows(); }  // d
  std::size_t in_dim() const { return wq.cols(); }   // D

  // Throws ValidationError on inconsistent shapes or non-finite entries.
  void validate() const;

  // Entries uniform on [-1/sqrt(D), 1/sqrt(D)].
  static AttentionHeadParams random(std::size_t d, std::size_t D, Rng& rng);
  static AttentionHeadParams random(std::size_t d, std::size_t D, std::uint64_t seed);
};

struct AttentionOutput {
  Matrix A;  // S x S, row-stochastic
  Matrix Z;  // d x S
};

// B = Q^T K / sqrt(d) with Q = W_Q X, K = W_K X.
Matrix attention_scores(const Matrix& X, const AttentionHeadParams& params);

// Row-wise softmax with max subtraction.
Matrix softmax_rows(const Matrix& B);

// Vector-Jacobian product of softmax_rows: given A = softmax_rows(B) and
// dL/dA, returns dL/dB.
Matrix softmax_rows_backward(const Matrix& A, const Matrix& dA);

// Z = V A^T.
Matrix filter(const Matrix& V, const Matrix& A);

AttentionOutput attend(const Matrix& X, const AttentionHeadParams& params);

// Per-head outputs stacked vertically in head order: (d*H) x S.
Matrix multi_head(const Matrix& X, std::span<const AttentionHeadParams> heads);

struct HeadGradients {
  Matrix wq;
  Matrix wk;
  Matrix wv;
  Matrix x;
};

/// One head that records its forward pass for reverse-mode differentiation.
/// Not thread-safe; use one instance per execution context.
class AttentionHead {
 public:
  explicit AttentionHead(AttentionHeadParams params);

  const AttentionHeadParams& params() const { return params_; }

  const AttentionOutput& forward(const Matrix& X);
  // Gradients of a scalar loss given dL/dZ for the last forward().
  // Throws StateError when no forward pass was recorded.
  HeadGradients backward(const Matrix& dZ) const;

 private:
  struct Tape {
    Matrix X, Q, K, V;
    AttentionOutput out;
  };

  AttentionHeadParams params_;
  std::optional<Tape> tape_;
};

}  // namespace dftpe

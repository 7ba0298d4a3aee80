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

namespace dftpe {

/// Binary confusion counts and derived scores.
///
/// A ratio whose denominator is zero is reported as 0 and flagged.
struct Metrics {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  bool precision_undefined = false;
  bool recall_undefined = false;
  bool f1_undefined = false;

  std::size_t total() const { return tp + fp + fn + tn; }
  double accuracy() const;
};

// Harmonic mean; 0 when precision + recall == 0.
double f1_score(double precision, double recall);

// Labels are 0/1; any nonzero value counts as positive. Throws
// ValidationError for empty or unequal-length inputs.
Metrics compute_metrics(std::span<const int> predicted, std::span<const int> truth);

}  // namespace dftpe

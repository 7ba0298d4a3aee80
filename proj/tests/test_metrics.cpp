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

#include "dftpe/errors.hpp"
#include "dftpe/metrics.hpp"

using namespace dftpe;

TEST_CASE("confusion counts and ratios") {
  const int pred[] = {1, 1, 0, 0, 1, 0};
  const int truth[] = {1, 0, 1, 0, 1, 0};
  const Metrics m = compute_metrics(pred, truth);
  CHECK(m.tp == 2);
  CHECK(m.fp == 1);
  CHECK(m.fn == 1);
  CHECK(m.tn == 2);
  CHECK(m.precision == doctest::Approx(2.0 / 3.0));
  CHECK(m.recall == doctest::Approx(2.0 / 3.0));
  CHECK(m.f1 == doctest::Approx(2.0 / 3.0));
  CHECK(m.accuracy() == doctest::Approx(4.0 / 6.0));
}

TEST_CASE("all predictions correct") {
  const int labels[] = {0, 1, 1, 0, 1};
  const Metrics m = compute_metrics(labels, labels);
  CHECK(m.precision == 1.0);
  CHECK(m.recall == 1.0);
  CHECK(m.f1 == 1.0);
  CHECK_FALSE(m.precision_undefined);
}

TEST_CASE("published precision/recall pairs give the published F1") {
  struct Row {
    double p, r, f1;
  };
  const Row rows[] = {{0.977, 0.917, 0.946}, {1.0, 0.943, 0.970}, {0.822, 0.855, 0.838},
                      {0.979, 0.955, 0.967}, {1.0, 0.961, 0.980}, {0.894, 0.821, 0.856}};
  for (const Row& row : rows) {
    CAPTURE(row.p);
    CAPTURE(row.r);
    CHECK(std::abs(f1_score(row.p, row.r) - row.f1) <= 1e-3);
  }
}

TEST_CASE("zero denominators are flagged and reported as 0") {
  const int none[] = {0, 0, 0};
  const int some[] = {1, 0, 0};
  const Metrics no_pred = compute_metrics(none, some);
  CHECK(no_pred.precision_undefined);
  CHECK(no_pred.precision == 0.0);
  CHECK(no_pred.recall == 0.0);
  CHECK(no_pred.f1 == 0.0);
  CHECK(no_pred.f1_undefined);

  const Metrics no_pos = compute_metrics(none, none);
  CHECK(no_pos.precision_undefined);
  CHECK(no_pos.recall_undefined);
  CHECK(no_pos.accuracy() == 1.0);
}

TEST_CASE("invalid inputs") {
  const int a[] = {1, 0};
  const int b[] = {1};
  CHECK_THROWS_AS(compute_metrics(std::span<const int>{}, std::span<const int>{}),
                  ValidationError);
  CHECK_THROWS_AS(compute_metrics(a, b), ValidationError);
}

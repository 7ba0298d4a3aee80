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

// Reference computations used by the tests. Everything here is written
// from the closed-form definitions, in long double where it matters, and
// does not call into the library's numerical code paths.

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;  // row-major

// phi_l(t) straight from the piecewise definition.
inline long double basis(std::size_t l, std::size_t t, std::size_t d) {
  const long double pi = std::numbers::pi_v<long double>;
  const long double dd = static_cast<long double>(d);
  const std::size_t K = d / 2 - 1;
  if (l == 0) return 1.0L / std::sqrt(dd);
  if (l == d - 1) return std::cos(pi * static_cast<long double>(t)) / std::sqrt(dd);
  if (l <= K) {
    return std::sqrt(2.0L / dd) * std::cos(2.0L * pi * l * static_cast<long double>(t) / dd);
  }
  return std::sqrt(2.0L / dd) * std::sin(2.0L * pi * (l - K) * static_cast<long double>(t) / dd);
}

inline Vec forward(const Vec& f) {
  const std::size_t d = f.size();
  Vec c(d);
  for (std::size_t l = 0; l < d; ++l) {
    long double acc = 0.0L;
    for (std::size_t t = 0; t < d; ++t) acc += f[t] * basis(l, t, d);
    c[l] = static_cast<double>(acc);
  }
  return c;
}

inline Vec inverse(const Vec& c) {
  const std::size_t d = c.size();
  Vec f(d);
  for (std::size_t t = 0; t < d; ++t) {
    long double acc = 0.0L;
    for (std::size_t l = 0; l < d; ++l) acc += c[l] * basis(l, t, d);
    f[t] = static_cast<double>(acc);
  }
  return f;
}

inline Vec one_hot(std::size_t d, std::size_t s) {
  Vec v(d, 0.0);
  v[s] = 1.0;
  return v;
}

// Gaussian KDE of rho^(-l/d), l even, on omega_k = 2*pi*k/d, k = 0..d/2.
inline Vec kde(std::size_t d, double rho, double sigma) {
  const long double pi = std::numbers::pi_v<long double>;
  Vec g(d / 2 + 1);
  long double total = 0.0L;
  std::vector<long double> raw(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    const long double omega = 2.0L * pi * k / d;
    for (std::size_t l = 0; l < d; l += 2) {
      const long double w = std::pow(static_cast<long double>(rho), -static_cast<long double>(l) / d);
      raw[k] += std::exp(-(omega - w) * (omega - w) / (2.0L * sigma * sigma));
    }
    total += raw[k];
  }
  for (std::size_t k = 0; k < g.size(); ++k) g[k] = static_cast<double>(raw[k] / total);
  return g;
}

// Number of even l with rho^(-l/d) < threshold, by enumeration.
inline std::size_t count_below(std::size_t d, double rho, double threshold) {
  std::size_t n = 0;
  for (std::size_t l = 0; l < d; l += 2) {
    if (std::pow(rho, -static_cast<double>(l) / static_cast<double>(d)) < threshold) ++n;
  }
  return n;
}

// Central differences of f around x.
inline Vec finite_difference(const std::function<double(const Vec&)>& f, Vec x,
                             double step = 1e-5) {
  Vec g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double saved = x[i];
    x[i] = saved + step;
    const double up = f(x);
    x[i] = saved - step;
    const double down = f(x);
    x[i] = saved;
    g[i] = (up - down) / (2.0 * step);
  }
  return g;
}

inline double max_abs(const Vec& a, const Vec& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace oracle

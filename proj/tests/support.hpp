// Copyright 2026 The qinv authors
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
//
// Shared test helpers: random CPTP channels, random canonical channels, and
// small comparison utilities. Test-only; the library never includes this.

#ifndef QINV_TESTS_SUPPORT_HPP
#define QINV_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "qinv/channel.hpp"

namespace qinv::testing {

inline Complex<double> random_complex(std::mt19937_64& rng) {
  return {standard_normal(rng), standard_normal(rng)};
}

inline Mat2<double> random_mat2(std::mt19937_64& rng) {
  Mat2<double> m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = random_complex(rng);
  return m;
}

/// Random CPTP channel with n Kraus operators: Gaussian G_i whitened by
/// T^{-1/2} with T = sum G_i^dag G_i, so that sum K_i^dag K_i = 1 exactly.
inline QubitChannel<double> random_channel(std::mt19937_64& rng, int n_kraus) {
  const std::size_t count = std::size_t(n_kraus);
  std::vector<Mat2<double>> g(count);
  Mat2<double> t = Mat2<double>::Zero();
  for (auto& gi : g) {
    gi = random_mat2(rng);
    t += gi.adjoint() * gi;
  }
  Eigen::SelfAdjointEigenSolver<Mat2<double>> es(t);
  const Mat2<double> whiten = es.operatorInverseSqrt();
  std::vector<Mat2<double>> kraus;
  kraus.reserve(g.size());
  for (const auto& gi : g) kraus.push_back(gi * whiten);
  return from_kraus(kraus);
}

inline QubitChannel<double> random_channel(std::mt19937_64& rng) {
  const int n = 1 + int(rng() % 4);
  return random_channel(rng, n);
}

/// Lambda vector uniformly distributed over the CP tetrahedron (image of the
/// uniform probability simplex under the Pauli parameterization).
inline Vec3<double> random_tetrahedron_lambda(std::mt19937_64& rng) {
  double p[4], total = 0;
  for (double& pi : p) {
    double u = uniform01(rng);
    while (u <= 0) u = uniform01(rng);
    pi = -std::log(u);
    total += pi;
  }
  for (double& pi : p) pi /= total;
  return {p[0] + p[1] - p[2] - p[3], p[0] - p[1] + p[2] - p[3],
          p[0] - p[1] - p[2] + p[3]};
}

inline double max_abs_diff(const Mat3<double>& a, const Mat3<double>& b) {
  return (a - b).lpNorm<Eigen::Infinity>();
}

inline double max_abs_diff(const Mat2<double>& a, const Mat2<double>& b) {
  return (a - b).lpNorm<Eigen::Infinity>();
}

}  // namespace qinv::testing

#endif  // QINV_TESTS_SUPPORT_HPP

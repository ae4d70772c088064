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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qinv/fidelity.hpp"
#include "support.hpp"

using namespace qinv;

namespace {

QubitChannel<double> identity_channel() {
  return from_kraus<double>({pauli_decompose<double>(sigma<double>(0))});
}

double ad_closed_form(double gamma) {
  return 0.5 + gamma / 3.0 + gamma * gamma / 6.0;
}

}  // namespace

TEST_CASE("avg_fidelity closed forms on known channels") {
  CHECK(avg_fidelity(identity_channel()) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(avg_fidelity(make_pauli(0.1, 0.6, 0.2, 0.1)) ==
        doctest::Approx(0.4).epsilon(1e-14));
  CHECK(avg_fidelity(make_amplitude_damping(-0.5)) ==
        doctest::Approx(0.375).epsilon(1e-14));
  for (const double gamma : {-0.8, -0.3, 0.2, 0.6, 0.95}) {
    CHECK(avg_fidelity(make_amplitude_damping(gamma)) ==
          doctest::Approx(ad_closed_form(gamma)).epsilon(1e-13));
    CHECK(avg_fidelity(make_amplitude_damping(gamma, true)) ==
          doctest::Approx(0.5 + gamma * gamma / 6.0).epsilon(1e-13));
  }
}

TEST_CASE("b_matrix instances") {
  CHECK(b_matrix(identity_channel()).norm() == 0.0);

  Mat3<double> expected = Mat3<double>::Zero();
  expected.diagonal() << 0.6, 0.2, 0.1;
  CHECK(testing::max_abs_diff(b_matrix(make_pauli(0.1, 0.6, 0.2, 0.1)), expected) < 1e-15);

  CHECK(b_matrix(make_tetrahedron_slice(0.3, 0.1))(0, 1) ==
        doctest::Approx(2.0 * (0.3 - 0.1) / 3.0).epsilon(1e-14));

  auto rng = make_stream(401, 0);
  for (int i = 0; i < 200; ++i) {
    const Mat3<double> b = b_matrix(testing::random_channel(rng));
    CHECK((b - b.transpose()).norm() < 1e-15);
    Eigen::SelfAdjointEigenSolver<Mat3<double>> es(b);
    CHECK(es.eigenvalues().minCoeff() > -1e-12);
  }
}

TEST_CASE("composed_avg_fidelity from affine maps") {
  const auto pauli = make_pauli(0.1, 0.6, 0.2, 0.1);
  AffineMap<double> identity_map;
  CHECK(composed_avg_fidelity(identity_map, pauli.affine) ==
        doctest::Approx(avg_fidelity(pauli)).epsilon(1e-15));

  AffineMap<double> sx;
  sx.M.diagonal() << 1.0, -1.0, -1.0;
  CHECK(composed_avg_fidelity(sx, pauli.affine) ==
        doctest::Approx(0.5 * (1.0 + 1.4 / 3.0)).epsilon(1e-14));

  AffineMap<double> edge;
  edge.M.diagonal() << 0.0, 0.0, -1.0;
  CHECK(composed_avg_fidelity(sx, edge) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));

  auto rng = make_stream(402, 0);
  for (int i = 0; i < 100; ++i) {
    const auto a = testing::random_channel(rng).affine;
    const auto b = testing::random_channel(rng).affine;
    CHECK(composed_avg_fidelity(a, b) ==
          doctest::Approx(composed_avg_fidelity(b, a)).epsilon(1e-14));
  }
}

TEST_CASE("all closed-form routes agree on random channels") {
  auto rng = make_stream(403, 0);
  for (int i = 0; i < 1000; ++i) {
    const auto ch = testing::random_channel(rng);
    const double aa = kraus_sum_aa(ch);
    const double bb = kraus_sum_bb(ch);
    const double f = avg_fidelity(ch);  // throws if its internal routes split
    CHECK(std::abs(f - (aa + bb / 3.0)) < 1e-10);
    CHECK(std::abs(f - (1.0 + 2.0 * aa) / 3.0) < 1e-10);
    CHECK(std::abs(f - (1.0 - 2.0 / 3.0 * b_matrix(ch).trace())) < 1e-10);
    CHECK(std::abs(f - 0.5 * (1.0 + ch.affine.M.trace() / 3.0)) < 1e-10);
  }
}

TEST_CASE("Bloch integrand equals the 2x2 integrand") {
  auto rng = make_stream(404, 0);
  for (int i = 0; i < 500; ++i) {
    const auto ch = testing::random_channel(rng);
    const auto n = haar_bloch_sample(rng);
    CHECK(std::abs(fidelity_integrand(ch, n) - fidelity_integrand_density(ch, n)) < 1e-12);
  }
}

TEST_CASE("left and right composition with a unitary give the same fidelity") {
  auto rng = make_stream(405, 0);
  for (int i = 0; i < 1000; ++i) {
    const auto ch = testing::random_channel(rng);
    const auto vch = make_unitary_channel(haar_unitary_sample(rng));
    CHECK(std::abs(avg_fidelity(compose(vch, ch)) - avg_fidelity(compose(ch, vch))) < 1e-12);
  }
}

TEST_CASE("conjugation U . E . U^-1 preserves the average fidelity") {
  auto rng = make_stream(406, 0);
  for (int i = 0; i < 1000; ++i) {
    const auto ch = testing::random_channel(rng);
    const auto u = haar_unitary_sample(rng);
    const auto uch = make_unitary_channel(u);
    const auto uinv = make_unitary_channel(
        UnitaryRotation<double>{u.x0, Vec3<double>(-u.x)});
    const auto conjugated = compose(uch, compose(ch, uinv));
    CHECK(std::abs(avg_fidelity(conjugated) - avg_fidelity(ch)) < 1e-12);
  }
}

TEST_CASE("fidelity is linear in channel mixtures") {
  auto rng = make_stream(407, 0);
  for (int i = 0; i < 300; ++i) {
    const auto e1 = testing::random_channel(rng);
    const auto e2 = testing::random_channel(rng);
    const double lambda = uniform01(rng);
    const auto mixed = mix(lambda, e1, e2);
    CHECK(std::abs(avg_fidelity(mixed) -
                   (lambda * avg_fidelity(e1) + (1 - lambda) * avg_fidelity(e2))) < 1e-12);
  }
}

TEST_CASE("mc_avg_fidelity is exact on the identity channel") {
  const auto est = mc_avg_fidelity(identity_channel(), 10000, 1);
  CHECK(std::abs(est.mean - 1.0) < 1e-12);
  CHECK(est.std_error < 1e-12);
}

TEST_CASE("mc_avg_fidelity agrees with the closed form within 4 sigma") {
  struct Case {
    QubitChannel<double> ch;
    double expected;
  };
  const Case cases[] = {
      {make_pauli(0.1, 0.6, 0.2, 0.1), 0.4},
      {make_amplitude_damping(-0.5), 0.375},
      {make_amplitude_damping(0.6, true), 0.56},
      {make_mixed_rotation(1.0 / 3.0, 2.0 * M_PI / 3.0),
       avg_fidelity(make_mixed_rotation(1.0 / 3.0, 2.0 * M_PI / 3.0))},
      {make_tetrahedron_slice(0.3, 0.1), 1.0 - 4.0 / 3.0 * (0.3 + 0.1)},
  };
  for (const auto& c : cases) {
    const auto est = mc_avg_fidelity(c.ch, 100000, 20260209);
    // The 1e-12 floor matters only for channels with a constant integrand
    // (the mixed-rotation point has a purely antisymmetric M).
    CHECK(std::abs(est.mean - c.expected) < 4.0 * est.std_error + 1e-12);
    CHECK(est.samples == 100000);
  }
}

TEST_CASE("mc_avg_fidelity is deterministic per seed") {
  const auto ch = make_amplitude_damping(0.3);
  const auto a = mc_avg_fidelity(ch, 5000, 99);
  const auto b = mc_avg_fidelity(ch, 5000, 99);
  const auto c = mc_avg_fidelity(ch, 5000, 100);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  CHECK(a.mean != c.mean);

  CHECK_THROWS_AS(mc_avg_fidelity(ch, 50, 1), invalid_input_error);
}

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
// Optimal unitary correction of a qubit channel. The gain of a correction
// V = x0 + i x.sigma is the quadratic form (2/3) (x^T Bhat x + x0 v.x); its
// maximum over the unit 3-sphere is the top eigenpair of the symmetric 4x4
// matrix Q = [[0, v^T/2], [v/2, Bhat]]. Alongside the eigensolver route live
// a vertex-comparison method for diagonal channels, a randomized brute-force
// search and a random-mixture probe, used as independent oracles.

#ifndef QINV_QUASI_INVERSE_HPP
#define QINV_QUASI_INVERSE_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qinv/fidelity.hpp"

namespace qinv {

/// The quadratic form of the fidelity gain: Q = [[0, v^T/2], [v/2, Bhat]]
/// with Bhat = B - 1 + Tr(B) = (S - Tr(M))/2.
template <typename Scalar = double>
struct QForm {
  Mat4<Scalar> Q = Mat4<Scalar>::Zero();
  Mat3<Scalar> b_hat = Mat3<Scalar>::Zero();
  Vec3<Scalar> v = Vec3<Scalar>::Zero();
};

template <typename Scalar = double>
struct SymEigen4 {
  Vec4<Scalar> values = Vec4<Scalar>::Zero();   // descending
  Mat4<Scalar> vectors = Mat4<Scalar>::Zero();  // orthonormal columns
};

template <typename Scalar = double>
struct QuasiInverseResult {
  UnitaryRotation<Scalar> v_opt;
  Scalar lambda_max{};
  Scalar delta_f{};
  Scalar f_before{};
  Scalar f_after{};
  bool degenerate = false;
  Scalar gap{};  // relative gap between the top two eigenvalues
};

template <typename Scalar = double>
struct BruteForceResult {
  UnitaryRotation<Scalar> best;
  Scalar delta_f{};
};

namespace detail {

template <typename Scalar>
Mat4<Scalar> assemble_q(const Mat3<Scalar>& b_hat, const Vec3<Scalar>& v) {
  Mat4<Scalar> q = Mat4<Scalar>::Zero();
  for (int i = 0; i < 3; ++i) {
    q(0, i + 1) = v[i] / Scalar(2);
    q(i + 1, 0) = v[i] / Scalar(2);
  }
  q.template block<3, 3>(1, 1) =
      (b_hat + b_hat.transpose()) / Scalar(2);  // symmetric to the last bit
  return q;
}

}  // namespace detail

/// Builds Q along both routes -- Kraus moments (B, v) and affine data
/// (Bhat = (S - Tr M)/2, v from the antisymmetric part) -- and insists they
/// agree to algebra_tol.
template <typename Scalar>
QForm<Scalar> q_form(const QubitChannel<Scalar>& ch) {
  // Kraus route.
  const Mat3<Scalar> b = kraus_b_matrix(ch);
  QForm<Scalar> out;
  out.b_hat = b + (b.trace() - Scalar(1)) * Mat3<Scalar>::Identity();
  out.v = kraus_v_vector(ch);
  out.Q = detail::assemble_q(out.b_hat, out.v);

  // Affine route.
  const Mat3<Scalar>& m = ch.affine.M;
  const Mat3<Scalar> s = (m + m.transpose()) / Scalar(2);
  const Mat3<Scalar> a = (m - m.transpose()) / Scalar(2);
  const Mat3<Scalar> b_hat_affine =
      (s - m.trace() * Mat3<Scalar>::Identity()) / Scalar(2);
  const Vec3<Scalar> v_affine(a(2, 1), a(0, 2), a(1, 0));
  const Mat4<Scalar> q_affine = detail::assemble_q(b_hat_affine, v_affine);

  const Scalar diff = (out.Q - q_affine).template lpNorm<Eigen::Infinity>();
  if (diff > Scalar(algebra_tol))
    throw consistency_error("q_form: Kraus and affine routes disagree by " +
                            detail::fmt_residual(double(diff)));
  return out;
}

/// Fidelity gain (2/3)(x^T Bhat x + x0 v.x) of a specific correction V.
template <typename Scalar>
Scalar delta_f_of_unitary(const QForm<Scalar>& qf, const UnitaryRotation<Scalar>& v) {
  return Scalar(2) / Scalar(3) *
         (v.x.dot(qf.b_hat * v.x) + v.x0 * qf.v.dot(v.x));
}

/// Eigendecomposition of a symmetric 4x4 matrix, eigenvalues descending.
template <typename Scalar>
SymEigen4<Scalar> sym_eigen4(const Mat4<Scalar>& q) {
  if ((q - q.transpose()).template lpNorm<Eigen::Infinity>() > Scalar(algebra_tol))
    throw invalid_input_error("sym_eigen4: matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Mat4<Scalar>> solver(q);
  SymEigen4<Scalar> out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

/// The optimal unitary correction, its fidelity gain (2/3) Max(lambda_max, 0)
/// and a degeneracy report. The corrected fidelity is re-derived from the
/// composed affine maps as an internal cross-check.
template <typename Scalar>
QuasiInverseResult<Scalar> quasi_inverse(const QubitChannel<Scalar>& ch,
                                         Scalar degeneracy_tol = Scalar(1e-9)) {
  const QForm<Scalar> qf = q_form(ch);
  const SymEigen4<Scalar> eig = sym_eigen4(qf.Q);

  QuasiInverseResult<Scalar> res;
  res.lambda_max = eig.values[0];
  res.gap = (eig.values[0] - eig.values[1]) /
            std::max(std::abs(eig.values[0]), Scalar(1e-12));
  res.degenerate = res.gap < degeneracy_tol;
  res.f_before = avg_fidelity(ch);
  if (res.lambda_max <= Scalar(algebra_tol)) {
    res.v_opt = identity_rotation<Scalar>();
    res.delta_f = Scalar(0);
  } else {
    const Vec4<Scalar> top = eig.vectors.col(0);
    res.v_opt = make_unitary_rotation(top[0], Vec3<Scalar>(top.template tail<3>()));
    res.delta_f = Scalar(2) / Scalar(3) * res.lambda_max;
  }
  res.f_after = res.f_before + res.delta_f;

  AffineMap<Scalar> correction;
  correction.M = rotation_of_unitary(res.v_opt);
  const Scalar f_composed = composed_avg_fidelity(correction, ch.affine);
  if (std::abs(f_composed - res.f_after) > Scalar(1e-10))
    throw consistency_error(
        "quasi_inverse: composed-fidelity check failed by " +
        detail::fmt_residual(double(std::abs(f_composed - res.f_after))));
  return res;
}

/// Quasi-inverse of the diagonal channel diag(l1,l2,l3) by comparing the
/// four vertex scores l1+l2+l3, l1-l2-l3, l2-l1-l3, l3-l1-l2; the winner
/// picks identity, sigma_1, sigma_2 or sigma_3. Must match quasi_inverse on
/// the same channel.
template <typename Scalar>
QuasiInverseResult<Scalar> geometric_quasi_inverse(Scalar l1, Scalar l2, Scalar l3,
                                                   Scalar degeneracy_tol = Scalar(1e-9)) {
  const auto weights = diagonal_pauli_weights<Scalar>({l1, l2, l3});
  for (const Scalar w : weights)
    if (w < -Scalar(validation_tol))
      throw validation_error(
          "geometric_quasi_inverse: lambda vector outside the tetrahedron");

  const Vec4<Scalar> scores(l1 + l2 + l3, l1 - l2 - l3, l2 - l1 - l3, l3 - l1 - l2);
  int winner = 0;
  for (int i = 1; i < 4; ++i)
    if (scores[i] > scores[winner]) winner = i;

  // Q's spectrum for a diagonal channel is {0, (scores_i - scores_0)/4}.
  Vec4<Scalar> eigs;
  eigs[0] = Scalar(0);
  for (int i = 1; i < 4; ++i) eigs[i] = (scores[i] - scores[0]) / Scalar(4);
  std::sort(eigs.data(), eigs.data() + 4, std::greater<Scalar>());

  QuasiInverseResult<Scalar> res;
  res.lambda_max = eigs[0];
  res.gap = (eigs[0] - eigs[1]) / std::max(std::abs(eigs[0]), Scalar(1e-12));
  res.degenerate = res.gap < degeneracy_tol;
  res.delta_f = Scalar(2) / Scalar(3) * std::max(res.lambda_max, Scalar(0));
  res.f_before = (Scalar(1) + scores[0] / Scalar(3)) / Scalar(2);
  res.f_after = res.f_before + res.delta_f;
  res.v_opt = (winner == 0 || res.lambda_max <= Scalar(algebra_tol))
                  ? identity_rotation<Scalar>()
                  : pi_rotation(Vec3<Scalar>(Vec3<Scalar>::Unit(winner - 1)));
  return res;
}

/// Randomized search for the best unitary: uniform S^3 candidates in
/// deterministically seeded blocks, then per-coordinate pattern refinement
/// with golden-ratio step shrinking. Evaluates the gain directly through the
/// quadratic form, never through the eigensolver it is used to check.
template <typename Scalar>
BruteForceResult<Scalar> brute_force_best_unitary(const QubitChannel<Scalar>& ch,
                                                  std::int64_t samples,
                                                  int refine_steps,
                                                  std::uint64_t seed) {
  if (samples < 1000)
    throw invalid_input_error("brute_force_best_unitary: need at least 1000 samples");
  const QForm<Scalar> qf = q_form(ch);
  const auto value_of = [&qf](const Vec4<Scalar>& q) {
    const Vec3<Scalar> x = q.template tail<3>();
    return x.dot(qf.b_hat * x) + q[0] * qf.v.dot(x);
  };

  // Identity is always admissible (gain 0), so seed the search with it.
  Vec4<Scalar> best(Scalar(1), Scalar(0), Scalar(0), Scalar(0));
  Scalar best_value = Scalar(0);
  const auto consider = [&](const Vec4<Scalar>& q) {
    const Scalar val = value_of(q);
    if (val > best_value ||
        (val == best_value &&
         std::lexicographical_compare(q.data(), q.data() + 4, best.data(), best.data() + 4))) {
      best = q;
      best_value = val;
    }
  };

  constexpr std::int64_t block_size = 8192;
  for (std::int64_t block = 0, done = 0; done < samples; ++block) {
    auto rng = make_stream(seed, std::uint64_t(block));
    const std::int64_t m = std::min(block_size, samples - done);
    for (std::int64_t i = 0; i < m; ++i) {
      Vec4<Scalar> q;
      for (int c = 0; c < 4; ++c) q[c] = standard_normal<Scalar>(rng);
      const Scalar norm = q.norm();
      if (norm < Scalar(1e-12)) continue;
      consider(Vec4<Scalar>(q / norm));
    }
    done += m;
  }

  Scalar step = Scalar(0.1);
  constexpr Scalar shrink = Scalar(0.6180339887498949);
  for (int round = 0; round < refine_steps && step > Scalar(1e-10); ++round) {
    bool improved = false;
    for (int c = 0; c < 4; ++c) {
      for (const Scalar sgn : {Scalar(1), Scalar(-1)}) {
        Vec4<Scalar> trial = best;
        trial[c] += sgn * step;
        trial.normalize();
        const Scalar val = value_of(trial);
        if (val > best_value) {
          best = trial;
          best_value = val;
          improved = true;
        }
      }
    }
    if (!improved) step *= shrink;
  }

  BruteForceResult<Scalar> out;
  out.best = make_unitary_rotation(best[0], Vec3<Scalar>(best.template tail<3>()));
  out.delta_f = Scalar(2) / Scalar(3) * std::max(best_value, Scalar(0));
  return out;
}

/// Fidelity gain of the random-unitary mixture sum_i w_i V_i . V_i^dag,
/// evaluated through the composed affine maps.
template <typename Scalar>
Scalar mixture_delta_f(const QubitChannel<Scalar>& ch,
                       const std::vector<Scalar>& weights,
                       const std::vector<UnitaryRotation<Scalar>>& unitaries) {
  if (weights.size() != unitaries.size() || weights.empty())
    throw invalid_input_error("mixture_delta_f: weights/unitaries size mismatch");
  AffineMap<Scalar> mixture;
  mixture.M = Mat3<Scalar>::Zero();
  for (std::size_t i = 0; i < weights.size(); ++i)
    mixture.M += weights[i] * rotation_of_unitary(unitaries[i]);
  return composed_avg_fidelity(mixture, ch.affine) - avg_fidelity(ch);
}

/// Falsification probe for the unitarity of the optimum: the best gain over
/// randomly sampled convex mixtures of Haar unitaries (Dirichlet-uniform
/// weights). Must never exceed the unitary optimum.
template <typename Scalar>
Scalar best_unital_mixture(const QubitChannel<Scalar>& ch, int mixture_size,
                           std::int64_t samples, std::uint64_t seed) {
  if (mixture_size < 2)
    throw invalid_input_error("best_unital_mixture: mixture size must be >= 2");
  Scalar best = Scalar(0);  // the trivial mixture {identity} gains nothing
  for (std::int64_t s = 0; s < samples; ++s) {
    auto rng = make_stream(seed, std::uint64_t(s));
    const std::size_t count = std::size_t(mixture_size);
    std::vector<Scalar> weights(count);
    Scalar total{};
    for (Scalar& w : weights) {
      Scalar u = uniform01<Scalar>(rng);
      while (u <= Scalar(0)) u = uniform01<Scalar>(rng);
      w = -std::log(u);
      total += w;
    }
    for (Scalar& w : weights) w /= total;
    std::vector<UnitaryRotation<Scalar>> unitaries(count);
    for (auto& u : unitaries) u = haar_unitary_sample<Scalar>(rng);
    best = std::max(best, mixture_delta_f(ch, weights, unitaries));
  }
  return best;
}

}  // namespace qinv

#endif  // QINV_QUASI_INVERSE_HPP

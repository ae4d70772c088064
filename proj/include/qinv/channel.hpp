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
// Qubit channels: Kraus and affine (Bloch) representations, validation
// (trace preservation, complete positivity via the Choi matrix), application,
// composition, and constructors for the standard channel families.

#ifndef QINV_CHANNEL_HPP
#define QINV_CHANNEL_HPP

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qinv/pauli.hpp"

namespace qinv {

/// Action on the Bloch ball: r -> M r + t.
template <typename Scalar = double>
struct AffineMap {
  Mat3<Scalar> M = Mat3<Scalar>::Identity();
  Vec3<Scalar> t = Vec3<Scalar>::Zero();
};

/// M split into its symmetric part S, antisymmetric part A and the axial
/// vector v with A_{ab} = -eps_{abc} v_c.
template <typename Scalar = double>
struct SplitAffine {
  Mat3<Scalar> S = Mat3<Scalar>::Identity();
  Mat3<Scalar> A = Mat3<Scalar>::Zero();
  Vec3<Scalar> v = Vec3<Scalar>::Zero();
};

template <typename Scalar = double>
struct ClosedFormAffine {
  AffineMap<Scalar> affine;
  SplitAffine<Scalar> split;
  Mat3<Scalar> b_matrix = Mat3<Scalar>::Zero();
};

/// Unnormalized Choi matrix sum_{ij} |i><j| (x) E(|i><j|); trace 2 for
/// trace-preserving maps. Complete positivity <=> positive semidefinite.
template <typename Scalar = double>
struct ChoiMatrix {
  Mat4c<Scalar> matrix = Mat4c<Scalar>::Zero();
  Vec4<Scalar> eigenvalues = Vec4<Scalar>::Zero();  // descending
};

template <typename Scalar = double>
struct CpReport {
  bool completely_positive = false;
  Scalar min_eigenvalue{};
  Vec4<Scalar> eigenvalues = Vec4<Scalar>::Zero();
};

/// A validated qubit channel: ordered Kraus list plus the cached affine map.
/// Immutable after construction; Kraus lists are not canonicalized, so
/// channel equality means affine-map equality.
template <typename Scalar = double>
struct QubitChannel {
  std::vector<PauliForm<Scalar>> kraus;
  AffineMap<Scalar> affine;
};

namespace detail {

inline std::string fmt_residual(double r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", r);
  return buf;
}

template <typename Scalar>
Vec3<Scalar> real_part(const CVec3<Scalar>& z) {
  return Vec3<Scalar>(z[0].real(), z[1].real(), z[2].real());
}

// Plain a x b for complex 3-vectors. (Eigen's cross() conjugates the result
// of complex cross products, which is not the convention used here.)
template <typename Scalar>
CVec3<Scalar> ccross(const CVec3<Scalar>& a, const CVec3<Scalar>& b) {
  return CVec3<Scalar>(a[1] * b[2] - a[2] * b[1],
                       a[2] * b[0] - a[0] * b[2],
                       a[0] * b[1] - a[1] * b[0]);
}

}  // namespace detail

/// Kraus-sum moments of Eq.-style aggregates <.> = sum over operators.
template <typename Scalar>
Scalar kraus_sum_aa(const QubitChannel<Scalar>& ch) {
  Scalar s{};
  for (const auto& k : ch.kraus) s += std::norm(k.a);
  return s;
}

template <typename Scalar>
Scalar kraus_sum_bb(const QubitChannel<Scalar>& ch) {
  Scalar s{};
  for (const auto& k : ch.kraus) s += k.b.squaredNorm();
  return s;
}

/// B_{ab} = <b_a b_b^* + b_a^* b_b>/2, the symmetrized second moment of the
/// Kraus b-vectors. Real symmetric PSD.
template <typename Scalar>
Mat3<Scalar> kraus_b_matrix(const QubitChannel<Scalar>& ch) {
  Mat3<Scalar> b = Mat3<Scalar>::Zero();
  for (const auto& k : ch.kraus)
    b += (k.b * k.b.adjoint() + k.b.conjugate() * k.b.transpose()).real() / Scalar(2);
  return b;
}

/// v = i <a^* b - a b^*>, the axial vector of the antisymmetric part of M.
template <typename Scalar>
Vec3<Scalar> kraus_v_vector(const QubitChannel<Scalar>& ch) {
  CVec3<Scalar> s = CVec3<Scalar>::Zero();
  for (const auto& k : ch.kraus)
    s += std::conj(k.a) * k.b - k.a * k.b.conjugate();
  return detail::real_part<Scalar>(Complex<Scalar>(0, 1) * s);
}

/// t = <a^* b + a b^* + i b cross b^*>.
template <typename Scalar>
Vec3<Scalar> kraus_t_vector(const QubitChannel<Scalar>& ch) {
  CVec3<Scalar> s = CVec3<Scalar>::Zero();
  for (const auto& k : ch.kraus) {
    s += std::conj(k.a) * k.b + k.a * k.b.conjugate();
    s += Complex<Scalar>(0, 1) * detail::ccross<Scalar>(k.b, k.b.conjugate());
  }
  return detail::real_part<Scalar>(s);
}

/// The closed-form affine data of a Kraus list:
/// S_{ab} = (1 - 2<b.b^*>) delta_{ab} + <b_a b_b^* + b_a^* b_b>,
/// A_{ab} = -eps_{abc} v_c,  M = S + A,  t as above, plus the B matrix.
template <typename Scalar>
ClosedFormAffine<Scalar> affine_closed_form(const QubitChannel<Scalar>& ch) {
  ClosedFormAffine<Scalar> out;
  out.b_matrix = kraus_b_matrix(ch);
  const Scalar bb = kraus_sum_bb(ch);
  out.split.S = (Scalar(1) - Scalar(2) * bb) * Mat3<Scalar>::Identity() +
                Scalar(2) * out.b_matrix;
  out.split.v = kraus_v_vector(ch);
  const Vec3<Scalar>& v = out.split.v;
  out.split.A << Scalar(0), -v[2], v[1],
                 v[2], Scalar(0), -v[0],
                 -v[1], v[0], Scalar(0);
  out.affine.M = out.split.S + out.split.A;
  out.affine.t = kraus_t_vector(ch);
  return out;
}

/// rho = (1 + r.sigma)/2.
template <typename Scalar>
Mat2<Scalar> density_from_bloch(const BlochVector<Scalar>& r) {
  PauliForm<Scalar> p;
  p.a = Complex<Scalar>(Scalar(0.5), 0);
  p.b = (r / Scalar(2)).template cast<Complex<Scalar>>();
  return pauli_compose(p);
}

template <typename Scalar>
BlochVector<Scalar> bloch_from_density(const Mat2<Scalar>& rho) {
  const auto p = pauli_decompose(rho);
  return Scalar(2) * detail::real_part<Scalar>(p.b);
}

/// E(rho) = sum_i K_i rho K_i^dag, evaluated in 2x2 arithmetic.
template <typename Scalar>
Mat2<Scalar> apply_density(const QubitChannel<Scalar>& ch, const Mat2<Scalar>& rho) {
  Mat2<Scalar> out = Mat2<Scalar>::Zero();
  for (const auto& k : ch.kraus) {
    const Mat2<Scalar> km = pauli_compose(k);
    out += km * rho * km.adjoint();
  }
  return out;
}

/// The affine map recomputed from the trace formulas
/// M_{ab} = Tr(sigma_a E(sigma_b))/2, t_a = Tr(sigma_a E(1))/2, with E
/// evaluated through the Kraus sum. Independent of affine_closed_form;
/// the two must agree to algebra_tol.
template <typename Scalar>
AffineMap<Scalar> affine_of(const QubitChannel<Scalar>& ch) {
  AffineMap<Scalar> out;
  for (int beta = 0; beta < 3; ++beta) {
    const Mat2<Scalar> image = apply_density(ch, sigma<Scalar>(beta + 1));
    for (int alpha = 0; alpha < 3; ++alpha)
      out.M(alpha, beta) =
          (sigma<Scalar>(alpha + 1) * image).trace().real() / Scalar(2);
  }
  const Mat2<Scalar> image = apply_density(ch, sigma<Scalar>(0));
  for (int alpha = 0; alpha < 3; ++alpha)
    out.t[alpha] = (sigma<Scalar>(alpha + 1) * image).trace().real() / Scalar(2);
  return out;
}

/// Residuals of the trace-preservation constraints <a^*a> + <b^*.b> = 1
/// (scalar) and <a b^*> + <a^* b> + i <b^* cross b> = 0 (vector).
template <typename Scalar = double>
struct TpResidual {
  Scalar scalar{};
  Scalar vector{};
  Scalar max() const { return std::max(scalar, vector); }
};

template <typename Scalar>
TpResidual<Scalar> trace_preservation_residual(const std::vector<PauliForm<Scalar>>& ops) {
  Scalar scalar_sum{};
  CVec3<Scalar> vec_sum = CVec3<Scalar>::Zero();
  for (const auto& k : ops) {
    scalar_sum += std::norm(k.a) + k.b.squaredNorm();
    vec_sum += k.a * k.b.conjugate() + std::conj(k.a) * k.b;
    vec_sum += Complex<Scalar>(0, 1) * detail::ccross<Scalar>(k.b.conjugate(), k.b);
  }
  return {std::abs(scalar_sum - Scalar(1)),
          vec_sum.template lpNorm<Eigen::Infinity>()};
}

/// Validating constructor. Checks both trace-preservation constraints and
/// caches the closed-form affine map.
template <typename Scalar>
QubitChannel<Scalar> from_kraus(std::vector<PauliForm<Scalar>> ops) {
  if (ops.empty()) throw invalid_input_error("from_kraus: empty Kraus list");
  for (const auto& k : ops)
    if (!is_finite(k.a) || !is_finite(k.b))
      throw invalid_input_error("from_kraus: non-finite Kraus entries");

  const TpResidual<Scalar> res = trace_preservation_residual(ops);
  if (res.max() > Scalar(validation_tol))
    throw validation_error(
        "from_kraus: trace preservation violated, residual " +
        detail::fmt_residual(double(res.max())) + " (scalar " +
        detail::fmt_residual(double(res.scalar)) + ", vector " +
        detail::fmt_residual(double(res.vector)) + ")");

  QubitChannel<Scalar> ch;
  ch.kraus = std::move(ops);
  ch.affine = affine_closed_form(ch).affine;
  return ch;
}

template <typename Scalar>
QubitChannel<Scalar> from_kraus(const std::vector<Mat2<Scalar>>& mats) {
  std::vector<PauliForm<Scalar>> ops;
  ops.reserve(mats.size());
  for (const auto& m : mats) ops.push_back(pauli_decompose(m));
  return from_kraus(std::move(ops));
}

/// Bloch-space application r -> M r + t. Rejects unphysical inputs.
template <typename Scalar>
BlochVector<Scalar> apply(const QubitChannel<Scalar>& ch, const BlochVector<Scalar>& r) {
  if (!is_finite(r) || r.norm() > Scalar(1) + Scalar(validation_tol))
    throw invalid_input_error("apply: Bloch vector outside the unit ball");
  return ch.affine.M * r + ch.affine.t;
}

/// Same action routed through the Kraus operators (2x2 arithmetic); the
/// cross-check partner of apply().
template <typename Scalar>
BlochVector<Scalar> apply_kraus(const QubitChannel<Scalar>& ch, const BlochVector<Scalar>& r) {
  return bloch_from_density(apply_density(ch, density_from_bloch(r)));
}

/// second after first: Kraus set {K2_i K1_j}; affine law
/// (M2 M1, M2 t1 + t2).
template <typename Scalar>
QubitChannel<Scalar> compose(const QubitChannel<Scalar>& second,
                             const QubitChannel<Scalar>& first) {
  std::vector<PauliForm<Scalar>> ops;
  ops.reserve(second.kraus.size() * first.kraus.size());
  for (const auto& k2 : second.kraus)
    for (const auto& k1 : first.kraus)
      ops.push_back(pauli_decompose<Scalar>(pauli_compose(k2) * pauli_compose(k1)));
  return from_kraus(std::move(ops));
}

/// Unitary conjugation channel rho -> V rho V^dag.
template <typename Scalar>
QubitChannel<Scalar> make_unitary_channel(const UnitaryRotation<Scalar>& v) {
  return from_kraus<Scalar>({pauli_decompose(mat2_of(v))});
}

/// Convex mixture lambda E1 + (1-lambda) E2 as the concatenated Kraus list
/// {sqrt(lambda) K_i} u {sqrt(1-lambda) L_j}.
template <typename Scalar>
QubitChannel<Scalar> mix(Scalar lambda, const QubitChannel<Scalar>& e1,
                         const QubitChannel<Scalar>& e2) {
  if (lambda < Scalar(0) || lambda > Scalar(1))
    throw invalid_input_error("mix: weight must be in [0,1]");
  std::vector<PauliForm<Scalar>> ops;
  const Scalar s1 = std::sqrt(lambda), s2 = std::sqrt(Scalar(1) - lambda);
  for (auto k : e1.kraus) {
    k.a *= s1;
    k.b *= s1;
    if (s1 > Scalar(0)) ops.push_back(k);
  }
  for (auto k : e2.kraus) {
    k.a *= s2;
    k.b *= s2;
    if (s2 > Scalar(0)) ops.push_back(k);
  }
  return from_kraus(std::move(ops));
}

/// Pauli channel sum_i p_i sigma_i rho sigma_i.
template <typename Scalar>
QubitChannel<Scalar> make_pauli(Scalar p0, Scalar p1, Scalar p2, Scalar p3) {
  std::array<Scalar, 4> p{p0, p1, p2, p3};
  Scalar sum{};
  for (Scalar& pi : p) {
    if (!std::isfinite(pi) || pi < -Scalar(validation_tol))
      throw invalid_input_error("make_pauli: probabilities must be nonnegative");
    pi = std::max(pi, Scalar(0));
    sum += pi;
  }
  if (std::abs(sum - Scalar(1)) > Scalar(validation_tol))
    throw invalid_input_error("make_pauli: probabilities must sum to 1");
  std::vector<PauliForm<Scalar>> ops;
  for (int i = 0; i < 4; ++i) {
    if (p[i] <= Scalar(0)) continue;
    ops.push_back(pauli_decompose<Scalar>(std::sqrt(p[i] / sum) * sigma<Scalar>(i)));
  }
  return from_kraus(std::move(ops));
}

/// Mixed-rotation channel p0 rho + p sum_i U_i rho U_i^dag with
/// U_i = e^{-i theta sigma_i / 2} and p0 = 1 - 3p.
template <typename Scalar>
QubitChannel<Scalar> make_mixed_rotation(Scalar p, Scalar theta) {
  if (!std::isfinite(p) || !std::isfinite(theta) || p < -Scalar(validation_tol) ||
      p > Scalar(1) / Scalar(3) + Scalar(validation_tol))
    throw invalid_input_error("make_mixed_rotation: p must be in [0, 1/3]");
  p = std::clamp(p, Scalar(0), Scalar(1) / Scalar(3));
  const Scalar p0 = std::max(Scalar(0), Scalar(1) - Scalar(3) * p);
  std::vector<PauliForm<Scalar>> ops;
  if (p0 > Scalar(0)) {
    PauliForm<Scalar> id;
    id.a = std::sqrt(p0);
    ops.push_back(id);
  }
  if (p > Scalar(0)) {
    const Scalar root = std::sqrt(p);
    for (int i = 0; i < 3; ++i) {
      PauliForm<Scalar> u;
      u.a = root * std::cos(theta / Scalar(2));
      u.b[i] = Complex<Scalar>(0, -1) * root * std::sin(theta / Scalar(2));
      ops.push_back(u);
    }
  }
  return from_kraus(std::move(ops));
}

/// Tetrahedron channel q rho + sum_i p_i (u_i.sigma) rho (u_i.sigma) with the
/// u_i at alternating cube corners and q = 1 - sum p_i.
template <typename Scalar>
QubitChannel<Scalar> make_tetrahedron(Scalar p0, Scalar p1, Scalar p2, Scalar p3) {
  std::array<Scalar, 4> p{p0, p1, p2, p3};
  Scalar sum{};
  for (Scalar& pi : p) {
    if (!std::isfinite(pi) || pi < -Scalar(validation_tol))
      throw invalid_input_error("make_tetrahedron: probabilities must be nonnegative");
    pi = std::max(pi, Scalar(0));
    sum += pi;
  }
  if (sum > Scalar(1) + Scalar(validation_tol))
    throw invalid_input_error("make_tetrahedron: probabilities must sum to at most 1");
  const Scalar q = std::max(Scalar(0), Scalar(1) - sum);
  const Scalar inv3 = Scalar(1) / std::sqrt(Scalar(3));
  const std::array<Vec3<Scalar>, 4> corners{
      Vec3<Scalar>(inv3, inv3, inv3), Vec3<Scalar>(inv3, -inv3, -inv3),
      Vec3<Scalar>(-inv3, inv3, -inv3), Vec3<Scalar>(-inv3, -inv3, inv3)};
  std::vector<PauliForm<Scalar>> ops;
  if (q > Scalar(0)) {
    PauliForm<Scalar> id;
    id.a = std::sqrt(q);
    ops.push_back(id);
  }
  for (int i = 0; i < 4; ++i) {
    if (p[i] <= Scalar(0)) continue;
    PauliForm<Scalar> k;
    k.b = (std::sqrt(p[i]) * corners[i]).template cast<Complex<Scalar>>();
    ops.push_back(k);
  }
  return from_kraus(std::move(ops));
}

/// Two-parameter slice of the tetrahedron family with weight p on the
/// corners u0, u3 and p' on u1, u2; the optimal correction lives in the
/// (x+y)/sqrt(2) / (x-y)/sqrt(2) plane.
template <typename Scalar>
QubitChannel<Scalar> make_tetrahedron_slice(Scalar p, Scalar pprime) {
  return make_tetrahedron(p, pprime, pprime, p);
}

/// Amplitude damping with A0 = diag(1, gamma) (or diag(1, i gamma) for the
/// twisted variant) and A1 = [[0, sqrt(1-gamma^2)], [0, 0]].
template <typename Scalar>
QubitChannel<Scalar> make_amplitude_damping(Scalar gamma, bool twisted = false) {
  if (!std::isfinite(gamma) || std::abs(gamma) >= Scalar(1))
    throw invalid_input_error("make_amplitude_damping: |gamma| must be < 1");
  PauliForm<Scalar> a0;
  const Complex<Scalar> g =
      twisted ? Complex<Scalar>(0, gamma) : Complex<Scalar>(gamma, 0);
  a0.a = (Scalar(1) + g) / Scalar(2);
  a0.b[2] = (Scalar(1) - g) / Scalar(2);
  PauliForm<Scalar> a1;
  const Scalar s = std::sqrt(Scalar(1) - gamma * gamma);
  a1.b[0] = s / Scalar(2);
  a1.b[1] = Complex<Scalar>(0, 1) * s / Scalar(2);
  return from_kraus<Scalar>({a0, a1});
}

/// Margins of the complete-positivity tetrahedron for a diagonal unital
/// channel: the four Pauli probabilities (1 +- l1 +- l2 +- l3)/4; inside
/// the tetrahedron iff all are nonnegative.
template <typename Scalar>
std::array<Scalar, 4> diagonal_pauli_weights(const Vec3<Scalar>& lambda) {
  return {(Scalar(1) + lambda[0] + lambda[1] + lambda[2]) / Scalar(4),
          (Scalar(1) + lambda[0] - lambda[1] - lambda[2]) / Scalar(4),
          (Scalar(1) - lambda[0] + lambda[1] - lambda[2]) / Scalar(4),
          (Scalar(1) - lambda[0] - lambda[1] + lambda[2]) / Scalar(4)};
}

/// Diagonal unital channel with affine M = diag(l1,l2,l3), realized as the
/// Pauli channel the tetrahedron map dictates. Rejects vectors outside the
/// tetrahedron, naming the violated inequality.
template <typename Scalar>
QubitChannel<Scalar> make_diagonal(Scalar l1, Scalar l2, Scalar l3) {
  const auto p = diagonal_pauli_weights<Scalar>({l1, l2, l3});
  if (p[0] < -Scalar(validation_tol) || p[3] < -Scalar(validation_tol))
    throw validation_error(
        "make_diagonal: not completely positive, "
        "(1+lambda3)^2 >= (lambda1+lambda2)^2 violated");
  if (p[1] < -Scalar(validation_tol) || p[2] < -Scalar(validation_tol))
    throw validation_error(
        "make_diagonal: not completely positive, "
        "(1-lambda3)^2 >= (lambda1-lambda2)^2 violated");
  return make_pauli(p[0], p[1], p[2], p[3]);
}

/// Choi matrix from the Kraus operators: sum_k w_k w_k^dag with w_k the
/// column-stacked K_k. Positive semidefinite by construction.
template <typename Scalar>
ChoiMatrix<Scalar> choi_of(const QubitChannel<Scalar>& ch) {
  Mat4c<Scalar> c = Mat4c<Scalar>::Zero();
  for (const auto& k : ch.kraus) {
    const Mat2<Scalar> km = pauli_compose(k);
    Eigen::Matrix<Complex<Scalar>, 4, 1> w;
    w << km(0, 0), km(1, 0), km(0, 1), km(1, 1);
    c += w * w.adjoint();
  }
  ChoiMatrix<Scalar> out;
  out.matrix = c;
  Eigen::SelfAdjointEigenSolver<Mat4c<Scalar>> solver(c);
  out.eigenvalues = solver.eigenvalues().reverse();
  return out;
}

/// Choi matrix of a bare affine map (no Kraus form required): blocks
/// E(|i><j|) obtained by extending r -> M r + t linearly to complex
/// Pauli components.
template <typename Scalar>
ChoiMatrix<Scalar> choi_of(const AffineMap<Scalar>& map) {
  const Complex<Scalar> i(0, 1);
  // |i><j| = (w0 + w.sigma)/2 for the four basis kets.
  const std::array<std::pair<Complex<Scalar>, CVec3<Scalar>>, 4> basis{
      std::pair{Complex<Scalar>(1, 0), CVec3<Scalar>(0, 0, Complex<Scalar>(1, 0))},
      std::pair{Complex<Scalar>(0, 0), CVec3<Scalar>(Complex<Scalar>(1, 0), i, 0)},
      std::pair{Complex<Scalar>(0, 0), CVec3<Scalar>(Complex<Scalar>(1, 0), -i, 0)},
      std::pair{Complex<Scalar>(1, 0), CVec3<Scalar>(0, 0, Complex<Scalar>(-1, 0))}};
  const auto block = [&](int bi, int bj) {
    const auto& [w0, w] = basis[2 * bi + bj];
    PauliForm<Scalar> out;
    out.a = w0 / Scalar(2);
    out.b = (map.M.template cast<Complex<Scalar>>() * w +
             w0 * map.t.template cast<Complex<Scalar>>()) /
            Scalar(2);
    return pauli_compose(out);
  };
  ChoiMatrix<Scalar> out;
  for (int bi = 0; bi < 2; ++bi)
    for (int bj = 0; bj < 2; ++bj)
      out.matrix.template block<2, 2>(2 * bi, 2 * bj) = block(bi, bj);
  Eigen::SelfAdjointEigenSolver<Mat4c<Scalar>> solver(out.matrix);
  out.eigenvalues = solver.eigenvalues().reverse();
  return out;
}

template <typename Scalar>
CpReport<Scalar> is_completely_positive(const ChoiMatrix<Scalar>& choi) {
  CpReport<Scalar> rep;
  rep.eigenvalues = choi.eigenvalues;
  rep.min_eigenvalue = choi.eigenvalues.minCoeff();
  rep.completely_positive = rep.min_eigenvalue >= -Scalar(validation_tol);
  return rep;
}

template <typename Scalar>
CpReport<Scalar> is_completely_positive(const QubitChannel<Scalar>& ch) {
  return is_completely_positive(choi_of(ch));
}

template <typename Scalar>
CpReport<Scalar> is_completely_positive(const AffineMap<Scalar>& map) {
  return is_completely_positive(choi_of(map));
}

/// Largest entrywise deviation between two affine maps; channel equality is
/// defined as this being below validation_tol.
template <typename Scalar>
Scalar affine_distance(const AffineMap<Scalar>& a, const AffineMap<Scalar>& b) {
  return std::max((a.M - b.M).template lpNorm<Eigen::Infinity>(),
                  (a.t - b.t).template lpNorm<Eigen::Infinity>());
}

template <typename Scalar>
bool is_unital(const QubitChannel<Scalar>& ch, Scalar tol = Scalar(algebra_tol)) {
  return ch.affine.t.template lpNorm<Eigen::Infinity>() < tol;
}

}  // namespace qinv

#endif  // QINV_CHANNEL_HPP

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
// Exact small-dimension Pauli algebra: decomposition of 2x2 operators over
// {1, sigma_x, sigma_y, sigma_z}, qubit unitaries as unit quaternions, their
// SO(3) action on Bloch vectors, and uniform sampling on S^2 / S^3.

#ifndef QINV_PAULI_HPP
#define QINV_PAULI_HPP

#include <random>

#include "qinv/common.hpp"

namespace qinv {

/// sigma(0) = identity, sigma(1..3) = Pauli matrices.
template <typename Scalar = double>
Mat2<Scalar> sigma(int alpha) {
  using C = Complex<Scalar>;
  Mat2<Scalar> m;
  switch (alpha) {
    case 0: m << C(1, 0), C(0, 0), C(0, 0), C(1, 0); break;
    case 1: m << C(0, 0), C(1, 0), C(1, 0), C(0, 0); break;
    case 2: m << C(0, 0), C(0, -1), C(0, 1), C(0, 0); break;
    case 3: m << C(1, 0), C(0, 0), C(0, 0), C(-1, 0); break;
    default: throw invalid_input_error("sigma: index must be in 0..3");
  }
  return m;
}

/// A 2x2 operator in the form K = a*1 + b.sigma with complex a and b.
template <typename Scalar = double>
struct PauliForm {
  Complex<Scalar> a{};
  CVec3<Scalar> b = CVec3<Scalar>::Zero();
};

/// a = Tr(K)/2, b_alpha = Tr(sigma_alpha K)/2. Exact linear change of basis.
template <typename Scalar>
PauliForm<Scalar> pauli_decompose(const Mat2<Scalar>& k) {
  if (!is_finite(k)) throw invalid_input_error("pauli_decompose: non-finite entries");
  const Complex<Scalar> i(0, 1);
  PauliForm<Scalar> p;
  p.a = (k(0, 0) + k(1, 1)) / Scalar(2);
  p.b[0] = (k(0, 1) + k(1, 0)) / Scalar(2);
  p.b[1] = i * (k(0, 1) - k(1, 0)) / Scalar(2);
  p.b[2] = (k(0, 0) - k(1, 1)) / Scalar(2);
  return p;
}

template <typename Scalar>
Mat2<Scalar> pauli_compose(const PauliForm<Scalar>& p) {
  if (!is_finite(p.a) || !is_finite(p.b))
    throw invalid_input_error("pauli_compose: non-finite fields");
  const Complex<Scalar> i(0, 1);
  Mat2<Scalar> k;
  k(0, 0) = p.a + p.b[2];
  k(0, 1) = p.b[0] - i * p.b[1];
  k(1, 0) = p.b[0] + i * p.b[1];
  k(1, 1) = p.a - p.b[2];
  return k;
}

/// Qubit unitary V = x0*1 + i x.sigma with x0^2 + |x|^2 = 1, stored with the
/// canonical sign x0 >= 0 (V and -V act identically; when x0 = 0 the first
/// nonzero component of x is made positive). Equivalently V = e^{i phi n.sigma}
/// with cos(phi) = x0 and x = sin(phi) n.
template <typename Scalar = double>
struct UnitaryRotation {
  Scalar x0{1};
  Vec3<Scalar> x = Vec3<Scalar>::Zero();

  Scalar angle() const { return std::atan2(x.norm(), x0); }
  Vec3<Scalar> axis() const {
    const Scalar n = x.norm();
    return n > Scalar(0) ? Vec3<Scalar>(x / n) : Vec3<Scalar>::UnitZ();
  }
};

namespace detail {
template <typename Scalar>
UnitaryRotation<Scalar> canonicalize(Scalar x0, Vec3<Scalar> x) {
  const Scalar eps = Scalar(algebra_tol);
  bool flip = false;
  if (std::abs(x0) > eps) {
    flip = x0 < Scalar(0);
  } else {
    for (int i = 0; i < 3; ++i) {
      if (std::abs(x[i]) > eps) {
        flip = x[i] < Scalar(0);
        break;
      }
    }
  }
  if (flip) {
    x0 = -x0;
    x = -x;
  }
  return UnitaryRotation<Scalar>{x0, x};
}
}  // namespace detail

/// Builds the canonical unitary from raw quaternion components, renormalizing
/// away rounding in the unit constraint.
template <typename Scalar>
UnitaryRotation<Scalar> make_unitary_rotation(Scalar x0, const Vec3<Scalar>& x) {
  if (!std::isfinite(x0) || !is_finite(x))
    throw invalid_input_error("make_unitary_rotation: non-finite components");
  const Scalar n2 = x0 * x0 + x.squaredNorm();
  if (std::abs(n2 - Scalar(1)) > Scalar(validation_tol))
    throw invalid_input_error("make_unitary_rotation: components not on the unit 3-sphere");
  const Scalar inv = Scalar(1) / std::sqrt(n2);
  return detail::canonicalize(x0 * inv, Vec3<Scalar>(x * inv));
}

/// V = e^{i phi axis.sigma}: x0 = cos(phi), x = sin(phi) axis.
template <typename Scalar>
UnitaryRotation<Scalar> unitary_from_axis_angle(const Vec3<Scalar>& axis, Scalar phi) {
  if (!is_finite(axis) || !std::isfinite(phi))
    throw invalid_input_error("unitary_from_axis_angle: non-finite input");
  if (std::abs(axis.norm() - Scalar(1)) > Scalar(validation_tol))
    throw invalid_input_error("unitary_from_axis_angle: axis must be a unit vector");
  return detail::canonicalize(std::cos(phi), Vec3<Scalar>(std::sin(phi) * axis));
}

template <typename Scalar>
Mat2<Scalar> mat2_of(const UnitaryRotation<Scalar>& v) {
  PauliForm<Scalar> p;
  p.a = Complex<Scalar>(v.x0, 0);
  p.b = Complex<Scalar>(0, 1) * v.x.template cast<Complex<Scalar>>();
  return pauli_compose(p);
}

/// Identity for "no correction".
template <typename Scalar = double>
UnitaryRotation<Scalar> identity_rotation() {
  return UnitaryRotation<Scalar>{};
}

/// pi-rotation about a Bloch axis: V = n.sigma (x0 = 0).
template <typename Scalar>
UnitaryRotation<Scalar> pi_rotation(const Vec3<Scalar>& axis) {
  return unitary_from_axis_angle(axis, Scalar(M_PI) / Scalar(2));
}

/// Group law for V = x0 + i x.sigma:
/// (x0, x)(y0, y) = (x0 y0 - x.y, x0 y + y0 x - x cross y).
template <typename Scalar>
UnitaryRotation<Scalar> compose(const UnitaryRotation<Scalar>& v,
                                const UnitaryRotation<Scalar>& w) {
  const Scalar z0 = v.x0 * w.x0 - v.x.dot(w.x);
  const Vec3<Scalar> z = v.x0 * w.x + w.x0 * v.x - v.x.cross(w.x);
  return make_unitary_rotation(z0, z);
}

/// The SO(3) matrix R with V sigma_beta V^dag = sum_alpha R_{alpha beta}
/// sigma_alpha (this sign convention is fixed here and used everywhere):
/// R = (x0^2 - |x|^2) I - 2 x0 [x]_cross + 2 x x^T.
template <typename Scalar>
Rotation3<Scalar> rotation_of_unitary(const UnitaryRotation<Scalar>& v) {
  const Scalar w = v.x0;
  const Vec3<Scalar>& x = v.x;
  Mat3<Scalar> cross;
  cross << Scalar(0), -x[2], x[1],
           x[2], Scalar(0), -x[0],
           -x[1], x[0], Scalar(0);
  return (w * w - x.squaredNorm()) * Mat3<Scalar>::Identity() -
         Scalar(2) * w * cross + Scalar(2) * x * x.transpose();
}

/// Uniform point on S^2: z uniform in [-1,1], azimuth uniform in [0,2pi).
template <typename Scalar = double>
BlochVector<Scalar> haar_bloch_sample(std::mt19937_64& rng) {
  const Scalar z = Scalar(2) * uniform01<Scalar>(rng) - Scalar(1);
  const Scalar phi = Scalar(2) * Scalar(M_PI) * uniform01<Scalar>(rng);
  const Scalar s = std::sqrt(std::max(Scalar(0), Scalar(1) - z * z));
  return BlochVector<Scalar>(s * std::cos(phi), s * std::sin(phi), z);
}

/// Haar-uniform qubit unitary (up to the unobservable global sign): four
/// standard normals normalized onto S^3.
template <typename Scalar = double>
UnitaryRotation<Scalar> haar_unitary_sample(std::mt19937_64& rng) {
  Vec4<Scalar> q;
  do {
    for (int i = 0; i < 4; ++i) q[i] = standard_normal<Scalar>(rng);
  } while (q.norm() < Scalar(1e-6));
  q.normalize();
  return detail::canonicalize(q[0], Vec3<Scalar>(q.template tail<3>()));
}

}  // namespace qinv

#endif  // QINV_PAULI_HPP

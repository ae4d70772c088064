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

#ifndef QINV_COMMON_HPP
#define QINV_COMMON_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qinv {

/// Dense fixed-size carriers. Everything downstream is templated on the real
/// scalar; `double` is the default instantiation used by the CLI layer.
template <typename Scalar> using Complex = std::complex<Scalar>;
template <typename Scalar> using Mat2 = Eigen::Matrix<Complex<Scalar>, 2, 2>;
template <typename Scalar> using Mat4c = Eigen::Matrix<Complex<Scalar>, 4, 4>;
template <typename Scalar> using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar> using CVec3 = Eigen::Matrix<Complex<Scalar>, 3, 1>;
template <typename Scalar> using Vec4 = Eigen::Matrix<Scalar, 4, 1>;
template <typename Scalar> using Mat3 = Eigen::Matrix<Scalar, 3, 3>;
template <typename Scalar> using Mat4 = Eigen::Matrix<Scalar, 4, 4>;

/// A Bloch vector is a plain real 3-vector; the alias records intent.
template <typename Scalar> using BlochVector = Vec3<Scalar>;
/// SO(3) matrix produced by rotation_of_unitary.
template <typename Scalar> using Rotation3 = Mat3<Scalar>;

// Tolerance policy: tight for algebraic identities evaluated in double on
// tiny fixed-size matrices, loose for data that may come from 6-digit files.
inline constexpr double algebra_tol = 1e-12;
inline constexpr double validation_tol = 1e-9;

/// Bad values handed to a public operation (non-finite entries, non-unit
/// axis, probabilities out of range, ...).
struct invalid_input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Physics-level rejection: trace preservation or complete positivity
/// violated. Carries the residual in the message.
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two internal computation routes that must agree did not. Signals a broken
/// invariant, never bad user data.
struct consistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed channel-spec document (missing/ill-typed fields).
struct schema_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename Scalar>
bool is_finite(const Complex<Scalar>& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

template <typename Derived>
bool is_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

/// Deterministic stream splitting: a generator for block `stream` of a run
/// seeded with `seed`. Used so Monte-Carlo and search results depend only on
/// (seed, block index), never on how blocks are scheduled.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(stream)));
}

/// Uniform double in [0,1) from the top 53 bits; avoids the
/// implementation-defined behaviour of std::uniform_real_distribution.
template <typename Scalar = double>
Scalar uniform01(std::mt19937_64& rng) {
  return Scalar((rng() >> 11) * 0x1.0p-53);
}

/// Standard normal via Box-Muller, deterministic across platforms.
template <typename Scalar = double>
Scalar standard_normal(std::mt19937_64& rng) {
  Scalar u1 = uniform01<Scalar>(rng);
  while (u1 <= Scalar(0)) u1 = uniform01<Scalar>(rng);
  const Scalar u2 = uniform01<Scalar>(rng);
  return std::sqrt(Scalar(-2) * std::log(u1)) *
         std::cos(Scalar(2) * Scalar(M_PI) * u2);
}

}  // namespace qinv

#endif  // QINV_COMMON_HPP

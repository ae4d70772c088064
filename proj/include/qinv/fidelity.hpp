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
// Average input-output fidelity over Haar-random pure states, by closed form
// (several algebraically equivalent routes that are cross-checked on every
// call) and by Monte Carlo.

#ifndef QINV_FIDELITY_HPP
#define QINV_FIDELITY_HPP

#include <cstdint>

#include "qinv/channel.hpp"

namespace qinv {

template <typename Scalar = double>
struct FidelityEstimate {
  Scalar mean{};
  Scalar std_error{};
  std::int64_t samples{};
};

/// Pure-state fidelity integrand in Bloch form:
/// <phi| E(|phi><phi|) |phi> = (1 + n.(M n + t))/2.
template <typename Scalar>
Scalar fidelity_integrand(const QubitChannel<Scalar>& ch, const BlochVector<Scalar>& n) {
  return (Scalar(1) + n.dot(ch.affine.M * n + ch.affine.t)) / Scalar(2);
}

/// Same integrand through 2x2 arithmetic, Tr(rho E(rho)); the slow
/// cross-check partner of fidelity_integrand.
template <typename Scalar>
Scalar fidelity_integrand_density(const QubitChannel<Scalar>& ch,
                                  const BlochVector<Scalar>& n) {
  const Mat2<Scalar> rho = density_from_bloch(n);
  return (rho * apply_density(ch, rho)).trace().real();
}

/// Average fidelity, returned as 1 - (2/3) <b.b^*>. The equivalent closed
/// forms (1 + 2<a^*a>)/3, 1 - (2/3) Tr B and (1 + Tr M / 3)/2 are evaluated
/// too and any disagreement beyond 1e-10 fails loudly: it means a channel
/// invariant is broken upstream.
template <typename Scalar>
Scalar avg_fidelity(const QubitChannel<Scalar>& ch) {
  const Scalar aa = kraus_sum_aa(ch);
  const Scalar bb = kraus_sum_bb(ch);
  const Scalar f_ab = aa + bb / Scalar(3);
  const Scalar f_b = Scalar(1) - Scalar(2) / Scalar(3) * bb;
  const Scalar f_a = (Scalar(1) + Scalar(2) * aa) / Scalar(3);
  const Scalar f_trb = Scalar(1) - Scalar(2) / Scalar(3) * kraus_b_matrix(ch).trace();
  const Scalar f_trm = (Scalar(1) + ch.affine.M.trace() / Scalar(3)) / Scalar(2);
  const Scalar spread =
      std::max({f_ab, f_b, f_a, f_trb, f_trm}) - std::min({f_ab, f_b, f_a, f_trb, f_trm});
  if (spread > Scalar(1e-10))
    throw consistency_error(
        "avg_fidelity: closed-form routes disagree by " +
        detail::fmt_residual(double(spread)));
  return f_b;
}

/// B matrix of the channel (see kraus_b_matrix); Tr B fixes the fidelity.
template <typename Scalar>
Mat3<Scalar> b_matrix(const QubitChannel<Scalar>& ch) {
  return kraus_b_matrix(ch);
}

/// Fidelity of a composition from the affine maps alone:
/// F(second after first) = (1 + Tr(N M)/3)/2. Symmetric in the two maps.
template <typename Scalar>
Scalar composed_avg_fidelity(const AffineMap<Scalar>& second,
                             const AffineMap<Scalar>& first) {
  return (Scalar(1) + (second.M * first.M).trace() / Scalar(3)) / Scalar(2);
}

/// Monte-Carlo estimate of the Haar average. Samples are drawn in fixed-size
/// blocks whose generators depend only on (seed, block index), so the result
/// is reproducible no matter how blocks would be scheduled across workers.
template <typename Scalar>
FidelityEstimate<Scalar> mc_avg_fidelity(const QubitChannel<Scalar>& ch,
                                         std::int64_t n, std::uint64_t seed) {
  if (n < 100) throw invalid_input_error("mc_avg_fidelity: need at least 100 samples");
  constexpr std::int64_t block_size = 4096;
  Scalar sum{}, sumsq{};
  for (std::int64_t block = 0, done = 0; done < n; ++block) {
    auto rng = make_stream(seed, std::uint64_t(block));
    const std::int64_t m = std::min(block_size, n - done);
    Scalar bsum{}, bsumsq{};
    for (std::int64_t i = 0; i < m; ++i) {
      const Scalar f = fidelity_integrand(ch, haar_bloch_sample<Scalar>(rng));
      bsum += f;
      bsumsq += f * f;
    }
    sum += bsum;
    sumsq += bsumsq;
    done += m;
  }
  FidelityEstimate<Scalar> est;
  est.samples = n;
  est.mean = sum / Scalar(n);
  const Scalar var =
      std::max(Scalar(0), (sumsq - Scalar(n) * est.mean * est.mean) / Scalar(n - 1));
  est.std_error = std::sqrt(var / Scalar(n));
  return est;
}

}  // namespace qinv

#endif  // QINV_FIDELITY_HPP

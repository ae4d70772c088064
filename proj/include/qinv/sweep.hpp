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
// Parameter sweeps over the mixed-rotation and tetrahedron families,
// emitted as deterministic CSV (row-major grid order, 12 significant
// digits, '.' decimal).

#ifndef QINV_SWEEP_HPP
#define QINV_SWEEP_HPP

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "qinv/quasi_inverse.hpp"

namespace qinv::sweep {

struct GridAxis {
  std::string name;
  double lo{};
  double hi{};
  int steps{};
};

struct SweepRequest {
  std::string family;        // "mixed_rotation" or "tetrahedron"
  std::vector<GridAxis> axes;  // empty entries fall back to family defaults
};

namespace detail {

inline std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

inline double grid_point(const GridAxis& ax, int i) {
  return ax.lo + (ax.hi - ax.lo) * double(i) / double(ax.steps - 1);
}

inline void check_axis(const GridAxis& ax, double dlo, double dhi) {
  if (ax.steps < 2)
    throw schema_error("grid axis '" + ax.name + "': need at least 2 steps");
  if (!(ax.lo <= ax.hi))
    throw schema_error("grid axis '" + ax.name + "': empty range");
  if (ax.lo < dlo - 1e-12 || ax.hi > dhi + 1e-12)
    throw schema_error("grid axis '" + ax.name + "': range [" + num(ax.lo) + ", " +
                       num(ax.hi) + "] outside the family domain [" + num(dlo) +
                       ", " + num(dhi) + "]");
}

inline std::string region_label(const QuasiInverseResult<double>& res) {
  if (res.delta_f <= 1e-12) return "identity";
  if (std::abs(res.v_opt.x0) <= 1e-9) return "sigma-axis";
  return "rotation";
}

inline void emit_row(std::ostream& os, double a, double b,
                     const QuasiInverseResult<double>& res) {
  const std::string region = region_label(res);
  double angle = 0.0;
  Vec3<double> axis = Vec3<double>::Zero();
  if (res.delta_f > 1e-12) {
    angle = res.v_opt.angle();
    axis = res.v_opt.axis();
  }
  os << num(a) << ',' << num(b) << ',' << num(res.f_before) << ','
     << num(res.delta_f) << ',' << num(res.f_after) << ',' << num(angle) << ','
     << num(axis[0]) << ',' << num(axis[1]) << ',' << num(axis[2]) << ','
     << region << '\n';
}

}  // namespace detail

/// Parses "name=lo:hi:steps" into a grid axis.
inline GridAxis parse_grid_axis(const std::string& token) {
  const auto eq = token.find('=');
  const auto c1 = token.find(':', eq == std::string::npos ? 0 : eq + 1);
  const auto c2 = c1 == std::string::npos ? std::string::npos : token.find(':', c1 + 1);
  if (eq == std::string::npos || c1 == std::string::npos || c2 == std::string::npos)
    throw schema_error("grid token '" + token + "': expected name=lo:hi:steps");
  GridAxis ax;
  ax.name = token.substr(0, eq);
  try {
    std::size_t used = 0;
    ax.lo = std::stod(token.substr(eq + 1, c1 - eq - 1), &used);
    ax.hi = std::stod(token.substr(c1 + 1, c2 - c1 - 1), &used);
    ax.steps = std::stoi(token.substr(c2 + 1), &used);
  } catch (const std::exception&) {
    throw schema_error("grid token '" + token + "': malformed number");
  }
  return ax;
}

/// Runs the sweep in row-major grid order. Rows outside the tetrahedron
/// triangle p + p' <= 1/2 are omitted.
inline void run_sweep(const SweepRequest& req, std::ostream& os) {
  using namespace detail;
  const auto axis_or = [&req](const std::string& name, GridAxis fallback) {
    for (const auto& ax : req.axes)
      if (ax.name == name) return ax;
    return fallback;
  };

  if (req.family == "mixed_rotation") {
    for (const auto& ax : req.axes)
      if (ax.name != "p" && ax.name != "theta")
        throw schema_error("grid axis '" + ax.name +
                           "': mixed_rotation sweeps over p and theta");
    const GridAxis pa = axis_or("p", {"p", 0.0, 1.0 / 3.0, 101});
    const GridAxis ta = axis_or("theta", {"theta", 0.0, 2.0 * M_PI, 101});
    check_axis(pa, 0.0, 1.0 / 3.0);
    check_axis(ta, 0.0, 2.0 * M_PI);
    os << "p,theta,fidelity_before,delta_f,fidelity_after,angle,axis_x,axis_y,axis_z,region\n";
    for (int i = 0; i < pa.steps; ++i) {
      const double p = grid_point(pa, i);
      for (int j = 0; j < ta.steps; ++j) {
        const double theta = grid_point(ta, j);
        emit_row(os, p, theta, quasi_inverse(make_mixed_rotation(p, theta)));
      }
    }
  } else if (req.family == "tetrahedron") {
    for (const auto& ax : req.axes)
      if (ax.name != "p" && ax.name != "pprime")
        throw schema_error("grid axis '" + ax.name +
                           "': tetrahedron sweeps over p and pprime");
    const GridAxis pa = axis_or("p", {"p", 0.0, 0.5, 201});
    const GridAxis qa = axis_or("pprime", {"pprime", 0.0, 0.5, 201});
    check_axis(pa, 0.0, 0.5);
    check_axis(qa, 0.0, 0.5);
    os << "p,pprime,fidelity_before,delta_f,fidelity_after,angle,axis_x,axis_y,axis_z,region\n";
    for (int i = 0; i < pa.steps; ++i) {
      const double p = grid_point(pa, i);
      for (int j = 0; j < qa.steps; ++j) {
        const double pp = grid_point(qa, j);
        if (p + pp > 0.5 + 1e-12) continue;
        emit_row(os, p, pp, quasi_inverse(make_tetrahedron_slice(p, pp)));
      }
    }
  } else {
    throw schema_error("family '" + req.family +
                       "': expected mixed_rotation or tetrahedron");
  }
}

}  // namespace qinv::sweep

#endif  // QINV_SWEEP_HPP

// Copyright 2026 The trispec Authors
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

#include <span>
#include <vector>

#include "trispec/tridiag.hpp"

namespace trispec {

struct RangeOptions {
  int angles = 360;
  /// Split angle intervals whose end vertices are farther apart than
  /// vertex_gap, until max_angles angles have been evaluated.
  bool adaptive = true;
  double vertex_gap = 1e-6;
  int max_angles = 4096;
};

/// Rotation-method approximation of W(M). For every stored angle theta,
/// support_values holds lambda_max((e^{-i theta} M + e^{i theta} M^*) / 2)
/// and inner_vertices holds <M v, v> for the corresponding unit eigenvector.
/// The inner hull is inscribed in W(M); the half-planes
/// Re(e^{-i theta} z) <= support bound it from outside.
struct RangePolygon {
  std::vector<double> angles;  // ascending, in [0, 2 pi)
  std::vector<double> support_values;
  std::vector<Complex> inner_vertices;
  std::vector<bool> near_degenerate;
  /// Convex hull of inner_vertices (CCW).
  std::vector<Complex> hull;
  bool convexified = false;

  /// True when z satisfies every stored half-plane within slack.
  bool outer_contains(Complex z, double slack) const;
  /// Vertices of the circumscribed polygon (intersections of consecutive
  /// support lines).
  std::vector<Complex> outer_vertices() const;
};

/// Hermitian part of e^{-i theta} M, open boundary only.
TridiagMatrix rotated_hermitian_part(const TridiagMatrix& m, double theta);

RangePolygon range_polygon(const TridiagMatrix& m, const RangeOptions& options = {});
inline RangePolygon range_polygon(const TridiagMatrix& m, int angles) {
  RangeOptions o;
  o.angles = angles;
  return range_polygon(m, o);
}

/// Symmetric Hausdorff distance between finite point sets. Throws
/// std::invalid_argument when either set is empty.
double hausdorff(std::span<const Complex> p, std::span<const Complex> q);

}  // namespace trispec

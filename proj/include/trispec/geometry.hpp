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

#include <numbers>
#include <span>
#include <vector>

#include "trispec/tridiag.hpp"

namespace trispec {

/// Gamma = conv(closed unit disk, {-2, 2}). Its boundary is four segments
/// from +-2 tangent to the unit circle at e^{+-i pi/3}, e^{+-i 2pi/3}, joined
/// by the two unit-circle arcs with |Re z| <= 1/2.
namespace gamma {

inline const Complex kTouchUpperRight = std::polar(1.0, std::numbers::pi / 3.0);
inline const Complex kTouchUpperLeft = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
inline const Complex kTouchLowerLeft = std::polar(1.0, -2.0 * std::numbers::pi / 3.0);
inline const Complex kTouchLowerRight = std::polar(1.0, -std::numbers::pi / 3.0);
/// |slope| of the four tangent segments.
inline constexpr double kSlope = 1.0 / std::numbers::sqrt3;
/// Intersection of the two upper tangent lines, i csc(pi/3); outside Gamma.
inline constexpr Complex kApex{0.0, 2.0 / std::numbers::sqrt3};

}  // namespace gamma

/// Closed-form membership in Gamma dilated by tol (tol may be negative).
bool gamma_contains(Complex z, double tol);

/// m >= 8 points tracing the boundary counterclockwise from 2. The six
/// corner and tangency points are always included; the remaining points are
/// spread over the six pieces in proportion to arclength.
std::vector<Complex> gamma_boundary_samples(int m);

/// Locus |z - focus1| + |z - focus2| = focal_sum.
struct Ellipse {
  Complex focus1;
  Complex focus2;
  double focal_sum = 1.0;

  bool valid() const { return focal_sum >= std::abs(focus1 - focus2); }
};

/// E_x: foci <A_0 x, x> and 2 Re <A_0 x, x>, focal sum 1. Requires
/// ||x|| = 1 +- 1e-12 (std::invalid_argument otherwise).
Ellipse ellipse_from_vector(const SupportedVector& x);

bool ellipse_contains(const Ellipse& e, Complex z, double tol);

/// m points on the ellipse boundary, uniform in the eccentric angle.
std::vector<Complex> ellipse_boundary_samples(const Ellipse& e, int m);

/// Extreme points counterclockwise, starting at the lexicographic minimum
/// (by real, then imaginary part). Collinear and repeated points are dropped.
/// Throws std::invalid_argument for empty input.
std::vector<Complex> convex_hull(std::span<const Complex> points);

/// True when z lies in the convex polygon (CCW vertices) dilated by tol.
bool polygon_contains(std::span<const Complex> hull, Complex z, double tol);

/// `count` points spread uniformly by arclength along the closed polygon.
std::vector<Complex> polygon_boundary_samples(std::span<const Complex> hull, int count);

}  // namespace trispec

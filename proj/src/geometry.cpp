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

#include "trispec/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace trispec {

using std::numbers::pi;

bool gamma_contains(Complex z, double tol) {
  const double x = std::abs(z.real());
  const double y = std::abs(z.imag());
  if (x <= 0.5) return std::abs(z) <= 1.0 + tol;
  if (x <= 2.0 + tol) return y <= (2.0 - x) * gamma::kSlope + tol;
  return false;
}

std::vector<Complex> gamma_boundary_samples(int m) {
  if (m < 8) throw std::invalid_argument("gamma_boundary_samples requires m >= 8");

  // Pieces in counterclockwise order starting at 2; arcs carry their angles.
  struct Piece {
    bool arc;
    Complex from, to;
    double angle_from, angle_to;
    double length;
  };
  const double seg = std::numbers::sqrt3;
  const std::array<Piece, 6> pieces{{
      {false, {2.0, 0.0}, gamma::kTouchUpperRight, 0, 0, seg},
      {true, gamma::kTouchUpperRight, gamma::kTouchUpperLeft, pi / 3.0, 2.0 * pi / 3.0, pi / 3.0},
      {false, gamma::kTouchUpperLeft, {-2.0, 0.0}, 0, 0, seg},
      {false, {-2.0, 0.0}, gamma::kTouchLowerLeft, 0, 0, seg},
      {true, gamma::kTouchLowerLeft, gamma::kTouchLowerRight, 4.0 * pi / 3.0, 5.0 * pi / 3.0,
       pi / 3.0},
      {false, gamma::kTouchLowerRight, {2.0, 0.0}, 0, 0, seg},
  }};
  double perimeter = 0.0;
  for (const auto& p : pieces) perimeter += p.length;

  // Largest-remainder apportionment of the interior points.
  const int extra = m - 6;
  std::array<int, 6> counts{};
  std::array<double, 6> remainders{};
  int assigned = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    const double share = extra * pieces[i].length / perimeter;
    counts[i] = static_cast<int>(std::floor(share));
    remainders[i] = share - counts[i];
    assigned += counts[i];
  }
  while (assigned < extra) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < 6; ++i)
      if (remainders[i] > remainders[best]) best = i;
    ++counts[best];
    remainders[best] = -1.0;
    ++assigned;
  }

  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < 6; ++i) {
    const auto& p = pieces[i];
    out.push_back(p.from);
    for (int j = 1; j <= counts[i]; ++j) {
      const double s = static_cast<double>(j) / (counts[i] + 1);
      if (p.arc) {
        out.push_back(std::polar(1.0, p.angle_from + s * (p.angle_to - p.angle_from)));
      } else {
        out.push_back(p.from + s * (p.to - p.from));
      }
    }
  }
  return out;
}

Ellipse ellipse_from_vector(const SupportedVector& x) {
  if (std::abs(x.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("ellipse_from_vector requires a unit vector");
  const SymbolSequence zero(gen::Constant{Complex(0.0)});
  const Complex lambda = form(zero, x, x);
  return {lambda, Complex(2.0 * lambda.real()), 1.0};
}

bool ellipse_contains(const Ellipse& e, Complex z, double tol) {
  return std::abs(z - e.focus1) + std::abs(z - e.focus2) <= e.focal_sum + tol;
}

std::vector<Complex> ellipse_boundary_samples(const Ellipse& e, int m) {
  if (m < 1) throw std::invalid_argument("ellipse_boundary_samples requires m >= 1");
  if (!e.valid()) throw std::invalid_argument("ellipse focal sum is shorter than the focal distance");
  const Complex center = 0.5 * (e.focus1 + e.focus2);
  const double a = 0.5 * e.focal_sum;
  const double c = 0.5 * std::abs(e.focus2 - e.focus1);
  const double b = std::sqrt(std::max(0.0, a * a - c * c));
  const Complex dir = c > 0.0 ? (e.focus2 - e.focus1) / (2.0 * c) : Complex(1.0);
  std::vector<Complex> out(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const double t = 2.0 * pi * j / m;
    out[static_cast<std::size_t>(j)] = center + dir * Complex(a * std::cos(t), b * std::sin(t));
  }
  return out;
}

namespace {

double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

}  // namespace

std::vector<Complex> convex_hull(std::span<const Complex> points) {
  if (points.empty()) throw std::invalid_argument("convex_hull of an empty set");
  std::vector<Complex> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  std::vector<Complex> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

bool polygon_contains(std::span<const Complex> hull, Complex z, double tol) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return std::abs(z - hull[0]) <= tol;
  if (hull.size() == 2) {
    const Complex d = hull[1] - hull[0];
    const double t = std::clamp(((z - hull[0]) * std::conj(d)).real() / std::norm(d), 0.0, 1.0);
    return std::abs(z - (hull[0] + t * d)) <= tol;
  }
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Complex a = hull[i];
    const Complex b = hull[(i + 1) % hull.size()];
    // signed distance to the left of edge a -> b
    if (cross(a, b, z) / std::abs(b - a) < -tol) return false;
  }
  return true;
}

std::vector<Complex> polygon_boundary_samples(std::span<const Complex> hull, int count) {
  if (hull.empty()) throw std::invalid_argument("polygon_boundary_samples of an empty polygon");
  if (count < 1) throw std::invalid_argument("polygon_boundary_samples requires count >= 1");
  if (hull.size() == 1) return std::vector<Complex>(static_cast<std::size_t>(count), hull[0]);
  const std::size_t n = hull.size();
  std::vector<double> cumulative(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    cumulative[i + 1] = cumulative[i] + std::abs(hull[(i + 1) % n] - hull[i]);
  const double perimeter = cumulative[n];
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(count));
  std::size_t edge = 0;
  for (int j = 0; j < count; ++j) {
    const double s = perimeter * j / count;
    while (edge + 1 < n && cumulative[edge + 1] <= s) ++edge;
    const double len = cumulative[edge + 1] - cumulative[edge];
    const double t = len > 0.0 ? (s - cumulative[edge]) / len : 0.0;
    out.push_back(hull[edge] + t * (hull[(edge + 1) % n] - hull[edge]));
  }
  return out;
}

}  // namespace trispec

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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "trispec/geometry.hpp"
#include "trispec/witness.hpp"

using namespace trispec;
using std::numbers::pi;

TEST_CASE("gamma membership examples") {
  CHECK(gamma_contains(2.0, 0.0));
  CHECK(gamma_contains(-2.0, 0.0));
  CHECK(gamma_contains(std::polar(1.0, pi / 3), 1e-15));
  CHECK(gamma_contains(std::polar(1.0, -2 * pi / 3), 1e-15));
  CHECK(gamma_contains(0.0, 0.0));
  CHECK_FALSE(gamma_contains(Complex(0, 1.0 / std::sin(pi / 3)), 1e-9));
  CHECK_FALSE(gamma_contains(gamma::kApex, 0.1));
  CHECK_FALSE(gamma_contains(2.01, 1e-9));
  CHECK(gamma_contains(Complex(1.0, 0.5), 0.0));
  CHECK_FALSE(gamma_contains(Complex(1.0, 0.6), 0.0));
}

TEST_CASE("gamma boundary samples") {
  const auto eight = gamma_boundary_samples(8);
  CHECK(eight.size() == 8);
  for (Complex must : {Complex(2.0), Complex(-2.0), gamma::kTouchUpperRight, gamma::kTouchUpperLeft,
                       gamma::kTouchLowerLeft, gamma::kTouchLowerRight}) {
    bool found = false;
    for (const auto& s : eight) found = found || std::abs(s - must) <= 1e-15;
    CHECK(found);
  }
  for (int m : {8, 9, 100, 1024}) {
    const auto s = gamma_boundary_samples(m);
    REQUIRE(s.size() == static_cast<std::size_t>(m));
    for (const auto& z : s) {
      CHECK(gamma_contains(z, 1e-12));
      CHECK_FALSE(gamma_contains(z, -1e-6));
      if (std::abs(z.real()) < 0.5 - 1e-12) CHECK(std::abs(std::abs(z) - 1.0) <= 1e-14);
    }
  }
  CHECK_THROWS(gamma_boundary_samples(7));
}

TEST_CASE("convex hull") {
  CHECK(convex_hull(std::vector<Complex>{0.0, 1.0, 2.0}) == std::vector<Complex>{0.0, 2.0});
  const std::vector<Complex> diamond{Complex(0, 2), 2.0, Complex(0, -2), -2.0, 0.0, Complex(0.5, 0.5)};
  CHECK(convex_hull(diamond) == std::vector<Complex>{-2.0, Complex(0, -2), 2.0, Complex(0, 2)});
  CHECK(convex_hull(std::vector<Complex>{Complex(1, 1)}) == std::vector<Complex>{Complex(1, 1)});
  CHECK_THROWS(convex_hull(std::vector<Complex>{}));

  std::vector<Complex> pts;
  for (int j = 0; j < 360; ++j) pts.push_back(std::polar(1.0, 2 * pi * j / 360));
  pts.push_back(2.0);
  pts.push_back(-2.0);
  const auto hull = convex_hull(pts);
  CHECK(convex_hull(hull) == hull);
  std::size_t arc = 0;
  for (const auto& z : hull) {
    if (std::abs(z.real()) == 2.0) continue;
    CHECK(std::abs(z.real()) <= 0.5 + 1e-12);
    ++arc;
  }
  CHECK(arc == 2 * 61);  // angles 60..120 and 240..300 degrees
}

TEST_CASE("polygon membership and boundary samples") {
  const std::vector<Complex> square{0.0, 1.0, Complex(1, 1), Complex(0, 1)};
  CHECK(polygon_contains(square, Complex(0.5, 0.5), 0.0));
  CHECK(polygon_contains(square, Complex(1.0, 0.5), 0.0));
  CHECK_FALSE(polygon_contains(square, Complex(1.1, 0.5), 0.05));
  CHECK(polygon_contains(square, Complex(1.1, 0.5), 0.11));
  const auto samples = polygon_boundary_samples(square, 40);
  CHECK(samples.size() == 40);
  for (const auto& z : samples) {
    CHECK(polygon_contains(square, z, 1e-15));
    const double edge_dist = std::min({z.real(), z.imag(), 1 - z.real(), 1 - z.imag()});
    CHECK(std::abs(edge_dist) <= 1e-15);
  }
}

TEST_CASE("ellipses") {
  const Ellipse e0 = ellipse_from_vector(SupportedVector::unit(3));
  CHECK(e0.focus1 == Complex(0));
  CHECK(e0.focus2 == Complex(0));
  CHECK(ellipse_contains(e0, 0.5, 0.0));
  CHECK_FALSE(ellipse_contains(e0, 0.51, 0.0));
  CHECK_FALSE(ellipse_contains(Ellipse{0.3, 0.6, 1.0}, 1.0, 0.0));
  CHECK(ellipse_contains(Ellipse{0.3, 0.6, 1.0}, 0.45, 0.0));
  CHECK_THROWS(ellipse_from_vector(SupportedVector(0, {Complex(2.0)})));

  const SupportedVector real_x = SupportedVector(0, {1.0, 2.0, -1.0}).normalized();
  const Ellipse er = ellipse_from_vector(real_x);
  CHECK(er.focus1.imag() == 0.0);
  CHECK(std::abs(er.focus2 - 2.0 * er.focus1) <= 1e-15);

  const auto w = disk_witness(Complex(0, 0.5), 1e-13);
  const Ellipse eg = ellipse_from_vector(w.vector);
  CHECK(std::abs(eg.focus1 - Complex(0, 0.5)) <= 1e-12);
  CHECK(std::abs(eg.focus2) <= 1e-12);

  // Rayleigh values over {0,1} sequences lie in E_x, and E_x lies in Gamma
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = oracle::random_vector(rng, 10, 5);
    const Ellipse e = ellipse_from_vector(x);
    CHECK(e.valid());
    const auto b = SymbolSequence::parse("bernoulli:0.5#" + std::to_string(trial));
    CHECK(ellipse_contains(e, rayleigh(b, x), 1e-12));
    for (const auto& z : ellipse_boundary_samples(e, 64)) CHECK(gamma_contains(z, 1e-12));
  }
}

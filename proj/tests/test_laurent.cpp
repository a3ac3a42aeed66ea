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
#include "trispec/laurent.hpp"
#include "trispec/numrange.hpp"

using namespace trispec;
using std::numbers::pi;

namespace {

std::vector<Complex> truncation_eigenvalues(const Word& w, int m) {
  std::string spec = "periodic:";
  for (Symbol s : w) spec += format_symbol(s);
  const auto seq = SymbolSequence::parse(spec + "@0");
  const auto t = section(seq, 0, w.size() * static_cast<std::size_t>(m), Boundary::Periodic);
  return oracle::eigenvalues(oracle::to_eigen(t));
}

Word rotate(Word w, std::size_t k) {
  std::rotate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k % w.size()), w.end());
  return w;
}

}  // namespace

TEST_CASE("roots of unity") {
  CHECK(root_of_unity(0, 7) == Complex(1));
  CHECK(root_of_unity(1, 4) == Complex(0, 1));
  CHECK(root_of_unity(2, 4) == Complex(-1, 0));
  CHECK(root_of_unity(-1, 4) == Complex(0, -1));
  CHECK(std::abs(root_of_unity(1, 6) - std::polar(1.0, pi / 3)) <= 1e-16);
  CHECK_THROWS(root_of_unity(0, 0));
}

TEST_CASE("symbol curves") {
  for (const auto& z : symbol_curve(0.0, 64).samples) CHECK(std::abs(std::abs(z) - 1) <= 1e-15);
  const auto one = symbol_curve(1.0, 64);
  for (std::size_t j = 0; j < one.samples.size(); ++j) {
    CHECK(one.samples[j].imag() == doctest::Approx(0.0));
    CHECK(std::abs(one.samples[j].real() - 2 * std::cos(2 * pi * j / 64)) <= 1e-15);
  }
  for (const auto& z : symbol_curve(-1.0, 64).samples) CHECK(std::abs(z.real()) <= 1e-15);
  CHECK_THROWS(symbol_curve(0.0, 3));
}

TEST_CASE("characteristic polynomial and roots against the companion oracle") {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t p = 1 + static_cast<std::size_t>(trial % 8);
    std::vector<Complex> a(p * p);
    for (auto& z : a) {
      const double re = g(rng);
      const double im = g(rng);
      z = {re, im};
    }
    const auto c = characteristic_polynomial(a, p);
    REQUIRE(c.size() == p + 1);
    CHECK(c.back() == Complex(1));
    oracle::CMat e(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p));
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j)
        e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a[i * p + j];
    CHECK(oracle::cluster_match_error(polynomial_roots(c), oracle::eigenvalues(e)) <= 1e-9);
  }
  // (x - 1)^2 (x + 2)
  const auto r = polynomial_roots({2.0, -3.0, 0.0, 1.0});
  REQUIRE(r.size() == 3);
  CHECK(std::abs(r[0] + 2.0) <= 1e-12);
  CHECK(std::abs(r[1] - 1.0) <= 1e-7);
  CHECK(std::abs(r[2] - 1.0) <= 1e-7);
}

TEST_CASE("periodic spectra of constant words reduce to symbol curves") {
  const auto zero = periodic_spectrum(Word{Symbol(0)}, 360);
  const auto circle = symbol_curve(0.0, 360).samples;
  CHECK(oracle::cluster_match_error(zero.points, circle) <= 1e-14);
  const auto one = periodic_spectrum(Word{Symbol(1)}, 360);
  for (const auto& z : one.points) {
    CHECK(std::abs(z.imag()) <= 1e-15);
    CHECK(std::abs(z.real()) <= 2.0);
  }
  CHECK_THROWS(periodic_spectrum(Word{}, 4));
  CHECK_THROWS(periodic_spectrum(Word(9, Symbol(0)), 4));
}

TEST_CASE("Bloch eigenvalues match periodic truncations") {
  const Word w01{Symbol(0), Symbol(1)};
  const auto s = periodic_spectrum(w01, 64);
  CHECK(s.points.size() == 128);
  CHECK(oracle::cluster_match_error(s.points, truncation_eigenvalues(w01, 64)) <= 1e-9);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Word w(1 + rng() % 4);
    for (auto& x : w) x = Symbol(static_cast<int>(rng() % 2));
    const int m = 1 + static_cast<int>(rng() % 16);
    const auto points = periodic_spectrum(w, m).points;
    CHECK(oracle::cluster_match_error(points, truncation_eigenvalues(w, m)) <= 1e-9);
    for (std::size_t k = 1; k < w.size(); ++k)
      CHECK(oracle::cluster_match_error(points, periodic_spectrum(rotate(w, k), m).points) <= 1e-10);
    for (const auto& z : points) CHECK(gamma_contains(z, 1e-9));
  }
}

TEST_CASE("range closures and constants hulls") {
  CHECK(laurent_range_closure(1.0, 64) == std::vector<Complex>{-2.0, 2.0});
  const auto disk = laurent_range_closure(0.0, 360);
  CHECK(disk.size() == 360);
  const auto ell = laurent_range_closure(Complex(0, 1), 128);
  CHECK(ell == convex_hull(symbol_curve(Complex(0, 1), 128).samples));

  const auto g = constants_hull(Alphabet({Symbol(0), Symbol(1)}), 2048);
  const auto dense = polygon_boundary_samples(g, 8192);
  CHECK(hausdorff(dense, gamma_boundary_samples(8192)) <= 2 * (2 * pi / 2048) + 1e-9);

  const auto diamond = constants_hull(Alphabet({Symbol(-1), Symbol(1)}), 64);
  CHECK(oracle::set_distance(diamond, {2.0, Complex(0, 2), -2.0, Complex(0, -2)}) <= 1e-15);
  CHECK(constants_hull(Alphabet({Symbol(0.5)}), 64) == laurent_range_closure(0.5, 64));
  CHECK_THROWS(constants_hull(Alphabet(std::vector<Symbol>{}), 64));
}

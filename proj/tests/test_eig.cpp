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
#include "trispec/eig.hpp"

using namespace trispec;

namespace {

TridiagMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  TridiagMatrix h;
  for (std::size_t i = 0; i < n; ++i) h.diag.emplace_back(g(rng), 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double re = g(rng);
    const double im = g(rng);
    h.sup.emplace_back(re, im);
    h.sub.push_back(std::conj(h.sup.back()));
  }
  return h;
}

}  // namespace

TEST_CASE("free tridiagonal spectrum in closed form") {
  const std::size_t n = 1000;
  const RealSymTridiag t{std::vector<double>(n, 0.0), std::vector<double>(n - 1, 1.0)};
  const auto eigs = symm_tridiag_eigs(t);
  REQUIRE(eigs.size() == n);
  double worst = 0.0;
  for (std::size_t j = 1; j <= n; ++j)
    worst = std::max(worst, std::abs(eigs[n - j] - 2.0 * std::cos(j * std::numbers::pi / (n + 1))));
  CHECK(worst <= 1e-10);
  const auto ext = symm_tridiag_eigs(t, Which::Extreme);
  CHECK(ext.size() == 2);
  CHECK(ext[1] == eigs.back());
}

TEST_CASE("small closed-form cases") {
  CHECK(symm_tridiag_eigs(RealSymTridiag{{3.5}, {}}) == std::vector<double>{3.5});
  const RealSymTridiag two{{0.0, 0.0}, {1.0}};
  const auto e = symm_tridiag_eigs(two);
  CHECK(std::abs(e[0] + 1.0) <= 1e-15);
  CHECK(std::abs(e[1] - 1.0) <= 1e-15);
  const EigPair top = top_eigpair(two);
  CHECK(std::abs(top.value - 1.0) <= 1e-15);
  CHECK(std::abs(std::abs(top.vector[0]) - M_SQRT1_2) <= 1e-12);
  CHECK(std::abs(top.vector[0] - top.vector[1]) <= 1e-12);
  CHECK(top_eigpair(RealSymTridiag{{5.0}, {}}).value == 5.0);
}

TEST_CASE("random small instances against characteristic polynomial roots") {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    RealSymTridiag t;
    for (std::size_t i = 0; i < n; ++i) t.d.push_back(g(rng));
    for (std::size_t i = 0; i + 1 < n; ++i) t.e.push_back(std::abs(g(rng)));
    auto roots = oracle::companion_roots(oracle::char_poly(t));
    std::vector<double> want;
    for (const auto& r : roots) want.push_back(r.real());
    std::sort(want.begin(), want.end());
    const auto got = symm_tridiag_eigs(t);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(got[i] - want[i]) <= 1e-10);
  }
}

TEST_CASE("sturm counts") {
  const RealSymTridiag t{{0.0, 0.0, 0.0}, {1.0, 1.0}};  // eigenvalues -sqrt2, 0, sqrt2
  CHECK(sturm_count(t, -2.0) == 0);
  CHECK(sturm_count(t, -1.0) == 1);
  CHECK(sturm_count(t, 1.0) == 2);
  CHECK(sturm_count(t, 2.0) == 3);
  CHECK(std::abs(kth_eigenvalue(t, 2) - std::sqrt(2.0)) <= 1e-15);
}

TEST_CASE("phase reduction") {
  TridiagMatrix h;
  h.diag = {0, 0, 0, 0};
  h.sup = {Complex(0, 0.5), Complex(0, 0.5), Complex(0, 0.5)};
  h.sub = {Complex(0, -0.5), Complex(0, -0.5), Complex(0, -0.5)};
  const PhaseReduction pr = phase_reduce(h);
  for (double e : pr.t.e) CHECK(e == 0.5);
  for (std::size_t k = 0; k + 1 < pr.phases.size(); ++k)
    CHECK(std::abs(pr.phases[k + 1] - pr.phases[k] * Complex(0, 1)) <= 1e-15);

  TridiagMatrix bad = h;
  bad.sub[0] = Complex(0, 0.5);
  CHECK_THROWS_AS(phase_reduce(bad), std::invalid_argument);
}

TEST_CASE("complex hermitian top eigenpairs against Eigen") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial) % 30;
    const TridiagMatrix h = random_hermitian(rng, n);
    const auto want = oracle::hermitian_eigenvalues(oracle::to_eigen(h));
    const EigPair top = top_eigpair(h);
    CHECK(std::abs(top.value - want.back()) <= 1e-12 * (1.0 + std::abs(want.back())));
    // residual of the returned vector
    const auto hv = h.multiply(top.vector);
    double res = 0.0, norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      res += std::norm(hv[i] - top.value * top.vector[i]);
      norm += std::norm(top.vector[i]);
    }
    CHECK(std::abs(norm - 1.0) <= 1e-13);
    CHECK(std::sqrt(res) <= 1e-11 * (1.0 + std::abs(top.value)));
  }
  const EigPair free100 = top_eigpair(RealSymTridiag{std::vector<double>(100, 0.0), std::vector<double>(99, 1.0)});
  CHECK(std::abs(free100.value - 2.0 * std::cos(std::numbers::pi / 101)) <= 1e-12);
  CHECK(free100.residual <= 1e-11);
}

TEST_CASE("degenerate top eigenvalue is flagged") {
  const EigPair p = top_eigpair(RealSymTridiag{{1.0, 1.0, -1.0}, {0.0, 0.0}});
  CHECK(p.near_degenerate);
  CHECK(std::abs(p.value - 1.0) <= 1e-15);
  CHECK_FALSE(top_eigpair(RealSymTridiag{{1.0, 0.0}, {0.0}}).near_degenerate);
}

TEST_CASE("smallest singular values against a dense SVD") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial) % 9;
    const auto seq = SymbolSequence(gen::Bernoulli{Alphabet({Symbol(0), Symbol(1), Symbol(-1, 0.5)}),
                                                   {0.4, 0.3, 0.3}, static_cast<std::uint64_t>(trial)});
    const auto m = section(seq, 0, n, Boundary::Open);
    const double zr = g(rng);
    const double zi = g(rng);
    const Complex z(zr, zi);
    oracle::CMat shifted = oracle::to_eigen(m);
    for (Eigen::Index i = 0; i < shifted.rows(); ++i) shifted(i, i) -= z;
    const double want = oracle::min_singular_value(shifted);
    const double got = smallest_singular_value(m, z);
    CHECK(got >= 0.0);
    CHECK(std::abs(got - want) <= 1e-8 * std::max(1.0, want));
  }
  // nilpotent shift: z = 0
  for (std::int64_t n = 1; n <= 8; ++n) {
    const auto m = section(SymbolSequence::parse("constant:0"), 0, static_cast<std::size_t>(n));
    CHECK(std::abs(smallest_singular_value(m, 0.0) - oracle::min_singular_value(oracle::to_eigen(m))) <= 1e-12);
  }
  // at an eigenvalue of a 3x3 instance
  const auto m3 = section(SymbolSequence::parse("periodic:1@0"), 0, 3);
  const auto eig = oracle::eigenvalues(oracle::to_eigen(m3));
  for (const auto& lambda : eig) CHECK(smallest_singular_value(m3, lambda) <= 1e-8);
  // far away
  CHECK(smallest_singular_value(truncate(SymbolSequence::parse("pseudoergodic:{0,1}"), 20), 10.0) >= 7.0);
}

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

// Acceptance checks. Each criterion prints one PASS/FAIL line with the
// measured quantities; the process exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "trispec/eig.hpp"
#include "trispec/experiments.hpp"
#include "trispec/geometry.hpp"
#include "trispec/laurent.hpp"
#include "trispec/numrange.hpp"
#include "trispec/witness.hpp"

using namespace trispec;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Rayleigh values of exact run witnesses over the 9 x 12 polar grid.
void witness_exactness(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::int64_t N = 100000000000LL;
  const auto pe = SymbolSequence::parse("pseudoergodic:{0,1}").cached(-(1 << 20), 1 << 20);
  double worst0 = 0.0, worst1 = 0.0, worst_norm = 0.0;
  for (int i = 1; i <= 9; ++i)
    for (int j = 0; j < 12; ++j) {
      const Complex lam = std::polar(i / 10.0, j * pi / 6);
      const auto x = run_witness(pe, lam, 0, N);
      const auto y = run_witness(pe, lam, 1, N);
      worst0 = std::max(worst0, std::abs(rayleigh(pe, x.vector) - lam));
      worst1 = std::max(worst1, std::abs(rayleigh(pe, y.vector) - 2 * lam.real()));
      worst_norm = std::max({worst_norm, std::abs(x.vector.norm() - 1), std::abs(y.vector.norm() - 1)});
    }
  const double t = seconds_since(t0);
  o.detail << "max zero-run residual " << worst0 << ", max one-run residual " << worst1
           << ", max norm error " << worst_norm << ", " << t << " s";
  o.require(worst0 <= 1e-12 && worst1 <= 1e-12, "residual > 1e-12");
  o.require(worst_norm <= 1e-13, "norm");
  o.require(t < 10.0, "runtime");
}

std::vector<SymbolSequence> random_binary_sequences(int count, std::uint64_t seed) {
  std::vector<SymbolSequence> out;
  for (int i = 0; i < count; ++i)
    out.push_back(SymbolSequence::parse("bernoulli:0.5#" + std::to_string(seed + static_cast<std::uint64_t>(i))));
  return out;
}

void report_gamma_check(Outcome& o, const GammaCheckReport& r) {
  int rf = 0, ef = 0;
  double excess = -INFINITY;
  for (const auto& row : r.rows) {
    rf += row.rayleigh_failures;
    ef += row.ellipse_failures;
    excess = std::max(excess, row.max_excess);
  }
  o.detail << r.rows.size() << " sequences, rayleigh failures " << rf << ", ellipse failures " << ef
           << ", max excess " << excess;
  o.require(r.passed(), "containment");
}

// Random unit vectors: Rayleigh values and ellipse traces inside Gamma.
void gamma_containment(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  GammaCheckOptions opt;
  opt.vectors = 10000;
  opt.ellipse_samples = 64;
  opt.tol = 1e-9;
  opt.seed = 2;
  report_gamma_check(o, gamma_check(random_binary_sequences(10, 100), opt));
  const double t = seconds_since(t0);
  o.detail << ", " << t << " s";
  o.require(t < 30.0, "runtime");
}

// Inner numerical-range hulls of pseudoergodic truncations approach Gamma.
// The longest 1-run of the enumeration inside [-1024, 1024] has length 7,
// which keeps the hull about 0.12 away from +-2 at n = 1024; the 0.1 bound
// is checked at n = 2048, the first doubling that reaches it.
void desk_scale_equality(Outcome& o) {
  const auto pe = SymbolSequence::parse("pseudoergodic:{0,1}");
  const auto gamma_pts = gamma_boundary_samples(1024);
  std::vector<double> dist;
  for (std::int64_t n : {64, 256, 1024, 2048}) {
    const RangePolygon p = range_polygon(truncate(pe, n), 360);
    const auto boundary = polygon_boundary_samples(p.hull, 4096);
    dist.push_back(hausdorff(boundary, gamma_pts));
    o.detail << "n=" << n << ": " << dist.back() << "; ";
  }
  o.require(dist.back() <= 0.1, "distance at n=2048 exceeds 0.1");
  o.require(std::is_sorted(dist.rbegin(), dist.rend()), "not monotone");
}

// Truncations of the free shift and the constants hull of {0,1}.
void laurent_identities(Outcome& o) {
  const auto zero = SymbolSequence::parse("constant:0");
  double worst = 0.0;
  for (std::size_t n : {10, 100, 1000}) {
    RangeOptions ro;
    ro.angles = 32;
    ro.adaptive = false;
    const RangePolygon p = range_polygon(section(zero, 0, n), ro);
    const double radius = std::cos(pi / static_cast<double>(n + 1));
    for (double s : p.support_values) worst = std::max(worst, std::abs(s - radius));
  }
  const int m = 2048;
  const auto hull = constants_hull(Alphabet({Symbol(0), Symbol(1)}), m);
  const double d = hausdorff(polygon_boundary_samples(hull, 4 * m), gamma_boundary_samples(4 * m));
  const double bound = 2 * (2 * pi / m) + 1e-9;
  o.detail << "max radius error " << worst << ", hull distance " << d << " (bound " << bound << ")";
  o.require(worst <= 1e-8, "radius");
  o.require(d <= bound, "hull distance");
}

// Symmetric tridiagonal eigenvalues against closed forms and brute force.
void eigensolver_oracle(Outcome& o) {
  const std::size_t n = 1000;
  RealSymTridiag free{std::vector<double>(n, 0.0), std::vector<double>(n - 1, 1.0)};
  const auto eigs = symm_tridiag_eigs(free);
  double worst = 0.0;
  for (std::size_t j = 1; j <= n; ++j)
    worst = std::max(worst, std::abs(eigs[j - 1] - 2 * std::cos(static_cast<double>(n + 1 - j) * pi / (n + 1))));
  std::mt19937_64 rng(77);
  std::normal_distribution<double> g;
  double worst_small = 0.0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t k = 1 + static_cast<std::size_t>(trial % 6);
    RealSymTridiag t;
    for (std::size_t i = 0; i < k; ++i) t.d.push_back(g(rng));
    for (std::size_t i = 0; i + 1 < k; ++i) t.e.push_back(g(rng));
    std::vector<double> want;
    for (const auto& r : oracle::companion_roots(oracle::char_poly(t))) want.push_back(r.real());
    std::sort(want.begin(), want.end());
    const auto got = symm_tridiag_eigs(t);
    for (std::size_t i = 0; i < k; ++i) worst_small = std::max(worst_small, std::abs(got[i] - want[i]));
  }
  o.detail << "n=1000 max error " << worst << ", 600 random n<=6 max error " << worst_small;
  o.require(worst <= 1e-10, "n=1000");
  o.require(worst_small <= 1e-10, "random instances");
}

std::vector<Word> binary_words(int max_len) {
  return all_words(Alphabet({Symbol(0), Symbol(1)}), max_len);
}

// Shift covariance of Rayleigh values and cyclic invariance of Bloch spectra.
void shift_covariance(Outcome& o) {
  std::mt19937_64 rng(6);
  const auto seqs = std::vector<SymbolSequence>{SymbolSequence::parse("pseudoergodic:{0,1}"),
                                                SymbolSequence::parse("bernoulli:0.3#8"),
                                                SymbolSequence::parse("sturmian:0.6180339887498949,0")};
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto& seq = seqs[static_cast<std::size_t>(trial) % seqs.size()];
    const auto x = oracle::random_vector(rng, 20, 60);
    const std::int64_t k = std::uniform_int_distribution<int>(-1000, 1000)(rng);
    worst = std::max(worst, std::abs(rayleigh(seq.shift(k), x) - rayleigh(seq, x.shifted(-k))));
  }
  double cyclic = 0.0;
  for (const Word& w : binary_words(4)) {
    const auto base = periodic_spectrum(w, 16).points;
    Word r = w;
    for (std::size_t k = 1; k < w.size(); ++k) {
      std::rotate(r.begin(), r.begin() + 1, r.end());
      cyclic = std::max(cyclic, oracle::cluster_match_error(base, periodic_spectrum(r, 16).points));
    }
  }
  o.detail << "100 pairs max difference " << worst << ", cyclic rotation max mismatch " << cyclic;
  o.require(worst <= 1e-14, "covariance");
  o.require(cyclic <= 1e-10, "cyclic invariance");
}

// Bloch spectra against dense periodic truncations.
void bloch_exactness(Outcome& o) {
  double worst = 0.0;
  int cases = 0;
  for (const Word& w : binary_words(3))
    for (int m = 1; m <= 8; ++m) {
      std::string spec = "periodic:";
      for (Symbol s : w) spec += format_symbol(s);
      const auto t = section(SymbolSequence::parse(spec + "@0"), 0, w.size() * static_cast<std::size_t>(m),
                             Boundary::Periodic);
      worst = std::max(worst, oracle::cluster_match_error(periodic_spectrum(w, m).points,
                                                          oracle::eigenvalues(oracle::to_eigen(t))));
      ++cases;
    }
  o.detail << cases << " (word, m) cases, max mismatch " << worst;
  o.require(worst <= 1e-9, "mismatch");
}

// Sturmian sequences: bounded runs, failing witnesses, containment still holds.
void sturmian_control(Outcome& o) {
  const auto st = SymbolSequence::parse("sturmian:0.6180339887498949,0");
  const std::int64_t N = 100000;
  const Run r0 = longest_constant_run(st, Symbol(0), N);
  const Run r1 = longest_constant_run(st, Symbol(1), N);
  // the isolated symbol is the one whose longest run is shorter
  const Symbol isolated = r0.length <= r1.length ? Symbol(0) : Symbol(1);
  const std::int64_t bound = std::min(r0.length, r1.length);
  o.detail << "longest 0-run " << r0.length << ", longest 1-run " << r1.length << "; ";
  o.require(std::max(r0.length, r1.length) <= 2, "runs longer than 2");

  int errors = 0, attempts = 0;
  for (double r : {0.6, 0.75, 0.9}) {
    if (choose_k0(r) <= bound) continue;
    ++attempts;
    try {
      run_witness(st, r, isolated == Symbol(0) ? 0 : 1, N);
    } catch (const WitnessError& e) {
      if (e.longest_run() == bound) ++errors;
    }
  }
  o.detail << errors << "/" << attempts << " witnesses beyond the bound rejected; ";
  o.require(attempts > 0 && errors == attempts, "witness errors");

  GammaCheckOptions opt;
  opt.vectors = 10000;
  opt.tol = 1e-9;
  opt.seed = 3;
  std::vector<SymbolSequence> seqs;
  for (int k = 0; k < 10; ++k) seqs.push_back(st.shift(1000 * k));
  report_gamma_check(o, gamma_check(seqs, opt));
}

// The {-1, 1} hopping model.
void hopping_hull(Outcome& o) {
  const Alphabet pm({Symbol(-1), Symbol(1)});
  const auto hull = constants_hull(pm, 2048);
  const std::vector<Complex> diamond{2.0, Complex(0, 2), -2.0, Complex(0, -2)};
  const double d = hausdorff(polygon_boundary_samples(hull, 4096), polygon_boundary_samples(diamond, 4096));
  std::mt19937_64 rng(10);
  int outside = 0;
  for (int s = 0; s < 10; ++s) {
    const auto seq = SymbolSequence::parse("bernoulli:{-1,1}:0.5,0.5#" + std::to_string(s));
    for (int v = 0; v < 1000; ++v)
      if (!polygon_contains(hull, rayleigh(seq, oracle::random_vector(rng, 24, 64)), 1e-9)) ++outside;
  }
  o.detail << "hull distance to diamond " << d << ", Rayleigh values outside " << outside << "/10000";
  o.require(d <= 1e-12, "hull");
  o.require(outside == 0, "containment");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"witness exactness", witness_exactness},
      {"gamma containment", gamma_containment},
      {"desk-scale equality", desk_scale_equality},
      {"laurent identities", laurent_identities},
      {"eigensolver oracle", eigensolver_oracle},
      {"shift covariance", shift_covariance},
      {"bloch exactness", bloch_exactness},
      {"sturmian negative control", sturmian_control},
      {"hopping-model hull", hopping_hull},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    o.detail.precision(3);
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    if (!o.pass) ++failures;
    std::printf("criterion %zu (%s): %s -- %s\n", i + 1, criteria[i].first.c_str(), o.pass ? "PASS" : "FAIL",
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}

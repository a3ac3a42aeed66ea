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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "trispec/symbolic.hpp"
#include "trispec/tridiag.hpp"

namespace trispec {

/// How far z lies outside conv(closed unit disk, [-2, 2]); <= 0 inside.
/// gamma_contains(z, tol) holds exactly when gamma_excess(z) <= tol.
double gamma_excess(Complex z);

/// Unit vector with complex Gaussian entries on a random window
/// [offset, offset + length), length in [1, max_support], |offset| <= max_offset.
SupportedVector random_unit_vector(std::mt19937_64& rng, int max_support, int max_offset);

struct GammaCheckOptions {
  int vectors = 1000;  // per sequence
  int max_support = 24;
  int max_offset = 64;
  int ellipse_samples = 64;
  double tol = 1e-9;
  std::uint64_t seed = 1;
};

struct GammaCheckRow {
  std::string seq;
  int vectors = 0;
  int rayleigh_failures = 0;
  int ellipse_failures = 0;
  double max_excess = -1.0;  // over Rayleigh values and ellipse samples
};

struct GammaCheckReport {
  std::vector<GammaCheckRow> rows;
  bool passed() const;
};

/// Rayleigh values and ellipse traces of random unit vectors against Gamma.
/// Each sequence gets its own generator seeded from (seed, index), so rows
/// are independent of thread count.
GammaCheckReport gamma_check(const std::vector<SymbolSequence>& seqs, const GammaCheckOptions& options);

/// Smallest singular value of the truncation minus z over a square grid of
/// side `grid` covering [-extent, extent]^2, row-major from the top left.
struct SigmaGrid {
  int grid = 0;
  double extent = 0.0;
  std::vector<Complex> points;
  std::vector<double> sigma;
};
SigmaGrid sigma_min_grid(const TridiagMatrix& m, int grid, double extent);

/// All words of length 1..max_length over the alphabet, shortest first,
/// lexicographic in alphabet order within a length.
std::vector<Word> all_words(const Alphabet& alphabet, int max_length);

struct ConjectureReport {
  std::size_t words = 0;
  std::size_t union_points = 0;
  std::size_t pseudo_points = 0;
  /// Hausdorff distance between the periodic spectra union and the
  /// eps-pseudospectrum grid points; negative when either set is empty.
  double hausdorff = -1.0;
};

/// Exploratory comparison of periodic spectra unions with a truncation
/// pseudospectrum. Reports numbers only.
ConjectureReport conjecture_report(const Alphabet& alphabet, int max_period, int m,
                                   const SigmaGrid& sigma, double eps);

}  // namespace trispec

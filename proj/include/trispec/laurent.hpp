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

#include <vector>

#include "trispec/symbolic.hpp"

namespace trispec {

// Laurent (constant sequence) and periodic operators. The symbol of the
// constant sequence a is e^{it} + a e^{-it}; the operator is normal, so the
// closure of its numerical range is the convex hull of the symbol curve.

struct SymbolCurve {
  Complex a;
  std::vector<Complex> samples;
};

struct BlochSpectrum {
  Word word;
  int m = 0;
  /// p * m eigenvalues, grouped by phase index j (omega = e^{2 pi i j / m}),
  /// each group sorted by (re, im).
  std::vector<Complex> points;
};

/// e^{2 pi i j / m}, exact at multiples of a quarter turn.
Complex root_of_unity(long long j, long long m);

/// Samples e^{i t_j} + a e^{-i t_j}, t_j = 2 pi j / m; requires m >= 4.
SymbolCurve symbol_curve(Complex a, int m);

/// p x p Bloch matrix (row-major) of the periodic word w at phase omega:
/// superdiagonal 1, subdiagonal w_0..w_{p-2}, entry (p-1, 0) += omega and
/// entry (0, p-1) += w_{p-1} conj(omega).
std::vector<Complex> bloch_matrix(const Word& w, Complex omega);

/// Coefficients c_0..c_p (c_p = 1) of det(lambda I - B) for a dense p x p
/// matrix, p <= 8.
std::vector<Complex> characteristic_polynomial(const std::vector<Complex>& dense, std::size_t p);

/// All roots of a monic-or-not polynomial given low-to-high coefficients.
/// Laguerre iteration with deflation, Newton polish on the original
/// polynomial; near-coincident roots are replaced by their mean.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

/// Union over the m-th roots of unity of the Bloch eigenvalues; equals the
/// spectrum of the size p*m periodic-boundary truncation. Requires
/// 1 <= len(w) <= 8 and m >= 1.
BlochSpectrum periodic_spectrum(const Word& w, int m);

/// Convex hull of symbol_curve(a, m); requires m >= 8.
std::vector<Complex> laurent_range_closure(Complex a, int m);

/// Convex hull of the union of all symbol curves of the alphabet; requires
/// m >= 8.
std::vector<Complex> constants_hull(const Alphabet& alphabet, int m);

}  // namespace trispec

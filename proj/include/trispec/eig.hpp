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

#include <cstddef>
#include <vector>

#include "trispec/tridiag.hpp"

namespace trispec {

/// Eigen-engine tolerances.
struct EigTolerances {
  /// Relative eigenvalue and eigen-residual tolerance.
  static constexpr double eig = 1e-12;
  /// Relative accuracy target for smallest singular values.
  static constexpr double sigma = 1e-8;
  /// Top eigenvalue closer than this to the next one is flagged.
  static constexpr double near_degenerate = 1e-10;
  static constexpr int inverse_iteration_cap = 4;
};

/// Real symmetric tridiagonal matrix: diagonal d, off-diagonal e (e_k >= 0
/// after phase reduction).
struct RealSymTridiag {
  std::vector<double> d;
  std::vector<double> e;

  std::size_t size() const { return d.size(); }
  /// ||d||_inf + 2 ||e||_inf.
  double scale() const;
  std::vector<double> multiply(const std::vector<double>& v) const;
};

struct PhaseReduction {
  RealSymTridiag t;
  /// Unit phases p with T = D H D^*, D = diag(p), p_0 = 1.
  std::vector<Complex> phases;
};

/// Reduces an open-boundary Hermitian tridiagonal matrix to real symmetric
/// form with nonnegative off-diagonal. Throws std::invalid_argument when the
/// input is not Hermitian or has periodic boundary.
PhaseReduction phase_reduce(const TridiagMatrix& h);

/// Number of eigenvalues strictly below x (Sturm sequence sign count).
std::size_t sturm_count(const RealSymTridiag& t, double x);

/// k-th smallest eigenvalue (0-based) by bisection.
double kth_eigenvalue(const RealSymTridiag& t, std::size_t k);

enum class Which { All, Extreme };

/// Ascending eigenvalues. Which::Extreme returns {min, max} (one value for n = 1).
std::vector<double> symm_tridiag_eigs(const RealSymTridiag& t, Which which = Which::All);

struct EigPair {
  double value = 0.0;
  std::vector<Complex> vector;
  /// Top eigenvalue within EigTolerances::near_degenerate of the second.
  bool near_degenerate = false;
  double residual = 0.0;
};

/// Largest eigenvalue and a unit eigenvector (inverse iteration shifted by the
/// bisection eigenvalue).
EigPair top_eigpair(const RealSymTridiag& t);

/// Same for a Hermitian tridiagonal matrix; the vector is mapped back
/// through the phase reduction.
EigPair top_eigpair(const TridiagMatrix& hermitian);

/// sigma_min(M - zI) for an open-boundary tridiagonal M, by bisection on
/// block Sturm counts of the Hermitian dilation [[0, B], [B^*, 0]] ordered
/// as (x_0, y_0, x_1, y_1, ...), which is block tridiagonal with 2x2 blocks.
double smallest_singular_value(const TridiagMatrix& m, Complex z);

}  // namespace trispec

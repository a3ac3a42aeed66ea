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
#include <optional>
#include <stdexcept>
#include <string>

#include "trispec/symbolic.hpp"
#include "trispec/tridiag.hpp"

namespace trispec {

/// Constructive witnesses: finitely supported unit vectors whose Rayleigh
/// quotient for A_b is a prescribed number.
///
/// A run witness for lambda = r e^{i theta} sits on a run of k0 equal symbols
/// b_{j0+1} = ... = b_{j0+k0} = s:
///
///   x_k = sqrt(1 - t0^2) t0^{k-j0-1} e^{i theta (k-j0)}   for j0 < k < j0+k0+2
///   x_k = t0^{k0+1}                                       for k = j0+k0+3
///
/// where t0 solves t - t^{2k0+1} = r. Then ||x|| = 1 and
/// <A_b x, x> = lambda + s conj(lambda): lambda on a run of zeros and
/// 2 Re(lambda) on a run of ones.

enum class WitnessKind { DiskShift, ZeroRun, OneRun, ConvexMix };

std::string to_string(WitnessKind kind);

struct WitnessParams {
  double r = 0.0;
  double theta = 0.0;
  int k0 = 0;
  double t0 = 0.0;
  /// Index just before the run (j0, or l0 for runs of ones).
  std::int64_t j0 = 0;
};

/// Decomposition z = alpha2 * lambda + (1 - alpha2) * 2 mu used by
/// convex_witness.
struct MixParams {
  double alpha2 = 1.0;
  Complex lambda;
  double mu = 0.0;
  WitnessParams zero_part;
  WitnessParams one_part;
};

struct WitnessVector {
  SupportedVector vector;
  Complex target;
  WitnessKind kind = WitnessKind::DiskShift;
  WitnessParams params;
  std::optional<MixParams> mix;
};

/// No run long enough in the scanned window; carries the longest run found.
class WitnessError : public std::runtime_error {
 public:
  WitnessError(const std::string& what, std::int64_t longest_run)
      : std::runtime_error(what), longest_run_(longest_run) {}
  std::int64_t longest_run() const { return longest_run_; }

 private:
  std::int64_t longest_run_;
};

/// Smallest k0 >= 1 with (1 - r)/2 > ((r + 1)/2)^{2 k0 + 1}; r in (0, 1).
int choose_k0(double r);

/// Root of t - t^{2k0+1} - r in (r, (r+1)/2) by bisection. Throws
/// std::domain_error when the bracket has no sign change.
double solve_t0(double r, int k0);

/// The run-witness vector for given parameters (see above).
SupportedVector run_vector(double t0, int k0, double theta, std::int64_t j0);

inline constexpr std::int64_t kDefaultWitnessWindow = 100000;

/// Run witness on a run of `symbol` (0 or 1) of length >= k0 in [-N, N]:
/// the leftmost one among indices |k| <= 2^20, else the occurrence of
/// symbol^k0 known to the generator (pseudoergodic sequences list every
/// word), else the leftmost with |k| <= 2^24. Pass a cached sequence to make
/// repeated scans cheap. lambda = 0 yields e_0. Throws std::invalid_argument for
/// |lambda| >= 1 or a symbol outside the alphabet, WitnessError when no run
/// is long enough.
WitnessVector run_witness(const SymbolSequence& seq, Complex lambda, int symbol,
                          std::int64_t N = kDefaultWitnessWindow);

/// Truncated geometric vector sqrt(1-|lambda|^2) lambda^k, k = 0..K, with K
/// the smallest index satisfying |lambda|^{2K} <= tol (1 - |lambda|^2);
/// renormalized. |<A_0 x, x> - lambda| <= tol.
WitnessVector disk_witness(Complex lambda, double tol);

/// Witness for an interior point z of conv(D, [-2, 2]) built from a zero-run
/// part and a one-run part with supports at least two indices apart. The
/// decomposition minimizes max(|lambda|, |mu|), i.e. the run lengths needed.
WitnessVector convex_witness(const SymbolSequence& seq, Complex z,
                             std::int64_t N = kDefaultWitnessWindow);

}  // namespace trispec

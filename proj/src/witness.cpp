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

#include "trispec/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace trispec {

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::DiskShift:
      return "disk_shift";
    case WitnessKind::ZeroRun:
      return "zero_run";
    case WitnessKind::OneRun:
      return "one_run";
    case WitnessKind::ConvexMix:
      return "convex_mix";
  }
  return "unknown";
}

int choose_k0(double r) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("choose_k0 requires 0 < r < 1");
  const double lhs = 0.5 * (1.0 - r);
  const double base = 0.5 * (r + 1.0);
  double power = base * base * base;  // base^{2k0+1} at k0 = 1
  for (int k0 = 1; k0 < std::numeric_limits<int>::max() / 2; ++k0) {
    if (lhs > power) return k0;
    power *= base * base;
  }
  throw std::domain_error("choose_k0: no admissible k0");
}

double solve_t0(double r, int k0) {
  if (!(r > 0.0 && r < 1.0) || k0 < 1) throw std::invalid_argument("solve_t0 requires 0 < r < 1, k0 >= 1");
  const int degree = 2 * k0 + 1;
  auto f = [&](double t) { return t - std::pow(t, degree) - r; };
  double lo = r;
  double hi = 0.5 * (r + 1.0);
  if (!(f(lo) < 0.0 && f(hi) > 0.0))
    throw std::domain_error("solve_t0: no sign change on [r, (r+1)/2]; k0 too small for r");
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::abs(f(lo)) <= std::abs(f(hi)) ? lo : hi;
}

SupportedVector run_vector(double t0, int k0, double theta, std::int64_t j0) {
  // support j0+1 .. j0+k0+1, a zero at j0+k0+2, tail at j0+k0+3
  std::vector<Complex> values(static_cast<std::size_t>(k0) + 3);
  const double scale = std::sqrt((1.0 - t0) * (1.0 + t0));
  for (int m = 0; m <= k0; ++m)
    values[static_cast<std::size_t>(m)] = scale * std::pow(t0, m) * std::polar(1.0, theta * (m + 1));
  values[static_cast<std::size_t>(k0) + 2] = Complex(std::pow(t0, k0 + 1));
  return SupportedVector(j0 + 1, std::move(values));
}

namespace {

WitnessVector zero_witness(std::int64_t k) {
  WitnessVector w;
  w.vector = SupportedVector::unit(k);
  w.target = Complex{};
  w.kind = WitnessKind::DiskShift;
  return w;
}

void check_symbol(const SymbolSequence& seq, int symbol) {
  if (symbol != 0 && symbol != 1) throw std::invalid_argument("run witness symbol must be 0 or 1");
  if (!seq.alphabet().contains(Symbol(symbol)))
    throw std::invalid_argument("run witness symbol is not in the sequence alphabet");
}

struct RunPlan {
  WitnessParams params;
  std::int64_t first = 0;  // support first index
  std::int64_t last = 0;   // support last index
};

RunPlan plan_run(Complex lambda, std::int64_t j0) {
  RunPlan p;
  p.params.r = std::abs(lambda);
  p.params.theta = std::arg(lambda);
  p.params.k0 = choose_k0(p.params.r);
  p.params.t0 = solve_t0(p.params.r, p.params.k0);
  p.params.j0 = j0;
  p.first = j0 + 1;
  p.last = j0 + p.params.k0 + 3;
  return p;
}

/// Indices |k| <= kLinearScan are searched entry by entry; beyond that the
/// generator's own construction is asked for an occurrence of the run, and
/// the entry-by-entry search resumes only out to kFarScan.
constexpr std::int64_t kLinearScan = std::int64_t{1} << 20;
constexpr std::int64_t kFarScan = std::int64_t{1} << 24;

bool clear_of(std::int64_t first, std::int64_t last,
              const std::optional<std::pair<std::int64_t, std::int64_t>>& avoid) {
  return !avoid || first >= avoid->second + 2 || last <= avoid->first - 2;
}

/// j0 of a run of `symbol` of length k0 inside [-N, N] whose witness support
/// [j0+1, j0+k0+3] keeps distance >= 2 from `avoid`. Leftmost within the
/// linearly scanned part; otherwise the generator's occurrence of symbol^k0,
/// and only then the part of the window with |k| <= kFarScan.
std::optional<std::int64_t> locate_run(const SymbolSequence& seq, Symbol symbol, int k0,
                                       std::int64_t N,
                                       std::optional<std::pair<std::int64_t, std::int64_t>> avoid) {
  auto scan = [&](std::int64_t lo, std::int64_t hi) -> std::optional<std::int64_t> {
    std::int64_t from = lo;
    while (from <= hi) {
      const auto start = find_run(seq, symbol, k0, from, hi);
      if (!start) return std::nullopt;
      const std::int64_t j0 = *start - 1;
      if (clear_of(j0 + 1, j0 + k0 + 3, avoid)) return j0;
      from = *start + 1;
    }
    return std::nullopt;
  };
  const std::int64_t near = std::min(N, kLinearScan);
  if (auto j0 = scan(-near, near)) return j0;
  if (N == near) return std::nullopt;

  if (const auto hit = generator_occurrence(seq, Word(static_cast<std::size_t>(k0), symbol))) {
    const std::int64_t j0 = *hit - 1;
    if (*hit >= -N && *hit + k0 - 1 <= N && clear_of(j0 + 1, j0 + k0 + 3, avoid)) return j0;
  }
  const std::int64_t far = std::min(N, kFarScan);
  if (auto j0 = scan(-far, -near - 1)) return j0;
  return scan(near + 1, far);
}

[[noreturn]] void no_run(const SymbolSequence& seq, Symbol symbol, int k0, std::int64_t N) {
  const std::int64_t scanned = std::min(N, kLinearScan);
  const Run longest = longest_constant_run(seq, symbol, scanned);
  throw WitnessError("no run of " + format_symbol(symbol) + " of length " + std::to_string(k0) +
                         " in [-" + std::to_string(N) + ", " + std::to_string(N) +
                         "]; longest in [-" + std::to_string(scanned) + ", " + std::to_string(scanned) +
                         "] is " + std::to_string(longest.length),
                     longest.length);
}

}  // namespace

WitnessVector run_witness(const SymbolSequence& seq, Complex lambda, int symbol, std::int64_t N) {
  check_symbol(seq, symbol);
  if (N < 1) throw std::invalid_argument("run_witness requires N >= 1");
  const double r = std::abs(lambda);
  if (!(r < 1.0)) throw std::invalid_argument("run_witness requires |lambda| < 1");
  if (r == 0.0) return zero_witness(0);

  const int k0 = choose_k0(r);
  const auto j0 = locate_run(seq, Symbol(symbol), k0, N, std::nullopt);
  if (!j0) no_run(seq, Symbol(symbol), k0, N);

  const RunPlan plan = plan_run(lambda, *j0);
  WitnessVector w;
  w.params = plan.params;
  w.vector = run_vector(plan.params.t0, plan.params.k0, plan.params.theta, plan.params.j0);
  w.kind = symbol == 0 ? WitnessKind::ZeroRun : WitnessKind::OneRun;
  w.target = symbol == 0 ? lambda : Complex(2.0 * lambda.real());
  return w;
}

WitnessVector disk_witness(Complex lambda, double tol) {
  const double r = std::abs(lambda);
  if (!(r < 1.0)) throw std::invalid_argument("disk_witness requires |lambda| < 1");
  if (!(tol > 0.0)) throw std::invalid_argument("disk_witness requires tol > 0");
  if (r == 0.0) return zero_witness(0);

  const double rho = r * r;
  const double k_real = std::ceil(std::log(tol * (1.0 - rho)) / std::log(rho));
  if (!(k_real < 1e7)) throw std::invalid_argument("disk_witness: |lambda| too close to 1 for tol");
  const auto K = static_cast<std::size_t>(std::max(1.0, k_real));

  std::vector<Complex> values(K + 1);
  const double scale = std::sqrt((1.0 - r) * (1.0 + r));
  Complex power(1.0);
  for (std::size_t k = 0; k <= K; ++k) {
    values[k] = scale * power;
    power *= lambda;
  }
  WitnessVector w;
  w.vector = SupportedVector(0, std::move(values)).normalized();
  w.target = lambda;
  w.kind = WitnessKind::DiskShift;
  w.params.r = r;
  w.params.theta = std::arg(lambda);
  w.params.k0 = static_cast<int>(K);
  w.params.j0 = -1;
  return w;
}

namespace {

struct Decomposition {
  double alpha2 = 1.0;
  Complex lambda;
  double mu = 0.0;
  double cost = std::numeric_limits<double>::infinity();
};

/// z = a lambda + (1 - a) 2 mu with |lambda| < 1, |mu| < 1, minimizing
/// max(|lambda|, |mu|): coarse grid over (a, mu), then local refinement.
Decomposition decompose(Complex z) {
  Decomposition best;
  auto consider = [&](double a, double mu) {
    if (a < 0.0 || a > 1.0 || std::abs(mu) >= 1.0) return;
    double cost;
    Complex lambda;
    if (a == 0.0) {
      if (std::abs(z - 2.0 * mu) > 0.0) return;
      cost = std::abs(mu);
    } else {
      lambda = (z - (1.0 - a) * 2.0 * mu) / a;
      cost = std::max(std::abs(lambda), std::abs(mu));
    }
    if (cost < best.cost) best = {a, lambda, mu, cost};
  };

  if (z.imag() == 0.0 && std::abs(z.real()) < 2.0) consider(0.0, 0.5 * z.real());
  for (int i = 1; i <= 200; ++i)
    for (int j = -200; j <= 200; ++j) consider(i / 200.0, j / 200.5);

  double da = 1.0 / 200.0, dm = 1.0 / 200.5;
  for (int round = 0; round < 40 && best.alpha2 > 0.0; ++round) {
    const double a0 = best.alpha2, m0 = best.mu;
    for (int i = -4; i <= 4; ++i)
      for (int j = -4; j <= 4; ++j) consider(a0 + i * da / 4.0, m0 + j * dm / 4.0);
    da /= 2.0;
    dm /= 2.0;
  }
  return best;
}

}  // namespace

WitnessVector convex_witness(const SymbolSequence& seq, Complex z, std::int64_t N) {
  if (z == Complex{}) return zero_witness(0);
  check_symbol(seq, 0);
  check_symbol(seq, 1);

  const Decomposition d = decompose(z);
  if (!(d.cost < 1.0)) throw std::invalid_argument("convex_witness: no decomposition; z is not interior");

  const double a = d.alpha2;
  const double alpha = std::sqrt(a);
  const double beta = std::sqrt(1.0 - a);

  MixParams mix;
  mix.alpha2 = a;
  mix.lambda = d.lambda;
  mix.mu = d.mu;

  SupportedVector zero_part, one_part;
  std::optional<std::pair<std::int64_t, std::int64_t>> zero_support;
  const bool need_zero = a > 0.0;
  const bool need_one = a < 1.0;

  if (need_zero && d.lambda != Complex{}) {
    const int k0 = choose_k0(std::abs(d.lambda));
    const auto j0 = locate_run(seq, Symbol(0.0), k0, N, std::nullopt);
    if (!j0) no_run(seq, Symbol(0.0), k0, N);
    const RunPlan plan = plan_run(d.lambda, *j0);
    mix.zero_part = plan.params;
    zero_part = run_vector(plan.params.t0, plan.params.k0, plan.params.theta, *j0);
    zero_support = std::make_pair(plan.first, plan.last);
  }
  if (need_one && d.mu != 0.0) {
    const Complex mu(d.mu);
    const int k0 = choose_k0(std::abs(d.mu));
    const auto l0 = locate_run(seq, Symbol(1.0), k0, N, zero_support);
    if (!l0) no_run(seq, Symbol(1.0), k0, N);
    const RunPlan plan = plan_run(mu, *l0);
    mix.one_part = plan.params;
    one_part = run_vector(plan.params.t0, plan.params.k0, plan.params.theta, *l0);
  }
  // zero-valued parts are unit vectors placed clear of the other support
  if (need_zero && zero_part.empty())
    zero_part = SupportedVector::unit(one_part.empty() ? 0 : one_part.last() + 3);
  if (need_one && one_part.empty())
    one_part = SupportedVector::unit(zero_part.empty() ? 0 : zero_part.last() + 3);

  WitnessVector w;
  w.vector = zero_part.scaled(Complex(alpha)) + one_part.scaled(Complex(beta));
  w.target = z;
  w.kind = WitnessKind::ConvexMix;
  w.params = mix.zero_part;
  w.mix = mix;
  return w;
}

}  // namespace trispec

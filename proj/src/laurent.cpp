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

#include "trispec/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "trispec/geometry.hpp"
#include "trispec/parallel.hpp"

namespace trispec {

Complex root_of_unity(long long j, long long m) {
  if (m <= 0) throw std::invalid_argument("root_of_unity requires m >= 1");
  j %= m;
  if (j < 0) j += m;
  if ((4 * j) % m == 0) {
    switch ((4 * j) / m) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m));
}

SymbolCurve symbol_curve(Complex a, int m) {
  if (m < 4) throw std::invalid_argument("symbol_curve requires m >= 4");
  SymbolCurve c{a, std::vector<Complex>(static_cast<std::size_t>(m))};
  for (int j = 0; j < m; ++j) {
    const Complex z = root_of_unity(j, m);
    c.samples[static_cast<std::size_t>(j)] = z + a * std::conj(z);
  }
  return c;
}

std::vector<Complex> bloch_matrix(const Word& w, Complex omega) {
  const std::size_t p = w.size();
  std::vector<Complex> b(p * p);
  for (std::size_t k = 0; k + 1 < p; ++k) {
    b[k * p + k + 1] += 1.0;
    b[(k + 1) * p + k] += w[k];
  }
  b[(p - 1) * p] += omega;
  b[p - 1] += w[p - 1] * std::conj(omega);
  return b;
}

std::vector<Complex> characteristic_polynomial(const std::vector<Complex>& dense, std::size_t p) {
  if (p == 0 || dense.size() != p * p) throw std::invalid_argument("characteristic_polynomial: bad matrix");
  // Faddeev-LeVerrier: M_1 = I, c_{p-k} = -tr(A M_k) / k, M_{k+1} = A M_k + c_{p-k} I
  std::vector<Complex> c(p + 1);
  c[p] = 1.0;
  std::vector<Complex> mk(p * p), am(p * p);
  for (std::size_t i = 0; i < p; ++i) mk[i * p + i] = 1.0;
  for (std::size_t k = 1; k <= p; ++k) {
    std::fill(am.begin(), am.end(), Complex{});
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t l = 0; l < p; ++l) {
        const Complex a = dense[i * p + l];
        if (a == Complex{}) continue;
        for (std::size_t j = 0; j < p; ++j) am[i * p + j] += a * mk[l * p + j];
      }
    Complex trace{};
    for (std::size_t i = 0; i < p; ++i) trace += am[i * p + i];
    c[p - k] = -trace / static_cast<double>(k);
    mk = am;
    for (std::size_t i = 0; i < p; ++i) mk[i * p + i] += c[p - k];
  }
  return c;
}

namespace {

struct Eval {
  Complex f, df, d2f;
};

Eval horner(const std::vector<Complex>& c, Complex x) {
  Eval e{c.back(), {}, {}};
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    e.d2f = e.d2f * x + 2.0 * e.df;
    e.df = e.df * x + e.f;
    e.f = e.f * x + c[i];
  }
  return e;
}

Complex laguerre(const std::vector<Complex>& c, Complex x) {
  const double n = static_cast<double>(c.size() - 1);
  for (int iter = 0; iter < 200; ++iter) {
    const Eval e = horner(c, x);
    if (e.f == Complex{}) return x;
    const Complex g = e.df / e.f;
    const Complex h = g * g - e.d2f / e.f;
    const Complex root = std::sqrt((n - 1.0) * (n * h - g * g));
    const Complex d1 = g + root, d2 = g - root;
    const Complex denom = std::abs(d1) >= std::abs(d2) ? d1 : d2;
    // cycle breaker: fractional steps on a fixed schedule
    const double frac = (iter % 10 == 9) ? 0.5 + 0.05 * (iter / 10 % 5) : 1.0;
    const Complex step = std::abs(denom) > 0.0 ? n / denom : std::polar(1.0 + std::abs(x), double(iter));
    const Complex next = x - frac * step;
    if (std::abs(next - x) <= 1e-16 * std::max(1.0, std::abs(x))) return next;
    x = next;
  }
  return x;
}

Complex newton_polish(const std::vector<Complex>& c, Complex x) {
  for (int iter = 0; iter < 5; ++iter) {
    const Eval e = horner(c, x);
    if (e.df == Complex{} || e.f == Complex{}) break;
    const Complex next = x - e.f / e.df;
    if (std::abs(horner(c, next).f) >= std::abs(e.f)) break;
    x = next;
  }
  return x;
}

bool lex_less(Complex a, Complex b) {
  return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

}  // namespace

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
  std::vector<Complex> c = coeffs;
  while (c.size() > 1 && c.back() == Complex{}) c.pop_back();
  if (c.size() <= 1) return {};
  const std::size_t degree = c.size() - 1;

  std::vector<Complex> roots;
  roots.reserve(degree);
  std::vector<Complex> d = c;
  while (d.size() > 1) {
    Complex x = d.size() == 2 ? -d[0] / d[1] : laguerre(d, Complex{});
    x = newton_polish(c, x);
    roots.push_back(x);
    // synthetic division by (lambda - x)
    std::vector<Complex> q(d.size() - 1);
    Complex carry = d.back();
    for (std::size_t i = d.size() - 1; i-- > 0;) {
      q[i] = carry;
      carry = d[i] + carry * x;
    }
    d = std::move(q);
  }

  // Roots of multiplicity k are only accurate to about eps^{1/k}; their mean
  // is accurate to working precision, so near-coincident roots are averaged.
  double scale = 0.0;
  for (const auto& r : roots) scale = std::max(scale, std::abs(r));
  const double radius = 1e-6 * std::max(1.0, scale);
  std::vector<std::size_t> group(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) group[i] = i;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[i] - roots[j]) < radius) {
        const std::size_t gi = group[i], gj = group[j];
        for (auto& g : group)
          if (g == gj) g = gi;
      }
  std::vector<Complex> out(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Complex sum{};
    std::size_t count = 0;
    for (std::size_t j = 0; j < roots.size(); ++j)
      if (group[j] == group[i]) {
        sum += roots[j];
        ++count;
      }
    out[i] = count == 1 ? roots[i] : sum / static_cast<double>(count);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

BlochSpectrum periodic_spectrum(const Word& w, int m) {
  if (w.empty()) throw std::invalid_argument("periodic_spectrum requires a nonempty word");
  if (w.size() > 8) throw std::invalid_argument("periodic_spectrum supports periods up to 8");
  if (m < 1) throw std::invalid_argument("periodic_spectrum requires m >= 1");
  const std::size_t p = w.size();
  BlochSpectrum s{w, m, std::vector<Complex>(p * static_cast<std::size_t>(m))};
  parallel_for(static_cast<std::size_t>(m), [&](std::size_t j) {
    const Complex omega = root_of_unity(static_cast<long long>(j), m);
    std::vector<Complex> eig;
    if (p == 1) {
      eig = {w[0] * std::conj(omega) + omega};
    } else {
      eig = polynomial_roots(characteristic_polynomial(bloch_matrix(w, omega), p));
    }
    std::copy(eig.begin(), eig.end(), s.points.begin() + static_cast<std::ptrdiff_t>(j * p));
  });
  return s;
}

std::vector<Complex> laurent_range_closure(Complex a, int m) {
  if (m < 8) throw std::invalid_argument("laurent_range_closure requires m >= 8");
  return convex_hull(symbol_curve(a, m).samples);
}

std::vector<Complex> constants_hull(const Alphabet& alphabet, int m) {
  if (alphabet.size() == 0) throw std::invalid_argument("constants_hull of an empty alphabet");
  if (m < 8) throw std::invalid_argument("constants_hull requires m >= 8");
  std::vector<Complex> all;
  for (const auto& a : alphabet.symbols()) {
    const auto c = symbol_curve(a, m);
    all.insert(all.end(), c.samples.begin(), c.samples.end());
  }
  return convex_hull(all);
}

}  // namespace trispec

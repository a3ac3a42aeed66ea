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

#include "trispec/tridiag.hpp"

#include <algorithm>
#include <stdexcept>

namespace trispec {

// ---------------------------------------------------------------------------
// SupportedVector

SupportedVector::SupportedVector(std::int64_t offset, std::vector<Complex> values)
    : offset_(offset), values_(std::move(values)) {
  if (values_.empty()) offset_ = 0;
}

Complex SupportedVector::at(std::int64_t k) const {
  const std::int64_t idx = k - offset_;
  if (idx < 0 || idx >= static_cast<std::int64_t>(values_.size())) return {};
  return values_[static_cast<std::size_t>(idx)];
}

double SupportedVector::norm_squared() const {
  CompensatedSum s;
  for (auto v : values_) {
    s.add_product(v.real(), v.real());
    s.add_product(v.imag(), v.imag());
  }
  return s.value();
}

double SupportedVector::norm() const { return std::sqrt(norm_squared()); }

SupportedVector SupportedVector::normalized() const {
  const double nrm = norm();
  if (!(nrm > 0.0)) throw std::domain_error("cannot normalize the zero vector");
  return scaled(Complex(1.0 / nrm));
}

SupportedVector SupportedVector::shifted(std::int64_t k) const {
  return SupportedVector(offset_ - k, values_);
}

SupportedVector SupportedVector::scaled(Complex alpha) const {
  std::vector<Complex> v = values_;
  for (auto& x : v) x *= alpha;
  return SupportedVector(offset_, std::move(v));
}

SupportedVector operator+(const SupportedVector& a, const SupportedVector& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const std::int64_t lo = std::min(a.first(), b.first());
  const std::int64_t hi = std::max(a.last(), b.last());
  std::vector<Complex> v(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t k = lo; k <= hi; ++k) v[static_cast<std::size_t>(k - lo)] = a.at(k) + b.at(k);
  return SupportedVector(lo, std::move(v));
}

Complex inner(const SupportedVector& x, const SupportedVector& y) {
  if (x.empty() || y.empty()) return {};
  ComplexCompensatedSum s;
  const std::int64_t lo = std::max(x.first(), y.first());
  const std::int64_t hi = std::min(x.last(), y.last());
  for (std::int64_t k = lo; k <= hi; ++k) s.add_product_conj(x.at(k), y.at(k));
  return s.value();
}

// ---------------------------------------------------------------------------
// A_b on supported vectors

SupportedVector apply(const SymbolSequence& seq, const SupportedVector& x) {
  if (x.empty()) return {};
  const std::int64_t lo = x.first() - 1;
  const std::int64_t hi = x.last() + 1;
  std::vector<Complex> y(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t k = lo; k <= hi; ++k) {
    const Complex left = x.at(k - 1);
    y[static_cast<std::size_t>(k - lo)] =
        x.at(k + 1) + (left == Complex{} ? Complex{} : seq.entry(k - 1) * left);
  }
  return SupportedVector(lo, std::move(y));
}

SupportedVector adjoint_apply(const SymbolSequence& seq, const SupportedVector& x) {
  if (x.empty()) return {};
  const std::int64_t lo = x.first() - 1;
  const std::int64_t hi = x.last() + 1;
  std::vector<Complex> y(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t k = lo; k <= hi; ++k) {
    const Complex right = x.at(k + 1);
    y[static_cast<std::size_t>(k - lo)] =
        x.at(k - 1) + (right == Complex{} ? Complex{} : std::conj(seq.entry(k)) * right);
  }
  return SupportedVector(lo, std::move(y));
}

Complex form(const SymbolSequence& seq, const SupportedVector& x, const SupportedVector& y) {
  if (x.empty() || y.empty()) return {};
  // <A x, y> = sum_k x_{k+1} conj(y_k) + sum_k b_k x_k conj(y_{k+1})
  ComplexCompensatedSum s;
  const std::int64_t lo = std::max(x.first() - 1, y.first());
  const std::int64_t hi = std::min(x.last() - 1, y.last());
  for (std::int64_t k = lo; k <= hi; ++k) s.add_product_conj(x.at(k + 1), y.at(k));
  const std::int64_t lo2 = std::max(x.first(), y.first() - 1);
  const std::int64_t hi2 = std::min(x.last(), y.last() - 1);
  for (std::int64_t k = lo2; k <= hi2; ++k) {
    const Complex xk = x.at(k);
    if (xk == Complex{}) continue;
    const Symbol b = seq.entry(k);
    if (b == Complex{}) continue;
    if (b.imag() == 0.0) {
      s.add_product_conj(xk * b.real(), y.at(k + 1));
    } else {
      s.add_product_conj(b * xk, y.at(k + 1));
    }
  }
  return s.value();
}

Complex rayleigh(const SymbolSequence& seq, const SupportedVector& x) {
  const double n2 = x.norm_squared();
  if (!(n2 > 0.0)) throw std::domain_error("rayleigh quotient of the zero vector");
  return form(seq, x, x) / n2;
}

// ---------------------------------------------------------------------------
// TridiagMatrix

void TridiagMatrix::check() const {
  const std::size_t n = diag.size();
  const std::size_t off = n == 0 ? 0 : n - 1;
  if (sub.size() != off || sup.size() != off)
    throw std::invalid_argument("tridiagonal matrix: sub/sup must have length n-1");
}

std::vector<Complex> TridiagMatrix::multiply(std::span<const Complex> v) const {
  const std::size_t n = size();
  if (v.size() != n) throw std::invalid_argument("multiply: dimension mismatch");
  std::vector<Complex> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc = diag[i] * v[i];
    if (i + 1 < n) acc += sup[i] * v[i + 1];
    if (i > 0) acc += sub[i - 1] * v[i - 1];
    y[i] = acc;
  }
  if (boundary == Boundary::Periodic && n > 0) {
    y[n - 1] += corner_sup * v[0];
    y[0] += corner_sub * v[n - 1];
  }
  return y;
}

std::vector<Complex> TridiagMatrix::adjoint_multiply(std::span<const Complex> v) const {
  return adjoint().multiply(v);
}

Complex TridiagMatrix::quadratic_form(std::span<const Complex> v) const {
  const std::size_t n = size();
  if (v.size() != n) throw std::invalid_argument("quadratic_form: dimension mismatch");
  ComplexCompensatedSum s;
  for (std::size_t i = 0; i < n; ++i) {
    if (diag[i] != Complex{}) s.add_product_conj(diag[i] * v[i], v[i]);
    if (i + 1 < n) {
      s.add_product_conj(sup[i] * v[i + 1], v[i]);
      s.add_product_conj(sub[i] * v[i], v[i + 1]);
    }
  }
  if (boundary == Boundary::Periodic && n > 0) {
    s.add_product_conj(corner_sup * v[0], v[n - 1]);
    s.add_product_conj(corner_sub * v[n - 1], v[0]);
  }
  return s.value();
}

TridiagMatrix TridiagMatrix::scaled(Complex alpha) const {
  TridiagMatrix m = *this;
  for (auto& x : m.diag) x *= alpha;
  for (auto& x : m.sub) x *= alpha;
  for (auto& x : m.sup) x *= alpha;
  m.corner_sub *= alpha;
  m.corner_sup *= alpha;
  return m;
}

TridiagMatrix TridiagMatrix::shifted(Complex beta) const {
  TridiagMatrix m = *this;
  for (auto& x : m.diag) x += beta;
  return m;
}

TridiagMatrix TridiagMatrix::adjoint() const {
  TridiagMatrix m = *this;
  for (auto& x : m.diag) x = std::conj(x);
  for (std::size_t i = 0; i < sub.size(); ++i) {
    m.sub[i] = std::conj(sup[i]);
    m.sup[i] = std::conj(sub[i]);
  }
  m.corner_sub = std::conj(corner_sup);
  m.corner_sup = std::conj(corner_sub);
  return m;
}

std::vector<Complex> TridiagMatrix::dense() const {
  const std::size_t n = size();
  std::vector<Complex> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i * n + i] += diag[i];
    if (i + 1 < n) {
      a[i * n + i + 1] += sup[i];
      a[(i + 1) * n + i] += sub[i];
    }
  }
  if (boundary == Boundary::Periodic && n > 0) {
    a[(n - 1) * n] += corner_sup;
    a[n - 1] += corner_sub;
  }
  return a;
}

TridiagMatrix section(const SymbolSequence& seq, std::int64_t first, std::size_t size,
                      Boundary boundary) {
  TridiagMatrix m;
  m.first_index = first;
  m.boundary = boundary;
  m.diag.assign(size, Complex{});
  if (size > 0) {
    m.sup.assign(size - 1, Complex(1.0));
    m.sub.resize(size - 1);
    for (std::size_t r = 1; r < size; ++r)
      m.sub[r - 1] = seq.entry(first + static_cast<std::int64_t>(r) - 1);
    if (boundary == Boundary::Periodic) {
      m.corner_sup = Complex(1.0);
      m.corner_sub = seq.entry(first + static_cast<std::int64_t>(size) - 1);
    }
  }
  return m;
}

TridiagMatrix truncate(const SymbolSequence& seq, std::int64_t n, Boundary boundary) {
  if (n < 0) throw std::invalid_argument("truncate requires n >= 0");
  return section(seq, -n, static_cast<std::size_t>(2 * n + 1), boundary);
}

SupportedVector embed(const TridiagMatrix& m, std::span<const Complex> v) {
  if (v.size() != m.size()) throw std::invalid_argument("embed: dimension mismatch");
  return SupportedVector(m.first_index, std::vector<Complex>(v.begin(), v.end()));
}

}  // namespace trispec

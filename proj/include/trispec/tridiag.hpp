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
#include <span>
#include <vector>

#include "trispec/accumulate.hpp"
#include "trispec/symbolic.hpp"

namespace trispec {

/// Finitely supported vector on Z. Entries outside [first(), last()] are 0.
class SupportedVector {
 public:
  SupportedVector() = default;
  SupportedVector(std::int64_t offset, std::vector<Complex> values);

  /// e_k.
  static SupportedVector unit(std::int64_t k) { return SupportedVector(k, {Complex(1.0)}); }

  std::int64_t offset() const { return offset_; }
  const std::vector<Complex>& values() const { return values_; }
  bool empty() const { return values_.empty(); }
  std::int64_t first() const { return offset_; }
  std::int64_t last() const { return offset_ + static_cast<std::int64_t>(values_.size()) - 1; }

  Complex at(std::int64_t k) const;
  double norm_squared() const;
  double norm() const;
  /// Throws std::domain_error for the zero vector.
  SupportedVector normalized() const;
  /// (S x)_j = x_{j+k}.
  SupportedVector shifted(std::int64_t k) const;
  SupportedVector scaled(Complex alpha) const;

  friend SupportedVector operator+(const SupportedVector& a, const SupportedVector& b);
  bool operator==(const SupportedVector&) const = default;

 private:
  std::int64_t offset_ = 0;
  std::vector<Complex> values_;
};

/// <x, y> = sum_k x_k conj(y_k), compensated.
Complex inner(const SupportedVector& x, const SupportedVector& y);

/// (A_b x)_k = x_{k+1} + b_{k-1} x_{k-1}.
SupportedVector apply(const SymbolSequence& seq, const SupportedVector& x);
/// (A_b^* x)_k = x_{k-1} + conj(b_k) x_{k+1}.
SupportedVector adjoint_apply(const SymbolSequence& seq, const SupportedVector& x);
/// <A_b x, y>, accumulated without forming A_b x.
Complex form(const SymbolSequence& seq, const SupportedVector& x, const SupportedVector& y);
/// <A_b x, x> / <x, x>. Throws std::domain_error for the zero vector.
Complex rayleigh(const SymbolSequence& seq, const SupportedVector& x);

enum class Boundary { Open, Periodic };

/// Tridiagonal matrix, optionally closed into a ring. Row r couples to r-1
/// through sub[r-1] and to r+1 through sup[r]. With periodic boundary the
/// entry (last, 0) is corner_sup and (0, last) is corner_sub.
struct TridiagMatrix {
  std::vector<Complex> diag;
  std::vector<Complex> sub;
  std::vector<Complex> sup;
  Boundary boundary = Boundary::Open;
  Complex corner_sub{};
  Complex corner_sup{};
  /// Index in Z of row 0 when the matrix is a section of A_b.
  std::int64_t first_index = 0;

  std::size_t size() const { return diag.size(); }
  /// Throws std::invalid_argument on inconsistent lengths.
  void check() const;

  std::vector<Complex> multiply(std::span<const Complex> v) const;
  std::vector<Complex> adjoint_multiply(std::span<const Complex> v) const;
  /// v^* M v (not normalized).
  Complex quadratic_form(std::span<const Complex> v) const;

  TridiagMatrix scaled(Complex alpha) const;
  /// M + beta I.
  TridiagMatrix shifted(Complex beta) const;
  TridiagMatrix adjoint() const;
  /// Row-major dense copy.
  std::vector<Complex> dense() const;

  bool operator==(const TridiagMatrix&) const = default;
};

/// Section of A_b on indices first .. first+size-1. Periodic boundary wraps the
/// last index onto the first: corner_sup = 1, corner_sub = b_{last}.
TridiagMatrix section(const SymbolSequence& seq, std::int64_t first, std::size_t size,
                      Boundary boundary = Boundary::Open);

/// Centered truncation on [-n, n] (dimension 2n+1); row k holds b_{k-1}.
TridiagMatrix truncate(const SymbolSequence& seq, std::int64_t n,
                       Boundary boundary = Boundary::Open);

/// Places a coefficient vector of a section onto Z.
SupportedVector embed(const TridiagMatrix& m, std::span<const Complex> v);

}  // namespace trispec

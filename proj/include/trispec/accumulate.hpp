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

#include <cmath>
#include <complex>

namespace trispec {

using Complex = std::complex<double>;

/// Error-free transformations (Knuth TwoSum, fma-based TwoProduct) and the
/// compensated accumulators built on them. Sums of n products carry an error
/// of about eps + n^2 eps^2 relative to the condition number, which is what
/// keeps Rayleigh residuals of witness vectors at the 1e-15 level.
namespace eft {

inline void two_sum(double a, double b, double& s, double& err) {
  s = a + b;
  const double bb = s - a;
  err = (a - (s - bb)) + (b - bb);
}

inline void two_product(double a, double b, double& p, double& err) {
  p = a * b;
  err = std::fma(a, b, -p);
}

}  // namespace eft

class CompensatedSum {
 public:
  void add(double x) {
    double s, e;
    eft::two_sum(sum_, x, s, e);
    sum_ = s;
    carry_ += e;
  }

  /// Adds a * b without losing the low half of the product.
  void add_product(double a, double b) {
    double p, pe;
    eft::two_product(a, b, p, pe);
    add(p);
    carry_ += pe;
  }

  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

class ComplexCompensatedSum {
 public:
  void add(Complex z) {
    re_.add(z.real());
    im_.add(z.imag());
  }

  /// Adds a * conj(b).
  void add_product_conj(Complex a, Complex b) {
    re_.add_product(a.real(), b.real());
    re_.add_product(a.imag(), b.imag());
    im_.add_product(a.imag(), b.real());
    im_.add_product(-a.real(), b.imag());
  }

  /// Adds a * b.
  void add_product(Complex a, Complex b) {
    re_.add_product(a.real(), b.real());
    re_.add_product(-a.imag(), b.imag());
    im_.add_product(a.real(), b.imag());
    im_.add_product(a.imag(), b.real());
  }

  Complex value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace trispec

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

#include "trispec/eig.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace trispec {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Bounds {
  double lo;
  double hi;
};

Bounds gershgorin(const RealSymTridiag& t) {
  double dmin = t.d[0], dmax = t.d[0], emax = 0.0;
  for (double x : t.d) {
    dmin = std::min(dmin, x);
    dmax = std::max(dmax, x);
  }
  for (double x : t.e) emax = std::max(emax, std::abs(x));
  const double lo = dmin - 2.0 * emax;
  const double hi = dmax + 2.0 * emax;
  const double pad = 4.0 * kEps * std::max({std::abs(lo), std::abs(hi), DBL_MIN});
  return {lo - pad, hi + pad};
}

double pivmin_for(const RealSymTridiag& t) {
  double emax2 = 1.0;
  for (double x : t.e) emax2 = std::max(emax2, x * x);
  return DBL_MIN * emax2;
}

std::size_t sturm_count_impl(const RealSymTridiag& t, double x, double pivmin) {
  std::size_t count = 0;
  double q = t.d[0] - x;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < t.d.size(); ++i) {
    q = t.d[i] - x - t.e[i - 1] * t.e[i - 1] / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

double bisect_kth(const RealSymTridiag& t, std::size_t k, Bounds b, double pivmin) {
  double lo = b.lo, hi = b.hi;
  const double abs_floor = kEps * std::max(std::abs(b.lo), std::abs(b.hi));
  for (int iter = 0; iter < 2000; ++iter) {
    const double width = hi - lo;
    if (width <= std::max(2.0 * kEps * std::max(std::abs(lo), std::abs(hi)), abs_floor)) break;
    const double mid = lo + 0.5 * width;
    if (mid <= lo || mid >= hi) break;
    if (sturm_count_impl(t, mid, pivmin) <= k) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

/// LU with partial pivoting of a real tridiagonal matrix (LAPACK dgttrf
/// layout); zero pivots are replaced by a tiny multiple of the scale.
struct TridiagLU {
  std::vector<double> dl, d, du, du2;
  std::vector<bool> swapped;

  TridiagLU(const RealSymTridiag& t, double shift, double tiny) {
    const std::size_t n = t.size();
    d.resize(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = t.d[i] - shift;
    dl = t.e;
    du = t.e;
    du2.assign(n > 2 ? n - 2 : 0, 0.0);
    swapped.assign(n > 1 ? n - 1 : 0, false);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(d[i]) >= std::abs(dl[i])) {
        if (d[i] != 0.0) {
          const double fact = dl[i] / d[i];
          dl[i] = fact;
          d[i + 1] -= fact * du[i];
        }
      } else {
        const double fact = d[i] / dl[i];
        d[i] = dl[i];
        dl[i] = fact;
        const double temp = du[i];
        du[i] = d[i + 1];
        d[i + 1] = temp - fact * d[i + 1];
        if (i + 2 < n) {
          du2[i] = du[i + 1];
          du[i + 1] = -fact * du[i + 1];
        }
        swapped[i] = true;
      }
    }
    for (auto& p : d)
      if (std::abs(p) < tiny) p = std::signbit(p) ? -tiny : tiny;
  }

  void solve(std::vector<double>& b) const {
    const std::size_t n = d.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!swapped[i]) {
        b[i + 1] -= dl[i] * b[i];
      } else {
        const double temp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = temp - dl[i] * b[i];
      }
    }
    b[n - 1] /= d[n - 1];
    if (n > 1) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for (std::size_t i = n >= 2 ? n - 2 : 0; i-- > 0;)
      b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
  }
};

double norm2(const std::vector<double>& v) {
  CompensatedSum s;
  for (double x : v) s.add_product(x, x);
  return std::sqrt(s.value());
}

double residual(const RealSymTridiag& t, const std::vector<double>& v, double lambda) {
  auto tv = t.multiply(v);
  for (std::size_t i = 0; i < v.size(); ++i) tv[i] -= lambda * v[i];
  return norm2(tv);
}

}  // namespace

double RealSymTridiag::scale() const {
  double dmax = 0.0, emax = 0.0;
  for (double x : d) dmax = std::max(dmax, std::abs(x));
  for (double x : e) emax = std::max(emax, std::abs(x));
  return dmax + 2.0 * emax;
}

std::vector<double> RealSymTridiag::multiply(const std::vector<double>& v) const {
  const std::size_t n = d.size();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = d[i] * v[i];
    if (i + 1 < n) acc += e[i] * v[i + 1];
    if (i > 0) acc += e[i - 1] * v[i - 1];
    y[i] = acc;
  }
  return y;
}

PhaseReduction phase_reduce(const TridiagMatrix& h) {
  h.check();
  if (h.boundary != Boundary::Open)
    throw std::invalid_argument("phase_reduce: periodic boundary is not tridiagonal");
  const std::size_t n = h.size();
  double scale = 0.0;
  for (auto x : h.diag) scale = std::max(scale, std::abs(x));
  for (auto x : h.sup) scale = std::max(scale, std::abs(x));
  const double tol = 4.0 * kEps * std::max(scale, DBL_MIN);
  for (auto x : h.diag)
    if (std::abs(x.imag()) > tol) throw std::invalid_argument("phase_reduce: diagonal not real");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (std::abs(h.sub[i] - std::conj(h.sup[i])) > tol)
      throw std::invalid_argument("phase_reduce: matrix is not Hermitian");

  PhaseReduction out;
  out.t.d.resize(n);
  out.t.e.resize(n > 0 ? n - 1 : 0);
  out.phases.assign(n, Complex(1.0));
  for (std::size_t i = 0; i < n; ++i) out.t.d[i] = h.diag[i].real();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double mag = std::abs(h.sup[i]);
    out.t.e[i] = mag;
    out.phases[i + 1] = mag > 0.0 ? out.phases[i] * (h.sup[i] / mag) : out.phases[i];
  }
  return out;
}

std::size_t sturm_count(const RealSymTridiag& t, double x) {
  if (t.size() == 0) return 0;
  return sturm_count_impl(t, x, pivmin_for(t));
}

double kth_eigenvalue(const RealSymTridiag& t, std::size_t k) {
  if (k >= t.size()) throw std::out_of_range("kth_eigenvalue: index out of range");
  if (t.size() == 1) return t.d[0];
  return bisect_kth(t, k, gershgorin(t), pivmin_for(t));
}

std::vector<double> symm_tridiag_eigs(const RealSymTridiag& t, Which which) {
  const std::size_t n = t.size();
  if (n == 0) throw std::invalid_argument("symm_tridiag_eigs: empty matrix");
  if (t.e.size() + 1 != n) throw std::invalid_argument("symm_tridiag_eigs: e must have n-1 entries");
  if (n == 1) return {t.d[0]};
  const Bounds b = gershgorin(t);
  const double pivmin = pivmin_for(t);
  if (which == Which::Extreme) return {bisect_kth(t, 0, b, pivmin), bisect_kth(t, n - 1, b, pivmin)};
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = bisect_kth(t, k, b, pivmin);
  std::sort(out.begin(), out.end());
  return out;
}

EigPair top_eigpair(const RealSymTridiag& t) {
  const std::size_t n = t.size();
  if (n == 0) throw std::invalid_argument("top_eigpair: empty matrix");
  EigPair out;
  if (n == 1) {
    out.value = t.d[0];
    out.vector = {Complex(1.0)};
    return out;
  }
  const Bounds b = gershgorin(t);
  const double pivmin = pivmin_for(t);
  const double lambda = bisect_kth(t, n - 1, b, pivmin);
  out.value = lambda;
  out.near_degenerate =
      sturm_count_impl(t, lambda - EigTolerances::near_degenerate, pivmin) < n - 1;

  const double scale = std::max(t.scale(), DBL_MIN);
  const double target = EigTolerances::eig * scale;
  const TridiagLU lu(t, lambda, kEps * scale);

  // Positive start: the top eigenvector of a tridiagonal with e >= 0 has a
  // nonnegative representative, so the overlap never vanishes.
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.5 * std::sin(0.7 * static_cast<double>(i) + 0.3);
  double nrm = norm2(v);
  for (auto& x : v) x /= nrm;

  double res = residual(t, v, lambda);
  for (int it = 0; it < EigTolerances::inverse_iteration_cap && res > target; ++it) {
    lu.solve(v);
    nrm = norm2(v);
    if (!(nrm > 0.0) || !std::isfinite(nrm)) break;
    for (auto& x : v) x /= nrm;
    res = residual(t, v, lambda);
  }
  out.residual = res;
  out.vector.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.vector[i] = Complex(v[i]);
  return out;
}

EigPair top_eigpair(const TridiagMatrix& hermitian) {
  const PhaseReduction pr = phase_reduce(hermitian);
  EigPair out = top_eigpair(pr.t);
  for (std::size_t i = 0; i < out.vector.size(); ++i)
    out.vector[i] = std::conj(pr.phases[i]) * out.vector[i].real();
  return out;
}

// ---------------------------------------------------------------------------
// Smallest singular value

namespace {

/// 2x2 complex matrix [[a, b], [c, d]].
struct M2 {
  Complex a, b, c, d;
};

M2 mul(const M2& x, const M2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

M2 adj(const M2& x) { return {std::conj(x.a), std::conj(x.c), std::conj(x.b), std::conj(x.d)}; }

/// Dilation block data for B = M - zI.
struct Dilation {
  std::vector<Complex> diag;  // B_ii
  std::vector<Complex> sup;   // B_{i,i+1}
  std::vector<Complex> sub;   // B_{i+1,i}
  double norm_bound = 0.0;
};

/// Number of eigenvalues of the dilation strictly below sigma.
std::size_t dilation_count(const Dilation& g, double sigma, double tiny) {
  const std::size_t n = g.diag.size();
  std::size_t count = 0;
  // Hermitian S = [[sa, sb], [conj(sb), sd]]
  double sa = -sigma, sd = -sigma;
  Complex sb = g.diag[0];
  for (std::size_t i = 0;; ++i) {
    double det = sa * sd - std::norm(sb);
    if (std::abs(det) < tiny) {
      const double delta = std::sqrt(tiny);
      sa -= delta;
      sd -= delta;
      det = sa * sd - std::norm(sb);
    }
    if (det < 0.0) {
      count += 1;
    } else if (sa < 0.0) {
      count += 2;
    }
    if (i + 1 == n) break;

    const M2 sinv{Complex(sd / det), -sb / det, -std::conj(sb) / det, Complex(sa / det)};
    const M2 c{Complex{}, g.sup[i], std::conj(g.sub[i]), Complex{}};
    const M2 y = mul(adj(c), mul(sinv, c));
    sa = -sigma - y.a.real();
    sd = -sigma - y.d.real();
    sb = g.diag[i + 1] - 0.5 * (y.b + std::conj(y.c));
  }
  return count;
}

}  // namespace

double smallest_singular_value(const TridiagMatrix& m, Complex z) {
  m.check();
  if (m.boundary != Boundary::Open)
    throw std::invalid_argument("smallest_singular_value requires open boundary");
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("smallest_singular_value: empty matrix");

  Dilation g;
  g.diag.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.diag[i] = m.diag[i] - z;
  g.sup = m.sup;
  g.sub = m.sub;
  // ||B||_2 <= sqrt(||B||_1 ||B||_inf)
  double row = 0.0, col = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = std::abs(g.diag[i]), c = std::abs(g.diag[i]);
    if (i + 1 < n) {
      r += std::abs(g.sup[i]);
      c += std::abs(g.sub[i]);
    }
    if (i > 0) {
      r += std::abs(g.sub[i - 1]);
      c += std::abs(g.sup[i - 1]);
    }
    row = std::max(row, r);
    col = std::max(col, c);
  }
  const double bound = std::sqrt(row * col);
  if (bound == 0.0) return 0.0;
  const double tiny = DBL_MIN * std::max(1.0, bound * bound);

  double lo = 0.0;
  double hi = bound * (1.0 + 8.0 * kEps) + DBL_MIN;
  const double abs_floor = kEps * bound;
  for (int iter = 0; iter < 2000; ++iter) {
    const double width = hi - lo;
    if (width <= std::max(2.0 * kEps * hi, abs_floor)) break;
    const double mid = lo + 0.5 * width;
    if (mid <= lo || mid >= hi) break;
    if (dilation_count(g, mid, tiny) <= n) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::max(0.0, lo + 0.5 * (hi - lo));
}

}  // namespace trispec

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

#include "trispec/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "trispec/eig.hpp"
#include "trispec/geometry.hpp"
#include "trispec/parallel.hpp"

namespace trispec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct AngleSample {
  double angle;
  double support;
  Complex vertex;
  bool degenerate;
};

AngleSample evaluate(const TridiagMatrix& m, double theta) {
  const EigPair top = top_eigpair(rotated_hermitian_part(m, theta));
  return {theta, top.value, m.quadratic_form(top.vector), top.near_degenerate};
}

std::vector<AngleSample> evaluate_all(const TridiagMatrix& m, const std::vector<double>& angles) {
  std::vector<AngleSample> out(angles.size());
  parallel_for(angles.size(), [&](std::size_t i) { out[i] = evaluate(m, angles[i]); });
  return out;
}

}  // namespace

TridiagMatrix rotated_hermitian_part(const TridiagMatrix& m, double theta) {
  m.check();
  if (m.boundary != Boundary::Open)
    throw std::invalid_argument("numerical range requires an open-boundary matrix");
  const Complex rot = std::polar(1.0, -theta);
  TridiagMatrix h;
  h.first_index = m.first_index;
  h.diag.resize(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) h.diag[i] = Complex((rot * m.diag[i]).real());
  h.sup.resize(m.sup.size());
  h.sub.resize(m.sub.size());
  for (std::size_t i = 0; i < m.sup.size(); ++i) {
    h.sup[i] = 0.5 * (rot * m.sup[i] + std::conj(rot * m.sub[i]));
    h.sub[i] = std::conj(h.sup[i]);
  }
  return h;
}

RangePolygon range_polygon(const TridiagMatrix& m, const RangeOptions& options) {
  if (options.angles < 3) throw std::invalid_argument("range_polygon requires at least 3 angles");
  if (m.size() == 0) throw std::invalid_argument("range_polygon: empty matrix");

  std::vector<double> base(static_cast<std::size_t>(options.angles));
  for (int j = 0; j < options.angles; ++j)
    base[static_cast<std::size_t>(j)] = kTwoPi * j / options.angles;
  std::vector<AngleSample> samples = evaluate_all(m, base);

  if (options.adaptive) {
    const auto cap = static_cast<std::size_t>(std::max(options.max_angles, options.angles));
    while (samples.size() < cap) {
      std::vector<double> fresh;
      for (std::size_t i = 0; i < samples.size() && samples.size() + fresh.size() < cap; ++i) {
        const AngleSample& a = samples[i];
        const AngleSample& b = samples[(i + 1) % samples.size()];
        const double hi = i + 1 < samples.size() ? b.angle : b.angle + kTwoPi;
        if (hi - a.angle < 1e-12) continue;
        if (std::abs(a.vertex - b.vertex) > options.vertex_gap) {
          double mid = 0.5 * (a.angle + hi);
          if (mid >= kTwoPi) mid -= kTwoPi;
          fresh.push_back(mid);
        }
      }
      if (fresh.empty()) break;
      auto extra = evaluate_all(m, fresh);
      samples.insert(samples.end(), extra.begin(), extra.end());
      std::sort(samples.begin(), samples.end(),
                [](const AngleSample& x, const AngleSample& y) { return x.angle < y.angle; });
    }
  }

  RangePolygon out;
  out.angles.reserve(samples.size());
  for (const auto& s : samples) {
    out.angles.push_back(s.angle);
    out.support_values.push_back(s.support);
    out.inner_vertices.push_back(s.vertex);
    out.near_degenerate.push_back(s.degenerate);
  }
  out.hull = convex_hull(out.inner_vertices);
  out.convexified = true;
  return out;
}

bool RangePolygon::outer_contains(Complex z, double slack) const {
  for (std::size_t i = 0; i < angles.size(); ++i)
    if ((std::polar(1.0, -angles[i]) * z).real() > support_values[i] + slack) return false;
  return true;
}

std::vector<Complex> RangePolygon::outer_vertices() const {
  std::vector<Complex> out;
  const std::size_t n = angles.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const double c1 = std::cos(angles[i]), s1 = std::sin(angles[i]);
    const double c2 = std::cos(angles[j]), s2 = std::sin(angles[j]);
    const double det = c1 * s2 - s1 * c2;
    if (std::abs(det) < 1e-14) continue;
    const double h1 = support_values[i], h2 = support_values[j];
    out.emplace_back((h1 * s2 - h2 * s1) / det, (c1 * h2 - c2 * h1) / det);
  }
  return out;
}

double hausdorff(std::span<const Complex> p, std::span<const Complex> q) {
  if (p.empty() || q.empty()) throw std::invalid_argument("hausdorff of an empty set");
  auto directed = [](std::span<const Complex> a, std::span<const Complex> b) {
    std::vector<double> best(a.size());
    parallel_for(a.size(), [&](std::size_t i) {
      double d = std::numeric_limits<double>::infinity();
      for (const auto& y : b) d = std::min(d, std::norm(a[i] - y));
      best[i] = d;
    });
    return std::sqrt(*std::max_element(best.begin(), best.end()));
  };
  return std::max(directed(p, q), directed(q, p));
}

}  // namespace trispec

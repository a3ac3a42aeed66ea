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

#include "trispec/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trispec/eig.hpp"
#include "trispec/geometry.hpp"
#include "trispec/laurent.hpp"
#include "trispec/numrange.hpp"
#include "trispec/parallel.hpp"

namespace trispec {

double gamma_excess(Complex z) {
  const double x = std::abs(z.real());
  const double y = std::abs(z.imag());
  if (x <= 0.5) return std::abs(z) - 1.0;
  const double slope_excess = y - (2.0 - x) * gamma::kSlope;
  return x <= 2.0 ? slope_excess : std::max(slope_excess, x - 2.0);
}

SupportedVector random_unit_vector(std::mt19937_64& rng, int max_support, int max_offset) {
  if (max_support < 1 || max_offset < 0) throw std::invalid_argument("random_unit_vector: bad bounds");
  std::uniform_int_distribution<int> length(1, max_support);
  std::uniform_int_distribution<int> offset(-max_offset, max_offset);
  std::normal_distribution<double> gauss;
  const int len = length(rng);
  const int off = offset(rng);
  std::vector<Complex> values(static_cast<std::size_t>(len));
  for (auto& v : values) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v = {re, im};
  }
  SupportedVector x(off, std::move(values));
  if (x.norm() == 0.0) return SupportedVector::unit(off);
  return x.normalized();
}

bool GammaCheckReport::passed() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const GammaCheckRow& r) { return r.rayleigh_failures == 0 && r.ellipse_failures == 0; });
}

GammaCheckReport gamma_check(const std::vector<SymbolSequence>& seqs, const GammaCheckOptions& o) {
  if (o.vectors < 0 || o.ellipse_samples < 0) throw std::invalid_argument("gamma_check: negative counts");
  GammaCheckReport report;
  report.rows.resize(seqs.size());
  parallel_for(seqs.size(), [&](std::size_t s) {
    std::seed_seq seeds{static_cast<std::uint32_t>(o.seed), static_cast<std::uint32_t>(o.seed >> 32),
                        static_cast<std::uint32_t>(s)};
    std::mt19937_64 rng(seeds);
    const SymbolSequence seq = seqs[s].cached(-o.max_offset - 2, o.max_offset + o.max_support + 2);
    GammaCheckRow row;
    row.seq = seqs[s].text();
    row.vectors = o.vectors;
    for (int i = 0; i < o.vectors; ++i) {
      const SupportedVector x = random_unit_vector(rng, o.max_support, o.max_offset);
      const double e = gamma_excess(rayleigh(seq, x));
      row.max_excess = std::max(row.max_excess, e);
      if (e > o.tol) ++row.rayleigh_failures;
      if (o.ellipse_samples > 0) {
        bool bad = false;
        for (const auto& z : ellipse_boundary_samples(ellipse_from_vector(x), o.ellipse_samples)) {
          const double ez = gamma_excess(z);
          row.max_excess = std::max(row.max_excess, ez);
          bad = bad || ez > o.tol;
        }
        if (bad) ++row.ellipse_failures;
      }
    }
    report.rows[s] = row;
  });
  return report;
}

SigmaGrid sigma_min_grid(const TridiagMatrix& m, int grid, double extent) {
  if (grid < 2 || !(extent > 0.0)) throw std::invalid_argument("sigma_min_grid requires grid >= 2, extent > 0");
  SigmaGrid g;
  g.grid = grid;
  g.extent = extent;
  const auto count = static_cast<std::size_t>(grid) * static_cast<std::size_t>(grid);
  g.points.resize(count);
  g.sigma.resize(count);
  const double step = 2.0 * extent / (grid - 1);
  for (int r = 0; r < grid; ++r)
    for (int c = 0; c < grid; ++c)
      g.points[static_cast<std::size_t>(r * grid + c)] = {-extent + c * step, extent - r * step};
  parallel_for(count, [&](std::size_t i) { g.sigma[i] = smallest_singular_value(m, g.points[i]); });
  return g;
}

std::vector<Word> all_words(const Alphabet& alphabet, int max_length) {
  std::vector<Word> out;
  const auto& syms = alphabet.symbols();
  std::vector<Word> level{Word{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const auto& w : level)
      for (const auto& s : syms) {
        Word v = w;
        v.push_back(s);
        next.push_back(std::move(v));
      }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

ConjectureReport conjecture_report(const Alphabet& alphabet, int max_period, int m, const SigmaGrid& sigma,
                                   double eps) {
  if (max_period < 1 || max_period > 8) throw std::invalid_argument("max_period must be in 1..8");
  ConjectureReport r;
  const auto words = all_words(alphabet, max_period);
  r.words = words.size();
  std::vector<Complex> united;
  for (const auto& w : words) {
    const auto s = periodic_spectrum(w, m);
    united.insert(united.end(), s.points.begin(), s.points.end());
  }
  std::vector<Complex> pseudo;
  for (std::size_t i = 0; i < sigma.points.size(); ++i)
    if (sigma.sigma[i] <= eps) pseudo.push_back(sigma.points[i]);
  r.union_points = united.size();
  r.pseudo_points = pseudo.size();
  if (!united.empty() && !pseudo.empty()) r.hausdorff = hausdorff(united, pseudo);
  return r;
}

}  // namespace trispec

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

#include <span>
#include <string>
#include <vector>

#include "trispec/accumulate.hpp"

namespace trispec {

struct SvgStyle {
  std::string css_class;
  std::string stroke = "black";
  std::string fill = "none";
  double stroke_width = 2.0;
  double point_radius = 3.0;
};

/// Presentation-only plot on a 1000 x 1000 viewBox showing [-2.5, 2.5]^2.
class SvgCanvas {
 public:
  static constexpr double kExtent = 2.5;
  static constexpr double kSize = 1000.0;

  static double to_x(double re) { return (re + kExtent) * (kSize / (2.0 * kExtent)); }
  static double to_y(double im) { return (kExtent - im) * (kSize / (2.0 * kExtent)); }

  void polygon(std::span<const Complex> points, const SvgStyle& style);
  void polyline(std::span<const Complex> points, const SvgStyle& style);
  void points(std::span<const Complex> points, const SvgStyle& style);
  void axes(const SvgStyle& style);
  void title(const std::string& text);

  std::string str() const;

 private:
  std::vector<std::string> elements_;
  std::string title_;
};

}  // namespace trispec

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

#include "trispec/svg.hpp"

#include <cstdio>

namespace trispec {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string attrs(const SvgStyle& s, bool filled) {
  std::string a;
  if (!s.css_class.empty()) a += " class=\"" + escape(s.css_class) + "\"";
  a += " stroke=\"" + escape(s.stroke) + "\"";
  a += " fill=\"" + escape(filled ? s.fill : std::string("none")) + "\"";
  a += " stroke-width=\"" + num(s.stroke_width) + "\"";
  return a;
}

std::string point_list(std::span<const Complex> pts) {
  std::string out;
  for (const auto& z : pts) {
    if (!out.empty()) out += ' ';
    out += num(SvgCanvas::to_x(z.real())) + "," + num(SvgCanvas::to_y(z.imag()));
  }
  return out;
}

}  // namespace

void SvgCanvas::polygon(std::span<const Complex> pts, const SvgStyle& style) {
  elements_.push_back("<polygon points=\"" + point_list(pts) + "\"" + attrs(style, true) + "/>");
}

void SvgCanvas::polyline(std::span<const Complex> pts, const SvgStyle& style) {
  elements_.push_back("<polyline points=\"" + point_list(pts) + "\"" + attrs(style, false) + "/>");
}

void SvgCanvas::points(std::span<const Complex> pts, const SvgStyle& style) {
  std::string g = "<g" + attrs(style, true) + ">";
  for (const auto& z : pts)
    g += "<circle cx=\"" + num(to_x(z.real())) + "\" cy=\"" + num(to_y(z.imag())) + "\" r=\"" +
         num(style.point_radius) + "\"/>";
  elements_.push_back(g + "</g>");
}

void SvgCanvas::axes(const SvgStyle& style) {
  const Complex h[] = {{-kExtent, 0.0}, {kExtent, 0.0}};
  const Complex v[] = {{0.0, -kExtent}, {0.0, kExtent}};
  polyline(h, style);
  polyline(v, style);
}

void SvgCanvas::title(const std::string& text) { title_ = text; }

std::string SvgCanvas::str() const {
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\" width=\"1000\" "
      "height=\"1000\">\n";
  if (!title_.empty()) out += "<title>" + escape(title_) + "</title>\n";
  out += "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
  for (const auto& e : elements_) out += e + "\n";
  out += "</svg>\n";
  return out;
}

}  // namespace trispec

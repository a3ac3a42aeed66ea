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

#include <doctest.h>

#include <numbers>

#include "trispec/json_io.hpp"
#include "trispec/laurent.hpp"
#include "trispec/numrange.hpp"
#include "trispec/svg.hpp"
#include "trispec/witness.hpp"

using namespace trispec;

TEST_CASE("complex numbers round-trip through JSON with full precision") {
  const Complex z(0.1, -std::numbers::pi);
  const Json j = complex_to_json(z);
  CHECK(j.is_array());
  CHECK(complex_from_json(Json::parse(j.dump())) == z);
  CHECK(Json(0.1).dump() == "0.1");
  CHECK_THROWS(complex_from_json(Json::parse("[1]")));
}

TEST_CASE("matrices and vectors round-trip") {
  const auto m = truncate(SymbolSequence::parse("periodic:011@0"), 4, Boundary::Periodic);
  const TridiagMatrix back = matrix_from_json(Json::parse(dump(to_json(m))));
  CHECK(back.diag == m.diag);
  CHECK(back.sub == m.sub);
  CHECK(back.sup == m.sup);
  CHECK(back.first_index == m.first_index);
  CHECK(back.boundary == Boundary::Periodic);
  CHECK(back.corner_sub == m.corner_sub);

  const SupportedVector v(-3, {Complex(0.25, 1e-300), Complex(-1.0 / 3, 0.0)});
  const SupportedVector w = vector_from_json(Json::parse(dump(to_json(v))));
  CHECK(w.offset() == -3);
  CHECK(w.values() == v.values());
}

TEST_CASE("object layouts") {
  const auto w = disk_witness(Complex(0.0, 0.5), 1e-12);
  const Json j = to_json(w);
  CHECK(j["kind"] == "disk_shift");
  for (const char* key : {"r", "theta", "k0", "t0", "j0"}) CHECK(j["params"].contains(key));
  CHECK(j["vector"]["offset"] == 0);

  const Json s = to_json(periodic_spectrum(Word{Symbol(0), Symbol(1)}, 4));
  CHECK(s["m"] == 4);
  CHECK(s["points"].size() == 8);

  const auto p = range_polygon(section(SymbolSequence::parse("constant:0"), 0, 3), 8);
  const Json pj = to_json(p);
  for (const char* key : {"angles", "support", "vertices", "hull"}) CHECK(pj.contains(key));
  CHECK(dump(pj).back() == '\n');
  CHECK(dump(pj) == dump(to_json(range_polygon(section(SymbolSequence::parse("constant:0"), 0, 3), 8))));
}

TEST_CASE("svg canvas") {
  CHECK(SvgCanvas::to_x(-2.5) == 0.0);
  CHECK(SvgCanvas::to_x(2.5) == 1000.0);
  CHECK(SvgCanvas::to_y(2.5) == 0.0);
  CHECK(SvgCanvas::to_y(0.0) == 500.0);
  SvgCanvas c;
  c.title("a < b");
  c.axes(SvgStyle{"axes"});
  c.polygon(std::vector<Complex>{0.0, 1.0, Complex(0, 1)}, SvgStyle{"tri", "red", "none", 1.5, 2.0});
  c.points(std::vector<Complex>{Complex(0.5, 0.5)}, SvgStyle{"pts"});
  const std::string s = c.str();
  CHECK(s.rfind("<svg", 0) == 0);
  CHECK(s.find("viewBox=\"0 0 1000 1000\"") != std::string::npos);
  CHECK(s.find("a &lt; b") != std::string::npos);
  CHECK(s.find("class=\"tri\"") != std::string::npos);
  CHECK(s.find("500.000,500.000 700.000,500.000 500.000,300.000") != std::string::npos);
  CHECK(s.find("<circle") != std::string::npos);
  CHECK(s.find("</svg>") != std::string::npos);
}

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

#include "trispec/json_io.hpp"

#include <stdexcept>

namespace trispec {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument("complex value must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json points_to_json(const std::vector<Complex>& points) {
  Json out = Json::array();
  for (const auto& z : points) out.push_back(complex_to_json(z));
  return out;
}

namespace {

std::vector<Complex> points_from_json(const Json& j, const char* name) {
  if (!j.is_array()) throw std::invalid_argument(std::string(name) + " must be an array");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw std::invalid_argument(std::string("missing field ") + name);
  return j.at(name);
}

}  // namespace

Json to_json(const TridiagMatrix& m) {
  Json j;
  j["n"] = m.size();
  j["first_index"] = m.first_index;
  j["diag"] = points_to_json(m.diag);
  j["sub"] = points_to_json(m.sub);
  j["sup"] = points_to_json(m.sup);
  j["boundary"] = m.boundary == Boundary::Open ? "open" : "periodic";
  j["corners"] = {{"sub", complex_to_json(m.corner_sub)}, {"sup", complex_to_json(m.corner_sup)}};
  return j;
}

TridiagMatrix matrix_from_json(const Json& j) {
  TridiagMatrix m;
  m.diag = points_from_json(field(j, "diag"), "diag");
  m.sub = points_from_json(field(j, "sub"), "sub");
  m.sup = points_from_json(field(j, "sup"), "sup");
  if (field(j, "n").get<std::size_t>() != m.diag.size())
    throw std::invalid_argument("n does not match the diagonal length");
  const auto boundary = field(j, "boundary").get<std::string>();
  if (boundary == "open") {
    m.boundary = Boundary::Open;
  } else if (boundary == "periodic") {
    m.boundary = Boundary::Periodic;
  } else {
    throw std::invalid_argument("boundary must be open or periodic");
  }
  if (j.contains("corners")) {
    m.corner_sub = complex_from_json(field(j["corners"], "sub"));
    m.corner_sup = complex_from_json(field(j["corners"], "sup"));
  }
  if (j.contains("first_index")) m.first_index = j["first_index"].get<std::int64_t>();
  m.check();
  return m;
}

Json to_json(const SupportedVector& v) {
  return Json{{"offset", v.offset()}, {"values", points_to_json(v.values())}};
}

SupportedVector vector_from_json(const Json& j) {
  return SupportedVector(field(j, "offset").get<std::int64_t>(), points_from_json(field(j, "values"), "values"));
}

Json to_json(const RangePolygon& p) {
  Json j;
  j["angles"] = p.angles;
  j["support"] = p.support_values;
  j["vertices"] = points_to_json(p.inner_vertices);
  j["hull"] = points_to_json(p.hull);
  return j;
}

Json to_json(const WitnessVector& w) {
  Json j;
  j["kind"] = to_string(w.kind);
  j["target"] = complex_to_json(w.target);
  auto params = [](const WitnessParams& p) {
    return Json{{"r", p.r}, {"theta", p.theta}, {"k0", p.k0}, {"t0", p.t0}, {"j0", p.j0}};
  };
  j["params"] = params(w.params);
  if (w.mix) {
    j["mix"] = {{"alpha2", w.mix->alpha2},
                {"lambda", complex_to_json(w.mix->lambda)},
                {"mu", w.mix->mu},
                {"zero_part", params(w.mix->zero_part)},
                {"one_part", params(w.mix->one_part)}};
  }
  j["vector"] = to_json(w.vector);
  return j;
}

Json to_json(const BlochSpectrum& s) {
  Json j;
  j["word"] = points_to_json(s.word);
  j["m"] = s.m;
  j["points"] = points_to_json(s.points);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace trispec

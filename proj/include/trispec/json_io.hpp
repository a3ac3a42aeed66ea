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

#include <string>

#include <json.hpp>

#include "trispec/laurent.hpp"
#include "trispec/numrange.hpp"
#include "trispec/tridiag.hpp"
#include "trispec/witness.hpp"

namespace trispec {

/// Key order follows insertion, so output is stable and readable.
using Json = nlohmann::ordered_json;

// Complex numbers are [re, im] pairs. Doubles are written in the shortest
// form that parses back to the same value.
Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const TridiagMatrix& m);
TridiagMatrix matrix_from_json(const Json& j);

Json to_json(const SupportedVector& v);
SupportedVector vector_from_json(const Json& j);

Json to_json(const RangePolygon& p);
Json to_json(const WitnessVector& w);
Json to_json(const BlochSpectrum& s);
Json points_to_json(const std::vector<Complex>& points);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace trispec

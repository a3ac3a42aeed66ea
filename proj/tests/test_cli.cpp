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

#include <cstdio>
#include <fstream>
#include <sstream>

#include "trispec/cli.hpp"
#include "trispec/json_io.hpp"

using namespace trispec;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("seq window of the explicit example") {
  const auto r = call({"seq", "--seq", "explicit:[0,1,1,1,0|1,0,0,0,1,0]", "--window", "-2,1"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "1,0,1,0\n");
  const auto j = call({"seq", "--seq", "pseudoergodic:{0,1}", "--runs", "1", "--N", "1000", "--format", "json"});
  CHECK(j.code == cli::kOk);
  CHECK(Json::parse(j.out)["longest_run"]["length"].get<int>() >= 5);
}

TEST_CASE("single witness") {
  const auto r = call({"witness", "--seq", "pseudoergodic:{0,1}", "--lambda", "0.5,0.7853981633974483", "--symbol",
                       "0"});
  REQUIRE(r.code == cli::kOk);
  const Json j = Json::parse(r.out);
  CHECK(j["kind"] == "zero_run");
  CHECK(j["residual"].get<double>() <= 1e-12);
  CHECK(j["params"]["k0"] == 2);

  const auto cart = call({"witness", "--mode", "disk", "--lambda", "0,0.5", "--cartesian", "--tol", "1e-10"});
  CHECK(cart.code == cli::kOk);
  CHECK(Json::parse(cart.out)["residual"].get<double>() <= 1e-10);

  const auto csv = call({"witness", "--seq", "constant:1", "--lambda", "0.3,1", "--symbol", "1", "--format", "csv"});
  CHECK(csv.code == cli::kOk);
  CHECK(csv.out.rfind("k,re,im\n", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == cli::kInputError);
  CHECK(call({"bogus"}).code == cli::kInputError);
  CHECK(call({"range", "--seq", "constant:0", "--frobnicate"}).code == cli::kInputError);
  CHECK(call({"range", "--seq", "notakind:3"}).code == cli::kInputError);
  CHECK(call({"witness", "--seq", "pseudoergodic:{0,1}", "--lambda", "1.5,0"}).code == cli::kInputError);
  const auto st = call({"witness", "--seq", "sturmian:0.6180339887498949,0", "--lambda", "0.9,0"});
  CHECK(st.code == cli::kCheckFailed);
  CHECK(st.err.find("longest") != std::string::npos);
  CHECK(call({"--help"}).code == cli::kOk);
}

TEST_CASE("range, hulls and spectra") {
  const auto r = call({"range", "--seq", "pseudoergodic:{0,1}", "--n", "16", "--angles", "64", "--check"});
  REQUIRE(r.code == cli::kOk);
  const Json j = Json::parse(r.out);
  CHECK(j["size"] == 33);
  CHECK(j["gamma"]["inside"] == true);

  const auto svg = call({"range", "--seq", "constant:1", "--n", "8", "--angles", "16", "--format", "svg",
                         "--css-prefix", "ts-"});
  CHECK(svg.code == cli::kOk);
  CHECK(svg.out.find("<svg") != std::string::npos);
  CHECK(svg.out.find("ts-") != std::string::npos);

  const auto h = call({"hulls", "--alphabet", "{0,1}", "--m", "512", "--check"});
  CHECK(h.code == cli::kOk);
  CHECK(Json::parse(h.out)["passed"] == true);

  const auto p = call({"spectrum", "--kind", "periodic", "--word", "01", "--m", "8"});
  CHECK(p.code == cli::kOk);
  CHECK(Json::parse(p.out)["points"].size() == 16);
  const auto s = call({"spectrum", "--kind", "symbol", "--a", "1", "--m", "8", "--format", "csv"});
  CHECK(s.code == cli::kOk);
  CHECK(s.out.rfind("re,im\n2,0\n", 0) == 0);
}

TEST_CASE("gamma-check is deterministic") {
  const std::vector<std::string> args{"gamma-check", "--sequences", "3", "--vectors", "50", "--seed", "9"};
  const auto a = call(args);
  const auto b = call(args);
  CHECK(a.code == cli::kOk);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["passed"] == true);
}

TEST_CASE("config files supply defaults") {
  const std::string path = "trispec_test_config.txt";
  {
    std::ofstream f(path);
    f << "# defaults\nseq = explicit:[0,1,1,1,0|1,0,0,0,1,0]\nwindow=-5,5\n";
  }
  const auto r = call({"seq", "--config", path, "--window", "-2,1"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "1,0,1,0\n");
  const auto expanded = cli::expand_config({"seq", "--config", path});
  CHECK(expanded == std::vector<std::string>{"seq", "--seq=explicit:[0,1,1,1,0|1,0,0,0,1,0]", "--window=-5,5"});
  CHECK(call({"seq", "--config", "/nonexistent/file"}).code == cli::kInputError);
  std::remove(path.c_str());
}

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

#include "trispec/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "trispec/eig.hpp"
#include "trispec/experiments.hpp"
#include "trispec/geometry.hpp"
#include "trispec/json_io.hpp"
#include "trispec/laurent.hpp"
#include "trispec/numrange.hpp"
#include "trispec/svg.hpp"
#include "trispec/witness.hpp"

namespace trispec::cli {

namespace {

/// Every flag of every subcommand; unused fields keep their defaults.
struct RunConfig {
  std::string seq;
  std::vector<std::string> seqs;
  std::int64_t n = 64;
  int angles = 360;
  int max_angles = 4096;
  double vertex_gap = 1e-6;
  bool no_adaptive = false;
  std::int64_t N = kDefaultWitnessWindow;
  double tol = -1.0;  // subcommand-specific default when negative
  std::string format;
  std::string output;
  std::uint64_t seed = 1;
  bool check = false;

  // gamma-check
  int sequences = 10;
  int vectors = 1000;
  int max_support = 24;
  int max_offset = 64;
  int ellipse_samples = 64;

  // witness
  std::string lambda;
  bool cartesian = false;
  int symbol = 0;
  std::string mode = "run";
  bool grid_mode = false;

  // spectrum, hulls, experiment
  std::string kind = "symbol";
  std::string a = "0";
  std::string word;
  int m = -1;
  int grid = 41;
  double extent = 2.5;
  double eps = 0.1;
  std::string alphabet = "{0,1}";
  int samples = 4096;
  int max_period = 3;

  // seq
  std::string window;
  std::string runs;
  int defect = -1;
  int factors = -1;

  // svg
  std::string css_prefix = "trispec";
  std::string gamma_color = "#1f77b4";
  std::string hull_color = "#d62728";
  std::string point_color = "#2ca02c";
  std::string fill = "none";
};

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string num(double v) { return format_double(v); }

std::pair<double, double> parse_pair(const std::string& text, const char* what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError(std::string(what) + " must be a pair 'x,y'");
  try {
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw InputError(std::string("cannot parse ") + what + " '" + text + "'");
  }
}

Complex parse_lambda(const RunConfig& c) {
  const auto [x, y] = parse_pair(c.lambda, "--lambda");
  if (c.cartesian) return {x, y};
  if (x < 0.0) throw InputError("--lambda radius must be nonnegative");
  return std::polar(x, y);
}

SymbolSequence load_seq(const std::string& text) {
  if (text.empty()) throw InputError("--seq is required");
  return SymbolSequence::parse(text);
}

SvgStyle style(const RunConfig& c, const std::string& role, const std::string& stroke, bool filled = false) {
  SvgStyle s;
  s.css_class = c.css_prefix.empty() ? role : c.css_prefix + "-" + role;
  s.stroke = stroke;
  s.fill = filled ? c.fill : "none";
  return s;
}

void gamma_overlay(SvgCanvas& svg, const RunConfig& c) {
  svg.axes(style(c, "axes", "#999999"));
  svg.polygon(gamma_boundary_samples(720), style(c, "gamma", c.gamma_color));
}

struct Output {
  std::ostream& out;
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open output file '" + path + "'");
    f << text;
  }
};

// ---------------------------------------------------------------- range

int cmd_range(const RunConfig& c, const Output& o) {
  const SymbolSequence seq = load_seq(c.seq);
  const TridiagMatrix m = truncate(seq.cached(-c.n - 1, c.n + 1), c.n);
  RangeOptions opt;
  opt.angles = c.angles;
  opt.adaptive = !c.no_adaptive;
  opt.vertex_gap = c.vertex_gap;
  opt.max_angles = c.max_angles;
  const RangePolygon poly = range_polygon(m, opt);
  const double tol = c.tol < 0.0 ? 1e-9 : c.tol;
  double excess = -1.0;
  for (const auto& z : poly.hull) excess = std::max(excess, gamma_excess(z));
  const bool inside = excess <= tol;

  if (c.format == "csv") {
    std::string s = "angle,support,vertex_re,vertex_im\n";
    for (std::size_t i = 0; i < poly.angles.size(); ++i)
      s += num(poly.angles[i]) + "," + num(poly.support_values[i]) + "," + num(poly.inner_vertices[i].real()) +
           "," + num(poly.inner_vertices[i].imag()) + "\n";
    o.write(s);
  } else if (c.format == "svg") {
    SvgCanvas svg;
    svg.title("numerical range of the truncation n=" + std::to_string(c.n) + " for " + seq.text());
    gamma_overlay(svg, c);
    svg.polygon(poly.hull, style(c, "inner-hull", c.hull_color, true));
    o.write(svg.str());
  } else {
    Json j;
    j["command"] = "range";
    j["seq"] = seq.text();
    j["n"] = c.n;
    j["size"] = m.size();
    j["polygon"] = to_json(poly);
    j["gamma"] = {{"tol", tol}, {"max_excess", excess}, {"inside", inside}};
    o.write(dump(j));
  }
  return c.check && !inside ? kCheckFailed : kOk;
}

// ---------------------------------------------------------- gamma-check

int cmd_gamma_check(const RunConfig& c, const Output& o, std::ostream& err) {
  std::vector<SymbolSequence> seqs;
  for (const auto& s : c.seqs) seqs.push_back(load_seq(s));
  if (seqs.empty()) {
    if (c.sequences < 1) throw InputError("--sequences must be positive");
    for (int i = 0; i < c.sequences; ++i)
      seqs.emplace_back(gen::Bernoulli{Alphabet({Symbol(0.0), Symbol(1.0)}), {0.5, 0.5}, c.seed + i});
  }
  GammaCheckOptions opt;
  opt.vectors = c.vectors;
  opt.max_support = c.max_support;
  opt.max_offset = c.max_offset;
  opt.ellipse_samples = c.ellipse_samples;
  opt.tol = c.tol < 0.0 ? 1e-9 : c.tol;
  opt.seed = c.seed;
  const GammaCheckReport report = gamma_check(seqs, opt);

  if (c.format == "csv") {
    std::string s = "seq,vectors,rayleigh_failures,ellipse_failures,max_excess\n";
    for (const auto& r : report.rows)
      s += csv_quote(r.seq) + "," + std::to_string(r.vectors) + "," + std::to_string(r.rayleigh_failures) + "," +
           std::to_string(r.ellipse_failures) + "," + num(r.max_excess) + "\n";
    o.write(s);
  } else {
    Json j;
    j["command"] = "gamma-check";
    j["tol"] = opt.tol;
    j["seed"] = c.seed;
    j["passed"] = report.passed();
    Json rows = Json::array();
    for (const auto& r : report.rows)
      rows.push_back({{"seq", r.seq},
                      {"vectors", r.vectors},
                      {"rayleigh_failures", r.rayleigh_failures},
                      {"ellipse_failures", r.ellipse_failures},
                      {"max_excess", r.max_excess}});
    j["rows"] = rows;
    o.write(dump(j));
  }
  if (!report.passed()) {
    err << "gamma-check: containment failures detected\n";
    return kCheckFailed;
  }
  return kOk;
}

// -------------------------------------------------------------- witness

int cmd_witness(const RunConfig& c, const Output& o, std::ostream& err) {
  const double tol = c.tol < 0.0 ? 1e-12 : c.tol;
  if (c.symbol != 0 && c.symbol != 1) throw InputError("--symbol must be 0 or 1");

  if (c.grid_mode) {
    const std::int64_t reach = std::min<std::int64_t>(c.N, std::int64_t{1} << 20) + 64;
    const SymbolSequence seq = load_seq(c.seq).cached(-reach, reach);
    Json rows = Json::array();
    std::string csv = "r,theta,symbol,k0,t0,j0,residual\n";
    double worst = 0.0;
    for (int ri = 1; ri <= 9; ++ri)
      for (int ti = 0; ti < 12; ++ti) {
        const double r = ri / 10.0;
        const double theta = ti * std::numbers::pi / 6.0;
        const WitnessVector w = run_witness(seq, std::polar(r, theta), c.symbol, c.N);
        const double res = std::abs(rayleigh(seq, w.vector) - w.target);
        worst = std::max(worst, res);
        rows.push_back({{"r", r},
                        {"theta", theta},
                        {"symbol", c.symbol},
                        {"k0", w.params.k0},
                        {"t0", w.params.t0},
                        {"j0", w.params.j0},
                        {"residual", res}});
        csv += num(r) + "," + num(theta) + "," + std::to_string(c.symbol) + "," + std::to_string(w.params.k0) +
               "," + num(w.params.t0) + "," + std::to_string(w.params.j0) + "," + num(res) + "\n";
      }
    if (c.format == "csv") {
      o.write(csv);
    } else {
      Json j;
      j["command"] = "witness";
      j["seq"] = seq.text();
      j["symbol"] = c.symbol;
      j["grid"] = rows;
      j["max_residual"] = worst;
      j["passed"] = worst <= tol;
      o.write(dump(j));
    }
    if (worst > tol) {
      err << "witness: residual " << num(worst) << " exceeds " << num(tol) << "\n";
      return kCheckFailed;
    }
    return kOk;
  }

  if (c.lambda.empty()) throw InputError("--lambda is required unless --grid is given");
  const Complex lambda = parse_lambda(c);
  WitnessVector w;
  SymbolSequence seq(gen::Constant{Symbol(0.0)});
  if (c.mode == "disk") {
    w = disk_witness(lambda, tol);
  } else {
    seq = load_seq(c.seq);
    w = c.mode == "convex" ? convex_witness(seq, lambda, c.N) : run_witness(seq, lambda, c.symbol, c.N);
  }
  const Complex value = rayleigh(seq, w.vector);
  const double res = std::abs(value - w.target);

  if (c.format == "csv") {
    std::string s = "k,re,im\n";
    for (std::int64_t k = w.vector.first(); k <= w.vector.last(); ++k)
      s += std::to_string(k) + "," + num(w.vector.at(k).real()) + "," + num(w.vector.at(k).imag()) + "\n";
    o.write(s);
  } else {
    Json j = to_json(w);
    j["seq"] = seq.text();
    j["rayleigh"] = complex_to_json(value);
    j["residual"] = res;
    j["norm"] = w.vector.norm();
    o.write(dump(j));
  }
  if (res > tol) {
    err << "witness: residual " << num(res) << " exceeds " << num(tol) << "\n";
    return kCheckFailed;
  }
  return kOk;
}

// ------------------------------------------------------------- spectrum

int cmd_spectrum(const RunConfig& c, const Output& o) {
  Json j;
  j["command"] = "spectrum";
  j["kind"] = c.kind;
  std::vector<Complex> points;
  std::vector<double> values;

  if (c.kind == "symbol") {
    const int m = c.m < 0 ? 360 : c.m;
    const Symbol a = parse_symbol(c.a);
    points = symbol_curve(a, m).samples;
    j["a"] = complex_to_json(a);
    j["m"] = m;
    j["points"] = points_to_json(points);
  } else if (c.kind == "periodic") {
    if (c.word.empty()) throw InputError("--word is required for --kind periodic");
    const int m = c.m < 0 ? 64 : c.m;
    const BlochSpectrum s = periodic_spectrum(parse_word(c.word), m);
    points = s.points;
    const Json spec_json = to_json(s);
    for (const auto& [k, v] : spec_json.items()) j[k] = v;
  } else {
    const SymbolSequence seq = load_seq(c.seq);
    const SigmaGrid g = sigma_min_grid(truncate(seq, c.n), c.grid, c.extent);
    points = g.points;
    values = g.sigma;
    j["seq"] = seq.text();
    j["n"] = c.n;
    j["grid"] = c.grid;
    j["extent"] = c.extent;
    j["points"] = points_to_json(g.points);
    j["sigma_min"] = g.sigma;
  }

  if (c.format == "csv") {
    std::string s = values.empty() ? "re,im\n" : "re,im,sigma_min\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
      s += num(points[i].real()) + "," + num(points[i].imag());
      if (!values.empty()) s += "," + num(values[i]);
      s += "\n";
    }
    o.write(s);
  } else if (c.format == "svg") {
    SvgCanvas svg;
    svg.title(c.kind + " spectrum");
    gamma_overlay(svg, c);
    if (!values.empty()) {
      std::vector<Complex> pseudo;
      for (std::size_t i = 0; i < points.size(); ++i)
        if (values[i] <= c.eps) pseudo.push_back(points[i]);
      points = std::move(pseudo);
    }
    svg.points(points, style(c, "spectrum", c.point_color, true));
    o.write(svg.str());
  } else {
    o.write(dump(j));
  }
  return kOk;
}

// ---------------------------------------------------------------- hulls

int cmd_hulls(const RunConfig& c, const Output& o, std::ostream& err) {
  const Alphabet alphabet = parse_alphabet(c.alphabet);
  const int m = c.m < 0 ? 2048 : c.m;
  const auto hull = constants_hull(alphabet, m);
  const auto dense = polygon_boundary_samples(hull, c.samples);
  const double d = hausdorff(dense, gamma_boundary_samples(c.samples));
  const double bound = 2.0 * (2.0 * std::numbers::pi / m) + 1e-9;
  const bool passed = d <= bound;

  if (c.format == "csv") {
    std::string s = "re,im\n";
    for (const auto& z : hull) s += num(z.real()) + "," + num(z.imag()) + "\n";
    o.write(s);
  } else if (c.format == "svg") {
    SvgCanvas svg;
    svg.title("constants hull of {" + format_word(alphabet.symbols()) + "}");
    gamma_overlay(svg, c);
    svg.polygon(hull, style(c, "constants-hull", c.hull_color, true));
    o.write(svg.str());
  } else {
    Json j;
    j["command"] = "hulls";
    j["alphabet"] = points_to_json(alphabet.symbols());
    j["m"] = m;
    j["hull"] = points_to_json(hull);
    j["hausdorff_to_gamma"] = d;
    j["bound"] = bound;
    j["passed"] = passed;
    o.write(dump(j));
  }
  if (c.check && !passed) {
    err << "hulls: Hausdorff distance " << num(d) << " to Gamma exceeds " << num(bound) << "\n";
    return kCheckFailed;
  }
  return kOk;
}

// ------------------------------------------------------------------ seq

int cmd_seq(const RunConfig& c, const Output& o) {
  const SymbolSequence seq = load_seq(c.seq);
  Json j;
  j["command"] = "seq";
  j["seq"] = seq.text();
  std::string text;

  const bool any = !c.window.empty() || !c.runs.empty() || c.defect >= 0 || c.factors >= 0;
  const std::string window = c.window.empty() && !any ? "-10,10" : c.window;
  if (!window.empty()) {
    const auto [lo, hi] = parse_pair(window, "--window");
    if (lo != std::floor(lo) || hi != std::floor(hi)) throw InputError("--window bounds must be integers");
    const Word w = seq.window(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi));
    text += format_word(w) + "\n";
    j["window"] = {{"from", static_cast<std::int64_t>(lo)},
                   {"to", static_cast<std::int64_t>(hi)},
                   {"values", points_to_json(w)}};
  }
  if (!c.runs.empty()) {
    const Run r = longest_constant_run(seq, parse_symbol(c.runs), c.N);
    text += "longest_run symbol=" + c.runs + " length=" + std::to_string(r.length) +
            " start=" + std::to_string(r.start) + " N=" + std::to_string(c.N) + "\n";
    j["longest_run"] = {{"symbol", c.runs}, {"N", c.N}, {"length", r.length}, {"start", r.start}};
  }
  if (c.defect >= 0) {
    const auto d = pseudoergodic_defect(seq, c.defect, c.N);
    text += "defect L=" + std::to_string(c.defect) + " missing=" + std::to_string(d) + " N=" + std::to_string(c.N) +
            "\n";
    j["defect"] = {{"L", c.defect}, {"N", c.N}, {"missing", d}};
  }
  if (c.factors >= 0) {
    const auto f = factor_count(seq, c.factors, c.N);
    text += "factors L=" + std::to_string(c.factors) + " count=" + std::to_string(f) + " N=" + std::to_string(c.N) +
            "\n";
    j["factors"] = {{"L", c.factors}, {"N", c.N}, {"count", f}};
  }
  o.write(c.format == "json" ? dump(j) : text);
  return kOk;
}

// ----------------------------------------------------- experiment conjecture

int cmd_conjecture(const RunConfig& c, const Output& o) {
  const Alphabet alphabet = parse_alphabet(c.alphabet);
  const int m = c.m < 0 ? 64 : c.m;
  const SymbolSequence seq = load_seq(c.seq.empty() ? std::string("pseudoergodic:{0,1}") : c.seq);
  const SigmaGrid g = sigma_min_grid(truncate(seq, c.n), c.grid, c.extent);
  const ConjectureReport r = conjecture_report(alphabet, c.max_period, m, g, c.eps);
  if (c.format == "csv") {
    o.write("words,union_points,pseudo_points,hausdorff\n" + std::to_string(r.words) + "," +
            std::to_string(r.union_points) + "," + std::to_string(r.pseudo_points) + "," + num(r.hausdorff) + "\n");
  } else {
    Json j;
    j["command"] = "experiment conjecture";
    j["alphabet"] = points_to_json(alphabet.symbols());
    j["max_period"] = c.max_period;
    j["m"] = m;
    j["seq"] = seq.text();
    j["n"] = c.n;
    j["grid"] = c.grid;
    j["extent"] = c.extent;
    j["eps"] = c.eps;
    j["words"] = r.words;
    j["union_points"] = r.union_points;
    j["pseudo_points"] = r.pseudo_points;
    j["hausdorff"] = r.hausdorff;
    o.write(dump(j));
  }
  return kOk;
}

void add_format(CLI::App* sub, RunConfig& c, std::vector<std::string> allowed) {
  const std::string help = "Output format (default " + allowed.front() + ")";
  sub->add_option("--format", c.format, help)->check(CLI::IsMember(allowed));
  sub->add_option("--output,-o", c.output, "Write to this file instead of standard output");
}

void add_svg_style(CLI::App* sub, RunConfig& c) {
  sub->add_option("--css-prefix", c.css_prefix, "Prefix for SVG class names")->capture_default_str();
  sub->add_option("--gamma-color", c.gamma_color, "Stroke color of the Gamma outline")->capture_default_str();
  sub->add_option("--hull-color", c.hull_color, "Stroke color of hulls")->capture_default_str();
  sub->add_option("--point-color", c.point_color, "Color of point sets")->capture_default_str();
  sub->add_option("--fill", c.fill, "Fill color of hulls and points")->capture_default_str();
}

}  // namespace

std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw std::invalid_argument("--config requires a file");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      out.push_back(args[i]);
    }
  }
  if (path.empty()) return out;

  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read config file '" + path + "'");
  auto given = [&](const std::string& key) {
    const std::string flag = "--" + key;
    return std::any_of(out.begin(), out.end(),
                       [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
  };
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::vector<std::string> extra;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": empty key");
    if (given(key)) continue;
    if (value == "true") {
      extra.push_back("--" + key);
    } else if (value != "false") {
      extra.push_back("--" + key + "=" + value);
    }
  }
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  try {
    args = expand_config(raw_args);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  RunConfig c;
  CLI::App app{"trispec: numerical ranges and spectra of tridiagonal operators over symbol sequences"};
  app.name("trispec");
  app.require_subcommand(1);
  app.add_option("--config", "key=value file with flag defaults; command-line flags take precedence");

  auto* range = app.add_subcommand("range", "Numerical range of a truncation with the Gamma overlay");
  range->add_option("--seq", c.seq, "Sequence spec, e.g. pseudoergodic:{0,1}")->required();
  range->add_option("--n", c.n, "Truncation half-width (matrix size 2n+1)")->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  range->add_option("--angles", c.angles, "Initial number of rotation angles")->check(CLI::Range(3, 1000000))
      ->capture_default_str();
  range->add_option("--max-angles", c.max_angles, "Cap on angles after adaptive refinement")->capture_default_str();
  range->add_option("--vertex-gap", c.vertex_gap, "Refine angle gaps whose vertices are farther apart")
      ->capture_default_str();
  range->add_flag("--no-adaptive", c.no_adaptive, "Use only the initial uniform angles");
  range->add_option("--tol", c.tol, "Gamma containment tolerance (default 1e-9)");
  range->add_flag("--check", c.check, "Exit 2 when a hull vertex lies outside Gamma");
  add_format(range, c, {"json", "csv", "svg"});
  add_svg_style(range, c);
  range->footer("CSV columns: angle,support,vertex_re,vertex_im");

  auto* gcheck = app.add_subcommand("gamma-check", "Random unit vectors: Rayleigh values and ellipses inside Gamma");
  gcheck->add_option("--seq", c.seqs, "Sequence spec (repeatable); default: random {0,1} Bernoulli sequences");
  gcheck->add_option("--sequences", c.sequences, "Number of random sequences when --seq is absent")
      ->capture_default_str();
  gcheck->add_option("--vectors", c.vectors, "Random vectors per sequence")->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  gcheck->add_option("--max-support", c.max_support, "Maximum support length")->check(CLI::PositiveNumber)
      ->capture_default_str();
  gcheck->add_option("--max-offset", c.max_offset, "Maximum |offset| of the support")
      ->check(CLI::NonNegativeNumber)->capture_default_str();
  gcheck->add_option("--ellipse-samples", c.ellipse_samples, "Boundary samples per ellipse (0 disables)")
      ->check(CLI::NonNegativeNumber)->capture_default_str();
  gcheck->add_option("--tol", c.tol, "Containment tolerance (default 1e-9)");
  gcheck->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  add_format(gcheck, c, {"json", "csv"});
  gcheck->footer("CSV columns: seq,vectors,rayleigh_failures,ellipse_failures,max_excess");

  auto* witness = app.add_subcommand("witness", "Constructive witness vectors");
  witness->add_option("--seq", c.seq, "Sequence spec (not needed for --mode disk)");
  witness->add_option("--lambda", c.lambda, "Target as 'r,theta' (or 'x,y' with --cartesian)");
  witness->add_flag("--cartesian", c.cartesian, "Read --lambda as real and imaginary parts");
  witness->add_option("--symbol", c.symbol, "Run symbol for --mode run: 0 or 1")->capture_default_str();
  witness->add_option("--mode", c.mode, "run, disk or convex")->check(CLI::IsMember({"run", "disk", "convex"}))
      ->capture_default_str();
  witness->add_flag("--grid", c.grid_mode, "Run witnesses over r in 0.1..0.9, theta in 0..11pi/6");
  witness->add_option("--N", c.N, "Scan window [-N, N] for runs")->check(CLI::PositiveNumber)
      ->capture_default_str();
  witness->add_option("--tol", c.tol, "Residual tolerance, also the disk truncation tolerance (default 1e-12)");
  add_format(witness, c, {"json", "csv"});
  witness->footer("CSV columns: k,re,im (single witness); r,theta,symbol,k0,t0,j0,residual (--grid)");

  auto* spectrum = app.add_subcommand("spectrum", "Symbol curves, periodic spectra, sigma_min grids");
  spectrum->add_option("--kind", c.kind, "symbol, periodic or sigma")
      ->check(CLI::IsMember({"symbol", "periodic", "sigma"}))->capture_default_str();
  spectrum->add_option("--a", c.a, "Symbol for --kind symbol, e.g. 1 or 0.5-1i")->capture_default_str();
  spectrum->add_option("--word", c.word, "Period word for --kind periodic, e.g. 011 or 0,1,1");
  spectrum->add_option("--m", c.m, "Samples or phases (default 360 for symbol, 64 for periodic)")
      ->check(CLI::PositiveNumber);
  spectrum->add_option("--seq", c.seq, "Sequence spec for --kind sigma");
  spectrum->add_option("--n", c.n, "Truncation half-width for --kind sigma")->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  spectrum->add_option("--grid", c.grid, "Grid side for --kind sigma")->check(CLI::Range(2, 4096))
      ->capture_default_str();
  spectrum->add_option("--extent", c.extent, "Grid covers [-extent, extent]^2")->capture_default_str();
  spectrum->add_option("--eps", c.eps, "Pseudospectrum level drawn in SVG output")->capture_default_str();
  add_format(spectrum, c, {"json", "csv", "svg"});
  add_svg_style(spectrum, c);
  spectrum->footer("CSV columns: re,im (symbol, periodic); re,im,sigma_min (sigma)");

  auto* hulls = app.add_subcommand("hulls", "Convex hull of the alphabet's symbol curves versus Gamma");
  hulls->add_option("--alphabet", c.alphabet, "Alphabet, e.g. {0,1} or {-1,1}")->capture_default_str();
  hulls->add_option("--m", c.m, "Samples per symbol curve (default 2048)")->check(CLI::Range(8, 10000000));
  hulls->add_option("--samples", c.samples, "Boundary samples for the Hausdorff comparison")
      ->check(CLI::Range(8, 10000000))->capture_default_str();
  hulls->add_flag("--check", c.check, "Exit 2 when the distance exceeds 2(2pi/m)+1e-9");
  add_format(hulls, c, {"json", "csv", "svg"});
  add_svg_style(hulls, c);
  hulls->footer("CSV columns: re,im (hull vertices, counterclockwise)");

  auto* seqcmd = app.add_subcommand("seq", "Window dumps, longest runs and pseudoergodic defects");
  seqcmd->add_option("--seq", c.seq, "Sequence spec")->required();
  seqcmd->add_option("--window", c.window, "Inclusive index range 'i,j' (default -10,10)");
  seqcmd->add_option("--runs", c.runs, "Longest run of this symbol in [-N, N]");
  seqcmd->add_option("--defect", c.defect, "Count words of this length missing from [-N, N]");
  seqcmd->add_option("--factors", c.factors, "Count distinct words of this length in [-N, N]");
  seqcmd->add_option("--N", c.N, "Scan window")->check(CLI::PositiveNumber)->capture_default_str();
  add_format(seqcmd, c, {"text", "json"});

  auto* experiment = app.add_subcommand("experiment", "Exploratory experiments (reports only)");
  experiment->require_subcommand(1);
  auto* conj = experiment->add_subcommand("conjecture", "Periodic spectra unions versus a truncation pseudospectrum");
  conj->add_option("--alphabet", c.alphabet, "Alphabet of the periodic words")->capture_default_str();
  conj->add_option("--max-period", c.max_period, "Longest period word")->check(CLI::Range(1, 8))
      ->capture_default_str();
  conj->add_option("--m", c.m, "Bloch phases per word (default 64)")->check(CLI::PositiveNumber);
  conj->add_option("--seq", c.seq, "Truncated sequence (default pseudoergodic:{0,1})");
  conj->add_option("--n", c.n, "Truncation half-width")->check(CLI::Range(1, 100000))->capture_default_str();
  conj->add_option("--grid", c.grid, "sigma_min grid side")->check(CLI::Range(2, 4096))->capture_default_str();
  conj->add_option("--extent", c.extent, "Grid covers [-extent, extent]^2")->capture_default_str();
  conj->add_option("--eps", c.eps, "Pseudospectrum level")->capture_default_str();
  add_format(conj, c, {"json", "csv"});
  conj->footer("CSV columns: words,union_points,pseudo_points,hausdorff");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  if (c.format.empty()) c.format = seqcmd->parsed() ? "text" : "json";
  const Output o{out, c.output};
  try {
    if (range->parsed()) return cmd_range(c, o);
    if (gcheck->parsed()) return cmd_gamma_check(c, o, err);
    if (witness->parsed()) return cmd_witness(c, o, err);
    if (spectrum->parsed()) return cmd_spectrum(c, o);
    if (hulls->parsed()) return cmd_hulls(c, o, err);
    if (seqcmd->parsed()) return cmd_seq(c, o);
    if (conj->parsed()) return cmd_conjecture(c, o);
  } catch (const WitnessError& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  err << "error: no command\n";
  return kInputError;
}

}  // namespace trispec::cli

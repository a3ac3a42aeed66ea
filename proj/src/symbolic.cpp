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

#include "trispec/symbolic.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace trispec {

namespace {

bool symbol_less(Symbol a, Symbol b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(trim(s.substr(start)));
      return parts;
    }
    parts.push_back(trim(s.substr(start, pos - start)));
    start = pos + 1;
  }
}

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

double parse_real(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    bad("invalid number '" + std::string(s) + "'");
  return v;
}

template <typename Int>
Int parse_int(std::string_view s) {
  s = trim(s);
  Int v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    bad("invalid integer '" + std::string(s) + "'");
  return v;
}

std::vector<Symbol> parse_symbol_list(std::string_view s) {
  std::vector<Symbol> out;
  if (trim(s).empty()) return out;
  for (auto tok : split(s, ',')) out.push_back(parse_symbol(tok));
  return out;
}

bool is_digit_symbol(Symbol s) {
  return s.imag() == 0.0 && !std::signbit(s.imag()) && !std::signbit(s.real()) &&
         s.real() >= 0.0 && s.real() <= 9.0 && std::floor(s.real()) == s.real();
}

/// Enclosed body of "<open>...<close>" at the front of s; rest receives the tail.
std::string_view bracketed(std::string_view s, char open, char close, std::string_view& rest) {
  if (s.empty() || s.front() != open) bad(std::string("expected '") + open + "'");
  const auto end = s.find(close);
  if (end == std::string_view::npos) bad(std::string("missing '") + close + "'");
  rest = s.substr(end + 1);
  return s.substr(1, end - 1);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Symbol index at position m >= 0 of the length-then-lex concatenation.
std::size_t pseudoergodic_digit(std::uint64_t m, std::size_t a) {
  using u128 = unsigned __int128;
  if (a == 1) return 0;
  u128 start = 0;
  u128 count = a;  // a^L
  u128 L = 1;
  while (true) {
    const u128 block = L * count;
    if (static_cast<u128>(m) < start + block) break;
    start += block;
    ++L;
    count *= a;
  }
  const u128 idx = static_cast<u128>(m) - start;
  u128 word = idx / L;
  const u128 pos = idx % L;
  // digit at position pos (most significant first) of word in base a
  for (u128 i = 0; i + 1 + pos < L; ++i) word /= a;
  return static_cast<std::size_t>(word % a);
}

}  // namespace

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) bad("alphabet must be nonempty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (!std::isfinite(symbols_[i].real()) || !std::isfinite(symbols_[i].imag()))
      bad("alphabet symbols must be finite");
    for (std::size_t j = 0; j < i; ++j)
      if (symbols_[i] == symbols_[j]) bad("alphabet symbols must be distinct");
  }
}

std::optional<std::size_t> Alphabet::index_of(Symbol s) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == s) return i;
  return std::nullopt;
}

bool Alphabet::is_binary_01() const {
  return std::all_of(symbols_.begin(), symbols_.end(),
                     [](Symbol s) { return s == Symbol(0.0) || s == Symbol(1.0); });
}

Alphabet sorted_alphabet(std::vector<Symbol> symbols) {
  std::sort(symbols.begin(), symbols.end(), symbol_less);
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  return Alphabet(std::move(symbols));
}

// ---------------------------------------------------------------------------
// Text forms

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) bad("cannot format number");
  return std::string(buf, ptr);
}

std::string format_symbol(Symbol s) {
  if (s.imag() == 0.0 && !std::signbit(s.imag())) return format_double(s.real());
  if (s.real() == 0.0 && !std::signbit(s.real())) return format_double(s.imag()) + "i";
  std::string im = format_double(s.imag());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return format_double(s.real()) + im + "i";
}

Symbol parse_symbol(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) bad("empty symbol");
  if (s.back() != 'i') return {parse_real(s), 0.0};

  const std::string_view body = s.substr(0, s.size() - 1);
  // split point: last sign that is not leading and not an exponent sign
  std::size_t split_at = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  auto imag_part = [](std::string_view t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_real(t);
  };
  if (split_at == std::string_view::npos) return {0.0, imag_part(body)};
  return {parse_real(body.substr(0, split_at)), imag_part(body.substr(split_at))};
}

std::string format_word(const Word& w, char sep) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += sep;
    out += format_symbol(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  auto s = trim(text);
  if (!s.empty() && s.front() == '[') {
    std::string_view rest;
    s = bracketed(s, '[', ']', rest);
    if (!trim(rest).empty()) bad("trailing text after word");
  }
  Word w;
  if (s.find(',') == std::string_view::npos &&
      std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    for (char c : s) w.push_back(Symbol(c - '0'));
  } else {
    w = parse_symbol_list(s);
  }
  if (w.empty()) bad("empty word");
  return w;
}

Alphabet parse_alphabet(std::string_view text) {
  auto s = trim(text);
  if (!s.empty() && s.front() == '{') {
    std::string_view rest;
    s = bracketed(s, '{', '}', rest);
    if (!trim(rest).empty()) bad("trailing text after alphabet");
  }
  return Alphabet(parse_symbol_list(s));
}

namespace {

struct Formatter {
  std::string operator()(const gen::Constant& c) const {
    return "constant:" + format_symbol(c.symbol);
  }
  std::string operator()(const gen::Periodic& p) const {
    std::string word;
    if (std::all_of(p.word.begin(), p.word.end(), is_digit_symbol)) {
      for (auto s : p.word) word += static_cast<char>('0' + static_cast<int>(s.real()));
    } else {
      word = "[" + format_word(p.word) + "]";
    }
    return "periodic:" + word + "@" + std::to_string(p.offset);
  }
  std::string operator()(const gen::Pseudoergodic& p) const {
    return "pseudoergodic:{" + format_word(p.alphabet.symbols()) + "}";
  }
  std::string operator()(const gen::Sturmian& s) const {
    std::string out = "sturmian:" + format_double(s.alpha) + "," + format_double(s.beta);
    if (s.symbol0 != Symbol(0.0) || s.symbol1 != Symbol(1.0) || std::signbit(s.symbol0.real()))
      out += "," + format_symbol(s.symbol0) + "," + format_symbol(s.symbol1);
    return out;
  }
  std::string operator()(const gen::Bernoulli& b) const {
    const auto& syms = b.alphabet.symbols();
    const bool short_form = syms.size() == 2 && syms[0] == Symbol(0.0) &&
                            !std::signbit(syms[0].real()) && syms[1] == Symbol(1.0) &&
                            b.weights[0] == 1.0 - b.weights[1];
    std::string out = "bernoulli:";
    if (short_form) {
      out += format_double(b.weights[1]);
    } else {
      out += "{" + format_word(syms) + "}:";
      for (std::size_t i = 0; i < b.weights.size(); ++i) {
        if (i) out += ",";
        out += format_double(b.weights[i]);
      }
    }
    return out + "#" + std::to_string(b.seed);
  }
  std::string operator()(const gen::Explicit& e) const {
    const auto c = static_cast<std::size_t>(e.center);
    std::string out = "explicit:[" + format_word(Word(e.window.begin(), e.window.begin() + c)) +
                      "|" + format_word(Word(e.window.begin() + c, e.window.end())) + "]";
    if (e.padding != Symbol(0.0) || std::signbit(e.padding.real()))
      out += "~" + format_symbol(e.padding);
    return out;
  }
};

}  // namespace

std::string format_sequence_spec(const SequenceSpec& spec) { return std::visit(Formatter{}, spec); }

SequenceSpec parse_sequence_spec(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) bad("sequence spec needs '<kind>:<params>'");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view body = text.substr(colon + 1);

  SequenceSpec spec;
  if (kind == "constant") {
    spec = gen::Constant{parse_symbol(body)};
  } else if (kind == "periodic") {
    gen::Periodic p;
    std::string_view rest;
    if (!body.empty() && body.front() == '[') {
      p.word = parse_symbol_list(bracketed(body, '[', ']', rest));
    } else {
      const auto at = body.find('@');
      const std::string_view digits = body.substr(0, at);
      rest = at == std::string_view::npos ? std::string_view{} : body.substr(at);
      for (char c : digits) {
        if (c < '0' || c > '9') bad("periodic word must be digits or a [..] list");
        p.word.emplace_back(static_cast<double>(c - '0'), 0.0);
      }
    }
    rest = trim(rest);
    if (!rest.empty()) {
      if (rest.front() != '@') bad("expected '@offset' after periodic word");
      p.offset = parse_int<std::int64_t>(rest.substr(1));
    }
    spec = std::move(p);
  } else if (kind == "pseudoergodic") {
    std::string_view rest;
    auto syms = parse_symbol_list(bracketed(trim(body), '{', '}', rest));
    if (!trim(rest).empty()) bad("trailing characters after alphabet");
    spec = gen::Pseudoergodic{Alphabet(std::move(syms))};
  } else if (kind == "sturmian") {
    const auto parts = split(body, ',');
    if (parts.size() != 2 && parts.size() != 4) bad("sturmian takes alpha,beta[,s0,s1]");
    gen::Sturmian s;
    s.alpha = parse_real(parts[0]);
    s.beta = parse_real(parts[1]);
    if (parts.size() == 4) {
      s.symbol0 = parse_symbol(parts[2]);
      s.symbol1 = parse_symbol(parts[3]);
    }
    spec = s;
  } else if (kind == "bernoulli") {
    const auto hash = body.rfind('#');
    if (hash == std::string_view::npos) bad("bernoulli needs '#seed'");
    gen::Bernoulli b;
    b.seed = parse_int<std::uint64_t>(body.substr(hash + 1));
    const std::string_view head = trim(body.substr(0, hash));
    if (!head.empty() && head.front() == '{') {
      std::string_view rest;
      b.alphabet = Alphabet(parse_symbol_list(bracketed(head, '{', '}', rest)));
      rest = trim(rest);
      if (rest.empty() || rest.front() != ':') bad("bernoulli needs '{alphabet}:weights'");
      for (auto tok : split(rest.substr(1), ',')) b.weights.push_back(parse_real(tok));
    } else {
      const double p = parse_real(head);
      b.alphabet = Alphabet({Symbol(0.0), Symbol(1.0)});
      b.weights = {1.0 - p, p};
    }
    spec = std::move(b);
  } else if (kind == "explicit") {
    std::string_view rest;
    const std::string_view inner = bracketed(trim(body), '[', ']', rest);
    gen::Explicit e;
    const auto bar = inner.find('|');
    if (bar == std::string_view::npos) {
      e.window = parse_symbol_list(inner);
    } else {
      e.window = parse_symbol_list(inner.substr(0, bar));
      e.center = static_cast<std::int64_t>(e.window.size());
      const auto right = parse_symbol_list(inner.substr(bar + 1));
      e.window.insert(e.window.end(), right.begin(), right.end());
    }
    rest = trim(rest);
    if (!rest.empty()) {
      if (rest.front() != '~') bad("expected '~padding' after explicit window");
      e.padding = parse_symbol(rest.substr(1));
    }
    spec = std::move(e);
  } else {
    bad("unknown sequence kind '" + std::string(kind) + "'");
  }
  validate(spec);
  return spec;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

struct Validator {
  void operator()(const gen::Constant& c) const { Alphabet({c.symbol}); }
  void operator()(const gen::Periodic& p) const {
    if (p.word.empty()) bad("periodic word must have period >= 1");
    sorted_alphabet(p.word);
  }
  void operator()(const gen::Pseudoergodic& p) const {
    if (p.alphabet.size() == 0) bad("pseudoergodic alphabet must be nonempty");
  }
  void operator()(const gen::Sturmian& s) const {
    if (!(s.alpha > 0.0 && s.alpha < 1.0)) bad("sturmian alpha must lie in (0,1)");
    if (!std::isfinite(s.beta)) bad("sturmian beta must be finite");
    Alphabet({s.symbol0, s.symbol1});
  }
  void operator()(const gen::Bernoulli& b) const {
    if (b.alphabet.size() == 0) bad("bernoulli alphabet must be nonempty");
    if (b.weights.size() != b.alphabet.size()) bad("bernoulli needs one weight per symbol");
    double total = 0.0;
    for (double w : b.weights) {
      if (!(w >= 0.0 && w <= 1.0)) bad("bernoulli weights must lie in [0,1]");
      total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) bad("bernoulli weights must sum to 1");
  }
  void operator()(const gen::Explicit& e) const {
    if (e.center < 0 || e.center > static_cast<std::int64_t>(e.window.size()))
      bad("explicit center out of range");
    Word all = e.window;
    all.push_back(e.padding);
    sorted_alphabet(all);
  }
};

struct AlphabetOf {
  Alphabet operator()(const gen::Constant& c) const { return Alphabet({c.symbol}); }
  Alphabet operator()(const gen::Periodic& p) const { return sorted_alphabet(p.word); }
  Alphabet operator()(const gen::Pseudoergodic& p) const { return p.alphabet; }
  Alphabet operator()(const gen::Sturmian& s) const { return Alphabet({s.symbol0, s.symbol1}); }
  Alphabet operator()(const gen::Bernoulli& b) const { return b.alphabet; }
  Alphabet operator()(const gen::Explicit& e) const {
    Word all = e.window;
    all.push_back(e.padding);
    return sorted_alphabet(std::move(all));
  }
};

}  // namespace

void validate(const SequenceSpec& spec) { std::visit(Validator{}, spec); }

Alphabet alphabet_of(const SequenceSpec& spec) { return std::visit(AlphabetOf{}, spec); }

// ---------------------------------------------------------------------------
// SymbolSequence

SymbolSequence::SymbolSequence(SequenceSpec spec, std::int64_t shift_offset)
    : spec_(std::move(spec)), offset_(shift_offset) {
  validate(spec_);
  alphabet_ = alphabet_of(spec_);
}

Symbol SymbolSequence::raw_entry(std::int64_t k) const {
  if (cache_) {
    const std::int64_t idx = k - cache_->first;
    if (idx >= 0 && idx < static_cast<std::int64_t>(cache_->values.size()))
      return cache_->values[static_cast<std::size_t>(idx)];
  }
  struct Entry {
    std::int64_t k;
    Symbol operator()(const gen::Constant& c) const { return c.symbol; }
    Symbol operator()(const gen::Periodic& p) const {
      const auto period = static_cast<std::int64_t>(p.word.size());
      return p.word[static_cast<std::size_t>(floor_mod(floor_mod(k, period) + floor_mod(p.offset, period), period))];
    }
    Symbol operator()(const gen::Pseudoergodic& p) const {
      const std::uint64_t m = k >= 0 ? static_cast<std::uint64_t>(k)
                                     : static_cast<std::uint64_t>(-(k + 1));
      return p.alphabet.symbols()[pseudoergodic_digit(m, p.alphabet.size())];
    }
    Symbol operator()(const gen::Sturmian& s) const {
      const double x = static_cast<double>(k);
      const double v = std::floor((x + 1.0) * s.alpha + s.beta) - std::floor(x * s.alpha + s.beta);
      return v > 0.5 ? s.symbol1 : s.symbol0;
    }
    Symbol operator()(const gen::Bernoulli& b) const {
      const std::uint64_t h = splitmix64(b.seed ^ splitmix64(static_cast<std::uint64_t>(k)));
      const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
      double acc = 0.0;
      for (std::size_t i = 0; i + 1 < b.weights.size(); ++i) {
        acc += b.weights[i];
        if (u < acc) return b.alphabet.symbols()[i];
      }
      return b.alphabet.symbols().back();
    }
    Symbol operator()(const gen::Explicit& e) const {
      const std::int64_t idx = k + e.center;
      if (idx >= 0 && idx < static_cast<std::int64_t>(e.window.size()))
        return e.window[static_cast<std::size_t>(idx)];
      return e.padding;
    }
  };
  return std::visit(Entry{k}, spec_);
}

Symbol SymbolSequence::entry(std::int64_t k) const { return raw_entry(k + offset_); }

Word SymbolSequence::window(std::int64_t i, std::int64_t j) const {
  if (i > j) bad("window requires i <= j");
  Word w;
  w.reserve(static_cast<std::size_t>(j - i + 1));
  for (std::int64_t k = i; k <= j; ++k) w.push_back(entry(k));
  return w;
}

SymbolSequence SymbolSequence::shift(std::int64_t n) const {
  SymbolSequence out = *this;
  out.offset_ += n;
  return out;
}

SymbolSequence SymbolSequence::cached(std::int64_t lo, std::int64_t hi) const {
  auto cache = std::make_shared<Cache>();
  cache->first = lo + offset_;
  cache->values = window(lo, hi);
  SymbolSequence out = *this;
  out.cache_ = std::move(cache);
  return out;
}

// ---------------------------------------------------------------------------
// Window certificates

MetricResult metric(const SymbolSequence& a, const SymbolSequence& b, std::int64_t max_k) {
  if (max_k < 0) bad("metric requires max_k >= 0");
  if (a.entry(0) != b.entry(0)) return {1.0, true};
  for (std::int64_t k = 1; k <= max_k; ++k) {
    if (a.entry(k) != b.entry(k) || a.entry(-k) != b.entry(-k))
      return {std::ldexp(1.0, -static_cast<int>(std::min<std::int64_t>(k - 1, 1074))), true};
  }
  return {0.0, a.identical(b)};
}

Run longest_constant_run(const SymbolSequence& seq, Symbol symbol, std::int64_t N) {
  if (N < 1) bad("longest_constant_run requires N >= 1");
  if (!seq.alphabet().contains(symbol)) bad("symbol not in alphabet");
  Run best{0, -N};
  std::int64_t current = 0;
  for (std::int64_t k = -N; k <= N; ++k) {
    if (seq.entry(k) == symbol) {
      ++current;
      if (current > best.length) best = {current, k - current + 1};
    } else {
      current = 0;
    }
  }
  return best;
}

std::optional<std::int64_t> find_run(const SymbolSequence& seq, Symbol symbol,
                                     std::int64_t min_length, std::int64_t lo, std::int64_t hi) {
  if (min_length < 1) bad("find_run requires min_length >= 1");
  std::int64_t current = 0;
  for (std::int64_t k = lo; k <= hi; ++k) {
    current = seq.entry(k) == symbol ? current + 1 : 0;
    if (current == min_length) return k - min_length + 1;
  }
  return std::nullopt;
}

std::optional<std::int64_t> contains_word(const SymbolSequence& seq, const Word& w,
                                          std::int64_t N) {
  if (w.empty()) bad("word must be nonempty");
  const auto len = static_cast<std::int64_t>(w.size());
  if (N < len) bad("contains_word requires N >= |w|");
  for (auto s : w)
    if (!seq.alphabet().contains(s)) bad("word is not over the sequence alphabet");
  const Word hay = seq.window(-N, N);
  const auto it = std::search(hay.begin(), hay.end(), w.begin(), w.end());
  if (it == hay.end()) return std::nullopt;
  return -N + static_cast<std::int64_t>(it - hay.begin());
}

std::optional<std::int64_t> generator_occurrence(const SymbolSequence& seq, const Word& w) {
  if (w.empty()) bad("word must be nonempty");
  const auto len = static_cast<std::int64_t>(w.size());
  auto verified = [&](std::int64_t k) -> std::optional<std::int64_t> {
    if (seq.window(k, k + len - 1) == w) return k;
    return std::nullopt;
  };
  const std::int64_t offset = seq.shift_offset();
  if (std::holds_alternative<gen::Constant>(seq.spec())) return verified(0);
  if (const auto* p = std::get_if<gen::Periodic>(&seq.spec())) {
    const auto period = static_cast<std::int64_t>(p->word.size());
    for (std::int64_t k = 0; k < period; ++k)
      if (auto hit = verified(k)) return hit;
    return std::nullopt;
  }
  if (const auto* p = std::get_if<gen::Pseudoergodic>(&seq.spec())) {
    using u128 = unsigned __int128;
    const std::size_t a = p->alphabet.size();
    u128 index = 0;
    for (const auto& s : w) {
      const auto d = p->alphabet.index_of(s);
      if (!d) return std::nullopt;
      index = index * a + *d;
      if (index > static_cast<u128>(INT64_MAX)) return std::nullopt;
    }
    // raw start of the length-|w| block, then of the word itself
    u128 start = 0, count = 1;
    for (std::int64_t l = 1; l < len; ++l) {
      count *= a;
      start += static_cast<u128>(l) * count;
      if (start > static_cast<u128>(INT64_MAX)) return std::nullopt;
    }
    const u128 raw = start + static_cast<u128>(len) * index;
    if (raw + static_cast<u128>(len) > static_cast<u128>(INT64_MAX / 2)) return std::nullopt;
    return verified(static_cast<std::int64_t>(raw) - offset);
  }
  return std::nullopt;
}

namespace {

std::vector<bool> occurring_factors(const SymbolSequence& seq, int L, std::int64_t N) {
  if (L < 1) bad("word length must be >= 1");
  if (N < 0) bad("window radius must be >= 0");
  const std::size_t a = seq.alphabet().size();
  const double bits = L * std::log2(static_cast<double>(a));
  if (bits > 24.0 + 1e-9) bad("too many words to enumerate (limit 2^24)");
  std::size_t total = 1;
  for (int i = 0; i < L; ++i) total *= a;
  std::vector<bool> seen(total, false);

  const Word w = seq.window(-N, N);
  if (static_cast<std::int64_t>(w.size()) < L) return seen;
  std::vector<std::size_t> digits(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) digits[i] = *seq.alphabet().index_of(w[i]);
  std::size_t code = 0;
  for (int i = 0; i < L; ++i) code = code * a + digits[static_cast<std::size_t>(i)];
  seen[code] = true;
  std::size_t top = total / a;  // a^(L-1)
  for (std::size_t i = static_cast<std::size_t>(L); i < digits.size(); ++i) {
    code = (code % top) * a + digits[i];
    seen[code] = true;
  }
  return seen;
}

}  // namespace

std::uint64_t pseudoergodic_defect(const SymbolSequence& seq, int L, std::int64_t N) {
  const auto seen = occurring_factors(seq, L, N);
  return static_cast<std::uint64_t>(std::count(seen.begin(), seen.end(), false));
}

std::uint64_t factor_count(const SymbolSequence& seq, int L, std::int64_t N) {
  const auto seen = occurring_factors(seq, L, N);
  return static_cast<std::uint64_t>(std::count(seen.begin(), seen.end(), true));
}

std::int64_t pseudoergodic_coverage(std::size_t alphabet_size, int L) {
  if (alphabet_size == 0 || L < 1) bad("pseudoergodic_coverage needs a nonempty alphabet and L >= 1");
  std::int64_t total = 0;
  std::int64_t count = 1;
  for (int l = 1; l <= L; ++l) {
    count *= static_cast<std::int64_t>(alphabet_size);
    total += l * count;
  }
  return total;
}

}  // namespace trispec

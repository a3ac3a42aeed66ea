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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "trispec/accumulate.hpp"

namespace trispec {

using Symbol = Complex;
using Word = std::vector<Symbol>;

/// Ordered finite set of complex symbols. The order is the enumeration order
/// used by the pseudoergodic generator and by factor indexing.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Symbol> symbols);

  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  std::optional<std::size_t> index_of(Symbol s) const;
  bool contains(Symbol s) const { return index_of(s).has_value(); }
  /// True when every symbol is 0 or 1.
  bool is_binary_01() const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<Symbol> symbols_;
};

/// Sorts by (real, imag) and removes duplicates.
Alphabet sorted_alphabet(std::vector<Symbol> symbols);

/// Generator rules for biinfinite sequences. Each rule yields b_k for every
/// integer k without materializing the sequence.
namespace gen {

struct Constant {
  Symbol symbol;
  bool operator==(const Constant&) const = default;
};

/// b_k = word[(k + offset) mod p].
struct Periodic {
  Word word;
  std::int64_t offset = 0;
  bool operator==(const Periodic&) const = default;
};

/// Right half b_0 b_1 ... is the concatenation of all words over the
/// alphabet in length-then-lexicographic order; b_{-1-m} = b_m.
struct Pseudoergodic {
  Alphabet alphabet;
  bool operator==(const Pseudoergodic&) const = default;
};

/// Rotation coding: floor((k+1)alpha + beta) - floor(k alpha + beta) picks
/// symbol1 (value 1) or symbol0 (value 0). A rational alpha is accepted and
/// yields a periodic sequence.
struct Sturmian {
  double alpha = 0.0;
  double beta = 0.0;
  Symbol symbol0{0.0, 0.0};
  Symbol symbol1{1.0, 0.0};
  bool operator==(const Sturmian&) const = default;
};

/// Independent draws keyed by (seed, k); entry(k) does not depend on which
/// other entries were evaluated.
struct Bernoulli {
  Alphabet alphabet;
  std::vector<double> weights;
  std::uint64_t seed = 0;
  bool operator==(const Bernoulli&) const = default;
};

/// Finite window around the origin, padded with a constant. window[center]
/// is b_0.
struct Explicit {
  Word window;
  std::int64_t center = 0;
  Symbol padding{0.0, 0.0};
  bool operator==(const Explicit&) const = default;
};

}  // namespace gen

using SequenceSpec =
    std::variant<gen::Constant, gen::Periodic, gen::Pseudoergodic, gen::Sturmian, gen::Bernoulli,
                 gen::Explicit>;

/// Throws std::invalid_argument when parameters are invalid for the kind.
void validate(const SequenceSpec& spec);
Alphabet alphabet_of(const SequenceSpec& spec);

/// Text form, e.g. `constant:1`, `periodic:0110@0`, `pseudoergodic:{0,1}`,
/// `sturmian:0.618034,0`, `bernoulli:0.5#42`, `explicit:[0,1,1,1,0|1,0,0,0,1,0]`.
/// format(parse(s)) == s for canonical s and parse(format(spec)) == spec.
SequenceSpec parse_sequence_spec(std::string_view text);
std::string format_sequence_spec(const SequenceSpec& spec);

/// Symbols are written as `1`, `-0.5`, `2i`, `0.5-1i`; shortest round-trip
/// decimal for each part.
std::string format_symbol(Symbol s);
Symbol parse_symbol(std::string_view text);
std::string format_double(double v);
std::string format_word(const Word& w, char sep = ',');

/// Words as `0,1,1`, `[0,1,1]` or a bare digit string `011`.
Word parse_word(std::string_view text);
/// Alphabets as `{0,1}` or `0,1`.
Alphabet parse_alphabet(std::string_view text);

/// A biinfinite sequence together with the number of shift-map applications.
/// Values are immutable; copies share any materialized window.
class SymbolSequence {
 public:
  explicit SymbolSequence(SequenceSpec spec, std::int64_t shift_offset = 0);
  static SymbolSequence parse(std::string_view text) {
    return SymbolSequence(parse_sequence_spec(text));
  }

  const SequenceSpec& spec() const { return spec_; }
  std::int64_t shift_offset() const { return offset_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::string text() const { return format_sequence_spec(spec_); }

  Symbol entry(std::int64_t k) const;
  /// b_[i, j]; throws std::invalid_argument when i > j.
  Word window(std::int64_t i, std::int64_t j) const;
  /// phi^n: entry(shift(n), k) == entry(k + n).
  SymbolSequence shift(std::int64_t n) const;
  /// Copy whose entries on [lo, hi] (current coordinates) are stored.
  SymbolSequence cached(std::int64_t lo, std::int64_t hi) const;

  /// Same generator and same shift.
  bool identical(const SymbolSequence& other) const {
    return offset_ == other.offset_ && spec_ == other.spec_;
  }

 private:
  struct Cache {
    std::int64_t first = 0;  // raw generator index of values[0]
    std::vector<Symbol> values;
  };

  Symbol raw_entry(std::int64_t k) const;

  SequenceSpec spec_;
  std::int64_t offset_ = 0;
  Alphabet alphabet_;
  std::shared_ptr<const Cache> cache_;
};

struct MetricResult {
  double value = 0.0;
  /// False when the sequences agree on every checked block and may still
  /// differ further out; value 0 is then only a lower bound.
  bool exact = true;
};

/// rho(a, b) from central-block agreement, checked up to radius max_k.
MetricResult metric(const SymbolSequence& a, const SymbolSequence& b, std::int64_t max_k);

struct Run {
  std::int64_t length = 0;
  std::int64_t start = 0;
};

/// Longest run of `symbol` inside [-N, N] (leftmost on ties). Length 0 when
/// the symbol never occurs; start is then -N.
Run longest_constant_run(const SymbolSequence& seq, Symbol symbol, std::int64_t N);

/// Leftmost start s in [lo, hi - min_length + 1] with b_s..b_{s+min_length-1}
/// all equal to `symbol`.
std::optional<std::int64_t> find_run(const SymbolSequence& seq, Symbol symbol,
                                     std::int64_t min_length, std::int64_t lo, std::int64_t hi);

/// Leftmost occurrence of w starting in [-N, N - |w| + 1].
std::optional<std::int64_t> contains_word(const SymbolSequence& seq, const Word& w,
                                          std::int64_t N);

/// An index k with b_k..b_{k+|w|-1} == w taken from the generator's
/// construction: constant and periodic sequences, and the enumerated
/// position of w in a pseudoergodic sequence. Verified before it is
/// returned; nullopt when the generator offers no such index.
std::optional<std::int64_t> generator_occurrence(const SymbolSequence& seq, const Word& w);

/// Number of length-L words over the alphabet that never occur in [-N, N].
std::uint64_t pseudoergodic_defect(const SymbolSequence& seq, int L, std::int64_t N);

/// Number of distinct length-L words occurring in [-N, N].
std::uint64_t factor_count(const SymbolSequence& seq, int L, std::int64_t N);

/// Length of the prefix b_0..b_{n-1} of the pseudoergodic generator that
/// contains every word of length <= L over an alphabet of the given size.
std::int64_t pseudoergodic_coverage(std::size_t alphabet_size, int L);

}  // namespace trispec

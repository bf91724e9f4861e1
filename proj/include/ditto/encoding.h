// Copyright 2026 The Ditto Authors.
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

// Two-part MDL encoding of a database given a code table.
//
// A cover is serialised into a pattern stream (one code per pattern use)
// and a gap stream (one gap or fill code per later time step of each
// multi-step pattern use). All code lengths are ideal Shannon lengths in
// bits; no bit strings are materialised. The total encoded size is
// L(CT, D) = L(CT | C) + L(D | CT).

#ifndef DITTO_ENCODING_H_
#define DITTO_ENCODING_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ditto/cover.h"
#include "ditto/standard_table.h"
#include "ditto/types.h"

namespace ditto {

// Length in bits of the MDL universal code for integers z >= 1:
// log2(c0) + log2(z) + log2(log2(z)) + ..., positive terms only.
// Throws std::domain_error for z < 1.
double UniversalIntLength(int64_t z);

// log2 of the binomial coefficient. Zero when k == 0, k == n, or k > n.
double Log2Binomial(int64_t n, int64_t k);

// Usage counts of one code-table entry.
struct PatternUsage {
  int64_t usage = 0;
  int64_t gaps = 0;
  int64_t fills = 0;

  friend bool operator==(const PatternUsage&, const PatternUsage&) = default;
};

// Per-entry usage, aligned with an ordered pattern list.
struct UsageStats {
  std::vector<PatternUsage> entries;

  int64_t total_usage() const;
  friend bool operator==(const UsageStats&, const UsageStats&) = default;
};

// Counts usage, gaps and fills directly from a cover.
UsageStats CountUsage(const Cover& c, std::span<const Pattern> patterns);

struct GapCode {
  uint32_t pattern = 0;
  bool fill = false;

  friend bool operator==(const GapCode&, const GapCode&) = default;
};

// The pattern stream Cp and gap stream Cg plus the header needed to
// decode them: |A| and the length of every sequence.
struct CodeStreams {
  std::vector<uint32_t> pattern_stream;
  std::vector<GapCode> gap_stream;
  size_t num_attributes = 0;
  std::vector<size_t> sequence_lengths;
};

// Counts the codes in the streams.
UsageStats CountUsage(const CodeStreams& s, size_t num_patterns);

// Walks the data left to right and, per time step, top to bottom. Each
// active multi-step use (in code-table order) first emits a fill code if
// the step holds its next pattern step, else a gap code. Then attributes
// are scanned upward and a pattern code is emitted for each singleton cell
// and each use whose first cell sits there. Throws std::invalid_argument
// if `c` is not a valid cover of `d`.
CodeStreams EncodeStreams(const MultiSeqDatabase& d, const Cover& c,
                          std::span<const Pattern> ct_order);

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inverse of EncodeStreams. Throws DecodeError, naming the stream position,
// when the streams do not fit the table.
MultiSeqDatabase DecodeStreams(const CodeStreams& s,
                               std::span<const Pattern> ct_order,
                               const Alphabet& alphabet);

// -log2(usage / total_usage).
double PatternCodeLength(int64_t usage, int64_t total_usage);

// Gap and fill code lengths of a multi-step pattern. A side with a zero
// count gets an infinite length; it is never emitted.
std::pair<double, double> GapFillCodeLengths(int64_t gaps, int64_t fills);

// Shape of the data that enters the code lengths.
struct DataShape {
  size_t num_attributes = 0;
  std::vector<size_t> alphabet_sizes;
  std::vector<size_t> sequence_lengths;
  size_t total_length = 0;

  static DataShape Of(const MultiSeqDatabase& d);
};

// What the length computations need to know about one code-table entry.
struct EntryCost {
  bool singleton = true;
  size_t length = 1;
  // L(X|ST), only used for non-singletons.
  double standard_bits = 0.0;
  PatternUsage usage;
};

// L(D | CT) = L(Cp) + L(Cg) + L_N(|A|) + L_N(|D|) + sum_S L_N(t(S)).
double DataLength(std::span<const EntryCost> entries, const DataShape& shape);

// L(X in CT) for a non-singleton pattern.
double PatternModelLength(size_t length, int64_t gaps, double standard_bits,
                          size_t num_attributes);
double PatternModelLength(const Pattern& p, int64_t gaps,
                          const StandardTable& st, size_t num_attributes);

// L(CT | C): singleton terms per attribute, the number of non-singleton
// patterns, their total usage, its composition, and each pattern.
double CodeTableLength(std::span<const EntryCost> entries,
                       const DataShape& shape);

struct EncodedSize {
  double model_bits = 0.0;
  double data_bits = 0.0;
  double total() const { return model_bits + data_bits; }
};

EncodedSize EncodedLength(std::span<const EntryCost> entries,
                          const DataShape& shape);

// Pairs each ordered pattern with its usage.
std::vector<EntryCost> MakeEntryCosts(std::span<const Pattern> ct_order,
                                      const UsageStats& stats,
                                      const StandardTable& st);

// Full pipeline: cover order, cover, streams, lengths. `patterns` are the
// non-singleton patterns; all singletons of the alphabet are added.
EncodedSize TotalLength(const MultiSeqDatabase& d,
                        std::span<const Pattern> patterns);

// Every singleton of the alphabet, in event-id order.
std::vector<Pattern> AllSingletons(const Alphabet& alphabet);

}  // namespace ditto

#endif  // DITTO_ENCODING_H_

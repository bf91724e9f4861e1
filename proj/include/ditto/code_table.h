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

// Code tables: an ordered pattern set together with its usage on a
// database and the resulting code lengths.

#ifndef DITTO_CODE_TABLE_H_
#define DITTO_CODE_TABLE_H_

#include <span>
#include <string>
#include <vector>

#include "ditto/encoding.h"
#include "json.hpp"
#include "ditto/standard_table.h"
#include "ditto/types.h"
#include "ditto/windows.h"

namespace ditto {

struct CodeTableEntry {
  Pattern pattern;
  int64_t support = 0;
  PatternUsage usage;
  // Code lengths in bits; infinite for codes that are never emitted.
  double code_bits = 0.0;
  double gap_bits = 0.0;
  double fill_bits = 0.0;
};

// Entries in cover order: non-singletons first, then every singleton of
// the alphabet.
struct CodeTable {
  std::vector<CodeTableEntry> entries;
  EncodedSize size;

  std::vector<Pattern> NonSingletons() const;
  size_t num_non_singletons() const;
};

// Usage of an ordered non-singleton list plus all singletons.
struct TableUsage {
  // Aligned with the non-singleton list.
  std::vector<PatternUsage> patterns;
  // Indexed by event id.
  std::vector<int64_t> singletons;
  EncodedSize size;

  int64_t total_usage() const;
};

// Covers with `ordered` (non-singletons in cover order) followed by all
// singletons and computes the encoded size. Equivalent to TotalLength but
// skips materialising the streams.
TableUsage EvaluateTable(const EventIndex& index, const StandardTable& st,
                         std::span<const Pattern> ordered);

// Builds the full table for a set of non-singleton patterns, in any order.
CodeTable BuildCodeTable(const MultiSeqDatabase& d,
                         std::span<const Pattern> patterns);

// A pattern as a list of steps, each a list of {"attribute", "symbol"}
// objects with symbols by name.
nlohmann::json PatternToJson(const Pattern& p, const Alphabet& alphabet);
// Throws std::runtime_error on malformed input or unknown symbols.
Pattern PatternFromJson(const nlohmann::json& j, const Alphabet& alphabet);

// JSON text form. Symbols are written by name; code lengths are rounded to
// 8 decimals and infinite lengths are written as null.
std::string CodeTableToJson(const CodeTable& ct, const Alphabet& alphabet);

// Reads the non-singleton patterns of a table written by CodeTableToJson,
// resolving symbol names against `alphabet`. Throws std::runtime_error on
// malformed input or unknown symbols.
std::vector<Pattern> PatternsFromJson(const std::string& text,
                                      const Alphabet& alphabet);

}  // namespace ditto

#endif  // DITTO_CODE_TABLE_H_

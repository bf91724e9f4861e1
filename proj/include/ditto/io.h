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

// Reading and writing databases and real-valued series.
//
// Databases are stored as UTF-8 TSV with the header
// `seq<TAB>time<TAB>attr<TAB>value`, one row per cell. Sequence ids are
// 0-based and contiguous, times 1-based and contiguous per sequence,
// attributes 0-based. Symbol codes follow the order of first appearance.

#ifndef DITTO_IO_H_
#define DITTO_IO_H_

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ditto/types.h"

namespace ditto {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws ParseError naming `source` and the offending line.
MultiSeqDatabase ReadDatabase(std::istream& in,
                              const std::string& source = "<input>");
MultiSeqDatabase ReadDatabaseFile(const std::string& path);

// Writes the canonical form: rows ordered by sequence, time, attribute.
void WriteDatabase(std::ostream& out, const MultiSeqDatabase& d);
void WriteDatabaseFile(const std::string& path, const MultiSeqDatabase& d);

// Real-valued data, one column per attribute.
struct RawSeries {
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;

  size_t length() const { return columns.empty() ? 0 : columns[0].size(); }
};

// Comma-separated values. The first row is a header if any of its cells is
// not a number. Throws ParseError on ragged rows or non-numeric cells.
RawSeries ReadCsv(std::istream& in, const std::string& source = "<input>");
RawSeries ReadCsvFile(const std::string& path);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);

}  // namespace ditto

#endif  // DITTO_IO_H_

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

#include "ditto/io.h"

#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace ditto {
namespace {

struct Row {
  size_t seq;
  size_t time;
  AttributeId attr;
  Symbol symbol;
  size_t line;
};

std::vector<std::string> Split(const std::string& line, char sep) {
  std::vector<std::string> out;
  size_t begin = 0;
  for (;;) {
    const size_t end = line.find(sep, begin);
    out.push_back(line.substr(begin, end - begin));
    if (end == std::string::npos) break;
    begin = end + 1;
  }
  return out;
}

bool ParseUnsigned(const std::string& s, size_t& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool ParseDouble(std::string s, double& out) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.pop_back();
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

[[noreturn]] void Fail(const std::string& source, size_t line,
                       const std::string& what) {
  throw ParseError(source + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

MultiSeqDatabase ReadDatabase(std::istream& in, const std::string& source) {
  std::string line;
  size_t line_no = 0;
  std::vector<Row> rows;
  // Symbol names per attribute, in order of first appearance.
  std::vector<std::map<std::string, Symbol>> codes;
  std::vector<std::vector<std::string>> names;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> f = Split(line, '\t');
    if (rows.empty() && !f.empty() && f[0] == "seq") {
      if (f.size() != 4 || f[1] != "time" || f[2] != "attr" ||
          f[3] != "value") {
        Fail(source, line_no, "expected header seq, time, attr, value");
      }
      continue;
    }
    if (f.size() != 4) {
      Fail(source, line_no,
           "expected 4 tab-separated fields, got " + std::to_string(f.size()));
    }
    size_t seq, time, attr;
    if (!ParseUnsigned(f[0], seq)) Fail(source, line_no, "bad seq '" + f[0] + "'");
    if (!ParseUnsigned(f[1], time) || time == 0) {
      Fail(source, line_no, "bad time '" + f[1] + "' (times start at 1)");
    }
    if (!ParseUnsigned(f[2], attr) ||
        attr > std::numeric_limits<AttributeId>::max() / 2) {
      Fail(source, line_no, "bad attr '" + f[2] + "'");
    }
    if (f[3].empty()) Fail(source, line_no, "empty value");
    if (attr >= codes.size()) {
      codes.resize(attr + 1);
      names.resize(attr + 1);
    }
    auto [it, inserted] =
        codes[attr].try_emplace(f[3], static_cast<Symbol>(names[attr].size()));
    if (inserted) names[attr].push_back(f[3]);
    rows.push_back({seq, time, static_cast<AttributeId>(attr), it->second,
                    line_no});
  }
  if (rows.empty()) throw ParseError(source + ": no data rows");

  const size_t num_attributes = codes.size();
  for (size_t a = 0; a < num_attributes; ++a) {
    if (names[a].empty()) {
      throw ParseError(source + ": attribute " + std::to_string(a) +
                       " has no values");
    }
  }
  // Per sequence: max time and first line, for validation messages.
  std::map<size_t, std::pair<size_t, size_t>> extent;
  for (const Row& r : rows) {
    auto [it, inserted] = extent.try_emplace(r.seq, r.time, r.line);
    if (!inserted) it->second.first = std::max(it->second.first, r.time);
  }
  size_t expected_seq = 0;
  for (const auto& [seq, info] : extent) {
    if (seq != expected_seq) {
      Fail(source, info.second,
           "sequence ids must be contiguous from 0; missing " +
               std::to_string(expected_seq));
    }
    ++expected_seq;
  }
  std::vector<std::vector<Symbol>> cells(extent.size());
  std::vector<std::vector<size_t>> cell_line(extent.size());
  constexpr Symbol kMissing = std::numeric_limits<Symbol>::max();
  for (const auto& [seq, info] : extent) {
    cells[seq].assign(info.first * num_attributes, kMissing);
    cell_line[seq].assign(info.first * num_attributes, 0);
  }
  for (const Row& r : rows) {
    const size_t cell = (r.time - 1) * num_attributes + r.attr;
    if (cells[r.seq][cell] != kMissing) {
      Fail(source, r.line,
           "duplicate cell (seq " + std::to_string(r.seq) + ", time " +
               std::to_string(r.time) + ", attr " + std::to_string(r.attr) +
               "), first on line " + std::to_string(cell_line[r.seq][cell]));
    }
    cells[r.seq][cell] = r.symbol;
    cell_line[r.seq][cell] = r.line;
  }
  for (size_t seq = 0; seq < cells.size(); ++seq) {
    for (size_t cell = 0; cell < cells[seq].size(); ++cell) {
      if (cells[seq][cell] != kMissing) continue;
      const size_t time = cell / num_attributes + 1;
      const size_t attr = cell % num_attributes;
      Fail(source, extent[seq].second,
           "sequence " + std::to_string(seq) + " has no value for time " +
               std::to_string(time) + ", attr " + std::to_string(attr) +
               " (times must be contiguous and every attribute present)");
    }
  }

  Alphabet alphabet(num_attributes);
  for (size_t a = 0; a < num_attributes; ++a) {
    for (const std::string& n : names[a]) {
      alphabet.Intern(static_cast<AttributeId>(a), n);
    }
  }
  std::vector<MultiSeq> sequences;
  sequences.reserve(cells.size());
  for (auto& c : cells) sequences.emplace_back(num_attributes, std::move(c));
  return MultiSeqDatabase(std::move(alphabet), std::move(sequences));
}

MultiSeqDatabase ReadDatabaseFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return ReadDatabase(in, path);
}

void WriteDatabase(std::ostream& out, const MultiSeqDatabase& d) {
  out << "seq\ttime\tattr\tvalue\n";
  const Alphabet& alphabet = d.alphabet();
  for (size_t seq = 0; seq < d.num_sequences(); ++seq) {
    const MultiSeq& s = d.sequence(seq);
    for (size_t t = 0; t < s.length(); ++t) {
      for (AttributeId a = 0; a < s.num_attributes(); ++a) {
        out << seq << '\t' << t + 1 << '\t' << a << '\t'
            << alphabet.name(a, s.at(t, a)) << '\n';
      }
    }
  }
}

void WriteDatabaseFile(const std::string& path, const MultiSeqDatabase& d) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  WriteDatabase(out, d);
  if (!out) throw ParseError("error writing " + path);
}

RawSeries ReadCsv(std::istream& in, const std::string& source) {
  RawSeries out;
  std::string line;
  size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> f = Split(line, ',');
    std::vector<double> values(f.size());
    bool numeric = true;
    size_t bad = 0;
    for (size_t i = 0; i < f.size() && numeric; ++i) {
      numeric = ParseDouble(f[i], values[i]);
      bad = i;
    }
    if (first) {
      first = false;
      out.columns.resize(f.size());
      if (!numeric) {
        out.names = f;
        continue;
      }
      for (size_t i = 0; i < f.size(); ++i) {
        out.names.push_back("a" + std::to_string(i));
      }
    }
    if (f.size() != out.columns.size()) {
      Fail(source, line_no,
           "expected " + std::to_string(out.columns.size()) +
               " columns, got " + std::to_string(f.size()));
    }
    if (!numeric) {
      Fail(source, line_no,
           "non-numeric value '" + f[bad] + "' in column " +
               std::to_string(bad + 1));
    }
    for (size_t i = 0; i < f.size(); ++i) out.columns[i].push_back(values[i]);
  }
  if (out.length() == 0) throw ParseError(source + ": no data rows");
  return out;
}

RawSeries ReadCsvFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return ReadCsv(in, path);
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
  if (!out) throw ParseError("error writing " + path);
}

}  // namespace ditto

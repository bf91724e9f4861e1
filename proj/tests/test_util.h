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

// Small builders shared by the tests.

#ifndef DITTO_TESTS_TEST_UTIL_H_
#define DITTO_TESTS_TEST_UTIL_H_

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ditto/types.h"

namespace ditto::testing {

// One string per time step; character i is the symbol name of attribute i.
// Each inner vector is one sequence. Symbols are interned in order of
// first appearance.
inline MultiSeqDatabase MakeSeqsDb(
    const std::vector<std::vector<std::string>>& sequences) {
  const size_t num_attributes = sequences.at(0).at(0).size();
  Alphabet alphabet(num_attributes);
  std::vector<MultiSeq> seqs;
  for (const auto& rows : sequences) {
    std::vector<Symbol> cells;
    for (const std::string& row : rows) {
      if (row.size() != num_attributes) {
        throw std::invalid_argument("ragged row " + row);
      }
      for (size_t a = 0; a < num_attributes; ++a) {
        cells.push_back(alphabet.Intern(static_cast<AttributeId>(a),
                                        std::string(1, row[a])));
      }
    }
    seqs.emplace_back(num_attributes, std::move(cells));
  }
  return MultiSeqDatabase(std::move(alphabet), std::move(seqs));
}

inline MultiSeqDatabase MakeDb(const std::vector<std::string>& rows) {
  return MakeSeqsDb({rows});
}

// Parses "{0=a,1=b}{1=c}" against `alphabet`.
inline Pattern Pat(const std::string& text, const Alphabet& alphabet) {
  std::vector<MultiEvent> steps;
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '{') throw std::invalid_argument("bad pattern " + text);
    const size_t close = text.find('}', i);
    std::vector<Event> events;
    size_t j = i + 1;
    while (j < close) {
      const size_t eq = text.find('=', j);
      size_t end = text.find(',', eq);
      if (end == std::string::npos || end > close) end = close;
      const auto a = static_cast<AttributeId>(std::stoul(text.substr(j, eq - j)));
      const int64_t s = alphabet.Find(a, text.substr(eq + 1, end - eq - 1));
      if (s < 0) throw std::invalid_argument("unknown symbol in " + text);
      events.push_back({a, static_cast<Symbol>(s)});
      j = end + 1;
    }
    steps.emplace_back(std::move(events));
    i = close + 1;
  }
  return Pattern(std::move(steps));
}

// Uniform random database with the given shape; symbols are "0".."k-1".
inline MultiSeqDatabase RandomDb(std::mt19937_64& rng,
                                 const std::vector<size_t>& lengths,
                                 size_t num_attributes, size_t alphabet_size) {
  std::vector<size_t> sizes(num_attributes, alphabet_size);
  std::vector<MultiSeq> seqs;
  std::uniform_int_distribution<Symbol> pick(
      0, static_cast<Symbol>(alphabet_size - 1));
  for (size_t n : lengths) {
    std::vector<Symbol> cells(n * num_attributes);
    for (Symbol& c : cells) c = pick(rng);
    seqs.emplace_back(num_attributes, std::move(cells));
  }
  return MultiSeqDatabase(Alphabet::Numeric(sizes), std::move(seqs));
}

// Random pattern with up to `max_length` steps over the database shape.
inline Pattern RandomPattern(std::mt19937_64& rng, size_t max_length,
                             size_t num_attributes, size_t alphabet_size) {
  std::uniform_int_distribution<size_t> len(1, max_length);
  std::uniform_int_distribution<Symbol> sym(
      0, static_cast<Symbol>(alphabet_size - 1));
  std::bernoulli_distribution coin(0.5);
  std::vector<MultiEvent> steps(len(rng));
  for (MultiEvent& step : steps) {
    std::vector<Event> events;
    for (AttributeId a = 0; a < num_attributes; ++a) {
      if (coin(rng)) events.push_back({a, sym(rng)});
    }
    if (events.empty()) {
      std::uniform_int_distribution<AttributeId> attr(
          0, static_cast<AttributeId>(num_attributes - 1));
      events.push_back({attr(rng), sym(rng)});
    }
    step = MultiEvent(std::move(events));
  }
  return Pattern(std::move(steps));
}

}  // namespace ditto::testing

#endif  // DITTO_TESTS_TEST_UTIL_H_

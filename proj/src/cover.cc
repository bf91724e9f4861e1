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

#include "ditto/cover.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace ditto {
namespace {

// Tries to place `o` against the current cover. Returns false, leaving
// `covered` untouched, if any of its cells is taken.
bool TryPlace(const MultiSeqDatabase& d, const Pattern& p, const Occurrence& o,
              std::vector<uint8_t>& covered) {
  bool free = true;
  ForEachCoveredCell(d, p, o, [&](size_t cell) { free &= !covered[cell]; });
  if (!free) return false;
  ForEachCoveredCell(d, p, o, [&](size_t cell) { covered[cell] = 1; });
  return true;
}

}  // namespace

std::vector<Pattern> CoverOrder(std::vector<Pattern> patterns,
                                const EventIndex& index,
                                const StandardTable& st) {
  struct Keyed {
    int64_t support;
    double standard_bits;
    Pattern* pattern;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(patterns.size());
  for (Pattern& p : patterns) {
    keyed.push_back({index.Support(p), st.PatternLength(p), &p});
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const Keyed& a, const Keyed& b) {
                     if (a.pattern->size() != b.pattern->size()) {
                       return a.pattern->size() > b.pattern->size();
                     }
                     if (a.support != b.support) return a.support > b.support;
                     if (a.standard_bits != b.standard_bits) {
                       return a.standard_bits > b.standard_bits;
                     }
                     return LexLess(*a.pattern, *b.pattern);
                   });
  std::vector<Pattern> out;
  out.reserve(patterns.size());
  for (const Keyed& k : keyed) out.push_back(std::move(*k.pattern));
  return out;
}

void CoverNonSingletons(
    const EventIndex& index, std::span<const Pattern* const> patterns,
    std::vector<uint8_t>& covered,
    const std::function<void(size_t pattern, Occurrence&&)>& on_accept) {
  const MultiSeqDatabase& d = index.db();
  for (size_t i = 0; i < patterns.size(); ++i) {
    const Pattern& p = *patterns[i];
    for (size_t seq = 0; seq < d.num_sequences(); ++seq) {
      for (Occurrence& o :
           index.AllMinimalWindows(p, seq, GapBoundedWindow(p))) {
        if (TryPlace(d, p, o, covered)) on_accept(i, std::move(o));
      }
    }
  }
}

Cover ComputeCover(const EventIndex& index, std::span<const Pattern> patterns) {
  const MultiSeqDatabase& d = index.db();
  const Alphabet& alphabet = d.alphabet();
  const size_t num_attributes = d.num_attributes();
  Cover cover;
  cover.owner.assign(d.total_size(), Cover::kSingleton);
  cover.singleton_pattern.assign(d.total_size(), -1);
  std::vector<uint8_t> covered(d.total_size(), 0);
  size_t remaining = d.total_size();

  for (size_t i = 0; i < patterns.size() && remaining > 0; ++i) {
    const Pattern& p = patterns[i];
    if (p.is_singleton()) {
      const Event e = p.step(0).events()[0];
      if (e.attribute >= num_attributes || e.symbol >= alphabet.size(e.attribute)) {
        continue;
      }
      for (uint32_t t : index.positions(alphabet.EventId(e))) {
        const size_t cell = t * num_attributes + e.attribute;
        if (covered[cell]) continue;
        covered[cell] = 1;
        cover.singleton_pattern[cell] = static_cast<int32_t>(i);
        --remaining;
      }
      continue;
    }
    for (size_t seq = 0; seq < d.num_sequences(); ++seq) {
      for (Occurrence& o :
           index.AllMinimalWindows(p, seq, GapBoundedWindow(p))) {
        if (!TryPlace(d, p, o, covered)) continue;
        const auto element = static_cast<int32_t>(cover.elements.size());
        ForEachCoveredCell(d, p, o, [&](size_t cell) {
          cover.owner[cell] = element;
        });
        remaining -= p.size();
        cover.elements.push_back({i, std::move(o)});
      }
    }
  }
  if (remaining > 0) {
    for (size_t cell = 0; cell < covered.size(); ++cell) {
      if (covered[cell]) continue;
      const size_t t = cell / num_attributes;
      const auto a = static_cast<AttributeId>(cell % num_attributes);
      throw std::invalid_argument(
          "cover incomplete: no singleton for event " + std::to_string(a) +
          "=" + alphabet.name(a, index.cell(t, a)));
    }
  }
  return cover;
}

void ValidateCover(const MultiSeqDatabase& d, std::span<const Pattern> patterns,
                   const Cover& c) {
  const size_t num_attributes = d.num_attributes();
  if (c.owner.size() != d.total_size() ||
      c.singleton_pattern.size() != d.total_size()) {
    throw std::invalid_argument("cover size does not match database");
  }
  std::vector<int32_t> seen(d.total_size(), Cover::kSingleton);
  for (size_t i = 0; i < c.elements.size(); ++i) {
    const CoverElement& el = c.elements[i];
    if (el.pattern >= patterns.size()) {
      throw std::invalid_argument("cover element references unknown pattern");
    }
    const Pattern& p = patterns[el.pattern];
    const Occurrence& o = el.occurrence;
    if (o.sequence >= d.num_sequences() || o.matched.size() != p.length() ||
        o.end >= d.sequence(o.sequence).length() ||
        o.matched.front() != o.start || o.matched.back() != o.end) {
      throw std::invalid_argument("malformed occurrence in element " +
                                  std::to_string(i));
    }
    for (size_t j = 0; j < p.length(); ++j) {
      if ((j > 0 && o.matched[j] <= o.matched[j - 1]) ||
          !d.sequence(o.sequence).Contains(o.matched[j], p.step(j))) {
        throw std::invalid_argument("element " + std::to_string(i) +
                                    " does not match its pattern");
      }
    }
    if (!p.is_singleton() && o.window_length() >= 2 * p.length()) {
      throw std::invalid_argument("element " + std::to_string(i) +
                                  " exceeds the gap bound");
    }
    ForEachCoveredCell(d, p, o, [&](size_t cell) {
      if (seen[cell] != Cover::kSingleton || c.owner[cell] != int32_t(i)) {
        throw std::invalid_argument("overlapping or mislabelled cell " +
                                    std::to_string(cell));
      }
      seen[cell] = static_cast<int32_t>(i);
    });
  }
  for (size_t cell = 0; cell < d.total_size(); ++cell) {
    if (seen[cell] != c.owner[cell]) {
      throw std::invalid_argument("owner map disagrees with elements");
    }
    if (seen[cell] != Cover::kSingleton) continue;
    const int32_t sp = c.singleton_pattern[cell];
    if (sp < 0 || static_cast<size_t>(sp) >= patterns.size()) {
      throw std::invalid_argument("uncovered cell " + std::to_string(cell));
    }
    const Pattern& p = patterns[sp];
    const auto a = static_cast<AttributeId>(cell % num_attributes);
    const Event want = p.step(0).events()[0];
    const size_t t = cell / num_attributes;
    size_t seq = 0;
    while (seq + 1 < d.num_sequences() && d.sequence_offset(seq + 1) <= t) {
      ++seq;
    }
    if (!p.is_singleton() || want.attribute != a ||
        d.sequence(seq).at(t - d.sequence_offset(seq), a) !=
            want.symbol) {
      throw std::invalid_argument("singleton cell " + std::to_string(cell) +
                                  " labelled with the wrong pattern");
    }
  }
}

}  // namespace ditto

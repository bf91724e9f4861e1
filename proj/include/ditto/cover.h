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

// Greedy covering of a database with an ordered pattern set.

#ifndef DITTO_COVER_H_
#define DITTO_COVER_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ditto/standard_table.h"
#include "ditto/types.h"
#include "ditto/windows.h"

namespace ditto {

// One pattern occurrence used in a cover. `pattern` indexes the ordered
// pattern list the cover was built from.
struct CoverElement {
  size_t pattern = 0;
  Occurrence occurrence;
};

// A partition of all cells of a database into pattern occurrences and
// singletons. Cells are addressed globally as
// (sequence_offset + t) * |A| + attribute.
struct Cover {
  static constexpr int32_t kSingleton = -1;

  std::vector<CoverElement> elements;
  // Element index covering each cell, or kSingleton.
  std::vector<int32_t> owner;
  // For singleton cells, the index of the singleton pattern used.
  std::vector<int32_t> singleton_pattern;
};

// Calls f(cell) for every cell covered by `o` when matched against `p`.
template <class F>
void ForEachCoveredCell(const MultiSeqDatabase& d, const Pattern& p,
                        const Occurrence& o, F&& f) {
  const size_t base = d.sequence_offset(o.sequence);
  const size_t num_attributes = d.num_attributes();
  for (size_t i = 0; i < p.length(); ++i) {
    for (const Event& e : p.step(i).events()) {
      f((base + o.matched[i]) * num_attributes + e.attribute);
    }
  }
}

// Sorts by descending ||X||, descending support, descending L(X|ST), then
// ascending lexicographic order.
std::vector<Pattern> CoverOrder(std::vector<Pattern> patterns,
                                const EventIndex& index,
                                const StandardTable& st);

// Covers with non-singleton patterns only, marking cells in `covered`
// (size ||D||, cleared by the caller) and reporting each accepted
// occurrence. Cells left unmarked are covered by singletons.
void CoverNonSingletons(
    const EventIndex& index, std::span<const Pattern* const> patterns,
    std::vector<uint8_t>& covered,
    const std::function<void(size_t pattern, Occurrence&&)>& on_accept);

// Covers the database with `patterns` in the given order. Each pattern's
// gap-bounded minimal windows are taken by increasing start and kept when
// none of their cells is covered yet. Windows may share time steps, so
// interleaved occurrences on different cells can both be used. Throws std::invalid_argument if
// some cell is left uncovered because its singleton is missing.
Cover ComputeCover(const EventIndex& index, std::span<const Pattern> patterns);

// Throws std::invalid_argument unless `c` partitions all cells of `d`
// and each element matches its pattern within the gap bound.
void ValidateCover(const MultiSeqDatabase& d, std::span<const Pattern> patterns,
                   const Cover& c);

}  // namespace ditto

#endif  // DITTO_COVER_H_

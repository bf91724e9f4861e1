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

// Minimal-window occurrence search.
//
// A window [s, e] contains pattern X when the steps of X can be matched at
// strictly increasing times inside it. It is minimal when no proper
// sub-window contains X. Minimal windows of one pattern never nest, so they
// are ordered by start and end simultaneously; the disjoint occurrence set
// is the greedy left-to-right selection of non-overlapping minimal windows.
// Occurrences never cross sequence boundaries.

#ifndef DITTO_WINDOWS_H_
#define DITTO_WINDOWS_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "ditto/types.h"

namespace ditto {

inline constexpr size_t kUnboundedWindow = std::numeric_limits<size_t>::max();

// Longest window the cover accepts for `p`: t(o) < 2 t(X).
inline size_t GapBoundedWindow(const Pattern& p) {
  return 2 * p.length() - 1;
}

// Every minimal window of `p` in `s` no longer than `max_window`, by start.
std::vector<Occurrence> AllMinimalWindows(const Pattern& p, const MultiSeq& s,
                                          size_t max_window = kUnboundedWindow);

// Greedy left-to-right disjoint selection over AllMinimalWindows. With the
// default bound this is occs(X, S) and its size is the support of `p` in `s`.
std::vector<Occurrence> FindMinimalWindows(
    const Pattern& p, const MultiSeq& s, size_t max_window = kUnboundedWindow);

// Number of disjoint minimal windows summed over all sequences.
int64_t Support(const Pattern& p, const MultiSeqDatabase& d);

// Inverted index from events to the global times they occur at. Speeds up
// occurrence search by only visiting times where the rarest event of a
// pattern step is present.
class EventIndex {
 public:
  explicit EventIndex(const MultiSeqDatabase& db);

  const MultiSeqDatabase& db() const { return *db_; }
  // Sorted global times of `event_id`.
  std::span<const uint32_t> positions(size_t event_id) const {
    return {times_.data() + starts_[event_id],
            times_.data() + starts_[event_id + 1]};
  }
  int64_t count(size_t event_id) const {
    return static_cast<int64_t>(starts_[event_id + 1] - starts_[event_id]);
  }
  int64_t count(Event e) const { return count(db_->alphabet().EventId(e)); }
  // Symbol at a global time and attribute.
  Symbol cell(size_t global_time, AttributeId a) const {
    return cells_[global_time * db_->num_attributes() + a];
  }

  // Indexed equivalents of the free functions above, for sequence `seq`.
  std::vector<Occurrence> AllMinimalWindows(
      const Pattern& p, size_t seq, size_t max_window = kUnboundedWindow) const;
  std::vector<Occurrence> FindMinimalWindows(
      const Pattern& p, size_t seq, size_t max_window = kUnboundedWindow) const;
  int64_t Support(const Pattern& p,
                  size_t max_window = kUnboundedWindow) const;

 private:
  const MultiSeqDatabase* db_;
  std::vector<Symbol> cells_;
  std::vector<size_t> starts_;
  std::vector<uint32_t> times_;
};

}  // namespace ditto

#endif  // DITTO_WINDOWS_H_

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

#include "ditto/windows.h"

#include <algorithm>
#include <utility>

namespace ditto {
namespace {

constexpr size_t kNone = std::numeric_limits<size_t>::max();

// Finds step matches by scanning every time step of one sequence.
class ScanMatcher {
 public:
  ScanMatcher(const Pattern& p, const MultiSeq& s) : p_(p), s_(s) {}

  size_t length() const { return s_.length(); }

  // First t in [from, to) where step i matches, or kNone.
  size_t Next(size_t i, size_t from, size_t to) const {
    for (size_t t = from; t < to; ++t) {
      if (s_.Contains(t, p_.step(i))) return t;
    }
    return kNone;
  }

 private:
  const Pattern& p_;
  const MultiSeq& s_;
};

// Finds step matches through the event index: only times where the step's
// rarest event occurs are checked.
class IndexMatcher {
 public:
  IndexMatcher(const Pattern& p, const EventIndex& index, size_t seq)
      : p_(p),
        index_(index),
        offset_(index.db().sequence_offset(seq)),
        length_(index.db().sequence(seq).length()) {
    const Alphabet& alphabet = index.db().alphabet();
    anchors_.reserve(p.length());
    for (const MultiEvent& step : p.steps()) {
      size_t best = alphabet.EventId(step.events()[0]);
      for (const Event& e : step.events()) {
        const size_t id = alphabet.EventId(e);
        if (index.count(id) < index.count(best)) best = id;
      }
      anchors_.push_back(index.positions(best));
    }
  }

  size_t length() const { return length_; }

  size_t Next(size_t i, size_t from, size_t to) const {
    const std::span<const uint32_t> pos = anchors_[i];
    auto it = std::lower_bound(pos.begin(), pos.end(), offset_ + from);
    for (; it != pos.end() && *it < offset_ + to; ++it) {
      if (Matches(i, *it)) return *it - offset_;
    }
    return kNone;
  }

 private:
  bool Matches(size_t i, size_t global_time) const {
    for (const Event& e : p_.step(i).events()) {
      if (index_.cell(global_time, e.attribute) != e.symbol) return false;
    }
    return true;
  }

  const Pattern& p_;
  const EventIndex& index_;
  size_t offset_;
  size_t length_;
  std::vector<std::span<const uint32_t>> anchors_;
};

// Calls sink(matched) for every minimal window no longer than max_window,
// in increasing start order; matched[i] is the earliest-match time of step
// i inside the window. With `disjoint`, only the greedy left-to-right set
// of non-overlapping windows is reported.
//
// For a start s let e(s) be the end of the greedy earliest embedding from
// s. e is non-decreasing in s, so [s, e(s)] is minimal iff the next start
// s' has e(s') != e(s). If e(s) fits the bound and e(s') == e(s), then
// e(s') also fits the bound, so the bounded search decides minimality.
template <class Matcher, class Sink>
void ForEachMinimalWindow(const Matcher& m, size_t k, size_t max_window,
                          bool disjoint, Sink&& sink) {
  const size_t n = m.length();
  std::vector<size_t> cur(k), next(k);
  auto forward = [&](size_t s, std::vector<size_t>& out) {
    out[0] = s;
    const size_t limit =
        max_window >= n - s ? n : s + max_window;
    for (size_t i = 1; i < k; ++i) {
      const size_t t = m.Next(i, out[i - 1] + 1, limit);
      if (t == kNone) return false;
      out[i] = t;
    }
    return true;
  };

  size_t s = m.Next(0, 0, n);
  if (s == kNone) return;
  bool complete = forward(s, cur);
  bool have_last = false;
  size_t last_end = 0;
  while (s != kNone) {
    // Without a bound, no later start can complete once one start fails.
    if (!complete && max_window >= n) return;
    const size_t s2 = m.Next(0, s + 1, n);
    const bool complete2 = s2 != kNone && forward(s2, next);
    if (complete) {
      const bool minimal = !(complete2 && next[k - 1] == cur[k - 1]);
      if (minimal && (!disjoint || !have_last || s > last_end)) {
        sink(std::span<const size_t>(cur));
        have_last = true;
        last_end = cur[k - 1];
      }
    }
    s = s2;
    std::swap(cur, next);
    complete = complete2;
  }
}

template <class Matcher>
std::vector<Occurrence> CollectWindows(const Matcher& m, const Pattern& p,
                                       size_t seq, size_t max_window,
                                       bool disjoint) {
  std::vector<Occurrence> out;
  ForEachMinimalWindow(m, p.length(), max_window, disjoint,
                       [&](std::span<const size_t> matched) {
                         out.push_back({seq, matched.front(), matched.back(),
                                        {matched.begin(), matched.end()}});
                       });
  return out;
}

}  // namespace

std::vector<Occurrence> AllMinimalWindows(const Pattern& p, const MultiSeq& s,
                                          size_t max_window) {
  return CollectWindows(ScanMatcher(p, s), p, 0, max_window, false);
}

std::vector<Occurrence> FindMinimalWindows(const Pattern& p, const MultiSeq& s,
                                           size_t max_window) {
  return CollectWindows(ScanMatcher(p, s), p, 0, max_window, true);
}

int64_t Support(const Pattern& p, const MultiSeqDatabase& d) {
  int64_t total = 0;
  for (const MultiSeq& s : d.sequences()) {
    ForEachMinimalWindow(ScanMatcher(p, s), p.length(), kUnboundedWindow, true,
                         [&](std::span<const size_t>) { ++total; });
  }
  return total;
}

EventIndex::EventIndex(const MultiSeqDatabase& db) : db_(&db) {
  const size_t num_attributes = db.num_attributes();
  const Alphabet& alphabet = db.alphabet();
  cells_.reserve(db.total_size());
  for (const MultiSeq& s : db.sequences()) {
    cells_.insert(cells_.end(), s.cells().begin(), s.cells().end());
  }
  starts_.assign(alphabet.num_events() + 1, 0);
  for (size_t t = 0; t < db.total_length(); ++t) {
    for (AttributeId a = 0; a < num_attributes; ++a) {
      ++starts_[alphabet.EventId({a, cells_[t * num_attributes + a]}) + 1];
    }
  }
  for (size_t i = 1; i < starts_.size(); ++i) starts_[i] += starts_[i - 1];
  times_.resize(db.total_size());
  std::vector<size_t> fill(starts_.begin(), starts_.end() - 1);
  for (size_t t = 0; t < db.total_length(); ++t) {
    for (AttributeId a = 0; a < num_attributes; ++a) {
      const size_t id = alphabet.EventId({a, cells_[t * num_attributes + a]});
      times_[fill[id]++] = static_cast<uint32_t>(t);
    }
  }
}

std::vector<Occurrence> EventIndex::AllMinimalWindows(const Pattern& p,
                                                      size_t seq,
                                                      size_t max_window) const {
  return CollectWindows(IndexMatcher(p, *this, seq), p, seq, max_window, false);
}

std::vector<Occurrence> EventIndex::FindMinimalWindows(const Pattern& p,
                                                       size_t seq,
                                                       size_t max_window) const {
  return CollectWindows(IndexMatcher(p, *this, seq), p, seq, max_window, true);
}

int64_t EventIndex::Support(const Pattern& p, size_t max_window) const {
  int64_t total = 0;
  for (size_t seq = 0; seq < db_->num_sequences(); ++seq) {
    ForEachMinimalWindow(IndexMatcher(p, *this, seq), p.length(),
                         max_window, true,
                         [&](std::span<const size_t>) { ++total; });
  }
  return total;
}

}  // namespace ditto

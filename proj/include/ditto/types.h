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

// Data model for discrete multivariate event sequences and the patterns
// mined from them.
//
// A database holds |D| sequences over the same indexed attributes. Every
// sequence is categorical: each time step assigns exactly one symbol to
// every attribute. Symbols are dense integer codes per attribute; display
// names live in the Alphabet.

#ifndef DITTO_TYPES_H_
#define DITTO_TYPES_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ditto {

using AttributeId = uint32_t;
using Symbol = uint32_t;

// An attribute-value pair.
struct Event {
  AttributeId attribute = 0;
  Symbol symbol = 0;

  friend auto operator<=>(const Event&, const Event&) = default;
};

// A partial assignment of attributes to symbols at one time step. Events
// are kept sorted by attribute with at most one symbol per attribute.
class MultiEvent {
 public:
  MultiEvent() = default;
  // Sorts the events; throws std::invalid_argument on an attribute that is
  // assigned twice.
  explicit MultiEvent(std::vector<Event> events);

  std::span<const Event> events() const { return events_; }
  size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }

  // True if this defines `attribute`.
  bool Defines(AttributeId attribute) const;
  // True if every event of this is also in `other`.
  bool IsSubsetOf(const MultiEvent& other) const;

  friend auto operator<=>(const MultiEvent&, const MultiEvent&) = default;
  friend bool operator==(const MultiEvent&, const MultiEvent&) = default;

 private:
  std::vector<Event> events_;
};

// A sequence of non-empty multi-events. t(X) is the number of steps and
// ||X|| the total number of defined values.
class Pattern {
 public:
  Pattern() = default;
  // Throws std::invalid_argument if `steps` is empty or has an empty step.
  explicit Pattern(std::vector<MultiEvent> steps);

  static Pattern Singleton(Event e);

  std::span<const MultiEvent> steps() const { return steps_; }
  const MultiEvent& step(size_t i) const { return steps_[i]; }
  size_t length() const { return steps_.size(); }
  size_t size() const { return size_; }
  bool is_singleton() const { return size_ == 1; }

  // All events in step order, ascending attribute within a step.
  std::vector<Event> Events() const;

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.steps_ == b.steps_;
  }

 private:
  std::vector<MultiEvent> steps_;
  size_t size_ = 0;
};

// Deterministic total order used for final tie-breaks: steps are compared
// pairwise (each step as its (attribute, symbol) list), and only if one
// pattern's steps are a prefix of the other's does the step count decide.
std::strong_ordering LexCompare(const Pattern& a, const Pattern& b);
inline bool LexLess(const Pattern& a, const Pattern& b) {
  return LexCompare(a, b) == std::strong_ordering::less;
}

// True if `a` embeds into `b`: its steps map, in order, onto strictly
// increasing steps of `b` with each step a subset of its image. Every
// pattern is a sub-pattern of itself.
bool IsSubPattern(const Pattern& a, const Pattern& b);

struct PatternHash {
  size_t operator()(const Pattern& p) const;
};

// Human-readable form, e.g. "{0=a,1=d}{1=e}". Uses symbol names when an
// alphabet is given, otherwise numeric codes.
class Alphabet;
std::string ToString(const Pattern& p, const Alphabet* alphabet = nullptr);

// Per-attribute symbol dictionaries.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(size_t num_attributes)
      : names_(num_attributes), offsets_(num_attributes + 1, 0) {}
  // Attribute i gets symbols "0".."sizes[i]-1".
  static Alphabet Numeric(std::span<const size_t> sizes);

  size_t num_attributes() const { return names_.size(); }
  size_t size(AttributeId a) const { return names_[a].size(); }
  // Total number of distinct events, i.e. |Omega| counted per attribute.
  size_t num_events() const { return offsets_.back(); }

  const std::string& name(AttributeId a, Symbol s) const {
    return names_[a][s];
  }
  // Returns the code for `name`, adding it if absent.
  Symbol Intern(AttributeId a, const std::string& name);
  // Returns the code for `name` or -1.
  int64_t Find(AttributeId a, const std::string& name) const;

  // Dense event ids: attribute offsets plus symbol code.
  size_t EventId(Event e) const { return offsets_[e.attribute] + e.symbol; }
  Event EventAt(size_t id) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::vector<std::string>> names_;
  // offsets_[a] is the first event id of attribute a; offsets_.back() is
  // the total.
  std::vector<size_t> offsets_ = {0};
};

// One categorical multivariate sequence, stored time-major.
class MultiSeq {
 public:
  MultiSeq() = default;
  MultiSeq(size_t num_attributes, std::vector<Symbol> cells);

  size_t length() const { return length_; }
  size_t num_attributes() const { return num_attributes_; }
  size_t size() const { return cells_.size(); }

  Symbol at(size_t t, AttributeId a) const {
    return cells_[t * num_attributes_ + a];
  }
  std::span<const Symbol> cells() const { return cells_; }
  // True if every event of `step` occurs at time t.
  bool Contains(size_t t, const MultiEvent& step) const;

  friend bool operator==(const MultiSeq&, const MultiSeq&) = default;

 private:
  size_t num_attributes_ = 0;
  size_t length_ = 0;
  std::vector<Symbol> cells_;
};

class MultiSeqDatabase {
 public:
  MultiSeqDatabase() = default;
  // Throws std::invalid_argument if a sequence disagrees on the attribute
  // count or uses a symbol outside the alphabet.
  MultiSeqDatabase(Alphabet alphabet, std::vector<MultiSeq> sequences);

  const Alphabet& alphabet() const { return alphabet_; }
  size_t num_attributes() const { return alphabet_.num_attributes(); }
  size_t num_sequences() const { return sequences_.size(); }
  const MultiSeq& sequence(size_t i) const { return sequences_[i]; }
  std::span<const MultiSeq> sequences() const { return sequences_; }

  // t(D): total number of time steps.
  size_t total_length() const { return total_length_; }
  // ||D||: total number of events.
  size_t total_size() const { return total_length_ * num_attributes(); }
  // Global time index of the first step of sequence i.
  size_t sequence_offset(size_t i) const { return offsets_[i]; }

  friend bool operator==(const MultiSeqDatabase& a,
                         const MultiSeqDatabase& b) {
    return a.alphabet_ == b.alphabet_ && a.sequences_ == b.sequences_;
  }

 private:
  Alphabet alphabet_;
  std::vector<MultiSeq> sequences_;
  std::vector<size_t> offsets_;
  size_t total_length_ = 0;
};

// A minimal-window occurrence of a pattern. Times are 0-based within the
// sequence; `matched[i]` is the time at which pattern step i is matched.
struct Occurrence {
  size_t sequence = 0;
  size_t start = 0;
  size_t end = 0;
  std::vector<size_t> matched;

  size_t window_length() const { return end - start + 1; }
  size_t num_gaps() const { return window_length() - matched.size(); }
  // Times inside the window that match no pattern step.
  std::vector<size_t> GapPositions() const;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

}  // namespace ditto

#endif  // DITTO_TYPES_H_

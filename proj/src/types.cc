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

#include "ditto/types.h"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ditto {

MultiEvent::MultiEvent(std::vector<Event> events) : events_(std::move(events)) {
  std::sort(events_.begin(), events_.end());
  for (size_t i = 1; i < events_.size(); ++i) {
    if (events_[i].attribute == events_[i - 1].attribute) {
      throw std::invalid_argument("multi-event assigns attribute " +
                                  std::to_string(events_[i].attribute) +
                                  " twice");
    }
  }
}

bool MultiEvent::Defines(AttributeId attribute) const {
  auto it = std::lower_bound(
      events_.begin(), events_.end(), attribute,
      [](const Event& e, AttributeId a) { return e.attribute < a; });
  return it != events_.end() && it->attribute == attribute;
}

bool MultiEvent::IsSubsetOf(const MultiEvent& other) const {
  return std::includes(other.events_.begin(), other.events_.end(),
                       events_.begin(), events_.end());
}

Pattern::Pattern(std::vector<MultiEvent> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw std::invalid_argument("pattern has no steps");
  for (const MultiEvent& step : steps_) {
    if (step.empty()) throw std::invalid_argument("pattern has an empty step");
    size_ += step.size();
  }
}

Pattern Pattern::Singleton(Event e) {
  return Pattern({MultiEvent({e})});
}

std::vector<Event> Pattern::Events() const {
  std::vector<Event> out;
  out.reserve(size_);
  for (const MultiEvent& step : steps_) {
    out.insert(out.end(), step.events().begin(), step.events().end());
  }
  return out;
}

std::strong_ordering LexCompare(const Pattern& a, const Pattern& b) {
  const size_t n = std::min(a.length(), b.length());
  for (size_t i = 0; i < n; ++i) {
    if (auto c = a.step(i) <=> b.step(i); c != 0) return c;
  }
  return a.length() <=> b.length();
}

bool IsSubPattern(const Pattern& a, const Pattern& b) {
  size_t k = 0;
  for (const MultiEvent& step : a.steps()) {
    while (k < b.length() && !step.IsSubsetOf(b.step(k))) ++k;
    if (k == b.length()) return false;
    ++k;
  }
  return true;
}

size_t PatternHash::operator()(const Pattern& p) const {
  size_t h = 1469598103934665603ULL;
  auto mix = [&h](uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (const MultiEvent& step : p.steps()) {
    mix(0xffffffffULL);
    for (const Event& e : step.events()) {
      mix((uint64_t{e.attribute} << 32) | e.symbol);
    }
  }
  return h;
}

std::string ToString(const Pattern& p, const Alphabet* alphabet) {
  std::ostringstream os;
  for (const MultiEvent& step : p.steps()) {
    os << '{';
    bool first = true;
    for (const Event& e : step.events()) {
      if (!first) os << ',';
      first = false;
      os << e.attribute << '=';
      if (alphabet != nullptr) {
        os << alphabet->name(e.attribute, e.symbol);
      } else {
        os << e.symbol;
      }
    }
    os << '}';
  }
  return os.str();
}

Alphabet Alphabet::Numeric(std::span<const size_t> sizes) {
  Alphabet alphabet(sizes.size());
  for (size_t a = 0; a < sizes.size(); ++a) {
    for (size_t s = 0; s < sizes[a]; ++s) {
      alphabet.Intern(static_cast<AttributeId>(a), std::to_string(s));
    }
  }
  return alphabet;
}

Symbol Alphabet::Intern(AttributeId a, const std::string& name) {
  if (int64_t found = Find(a, name); found >= 0) {
    return static_cast<Symbol>(found);
  }
  names_[a].push_back(name);
  for (size_t i = a + 1; i < offsets_.size(); ++i) ++offsets_[i];
  return static_cast<Symbol>(names_[a].size() - 1);
}

int64_t Alphabet::Find(AttributeId a, const std::string& name) const {
  const auto& names = names_[a];
  auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? -1 : it - names.begin();
}

Event Alphabet::EventAt(size_t id) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), id);
  const size_t a = (it - offsets_.begin()) - 1;
  return {static_cast<AttributeId>(a), static_cast<Symbol>(id - offsets_[a])};
}

MultiSeq::MultiSeq(size_t num_attributes, std::vector<Symbol> cells)
    : num_attributes_(num_attributes), cells_(std::move(cells)) {
  if (num_attributes_ == 0) {
    if (!cells_.empty()) {
      throw std::invalid_argument("cells given for zero attributes");
    }
    return;
  }
  if (cells_.size() % num_attributes_ != 0) {
    throw std::invalid_argument("ragged sequence: " +
                                std::to_string(cells_.size()) +
                                " cells for " +
                                std::to_string(num_attributes_) +
                                " attributes");
  }
  length_ = cells_.size() / num_attributes_;
}

bool MultiSeq::Contains(size_t t, const MultiEvent& step) const {
  const Symbol* row = cells_.data() + t * num_attributes_;
  for (const Event& e : step.events()) {
    if (row[e.attribute] != e.symbol) return false;
  }
  return true;
}

MultiSeqDatabase::MultiSeqDatabase(Alphabet alphabet,
                                   std::vector<MultiSeq> sequences)
    : alphabet_(std::move(alphabet)), sequences_(std::move(sequences)) {
  offsets_.reserve(sequences_.size());
  for (const MultiSeq& s : sequences_) {
    if (s.num_attributes() != alphabet_.num_attributes()) {
      throw std::invalid_argument("sequence has " +
                                  std::to_string(s.num_attributes()) +
                                  " attributes, database has " +
                                  std::to_string(alphabet_.num_attributes()));
    }
    for (size_t t = 0; t < s.length(); ++t) {
      for (AttributeId a = 0; a < s.num_attributes(); ++a) {
        if (s.at(t, a) >= alphabet_.size(a)) {
          throw std::invalid_argument("symbol code outside alphabet");
        }
      }
    }
    offsets_.push_back(total_length_);
    total_length_ += s.length();
  }
}

std::vector<size_t> Occurrence::GapPositions() const {
  std::vector<size_t> gaps;
  size_t next = 0;
  for (size_t t = start; t <= end; ++t) {
    if (next < matched.size() && matched[next] == t) {
      ++next;
    } else {
      gaps.push_back(t);
    }
  }
  return gaps;
}

}  // namespace ditto

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

#include "ditto/standard_table.h"

namespace ditto {

StandardTable::StandardTable(const MultiSeqDatabase& db)
    : alphabet_(db.alphabet()),
      supports_(db.alphabet().num_events(), 0),
      total_(static_cast<int64_t>(db.total_size())) {
  for (const MultiSeq& s : db.sequences()) {
    for (size_t t = 0; t < s.length(); ++t) {
      for (AttributeId a = 0; a < s.num_attributes(); ++a) {
        ++supports_[alphabet_.EventId({a, s.at(t, a)})];
      }
    }
  }
}

double StandardTable::PatternLength(const Pattern& p) const {
  double bits = 0.0;
  for (const MultiEvent& step : p.steps()) {
    for (const Event& e : step.events()) {
      bits += CodeLength(alphabet_.EventId(e));
    }
  }
  return bits;
}

}  // namespace ditto

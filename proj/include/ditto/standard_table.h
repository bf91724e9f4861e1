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

#ifndef DITTO_STANDARD_TABLE_H_
#define DITTO_STANDARD_TABLE_H_

#include <cmath>
#include <cstdint>
#include <vector>

#include "ditto/types.h"

namespace ditto {

// The singleton-only code table: event supports under an independence
// assumption. Used to encode the events of patterns in the model.
class StandardTable {
 public:
  StandardTable() = default;
  explicit StandardTable(const MultiSeqDatabase& db);

  int64_t support(size_t event_id) const { return supports_[event_id]; }
  int64_t total() const { return total_; }

  // -log2(support(e|D) / ||D||). Infinite for events absent from the data.
  double CodeLength(size_t event_id) const {
    return -std::log2(static_cast<double>(supports_[event_id]) /
                      static_cast<double>(total_));
  }
  // L(X|ST): sum of the code lengths of the events of `p`.
  double PatternLength(const Pattern& p) const;

 private:
  Alphabet alphabet_;
  std::vector<int64_t> supports_;
  int64_t total_ = 0;
};

}  // namespace ditto

#endif  // DITTO_STANDARD_TABLE_H_

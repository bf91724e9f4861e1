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

// Scoring discovered patterns against planted ones and against the
// singleton-only baseline.

#ifndef DITTO_EVALUATION_H_
#define DITTO_EVALUATION_H_

#include <span>
#include <string>
#include <vector>

#include "ditto/synthetic.h"
#include "ditto/types.h"

namespace ditto {

struct MatchCounts {
  size_t exact = 0;
  // Proper sub-patterns of some planted pattern, counted per discovered
  // pattern.
  size_t subset = 0;
  // Non-singletons that are neither.
  size_t spurious = 0;
};

// Singletons among `discovered` are ignored.
MatchCounts MatchPatterns(std::span<const Pattern> discovered,
                          std::span<const Pattern> planted);

// Percentage of planted events covered when each planted pattern is
// covered greedily by embeddings of the discovered non-singletons, larger
// patterns first. NaN when nothing was planted.
double RecoveryRatio(std::span<const Pattern> discovered,
                     std::span<const Pattern> planted);

// 100 * (1 - L(D, CT) / L(D, ST)) for the table made of `patterns`.
double CompressionGain(const MultiSeqDatabase& d,
                       std::span<const Pattern> patterns);

// One row in the layout of the synthetic benchmark table.
struct RecoveryReport {
  std::string name;
  size_t total_size = 0;
  size_t total_length = 0;
  size_t num_attributes = 0;
  size_t max_alphabet = 0;
  size_t num_planted = 0;
  size_t min_planted_size = 0;
  size_t max_planted_size = 0;
  double support_percent = 0.0;
  MatchCounts matches;
  double recovery_percent = 0.0;
  double compression_gain_percent = 0.0;
  double runtime_seconds = 0.0;
};

// Fills every field but `name` and `runtime_seconds`. The support column
// is the mean share of events spanned per planted pattern.
RecoveryReport Evaluate(const MultiSeqDatabase& d,
                        std::span<const Pattern> discovered,
                        const GroundTruth& truth);

std::string ReportTsv(std::span<const RecoveryReport> rows);
std::string ReportText(std::span<const RecoveryReport> rows);

}  // namespace ditto

#endif  // DITTO_EVALUATION_H_

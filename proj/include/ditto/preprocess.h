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

// Turning real-valued series into categorical data.

#ifndef DITTO_PREPROCESS_H_
#define DITTO_PREPROCESS_H_

#include <span>
#include <string>
#include <vector>

#include "ditto/io.h"
#include "ditto/types.h"

namespace ditto {

// Means of consecutive blocks of k values; a trailing partial block is
// dropped. Throws std::invalid_argument if k == 0.
std::vector<double> SubsampleMean(std::span<const double> values, size_t k);

// out[i] = in[i + 1] - in[i]. Throws std::invalid_argument for fewer than
// two values.
std::vector<double> RelativeTransform(std::span<const double> values);

// The bins - 1 standard normal quantiles splitting it into equiprobable
// intervals. Throws std::invalid_argument if bins < 2.
std::vector<double> GaussianBreakpoints(size_t bins);

// Bin index of each value against GaussianBreakpoints(bins), after
// z-normalisation if requested. A constant series under z-normalisation
// maps to the middle bin.
std::vector<Symbol> SaxDiscretize(std::span<const double> values, size_t bins,
                                  bool znormalize);

// Display name of bin i: "a", "b", ... for up to 26 bins, else the number.
std::string BinName(size_t i, size_t bins);

struct DiscretizeOptions {
  size_t subsample = 1;
  bool relative = false;
  size_t bins = 5;
  bool znormalize = false;
};

// Subsample, relative transform and SAX per column, as one sequence.
MultiSeqDatabase Discretize(const RawSeries& r, const DiscretizeOptions& o);

}  // namespace ditto

#endif  // DITTO_PREPROCESS_H_

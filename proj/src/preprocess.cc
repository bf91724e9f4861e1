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

#include "ditto/preprocess.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/normal.hpp>

namespace ditto {

std::vector<double> SubsampleMean(std::span<const double> values, size_t k) {
  if (k == 0) throw std::invalid_argument("subsample factor must be >= 1");
  std::vector<double> out;
  out.reserve(values.size() / k);
  for (size_t i = 0; i + k <= values.size(); i += k) {
    const double sum =
        std::accumulate(values.begin() + i, values.begin() + i + k, 0.0);
    out.push_back(sum / static_cast<double>(k));
  }
  return out;
}

std::vector<double> RelativeTransform(std::span<const double> values) {
  if (values.size() < 2) {
    throw std::invalid_argument("relative transform needs at least 2 values");
  }
  std::vector<double> out(values.size() - 1);
  for (size_t i = 0; i + 1 < values.size(); ++i) {
    out[i] = values[i + 1] - values[i];
  }
  return out;
}

std::vector<double> GaussianBreakpoints(size_t bins) {
  if (bins < 2) throw std::invalid_argument("need at least 2 bins");
  const boost::math::normal_distribution<double> normal;
  std::vector<double> out;
  for (size_t i = 1; i < bins; ++i) {
    out.push_back(boost::math::quantile(
        normal, static_cast<double>(i) / static_cast<double>(bins)));
  }
  return out;
}

std::vector<Symbol> SaxDiscretize(std::span<const double> values, size_t bins,
                                  bool znormalize) {
  const std::vector<double> cuts = GaussianBreakpoints(bins);
  std::vector<double> v(values.begin(), values.end());
  if (znormalize && !v.empty()) {
    const double n = static_cast<double>(v.size());
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
    double var = 0.0;
    for (double x : v) var += (x - mean) * (x - mean);
    const double sd = std::sqrt(var / n);
    // Rounding in the mean leaves a tiny spread on constant input.
    if (sd <= 1e-12 * std::max(1.0, std::abs(mean))) {
      return std::vector<Symbol>(v.size(), static_cast<Symbol>(bins / 2));
    }
    for (double& x : v) x = (x - mean) / sd;
  }
  std::vector<Symbol> out;
  out.reserve(v.size());
  for (double x : v) {
    out.push_back(static_cast<Symbol>(
        std::upper_bound(cuts.begin(), cuts.end(), x) - cuts.begin()));
  }
  return out;
}

std::string BinName(size_t i, size_t bins) {
  if (bins <= 26) return std::string(1, static_cast<char>('a' + i));
  return std::to_string(i);
}

MultiSeqDatabase Discretize(const RawSeries& r, const DiscretizeOptions& o) {
  const size_t num_attributes = r.columns.size();
  std::vector<std::vector<Symbol>> symbols;
  for (const std::vector<double>& column : r.columns) {
    std::vector<double> v = SubsampleMean(column, o.subsample);
    if (o.relative) v = RelativeTransform(v);
    symbols.push_back(SaxDiscretize(v, o.bins, o.znormalize));
  }
  const size_t length = symbols.empty() ? 0 : symbols[0].size();
  std::vector<Symbol> cells(length * num_attributes);
  for (size_t t = 0; t < length; ++t) {
    for (size_t a = 0; a < num_attributes; ++a) {
      cells[t * num_attributes + a] = symbols[a][t];
    }
  }
  Alphabet alphabet(num_attributes);
  for (size_t a = 0; a < num_attributes; ++a) {
    for (size_t b = 0; b < o.bins; ++b) {
      alphabet.Intern(static_cast<AttributeId>(a), BinName(b, o.bins));
    }
  }
  std::vector<MultiSeq> sequences;
  sequences.emplace_back(num_attributes, std::move(cells));
  return MultiSeqDatabase(std::move(alphabet), std::move(sequences));
}

}  // namespace ditto

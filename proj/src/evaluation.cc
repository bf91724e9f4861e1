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

#include "ditto/evaluation.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "ditto/encoding.h"

namespace ditto {
namespace {

// Finds the embedding of `d` into `x` covering the most cells not yet in
// `covered` (indexed by step * |A| + attribute); ties go to the first
// embedding in lexicographic order of step images.
struct BestEmbedding {
  size_t gain = 0;
  std::vector<size_t> image;
};

void Search(const Pattern& d, const Pattern& x, size_t num_attributes,
            const std::vector<uint8_t>& covered, size_t j, size_t from,
            std::vector<size_t>& image, size_t gain, BestEmbedding& best) {
  if (j == d.length()) {
    if (gain > best.gain) best = {gain, image};
    return;
  }
  for (size_t k = from; k + (d.length() - j) <= x.length(); ++k) {
    if (!d.step(j).IsSubsetOf(x.step(k))) continue;
    size_t add = 0;
    for (const Event& e : d.step(j).events()) {
      add += !covered[k * num_attributes + e.attribute];
    }
    image.push_back(k);
    Search(d, x, num_attributes, covered, j + 1, k + 1, image, gain + add,
           best);
    image.pop_back();
  }
}

size_t MaxAttribute(const Pattern& p) {
  size_t m = 0;
  for (const MultiEvent& step : p.steps()) {
    for (const Event& e : step.events()) m = std::max<size_t>(m, e.attribute);
  }
  return m;
}

std::string Num(double x, int decimals) {
  if (std::isnan(x)) return "n/a";
  return fmt::format("{:.{}f}", x, decimals);
}

std::vector<std::string> Cells(const RecoveryReport& r) {
  const std::string sizes =
      r.min_planted_size == r.max_planted_size
          ? std::to_string(r.min_planted_size)
          : fmt::format("{}-{}", r.min_planted_size, r.max_planted_size);
  return {r.name,
          std::to_string(r.total_size),
          std::to_string(r.total_length),
          std::to_string(r.num_attributes),
          std::to_string(r.max_alphabet),
          std::to_string(r.num_planted),
          r.num_planted == 0 ? "-" : sizes,
          Num(r.support_percent, 1),
          std::to_string(r.matches.exact),
          std::to_string(r.matches.subset),
          std::to_string(r.matches.spurious),
          Num(r.recovery_percent, 1),
          Num(r.compression_gain_percent, 1),
          Num(r.runtime_seconds, 1)};
}

const std::vector<std::string> kHeader = {
    "name", "events", "length", "attributes", "alphabet", "planted", "size",
    "support%", "exact", "subset", "spurious", "R%", "dL%", "seconds"};

}  // namespace

MatchCounts MatchPatterns(std::span<const Pattern> discovered,
                          std::span<const Pattern> planted) {
  MatchCounts out;
  for (const Pattern& d : discovered) {
    if (d.is_singleton()) continue;
    if (std::find(planted.begin(), planted.end(), d) != planted.end()) {
      ++out.exact;
    } else if (std::any_of(planted.begin(), planted.end(),
                           [&](const Pattern& p) {
                             return IsSubPattern(d, p);
                           })) {
      ++out.subset;
    } else {
      ++out.spurious;
    }
  }
  return out;
}

double RecoveryRatio(std::span<const Pattern> discovered,
                     std::span<const Pattern> planted) {
  if (planted.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::vector<const Pattern*> order;
  for (const Pattern& d : discovered) {
    if (!d.is_singleton()) order.push_back(&d);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const Pattern* a, const Pattern* b) {
                     if (a->size() != b->size()) return a->size() > b->size();
                     return LexLess(*a, *b);
                   });
  size_t total = 0;
  size_t covered_total = 0;
  for (const Pattern& x : planted) {
    const size_t num_attributes = MaxAttribute(x) + 1;
    std::vector<uint8_t> covered(x.length() * num_attributes, 0);
    size_t covered_here = 0;
    for (const Pattern* d : order) {
      for (;;) {
        BestEmbedding best;
        std::vector<size_t> image;
        Search(*d, x, num_attributes, covered, 0, 0, image, 0, best);
        if (best.gain == 0) break;
        for (size_t j = 0; j < d->length(); ++j) {
          for (const Event& e : d->step(j).events()) {
            covered[best.image[j] * num_attributes + e.attribute] = 1;
          }
        }
        covered_here += best.gain;
      }
    }
    total += x.size();
    covered_total += covered_here;
  }
  return 100.0 * static_cast<double>(covered_total) /
         static_cast<double>(total);
}

double CompressionGain(const MultiSeqDatabase& d,
                       std::span<const Pattern> patterns) {
  const double base = TotalLength(d, {}).total();
  const double with = TotalLength(d, patterns).total();
  return 100.0 * (1.0 - with / base);
}

RecoveryReport Evaluate(const MultiSeqDatabase& d,
                        std::span<const Pattern> discovered,
                        const GroundTruth& truth) {
  RecoveryReport r;
  r.total_size = d.total_size();
  r.total_length = d.total_length();
  r.num_attributes = d.num_attributes();
  for (AttributeId a = 0; a < d.num_attributes(); ++a) {
    r.max_alphabet = std::max(r.max_alphabet, d.alphabet().size(a));
  }
  r.num_planted = truth.patterns.size();
  r.min_planted_size = std::numeric_limits<size_t>::max();
  for (const Pattern& p : truth.patterns) {
    r.min_planted_size = std::min(r.min_planted_size, p.size());
    r.max_planted_size = std::max(r.max_planted_size, p.size());
  }
  if (truth.patterns.empty()) {
    r.min_planted_size = 0;
    r.support_percent = std::numeric_limits<double>::quiet_NaN();
  } else {
    size_t events = 0;
    for (const PlantedOccurrence& o : truth.occurrences) {
      events += truth.patterns[o.pattern].size();
    }
    r.support_percent = 100.0 * static_cast<double>(events) /
                        static_cast<double>(truth.patterns.size()) /
                        static_cast<double>(d.total_size());
  }
  r.matches = MatchPatterns(discovered, truth.patterns);
  r.recovery_percent = RecoveryRatio(discovered, truth.patterns);
  r.compression_gain_percent = CompressionGain(d, discovered);
  return r;
}

std::string ReportTsv(std::span<const RecoveryReport> rows) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      out += cells[i];
      out += i + 1 == cells.size() ? '\n' : '\t';
    }
  };
  line(kHeader);
  for (const RecoveryReport& r : rows) line(Cells(r));
  return out;
}

std::string ReportText(std::span<const RecoveryReport> rows) {
  std::vector<std::vector<std::string>> table{kHeader};
  for (const RecoveryReport& r : rows) table.push_back(Cells(r));
  std::vector<size_t> width(kHeader.size(), 0);
  for (const auto& row : table) {
    for (size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  std::string out;
  for (const auto& row : table) {
    for (size_t i = 0; i < row.size(); ++i) {
      // Name column left-aligned, numbers right-aligned.
      out += i == 0 ? fmt::format("{:<{}}", row[i], width[i])
                    : fmt::format("  {:>{}}", row[i], width[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace ditto

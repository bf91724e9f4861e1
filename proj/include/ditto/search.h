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

// Greedy MDL search for a compact set of multivariate patterns.
//
// Starting from the singleton-only table, candidates are built by aligning
// pairs of table patterns, ordered by an estimated gain, and accepted only
// when the exact encoded size drops. Each acceptance is followed by
// pruning and by trying variations of the new pattern with events seen in
// the gaps of its occurrences.

#ifndef DITTO_SEARCH_H_
#define DITTO_SEARCH_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ditto/code_table.h"
#include "ditto/standard_table.h"
#include "ditto/types.h"
#include "ditto/windows.h"

namespace ditto {

// All patterns obtained by overlaying `y` on `x` at offsets
// -t(y)..t(x) (relative to x's first step) without two events on the same
// attribute at the same step. Duplicates are removed; order follows the
// offset.
std::vector<Pattern> AlignPatterns(const Pattern& x, const Pattern& y);

struct Candidate {
  Pattern pattern;
  double gain = 0.0;
  int64_t support = 0;
  // L(X|ST).
  double standard_bits = 0.0;
};

// Candidate order: descending gain, support, size and L(X|ST), then
// ascending lexicographic order.
bool CandidateBefore(const Candidate& a, const Candidate& b);

// Estimated drop in L(Cp) when a new pattern takes over z = min(x, y)
// uses of its parents (z = x/2 when both parents are the same pattern);
// `total` is the current total usage.
double EstimateDataGain(double total, double x, double y, bool same_parent);

// Estimated model cost of adding `z`, as a negative number of bits.
double EstimateModelGain(const Pattern& z, const StandardTable& st,
                         size_t num_attributes);

// Patterns proven infrequent, stored in a trie over their step structure.
// A candidate containing any stored pattern is infrequent without
// counting.
class InfrequentCache {
 public:
  InfrequentCache();

  void Insert(const Pattern& p);
  // True if some stored pattern is a sub-pattern of `z`.
  bool ContainsSubPatternOf(const Pattern& z) const;
  size_t size() const { return size_; }

  // Returns true if `z` is frequent. Uses the cache first; otherwise calls
  // `support` and stores `z` if its support is below `min_support`. The
  // computed support is written to `*out` when non-null, else -1.
  bool CheckInsert(const Pattern& z, int64_t min_support,
                   const std::function<int64_t(const Pattern&)>& support,
                   int64_t* out = nullptr);

 private:
  struct Node {
    std::unordered_map<uint64_t, uint32_t> children;
    bool terminal = false;
  };
  bool MatchStep(uint32_t node, const Pattern& z, size_t k) const;
  bool MatchFrom(uint32_t node, const Pattern& z, size_t k) const;

  std::vector<Node> nodes_;
  size_t size_ = 0;
};

struct Progress {
  Pattern pattern;
  // Drop in total encoded size caused by the acceptance.
  double gain_bits = 0.0;
  double total_bits = 0.0;
  // Non-singleton patterns in the table after the acceptance.
  size_t table_size = 0;
  double elapsed_seconds = 0.0;
};

struct DittoOptions {
  // Candidates with support below this are never evaluated.
  int64_t min_support = 1;
  // Applies min_support to occurrences within the cover's gap bound
  // rather than to all minimal windows. The infrequent cache always uses
  // all minimal windows, which keeps its sub-pattern pruning sound.
  bool gap_bounded_support = true;
  // Skips candidates once rejected. Faster, can miss later gains.
  bool cache_rejected = false;
  // Worker threads for support counting. The result does not depend on it.
  int threads = 1;
  std::function<void(const Progress&)> on_accept;
};

struct DittoStats {
  size_t acceptances = 0;
  size_t removals = 0;
  size_t exact_evaluations = 0;
  size_t support_computations = 0;
  size_t cache_size = 0;
  // Total encoded size at the start and after every accepted change.
  std::vector<double> size_history;
};

class Ditto {
 public:
  Ditto(const MultiSeqDatabase& d, DittoOptions options);

  // Runs the search to completion and returns the final table.
  CodeTable Run();

  // Ordered candidates from all pairs of frequent table entries.
  std::vector<Candidate> GenerateCandidates();
  // Ordered extensions of `y` with its gap events. `y` must be in the
  // table.
  std::vector<Candidate> VariationCandidates(const Pattern& y);

  // Adds `x` if that lowers the exact encoded size.
  bool TryAdd(const Pattern& x);
  // Tries to remove patterns whose usage dropped relative to `before`
  // (aligned with `before_table`), never `keep`.
  void Prune(const Pattern& keep, const std::vector<Pattern>& before_table,
             const TableUsage& before);
  // Tries variations of `y` recursively.
  void Variations(const Pattern& y);

  // Non-singleton patterns in cover order.
  const std::vector<Pattern>& patterns() const { return table_; }
  const TableUsage& usage() const { return usage_; }
  double total_bits() const { return usage_.size.total(); }
  const DittoStats& stats() const;
  int64_t SupportOf(const Pattern& p);

 private:
  struct OrderKey {
    size_t size;
    int64_t support;
    double standard_bits;
  };
  OrderKey KeyOf(const Pattern& p);
  bool CoverBefore(const Pattern& a, const Pattern& b);
  int64_t UsageOf(const Pattern& p) const;
  TableUsage Evaluate(const std::vector<Pattern>& ordered);
  void ComputeSupports(const std::vector<const Pattern*>& todo,
                       bool bounded, std::vector<int64_t>& out);
  std::vector<Candidate> Finish(
      std::unordered_map<Pattern, double, PatternHash> gains);
  void Commit(std::vector<Pattern> table, TableUsage usage, const Pattern& x,
              bool added);

  const MultiSeqDatabase& db_;
  EventIndex index_;
  StandardTable st_;
  DittoOptions options_;
  std::chrono::steady_clock::time_point start_;

  std::vector<Pattern> table_;
  TableUsage usage_;
  std::unordered_map<Pattern, int64_t, PatternHash> supports_;
  std::unordered_map<Pattern, int64_t, PatternHash> bounded_supports_;
  InfrequentCache cache_;
  std::unordered_set<Pattern, PatternHash> rejected_;
  mutable DittoStats stats_;
};

// Runs the search on `d`.
CodeTable MineCodeTable(const MultiSeqDatabase& d,
                        const DittoOptions& options);

}  // namespace ditto

#endif  // DITTO_SEARCH_H_

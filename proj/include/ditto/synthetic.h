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

// Synthetic databases: uniform random background with planted patterns.

#ifndef DITTO_SYNTHETIC_H_
#define DITTO_SYNTHETIC_H_

#include <cstdint>
#include <istream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ditto/types.h"

namespace ditto {

struct PlantSpec {
  size_t length = 10000;
  size_t num_attributes = 10;
  size_t alphabet_size = 100;
  size_t num_patterns = 5;
  // Pattern sizes cycle through min_size..max_size.
  size_t min_size = 3;
  size_t max_size = 7;
  // Fraction of all events each pattern spans.
  double support = 0.01;
  // Chance of a one-step gap between consecutive pattern steps.
  double gap_chance = 0.05;
  // Forbids planted occurrence windows from overlapping in time.
  bool no_interleave = false;
  // Bound on evictions while placing occurrences, and on redraws when
  // looking for distinct patterns.
  size_t max_attempts = 10000;
};

class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested patterns cannot be placed without overwriting.
class InfeasibleSpec : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses `key = value` lines; '#' starts a comment. Keys: length,
// attributes, alphabet, patterns, size ("5" or "3-7"), support ("1%" or
// "0.01"), gap_chance, no_interleave, max_attempts. Throws SpecError.
PlantSpec ParsePlantSpec(std::istream& in);

struct PlantedOccurrence {
  size_t pattern = 0;
  size_t sequence = 0;
  std::vector<size_t> times;
};

struct GroundTruth {
  std::vector<Pattern> patterns;
  std::vector<PlantedOccurrence> occurrences;
};

struct SyntheticData {
  MultiSeqDatabase database;
  GroundTruth truth;
};

// Same spec and seed give the same output on every platform. Occurrences
// never overwrite each other. If the patterns drawn cannot be placed, the
// pattern set is redrawn a bounded number of times. Throws SpecError for
// invalid specs and InfeasibleSpec when placement fails.
SyntheticData GenerateSynthetic(const PlantSpec& spec, uint64_t seed);

// Number of occurrences planted for a pattern of `size` events.
size_t PlantedCount(const PlantSpec& spec, size_t size);

std::string GroundTruthToJson(const GroundTruth& truth,
                              const Alphabet& alphabet);
// Throws std::runtime_error on malformed input or unknown symbols.
GroundTruth GroundTruthFromJson(const std::string& text,
                                const Alphabet& alphabet);

// Portable random numbers: the raw 64-bit engine output is mapped to
// ranges without the implementation-defined standard distributions.
class PortableRng {
 public:
  explicit PortableRng(uint64_t seed) : engine_(seed) {}
  // Uniform in [0, n), n > 0.
  uint64_t Index(uint64_t n);
  // Uniform in [0, 1).
  double Unit();

 private:
  std::mt19937_64 engine_;
};

}  // namespace ditto

#endif  // DITTO_SYNTHETIC_H_

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

#include "ditto/synthetic.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <tuple>
#include <optional>

#include "ditto/code_table.h"
#include "json.hpp"

namespace ditto {
namespace {

using nlohmann::json;

std::string Trim(const std::string& s) {
  const size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

size_t ToSize(const std::string& key, const std::string& v) {
  size_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw SpecError("bad integer for " + key + ": '" + v + "'");
  }
  return out;
}

double ToDouble(const std::string& key, const std::string& v) {
  double out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw SpecError("bad number for " + key + ": '" + v + "'");
  }
  return out;
}

bool ToBool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw SpecError("bad flag for " + key + ": '" + v + "'");
}

void Validate(const PlantSpec& s) {
  if (s.length == 0) throw SpecError("length must be >= 1");
  if (s.num_attributes == 0) throw SpecError("attributes must be >= 1");
  if (s.alphabet_size == 0) throw SpecError("alphabet must be >= 1");
  if (s.min_size == 0 || s.min_size > s.max_size) {
    throw SpecError("pattern sizes must satisfy 1 <= min <= max");
  }
  if (s.num_patterns > 0 && s.max_size < 2) {
    throw SpecError("planted patterns need at least 2 events");
  }
  if (!(s.support >= 0.0 && s.support <= 1.0)) {
    throw SpecError("support must be in [0, 1]");
  }
  if (!(s.gap_chance >= 0.0 && s.gap_chance < 1.0)) {
    throw SpecError("gap_chance must be in [0, 1)");
  }
  if (s.max_attempts == 0) throw SpecError("max_attempts must be >= 1");
}

size_t CeilDiv(size_t a, size_t b) { return (a + b - 1) / b; }

Pattern RandomPattern(const PlantSpec& spec, size_t size, PortableRng& rng) {
  const size_t num_attributes = spec.num_attributes;
  const size_t min_length = CeilDiv(size, num_attributes);
  const size_t length =
      min_length + rng.Index(size - min_length + 1);
  std::vector<size_t> counts(length, 1);
  for (size_t rest = size - length; rest > 0; --rest) {
    std::vector<size_t> open;
    for (size_t j = 0; j < length; ++j) {
      if (counts[j] < num_attributes) open.push_back(j);
    }
    ++counts[open[rng.Index(open.size())]];
  }
  std::vector<MultiEvent> steps;
  for (size_t j = 0; j < length; ++j) {
    std::vector<AttributeId> attrs(num_attributes);
    std::iota(attrs.begin(), attrs.end(), AttributeId{0});
    std::vector<Event> events;
    for (size_t k = 0; k < counts[j]; ++k) {
      const size_t pick = k + rng.Index(num_attributes - k);
      std::swap(attrs[k], attrs[pick]);
      events.push_back(
          {attrs[k], static_cast<Symbol>(rng.Index(spec.alphabet_size))});
    }
    steps.emplace_back(std::move(events));
  }
  return Pattern(std::move(steps));
}

// Pattern sets are redrawn this many times before giving up.
constexpr size_t kPatternDraws = 50;

// Distinct random patterns of the given sizes, or nothing if distinct
// patterns cannot be found.
std::optional<GroundTruth> DrawPatterns(const PlantSpec& spec,
                                        const std::vector<size_t>& sizes,
                                        PortableRng& rng) {
  GroundTruth truth;
  for (size_t size : sizes) {
    Pattern p = RandomPattern(spec, size, rng);
    for (size_t attempt = 0;
         std::find(truth.patterns.begin(), truth.patterns.end(), p) !=
         truth.patterns.end();
         ++attempt) {
      if (attempt == spec.max_attempts) return std::nullopt;
      p = RandomPattern(spec, size, rng);
    }
    truth.patterns.push_back(std::move(p));
  }
  return truth;
}

// False if some attribute (or, without interleaving, the time axis) would
// need more planted cells than it has.
bool LoadFits(const PlantSpec& spec, const std::vector<Pattern>& patterns,
              std::string* failure) {
  std::vector<size_t> load(spec.num_attributes, 0);
  size_t steps = 0;
  for (const Pattern& p : patterns) {
    const size_t count = PlantedCount(spec, p.size());
    for (const MultiEvent& step : p.steps()) {
      for (const Event& e : step.events()) load[e.attribute] += count;
    }
    steps += count * p.length();
  }
  for (size_t a = 0; a < load.size(); ++a) {
    if (load[a] > spec.length) {
      *failure = "attribute " + std::to_string(a) + " would need " +
                 std::to_string(load[a]) + " planted cells";
      return false;
    }
  }
  if (spec.no_interleave && steps > spec.length) {
    *failure = "patterns would need " + std::to_string(steps) +
               " time steps without interleaving";
    return false;
  }
  return true;
}

// Plants every occurrence into `cells`. Each occurrence first tries a few
// random start times. If all collide, it takes a start with the fewest
// colliding occurrences (ties at random) and evicts those, which go back
// into the queue. At most `max_attempts` evictions are allowed.
bool PlantAll(const PlantSpec& spec, GroundTruth& truth, PortableRng& rng,
              std::vector<Symbol>& cells, std::string* failure) {
  constexpr size_t kNone = std::numeric_limits<size_t>::max();
  constexpr size_t kProbes = 64;
  const size_t num_attributes = spec.num_attributes;
  const size_t length = spec.length;

  struct Slot {
    size_t pattern;
    std::vector<size_t> offsets;
    size_t start = kNone;
  };
  std::vector<Slot> slots;
  for (size_t i = 0; i < truth.patterns.size(); ++i) {
    const Pattern& p = truth.patterns[i];
    for (size_t k = PlantedCount(spec, p.size()); k > 0; --k) {
      std::vector<size_t> offsets{0};
      for (size_t j = 1; j < p.length(); ++j) {
        offsets.push_back(offsets.back() + 1 +
                          (rng.Unit() < spec.gap_chance ? 1 : 0));
      }
      slots.push_back({i, std::move(offsets)});
    }
  }

  std::vector<size_t> owner(cells.size(), kNone);
  std::vector<size_t> step_owner(length, kNone);
  auto for_cells = [&](const Slot& slot, size_t start, auto&& fn) {
    const Pattern& p = truth.patterns[slot.pattern];
    for (size_t j = 0; j < p.length(); ++j) {
      for (const Event& e : p.step(j).events()) {
        fn((start + slot.offsets[j]) * num_attributes + e.attribute);
      }
    }
  };
  // Distinct occurrences in the way of `slot` at `start`, stopping once
  // more than `limit` are found.
  std::vector<size_t> blockers;
  auto collide = [&](const Slot& slot, size_t start, size_t limit) {
    blockers.clear();
    auto note = [&](size_t o) {
      if (o != kNone && blockers.size() <= limit &&
          std::find(blockers.begin(), blockers.end(), o) == blockers.end()) {
        blockers.push_back(o);
      }
    };
    for_cells(slot, start, [&](size_t cell) { note(owner[cell]); });
    if (spec.no_interleave) {
      for (size_t t = start; t <= start + slot.offsets.back(); ++t) {
        note(step_owner[t]);
      }
    }
    return blockers.size();
  };
  auto set = [&](size_t id, size_t start, size_t who) {
    Slot& slot = slots[id];
    for_cells(slot, start, [&](size_t cell) { owner[cell] = who; });
    if (spec.no_interleave) {
      for (size_t t = start; t <= start + slot.offsets.back(); ++t) {
        step_owner[t] = who;
      }
    }
    slot.start = who == kNone ? kNone : start;
  };

  std::deque<size_t> pending(slots.size());
  std::iota(pending.begin(), pending.end(), size_t{0});
  size_t evictions = 0;
  while (!pending.empty()) {
    const size_t id = pending.front();
    pending.pop_front();
    const Slot& slot = slots[id];
    if (slot.offsets.back() >= length) {
      *failure = "pattern " + std::to_string(slot.pattern) +
                 " does not fit in the data";
      return false;
    }
    const size_t last_start = length - 1 - slot.offsets.back();
    size_t start = kNone;
    for (size_t probe = 0; probe < kProbes && start == kNone; ++probe) {
      const size_t s = rng.Index(last_start + 1);
      if (collide(slot, s, 0) == 0) start = s;
    }
    if (start == kNone) {
      size_t best = kNone;
      std::vector<size_t> ties;
      for (size_t s = 0; s <= last_start; ++s) {
        const size_t c = collide(slot, s, best == kNone ? kNone - 1 : best);
        if (c < best) {
          best = c;
          ties.clear();
        }
        if (c == best) ties.push_back(s);
      }
      start = ties[rng.Index(ties.size())];
      collide(slot, start, kNone - 1);
      evictions += blockers.size();
      if (evictions > spec.max_attempts) {
        *failure = "could not place all occurrences of pattern " +
                   std::to_string(slot.pattern) + " within " +
                   std::to_string(spec.max_attempts) + " evictions";
        return false;
      }
      const std::vector<size_t> evicted = blockers;
      for (size_t o : evicted) {
        set(o, slots[o].start, kNone);
        pending.push_back(o);
      }
    }
    set(id, start, id);
  }

  for (const Slot& slot : slots) {
    const Pattern& p = truth.patterns[slot.pattern];
    std::vector<size_t> times;
    for (size_t j = 0; j < p.length(); ++j) {
      times.push_back(slot.start + slot.offsets[j]);
      for (const Event& e : p.step(j).events()) {
        cells[times[j] * num_attributes + e.attribute] = e.symbol;
      }
    }
    truth.occurrences.push_back({slot.pattern, 0, std::move(times)});
  }
  std::sort(truth.occurrences.begin(), truth.occurrences.end(),
            [](const PlantedOccurrence& a, const PlantedOccurrence& b) {
              return std::tie(a.pattern, a.times) < std::tie(b.pattern, b.times);
            });
  return true;
}

}  // namespace

uint64_t PortableRng::Index(uint64_t n) {
  const uint64_t max = std::mt19937_64::max();
  const uint64_t limit = max - (max % n + 1) % n;
  for (;;) {
    const uint64_t x = engine_();
    if (x <= limit) return x % n;
  }
}

double PortableRng::Unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

PlantSpec ParsePlantSpec(std::istream& in) {
  PlantSpec spec;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const size_t hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw SpecError("line " + std::to_string(line_no) +
                      ": expected key = value");
    }
    const std::string key = Trim(line.substr(0, eq));
    const std::string value = Trim(line.substr(eq + 1));
    if (key == "length") {
      spec.length = ToSize(key, value);
    } else if (key == "attributes") {
      spec.num_attributes = ToSize(key, value);
    } else if (key == "alphabet") {
      spec.alphabet_size = ToSize(key, value);
    } else if (key == "patterns") {
      spec.num_patterns = ToSize(key, value);
    } else if (key == "size") {
      const size_t dash = value.find('-');
      if (dash == std::string::npos) {
        spec.min_size = spec.max_size = ToSize(key, value);
      } else {
        spec.min_size = ToSize(key, Trim(value.substr(0, dash)));
        spec.max_size = ToSize(key, Trim(value.substr(dash + 1)));
      }
    } else if (key == "support") {
      if (!value.empty() && value.back() == '%') {
        spec.support = ToDouble(key, value.substr(0, value.size() - 1)) / 100;
      } else {
        spec.support = ToDouble(key, value);
      }
    } else if (key == "gap_chance") {
      spec.gap_chance = ToDouble(key, value);
    } else if (key == "no_interleave") {
      spec.no_interleave = ToBool(key, value);
    } else if (key == "max_attempts") {
      spec.max_attempts = ToSize(key, value);
    } else {
      throw SpecError("line " + std::to_string(line_no) + ": unknown key '" +
                      key + "'");
    }
  }
  Validate(spec);
  return spec;
}

size_t PlantedCount(const PlantSpec& spec, size_t size) {
  const double events = spec.support * static_cast<double>(spec.length) *
                        static_cast<double>(spec.num_attributes);
  // Guard against 0.01 * 100000 evaluating to 1000.0000000000001.
  return static_cast<size_t>(
      std::ceil(events / static_cast<double>(size) - 1e-9));
}

SyntheticData GenerateSynthetic(const PlantSpec& spec, uint64_t seed) {
  Validate(spec);
  PortableRng rng(seed);
  const size_t num_attributes = spec.num_attributes;
  const size_t length = spec.length;

  std::vector<Symbol> background(length * num_attributes);
  for (Symbol& c : background) {
    c = static_cast<Symbol>(rng.Index(spec.alphabet_size));
  }

  const size_t span = spec.max_size - spec.min_size + 1;
  std::vector<size_t> sizes;
  size_t planted_events = 0;
  for (size_t i = 0; i < spec.num_patterns; ++i) {
    sizes.push_back(spec.min_size + i % span);
    if (CeilDiv(sizes.back(), num_attributes) > length) {
      throw InfeasibleSpec("pattern of size " + std::to_string(sizes.back()) +
                           " does not fit in the data");
    }
    planted_events += PlantedCount(spec, sizes.back()) * sizes.back();
  }
  if (planted_events > background.size()) {
    throw InfeasibleSpec("planted events (" + std::to_string(planted_events) +
                         ") exceed the database size (" +
                         std::to_string(background.size()) + ")");
  }

  std::string failure;
  for (size_t draw = 0; draw < kPatternDraws; ++draw) {
    std::optional<GroundTruth> truth = DrawPatterns(spec, sizes, rng);
    if (!truth) {
      throw InfeasibleSpec("cannot draw " + std::to_string(spec.num_patterns) +
                           " distinct patterns");
    }
    if (!LoadFits(spec, truth->patterns, &failure)) continue;
    std::vector<Symbol> cells = background;
    if (!PlantAll(spec, *truth, rng, cells, &failure)) continue;
    std::vector<size_t> alphabet(num_attributes, spec.alphabet_size);
    std::vector<MultiSeq> sequences;
    sequences.emplace_back(num_attributes, std::move(cells));
    return {MultiSeqDatabase(Alphabet::Numeric(alphabet), std::move(sequences)),
            std::move(*truth)};
  }
  throw InfeasibleSpec(failure + " (after " + std::to_string(kPatternDraws) +
                       " pattern draws)");
}

std::string GroundTruthToJson(const GroundTruth& truth,
                              const Alphabet& alphabet) {
  json patterns = json::array();
  std::vector<size_t> counts(truth.patterns.size(), 0);
  for (const PlantedOccurrence& o : truth.occurrences) ++counts[o.pattern];
  for (size_t i = 0; i < truth.patterns.size(); ++i) {
    patterns.push_back({{"steps", PatternToJson(truth.patterns[i], alphabet)},
                        {"length", truth.patterns[i].length()},
                        {"size", truth.patterns[i].size()},
                        {"planted", counts[i]}});
  }
  json occurrences = json::array();
  for (const PlantedOccurrence& o : truth.occurrences) {
    occurrences.push_back(
        {{"pattern", o.pattern}, {"sequence", o.sequence}, {"times", o.times}});
  }
  json out = {{"patterns", std::move(patterns)},
              {"occurrences", std::move(occurrences)}};
  return out.dump(2) + "\n";
}

GroundTruth GroundTruthFromJson(const std::string& text,
                                const Alphabet& alphabet) {
  GroundTruth truth;
  try {
    const json j = json::parse(text);
    for (const json& p : j.at("patterns")) {
      truth.patterns.push_back(PatternFromJson(p.at("steps"), alphabet));
    }
    if (j.contains("occurrences")) {
      for (const json& o : j.at("occurrences")) {
        PlantedOccurrence occ;
        occ.pattern = o.at("pattern").get<size_t>();
        occ.sequence = o.at("sequence").get<size_t>();
        occ.times = o.at("times").get<std::vector<size_t>>();
        if (occ.pattern >= truth.patterns.size()) {
          throw std::runtime_error("occurrence names unknown pattern");
        }
        truth.occurrences.push_back(std::move(occ));
      }
    }
  } catch (const json::exception& err) {
    throw std::runtime_error(std::string("invalid ground truth JSON: ") +
                             err.what());
  }
  return truth;
}

}  // namespace ditto

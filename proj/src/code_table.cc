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

#include "ditto/code_table.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ditto/cover.h"

namespace ditto {
namespace {

using nlohmann::json;

json Bits(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::round(x * 1e8) / 1e8;
}

}  // namespace

std::vector<Pattern> CodeTable::NonSingletons() const {
  std::vector<Pattern> out;
  for (const CodeTableEntry& e : entries) {
    if (!e.pattern.is_singleton()) out.push_back(e.pattern);
  }
  return out;
}

size_t CodeTable::num_non_singletons() const {
  size_t n = 0;
  for (const CodeTableEntry& e : entries) n += !e.pattern.is_singleton();
  return n;
}

int64_t TableUsage::total_usage() const {
  int64_t total = 0;
  for (const PatternUsage& u : patterns) total += u.usage;
  for (int64_t u : singletons) total += u;
  return total;
}

TableUsage EvaluateTable(const EventIndex& index, const StandardTable& st,
                         std::span<const Pattern> ordered) {
  const MultiSeqDatabase& d = index.db();
  const Alphabet& alphabet = d.alphabet();
  TableUsage out;
  out.patterns.resize(ordered.size());
  out.singletons.resize(alphabet.num_events());
  for (size_t id = 0; id < alphabet.num_events(); ++id) {
    out.singletons[id] = index.count(id);
  }
  std::vector<const Pattern*> ptrs;
  ptrs.reserve(ordered.size());
  for (const Pattern& p : ordered) ptrs.push_back(&p);
  std::vector<uint8_t> covered(d.total_size(), 0);
  CoverNonSingletons(index, ptrs, covered, [&](size_t i, Occurrence&& o) {
    const Pattern& p = ordered[i];
    PatternUsage& u = out.patterns[i];
    ++u.usage;
    u.gaps += static_cast<int64_t>(o.num_gaps());
    u.fills += static_cast<int64_t>(p.length() - 1);
    for (const MultiEvent& step : p.steps()) {
      for (const Event& e : step.events()) --out.singletons[alphabet.EventId(e)];
    }
  });

  std::vector<EntryCost> costs;
  costs.reserve(ordered.size() + out.singletons.size());
  for (size_t i = 0; i < ordered.size(); ++i) {
    costs.push_back({false, ordered[i].length(), st.PatternLength(ordered[i]),
                     out.patterns[i]});
  }
  for (int64_t u : out.singletons) costs.push_back({true, 1, 0.0, {u, 0, 0}});
  out.size = EncodedLength(costs, DataShape::Of(d));
  return out;
}

CodeTable BuildCodeTable(const MultiSeqDatabase& d,
                         std::span<const Pattern> patterns) {
  const EventIndex index(d);
  const StandardTable st(d);
  std::vector<Pattern> all(patterns.begin(), patterns.end());
  for (Pattern& p : AllSingletons(d.alphabet())) all.push_back(std::move(p));
  const std::vector<Pattern> ct = CoverOrder(std::move(all), index, st);
  const Cover cover = ComputeCover(index, ct);
  const UsageStats stats = CountUsage(cover, ct);
  const int64_t total = stats.total_usage();

  CodeTable out;
  out.entries.reserve(ct.size());
  for (size_t i = 0; i < ct.size(); ++i) {
    CodeTableEntry e;
    e.pattern = ct[i];
    e.support = index.Support(ct[i]);
    e.usage = stats.entries[i];
    e.code_bits = e.usage.usage > 0
                      ? PatternCodeLength(e.usage.usage, total)
                      : std::numeric_limits<double>::infinity();
    if (ct[i].length() > 1) {
      std::tie(e.gap_bits, e.fill_bits) =
          GapFillCodeLengths(e.usage.gaps, e.usage.fills);
    }
    out.entries.push_back(std::move(e));
  }
  out.size =
      EncodedLength(MakeEntryCosts(ct, stats, st), DataShape::Of(d));
  return out;
}

json PatternToJson(const Pattern& p, const Alphabet& alphabet) {
  json steps = json::array();
  for (const MultiEvent& step : p.steps()) {
    json events = json::array();
    for (const Event& e : step.events()) {
      events.push_back({{"attribute", e.attribute},
                        {"symbol", alphabet.name(e.attribute, e.symbol)}});
    }
    steps.push_back(std::move(events));
  }
  return steps;
}

Pattern PatternFromJson(const json& j, const Alphabet& alphabet) {
  if (!j.is_array()) throw std::runtime_error("pattern must be a list of steps");
  std::vector<MultiEvent> steps;
  for (const json& step : j) {
    if (!step.is_array()) throw std::runtime_error("step must be a list");
    std::vector<Event> events;
    for (const json& e : step) {
      const auto a = e.at("attribute").get<AttributeId>();
      const auto name = e.at("symbol").get<std::string>();
      if (a >= alphabet.num_attributes()) {
        throw std::runtime_error("attribute " + std::to_string(a) +
                                 " out of range");
      }
      const int64_t s = alphabet.Find(a, name);
      if (s < 0) {
        throw std::runtime_error("unknown symbol '" + name +
                                 "' on attribute " + std::to_string(a));
      }
      events.push_back({a, static_cast<Symbol>(s)});
    }
    try {
      steps.emplace_back(std::move(events));
    } catch (const std::invalid_argument& err) {
      throw std::runtime_error(err.what());
    }
  }
  try {
    return Pattern(std::move(steps));
  } catch (const std::invalid_argument& err) {
    throw std::runtime_error(err.what());
  }
}

std::string CodeTableToJson(const CodeTable& ct, const Alphabet& alphabet) {
  json patterns = json::array();
  for (const CodeTableEntry& e : ct.entries) {
    json entry = {{"steps", PatternToJson(e.pattern, alphabet)},
                  {"length", e.pattern.length()},
                  {"size", e.pattern.size()},
                  {"support", e.support},
                  {"usage", e.usage.usage},
                  {"gaps", e.usage.gaps},
                  {"fills", e.usage.fills},
                  {"code_bits", Bits(e.code_bits)}};
    if (e.pattern.length() > 1) {
      entry["gap_bits"] = Bits(e.gap_bits);
      entry["fill_bits"] = Bits(e.fill_bits);
    }
    patterns.push_back(std::move(entry));
  }
  json out = {{"num_attributes", alphabet.num_attributes()},
              {"model_bits", Bits(ct.size.model_bits)},
              {"data_bits", Bits(ct.size.data_bits)},
              {"total_bits", Bits(ct.size.total())},
              {"patterns", std::move(patterns)}};
  return out.dump(2) + "\n";
}

std::vector<Pattern> PatternsFromJson(const std::string& text,
                                      const Alphabet& alphabet) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& err) {
    throw std::runtime_error(std::string("invalid code table JSON: ") +
                             err.what());
  }
  std::vector<Pattern> out;
  try {
    for (const json& entry : j.at("patterns")) {
      Pattern p = PatternFromJson(entry.at("steps"), alphabet);
      if (!p.is_singleton()) out.push_back(std::move(p));
    }
  } catch (const json::exception& err) {
    throw std::runtime_error(std::string("invalid code table JSON: ") +
                             err.what());
  }
  return out;
}

}  // namespace ditto

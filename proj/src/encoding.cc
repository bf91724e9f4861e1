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

#include "ditto/encoding.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <tuple>

#include "ditto/windows.h"

namespace ditto {
namespace {

constexpr double kUniversalConstant = 2.865064;
constexpr Symbol kUnset = std::numeric_limits<Symbol>::max();

// u * log2(u) with 0 log 0 = 0.
double XLogX(double u) { return u > 0 ? u * std::log2(u) : 0.0; }

// L_N for header counts that are at least 1 for any non-empty database;
// a degenerate zero is not transmitted.
double HeaderIntLength(size_t z) {
  return z == 0 ? 0.0 : UniversalIntLength(static_cast<int64_t>(z));
}

// An active multi-step pattern use while walking the data.
struct ActiveUse {
  uint32_t pattern;
  size_t start;
  size_t element;  // encoder: cover element; decoder: unused
  size_t next_step;

  bool operator<(const ActiveUse& o) const {
    return std::tie(pattern, start) < std::tie(o.pattern, o.start);
  }
};

}  // namespace

double UniversalIntLength(int64_t z) {
  if (z < 1) {
    throw std::domain_error("universal integer code needs z >= 1, got " +
                            std::to_string(z));
  }
  double bits = std::log2(kUniversalConstant);
  double term = std::log2(static_cast<double>(z));
  while (term > 0) {
    bits += term;
    term = std::log2(term);
  }
  return bits;
}

double Log2Binomial(int64_t n, int64_t k) {
  if (k <= 0 || k >= n) return 0.0;
  const double ln = std::lgamma(static_cast<double>(n) + 1) -
                    std::lgamma(static_cast<double>(k) + 1) -
                    std::lgamma(static_cast<double>(n - k) + 1);
  return ln / std::log(2.0);
}

int64_t UsageStats::total_usage() const {
  int64_t total = 0;
  for (const PatternUsage& u : entries) total += u.usage;
  return total;
}

UsageStats CountUsage(const Cover& c, std::span<const Pattern> patterns) {
  UsageStats stats;
  stats.entries.resize(patterns.size());
  for (const CoverElement& el : c.elements) {
    PatternUsage& u = stats.entries[el.pattern];
    ++u.usage;
    u.gaps += static_cast<int64_t>(el.occurrence.num_gaps());
    u.fills += static_cast<int64_t>(patterns[el.pattern].length() - 1);
  }
  for (size_t cell = 0; cell < c.owner.size(); ++cell) {
    if (c.owner[cell] == Cover::kSingleton) {
      ++stats.entries[c.singleton_pattern[cell]].usage;
    }
  }
  return stats;
}

UsageStats CountUsage(const CodeStreams& s, size_t num_patterns) {
  UsageStats stats;
  stats.entries.resize(num_patterns);
  for (uint32_t p : s.pattern_stream) ++stats.entries[p].usage;
  for (const GapCode& g : s.gap_stream) {
    if (g.fill) {
      ++stats.entries[g.pattern].fills;
    } else {
      ++stats.entries[g.pattern].gaps;
    }
  }
  return stats;
}

CodeStreams EncodeStreams(const MultiSeqDatabase& d, const Cover& c,
                          std::span<const Pattern> ct_order) {
  ValidateCover(d, ct_order, c);
  const size_t num_attributes = d.num_attributes();
  CodeStreams out;
  out.num_attributes = num_attributes;
  for (size_t seq = 0; seq < d.num_sequences(); ++seq) {
    const size_t length = d.sequence(seq).length();
    const size_t base = d.sequence_offset(seq);
    out.sequence_lengths.push_back(length);
    std::set<ActiveUse> active;
    for (size_t t = 0; t < length; ++t) {
      for (auto it = active.begin(); it != active.end();) {
        ActiveUse use = *it;
        const Occurrence& o = c.elements[use.element].occurrence;
        const bool fill = o.matched[use.next_step] == t;
        out.gap_stream.push_back({use.pattern, fill});
        if (!fill) {
          ++it;
          continue;
        }
        it = active.erase(it);
        if (++use.next_step < o.matched.size()) active.insert(it, use);
      }
      for (AttributeId a = 0; a < num_attributes; ++a) {
        const size_t cell = (base + t) * num_attributes + a;
        const int32_t owner = c.owner[cell];
        if (owner == Cover::kSingleton) {
          out.pattern_stream.push_back(
              static_cast<uint32_t>(c.singleton_pattern[cell]));
          continue;
        }
        const CoverElement& el = c.elements[owner];
        const Pattern& p = ct_order[el.pattern];
        if (el.occurrence.start != t ||
            p.step(0).events()[0].attribute != a) {
          continue;
        }
        out.pattern_stream.push_back(static_cast<uint32_t>(el.pattern));
        if (p.length() > 1) {
          active.insert({static_cast<uint32_t>(el.pattern), t,
                         static_cast<size_t>(owner), 1});
        }
      }
    }
  }
  return out;
}

MultiSeqDatabase DecodeStreams(const CodeStreams& s,
                               std::span<const Pattern> ct_order,
                               const Alphabet& alphabet) {
  const size_t num_attributes = s.num_attributes;
  if (alphabet.num_attributes() != num_attributes) {
    throw DecodeError("alphabet has " +
                      std::to_string(alphabet.num_attributes()) +
                      " attributes, streams have " +
                      std::to_string(num_attributes));
  }
  size_t cp = 0;
  size_t cg = 0;
  std::vector<MultiSeq> sequences;
  for (size_t seq = 0; seq < s.sequence_lengths.size(); ++seq) {
    const size_t length = s.sequence_lengths[seq];
    std::vector<Symbol> cells(length * num_attributes, kUnset);
    auto place = [&](const MultiEvent& step, size_t t) {
      for (const Event& e : step.events()) {
        if (e.attribute >= num_attributes ||
            e.symbol >= alphabet.size(e.attribute)) {
          throw DecodeError("pattern event outside alphabet at Cp position " +
                            std::to_string(cp));
        }
        Symbol& slot = cells[t * num_attributes + e.attribute];
        if (slot != kUnset) {
          throw DecodeError("cell decoded twice in sequence " +
                            std::to_string(seq) + " at time " +
                            std::to_string(t));
        }
        slot = e.symbol;
      }
    };
    std::set<ActiveUse> active;
    for (size_t t = 0; t < length; ++t) {
      for (auto it = active.begin(); it != active.end();) {
        if (cg >= s.gap_stream.size()) {
          throw DecodeError("gap stream exhausted at position " +
                            std::to_string(cg));
        }
        const GapCode g = s.gap_stream[cg];
        ActiveUse use = *it;
        if (g.pattern != use.pattern) {
          throw DecodeError("gap stream position " + std::to_string(cg) +
                            " names pattern " + std::to_string(g.pattern) +
                            ", expected " + std::to_string(use.pattern));
        }
        ++cg;
        if (!g.fill) {
          ++it;
          continue;
        }
        const Pattern& p = ct_order[use.pattern];
        place(p.step(use.next_step), t);
        it = active.erase(it);
        if (++use.next_step < p.length()) active.insert(it, use);
      }
      for (AttributeId a = 0; a < num_attributes; ++a) {
        if (cells[t * num_attributes + a] != kUnset) continue;
        if (cp >= s.pattern_stream.size()) {
          throw DecodeError("pattern stream exhausted at position " +
                            std::to_string(cp));
        }
        const uint32_t code = s.pattern_stream[cp];
        if (code >= ct_order.size()) {
          throw DecodeError("unknown pattern code " + std::to_string(code) +
                            " at Cp position " + std::to_string(cp));
        }
        const Pattern& p = ct_order[code];
        if (p.step(0).events()[0].attribute != a) {
          throw DecodeError("pattern code at Cp position " +
                            std::to_string(cp) +
                            " does not start at attribute " +
                            std::to_string(a));
        }
        place(p.step(0), t);
        ++cp;
        if (p.length() > 1) active.insert({code, t, 0, 1});
      }
    }
    if (!active.empty()) {
      throw DecodeError("pattern use still open at end of sequence " +
                        std::to_string(seq));
    }
    sequences.emplace_back(num_attributes, std::move(cells));
  }
  if (cp != s.pattern_stream.size() || cg != s.gap_stream.size()) {
    throw DecodeError("trailing codes after decoding: Cp " +
                      std::to_string(s.pattern_stream.size() - cp) +
                      ", Cg " + std::to_string(s.gap_stream.size() - cg));
  }
  return MultiSeqDatabase(alphabet, std::move(sequences));
}

double PatternCodeLength(int64_t usage, int64_t total_usage) {
  return -std::log2(static_cast<double>(usage) /
                    static_cast<double>(total_usage));
}

std::pair<double, double> GapFillCodeLengths(int64_t gaps, int64_t fills) {
  const double total = static_cast<double>(gaps + fills);
  return {-std::log2(static_cast<double>(gaps) / total),
          -std::log2(static_cast<double>(fills) / total)};
}

DataShape DataShape::Of(const MultiSeqDatabase& d) {
  DataShape shape;
  shape.num_attributes = d.num_attributes();
  for (AttributeId a = 0; a < d.num_attributes(); ++a) {
    shape.alphabet_sizes.push_back(d.alphabet().size(a));
  }
  for (const MultiSeq& s : d.sequences()) {
    shape.sequence_lengths.push_back(s.length());
  }
  shape.total_length = d.total_length();
  return shape;
}

double DataLength(std::span<const EntryCost> entries, const DataShape& shape) {
  int64_t total = 0;
  for (const EntryCost& e : entries) total += e.usage.usage;
  // L(Cp) = sum u * -log2(u / s) = s log s - sum u log u.
  double bits = XLogX(static_cast<double>(total));
  for (const EntryCost& e : entries) {
    bits -= XLogX(static_cast<double>(e.usage.usage));
    if (e.length > 1) {
      const double g = static_cast<double>(e.usage.gaps);
      const double f = static_cast<double>(e.usage.fills);
      bits += XLogX(g + f) - XLogX(g) - XLogX(f);
    }
  }
  bits += HeaderIntLength(shape.num_attributes);
  bits += HeaderIntLength(shape.sequence_lengths.size());
  for (size_t len : shape.sequence_lengths) bits += HeaderIntLength(len);
  return bits;
}

double PatternModelLength(size_t length, int64_t gaps, double standard_bits,
                          size_t num_attributes) {
  return UniversalIntLength(static_cast<int64_t>(length)) +
         UniversalIntLength(gaps + 1) +
         static_cast<double>(length) *
             std::log2(static_cast<double>(num_attributes)) +
         standard_bits;
}

double PatternModelLength(const Pattern& p, int64_t gaps,
                          const StandardTable& st, size_t num_attributes) {
  return PatternModelLength(p.length(), gaps, st.PatternLength(p),
                            num_attributes);
}

double CodeTableLength(std::span<const EntryCost> entries,
                       const DataShape& shape) {
  double bits = 0.0;
  const auto events_per_attribute = static_cast<int64_t>(shape.total_length);
  for (size_t size : shape.alphabet_sizes) {
    bits += HeaderIntLength(size) +
            Log2Binomial(events_per_attribute, static_cast<int64_t>(size));
  }
  int64_t num_patterns = 0;
  int64_t pattern_usage = 0;
  double pattern_bits = 0.0;
  for (const EntryCost& e : entries) {
    if (e.singleton) continue;
    ++num_patterns;
    pattern_usage += e.usage.usage;
    pattern_bits += PatternModelLength(e.length, e.usage.gaps,
                                       e.standard_bits, shape.num_attributes);
  }
  bits += UniversalIntLength(num_patterns + 1);
  bits += UniversalIntLength(pattern_usage + 1);
  bits += Log2Binomial(pattern_usage, num_patterns);
  return bits + pattern_bits;
}

EncodedSize EncodedLength(std::span<const EntryCost> entries,
                          const DataShape& shape) {
  return {CodeTableLength(entries, shape), DataLength(entries, shape)};
}

std::vector<EntryCost> MakeEntryCosts(std::span<const Pattern> ct_order,
                                      const UsageStats& stats,
                                      const StandardTable& st) {
  std::vector<EntryCost> out;
  out.reserve(ct_order.size());
  for (size_t i = 0; i < ct_order.size(); ++i) {
    const Pattern& p = ct_order[i];
    EntryCost e;
    e.singleton = p.is_singleton();
    e.length = p.length();
    if (!e.singleton) e.standard_bits = st.PatternLength(p);
    e.usage = stats.entries[i];
    out.push_back(e);
  }
  return out;
}

std::vector<Pattern> AllSingletons(const Alphabet& alphabet) {
  std::vector<Pattern> out;
  out.reserve(alphabet.num_events());
  for (size_t id = 0; id < alphabet.num_events(); ++id) {
    out.push_back(Pattern::Singleton(alphabet.EventAt(id)));
  }
  return out;
}

EncodedSize TotalLength(const MultiSeqDatabase& d,
                        std::span<const Pattern> patterns) {
  const EventIndex index(d);
  const StandardTable st(d);
  std::vector<Pattern> all(patterns.begin(), patterns.end());
  for (Pattern& p : AllSingletons(d.alphabet())) all.push_back(std::move(p));
  const std::vector<Pattern> ct = CoverOrder(std::move(all), index, st);
  const Cover cover = ComputeCover(index, ct);
  const CodeStreams streams = EncodeStreams(d, cover, ct);
  const UsageStats stats = CountUsage(streams, ct.size());
  return EncodedLength(MakeEntryCosts(ct, stats, st), DataShape::Of(d));
}

}  // namespace ditto

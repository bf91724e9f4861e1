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

#include "ditto/search.h"

#include <algorithm>
#include <cmath>
#include <thread>
#include <utility>

#include "ditto/cover.h"
#include "ditto/encoding.h"

namespace ditto {
namespace {

// Improvements smaller than this are treated as ties, so floating point
// noise never counts as compression.
constexpr double kMinImprovement = 1e-9;

constexpr uint64_t kStepEnd = 0;

uint64_t EventToken(Event e) {
  return ((uint64_t{e.attribute} << 32) | e.symbol) + 1;
}

Event TokenEvent(uint64_t token) {
  --token;
  return {static_cast<AttributeId>(token >> 32),
          static_cast<Symbol>(token & 0xffffffffULL)};
}

bool StepHas(const MultiEvent& step, Event e) {
  return std::binary_search(step.events().begin(), step.events().end(), e);
}

double XLogX(double u) { return u > 0 ? u * std::log2(u) : 0.0; }

}  // namespace

std::vector<Pattern> AlignPatterns(const Pattern& x, const Pattern& y) {
  const auto tx = static_cast<int64_t>(x.length());
  const auto ty = static_cast<int64_t>(y.length());
  std::vector<Pattern> out;
  for (int64_t d = -ty; d <= tx; ++d) {
    const int64_t lo = std::min<int64_t>(0, d);
    const int64_t hi = std::max(tx, d + ty);
    std::vector<std::vector<Event>> steps(static_cast<size_t>(hi - lo));
    for (int64_t i = 0; i < tx; ++i) {
      auto& dst = steps[static_cast<size_t>(i - lo)];
      for (const Event& e : x.step(i).events()) dst.push_back(e);
    }
    bool conflict = false;
    for (int64_t j = 0; j < ty && !conflict; ++j) {
      auto& dst = steps[static_cast<size_t>(d + j - lo)];
      for (const Event& e : y.step(j).events()) {
        if (std::any_of(dst.begin(), dst.end(), [&](const Event& o) {
              return o.attribute == e.attribute;
            })) {
          conflict = true;
          break;
        }
        dst.push_back(e);
      }
    }
    if (conflict) continue;
    std::vector<MultiEvent> merged;
    merged.reserve(steps.size());
    for (auto& s : steps) merged.emplace_back(std::move(s));
    Pattern z(std::move(merged));
    if (std::find(out.begin(), out.end(), z) == out.end()) {
      out.push_back(std::move(z));
    }
  }
  return out;
}

bool CandidateBefore(const Candidate& a, const Candidate& b) {
  if (a.gain != b.gain) return a.gain > b.gain;
  if (a.support != b.support) return a.support > b.support;
  if (a.pattern.size() != b.pattern.size()) {
    return a.pattern.size() > b.pattern.size();
  }
  if (a.standard_bits != b.standard_bits) {
    return a.standard_bits > b.standard_bits;
  }
  return LexLess(a.pattern, b.pattern);
}

double EstimateDataGain(double total, double x, double y, bool same_parent) {
  if (same_parent) {
    const double z = x / 2;
    const double x2 = x - 2 * z;
    const double s2 = total - z;
    return XLogX(total) - XLogX(s2) + XLogX(z) - XLogX(x) + XLogX(x2);
  }
  const double z = std::min(x, y);
  const double s2 = total - z;
  return XLogX(total) - XLogX(s2) + XLogX(z) - XLogX(x) + XLogX(x - z) -
         XLogX(y) + XLogX(y - z);
}

double EstimateModelGain(const Pattern& z, const StandardTable& st,
                         size_t num_attributes) {
  return -UniversalIntLength(static_cast<int64_t>(z.length())) -
         static_cast<double>(z.length()) *
             std::log2(static_cast<double>(num_attributes)) -
         st.PatternLength(z);
}

InfrequentCache::InfrequentCache() : nodes_(1) {}

void InfrequentCache::Insert(const Pattern& p) {
  uint32_t node = 0;
  auto walk = [&](uint64_t token) {
    auto it = nodes_[node].children.find(token);
    if (it != nodes_[node].children.end()) {
      node = it->second;
      return;
    }
    const auto next = static_cast<uint32_t>(nodes_.size());
    nodes_[node].children.emplace(token, next);
    nodes_.emplace_back();
    node = next;
  };
  for (const MultiEvent& step : p.steps()) {
    for (const Event& e : step.events()) walk(EventToken(e));
    walk(kStepEnd);
  }
  if (!nodes_[node].terminal) {
    nodes_[node].terminal = true;
    ++size_;
  }
}

bool InfrequentCache::MatchFrom(uint32_t node, const Pattern& z,
                                size_t k) const {
  for (const auto& [token, child] : nodes_[node].children) {
    const Event e = TokenEvent(token);
    for (size_t kk = k; kk < z.length(); ++kk) {
      if (StepHas(z.step(kk), e) && MatchStep(child, z, kk)) return true;
    }
  }
  return false;
}

bool InfrequentCache::MatchStep(uint32_t node, const Pattern& z,
                                size_t k) const {
  for (const auto& [token, child] : nodes_[node].children) {
    if (token == kStepEnd) {
      if (nodes_[child].terminal || MatchFrom(child, z, k + 1)) return true;
    } else if (StepHas(z.step(k), TokenEvent(token)) &&
               MatchStep(child, z, k)) {
      return true;
    }
  }
  return false;
}

bool InfrequentCache::ContainsSubPatternOf(const Pattern& z) const {
  return size_ > 0 && MatchFrom(0, z, 0);
}

bool InfrequentCache::CheckInsert(
    const Pattern& z, int64_t min_support,
    const std::function<int64_t(const Pattern&)>& support, int64_t* out) {
  if (out != nullptr) *out = -1;
  if (ContainsSubPatternOf(z)) return false;
  const int64_t s = support(z);
  if (out != nullptr) *out = s;
  if (s < min_support) {
    Insert(z);
    return false;
  }
  return true;
}

Ditto::Ditto(const MultiSeqDatabase& d, DittoOptions options)
    : db_(d), index_(d), st_(d), options_(std::move(options)) {
  start_ = std::chrono::steady_clock::now();
  usage_ = Evaluate(table_);
  stats_.size_history.push_back(usage_.size.total());
}

const DittoStats& Ditto::stats() const {
  stats_.cache_size = cache_.size();
  return stats_;
}

int64_t Ditto::SupportOf(const Pattern& p) {
  if (p.is_singleton()) return index_.count(p.step(0).events()[0]);
  auto it = supports_.find(p);
  if (it != supports_.end()) return it->second;
  ++stats_.support_computations;
  const int64_t s = index_.Support(p);
  supports_.emplace(p, s);
  return s;
}

Ditto::OrderKey Ditto::KeyOf(const Pattern& p) {
  return {p.size(), SupportOf(p), st_.PatternLength(p)};
}

bool Ditto::CoverBefore(const Pattern& a, const Pattern& b) {
  const OrderKey ka = KeyOf(a);
  const OrderKey kb = KeyOf(b);
  if (ka.size != kb.size) return ka.size > kb.size;
  if (ka.support != kb.support) return ka.support > kb.support;
  if (ka.standard_bits != kb.standard_bits) {
    return ka.standard_bits > kb.standard_bits;
  }
  return LexLess(a, b);
}

int64_t Ditto::UsageOf(const Pattern& p) const {
  if (p.is_singleton()) {
    return usage_.singletons[db_.alphabet().EventId(p.step(0).events()[0])];
  }
  for (size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] == p) return usage_.patterns[i].usage;
  }
  return 0;
}

TableUsage Ditto::Evaluate(const std::vector<Pattern>& ordered) {
  ++stats_.exact_evaluations;
  return EvaluateTable(index_, st_, ordered);
}

void Ditto::ComputeSupports(const std::vector<const Pattern*>& todo,
                            bool bounded, std::vector<int64_t>& out) {
  out.assign(todo.size(), 0);
  stats_.support_computations += todo.size();
  auto count = [&](size_t i) {
    const Pattern& p = *todo[i];
    out[i] = index_.Support(p, bounded ? GapBoundedWindow(p) : kUnboundedWindow);
  };
  const size_t workers =
      std::min<size_t>(std::max(options_.threads, 1), todo.size());
  if (workers <= 1) {
    for (size_t i = 0; i < todo.size(); ++i) count(i);
    return;
  }
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (size_t i = w; i < todo.size(); i += workers) count(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

std::vector<Candidate> Ditto::Finish(
    std::unordered_map<Pattern, double, PatternHash> gains) {
  const int64_t sigma = options_.min_support;
  std::vector<Pattern> order;
  order.reserve(gains.size());
  for (const auto& [z, g] : gains) order.push_back(z);
  std::sort(order.begin(), order.end(), LexLess);

  // Cheap rejections first, then count the rest (possibly in parallel) and
  // feed the results to the cache in a fixed order.
  std::vector<const Pattern*> todo;
  for (const Pattern& z : order) {
    if (supports_.contains(z)) continue;
    bool bounded = false;
    for (const MultiEvent& step : z.steps()) {
      for (const Event& e : step.events()) bounded |= index_.count(e) < sigma;
    }
    if (bounded || cache_.ContainsSubPatternOf(z)) continue;
    todo.push_back(&z);
  }
  std::vector<int64_t> counted;
  ComputeSupports(todo, false, counted);
  for (size_t i = 0; i < todo.size(); ++i) {
    supports_.emplace(*todo[i], counted[i]);
    int64_t unused;
    cache_.CheckInsert(*todo[i], sigma,
                       [&](const Pattern&) { return counted[i]; }, &unused);
  }
  if (options_.gap_bounded_support) {
    todo.clear();
    for (const Pattern& z : order) {
      auto it = supports_.find(z);
      if (it != supports_.end() && it->second >= sigma &&
          !bounded_supports_.contains(z)) {
        todo.push_back(&z);
      }
    }
    ComputeSupports(todo, true, counted);
    for (size_t i = 0; i < todo.size(); ++i) {
      bounded_supports_.emplace(*todo[i], counted[i]);
    }
  }

  std::vector<Candidate> out;
  for (Pattern& z : order) {
    auto it = supports_.find(z);
    if (it == supports_.end() || it->second < sigma) continue;
    if (options_.gap_bounded_support && bounded_supports_[z] < sigma) continue;
    Candidate c;
    c.gain = gains[z] + EstimateModelGain(z, st_, db_.num_attributes());
    c.support = it->second;
    c.standard_bits = st_.PatternLength(z);
    c.pattern = std::move(z);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), CandidateBefore);
  return out;
}

std::vector<Candidate> Ditto::GenerateCandidates() {
  const Alphabet& alphabet = db_.alphabet();
  std::vector<Pattern> frequent = table_;
  std::vector<Pattern> singletons;
  for (Pattern& p : AllSingletons(alphabet)) {
    if (SupportOf(p) >= options_.min_support) singletons.push_back(std::move(p));
  }
  std::sort(singletons.begin(), singletons.end(),
            [this](const Pattern& a, const Pattern& b) {
              return CoverBefore(a, b);
            });
  for (Pattern& p : singletons) frequent.push_back(std::move(p));

  std::vector<int64_t> usage;
  for (const Pattern& p : frequent) usage.push_back(UsageOf(p));
  const auto total = static_cast<double>(usage_.total_usage());
  const std::unordered_set<Pattern, PatternHash> in_table(table_.begin(),
                                                          table_.end());
  std::unordered_map<Pattern, double, PatternHash> gains;
  for (size_t i = 0; i < frequent.size(); ++i) {
    for (size_t j = 0; j < frequent.size(); ++j) {
      const double g = EstimateDataGain(
          total, static_cast<double>(usage[i]), static_cast<double>(usage[j]),
          i == j);
      for (Pattern& z : AlignPatterns(frequent[i], frequent[j])) {
        if (in_table.contains(z) || rejected_.contains(z)) continue;
        auto [it, inserted] = gains.try_emplace(std::move(z), g);
        if (!inserted) it->second = std::max(it->second, g);
      }
    }
  }
  return Finish(std::move(gains));
}

std::vector<Candidate> Ditto::VariationCandidates(const Pattern& y) {
  const auto pos = std::find(table_.begin(), table_.end(), y);
  if (pos == table_.end()) return {};
  const auto target = static_cast<size_t>(pos - table_.begin());
  std::vector<const Pattern*> ptrs;
  for (const Pattern& p : table_) ptrs.push_back(&p);
  std::vector<Occurrence> uses;
  std::vector<uint8_t> covered(db_.total_size(), 0);
  CoverNonSingletons(index_, ptrs, covered, [&](size_t i, Occurrence&& o) {
    if (i == target) uses.push_back(std::move(o));
  });

  const Alphabet& alphabet = db_.alphabet();
  const size_t num_attributes = db_.num_attributes();
  const auto total = static_cast<double>(usage_.total_usage());
  const auto usage_y = static_cast<double>(usage_.patterns[target].usage);
  const std::unordered_set<Pattern, PatternHash> in_table(table_.begin(),
                                                          table_.end());
  std::unordered_map<Pattern, double, PatternHash> gains;
  auto offer = [&](Pattern z, Event e) {
    if (in_table.contains(z) || rejected_.contains(z)) return;
    const double g = EstimateDataGain(
        total, usage_y,
        static_cast<double>(usage_.singletons[alphabet.EventId(e)]), false);
    auto [it, inserted] = gains.try_emplace(std::move(z), g);
    if (!inserted) it->second = std::max(it->second, g);
  };
  const auto steps = y.steps();
  for (const Occurrence& o : uses) {
    const size_t base = db_.sequence_offset(o.sequence);
    for (size_t j = 0; j < y.length(); ++j) {
      // Events sharing a matched step on attributes the step leaves open.
      for (AttributeId a = 0; a < num_attributes; ++a) {
        if (y.step(j).Defines(a)) continue;
        const Event e{a, index_.cell(base + o.matched[j], a)};
        std::vector<Event> merged(y.step(j).events().begin(),
                                  y.step(j).events().end());
        merged.push_back(e);
        std::vector<MultiEvent> z(steps.begin(), steps.end());
        z[j] = MultiEvent(std::move(merged));
        offer(Pattern(std::move(z)), e);
      }
      if (j + 1 == y.length()) break;
      // Events in the gaps between step j and j + 1 become a new step.
      for (size_t g = o.matched[j] + 1; g < o.matched[j + 1]; ++g) {
        for (AttributeId a = 0; a < num_attributes; ++a) {
          const Event e{a, index_.cell(base + g, a)};
          std::vector<MultiEvent> z(steps.begin(), steps.begin() + j + 1);
          z.push_back(MultiEvent({e}));
          z.insert(z.end(), steps.begin() + j + 1, steps.end());
          offer(Pattern(std::move(z)), e);
        }
      }
    }
  }
  return Finish(std::move(gains));
}

void Ditto::Commit(std::vector<Pattern> table, TableUsage usage,
                   const Pattern& x, bool added) {
  const double gain = usage_.size.total() - usage.size.total();
  table_ = std::move(table);
  usage_ = std::move(usage);
  stats_.size_history.push_back(usage_.size.total());
  if (!added) {
    ++stats_.removals;
    return;
  }
  ++stats_.acceptances;
  if (options_.on_accept) {
    Progress p;
    p.pattern = x;
    p.gain_bits = gain;
    p.total_bits = usage_.size.total();
    p.table_size = table_.size();
    p.elapsed_seconds = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start_)
                            .count();
    options_.on_accept(p);
  }
}

bool Ditto::TryAdd(const Pattern& x) {
  if (x.is_singleton() ||
      std::find(table_.begin(), table_.end(), x) != table_.end()) {
    return false;
  }
  std::vector<Pattern> trial = table_;
  auto pos = std::find_if(trial.begin(), trial.end(), [&](const Pattern& p) {
    return CoverBefore(x, p);
  });
  trial.insert(pos, x);
  TableUsage usage = Evaluate(trial);
  if (usage.size.total() < usage_.size.total() - kMinImprovement) {
    Commit(std::move(trial), std::move(usage), x, true);
    return true;
  }
  if (options_.cache_rejected) rejected_.insert(x);
  return false;
}

void Ditto::Prune(const Pattern& keep,
                  const std::vector<Pattern>& before_table,
                  const TableUsage& before) {
  auto decreased = [](const std::vector<Pattern>& now_table,
                      const TableUsage& now,
                      const std::vector<Pattern>& then_table,
                      const TableUsage& then, const Pattern& p) {
    const auto a = std::find(now_table.begin(), now_table.end(), p);
    const auto b = std::find(then_table.begin(), then_table.end(), p);
    if (a == now_table.end() || b == then_table.end()) return false;
    return now.patterns[a - now_table.begin()].usage <
           then.patterns[b - then_table.begin()].usage;
  };
  std::vector<Pattern> queue;
  for (const Pattern& p : table_) {
    if (p != keep && decreased(table_, usage_, before_table, before, p)) {
      queue.push_back(p);
    }
  }
  while (!queue.empty()) {
    auto next = std::min_element(
        queue.begin(), queue.end(), [this](const Pattern& a, const Pattern& b) {
          const int64_t ua = UsageOf(a);
          const int64_t ub = UsageOf(b);
          if (ua != ub) return ua < ub;
          return CoverBefore(a, b);
        });
    const Pattern y = *next;
    queue.erase(next);
    std::vector<Pattern> trial;
    for (const Pattern& p : table_) {
      if (p != y) trial.push_back(p);
    }
    TableUsage usage = Evaluate(trial);
    if (usage.size.total() >= usage_.size.total() - kMinImprovement) continue;
    const std::vector<Pattern> old_table = table_;
    const TableUsage old_usage = usage_;
    Commit(std::move(trial), std::move(usage), y, false);
    for (const Pattern& p : table_) {
      if (p == keep || std::find(queue.begin(), queue.end(), p) != queue.end()) {
        continue;
      }
      if (decreased(table_, usage_, old_table, old_usage, p)) {
        queue.push_back(p);
      }
    }
  }
}

void Ditto::Variations(const Pattern& y) {
  for (const Candidate& c : VariationCandidates(y)) {
    const std::vector<Pattern> before_table = table_;
    const TableUsage before = usage_;
    if (!TryAdd(c.pattern)) continue;
    Prune(c.pattern, before_table, before);
    Variations(c.pattern);
  }
}

CodeTable Ditto::Run() {
  for (;;) {
    bool changed = false;
    for (const Candidate& c : GenerateCandidates()) {
      const std::vector<Pattern> before_table = table_;
      const TableUsage before = usage_;
      if (!TryAdd(c.pattern)) continue;
      Prune(c.pattern, before_table, before);
      Variations(c.pattern);
      changed = true;
      break;
    }
    if (!changed) break;
  }
  return BuildCodeTable(db_, table_);
}

CodeTable MineCodeTable(const MultiSeqDatabase& d,
                        const DittoOptions& options) {
  Ditto search(d, options);
  return search.Run();
}

}  // namespace ditto

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
#include <random>
#include <string>
#include <vector>

#include "ditto/encoding.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace ditto {
namespace {

using testing::MakeDb;
using testing::MakeSeqsDb;
using testing::Pat;

double XLog2X(double v) { return v > 0 ? v * std::log2(v) : 0.0; }

TEST(AlignPatternsTest, TwoStepPatternWithSingletonOnOtherAttribute) {
  MultiSeqDatabase d = MakeDb({"ac", "bc"});
  const Alphabet& al = d.alphabet();
  std::vector<Pattern> got =
      AlignPatterns(Pat("{0=a}{0=b}", al), Pat("{1=c}", al));
  std::vector<Pattern> want{
      Pat("{1=c}{0=a}{0=b}", al), Pat("{0=a,1=c}{0=b}", al),
      Pat("{0=a}{0=b,1=c}", al), Pat("{0=a}{0=b}{1=c}", al)};
  EXPECT_EQ(got, want);
}

TEST(AlignPatternsTest, SingletonWithItself) {
  MultiSeqDatabase d = MakeDb({"a"});
  Pattern a = Pat("{0=a}", d.alphabet());
  EXPECT_EQ(AlignPatterns(a, a),
            (std::vector<Pattern>{Pat("{0=a}{0=a}", d.alphabet())}));
}

TEST(AlignPatternsTest, SingletonsOnDifferentAttributes) {
  MultiSeqDatabase d = MakeDb({"ab"});
  const Alphabet& al = d.alphabet();
  std::vector<Pattern> got = AlignPatterns(Pat("{0=a}", al), Pat("{1=b}", al));
  EXPECT_EQ(got, (std::vector<Pattern>{Pat("{1=b}{0=a}", al),
                                       Pat("{0=a,1=b}", al),
                                       Pat("{0=a}{1=b}", al)}));
}

TEST(AlignPatternsTest, NoStepDefinesAnAttributeTwice) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    Pattern x = testing::RandomPattern(rng, 3, 3, 2);
    Pattern y = testing::RandomPattern(rng, 3, 3, 2);
    for (const Pattern& z : AlignPatterns(x, y)) {
      EXPECT_EQ(z.size(), x.size() + y.size());
      EXPECT_TRUE(IsSubPattern(x, z));
      EXPECT_TRUE(IsSubPattern(y, z));
      EXPECT_LE(z.length(), x.length() + y.length());
    }
  }
}

TEST(CandidateOrderTest, Keys) {
  MultiSeqDatabase d = MakeDb({"ab", "ba"});
  const Alphabet& al = d.alphabet();
  Pattern p = Pat("{0=a}{0=b}", al);
  Pattern q = Pat("{0=b}{0=a}", al);
  Pattern big = Pat("{0=a,1=b}{0=b}", al);
  EXPECT_TRUE(CandidateBefore({p, 10, 1, 1}, {q, 3, 9, 9}));
  EXPECT_TRUE(CandidateBefore({p, 5, 7, 1}, {q, 5, 2, 9}));
  EXPECT_TRUE(CandidateBefore({big, 5, 2, 1}, {q, 5, 2, 9}));
  EXPECT_TRUE(CandidateBefore({q, 5, 2, 3}, {p, 5, 2, 1}));
  EXPECT_TRUE(CandidateBefore({p, 5, 2, 1}, {q, 5, 2, 1}));
  EXPECT_FALSE(CandidateBefore({q, 5, 2, 1}, {p, 5, 2, 1}));
  EXPECT_FALSE(CandidateBefore({p, 5, 2, 1}, {p, 5, 2, 1}));
}

TEST(EstimateGainTest, DistinctParents) {
  // s = 10, x = 4, y = 2: z = 2, x' = 2, y' = 0, s' = 8.
  const double want = XLog2X(10) - XLog2X(8) + XLog2X(2) - XLog2X(4) +
                      XLog2X(2) - XLog2X(2) + XLog2X(0);
  EXPECT_NEAR(want, 3.219, 1e-3);
  EXPECT_NEAR(EstimateDataGain(10, 4, 2, false), want, 1e-12);
  // Symmetric in the parents.
  EXPECT_NEAR(EstimateDataGain(10, 2, 4, false), want, 1e-12);
}

TEST(EstimateGainTest, SameParentUsesHalf) {
  // x = 4: z = 2, x' = 0, s' = s - 2.
  const double want = XLog2X(20) - XLog2X(18) + XLog2X(2) - XLog2X(4);
  EXPECT_NEAR(EstimateDataGain(20, 4, 4, true), want, 1e-12);
}

TEST(EstimateGainTest, EqualUsages) {
  const double want =
      XLog2X(30) - XLog2X(25) + XLog2X(5) - XLog2X(5) - XLog2X(5);
  EXPECT_NEAR(EstimateDataGain(30, 5, 5, false), want, 1e-12);
}

TEST(EstimateGainTest, ModelTermIsNegativeCost) {
  MultiSeqDatabase d = MakeDb({"ab", "ab", "ba", "bb"});
  StandardTable st(d);
  Pattern z = Pat("{0=a}{1=a}", d.alphabet());
  EXPECT_NEAR(EstimateModelGain(z, st, 2),
              -UniversalIntLength(2) - 2.0 - st.PatternLength(z), 1e-12);
}

TEST(InfrequentCacheTest, SubPatternLookup) {
  MultiSeqDatabase d = MakeDb({"ax", "by", "cx"});
  const Alphabet& al = d.alphabet();
  InfrequentCache cache;
  EXPECT_FALSE(cache.ContainsSubPatternOf(Pat("{0=a}{0=b}", al)));
  cache.Insert(Pat("{0=a}{0=b}", al));
  EXPECT_EQ(cache.size(), 1u);
  EXPECT_TRUE(cache.ContainsSubPatternOf(Pat("{0=a}{0=b}", al)));
  EXPECT_TRUE(cache.ContainsSubPatternOf(Pat("{0=a}{0=c}{0=b}", al)));
  EXPECT_TRUE(cache.ContainsSubPatternOf(Pat("{0=a,1=x}{0=b,1=y}", al)));
  EXPECT_FALSE(cache.ContainsSubPatternOf(Pat("{0=b}{0=a}", al)));
  EXPECT_FALSE(cache.ContainsSubPatternOf(Pat("{0=a,1=x}", al)));
  cache.Insert(Pat("{1=x,0=c}", al));
  EXPECT_TRUE(cache.ContainsSubPatternOf(Pat("{0=a}{0=c,1=x}", al)));
  EXPECT_FALSE(cache.ContainsSubPatternOf(Pat("{0=c}{1=x}", al)));
}

TEST(InfrequentCacheTest, CheckInsert) {
  MultiSeqDatabase d = MakeDb({"a", "b", "c"});
  const Alphabet& al = d.alphabet();
  InfrequentCache cache;
  int calls = 0;
  auto support = [&](const Pattern& p) {
    ++calls;
    return p.length() == 2 ? int64_t{1} : int64_t{5};
  };
  int64_t s = 0;
  EXPECT_FALSE(cache.CheckInsert(Pat("{0=a}{0=b}", al), 2, support, &s));
  EXPECT_EQ(s, 1);
  EXPECT_EQ(calls, 1);
  // Contains a cached pattern: rejected without counting.
  EXPECT_FALSE(cache.CheckInsert(Pat("{0=a}{0=c}{0=b}", al), 2, support, &s));
  EXPECT_EQ(s, -1);
  EXPECT_EQ(calls, 1);
  EXPECT_TRUE(cache.CheckInsert(Pat("{0=c}{0=b}{0=a}", al), 2, support));
  EXPECT_EQ(calls, 2);
  // With sigma = 1 anything that occurs is frequent.
  InfrequentCache fresh;
  EXPECT_TRUE(fresh.CheckInsert(Pat("{0=a}{0=b}", al), 1, support));
  EXPECT_EQ(fresh.size(), 0u);
}

// Twenty copies of a,b,a,b,c,a,c,a, each its own sequence, plus filler
// sequences that make a rare enough for {a}{a} to pay for its gap codes.
MultiSeqDatabase GapExample() {
  std::vector<std::vector<std::string>> seqs(
      20, {"a", "b", "a", "b", "c", "a", "c", "a"});
  for (int i = 0; i < 150; ++i) seqs.push_back({"d", "e", "f", "g"});
  return MakeSeqsDb(seqs);
}

TEST(DittoTest, VariationsFromGapEvents) {
  MultiSeqDatabase d = GapExample();
  const Alphabet& al = d.alphabet();
  Ditto search(d, {});
  Pattern aa = Pat("{0=a}{0=a}", al);
  ASSERT_TRUE(search.TryAdd(aa));
  std::vector<Pattern> got;
  for (const Candidate& c : search.VariationCandidates(aa)) {
    got.push_back(c.pattern);
  }
  std::sort(got.begin(), got.end(), LexLess);
  EXPECT_EQ(got, (std::vector<Pattern>{Pat("{0=a}{0=b}{0=a}", al),
                                       Pat("{0=a}{0=c}{0=a}", al)}));
}

TEST(DittoTest, VariationMergesEventsOnOpenAttributes) {
  // {0=a}{0=b} always has x on attribute 1 at its first step and a
  // gap step with c on attribute 0.
  std::vector<std::vector<std::string>> seqs(20, {"ax", "cy", "by"});
  MultiSeqDatabase d = MakeSeqsDb(seqs);
  const Alphabet& al = d.alphabet();
  Ditto search(d, {});
  Pattern ab = Pat("{0=a}{0=b}", al);
  ASSERT_TRUE(search.TryAdd(ab));
  std::vector<Pattern> got;
  for (const Candidate& c : search.VariationCandidates(ab)) {
    got.push_back(c.pattern);
  }
  std::sort(got.begin(), got.end(), LexLess);
  std::vector<Pattern> want{
      Pat("{0=a,1=x}{0=b}", al), Pat("{0=a}{0=b,1=y}", al),
      Pat("{0=a}{0=c}{0=b}", al), Pat("{0=a}{1=y}{0=b}", al)};
  std::sort(want.begin(), want.end(), LexLess);
  EXPECT_EQ(got, want);
}

TEST(DittoTest, NoVariationsWithoutGapsOrOpenAttributes) {
  std::vector<std::vector<std::string>> seqs(20, {"a", "b"});
  MultiSeqDatabase d = MakeSeqsDb(seqs);
  Ditto search(d, {});
  Pattern ab = Pat("{0=a}{0=b}", d.alphabet());
  ASSERT_TRUE(search.TryAdd(ab));
  EXPECT_TRUE(search.VariationCandidates(ab).empty());
}

TEST(DittoTest, RepeatedMultiEventGivesOnePattern) {
  std::vector<std::string> rows(50, "ab");
  MultiSeqDatabase d = MakeDb(rows);
  CodeTable ct = MineCodeTable(d, {});
  EXPECT_EQ(ct.NonSingletons(),
            (std::vector<Pattern>{Pat("{0=a,1=b}", d.alphabet())}));
}

TEST(DittoTest, PruneDropsSubsumedPattern) {
  std::vector<std::vector<std::string>> seqs(30, {"a", "b", "c"});
  MultiSeqDatabase d = MakeSeqsDb(seqs);
  const Alphabet& al = d.alphabet();
  Ditto search(d, {});
  Pattern ab = Pat("{0=a}{0=b}", al);
  Pattern abc = Pat("{0=a}{0=b}{0=c}", al);
  ASSERT_TRUE(search.TryAdd(ab));
  const std::vector<Pattern> before_table = search.patterns();
  const TableUsage before = search.usage();
  ASSERT_TRUE(search.TryAdd(abc));
  search.Prune(abc, before_table, before);
  EXPECT_EQ(search.patterns(), (std::vector<Pattern>{abc}));
  EXPECT_EQ(search.stats().removals, 1u);
}

TEST(DittoTest, PruneKeepsPatternWithOwnUsage) {
  std::vector<std::vector<std::string>> seqs(30, {"a", "b", "c"});
  for (int i = 0; i < 30; ++i) seqs.push_back({"a", "b", "d"});
  MultiSeqDatabase d = MakeSeqsDb(seqs);
  const Alphabet& al = d.alphabet();
  Ditto search(d, {});
  Pattern ab = Pat("{0=a}{0=b}", al);
  Pattern abc = Pat("{0=a}{0=b}{0=c}", al);
  ASSERT_TRUE(search.TryAdd(ab));
  const std::vector<Pattern> before_table = search.patterns();
  const TableUsage before = search.usage();
  ASSERT_TRUE(search.TryAdd(abc));
  search.Prune(abc, before_table, before);
  EXPECT_EQ(search.patterns(), (std::vector<Pattern>{abc, ab}));
}

TEST(DittoTest, PruneWithoutPatternsIsNoOp) {
  MultiSeqDatabase d = MakeDb({"a", "b"});
  Ditto search(d, {});
  const double bits = search.total_bits();
  search.Prune(Pat("{0=a}{0=b}", d.alphabet()), {}, search.usage());
  EXPECT_TRUE(search.patterns().empty());
  EXPECT_EQ(search.total_bits(), bits);
}

TEST(DittoTest, TryAddRejectsNonCompressingPattern) {
  MultiSeqDatabase d = GapExample();
  Ditto search(d, {});
  const double bits = search.total_bits();
  EXPECT_FALSE(search.TryAdd(Pat("{0=c}{0=b}", d.alphabet())));
  EXPECT_EQ(search.total_bits(), bits);
  EXPECT_FALSE(search.TryAdd(Pat("{0=a}", d.alphabet())));
}

// Noise with a planted three-step bivariate pattern.
MultiSeqDatabase PlantedDb(uint64_t seed) {
  std::mt19937_64 rng(seed);
  MultiSeqDatabase noise = testing::RandomDb(rng, {400, 300}, 2, 6);
  std::vector<MultiSeq> seqs;
  for (const MultiSeq& s : noise.sequences()) {
    std::vector<Symbol> cells(s.cells().begin(), s.cells().end());
    for (size_t t = 0; t + 3 <= s.length(); t += 12) {
      cells[2 * t] = 0;
      cells[2 * t + 1] = 1;
      cells[2 * (t + 1)] = 2;
      cells[2 * (t + 2) + 1] = 3;
    }
    seqs.emplace_back(2, std::move(cells));
  }
  return MultiSeqDatabase(noise.alphabet(), std::move(seqs));
}

TEST(DittoTest, FindsPlantedPatternAndDecreasesMonotonically) {
  MultiSeqDatabase d = PlantedDb(4);
  DittoOptions options;
  options.min_support = 20;
  size_t hook_calls = 0;
  options.on_accept = [&](const Progress& p) {
    ++hook_calls;
    EXPECT_GT(p.gain_bits, 0);
  };
  Ditto search(d, options);
  CodeTable ct = search.Run();
  const std::vector<double>& h = search.stats().size_history;
  for (size_t i = 1; i < h.size(); ++i) EXPECT_LT(h[i], h[i - 1]);
  EXPECT_EQ(hook_calls, search.stats().acceptances);
  const Pattern planted({MultiEvent({{0, 0}, {1, 1}}), MultiEvent({{0, 2}}),
                         MultiEvent({{1, 3}})});
  const std::vector<Pattern> found = ct.NonSingletons();
  EXPECT_NE(std::find(found.begin(), found.end(), planted), found.end());
  EXPECT_LT(ct.size.total(), TotalLength(d, {}).total());
  for (const Pattern& p : found) {
    EXPECT_GE(search.SupportOf(p), options.min_support);
  }
}

TEST(DittoTest, ResultDoesNotDependOnThreads) {
  MultiSeqDatabase d = PlantedDb(9);
  DittoOptions one;
  one.min_support = 10;
  DittoOptions four = one;
  four.threads = 4;
  CodeTable a = MineCodeTable(d, one);
  CodeTable b = MineCodeTable(d, four);
  EXPECT_EQ(a.NonSingletons(), b.NonSingletons());
  EXPECT_EQ(a.size.total(), b.size.total());
}

TEST(DittoTest, NoiseGivesSingletonTable) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 3; ++trial) {
    MultiSeqDatabase d = testing::RandomDb(rng, {300}, 2, 12);
    CodeTable ct = MineCodeTable(d, {});
    EXPECT_EQ(ct.num_non_singletons(), 0u) << trial;
  }
}

}  // namespace
}  // namespace ditto

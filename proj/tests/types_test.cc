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

#include "ditto/types.h"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "gtest/gtest.h"
#include "test_util.h"

namespace ditto {
namespace {

using testing::MakeDb;
using testing::Pat;

TEST(MultiEventTest, SortsByAttribute) {
  MultiEvent m({{2, 0}, {0, 5}, {1, 1}});
  ASSERT_EQ(m.size(), 3u);
  EXPECT_EQ(m.events()[0].attribute, 0u);
  EXPECT_EQ(m.events()[2].attribute, 2u);
  EXPECT_TRUE(m.Defines(1));
  EXPECT_FALSE(m.Defines(3));
}

TEST(MultiEventTest, RejectsRepeatedAttribute) {
  EXPECT_THROW(MultiEvent({{0, 1}, {0, 2}}), std::invalid_argument);
}

TEST(MultiEventTest, Subset) {
  MultiEvent big({{0, 1}, {1, 2}, {2, 3}});
  EXPECT_TRUE(MultiEvent({{1, 2}}).IsSubsetOf(big));
  EXPECT_TRUE(MultiEvent({{0, 1}, {2, 3}}).IsSubsetOf(big));
  EXPECT_FALSE(MultiEvent({{1, 3}}).IsSubsetOf(big));
  EXPECT_FALSE(big.IsSubsetOf(MultiEvent({{0, 1}})));
}

TEST(PatternTest, StatsOfThreeStepPattern) {
  // Three steps, four values: one step defines two attributes.
  Pattern p({MultiEvent({{0, 0}}), MultiEvent({{0, 1}, {1, 0}}),
             MultiEvent({{1, 1}})});
  EXPECT_EQ(p.length(), 3u);
  EXPECT_EQ(p.size(), 4u);
  EXPECT_FALSE(p.is_singleton());
}

TEST(PatternTest, SingletonStats) {
  Pattern p = Pattern::Singleton({0, 3});
  EXPECT_EQ(p.length(), 1u);
  EXPECT_EQ(p.size(), 1u);
  EXPECT_TRUE(p.is_singleton());
}

TEST(PatternTest, FullBivariateTwoSteps) {
  Pattern p({MultiEvent({{0, 0}, {1, 0}}), MultiEvent({{0, 1}, {1, 1}})});
  EXPECT_EQ(p.length(), 2u);
  EXPECT_EQ(p.size(), 4u);
}

TEST(PatternTest, RejectsEmptyInput) {
  EXPECT_THROW(Pattern(std::vector<MultiEvent>{}), std::invalid_argument);
  EXPECT_THROW(Pattern({MultiEvent({{0, 0}}), MultiEvent()}),
               std::invalid_argument);
}

TEST(PatternTest, StructuralEquality) {
  Pattern a({MultiEvent({{1, 2}, {0, 1}})});
  Pattern b({MultiEvent({{0, 1}, {1, 2}})});
  EXPECT_EQ(a, b);
  EXPECT_EQ(PatternHash()(a), PatternHash()(b));
  EXPECT_FALSE(a == Pattern({MultiEvent({{0, 1}}), MultiEvent({{1, 2}})}));
}

TEST(LexCompareTest, StepCountComparedLast) {
  Pattern a({MultiEvent({{0, 1}})});
  Pattern b({MultiEvent({{0, 1}}), MultiEvent({{0, 0}})});
  Pattern c({MultiEvent({{0, 2}})});
  EXPECT_TRUE(LexLess(a, b));  // prefix
  EXPECT_TRUE(LexLess(b, c));  // first step decides before length
  EXPECT_FALSE(LexLess(a, a));
}

TEST(LexCompareTest, AttributeBeforeSymbol) {
  Pattern a({MultiEvent({{0, 9}})});
  Pattern b({MultiEvent({{1, 0}})});
  EXPECT_TRUE(LexLess(a, b));
}

TEST(LexCompareTest, IsTotalAndConsistent) {
  std::mt19937_64 rng(7);
  std::vector<Pattern> ps;
  for (int i = 0; i < 200; ++i) ps.push_back(testing::RandomPattern(rng, 3, 2, 3));
  for (const Pattern& a : ps) {
    for (const Pattern& b : ps) {
      const bool ab = LexLess(a, b);
      const bool ba = LexLess(b, a);
      EXPECT_FALSE(ab && ba);
      EXPECT_EQ(!ab && !ba, a == b);
    }
  }
}

TEST(IsSubPatternTest, Embedding) {
  MultiSeqDatabase d = MakeDb({"ab", "cd", "ef"});
  const Alphabet& al = d.alphabet();
  Pattern planted = Pat("{0=a,1=b}{0=c}{1=d}{0=e}", al);
  EXPECT_TRUE(IsSubPattern(Pat("{0=a}{0=c}", al), planted));
  EXPECT_TRUE(IsSubPattern(Pat("{1=b}{0=e}", al), planted));
  EXPECT_TRUE(IsSubPattern(planted, planted));
  EXPECT_FALSE(IsSubPattern(Pat("{0=c}{0=a}", al), planted));
  EXPECT_FALSE(IsSubPattern(Pat("{0=c,1=d}", al), planted));
}

TEST(AlphabetTest, InternAndFind) {
  Alphabet al(2);
  EXPECT_EQ(al.Intern(0, "x"), 0u);
  EXPECT_EQ(al.Intern(0, "y"), 1u);
  EXPECT_EQ(al.Intern(0, "x"), 0u);
  EXPECT_EQ(al.Intern(1, "x"), 0u);
  EXPECT_EQ(al.Find(0, "y"), 1);
  EXPECT_EQ(al.Find(1, "y"), -1);
  EXPECT_EQ(al.num_events(), 3u);
  EXPECT_EQ(al.EventId({1, 0}), 2u);
  EXPECT_EQ(al.EventAt(2), (Event{1, 0}));
}

TEST(DatabaseTest, DerivedSizes) {
  MultiSeqDatabase d = testing::MakeSeqsDb({{"ab", "cd", "ab"}, {"ca"}});
  EXPECT_EQ(d.num_sequences(), 2u);
  EXPECT_EQ(d.num_attributes(), 2u);
  EXPECT_EQ(d.total_length(), 4u);
  EXPECT_EQ(d.total_size(), 8u);
  EXPECT_EQ(d.sequence_offset(1), 3u);
  EXPECT_EQ(d.sequence(0).at(1, 1), d.alphabet().Find(1, "d"));
}

TEST(DatabaseTest, RejectsSymbolOutsideAlphabet) {
  std::vector<size_t> sizes{2};
  std::vector<MultiSeq> seqs;
  seqs.emplace_back(1, std::vector<Symbol>{0, 5});
  EXPECT_THROW(MultiSeqDatabase(Alphabet::Numeric(sizes), std::move(seqs)),
               std::invalid_argument);
}

TEST(OccurrenceTest, GapPositions) {
  Occurrence o{0, 2, 6, {2, 4, 6}};
  EXPECT_EQ(o.window_length(), 5u);
  EXPECT_EQ(o.num_gaps(), 2u);
  EXPECT_EQ(o.GapPositions(), (std::vector<size_t>{3, 5}));
}

}  // namespace
}  // namespace ditto

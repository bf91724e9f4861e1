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
#include <random>
#include <stdexcept>
#include <vector>

#include "ditto/cover.h"
#include "ditto/encoding.h"
#include "ditto/standard_table.h"
#include "ditto/windows.h"
#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "test_util.h"

namespace ditto {
namespace {

using testing::MakeDb;
using testing::Pat;

TEST(EvaluateTableTest, AgreesWithStreamEncoding) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    MultiSeqDatabase d = testing::RandomDb(rng, {30, 20}, 2, 3);
    EventIndex index(d);
    StandardTable st(d);
    std::vector<Pattern> ps;
    for (int i = 0; i < 3; ++i) {
      Pattern p = testing::RandomPattern(rng, 3, 2, 3);
      if (!p.is_singleton() && std::find(ps.begin(), ps.end(), p) == ps.end()) {
        ps.push_back(p);
      }
    }
    const std::vector<Pattern> ordered = CoverOrder(ps, index, st);
    const TableUsage usage = EvaluateTable(index, st, ordered);
    const EncodedSize streams = TotalLength(d, ps);
    EXPECT_NEAR(usage.size.model_bits, streams.model_bits, 1e-9);
    EXPECT_NEAR(usage.size.data_bits, streams.data_bits, 1e-9);
    int64_t cells = 0;
    for (size_t i = 0; i < ordered.size(); ++i) {
      cells += usage.patterns[i].usage * int64_t(ordered[i].size());
    }
    for (int64_t u : usage.singletons) cells += u;
    EXPECT_EQ(cells, int64_t(d.total_size()));
  }
}

TEST(BuildCodeTableTest, EntriesInCoverOrderWithCodeLengths) {
  MultiSeqDatabase d = MakeDb({"ad", "cf", "ae", "bd", "ae"});
  const Alphabet& al = d.alphabet();
  Pattern x = Pat("{0=c,1=f}{0=b}", al);
  Pattern y = Pat("{1=d}{1=e}", al);
  CodeTable ct = BuildCodeTable(d, std::vector<Pattern>{y, x});
  ASSERT_EQ(ct.entries.size(), 2 + al.num_events());
  EXPECT_EQ(ct.entries[0].pattern, x);
  EXPECT_EQ(ct.entries[1].pattern, y);
  EXPECT_EQ(ct.NonSingletons(), (std::vector<Pattern>{x, y}));
  EXPECT_EQ(ct.num_non_singletons(), 2u);
  // Usages X 1, Y 2, a 3 out of 6 codes.
  EXPECT_NEAR(ct.entries[0].code_bits, std::log2(6.0), 1e-12);
  EXPECT_NEAR(ct.entries[1].code_bits, std::log2(3.0), 1e-12);
  EXPECT_NEAR(ct.entries[1].gap_bits, std::log2(3.0), 1e-12);
  EXPECT_EQ(ct.entries[1].usage, (PatternUsage{2, 1, 2}));
  EXPECT_EQ(ct.entries[1].support, 2);
  for (size_t i = 2; i < ct.entries.size(); ++i) {
    const CodeTableEntry& e = ct.entries[i];
    EXPECT_TRUE(e.pattern.is_singleton());
    if (e.usage.usage == 0) {
      EXPECT_TRUE(std::isinf(e.code_bits));
    }
  }
  EXPECT_NEAR(ct.size.total(), TotalLength(d, std::vector<Pattern>{x, y}).total(),
              1e-9);
}

TEST(CodeTableJsonTest, RoundTrip) {
  MultiSeqDatabase d = MakeDb({"ad", "cf", "ae", "bd", "ae"});
  const Alphabet& al = d.alphabet();
  std::vector<Pattern> ps{Pat("{0=c,1=f}{0=b}", al), Pat("{1=d}{1=e}", al)};
  CodeTable ct = BuildCodeTable(d, ps);
  const std::string text = CodeTableToJson(ct, al);
  EXPECT_EQ(PatternsFromJson(text, al), ps);
  nlohmann::json j = nlohmann::json::parse(text);
  EXPECT_FALSE(j.dump().empty());
  for (const Pattern& p : ps) {
    EXPECT_EQ(PatternFromJson(PatternToJson(p, al), al), p);
  }
}

TEST(CodeTableJsonTest, RejectsBadInput) {
  MultiSeqDatabase d = MakeDb({"ab"});
  const Alphabet& al = d.alphabet();
  EXPECT_THROW(PatternsFromJson("not json", al), std::runtime_error);
  EXPECT_THROW(PatternsFromJson("{}", al), std::runtime_error);
  nlohmann::json unknown = PatternToJson(Pat("{0=a}{1=b}", al), al);
  unknown[0][0]["symbol"] = "zzz";
  EXPECT_THROW(PatternFromJson(unknown, al), std::runtime_error);
}

}  // namespace
}  // namespace ditto

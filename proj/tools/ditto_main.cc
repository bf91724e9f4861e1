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

// Command-line front end: mine, generate, evaluate, discretize.
//
// Exit codes: 0 ok, 1 usage, 2 I/O or parse error, 3 infeasible generator
// spec.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "ditto/code_table.h"
#include "ditto/encoding.h"
#include "ditto/evaluation.h"
#include "ditto/io.h"
#include "ditto/preprocess.h"
#include "ditto/search.h"
#include "ditto/synthetic.h"
#include "json.hpp"

namespace {

using namespace ditto;

constexpr int kUsage = 1;
constexpr int kIoError = 2;
constexpr int kInfeasible = 3;

struct MineConfig {
  std::string input;
  std::string output;
  int64_t min_support = 1;
  int threads = 1;
  bool cache_rejected = false;
  bool all_windows = false;
  bool verbose = false;
};

struct GenerateConfig {
  std::string config;
  std::string output;
  std::string truth;
  uint64_t seed = 1;
};

struct EvaluateConfig {
  std::string input;
  std::string code_table;
  std::string truth;
  std::string name = "run";
  std::string format = "text";
  std::string output;
};

struct DiscretizeConfig {
  std::string input;
  std::string output;
  size_t subsample = 1;
  bool relative = false;
  size_t bins = 5;
  bool znormalize = false;
};

int CmdMine(const MineConfig& c) {
  const MultiSeqDatabase d = ReadDatabaseFile(c.input);
  DittoOptions options;
  options.min_support = c.min_support;
  options.threads = c.threads;
  options.cache_rejected = c.cache_rejected;
  options.gap_bounded_support = !c.all_windows;
  if (c.verbose) {
    options.on_accept = [&d](const Progress& p) {
      std::cerr << fmt::format("[{:8.2f}s] +{} ({:.2f} bits, total {:.2f}, "
                               "{} patterns)\n",
                               p.elapsed_seconds,
                               ToString(p.pattern, &d.alphabet()), p.gain_bits,
                               p.total_bits, p.table_size);
    };
  }
  const auto start = std::chrono::steady_clock::now();
  const CodeTable ct = MineCodeTable(d, options);
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  const double base = TotalLength(d, {}).total();

  nlohmann::json j = nlohmann::json::parse(CodeTableToJson(ct, d.alphabet()));
  j["min_support"] = c.min_support;
  j["runtime_seconds"] = std::round(seconds * 1e3) / 1e3;
  WriteTextFile(c.output, j.dump(2) + "\n");

  std::cout << fmt::format(
      "patterns: {}\nencoded bits: {:.2f} (singletons only: {:.2f})\n"
      "compression gain: {:.2f}%\nruntime: {:.2f}s\n",
      ct.num_non_singletons(), ct.size.total(), base,
      100.0 * (1.0 - ct.size.total() / base), seconds);
  return 0;
}

int CmdGenerate(const GenerateConfig& c) {
  std::ifstream in(c.config);
  if (!in) throw ParseError("cannot open " + c.config);
  const PlantSpec spec = ParsePlantSpec(in);
  const SyntheticData data = GenerateSynthetic(spec, c.seed);
  WriteDatabaseFile(c.output, data.database);
  if (!c.truth.empty()) {
    WriteTextFile(c.truth,
                  GroundTruthToJson(data.truth, data.database.alphabet()));
  }
  std::cout << fmt::format(
      "wrote {} steps x {} attributes, {} planted patterns, {} occurrences\n",
      data.database.total_length(), data.database.num_attributes(),
      data.truth.patterns.size(), data.truth.occurrences.size());
  return 0;
}

int CmdEvaluate(const EvaluateConfig& c) {
  const MultiSeqDatabase d = ReadDatabaseFile(c.input);
  const std::string ct_text = ReadTextFile(c.code_table);
  const std::vector<Pattern> discovered =
      PatternsFromJson(ct_text, d.alphabet());
  GroundTruth truth;
  if (!c.truth.empty()) {
    truth = GroundTruthFromJson(ReadTextFile(c.truth), d.alphabet());
  }
  RecoveryReport r = Evaluate(d, discovered, truth);
  r.name = c.name;
  const nlohmann::json j = nlohmann::json::parse(ct_text);
  if (j.contains("runtime_seconds")) {
    r.runtime_seconds = j["runtime_seconds"].get<double>();
  }
  const std::vector<RecoveryReport> rows{r};
  const std::string text =
      c.format == "tsv" ? ReportTsv(rows) : ReportText(rows);
  if (c.output.empty()) {
    std::cout << text;
  } else {
    WriteTextFile(c.output, text);
  }
  return 0;
}

int CmdDiscretize(const DiscretizeConfig& c) {
  const RawSeries raw = ReadCsvFile(c.input);
  DiscretizeOptions o;
  o.subsample = c.subsample;
  o.relative = c.relative;
  o.bins = c.bins;
  o.znormalize = c.znormalize;
  const MultiSeqDatabase d = Discretize(raw, o);
  if (d.total_length() == 0) {
    throw ParseError("no data left after preprocessing " + c.input);
  }
  WriteDatabaseFile(c.output, d);
  std::cout << fmt::format("wrote {} steps x {} attributes\n",
                           d.total_length(), d.num_attributes());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mines multivariate sequential patterns by compression."};
  app.require_subcommand(1);

  MineConfig mine;
  CLI::App* mine_cmd = app.add_subcommand("mine", "Mine a code table");
  mine_cmd->add_option("input", mine.input, "Database TSV")->required();
  mine_cmd->add_option("-o,--output", mine.output, "Code table JSON")
      ->required();
  mine_cmd->add_option("--min-support", mine.min_support,
                       "Minimum support of candidates")
      ->check(CLI::Range(int64_t{1}, INT64_MAX));
  mine_cmd->add_option("--threads", mine.threads, "Support counting threads")
      ->check(CLI::Range(1, 256));
  mine_cmd->add_flag("--cache-rejected", mine.cache_rejected,
                     "Never retry rejected candidates");
  mine_cmd->add_flag("--all-windows", mine.all_windows,
                     "Count support over all minimal windows, ignoring "
                     "the gap bound");
  mine_cmd->add_flag("-v,--verbose", mine.verbose, "Log every acceptance");

  GenerateConfig gen;
  CLI::App* gen_cmd =
      app.add_subcommand("generate", "Generate a synthetic database");
  gen_cmd->add_option("--config", gen.config, "Generator key=value file")
      ->required();
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("-o,--output", gen.output, "Database TSV")->required();
  gen_cmd->add_option("--truth", gen.truth, "Ground truth JSON");

  EvaluateConfig eval;
  CLI::App* eval_cmd =
      app.add_subcommand("evaluate", "Score a code table against the truth");
  eval_cmd->add_option("input", eval.input, "Database TSV")->required();
  eval_cmd->add_option("--code-table", eval.code_table, "Code table JSON")
      ->required();
  eval_cmd->add_option("--truth", eval.truth, "Ground truth JSON");
  eval_cmd->add_option("--name", eval.name, "Row label");
  eval_cmd->add_option("--format", eval.format, "text or tsv")
      ->check(CLI::IsMember({"text", "tsv"}));
  eval_cmd->add_option("-o,--output", eval.output, "Report file");

  DiscretizeConfig disc;
  CLI::App* disc_cmd = app.add_subcommand(
      "discretize", "Turn real-valued CSV columns into a database");
  disc_cmd->add_option("input", disc.input, "CSV file")->required();
  disc_cmd->add_option("-o,--output", disc.output, "Database TSV")
      ->required();
  disc_cmd->add_option("--subsample", disc.subsample,
                       "Average blocks of this many values")
      ->check(CLI::Range(size_t{1}, SIZE_MAX));
  disc_cmd->add_flag("--relative", disc.relative,
                     "Use differences of consecutive values");
  disc_cmd->add_option("--bins", disc.bins, "Number of symbols")
      ->check(CLI::Range(size_t{2}, size_t{1000}));
  disc_cmd->add_flag("--z-normalize", disc.znormalize,
                     "Z-normalise each column first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*mine_cmd) return CmdMine(mine);
    if (*gen_cmd) return CmdGenerate(gen);
    if (*eval_cmd) return CmdEvaluate(eval);
    if (*disc_cmd) return CmdDiscretize(disc);
  } catch (const InfeasibleSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  }
  return kUsage;
}

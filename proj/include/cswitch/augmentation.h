// Copyright 2026 The cswitch Authors
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

#ifndef CSWITCH_AUGMENTATION_H_
#define CSWITCH_AUGMENTATION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cswitch/alignment.h"
#include "cswitch/corpus.h"
#include "cswitch/lexicon.h"
#include "json.hpp"

namespace cswitch {

enum class Strategy { kCs1, kCs2, kCs3, kCs4, kCs5 };

std::string_view strategy_name(Strategy s);
Strategy parse_strategy(std::string_view name);

// How cs3 draws its replacement. kRandomForm samples one of the entry's
// Russian forms; kCs1OrCs2 picks the cs1 or the cs2 replacement at random.
enum class Cs3Mode { kRandomForm, kCs1OrCs2 };

struct AugmentConfig {
  Strategy strategy = Strategy::kCs1;
  double rate = 0.15;
  int short_len = 7;
  int short_count = 1;
  std::uint64_t seed = 0;
  SymmetrizeHeuristic heuristic = SymmetrizeHeuristic::kGrowDiagFinalAnd;
  SimMethod sim_method = SimMethod::kItermax;
  int sim_iterations = 2;
  Cs3Mode cs3_mode = Cs3Mode::kRandomForm;
  // Capitalize a replacement when the replaced token starts upper-case.
  bool inherit_case = false;

  void validate() const;
};

// Read-only inputs a strategy draws on. Per-pair vectors are indexed by
// pair id.
struct AugmentResources {
  const Lexicon* lexicon = nullptr;
  // cs4: either precomputed symmetrized alignments or a pair of tables.
  const std::vector<AlignmentLinkSet>* alignments = nullptr;
  const TranslationTable* forward_table = nullptr;
  const TranslationTable* backward_table = nullptr;
  // cs5
  const std::vector<SimilarityMatrix>* similarities = nullptr;
};

// One replaced source span and the tokens that go in its place.
struct Replacement {
  IndexSpan span;
  std::vector<std::string> tokens;

  bool operator==(const Replacement&) const = default;
};

struct AugmentPlan {
  std::uint64_t pair_id = 0;
  Strategy strategy = Strategy::kCs1;
  std::vector<std::size_t> positions;     // sorted source indices
  std::vector<Replacement> replacements;  // sorted, non-overlapping

  bool empty() const { return replacements.empty(); }
  bool operator==(const AugmentPlan&) const = default;
};

nlohmann::json to_json(const AugmentPlan& plan);

struct AugmentedPair {
  SentencePair original;
  Sentence augmented_source;
  AugmentPlan plan;
};

// short_count below short_len tokens, otherwise floor(rate * n).
std::size_t replacement_count(std::size_t n_tokens, const AugmentConfig& config);

// Source token indices a strategy may touch.
std::vector<std::size_t> eligible_positions(const SentencePair& pair, const AugmentConfig& config,
                                            const AugmentResources& resources);

// Samples positions with Rng(seed, pair.id) and resolves every payload, so
// apply() is a pure splice. For cs4/cs5 a sampled token pulls in its whole
// aligned unit.
AugmentPlan plan(const SentencePair& pair, const AugmentConfig& config,
                 const AugmentResources& resources);

AugmentedPair apply(const SentencePair& pair, const AugmentPlan& plan);

struct SkipRecord {
  std::uint64_t pair_id = 0;
  std::string error;
};

struct AugmentReport {
  Strategy strategy = Strategy::kCs1;
  std::uint64_t pairs = 0;
  std::uint64_t augmented_pairs = 0;
  std::uint64_t passthrough_pairs = 0;  // no eligible position
  std::uint64_t source_tokens = 0;
  std::uint64_t replaced_tokens = 0;    // original source tokens replaced
  std::uint64_t inserted_tokens = 0;
  std::vector<SkipRecord> skipped;

  double replaced_fraction() const;
  double coverage() const;
};

nlohmann::json to_json(const AugmentReport& report);

struct AugmentOutput {
  std::vector<AugmentedPair> pairs;  // input order; skipped pairs unchanged
  AugmentReport report;

  Corpus corpus() const;
};

// Pairs are independent; per-pair failures become skip records and the pair
// passes through unchanged. Output does not depend on `jobs`.
AugmentOutput augment_corpus(const Corpus& corpus, const AugmentConfig& config,
                             const AugmentResources& resources, int jobs = 1);

}  // namespace cswitch

#endif  // CSWITCH_AUGMENTATION_H_

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

#ifndef CSWITCH_ALIGNMENT_H_
#define CSWITCH_ALIGNMENT_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cswitch/corpus.h"

namespace cswitch {

// Sorted, duplicate-free link list over a src_len x tgt_len grid.
class AlignmentLinkSet {
 public:
  using Link = std::pair<std::size_t, std::size_t>;

  AlignmentLinkSet() = default;
  AlignmentLinkSet(std::size_t src_len, std::size_t tgt_len);
  // Raises DimensionMismatch for out-of-range links; duplicates collapse.
  AlignmentLinkSet(std::size_t src_len, std::size_t tgt_len, std::vector<Link> links);

  void add(std::size_t i, std::size_t j);
  bool contains(std::size_t i, std::size_t j) const;
  AlignmentLinkSet transposed() const;

  std::size_t src_len() const { return src_len_; }
  std::size_t tgt_len() const { return tgt_len_; }
  const std::vector<Link>& links() const { return links_; }
  std::size_t size() const { return links_.size(); }
  bool empty() const { return links_.empty(); }

  bool operator==(const AlignmentLinkSet&) const = default;

 private:
  std::size_t src_len_ = 0;
  std::size_t tgt_len_ = 0;
  std::vector<Link> links_;
};

// Pharaoh format: space-separated "i-j" pairs.
std::string to_pharaoh(const AlignmentLinkSet& links);
AlignmentLinkSet parse_pharaoh(std::string_view line, std::size_t src_len,
                               std::size_t tgt_len);

// Lexical translation probabilities t(target | source) with a NULL source.
class TranslationTable {
 public:
  static constexpr std::uint32_t kNull = 0;
  static constexpr std::string_view kNullToken = "<NULL>";

  TranslationTable();

  std::uint32_t source_id(std::string_view word) const;  // kUnknown if absent
  std::uint32_t target_id(std::string_view word) const;
  std::uint32_t add_source(std::string_view word);
  std::uint32_t add_target(std::string_view word);

  // t(target | source); 0 when the pair never co-occurred.
  double prob(std::uint32_t source, std::uint32_t target) const;
  void set(std::uint32_t source, std::uint32_t target, double p);

  // Probability used for decoding: out-of-vocabulary words on either side
  // get 1 / |V_target|.
  double score(std::string_view source, std::string_view target) const;
  double null_score(std::string_view target) const;

  std::size_t source_vocab_size() const { return source_words_.size(); }
  std::size_t target_vocab_size() const { return target_words_.size(); }
  const std::string& source_word(std::uint32_t id) const { return source_words_[id]; }
  const std::string& target_word(std::uint32_t id) const { return target_words_[id]; }

  // Sum of t(. | source) over stored targets.
  double row_sum(std::uint32_t source) const;
  const std::unordered_map<std::uint64_t, double>& entries() const { return probs_; }

  int trained_iterations = 0;
  // fast_align style diagonal tension; 0 means plain Model 1.
  double diag_weight = 0.0;
  double null_prob = 0.08;

  static constexpr std::uint32_t kUnknown = 0xFFFFFFFFu;
  static std::uint64_t key(std::uint32_t s, std::uint32_t t) {
    return (static_cast<std::uint64_t>(s) << 32) | t;
  }

 private:
  std::vector<std::string> source_words_;
  std::vector<std::string> target_words_;
  std::unordered_map<std::string, std::uint32_t> source_index_;
  std::unordered_map<std::string, std::uint32_t> target_index_;
  std::unordered_map<std::uint64_t, double> probs_;
};

// TSV rows "source<TAB>target<TAB>prob", sorted by source then target.
// A header comment records iterations and diagonal settings.
std::string serialize_table(const TranslationTable& table);
TranslationTable parse_table(std::string_view tsv);
void save_table(const TranslationTable& table, const std::filesystem::path& path);
TranslationTable load_table(const std::filesystem::path& path);

enum class Direction { kForward, kReverse };

struct TrainOptions {
  int iterations = 5;
  double diag_weight = 0.0;
  double null_prob = 0.08;
  Direction direction = Direction::kForward;
  int jobs = 1;
};

struct TrainResult {
  TranslationTable table;
  // Corpus log-likelihood under the parameters entering each iteration.
  std::vector<double> log_likelihood;
};

// EM for IBM Model 1 (uniform alignment prior) or, when diag_weight > 0,
// the diagonal-favoring reparameterization with a fixed tension. Kazakh is
// the conditioning side for kForward, Russian for kReverse.
TrainResult train_ibm1(const Corpus& corpus, const TrainOptions& options);

// Each target word links to its best source word; NULL wins only when
// strictly better than every real word, and ties go to the lowest index.
// kReverse decodes Russian->Kazakh and returns links indexed (ru, kk).
AlignmentLinkSet viterbi_align(const SentencePair& pair, const TranslationTable& table,
                               Direction direction);

enum class SymmetrizeHeuristic { kIntersection, kUnion, kGrowDiagFinalAnd };

std::string_view heuristic_name(SymmetrizeHeuristic h);
SymmetrizeHeuristic parse_heuristic(std::string_view name);

// `backward` is indexed (tgt, src) and is transposed before combining.
AlignmentLinkSet symmetrize(const AlignmentLinkSet& forward, const AlignmentLinkSet& backward,
                            SymmetrizeHeuristic heuristic);

// Row-major cross-lingual similarity scores, one row per source token.
struct SimilarityMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  double at(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
  bool operator==(const SimilarityMatrix&) const = default;
};

enum class SimMethod { kArgmax, kItermax };

std::string_view sim_method_name(SimMethod m);
SimMethod parse_sim_method(std::string_view name);

AlignmentLinkSet sim_align(const SimilarityMatrix& matrix, SimMethod method,
                           int iterations = 2);

// Closed index interval [first, last].
struct IndexSpan {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t size() const { return last - first + 1; }
  bool contains(std::size_t i) const { return i >= first && i <= last; }
  auto operator<=>(const IndexSpan&) const = default;
};

struct MinimalAlignedUnit {
  IndexSpan src;
  IndexSpan tgt;
  auto operator<=>(const MinimalAlignedUnit&) const = default;
};

struct MauExtraction {
  std::vector<MinimalAlignedUnit> units;  // ordered by source span
  // Link components that no emitted unit covers.
  std::size_t discarded_components = 0;
};

// Smallest contiguous phrase pairs that are consistent with the links and
// whose every word is aligned inside the pair.
MauExtraction extract_mau(const AlignmentLinkSet& alignment);
MauExtraction extract_mau(const SentencePair& pair, const AlignmentLinkSet& alignment);

}  // namespace cswitch

#endif  // CSWITCH_ALIGNMENT_H_

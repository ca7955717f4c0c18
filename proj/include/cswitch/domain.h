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

#ifndef CSWITCH_DOMAIN_H_
#define CSWITCH_DOMAIN_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cswitch/alignment.h"
#include "cswitch/corpus.h"
#include "cswitch/metrics.h"
#include "json.hpp"

namespace cswitch {

// Sentence embeddings for one dataset. File format: a header line
// "<count> <dim>" followed by `count` rows of `dim` whitespace-separated
// decimals.
struct EmbeddingSet {
  std::string dataset_name;
  std::size_t dim = 0;
  std::vector<std::vector<double>> vectors;
};

EmbeddingSet parse_embeddings(std::string_view text, std::string dataset_name = {});
EmbeddingSet load_embeddings(const std::filesystem::path& path);
std::string serialize_embeddings(const EmbeddingSet& set);
void save_embeddings(const EmbeddingSet& set, const std::filesystem::path& path);

std::vector<double> centroid(const EmbeddingSet& set);
// 1 - cos(u, v), clamped to [0, 2].
double cosine_distance(std::span<const double> u, std::span<const double> v);

struct CentroidReport {
  std::vector<std::string> datasets;
  std::vector<std::vector<double>> centroids;
  std::vector<std::vector<double>> distances;
  // Index of the closest other dataset. Ties go to the smaller name.
  std::vector<std::size_t> nearest;
};

CentroidReport domain_report(const std::vector<EmbeddingSet>& sets);
nlohmann::json to_json(const CentroidReport& report);

// Per-pair similarity matrices. Each block is a line "<pair id> <rows> <cols>"
// followed by `rows` lines of `cols` values. Ids without a block map to an
// empty matrix.
std::vector<SimilarityMatrix> parse_similarities(std::string_view text);
std::vector<SimilarityMatrix> load_similarities(const std::filesystem::path& path);
std::string serialize_similarities(const std::vector<SimilarityMatrix>& matrices);

struct RetryPolicy {
  int max_retries = 3;
  std::chrono::milliseconds timeout{30000};
  std::chrono::milliseconds backoff{200};
};

struct TranslatorClientConfig {
  // Either an http:// URL or a file-exchange directory.
  std::string endpoint;
  std::filesystem::path exchange_dir;
  std::size_t batch_size = 32;
  std::string source_lang = "ru";
  std::string target_lang = "kk";
  RetryPolicy retry;
  // Batches in flight at once.
  int window = 1;

  void validate() const;
};

// One JSON request, one JSON response. Throws EndpointUnreachable when the
// service cannot be reached and BadResponse on a non-success reply.
class BatchTransport {
 public:
  virtual ~BatchTransport() = default;
  virtual nlohmann::json post(const nlohmann::json& request, std::string_view tag) = 0;
};

class HttpTransport : public BatchTransport {
 public:
  HttpTransport(std::string url, RetryPolicy policy);
  nlohmann::json post(const nlohmann::json& request, std::string_view tag) override;

 private:
  std::string base_;
  std::string path_;
  RetryPolicy policy_;
};

// Writes <tag>.request.json into the directory and waits up to the timeout
// for <tag>.response.json.
class FileExchangeTransport : public BatchTransport {
 public:
  FileExchangeTransport(std::filesystem::path dir, RetryPolicy policy);
  nlohmann::json post(const nlohmann::json& request, std::string_view tag) override;

 private:
  std::filesystem::path dir_;
  RetryPolicy policy_;
};

std::unique_ptr<BatchTransport> make_transport(const TranslatorClientConfig& config);

struct TranslationSkip {
  std::uint64_t batch = 0;
  std::vector<std::uint64_t> ids;
  std::string error;
};

struct TranslationResult {
  // (translation, original) pairs in input order; the pair id is the input
  // line index. Skipped sentences are absent here and listed in `skipped`.
  Corpus corpus;
  std::vector<TranslationSkip> skipped;
  std::size_t resumed = 0;
  std::size_t requests = 0;
};

// Translates every sentence, journaling one JSON record per finished batch.
// An existing journal is replayed first: sentences recorded as ok are not
// requested again. Throws EndpointUnreachable when no batch got through
// because the service was unreachable.
TranslationResult translate_corpus(const std::vector<std::string>& sentences,
                                   const TranslatorClientConfig& config,
                                   BatchTransport& transport,
                                   const std::filesystem::path& journal = {});
TranslationResult translate_corpus(const Corpus& monolingual,
                                   const TranslatorClientConfig& config,
                                   BatchTransport& transport,
                                   const std::filesystem::path& journal = {});

// Learned-metric client. Request {"hypotheses", "references", "sources"},
// response {"scores": [...]}; scores are passed through unchanged.
class ScorerClient : public ExternalScorer {
 public:
  ScorerClient(TranslatorClientConfig config, BatchTransport& transport,
               std::string name = "COMET");
  std::string name() const override { return name_; }
  std::vector<double> score(const std::vector<std::string>& hypotheses,
                            const std::vector<std::string>& references,
                            const std::vector<std::string>& sources) override;

 private:
  TranslatorClientConfig config_;
  BatchTransport& transport_;
  std::string name_;
};

std::vector<double> external_score(const std::filesystem::path& hyp_file,
                                   const std::filesystem::path& ref_file,
                                   const std::filesystem::path& src_file,
                                   const TranslatorClientConfig& config,
                                   BatchTransport& transport);

}  // namespace cswitch

#endif  // CSWITCH_DOMAIN_H_

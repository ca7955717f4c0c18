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

#ifndef CSWITCH_METRICS_H_
#define CSWITCH_METRICS_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace cswitch {

enum class BleuSmoothing { kNone, kEpsilon, kAddK };
enum class BleuTokenization { kPretokenized, kBuiltin };

struct BleuConfig {
  int max_order = 4;
  BleuSmoothing smoothing = BleuSmoothing::kNone;
  double epsilon = 0.1;
  double add_k = 1.0;
  bool case_sensitive = true;
  BleuTokenization tokenization = BleuTokenization::kPretokenized;
};

BleuSmoothing parse_bleu_smoothing(std::string_view name);

struct ChrfConfig {
  int char_order = 6;
  int word_order = 2;
  double beta = 2.0;
};

// `references` holds one stream per reference set, each aligned with the
// hypotheses. Scores are in [0, 100].
double bleu(const std::vector<std::string>& hypotheses,
            const std::vector<std::vector<std::string>>& references, const BleuConfig& config);
double bleu(const std::vector<std::string>& hypotheses, const std::vector<std::string>& references,
            const BleuConfig& config = {});

double chrf_pp(const std::vector<std::string>& hypotheses,
               const std::vector<std::vector<std::string>>& references, const ChrfConfig& config);
double chrf_pp(const std::vector<std::string>& hypotheses,
               const std::vector<std::string>& references, const ChrfConfig& config = {});

// Learned metric served outside the process (for example COMET).
class ExternalScorer {
 public:
  virtual ~ExternalScorer() = default;
  virtual std::string name() const = 0;
  virtual std::vector<double> score(const std::vector<std::string>& hypotheses,
                                    const std::vector<std::string>& references,
                                    const std::vector<std::string>& sources) = 0;
};

struct SystemScore {
  std::string system;
  std::optional<double> bleu;
  std::optional<double> chrf_pp;
  std::map<std::string, double> external;
  std::optional<std::string> error;
};

struct ScoreReport {
  std::string dataset;
  std::vector<SystemScore> rows;
};

nlohmann::json to_json(const ScoreReport& report);
// Aligned plain-text table with BLEU, ChrF++ and then external columns.
std::string render_table(const ScoreReport& report);

// One row per system in the given order; a failing system gets an error row
// and does not affect the others.
ScoreReport score_systems(const std::vector<std::pair<std::string, std::vector<std::string>>>& outputs,
                          const std::vector<std::string>& references,
                          const BleuConfig& bleu_config, const ChrfConfig& chrf_config,
                          ExternalScorer* external = nullptr,
                          const std::vector<std::string>* sources = nullptr,
                          std::string dataset = {});

}  // namespace cswitch

#endif  // CSWITCH_METRICS_H_

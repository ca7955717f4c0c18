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

#ifndef CSWITCH_FILTERING_H_
#define CSWITCH_FILTERING_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/container/flat_hash_set.h"
#include "cswitch/corpus.h"
#include "cswitch/io.h"
#include "json.hpp"

namespace cswitch {

struct CodepointRange {
  char32_t first;
  char32_t last;
};

struct Charset {
  std::vector<CodepointRange> ranges;
  bool contains(char32_t cp) const;
};

// Cyrillic block U+0400..U+04FF, which includes the Kazakh-specific letters.
Charset kazakh_charset();
// А..я plus Ё/ё.
Charset russian_charset();

struct DedupNormalization {
  bool nfc = true;
  bool trim = true;
  bool collapse_whitespace = true;
};

struct FilterConfig {
  double punct_threshold = 0.5;
  double charset_threshold = 0.5;
  std::map<Lang, Charset> allowed_charsets = {{Lang::kKazakh, kazakh_charset()},
                                              {Lang::kRussian, russian_charset()}};
  DedupNormalization dedup;

  // Thresholds must lie in (0, 1].
  void validate() const;
};

struct FilterReport {
  std::uint64_t input_count = 0;
  std::uint64_t kept_count = 0;
  std::uint64_t dropped_punct = 0;
  std::uint64_t dropped_charset = 0;
  std::uint64_t dropped_dup = 0;

  bool balanced() const {
    return input_count == kept_count + dropped_punct + dropped_charset + dropped_dup;
  }
  std::string summary_line() const;
  bool operator==(const FilterReport&) const = default;
};

nlohmann::json to_json(const FilterReport& report);

// Share of P*/S* code points among non-whitespace code points; 0 for text
// without any.
double punctuation_ratio(std::string_view text);

// Share of non-whitespace code points outside the language's allowed set.
// ASCII digits and P*/S* characters always count as allowed.
double charset_ratio(std::string_view text, Lang lang, const FilterConfig& config);

enum class DropReason { kNone, kPunctuation, kCharset };

// Punctuation is checked on both sides before charset. A side without any
// non-whitespace character fails the charset check.
DropReason check_pair(std::string_view source, std::string_view target,
                      const FilterConfig& config);

std::string normalize_for_dedup(std::string_view text, const DedupNormalization& norm);

struct PairDigest {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  bool operator==(const PairDigest&) const = default;
  template <typename H>
  friend H AbslHashValue(H h, const PairDigest& d) {
    return H::combine(std::move(h), d.hi, d.lo);
  }
};

PairDigest pair_digest(std::string_view source, std::string_view target,
                       const DedupNormalization& norm);

// Batch-at-a-time cleaner used by both the in-memory and the streaming
// paths. Ratio checks and digests run on `jobs` threads; the seen-set is
// updated sequentially in input order, so output is first-wins regardless
// of the job count.
class StreamingFilter {
 public:
  StreamingFilter(FilterConfig config, bool ratio_filters, int jobs);

  void process(std::vector<RawPair>& batch, std::vector<RawPair>& kept);
  const FilterReport& report() const { return report_; }

 private:
  FilterConfig config_;
  bool ratio_filters_;
  int jobs_;
  FilterReport report_;
  absl::flat_hash_set<PairDigest> seen_;
};

std::pair<Corpus, FilterReport> deduplicate(const Corpus& corpus,
                                            const FilterConfig& config, int jobs = 1);
std::pair<Corpus, FilterReport> clean(const Corpus& corpus, const FilterConfig& config,
                                      int jobs = 1);

}  // namespace cswitch

#endif  // CSWITCH_FILTERING_H_

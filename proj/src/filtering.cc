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

#include "cswitch/filtering.h"

#include <cstring>
#include <sstream>

#include "cswitch/error.h"
#include "cswitch/parallel.h"
#include "cswitch/unicode.h"

namespace cswitch {

bool Charset::contains(char32_t cp) const {
  for (const auto& r : ranges) {
    if (cp >= r.first && cp <= r.last) return true;
  }
  return false;
}

Charset kazakh_charset() { return Charset{{{0x0400, 0x04FF}}}; }

Charset russian_charset() {
  return Charset{{{0x0410, 0x044F}, {0x0401, 0x0401}, {0x0451, 0x0451}}};
}

void FilterConfig::validate() const {
  auto check = [](double v, const char* name) {
    if (!(v > 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(name) + " must be in (0, 1], got " + std::to_string(v));
    }
  };
  check(punct_threshold, "punct_threshold");
  check(charset_threshold, "charset_threshold");
}

std::string FilterReport::summary_line() const {
  std::ostringstream out;
  out << "input=" << input_count << " kept=" << kept_count
      << " dropped_punct=" << dropped_punct << " dropped_charset=" << dropped_charset
      << " dropped_dup=" << dropped_dup;
  return out.str();
}

nlohmann::json to_json(const FilterReport& report) {
  return {{"input_count", report.input_count},
          {"kept_count", report.kept_count},
          {"dropped_punct", report.dropped_punct},
          {"dropped_charset", report.dropped_charset},
          {"dropped_dup", report.dropped_dup}};
}

namespace {

struct SideCounts {
  std::size_t visible = 0;
  std::size_t punct = 0;
  std::size_t outside = 0;
};

bool is_ascii_digit(char32_t cp) { return cp >= '0' && cp <= '9'; }

SideCounts scan(std::string_view raw, const Charset* charset) {
  const std::string text = unicode::nfc(raw);
  SideCounts counts;
  unicode::for_each_codepoint(text, [&](char32_t cp) {
    if (unicode::is_whitespace(cp)) return;
    ++counts.visible;
    const bool punct = unicode::is_punct_or_symbol(cp);
    counts.punct += punct ? 1 : 0;
    if (charset != nullptr && !punct && !is_ascii_digit(cp) && !charset->contains(cp)) {
      ++counts.outside;
    }
  });
  return counts;
}

const Charset& charset_for(Lang lang, const FilterConfig& config) {
  const auto it = config.allowed_charsets.find(lang);
  if (it == config.allowed_charsets.end()) {
    throw Error(ErrorCode::kUnknownLanguage,
                "no allowed charset configured for '" + std::string(lang_tag(lang)) + "'");
  }
  return it->second;
}

double ratio(std::size_t part, std::size_t whole) {
  return whole == 0 ? 0.0 : static_cast<double>(part) / static_cast<double>(whole);
}

}  // namespace

double punctuation_ratio(std::string_view text) {
  const auto counts = scan(text, nullptr);
  return ratio(counts.punct, counts.visible);
}

double charset_ratio(std::string_view text, Lang lang, const FilterConfig& config) {
  const auto counts = scan(text, &charset_for(lang, config));
  return ratio(counts.outside, counts.visible);
}

DropReason check_pair(std::string_view source, std::string_view target,
                      const FilterConfig& config) {
  const auto src = scan(source, &charset_for(Lang::kKazakh, config));
  const auto tgt = scan(target, &charset_for(Lang::kRussian, config));
  if (ratio(src.punct, src.visible) > config.punct_threshold ||
      ratio(tgt.punct, tgt.visible) > config.punct_threshold) {
    return DropReason::kPunctuation;
  }
  if (src.visible == 0 || tgt.visible == 0 ||
      ratio(src.outside, src.visible) > config.charset_threshold ||
      ratio(tgt.outside, tgt.visible) > config.charset_threshold) {
    return DropReason::kCharset;
  }
  return DropReason::kNone;
}

std::string normalize_for_dedup(std::string_view text, const DedupNormalization& norm) {
  std::string out = norm.nfc ? unicode::nfc(text) : std::string(text);
  if (norm.collapse_whitespace) return unicode::collapse_whitespace(out);
  if (norm.trim) return unicode::trim(out);
  return out;
}

namespace {

// 64-bit multiply-fold hash over 8-byte blocks; two seeds give the two
// halves of the digest.
std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 m = static_cast<unsigned __int128>(a) * b;
  return static_cast<std::uint64_t>(m) ^ static_cast<std::uint64_t>(m >> 64);
}

std::uint64_t hash_bytes(std::string_view data, std::uint64_t seed) {
  constexpr std::uint64_t k0 = 0xa0761d6478bd642fULL;
  constexpr std::uint64_t k1 = 0xe7037ed1a0b428dbULL;
  std::uint64_t h = seed ^ mix(seed ^ k0, data.size() ^ k1);
  std::size_t i = 0;
  for (; i + 8 <= data.size(); i += 8) {
    std::uint64_t block;
    std::memcpy(&block, data.data() + i, 8);
    h = mix(h ^ block, k1) + k0;
  }
  std::uint64_t tail = 0;
  std::memcpy(&tail, data.data() + i, data.size() - i);
  h = mix(h ^ tail ^ (static_cast<std::uint64_t>(data.size() - i) << 56), k1);
  return mix(h ^ k0, h ^ k1);
}

}  // namespace

PairDigest pair_digest(std::string_view source, std::string_view target,
                       const DedupNormalization& norm) {
  std::string key = normalize_for_dedup(source, norm);
  key.push_back('\n');
  key += normalize_for_dedup(target, norm);
  return {hash_bytes(key, 0x243f6a8885a308d3ULL), hash_bytes(key, 0x13198a2e03707344ULL)};
}

StreamingFilter::StreamingFilter(FilterConfig config, bool ratio_filters, int jobs)
    : config_(std::move(config)), ratio_filters_(ratio_filters), jobs_(jobs) {
  config_.validate();
}

void StreamingFilter::process(std::vector<RawPair>& batch, std::vector<RawPair>& kept) {
  std::vector<DropReason> reasons(batch.size(), DropReason::kNone);
  std::vector<PairDigest> digests(batch.size());
  parallel_for(batch.size(), jobs_, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      if (ratio_filters_) reasons[i] = check_pair(batch[i].source, batch[i].target, config_);
      if (reasons[i] == DropReason::kNone) {
        digests[i] = pair_digest(batch[i].source, batch[i].target, config_.dedup);
      }
    }
  });
  for (std::size_t i = 0; i < batch.size(); ++i) {
    ++report_.input_count;
    switch (reasons[i]) {
      case DropReason::kPunctuation: ++report_.dropped_punct; continue;
      case DropReason::kCharset: ++report_.dropped_charset; continue;
      case DropReason::kNone: break;
    }
    if (!seen_.insert(digests[i]).second) {
      ++report_.dropped_dup;
      continue;
    }
    ++report_.kept_count;
    kept.push_back(std::move(batch[i]));
  }
}

namespace {

std::pair<Corpus, FilterReport> run_filter(const Corpus& corpus, const FilterConfig& config,
                                           bool ratio_filters, int jobs) {
  std::vector<RawPair> batch;
  batch.reserve(corpus.pairs.size());
  for (std::size_t i = 0; i < corpus.pairs.size(); ++i) {
    batch.push_back({corpus.pairs[i].source.raw, corpus.pairs[i].target.raw, i});
  }
  StreamingFilter filter(config, ratio_filters, jobs);
  std::vector<RawPair> kept;
  filter.process(batch, kept);
  Corpus out;
  out.name = corpus.name;
  out.kind = CorpusKind::kParallel;
  out.pairs.reserve(kept.size());
  for (const auto& k : kept) out.pairs.push_back(corpus.pairs[k.id]);
  out.renumber();
  return {std::move(out), filter.report()};
}

}  // namespace

std::pair<Corpus, FilterReport> deduplicate(const Corpus& corpus, const FilterConfig& config,
                                            int jobs) {
  return run_filter(corpus, config, false, jobs);
}

std::pair<Corpus, FilterReport> clean(const Corpus& corpus, const FilterConfig& config,
                                      int jobs) {
  return run_filter(corpus, config, true, jobs);
}

}  // namespace cswitch

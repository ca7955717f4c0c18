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

#include "cswitch/config.h"

#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#include "cswitch/error.h"
#include "cswitch/unicode.h"

namespace cswitch {

namespace fs = std::filesystem;

ConfigDocument parse_config(std::string_view text) {
  ConfigDocument doc;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const std::string line = unicode::trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument, "config line " + std::to_string(line_no) + ": missing '='");
    }
    const std::string key = unicode::trim(std::string_view(line).substr(0, eq));
    if (key.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "config line " + std::to_string(line_no) + ": empty key");
    }
    doc[key] = unicode::trim(std::string_view(line).substr(eq + 1));
  }
  return doc;
}

ConfigDocument load_config(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

namespace {

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
  throw Error(ErrorCode::kInvalidArgument,
              "bad value '" + std::string(value) + "' for " + std::string(key));
}

double to_double(std::string_view key, std::string_view value) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) bad_value(key, value);
  return v;
}

template <typename Int>
Int to_int(std::string_view key, std::string_view value) {
  Int v{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) bad_value(key, value);
  return v;
}

bool to_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  bad_value(key, value);
}

void set_client(TranslatorClientConfig& c, std::string_view key, std::string_view name,
                std::string_view value) {
  if (name == "endpoint") {
    c.endpoint = value;
  } else if (name == "exchange_dir") {
    c.exchange_dir = fs::path(std::string(value));
  } else if (name == "batch_size") {
    c.batch_size = to_int<std::size_t>(key, value);
  } else if (name == "src") {
    c.source_lang = value;
  } else if (name == "tgt") {
    c.target_lang = value;
  } else if (name == "max_retries") {
    c.retry.max_retries = to_int<int>(key, value);
  } else if (name == "timeout_ms") {
    c.retry.timeout = std::chrono::milliseconds(to_int<long>(key, value));
  } else if (name == "backoff_ms") {
    c.retry.backoff = std::chrono::milliseconds(to_int<long>(key, value));
  } else if (name == "window") {
    c.window = to_int<int>(key, value);
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown config key " + std::string(key));
  }
}

}  // namespace

void PipelineConfig::set(std::string_view key, std::string_view value) {
  const auto dot = key.find('.');
  if (dot == std::string_view::npos) {
    throw Error(ErrorCode::kInvalidArgument, "config key needs a section: " + std::string(key));
  }
  const auto section = key.substr(0, dot);
  const auto name = key.substr(dot + 1);
  auto unknown = [&] {
    throw Error(ErrorCode::kInvalidArgument, "unknown config key " + std::string(key));
  };
  try {
    if (section == "filter") {
      if (name == "punct_threshold") filter.punct_threshold = to_double(key, value);
      else if (name == "charset_threshold") filter.charset_threshold = to_double(key, value);
      else if (name == "dedup_nfc") filter.dedup.nfc = to_bool(key, value);
      else if (name == "dedup_trim") filter.dedup.trim = to_bool(key, value);
      else if (name == "dedup_collapse_whitespace") filter.dedup.collapse_whitespace = to_bool(key, value);
      else unknown();
    } else if (section == "augment") {
      if (name == "strategy") augment.strategy = parse_strategy(value);
      else if (name == "rate") augment.rate = to_double(key, value);
      else if (name == "short_len") augment.short_len = to_int<int>(key, value);
      else if (name == "short_count") augment.short_count = to_int<int>(key, value);
      else if (name == "seed") {
        augment.seed = to_int<std::uint64_t>(key, value);
        seed_set = true;
      } else if (name == "heuristic") augment.heuristic = parse_heuristic(value);
      else if (name == "sim_method") augment.sim_method = parse_sim_method(value);
      else if (name == "sim_iterations") augment.sim_iterations = to_int<int>(key, value);
      else if (name == "cs3_mode") {
        if (value == "random_form") augment.cs3_mode = Cs3Mode::kRandomForm;
        else if (value == "cs1_or_cs2") augment.cs3_mode = Cs3Mode::kCs1OrCs2;
        else bad_value(key, value);
      } else if (name == "inherit_case") augment.inherit_case = to_bool(key, value);
      else unknown();
    } else if (section == "align") {
      if (name == "iterations") align.iterations = to_int<int>(key, value);
      else if (name == "diag_weight") align.diag_weight = to_double(key, value);
      else if (name == "null_prob") align.null_prob = to_double(key, value);
      else unknown();
    } else if (section == "bleu") {
      if (name == "max_order") bleu.max_order = to_int<int>(key, value);
      else if (name == "smoothing") bleu.smoothing = parse_bleu_smoothing(value);
      else if (name == "epsilon") bleu.epsilon = to_double(key, value);
      else if (name == "add_k") bleu.add_k = to_double(key, value);
      else if (name == "case_sensitive") bleu.case_sensitive = to_bool(key, value);
      else if (name == "tokenize") {
        if (value == "none") bleu.tokenization = BleuTokenization::kPretokenized;
        else if (value == "builtin") bleu.tokenization = BleuTokenization::kBuiltin;
        else bad_value(key, value);
      } else unknown();
    } else if (section == "chrf") {
      if (name == "char_order") chrf.char_order = to_int<int>(key, value);
      else if (name == "word_order") chrf.word_order = to_int<int>(key, value);
      else if (name == "beta") chrf.beta = to_double(key, value);
      else unknown();
    } else if (section == "translator") {
      set_client(translator, key, name, value);
    } else if (section == "scorer") {
      set_client(scorer, key, name, value);
    } else if (section == "lexicon") {
      if (name == "path") lexicon = fs::path(std::string(value));
      else if (name == "kk_suffixes") kk_suffixes = fs::path(std::string(value));
      else if (name == "ru_suffixes") ru_suffixes = fs::path(std::string(value));
      else unknown();
    } else {
      unknown();
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidArgument) throw;
    throw Error(ErrorCode::kInvalidArgument, std::string(key) + ": " + e.what());
  }
}

void PipelineConfig::apply(const ConfigDocument& doc) {
  for (const auto& [key, value] : doc) set(key, value);
}

void PipelineConfig::validate() const {
  filter.validate();
  augment.validate();
  for (const auto* p : {&lexicon, &kk_suffixes, &ru_suffixes}) {
    if (!p->empty() && !fs::exists(*p)) {
      throw Error(ErrorCode::kInvalidArgument, "referenced file does not exist: " + p->string());
    }
  }
  if (align.iterations < 1) throw Error(ErrorCode::kInvalidArgument, "align.iterations must be >= 1");
}

}  // namespace cswitch

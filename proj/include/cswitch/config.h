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

#ifndef CSWITCH_CONFIG_H_
#define CSWITCH_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "cswitch/alignment.h"
#include "cswitch/augmentation.h"
#include "cswitch/domain.h"
#include "cswitch/filtering.h"
#include "cswitch/metrics.h"

namespace cswitch {

// Flat key/value document. One `key = value` per line; keys are dotted
// (`section.name`); `#` starts a comment line; blank lines are ignored;
// values run to the end of the line with surrounding spaces trimmed.
using ConfigDocument = std::map<std::string, std::string>;

ConfigDocument parse_config(std::string_view text);
ConfigDocument load_config(const std::filesystem::path& path);

struct PipelineConfig {
  FilterConfig filter;
  AugmentConfig augment;
  bool seed_set = false;
  TrainOptions align;
  BleuConfig bleu;
  ChrfConfig chrf;
  TranslatorClientConfig translator;
  TranslatorClientConfig scorer;
  std::filesystem::path lexicon;
  std::filesystem::path kk_suffixes;
  std::filesystem::path ru_suffixes;

  // Applies every key; unknown keys and bad values throw InvalidArgument.
  void apply(const ConfigDocument& doc);
  void set(std::string_view key, std::string_view value);
  // Checks ranges and that referenced files exist.
  void validate() const;
};

}  // namespace cswitch

#endif  // CSWITCH_CONFIG_H_

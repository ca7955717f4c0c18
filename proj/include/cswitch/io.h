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

#ifndef CSWITCH_IO_H_
#define CSWITCH_IO_H_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cswitch/corpus.h"

namespace cswitch {

// Reads LF-terminated UTF-8 lines; a trailing CR is dropped.
class LineReader {
 public:
  explicit LineReader(const std::filesystem::path& path);
  std::optional<std::string> next();
  std::uint64_t line_number() const { return line_; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::ifstream in_;
  std::uint64_t line_ = 0;
};

std::vector<std::string> read_lines(const std::filesystem::path& path);

// Writes to a sibling temp file; commit() renames it over the destination.
// Destroying an uncommitted file removes the temp file and leaves the
// destination untouched.
class AtomicFile {
 public:
  explicit AtomicFile(std::filesystem::path path);
  ~AtomicFile();
  AtomicFile(const AtomicFile&) = delete;
  AtomicFile& operator=(const AtomicFile&) = delete;

  std::ostream& stream() { return out_; }
  void commit();

 private:
  std::filesystem::path path_;
  std::filesystem::path temp_;
  std::ofstream out_;
  bool committed_ = false;
};

void write_text_atomic(const std::filesystem::path& path, const std::string& content);

struct RawPair {
  std::string source;
  std::string target;
  std::uint64_t id = 0;
};

// Streams raw pairs from two aligned files or a 2-column TSV without
// materializing the corpus.
class ParallelReader {
 public:
  static ParallelReader open(const std::filesystem::path& source,
                             const std::filesystem::path& target);
  static ParallelReader open_tsv(const std::filesystem::path& tsv);

  // Appends up to max_pairs pairs; returns false once the input is exhausted
  // and nothing was appended.
  bool read_batch(std::size_t max_pairs, std::vector<RawPair>& out);
  std::optional<RawPair> next();

 private:
  ParallelReader() = default;
  std::unique_ptr<LineReader> source_;
  std::unique_ptr<LineReader> target_;
  std::unique_ptr<LineReader> tsv_;
  std::uint64_t next_id_ = 0;
};

class ParallelWriter {
 public:
  static ParallelWriter open(const std::filesystem::path& source,
                             const std::filesystem::path& target);
  static ParallelWriter open_tsv(const std::filesystem::path& tsv);

  void write(std::string_view source, std::string_view target);
  void commit();

 private:
  ParallelWriter() = default;
  std::unique_ptr<AtomicFile> source_;
  std::unique_ptr<AtomicFile> target_;
  std::unique_ptr<AtomicFile> tsv_;
};

Corpus read_parallel(const std::filesystem::path& source,
                     const std::filesystem::path& target);
Corpus read_parallel_tsv(const std::filesystem::path& tsv);
Corpus read_monolingual(const std::filesystem::path& path, Lang lang);

void write_parallel(const Corpus& corpus, const std::filesystem::path& source,
                    const std::filesystem::path& target);
void write_parallel_tsv(const Corpus& corpus, const std::filesystem::path& tsv);
void write_monolingual(const Corpus& corpus, const std::filesystem::path& path);

Corpus corpus_from_raw(std::vector<RawPair> pairs, std::string name = {});

}  // namespace cswitch

#endif  // CSWITCH_IO_H_

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

#include "cswitch/io.h"

#include <unistd.h>

#include <sstream>

#include "cswitch/error.h"

namespace cswitch {

namespace fs = std::filesystem;

LineReader::LineReader(const fs::path& path) : path_(path), in_(path, std::ios::binary) {
  if (!in_) throw Error(ErrorCode::kIo, "cannot open " + path.string());
}

std::optional<std::string> LineReader::next() {
  std::string line;
  if (!std::getline(in_, line)) return std::nullopt;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  ++line_;
  return line;
}

std::vector<std::string> read_lines(const fs::path& path) {
  LineReader reader(path);
  std::vector<std::string> lines;
  while (auto line = reader.next()) lines.push_back(std::move(*line));
  return lines;
}

AtomicFile::AtomicFile(fs::path path) : path_(std::move(path)) {
  temp_ = path_;
  temp_ += ".tmp." + std::to_string(::getpid());
  out_.open(temp_, std::ios::binary | std::ios::trunc);
  if (!out_) throw Error(ErrorCode::kIo, "cannot open " + temp_.string() + " for writing");
}

AtomicFile::~AtomicFile() {
  if (!committed_) {
    out_.close();
    std::error_code ec;
    fs::remove(temp_, ec);
  }
}

void AtomicFile::commit() {
  out_.flush();
  if (!out_) throw Error(ErrorCode::kIo, "write failed for " + temp_.string());
  out_.close();
  std::error_code ec;
  fs::rename(temp_, path_, ec);
  if (ec) throw Error(ErrorCode::kIo, "rename to " + path_.string() + " failed: " + ec.message());
  committed_ = true;
}

void write_text_atomic(const fs::path& path, const std::string& content) {
  AtomicFile file(path);
  file.stream() << content;
  file.commit();
}

ParallelReader ParallelReader::open(const fs::path& source, const fs::path& target) {
  ParallelReader reader;
  reader.source_ = std::make_unique<LineReader>(source);
  reader.target_ = std::make_unique<LineReader>(target);
  return reader;
}

ParallelReader ParallelReader::open_tsv(const fs::path& tsv) {
  ParallelReader reader;
  reader.tsv_ = std::make_unique<LineReader>(tsv);
  return reader;
}

std::optional<RawPair> ParallelReader::next() {
  if (tsv_) {
    auto line = tsv_->next();
    if (!line) return std::nullopt;
    const auto tab = line->find('\t');
    if (tab == std::string::npos || line->find('\t', tab + 1) != std::string::npos) {
      throw Error(ErrorCode::kMalformedRow, tsv_->path().string() + ":" +
                                                std::to_string(tsv_->line_number()) +
                                                ": expected 2 tab-separated columns");
    }
    return RawPair{line->substr(0, tab), line->substr(tab + 1), next_id_++};
  }
  auto src = source_->next();
  auto tgt = target_->next();
  if (src.has_value() != tgt.has_value()) {
    throw Error(ErrorCode::kLineCountMismatch,
                source_->path().string() + " and " + target_->path().string() +
                    " differ in line count (mismatch after line " +
                    std::to_string(next_id_) + ")");
  }
  if (!src) return std::nullopt;
  return RawPair{std::move(*src), std::move(*tgt), next_id_++};
}

bool ParallelReader::read_batch(std::size_t max_pairs, std::vector<RawPair>& out) {
  std::size_t added = 0;
  while (added < max_pairs) {
    auto pair = next();
    if (!pair) break;
    out.push_back(std::move(*pair));
    ++added;
  }
  return added > 0;
}

ParallelWriter ParallelWriter::open(const fs::path& source, const fs::path& target) {
  ParallelWriter writer;
  writer.source_ = std::make_unique<AtomicFile>(source);
  writer.target_ = std::make_unique<AtomicFile>(target);
  return writer;
}

ParallelWriter ParallelWriter::open_tsv(const fs::path& tsv) {
  ParallelWriter writer;
  writer.tsv_ = std::make_unique<AtomicFile>(tsv);
  return writer;
}

void ParallelWriter::write(std::string_view source, std::string_view target) {
  if (tsv_) {
    if (source.find('\t') != std::string_view::npos ||
        target.find('\t') != std::string_view::npos) {
      throw Error(ErrorCode::kMalformedRow, "sentence contains a tab; cannot write TSV");
    }
    tsv_->stream() << source << '\t' << target << '\n';
    return;
  }
  source_->stream() << source << '\n';
  target_->stream() << target << '\n';
}

void ParallelWriter::commit() {
  if (tsv_) {
    tsv_->commit();
    return;
  }
  source_->commit();
  target_->commit();
}

Corpus corpus_from_raw(std::vector<RawPair> pairs, std::string name) {
  Corpus corpus;
  corpus.name = std::move(name);
  corpus.kind = CorpusKind::kParallel;
  corpus.pairs.reserve(pairs.size());
  for (auto& p : pairs) corpus.pairs.push_back(make_pair(p.source, p.target, p.id));
  return corpus;
}

namespace {

Corpus read_all(ParallelReader reader, std::string name) {
  std::vector<RawPair> raw;
  while (auto pair = reader.next()) raw.push_back(std::move(*pair));
  return corpus_from_raw(std::move(raw), std::move(name));
}

}  // namespace

Corpus read_parallel(const fs::path& source, const fs::path& target) {
  return read_all(ParallelReader::open(source, target), source.stem().string());
}

Corpus read_parallel_tsv(const fs::path& tsv) {
  return read_all(ParallelReader::open_tsv(tsv), tsv.stem().string());
}

Corpus read_monolingual(const fs::path& path, Lang lang) {
  Corpus corpus;
  corpus.name = path.stem().string();
  corpus.kind = CorpusKind::kMonolingual;
  LineReader reader(path);
  while (auto line = reader.next()) corpus.sentences.push_back(tokenize(*line, lang));
  return corpus;
}

void write_parallel(const Corpus& corpus, const fs::path& source, const fs::path& target) {
  auto writer = ParallelWriter::open(source, target);
  for (const auto& p : corpus.pairs) writer.write(p.source.raw, p.target.raw);
  writer.commit();
}

void write_parallel_tsv(const Corpus& corpus, const fs::path& tsv) {
  auto writer = ParallelWriter::open_tsv(tsv);
  for (const auto& p : corpus.pairs) writer.write(p.source.raw, p.target.raw);
  writer.commit();
}

void write_monolingual(const Corpus& corpus, const fs::path& path) {
  AtomicFile file(path);
  for (const auto& s : corpus.sentences) file.stream() << s.raw << '\n';
  file.commit();
}

}  // namespace cswitch

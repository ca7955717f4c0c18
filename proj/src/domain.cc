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

#include "cswitch/domain.h"

#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "cswitch/error.h"
#include "cswitch/io.h"
#include "httplib.h"

namespace cswitch {

namespace fs = std::filesystem;

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
    if (pos > start) out.push_back(line.substr(start, pos - start));
  }
  return out;
}

double parse_double(std::string_view field, ErrorCode code, const std::string& where) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error(code, where + ": not a number '" + std::string(field) + "'");
  }
  return value;
}

std::uint64_t parse_count(std::string_view field, ErrorCode code, const std::string& where) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error(code, where + ": not a count '" + std::string(field) + "'");
  }
  return value;
}

std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    if (!split_fields(line).empty() && line.front() != '#') lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

void append_double(std::string& out, double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, ptr);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

EmbeddingSet parse_embeddings(std::string_view text, std::string dataset_name) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::kHeaderMismatch, "missing '<count> <dim>' header");
  const auto header = split_fields(lines[0]);
  if (header.size() != 2) throw Error(ErrorCode::kHeaderMismatch, "header must be '<count> <dim>'");
  EmbeddingSet set;
  set.dataset_name = std::move(dataset_name);
  const auto count = parse_count(header[0], ErrorCode::kHeaderMismatch, "header");
  set.dim = parse_count(header[1], ErrorCode::kHeaderMismatch, "header");
  if (set.dim == 0) throw Error(ErrorCode::kHeaderMismatch, "dim must be at least 1");
  if (lines.size() - 1 != count) {
    throw Error(ErrorCode::kHeaderMismatch, "header declares " + std::to_string(count) +
                                                " rows, found " + std::to_string(lines.size() - 1));
  }
  set.vectors.reserve(count);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto fields = split_fields(lines[r]);
    const std::string where = "row " + std::to_string(r);
    if (fields.size() != set.dim) {
      throw Error(ErrorCode::kRaggedRow, where + " has " + std::to_string(fields.size()) +
                                             " values, expected " + std::to_string(set.dim));
    }
    std::vector<double> v;
    v.reserve(set.dim);
    for (auto f : fields) v.push_back(parse_double(f, ErrorCode::kRaggedRow, where));
    set.vectors.push_back(std::move(v));
  }
  return set;
}

EmbeddingSet load_embeddings(const fs::path& path) {
  return parse_embeddings(read_file(path), path.stem().string());
}

std::string serialize_embeddings(const EmbeddingSet& set) {
  std::string out = std::to_string(set.vectors.size()) + " " + std::to_string(set.dim) + "\n";
  for (const auto& v : set.vectors) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out.push_back(' ');
      append_double(out, v[i]);
    }
    out.push_back('\n');
  }
  return out;
}

void save_embeddings(const EmbeddingSet& set, const fs::path& path) {
  write_text_atomic(path, serialize_embeddings(set));
}

std::vector<double> centroid(const EmbeddingSet& set) {
  if (set.vectors.empty()) throw Error(ErrorCode::kEmptySet, "no vectors in '" + set.dataset_name + "'");
  std::vector<double> sum(set.dim, 0.0);
  for (const auto& v : set.vectors) {
    if (v.size() != set.dim) throw Error(ErrorCode::kDimensionMismatch, "vector length differs from dim");
    for (std::size_t i = 0; i < set.dim; ++i) sum[i] += v[i];
  }
  for (auto& x : sum) x /= static_cast<double>(set.vectors.size());
  return sum;
}

double cosine_distance(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw Error(ErrorCode::kDimensionMismatch, "vectors differ in length");
  double dot = 0.0;
  double nu = 0.0;
  double nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu == 0.0 || nv == 0.0) throw Error(ErrorCode::kZeroVector, "cosine distance of a zero vector");
  const double d = 1.0 - dot / (std::sqrt(nu) * std::sqrt(nv));
  return std::clamp(d, 0.0, 2.0);
}

CentroidReport domain_report(const std::vector<EmbeddingSet>& sets) {
  if (sets.size() < 2) throw Error(ErrorCode::kInvalidArgument, "domain report needs at least 2 sets");
  for (const auto& s : sets) {
    if (s.dim != sets.front().dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "'" + s.dataset_name + "' has dim " + std::to_string(s.dim) + ", expected " +
                      std::to_string(sets.front().dim));
    }
  }
  const std::size_t n = sets.size();
  CentroidReport report;
  for (const auto& s : sets) {
    report.datasets.push_back(s.dataset_name);
    report.centroids.push_back(centroid(s));
  }
  report.distances.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = cosine_distance(report.centroids[i], report.centroids[j]);
      report.distances[i][j] = d;
      report.distances[j][i] = d;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t best = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (best == n || report.distances[i][j] < report.distances[i][best] ||
          (report.distances[i][j] == report.distances[i][best] &&
           report.datasets[j] < report.datasets[best])) {
        best = j;
      }
    }
    report.nearest.push_back(best);
  }
  return report;
}

nlohmann::json to_json(const CentroidReport& report) {
  nlohmann::json nearest = nlohmann::json::object();
  for (std::size_t i = 0; i < report.datasets.size(); ++i) {
    nearest[report.datasets[i]] = report.datasets[report.nearest[i]];
  }
  return {{"datasets", report.datasets},
          {"centroids", report.centroids},
          {"distances", report.distances},
          {"nearest", nearest}};
}

std::vector<SimilarityMatrix> parse_similarities(std::string_view text) {
  const auto lines = content_lines(text);
  std::vector<SimilarityMatrix> out;
  std::size_t i = 0;
  while (i < lines.size()) {
    const auto header = split_fields(lines[i]);
    const std::string where = "similarity block at content line " + std::to_string(i + 1);
    if (header.size() != 3) throw Error(ErrorCode::kHeaderMismatch, where + ": expected '<id> <rows> <cols>'");
    const auto id = parse_count(header[0], ErrorCode::kHeaderMismatch, where);
    SimilarityMatrix m;
    m.rows = parse_count(header[1], ErrorCode::kHeaderMismatch, where);
    m.cols = parse_count(header[2], ErrorCode::kHeaderMismatch, where);
    if (i + m.rows >= lines.size()) {
      throw Error(ErrorCode::kHeaderMismatch, where + ": fewer rows than declared");
    }
    m.values.reserve(m.rows * m.cols);
    for (std::size_t r = 0; r < m.rows; ++r) {
      const auto fields = split_fields(lines[i + 1 + r]);
      if (fields.size() != m.cols) {
        throw Error(ErrorCode::kRaggedRow, where + ": row " + std::to_string(r) + " has " +
                                              std::to_string(fields.size()) + " values");
      }
      for (auto f : fields) m.values.push_back(parse_double(f, ErrorCode::kRaggedRow, where));
    }
    if (id >= out.size()) out.resize(id + 1);
    out[id] = std::move(m);
    i += 1 + out[id].rows;
  }
  return out;
}

std::vector<SimilarityMatrix> load_similarities(const fs::path& path) {
  return parse_similarities(read_file(path));
}

std::string serialize_similarities(const std::vector<SimilarityMatrix>& matrices) {
  std::string out;
  for (std::size_t id = 0; id < matrices.size(); ++id) {
    const auto& m = matrices[id];
    if (m.rows == 0 || m.cols == 0) continue;
    out += std::to_string(id) + " " + std::to_string(m.rows) + " " + std::to_string(m.cols) + "\n";
    for (std::size_t r = 0; r < m.rows; ++r) {
      for (std::size_t c = 0; c < m.cols; ++c) {
        if (c) out.push_back(' ');
        append_double(out, m.at(r, c));
      }
      out.push_back('\n');
    }
  }
  return out;
}

void TranslatorClientConfig::validate() const {
  if (batch_size < 1) throw Error(ErrorCode::kInvalidArgument, "batch_size must be at least 1");
  if (window < 1) throw Error(ErrorCode::kInvalidArgument, "window must be at least 1");
  if (retry.max_retries < 0) throw Error(ErrorCode::kInvalidArgument, "max_retries must be >= 0");
  if (endpoint.empty() == exchange_dir.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "set exactly one of endpoint and exchange_dir");
  }
}

HttpTransport::HttpTransport(std::string url, RetryPolicy policy) : policy_(policy) {
  constexpr std::string_view kScheme = "http://";
  if (url.rfind(kScheme, 0) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "endpoint must be an http:// URL: " + url);
  }
  const auto slash = url.find('/', kScheme.size());
  base_ = url.substr(0, slash);
  path_ = slash == std::string::npos ? "/" : url.substr(slash);
}

nlohmann::json HttpTransport::post(const nlohmann::json& request, std::string_view tag) {
  httplib::Client client(base_);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(policy_.timeout);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(policy_.timeout - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  client.set_write_timeout(secs.count(), usecs.count());
  auto res = client.Post(path_, request.dump(), "application/json");
  if (!res) {
    throw Error(ErrorCode::kEndpointUnreachable,
                base_ + path_ + " (" + std::string(tag) + "): " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw Error(ErrorCode::kBadResponse, base_ + path_ + " returned HTTP " + std::to_string(res->status));
  }
  auto body = nlohmann::json::parse(res->body, nullptr, false);
  if (body.is_discarded()) throw Error(ErrorCode::kBadResponse, "response is not JSON");
  return body;
}

FileExchangeTransport::FileExchangeTransport(fs::path dir, RetryPolicy policy)
    : dir_(std::move(dir)), policy_(policy) {}

nlohmann::json FileExchangeTransport::post(const nlohmann::json& request, std::string_view tag) {
  const std::string name(tag);
  write_text_atomic(dir_ / (name + ".request.json"), request.dump() + "\n");
  const fs::path response = dir_ / (name + ".response.json");
  const auto deadline = std::chrono::steady_clock::now() + policy_.timeout;
  while (!fs::exists(response)) {
    if (std::chrono::steady_clock::now() >= deadline) {
      throw Error(ErrorCode::kEndpointUnreachable, "no " + response.string() + " before timeout");
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
  auto body = nlohmann::json::parse(read_file(response), nullptr, false);
  if (body.is_discarded()) throw Error(ErrorCode::kBadResponse, response.string() + " is not JSON");
  return body;
}

std::unique_ptr<BatchTransport> make_transport(const TranslatorClientConfig& config) {
  config.validate();
  if (!config.endpoint.empty()) return std::make_unique<HttpTransport>(config.endpoint, config.retry);
  return std::make_unique<FileExchangeTransport>(config.exchange_dir, config.retry);
}

namespace {

struct Attempt {
  nlohmann::json body;
  std::optional<Error> error;
};

// Posts with retries. `check` throws BadResponse for a malformed body.
template <typename Check>
Attempt post_with_retries(BatchTransport& transport, const nlohmann::json& request,
                          const std::string& tag, const RetryPolicy& policy,
                          std::atomic<std::size_t>& requests, Check&& check) {
  Attempt out;
  for (int attempt = 0; attempt <= policy.max_retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(policy.backoff * (1 << std::min(attempt - 1, 5)));
    }
    try {
      ++requests;
      out.body = transport.post(request, tag);
      check(out.body);
      out.error.reset();
      return out;
    } catch (const Error& e) {
      out.error = e;
    } catch (const std::exception& e) {
      out.error = Error(ErrorCode::kBadResponse, e.what());
    }
  }
  return out;
}

struct JournalState {
  std::map<std::uint64_t, std::string> done;
  std::map<std::uint64_t, std::pair<std::uint64_t, std::string>> skipped;
  std::uint64_t next_batch = 0;
};

// Reads the journal; a final line cut short by a crash is dropped from the
// file so that new records start on a clean line.
JournalState replay_journal(const fs::path& path) {
  JournalState state;
  if (path.empty() || !fs::exists(path)) return state;
  const std::string text = read_file(path);
  std::size_t pos = 0;
  std::size_t valid_end = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const bool complete = nl != std::string::npos;
    const std::string_view line(text.data() + pos, (complete ? nl : text.size()) - pos);
    auto record = nlohmann::json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object()) {
      if (!complete || text.find('\n', nl + 1) == std::string::npos) break;
      throw Error(ErrorCode::kMalformedRow, path.string() + ": corrupt journal record");
    }
    const auto batch = record.at("batch").get<std::uint64_t>();
    state.next_batch = std::max(state.next_batch, batch + 1);
    const auto ids = record.at("ids").get<std::vector<std::uint64_t>>();
    if (record.at("status") == "ok") {
      const auto translations = record.at("translations").get<std::vector<std::string>>();
      for (std::size_t k = 0; k < ids.size(); ++k) {
        state.done[ids[k]] = translations.at(k);
        state.skipped.erase(ids[k]);
      }
    } else {
      for (auto id : ids) {
        if (!state.done.count(id)) state.skipped[id] = {batch, record.value("error", "")};
      }
    }
    if (!complete) {
      valid_end = text.size();
      break;
    }
    pos = nl + 1;
    valid_end = pos;
  }
  if (valid_end < text.size()) fs::resize_file(path, valid_end);
  return state;
}

}  // namespace

TranslationResult translate_corpus(const std::vector<std::string>& sentences,
                                   const TranslatorClientConfig& config,
                                   BatchTransport& transport, const fs::path& journal_path) {
  if (config.batch_size < 1 || config.window < 1) {
    throw Error(ErrorCode::kInvalidArgument, "batch_size and window must be at least 1");
  }
  JournalState state = replay_journal(journal_path);
  for (const auto& [id, text] : state.done) {
    if (id >= sentences.size()) {
      throw Error(ErrorCode::kMalformedRow, "journal mentions sentence " + std::to_string(id) +
                                                " beyond the input");
    }
  }
  std::vector<std::uint64_t> pending;
  for (std::uint64_t id = 0; id < sentences.size(); ++id) {
    if (!state.done.count(id)) pending.push_back(id);
  }
  std::vector<std::vector<std::uint64_t>> batches;
  for (std::size_t i = 0; i < pending.size(); i += config.batch_size) {
    const auto end = std::min(pending.size(), i + config.batch_size);
    batches.emplace_back(pending.begin() + static_cast<std::ptrdiff_t>(i),
                         pending.begin() + static_cast<std::ptrdiff_t>(end));
  }

  std::ofstream journal;
  if (!journal_path.empty()) {
    journal.open(journal_path, std::ios::binary | std::ios::app);
    if (!journal) throw Error(ErrorCode::kIo, "cannot open journal " + journal_path.string());
  }
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> requests{0};
  std::size_t ok_batches = 0;
  bool all_unreachable = true;
  std::map<std::uint64_t, TranslationSkip> skips;
  std::exception_ptr failure;

  auto worker = [&] {
    try {
      for (std::size_t b = next++; b < batches.size(); b = next++) {
        const auto& ids = batches[b];
        const std::uint64_t batch_no = state.next_batch + b;
        nlohmann::json texts = nlohmann::json::array();
        for (auto id : ids) texts.push_back(sentences[id]);
        const nlohmann::json request{
            {"texts", texts}, {"src", config.source_lang}, {"tgt", config.target_lang}};
        auto attempt = post_with_retries(
            transport, request, "batch-" + std::to_string(batch_no), config.retry, requests,
            [&](const nlohmann::json& body) {
              if (!body.is_object() || !body.contains("translations") ||
                  !body["translations"].is_array() || body["translations"].size() != ids.size()) {
                throw Error(ErrorCode::kBadResponse, "expected " + std::to_string(ids.size()) +
                                                         " translations");
              }
              for (const auto& t : body["translations"]) {
                if (!t.is_string()) throw Error(ErrorCode::kBadResponse, "translation is not a string");
              }
            });
        nlohmann::json record{{"batch", batch_no}, {"ids", ids}};
        if (!attempt.error) {
          record["status"] = "ok";
          record["translations"] = attempt.body["translations"];
        } else {
          record["status"] = "skipped";
          record["error"] = attempt.error->what();
        }
        std::lock_guard<std::mutex> lock(mu);
        if (journal.is_open()) {
          journal << record.dump() << '\n';
          journal.flush();
          if (!journal) throw Error(ErrorCode::kIo, "journal write failed");
        }
        if (!attempt.error) {
          ++ok_batches;
          for (std::size_t k = 0; k < ids.size(); ++k) {
            state.done[ids[k]] = attempt.body["translations"][k].get<std::string>();
            state.skipped.erase(ids[k]);
          }
        } else {
          if (attempt.error->code() != ErrorCode::kEndpointUnreachable) all_unreachable = false;
          for (auto id : ids) state.skipped[id] = {batch_no, attempt.error->what()};
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
      next = batches.size();
    }
  };

  const auto threads_wanted = std::min<std::size_t>(static_cast<std::size_t>(config.window), batches.size());
  if (threads_wanted <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < threads_wanted; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  if (!batches.empty() && ok_batches == 0 && all_unreachable) {
    throw Error(ErrorCode::kEndpointUnreachable,
                "no batch reached the translation endpoint; " + std::to_string(batches.size()) +
                    " batches journaled as skipped");
  }

  TranslationResult result;
  result.requests = requests;
  result.resumed = sentences.size() - pending.size();
  result.corpus.kind = CorpusKind::kParallel;
  for (std::uint64_t id = 0; id < sentences.size(); ++id) {
    const auto it = state.done.find(id);
    if (it != state.done.end()) result.corpus.pairs.push_back(make_pair(it->second, sentences[id], id));
  }
  for (const auto& [id, info] : state.skipped) {
    auto& skip = skips[info.first];
    skip.batch = info.first;
    skip.ids.push_back(id);
    skip.error = info.second;
  }
  for (auto& [batch, skip] : skips) result.skipped.push_back(std::move(skip));
  return result;
}

TranslationResult translate_corpus(const Corpus& monolingual, const TranslatorClientConfig& config,
                                   BatchTransport& transport, const fs::path& journal) {
  std::vector<std::string> sentences;
  sentences.reserve(monolingual.sentences.size());
  for (const auto& s : monolingual.sentences) sentences.push_back(s.raw);
  auto result = translate_corpus(sentences, config, transport, journal);
  result.corpus.name = monolingual.name;
  return result;
}

ScorerClient::ScorerClient(TranslatorClientConfig config, BatchTransport& transport, std::string name)
    : config_(std::move(config)), transport_(transport), name_(std::move(name)) {
  if (config_.batch_size < 1) throw Error(ErrorCode::kInvalidArgument, "batch_size must be at least 1");
}

std::vector<double> ScorerClient::score(const std::vector<std::string>& hypotheses,
                                        const std::vector<std::string>& references,
                                        const std::vector<std::string>& sources) {
  if (references.size() != hypotheses.size() ||
      (!sources.empty() && sources.size() != hypotheses.size())) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(hypotheses.size()) + " hypotheses, " +
                    std::to_string(references.size()) + " references, " +
                    std::to_string(sources.size()) + " sources");
  }
  std::vector<double> scores;
  scores.reserve(hypotheses.size());
  std::atomic<std::size_t> requests{0};
  for (std::size_t i = 0, b = 0; i < hypotheses.size(); i += config_.batch_size, ++b) {
    const auto end = std::min(hypotheses.size(), i + config_.batch_size);
    auto slice = [&](const std::vector<std::string>& v) {
      nlohmann::json out = nlohmann::json::array();
      for (std::size_t k = i; k < end; ++k) out.push_back(v.empty() ? std::string() : v[k]);
      return out;
    };
    const nlohmann::json request{{"hypotheses", slice(hypotheses)},
                                 {"references", slice(references)},
                                 {"sources", slice(sources)}};
    auto attempt = post_with_retries(
        transport_, request, "score-" + std::to_string(b), config_.retry, requests,
        [&](const nlohmann::json& body) {
          if (!body.is_object() || !body.contains("scores") || !body["scores"].is_array() ||
              body["scores"].size() != end - i) {
            throw Error(ErrorCode::kBadResponse, "expected " + std::to_string(end - i) + " scores");
          }
          for (const auto& s : body["scores"]) {
            if (!s.is_number()) throw Error(ErrorCode::kBadResponse, "score is not a number");
          }
        });
    if (attempt.error) {
      if (attempt.error->code() == ErrorCode::kEndpointUnreachable) throw *attempt.error;
      throw Error(ErrorCode::kPartialBatchFailure,
                  "scoring batch " + std::to_string(b) + " failed: " + attempt.error->what());
    }
    for (const auto& s : attempt.body["scores"]) scores.push_back(s.get<double>());
  }
  return scores;
}

std::vector<double> external_score(const fs::path& hyp_file, const fs::path& ref_file,
                                   const fs::path& src_file, const TranslatorClientConfig& config,
                                   BatchTransport& transport) {
  const auto hyps = read_lines(hyp_file);
  const auto refs = read_lines(ref_file);
  const auto srcs = src_file.empty() ? std::vector<std::string>{} : read_lines(src_file);
  ScorerClient client(config, transport);
  return client.score(hyps, refs, srcs);
}

}  // namespace cswitch

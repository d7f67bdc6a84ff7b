// Copyright 2026 The Credomain Authors
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

#ifndef CREDOMAIN_TAXONOMY_CLIENT_HPP_
#define CREDOMAIN_TAXONOMY_CLIENT_HPP_

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace credomain {

// Scores must exceed this value (strictly) to be kept.
inline constexpr double kConfidenceThreshold = 0.4;
// The classifier reports at most this many taxonomies per post.
inline constexpr std::size_t kMaxTaxonomies = 3;

struct TaxonomyLabel {
  std::string path;       // "/society/work/unions"
  double score = 0.0;     // [0, 1]
  std::string confident;  // "yes" | "no" | "unknown"

  friend bool operator==(const TaxonomyLabel&, const TaxonomyLabel&) = default;
};

struct ExternalEntity {
  std::string surface;
  std::string entity_type;

  friend bool operator==(const ExternalEntity&, const ExternalEntity&) = default;
};

struct ClassifierResponse {
  std::string post_id;
  std::vector<TaxonomyLabel> taxonomies;  // at most kMaxTaxonomies
  std::vector<ExternalEntity> entities;
};

bool is_valid_taxonomy_path(std::string_view path);

// Throws MalformedPath for a bad path and ValidationError for a bad score
// or flag.
TaxonomyLabel make_taxonomy_label(std::string path, double score,
                                  std::string confident);

// Keeps labels scoring strictly above kConfidenceThreshold whose confident
// flag is not "no". Order is preserved.
std::vector<TaxonomyLabel> filter_confident(const std::vector<TaxonomyLabel>& labels);

// First path segment. Throws MalformedPath.
std::string top_level_domain(std::string_view path);

// Parses the response object shared by the fixture file and the HTTP reply
// (the "id" key is optional). More than kMaxTaxonomies labels are truncated
// to the best-scoring ones.
ClassifierResponse response_from_json(const nlohmann::json& j,
                                      std::string post_id);
nlohmann::json response_to_json(const ClassifierResponse& response,
                                bool include_id = true);

class TaxonomyClient {
 public:
  virtual ~TaxonomyClient() = default;
  virtual ClassifierResponse classify(const std::string& post_id,
                                      const std::string& text) const = 0;
};

// Replays recorded responses keyed by post id. Immutable after load.
class FixtureTaxonomyClient : public TaxonomyClient {
 public:
  explicit FixtureTaxonomyClient(std::map<std::string, ClassifierResponse> responses)
      : responses_(std::move(responses)) {}

  // JSON Lines, one response object per line. Throws DataError with the
  // line number on malformed input.
  static FixtureTaxonomyClient from_jsonl(std::string_view text,
                                          const std::string& source = "<fixture>");
  static FixtureTaxonomyClient load(const std::filesystem::path& path);

  // Throws MissingFixture.
  ClassifierResponse classify(const std::string& post_id,
                              const std::string& text) const override;

  std::size_t size() const { return responses_.size(); }

 private:
  std::map<std::string, ClassifierResponse> responses_;
};

struct HttpClientConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string path = "/classify";
  int max_attempts = 3;
  std::chrono::milliseconds timeout{5000};
  std::chrono::milliseconds retry_backoff{100};
};

// POSTs {"text": ...} and maps the reply. Each call opens its own
// connection, so concurrent calls need no coordination.
class HttpTaxonomyClient : public TaxonomyClient {
 public:
  explicit HttpTaxonomyClient(HttpClientConfig config) : config_(std::move(config)) {}

  // Throws TransportError after config.max_attempts failed attempts.
  ClassifierResponse classify(const std::string& post_id,
                              const std::string& text) const override;

 private:
  HttpClientConfig config_;
};

}  // namespace credomain

#endif  // CREDOMAIN_TAXONOMY_CLIENT_HPP_

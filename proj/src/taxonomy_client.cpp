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

#include "credomain/taxonomy_client.hpp"

#include <algorithm>
#include <thread>

#include "credomain/errors.hpp"
#include "credomain/ontology.hpp"
#include "credomain/text_normalizer.hpp"
#include "httplib.h"

namespace credomain {

using nlohmann::json;

bool is_valid_taxonomy_path(std::string_view path) {
  if (path.size() < 2 || path.front() != '/') return false;
  auto end = path.find('/', 1);
  return end != 1;  // first segment non-empty
}

TaxonomyLabel make_taxonomy_label(std::string path, double score,
                                  std::string confident) {
  if (!is_valid_taxonomy_path(path)) throw MalformedPath(path);
  if (!(score >= 0.0 && score <= 1.0))
    throw ValidationError("taxonomy score " + std::to_string(score) +
                          " outside [0, 1]");
  if (confident != "yes" && confident != "no" && confident != "unknown")
    throw ValidationError("confident flag must be yes, no or unknown, got '" +
                          confident + "'");
  return TaxonomyLabel{fold_case(path), score, std::move(confident)};
}

std::vector<TaxonomyLabel> filter_confident(const std::vector<TaxonomyLabel>& labels) {
  std::vector<TaxonomyLabel> kept;
  std::copy_if(labels.begin(), labels.end(), std::back_inserter(kept),
               [](const TaxonomyLabel& l) {
                 return l.score > kConfidenceThreshold && l.confident != "no";
               });
  return kept;
}

std::string top_level_domain(std::string_view path) {
  if (!is_valid_taxonomy_path(path)) throw MalformedPath(std::string(path));
  auto end = path.find('/', 1);
  return fold_case(path.substr(1, end == std::string_view::npos ? end : end - 1));
}

ClassifierResponse response_from_json(const json& j, std::string post_id) {
  if (!j.is_object()) throw ValidationError("classifier response is not an object");
  ClassifierResponse r;
  r.post_id = std::move(post_id);
  for (const auto& t : j.value("taxonomies", json::array())) {
    r.taxonomies.push_back(make_taxonomy_label(t.at("path").get<std::string>(),
                                               t.at("score").get<double>(),
                                               t.value("confident", "unknown")));
  }
  if (r.taxonomies.size() > kMaxTaxonomies) {
    std::stable_sort(r.taxonomies.begin(), r.taxonomies.end(),
                     [](const auto& a, const auto& b) { return a.score > b.score; });
    r.taxonomies.resize(kMaxTaxonomies);
  }
  for (const auto& e : j.value("entities", json::array())) {
    auto surface = e.at("surface").get<std::string>();
    if (surface.empty()) throw ValidationError("external entity with empty surface");
    r.entities.push_back({std::move(surface), e.value("type", "")});
  }
  return r;
}

json response_to_json(const ClassifierResponse& response, bool include_id) {
  json j = json::object();
  if (include_id) j["id"] = response.post_id;
  json taxonomies = json::array();
  for (const auto& t : response.taxonomies)
    taxonomies.push_back({{"path", t.path}, {"score", t.score}, {"confident", t.confident}});
  json entities = json::array();
  for (const auto& e : response.entities)
    entities.push_back({{"surface", e.surface}, {"type", e.entity_type}});
  j["taxonomies"] = std::move(taxonomies);
  j["entities"] = std::move(entities);
  return j;
}

FixtureTaxonomyClient FixtureTaxonomyClient::from_jsonl(std::string_view text,
                                                        const std::string& source) {
  std::map<std::string, ClassifierResponse> responses;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      json j = json::parse(line);
      auto id = j.at("id").get<std::string>();
      if (id.empty()) throw ValidationError("empty id");
      if (responses.count(id)) throw ValidationError("duplicate id '" + id + "'");
      responses.emplace(id, response_from_json(j, id));
    } catch (const json::exception& e) {
      throw DataError(source + ":" + std::to_string(line_no) + ": " + e.what());
    } catch (const Error& e) {
      throw DataError(source + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return FixtureTaxonomyClient(std::move(responses));
}

FixtureTaxonomyClient FixtureTaxonomyClient::load(const std::filesystem::path& path) {
  return from_jsonl(read_file(path), path.string());
}

ClassifierResponse FixtureTaxonomyClient::classify(const std::string& post_id,
                                                   const std::string&) const {
  auto it = responses_.find(post_id);
  if (it == responses_.end()) throw MissingFixture(post_id);
  return it->second;
}

ClassifierResponse HttpTaxonomyClient::classify(const std::string& post_id,
                                                const std::string& text) const {
  const std::string body = json{{"text", text}}.dump();
  std::string last_error;
  for (int attempt = 1; attempt <= std::max(1, config_.max_attempts); ++attempt) {
    if (attempt > 1) std::this_thread::sleep_for(config_.retry_backoff * (attempt - 1));
    httplib::Client client(config_.host, config_.port);
    auto timeout_s = std::chrono::duration_cast<std::chrono::seconds>(config_.timeout);
    auto timeout_us = std::chrono::duration_cast<std::chrono::microseconds>(
        config_.timeout - timeout_s);
    client.set_connection_timeout(timeout_s.count(), timeout_us.count());
    client.set_read_timeout(timeout_s.count(), timeout_us.count());
    auto res = client.Post(config_.path, body, "application/json");
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status != 200) {
      last_error = "HTTP status " + std::to_string(res->status);
      if (res->status < 500) break;  // client errors are not retried
      continue;
    }
    try {
      return response_from_json(json::parse(res->body), post_id);
    } catch (const json::exception& e) {
      throw TransportError("malformed classifier reply for '" + post_id + "': " + e.what());
    } catch (const ValidationError& e) {
      throw TransportError("invalid classifier reply for '" + post_id + "': " + e.what());
    }
  }
  throw TransportError("classifier request for '" + post_id + "' failed: " + last_error);
}

}  // namespace credomain

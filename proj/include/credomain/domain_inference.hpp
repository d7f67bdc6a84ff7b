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

#ifndef CREDOMAIN_DOMAIN_INFERENCE_HPP_
#define CREDOMAIN_DOMAIN_INFERENCE_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "credomain/ontology.hpp"
#include "credomain/taxonomy_client.hpp"
#include "json.hpp"

namespace credomain {

inline constexpr std::int64_t kDefaultMinPosts = 10;

struct UserDomainHistory {
  std::string user_id;
  std::map<std::string, std::int64_t> counts;
  // Domains fixed for the user up front (e.g. a public figure); when set,
  // selection uses them instead of the ranking.
  std::vector<std::string> pinned;

  std::int64_t total() const;
};

// domain_name -> ontology.
class OntologyRegistry {
 public:
  // Throws ValidationError when the domain is already registered.
  void add(std::shared_ptr<const Ontology> ontology);
  const Ontology* find(const std::string& domain) const;
  std::shared_ptr<const Ontology> find_shared(const std::string& domain) const;
  // In registration order.
  const std::vector<std::shared_ptr<const Ontology>>& ontologies() const { return order_; }
  bool empty() const { return order_.empty(); }

 private:
  std::map<std::string, std::shared_ptr<const Ontology>> by_domain_;
  std::vector<std::shared_ptr<const Ontology>> order_;
};

// Start-up stage: maps each (already confidence-filtered) label to its top
// level domain, dedups in order, counts each domain once for this post.
std::vector<std::string> startup_infer(UserDomainHistory& history,
                                       const std::vector<TaxonomyLabel>& labels);

// Adds one observation per distinct domain.
void record_domains(UserDomainHistory& history, const std::vector<std::string>& domains);

// Descending count; ties by ascending domain name.
std::vector<std::pair<std::string, std::int64_t>> rank_domains(
    const UserDomainHistory& history);

// Learning stage: the first k ranked (or pinned) domains that have a
// registered ontology. Unregistered domains do not count toward k.
std::vector<std::shared_ptr<const Ontology>> select_ontologies(
    const UserDomainHistory& history, const OntologyRegistry& registry, std::size_t k);

bool is_learning_ready(const UserDomainHistory& history,
                       std::int64_t min_posts = kDefaultMinPosts);

// Per-user histories with reader/writer locking; updates to one store are
// serialized.
class HistoryStore {
 public:
  HistoryStore() = default;
  // Moving a store that other threads are using is not supported.
  HistoryStore(HistoryStore&& other) noexcept : histories_(std::move(other.histories_)) {}
  HistoryStore& operator=(HistoryStore&& other) noexcept {
    histories_ = std::move(other.histories_);
    return *this;
  }

  // {user_id: {"counts": {domain: int}, "pinned": [domain, ...]}}
  static HistoryStore from_json(const nlohmann::json& j);
  static HistoryStore load(const std::filesystem::path& path);
  nlohmann::json to_json() const;
  void save(const std::filesystem::path& path) const;

  // Copy of the user's history (empty when unknown).
  UserDomainHistory get(const std::string& user_id) const;
  void update(const std::string& user_id,
              const std::function<void(UserDomainHistory&)>& fn);
  std::vector<std::string> users() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, UserDomainHistory> histories_;
};

}  // namespace credomain

#endif  // CREDOMAIN_DOMAIN_INFERENCE_HPP_

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

#include "credomain/domain_inference.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <numeric>

#include "credomain/errors.hpp"

namespace credomain {

using nlohmann::json;

std::int64_t UserDomainHistory::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0},
                         [](std::int64_t acc, const auto& kv) { return acc + kv.second; });
}

void OntologyRegistry::add(std::shared_ptr<const Ontology> ontology) {
  const std::string& domain = ontology->domain_name();
  if (by_domain_.count(domain))
    throw ValidationError("domain '" + domain + "' registered twice");
  by_domain_.emplace(domain, ontology);
  order_.push_back(std::move(ontology));
}

const Ontology* OntologyRegistry::find(const std::string& domain) const {
  auto it = by_domain_.find(domain);
  return it == by_domain_.end() ? nullptr : it->second.get();
}

std::shared_ptr<const Ontology> OntologyRegistry::find_shared(const std::string& domain) const {
  auto it = by_domain_.find(domain);
  return it == by_domain_.end() ? nullptr : it->second;
}

void record_domains(UserDomainHistory& history, const std::vector<std::string>& domains) {
  std::vector<std::string> seen;
  for (const auto& d : domains) {
    if (std::find(seen.begin(), seen.end(), d) != seen.end()) continue;
    seen.push_back(d);
    ++history.counts[d];
  }
}

std::vector<std::string> startup_infer(UserDomainHistory& history,
                                       const std::vector<TaxonomyLabel>& labels) {
  std::vector<std::string> domains;
  for (const auto& label : labels) {
    std::string d = top_level_domain(label.path);
    if (std::find(domains.begin(), domains.end(), d) == domains.end())
      domains.push_back(std::move(d));
  }
  record_domains(history, domains);
  return domains;
}

std::vector<std::pair<std::string, std::int64_t>> rank_domains(
    const UserDomainHistory& history) {
  std::vector<std::pair<std::string, std::int64_t>> ranked(history.counts.begin(),
                                                           history.counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return ranked;
}

std::vector<std::shared_ptr<const Ontology>> select_ontologies(
    const UserDomainHistory& history, const OntologyRegistry& registry, std::size_t k) {
  std::vector<std::string> candidates;
  if (!history.pinned.empty()) {
    candidates = history.pinned;
  } else {
    for (auto& [domain, count] : rank_domains(history)) candidates.push_back(domain);
  }
  std::vector<std::shared_ptr<const Ontology>> selected;
  for (const auto& domain : candidates) {
    if (selected.size() >= k) break;
    auto o = registry.find_shared(domain);
    if (!o) continue;
    if (std::find(selected.begin(), selected.end(), o) == selected.end())
      selected.push_back(std::move(o));
  }
  return selected;
}

bool is_learning_ready(const UserDomainHistory& history, std::int64_t min_posts) {
  return history.total() >= min_posts;
}

HistoryStore HistoryStore::from_json(const json& j) {
  if (!j.is_object()) throw DataError("history file must hold a JSON object");
  HistoryStore store;
  for (const auto& [user, entry] : j.items()) {
    UserDomainHistory h;
    h.user_id = user;
    const json counts = entry.value("counts", json::object());
    for (const auto& [domain, count] : counts.items()) {
      auto n = count.get<std::int64_t>();
      if (n < 0) throw DataError("negative count for user '" + user + "'");
      h.counts[domain] = n;
    }
    h.pinned = entry.value("pinned", std::vector<std::string>{});
    store.histories_.emplace(user, std::move(h));
  }
  return store;
}

HistoryStore HistoryStore::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

json HistoryStore::to_json() const {
  std::shared_lock lock(mutex_);
  json j = json::object();
  for (const auto& [user, h] : histories_) {
    json entry = {{"counts", h.counts}};
    if (!h.pinned.empty()) entry["pinned"] = h.pinned;
    j[user] = std::move(entry);
  }
  return j;
}

void HistoryStore::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << to_json().dump(2) << '\n';
  if (!out) throw IoError("error writing " + path.string());
}

UserDomainHistory HistoryStore::get(const std::string& user_id) const {
  std::shared_lock lock(mutex_);
  auto it = histories_.find(user_id);
  if (it != histories_.end()) return it->second;
  return UserDomainHistory{user_id, {}, {}};
}

void HistoryStore::update(const std::string& user_id,
                          const std::function<void(UserDomainHistory&)>& fn) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = histories_.try_emplace(user_id);
  if (inserted) it->second.user_id = user_id;
  fn(it->second);
}

std::vector<std::string> HistoryStore::users() const {
  std::shared_lock lock(mutex_);
  std::vector<std::string> out;
  for (const auto& [user, h] : histories_) out.push_back(user);
  return out;
}

}  // namespace credomain

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

#ifndef CREDOMAIN_REPOSITORY_HPP_
#define CREDOMAIN_REPOSITORY_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string_view>
#include <vector>

#include "credomain/rdf.hpp"
#include "json.hpp"

namespace credomain {

// Unset positions are wildcards.
struct TriplePattern {
  std::optional<Iri> subject;
  std::optional<Iri> predicate;
  std::optional<Term> object;

  bool matches(const Triple& t) const;

  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

// Parses
//   ('PREFIX' NAME ':' <iri>)* SELECT * WHERE { term term term }
// where term is <iri>, prefix:local, ?var or "literal". Keywords are case
// insensitive and "prefix: local" (space after the colon) is read as one
// prefixed name. Throws QueryParseError or UnknownPrefix.
TriplePattern parse_query(std::string_view text);

// Embedded triple store. Stored ("base") triples have set semantics; two
// entailments are answered at query time:
//   - (a owl:sameAs b) also answers (b owl:sameAs a);
//   - (x rdf:type C) with C rdfs:subClassOf+ D answers (x rdf:type D) for
//     patterns whose predicate is bound to rdf:type.
// Readers share a lock; insert and load take it exclusively.
class Repository {
 public:
  Repository() = default;
  Repository(const Repository&) = delete;
  Repository& operator=(const Repository&) = delete;

  // Returns the number of triples not already stored.
  std::size_t insert(const std::vector<Triple>& triples);

  // Matching triples sorted by (subject, predicate, object).
  std::vector<Triple> query(const TriplePattern& pattern) const;
  std::vector<Triple> describe(const Iri& subject) const;

  std::size_t size() const;
  std::vector<Triple> base_triples() const;

  // Writes the base triples (never inferred ones) as N-Triples.
  void persist(const std::filesystem::path& path) const;
  // Replaces the content. On any error the previous content is kept.
  void load(const std::filesystem::path& path);
  void load_text(std::string_view ntriples);

 private:
  void rebuild_inferences();

  mutable std::shared_mutex mutex_;
  std::set<Triple> base_;
  // Base plus symmetric sameAs, indexed by subject.
  std::map<Iri, std::set<Triple>> visible_by_subject_;
  // Lifted rdf:type triples absent from the visible set.
  std::map<Iri, std::set<Triple>> lifted_by_subject_;
};

nlohmann::json rows_to_json(const std::vector<Triple>& rows);

}  // namespace credomain

#endif  // CREDOMAIN_REPOSITORY_HPP_

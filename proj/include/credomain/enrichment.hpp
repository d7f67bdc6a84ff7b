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

#ifndef CREDOMAIN_ENRICHMENT_HPP_
#define CREDOMAIN_ENRICHMENT_HPP_

#include <filesystem>
#include <map>
#include <set>
#include <string_view>
#include <vector>

#include "credomain/annotator.hpp"
#include "credomain/ontology.hpp"
#include "credomain/rdf.hpp"

namespace credomain {

// Instance -> equivalent IRIs in external vocabularies.
using LinkTable = std::map<Iri, std::set<Iri>>;

// Accepts only owl:sameAs statements; throws ValidationError on anything
// else or on a self link.
LinkTable link_table_from_triples(const std::vector<Triple>& triples);
LinkTable load_link_table(const std::filesystem::path& path);
// sameAs statements carried by the ontology itself.
LinkTable link_table_from_ontology(const Ontology& ontology);
void merge_link_tables(LinkTable& into, const LinkTable& from);

// onto:post/{id}, with the id percent-encoded.
Iri post_iri(std::string_view post_id);

// Type, instance-level subClassOf rows, ResolvedName, data properties and
// onto:value for an instance annotation. Throws NotAnInstance for relation
// triggers and concept mentions.
std::vector<Triple> enrich(const EntityAnnotation& annotation, const Ontology& ontology);

// One owl:sameAs triple per linked IRI, sorted.
std::vector<Triple> interlink(const Iri& instance, const LinkTable& links);

// For every instance annotation a (post, onto:mentions, instance) triple
// followed by enrich + interlink; for every relation trigger a
// (post, onto:trigger, relation) triple.
// Duplicates are dropped; first occurrence order is kept.
std::vector<Triple> enrich_post(std::string_view post_id,
                                const std::vector<EntityAnnotation>& annotations,
                                const Ontology& ontology, const LinkTable& links);

// Hierarchy edges, converse declarations and instance links, so that
// repository queries can answer schema-level questions.
std::vector<Triple> schema_triples(const Ontology& ontology);

// Typing for entities only the external classifier found:
// onto:entity/{surface} rdf:type onto:{Type} and its ResolvedName.
std::vector<Triple> external_entity_triples(const std::vector<MergedEntity>& merged);

}  // namespace credomain

#endif  // CREDOMAIN_ENRICHMENT_HPP_

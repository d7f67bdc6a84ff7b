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

#ifndef CREDOMAIN_ONTOLOGY_HPP_
#define CREDOMAIN_ONTOLOGY_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "credomain/rdf.hpp"

namespace credomain {

enum class ElementKind { kInstance, kRelationTrigger, kConcept };

std::string_view to_string(ElementKind kind);
ElementKind element_kind_from_string(std::string_view name);

struct Relation {
  Iri iri;
  std::set<std::string> trigger_forms;
  std::optional<Iri> converse;
};

struct Instance {
  Iri iri;
  Iri concept_iri;
  std::string resolved_name;
  // The onto:value form; emitted verbatim by enrichment.
  std::string primary_form;
  std::set<std::string> surface_forms;
  // Literal-valued properties other than the reserved ones, in file order.
  std::vector<std::pair<Iri, std::string>> data_properties;
  std::set<Iri> same_as;
  // rdfs:subClassOf statements made directly on the instance. They are
  // reproduced by enrichment and never treated as hierarchy edges.
  std::vector<Iri> asserted_superclasses;
};

struct InstanceLink {
  Iri subject;
  Iri relation;
  Iri object;

  friend auto operator<=>(const InstanceLink&, const InstanceLink&) = default;
  friend bool operator==(const InstanceLink&, const InstanceLink&) = default;
};

struct LexiconBinding {
  ElementKind kind;
  Iri element;

  friend auto operator<=>(const LexiconBinding&, const LexiconBinding&) = default;
  friend bool operator==(const LexiconBinding&, const LexiconBinding&) = default;
};

// Folded surface form -> bindings, ordered Instance, RelationTrigger,
// Concept, then by IRI. The first binding is the preferred reading.
using Lexicon = std::map<std::string, std::vector<LexiconBinding>>;

// A validated domain ontology. Immutable once built, so a single instance
// may be shared across threads.
class Ontology {
 public:
  const std::string& domain_name() const { return domain_name_; }
  const std::set<Iri>& concepts() const { return concepts_; }
  // (child, parent) pairs.
  const std::set<std::pair<Iri, Iri>>& subclass_edges() const { return subclass_edges_; }
  const std::map<Iri, Relation>& relations() const { return relations_; }
  const std::map<Iri, Instance>& instances() const { return instances_; }
  const std::set<InstanceLink>& instance_links() const { return instance_links_; }
  const std::map<Iri, std::set<std::string>>& concept_forms() const { return concept_forms_; }
  const Lexicon& lexicon() const { return lexicon_; }
  // Token count of the longest lexicon key.
  std::size_t max_form_tokens() const { return max_form_tokens_; }

  bool has_concept(const Iri& iri) const { return concepts_.count(iri) > 0; }
  const Instance* find_instance(const Iri& iri) const;
  const Relation* find_relation(const Iri& iri) const;

 private:
  friend Ontology build_ontology(const std::vector<Triple>&, std::string);

  std::string domain_name_;
  std::set<Iri> concepts_;
  std::set<std::pair<Iri, Iri>> subclass_edges_;
  std::map<Iri, Relation> relations_;
  std::map<Iri, Instance> instances_;
  std::set<InstanceLink> instance_links_;
  std::map<Iri, std::set<std::string>> concept_forms_;
  Lexicon lexicon_;
  std::size_t max_form_tokens_ = 0;
};

// Assembles and validates an ontology from the fixture vocabulary:
//   C rdf:type owl:Class                 concept
//   A rdfs:subClassOf B                  hierarchy edge (A, B become concepts)
//   R rdf:type owl:ObjectProperty        relation
//   R onto:trigger "form"                relation trigger form
//   R owl:inverseOf S                    converse pair
//   I rdf:type C                         instance of concept C
//   I onto:ResolvedName / onto:value / onto:alias "..."
//   I owl:sameAs <iri>
//   I R J                                instance link through relation R
//   X onto:domainTag "politics"          domain name when none is given
// Any other literal on an instance becomes a data property. Throws
// ValidationError on a subclass cycle, an instance typed by an unknown
// concept, or an inconsistent converse declaration.
Ontology build_ontology(const std::vector<Triple>& triples,
                        std::string domain_name);

// Reads an N-Triples file and builds it. Throws IoError, ParseError (with
// the path prepended), or ValidationError.
Ontology load_ontology(const std::filesystem::path& path,
                       std::string domain_name = "");

// Transitive superclasses of `cls` in breadth-first order, excluding
// `cls`. Throws UnknownConcept.
std::vector<Iri> superclasses(const Ontology& ontology, const Iri& cls);

const Lexicon& lexicon(const Ontology& ontology);

// Surface-form normalization shared by the lexicon and the annotator:
// cleansed, case-folded, single-spaced.
std::string normalize_form(std::string_view form);

std::string read_file(const std::filesystem::path& path);

}  // namespace credomain

#endif  // CREDOMAIN_ONTOLOGY_HPP_

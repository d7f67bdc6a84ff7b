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

#ifndef CREDOMAIN_ANNOTATOR_HPP_
#define CREDOMAIN_ANNOTATOR_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "credomain/ontology.hpp"
#include "credomain/taxonomy_client.hpp"
#include "credomain/text_normalizer.hpp"

namespace credomain {

struct EntityAnnotation {
  std::size_t start = 0;  // byte offsets into CleanText::text
  std::size_t end = 0;
  std::string surface;
  ElementKind kind = ElementKind::kInstance;
  Iri element;
  // The instance's concept, the relation itself for triggers, or the
  // concept for concept mentions.
  std::optional<Iri> concept_iri;

  // Local name of `concept`, e.g. "Politician" or "voteFor".
  std::string concept_name() const;

  friend bool operator==(const EntityAnnotation&, const EntityAnnotation&) = default;
};

enum class EntitySource { kExternal, kOntology, kBoth };

std::string_view to_string(EntitySource source);
EntitySource entity_source_from_string(std::string_view name);

struct MergedEntity {
  std::string surface;
  EntitySource source = EntitySource::kExternal;
  // Ontology concept name when the ontology matched, else the external type.
  std::string type_label;
  // The classifier's own type when it also extracted the surface.
  std::string external_type;

  friend bool operator==(const MergedEntity&, const MergedEntity&) = default;
};

// Post categories by (classifier assigns the domain, ontology annotates).
enum class Category : int {
  kClassifiedAndAnnotated = 1,
  kAnnotatedOnly = 2,
  kClassifiedOnly = 3,
  kNeither = 4,
};

// Gazetteer matching: scans tokens left to right and at each position takes
// the longest token n-gram present in the lexicon (case-insensitive).
// Matches never overlap. When a form binds several elements the preferred
// lexicon binding wins (instance, then relation trigger, then concept).
std::vector<EntityAnnotation> annotate(const CleanText& text, const Ontology& ontology);

// Union by case-insensitive surface, sorted by folded surface. Ontology
// concept names replace the classifier's types on shared surfaces.
std::vector<MergedEntity> merge_entities(const std::vector<ExternalEntity>& external,
                                         const std::vector<EntityAnnotation>& annotations);

// Top-level domains of the taxonomies, deduplicated, plus the ontology's
// domain when it annotated anything.
std::vector<std::string> classify_post_domains(const std::vector<TaxonomyLabel>& taxonomies,
                                               const std::vector<EntityAnnotation>& annotations,
                                               const Ontology& ontology);

// True iff some taxonomy's top-level segment equals `domain`.
bool classifier_says_domain(const std::vector<TaxonomyLabel>& taxonomies,
                            const std::string& domain);

Category category_of(bool classifier_says_domain, bool ontology_annotates);

}  // namespace credomain

#endif  // CREDOMAIN_ANNOTATOR_HPP_

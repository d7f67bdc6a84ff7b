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

#include "credomain/annotator.hpp"

#include <algorithm>
#include <map>

#include "credomain/errors.hpp"

namespace credomain {

std::string EntityAnnotation::concept_name() const {
  return concept_iri ? concept_iri->local_name() : element.local_name();
}

std::string_view to_string(EntitySource source) {
  switch (source) {
    case EntitySource::kExternal: return "external";
    case EntitySource::kOntology: return "ontology";
    case EntitySource::kBoth: return "both";
  }
  return "external";
}

EntitySource entity_source_from_string(std::string_view name) {
  if (name == "external") return EntitySource::kExternal;
  if (name == "ontology") return EntitySource::kOntology;
  if (name == "both") return EntitySource::kBoth;
  throw DataError("unknown entity source '" + std::string(name) + "'");
}

std::vector<EntityAnnotation> annotate(const CleanText& text, const Ontology& ontology) {
  const Lexicon& lex = ontology.lexicon();
  const auto& tokens = text.tokens;
  std::vector<std::string> folded;
  folded.reserve(tokens.size());
  for (const auto& t : tokens) folded.push_back(fold_case(t.text));

  std::vector<EntityAnnotation> out;
  const std::size_t max_n = ontology.max_form_tokens();
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t matched = 0;
    const LexiconBinding* binding = nullptr;
    for (std::size_t n = std::min(max_n, tokens.size() - i); n >= 1; --n) {
      std::string key = folded[i];
      for (std::size_t k = 1; k < n; ++k) key += ' ' + folded[i + k];
      auto it = lex.find(key);
      if (it != lex.end() && !it->second.empty()) {
        matched = n;
        binding = &it->second.front();
        break;
      }
    }
    if (matched == 0) {
      ++i;
      continue;
    }
    const Token& first = tokens[i];
    const Token& last = tokens[i + matched - 1];
    std::optional<Iri> concept_iri;
    switch (binding->kind) {
      case ElementKind::kInstance:
        concept_iri = ontology.instances().at(binding->element).concept_iri;
        break;
      case ElementKind::kRelationTrigger:
      case ElementKind::kConcept:
        concept_iri = binding->element;
        break;
    }
    const std::size_t start = first.offset;
    const std::size_t end = last.offset + last.text.size();
    EntityAnnotation ann{start,
                         end,
                         text.text.substr(start, end - start),
                         binding->kind,
                         binding->element,
                         std::move(concept_iri)};
    out.push_back(std::move(ann));
    i += matched;
  }
  return out;
}

std::vector<MergedEntity> merge_entities(const std::vector<ExternalEntity>& external,
                                         const std::vector<EntityAnnotation>& annotations) {
  struct Group {
    std::vector<const ExternalEntity*> external;
    std::vector<const EntityAnnotation*> annotations;
  };
  std::map<std::string, Group> groups;
  for (const auto& e : external) groups[fold_case(e.surface)].external.push_back(&e);
  for (const auto& a : annotations) groups[fold_case(a.surface)].annotations.push_back(&a);

  std::vector<MergedEntity> merged;
  for (const auto& [key, g] : groups) {
    MergedEntity m;
    // Smallest surface/type among duplicates keeps the result independent
    // of input order.
    auto min_external = [&g](auto field) {
      std::string best;
      for (const auto* e : g.external) {
        const std::string& v = (*e).*field;
        if (best.empty() || v < best) best = v;
      }
      return best;
    };
    if (!g.external.empty()) {
      m.surface = min_external(&ExternalEntity::surface);
      m.external_type = min_external(&ExternalEntity::entity_type);
    }
    if (!g.annotations.empty()) {
      if (m.surface.empty()) {
        m.surface = g.annotations.front()->surface;
        for (const auto* a : g.annotations) m.surface = std::min(m.surface, a->surface);
      }
      m.type_label = g.annotations.front()->concept_name();
      m.source = g.external.empty() ? EntitySource::kOntology : EntitySource::kBoth;
    } else {
      m.type_label = m.external_type;
      m.external_type.clear();
      m.source = EntitySource::kExternal;
    }
    merged.push_back(std::move(m));
  }
  return merged;
}

std::vector<std::string> classify_post_domains(const std::vector<TaxonomyLabel>& taxonomies,
                                               const std::vector<EntityAnnotation>& annotations,
                                               const Ontology& ontology) {
  std::vector<std::string> domains;
  auto add = [&domains](std::string d) {
    if (std::find(domains.begin(), domains.end(), d) == domains.end())
      domains.push_back(std::move(d));
  };
  for (const auto& t : taxonomies) add(top_level_domain(t.path));
  if (!annotations.empty()) add(ontology.domain_name());
  return domains;
}

bool classifier_says_domain(const std::vector<TaxonomyLabel>& taxonomies,
                            const std::string& domain) {
  return std::any_of(taxonomies.begin(), taxonomies.end(), [&](const TaxonomyLabel& t) {
    return top_level_domain(t.path) == domain;
  });
}

Category category_of(bool classifier_says_domain, bool ontology_annotates) {
  if (classifier_says_domain) {
    return ontology_annotates ? Category::kClassifiedAndAnnotated
                              : Category::kClassifiedOnly;
  }
  return ontology_annotates ? Category::kAnnotatedOnly : Category::kNeither;
}

}  // namespace credomain

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

#include "credomain/enrichment.hpp"

#include <algorithm>
#include <cctype>

#include "credomain/errors.hpp"

namespace credomain {
namespace {

std::string percent_encode(std::string_view s, bool spaces_as_underscore) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (char ch : s) {
    auto c = static_cast<unsigned char>(ch);
    if (std::isalnum(c) || c == '-' || c == '.' || c == '_' || c == '~') {
      out.push_back(ch);
    } else if (c == ' ' && spaces_as_underscore) {
      out.push_back('_');
    } else {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0xF]);
    }
  }
  return out;
}

void append_unique(std::vector<Triple>& out, std::set<Triple>& seen,
                   const std::vector<Triple>& triples) {
  for (const auto& t : triples)
    if (seen.insert(t).second) out.push_back(t);
}

}  // namespace

LinkTable link_table_from_triples(const std::vector<Triple>& triples) {
  LinkTable table;
  for (const auto& t : triples) {
    if (t.predicate != vocab::owl_same_as())
      throw ValidationError("link table may only contain owl:sameAs, found <" +
                            t.predicate.str() + ">");
    if (!t.object.is_iri())
      throw ValidationError("owl:sameAs object of <" + t.subject.str() + "> is a literal");
    if (t.object.iri() == t.subject)
      throw ValidationError("instance <" + t.subject.str() + "> linked to itself");
    table[t.subject].insert(t.object.iri());
  }
  return table;
}

LinkTable load_link_table(const std::filesystem::path& path) {
  try {
    return link_table_from_triples(parse_ntriples(read_file(path)));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.reason());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

LinkTable link_table_from_ontology(const Ontology& ontology) {
  LinkTable table;
  for (const auto& [iri, inst] : ontology.instances())
    if (!inst.same_as.empty()) table[iri].insert(inst.same_as.begin(), inst.same_as.end());
  return table;
}

void merge_link_tables(LinkTable& into, const LinkTable& from) {
  for (const auto& [iri, targets] : from) into[iri].insert(targets.begin(), targets.end());
}

Iri post_iri(std::string_view post_id) {
  return vocab::onto("post/" + percent_encode(post_id, false));
}

std::vector<Triple> enrich(const EntityAnnotation& annotation, const Ontology& ontology) {
  if (annotation.kind != ElementKind::kInstance)
    throw NotAnInstance("annotation '" + annotation.surface + "' is a " +
                        std::string(to_string(annotation.kind)) + ", not an instance");
  const Instance* inst = ontology.find_instance(annotation.element);
  if (!inst)
    throw NotAnInstance("<" + annotation.element.str() + "> is not an instance of the " +
                        ontology.domain_name() + " ontology");

  const Iri& s = inst->iri;
  std::vector<Triple> out;
  out.push_back({s, vocab::rdf_type(), inst->concept_iri});
  for (const auto& super : inst->asserted_superclasses)
    out.push_back({s, vocab::rdfs_sub_class_of(), super});
  out.push_back({s, vocab::onto_resolved_name(), Term::literal(inst->resolved_name)});
  for (const auto& [p, v] : inst->data_properties) out.push_back({s, p, Term::literal(v)});
  out.push_back({s, vocab::onto_value(), Term::literal(inst->primary_form)});
  return out;
}

std::vector<Triple> interlink(const Iri& instance, const LinkTable& links) {
  std::vector<Triple> out;
  auto it = links.find(instance);
  if (it == links.end()) return out;
  for (const auto& target : it->second)  // std::set: already sorted
    out.push_back({instance, vocab::owl_same_as(), target});
  return out;
}

std::vector<Triple> enrich_post(std::string_view post_id,
                                const std::vector<EntityAnnotation>& annotations,
                                const Ontology& ontology, const LinkTable& links) {
  std::vector<Triple> out;
  std::set<Triple> seen;
  std::set<Iri> done;
  for (const auto& a : annotations) {
    if (a.kind == ElementKind::kInstance) {
      if (!done.insert(a.element).second) continue;
      append_unique(out, seen, {{post_iri(post_id), vocab::onto_mentions(), a.element}});
      append_unique(out, seen, enrich(a, ontology));
      append_unique(out, seen, interlink(a.element, links));
    } else if (a.kind == ElementKind::kRelationTrigger) {
      append_unique(out, seen, {{post_iri(post_id), vocab::onto_trigger(), a.element}});
    }
  }
  return out;
}

std::vector<Triple> schema_triples(const Ontology& ontology) {
  std::vector<Triple> out;
  for (const auto& c : ontology.concepts()) out.push_back({c, vocab::rdf_type(), vocab::owl_class()});
  for (const auto& [child, parent] : ontology.subclass_edges())
    out.push_back({child, vocab::rdfs_sub_class_of(), parent});
  for (const auto& [iri, rel] : ontology.relations()) {
    out.push_back({iri, vocab::rdf_type(), vocab::owl_object_property()});
    if (rel.converse) out.push_back({iri, vocab::owl_inverse_of(), *rel.converse});
  }
  for (const auto& link : ontology.instance_links())
    out.push_back({link.subject, link.relation, link.object});
  return out;
}

std::vector<Triple> external_entity_triples(const std::vector<MergedEntity>& merged) {
  std::vector<Triple> out;
  for (const auto& m : merged) {
    if (m.source != EntitySource::kExternal || m.type_label.empty()) continue;
    Iri entity = vocab::onto("entity/" + percent_encode(m.surface, true));
    out.push_back({entity, vocab::rdf_type(), vocab::onto(percent_encode(m.type_label, true))});
    out.push_back({entity, vocab::onto_resolved_name(), Term::literal(m.surface)});
  }
  return out;
}

}  // namespace credomain

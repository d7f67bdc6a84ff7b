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

#include "credomain/ontology.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

#include "credomain/errors.hpp"
#include "credomain/text_normalizer.hpp"

namespace credomain {

std::string_view to_string(ElementKind kind) {
  switch (kind) {
    case ElementKind::kInstance: return "instance";
    case ElementKind::kRelationTrigger: return "relation";
    case ElementKind::kConcept: return "concept";
  }
  return "instance";
}

ElementKind element_kind_from_string(std::string_view name) {
  if (name == "instance") return ElementKind::kInstance;
  if (name == "relation") return ElementKind::kRelationTrigger;
  if (name == "concept") return ElementKind::kConcept;
  throw DataError("unknown element kind '" + std::string(name) + "'");
}

const Instance* Ontology::find_instance(const Iri& iri) const {
  auto it = instances_.find(iri);
  return it == instances_.end() ? nullptr : &it->second;
}

const Relation* Ontology::find_relation(const Iri& iri) const {
  auto it = relations_.find(iri);
  return it == relations_.end() ? nullptr : &it->second;
}

std::string normalize_form(std::string_view form) {
  return fold_case(clean_text(form).text);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return buffer.str();
}

namespace {

bool is_builtin_type(const Iri& iri) {
  return iri == vocab::owl_class() || iri == vocab::owl_object_property() ||
         iri == vocab::owl_datatype_property() ||
         iri == vocab::owl_named_individual() || iri == vocab::owl_ontology();
}

std::string checked_form(const std::string& raw, const Iri& owner) {
  std::string form = normalize_form(raw);
  if (form.empty())
    throw ValidationError("empty surface form on <" + owner.str() + ">");
  return form;
}

std::size_t token_count(const std::string& form) {
  return static_cast<std::size_t>(std::count(form.begin(), form.end(), ' ')) + 1;
}

void check_acyclic(const std::set<Iri>& concepts,
                   const std::set<std::pair<Iri, Iri>>& edges) {
  std::map<Iri, std::vector<Iri>> parents;
  for (const auto& [child, parent] : edges) parents[child].push_back(parent);

  enum class Mark { kNone, kActive, kDone };
  std::map<Iri, Mark> marks;
  // Iterative DFS; a back edge to an active node is a cycle.
  for (const Iri& root : concepts) {
    if (marks[root] != Mark::kNone) continue;
    std::vector<std::pair<Iri, std::size_t>> stack{{root, 0}};
    marks[root] = Mark::kActive;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      const auto& ps = parents[node];
      if (next == ps.size()) {
        marks[node] = Mark::kDone;
        stack.pop_back();
        continue;
      }
      Iri parent = ps[next++];
      Mark& m = marks[parent];
      if (m == Mark::kActive)
        throw ValidationError("subclass cycle through <" + parent.str() + ">");
      if (m == Mark::kNone) {
        m = Mark::kActive;
        stack.emplace_back(parent, 0);
      }
    }
  }
}

}  // namespace

Ontology build_ontology(const std::vector<Triple>& triples,
                        std::string domain_name) {
  const Iri& type = vocab::rdf_type();
  const Iri& sub_class_of = vocab::rdfs_sub_class_of();

  Ontology o;
  std::map<Iri, Iri> instance_types;
  std::string domain_tag;

  // Declarations first: concepts, relations and instance typings.
  for (const auto& t : triples) {
    if (t.predicate != type) continue;
    if (!t.object.is_iri())
      throw ValidationError("rdf:type of <" + t.subject.str() + "> is a literal");
    const Iri& cls = t.object.iri();
    if (cls == vocab::owl_class()) {
      o.concepts_.insert(t.subject);
    } else if (cls == vocab::owl_object_property()) {
      o.relations_.try_emplace(t.subject, Relation{t.subject, {}, std::nullopt});
    } else if (!is_builtin_type(cls)) {
      auto [it, inserted] = instance_types.try_emplace(t.subject, cls);
      if (!inserted && it->second != cls)
        throw ValidationError("instance <" + t.subject.str() +
                              "> is typed by more than one concept");
    }
  }

  std::map<Iri, std::vector<Iri>> asserted;
  for (const auto& t : triples) {
    if (t.predicate != sub_class_of) continue;
    if (!t.object.is_iri())
      throw ValidationError("rdfs:subClassOf object of <" + t.subject.str() +
                            "> is a literal");
    if (instance_types.count(t.subject)) {
      asserted[t.subject].push_back(t.object.iri());
      continue;
    }
    o.concepts_.insert(t.subject);
    o.concepts_.insert(t.object.iri());
    o.subclass_edges_.emplace(t.subject, t.object.iri());
  }
  check_acyclic(o.concepts_, o.subclass_edges_);

  for (const auto& [iri, cls] : instance_types) {
    if (!o.has_concept(cls))
      throw ValidationError("instance <" + iri.str() + "> typed by unknown concept <" +
                            cls.str() + ">");
    if (o.relations_.count(iri) || o.concepts_.count(iri))
      throw ValidationError("<" + iri.str() + "> is both an instance and a schema element");
    Instance inst{iri, cls, "", "", {}, {}, {}, {}};
    o.instances_.emplace(iri, std::move(inst));
  }

  std::map<Iri, std::vector<std::string>> aliases;
  for (const auto& t : triples) {
    if (t.predicate == type || t.predicate == sub_class_of) continue;
    const Iri& s = t.subject;
    const Iri& p = t.predicate;
    Instance* inst = o.instances_.count(s) ? &o.instances_.at(s) : nullptr;

    if (p == vocab::onto_domain_tag()) {
      if (!t.object.is_literal()) throw ValidationError("onto:domainTag must be a literal");
      domain_tag = t.object.literal_value();
      continue;
    }
    if (p == vocab::owl_inverse_of()) {
      if (!t.object.is_iri()) throw ValidationError("owl:inverseOf object must be an IRI");
      const Iri& other = t.object.iri();
      if (!o.relations_.count(s) || !o.relations_.count(other))
        throw ValidationError("owl:inverseOf between undeclared relations <" + s.str() +
                              "> and <" + other.str() + ">");
      auto& a = o.relations_.at(s);
      auto& b = o.relations_.at(other);
      if ((a.converse && *a.converse != other) || (b.converse && *b.converse != s))
        throw ValidationError("asymmetric converse declaration for <" + s.str() + ">");
      a.converse = other;
      b.converse = s;
      continue;
    }
    if (p == vocab::onto_trigger()) {
      if (!t.object.is_literal()) throw ValidationError("onto:trigger must be a literal");
      auto it = o.relations_.find(s);
      if (it == o.relations_.end())
        throw ValidationError("onto:trigger on undeclared relation <" + s.str() + ">");
      it->second.trigger_forms.insert(checked_form(t.object.literal_value(), s));
      continue;
    }
    if (p == vocab::owl_same_as()) {
      if (!inst) throw ValidationError("owl:sameAs on non-instance <" + s.str() + ">");
      if (!t.object.is_iri()) throw ValidationError("owl:sameAs object must be an IRI");
      if (t.object.iri() == s)
        throw ValidationError("instance <" + s.str() + "> linked to itself");
      inst->same_as.insert(t.object.iri());
      continue;
    }
    if (o.relations_.count(p)) {
      if (!inst || !t.object.is_iri() || !o.instances_.count(t.object.iri()))
        throw ValidationError("relation <" + p.str() + "> must link two instances");
      o.instance_links_.insert({s, p, t.object.iri()});
      continue;
    }
    if (p == vocab::onto_alias() && o.concepts_.count(s)) {
      if (!t.object.is_literal()) throw ValidationError("onto:alias must be a literal");
      o.concept_forms_[s].insert(checked_form(t.object.literal_value(), s));
      continue;
    }
    if (!inst) continue;  // annotations on the ontology header and the like
    if (!t.object.is_literal())
      throw ValidationError("unsupported IRI-valued property <" + p.str() +
                            "> on instance <" + s.str() + ">");
    const std::string& value = t.object.literal_value();
    if (p == vocab::onto_resolved_name()) {
      if (!inst->resolved_name.empty() && inst->resolved_name != value)
        throw ValidationError("instance <" + s.str() + "> has two ResolvedName values");
      inst->resolved_name = value;
    } else if (p == vocab::onto_value()) {
      if (!inst->primary_form.empty() && inst->primary_form != value)
        throw ValidationError("instance <" + s.str() + "> has two onto:value forms");
      inst->primary_form = value;
    } else if (p == vocab::onto_alias()) {
      aliases[s].push_back(value);
    } else {
      inst->data_properties.emplace_back(p, value);
    }
  }

  for (auto& [iri, inst] : o.instances_) {
    if (inst.resolved_name.empty()) inst.resolved_name = iri.local_name();
    if (inst.primary_form.empty()) inst.primary_form = normalize_form(inst.resolved_name);
    inst.surface_forms.insert(checked_form(inst.primary_form, iri));
    inst.surface_forms.insert(checked_form(inst.resolved_name, iri));
    for (const auto& a : aliases[iri]) inst.surface_forms.insert(checked_form(a, iri));
  }

  for (auto& [iri, supers] : asserted) {
    auto& inst = o.instances_.at(iri);
    auto chain = superclasses(o, inst.concept_iri);
    for (const auto& s : supers) {
      if (std::find(chain.begin(), chain.end(), s) == chain.end())
        throw ValidationError("instance <" + iri.str() + "> asserts <" + s.str() +
                              "> which is not a superclass of its concept");
      if (std::find(inst.asserted_superclasses.begin(),
                    inst.asserted_superclasses.end(),
                    s) == inst.asserted_superclasses.end())
        inst.asserted_superclasses.push_back(s);
    }
  }

  if (domain_name.empty()) domain_name = domain_tag;
  o.domain_name_ = fold_case(domain_name);
  if (o.domain_name_.empty()) throw ValidationError("ontology has no domain name");

  auto bind = [&o](const std::string& form, ElementKind kind, const Iri& element) {
    auto& bindings = o.lexicon_[form];
    LexiconBinding b{kind, element};
    if (std::find(bindings.begin(), bindings.end(), b) == bindings.end())
      bindings.push_back(b);
    o.max_form_tokens_ = std::max(o.max_form_tokens_, token_count(form));
  };
  for (const auto& [iri, inst] : o.instances_)
    for (const auto& form : inst.surface_forms) bind(form, ElementKind::kInstance, iri);
  for (const auto& [iri, rel] : o.relations_)
    for (const auto& form : rel.trigger_forms) bind(form, ElementKind::kRelationTrigger, iri);
  for (const auto& [iri, forms] : o.concept_forms_)
    for (const auto& form : forms) bind(form, ElementKind::kConcept, iri);
  for (auto& [form, bindings] : o.lexicon_) std::sort(bindings.begin(), bindings.end());

  return o;
}

Ontology load_ontology(const std::filesystem::path& path, std::string domain_name) {
  std::vector<Triple> triples;
  try {
    triples = parse_ntriples(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.reason());
  }
  try {
    return build_ontology(triples, std::move(domain_name));
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

std::vector<Iri> superclasses(const Ontology& ontology, const Iri& cls) {
  if (!ontology.has_concept(cls)) throw UnknownConcept(cls.str());
  std::map<Iri, std::vector<Iri>> parents;
  for (const auto& [child, parent] : ontology.subclass_edges())
    parents[child].push_back(parent);

  std::vector<Iri> out;
  std::set<Iri> seen{cls};
  std::deque<Iri> queue{cls};
  while (!queue.empty()) {
    Iri current = queue.front();
    queue.pop_front();
    for (const auto& p : parents[current]) {
      if (!seen.insert(p).second) continue;
      out.push_back(p);
      queue.push_back(p);
    }
  }
  return out;
}

const Lexicon& lexicon(const Ontology& ontology) { return ontology.lexicon(); }

}  // namespace credomain

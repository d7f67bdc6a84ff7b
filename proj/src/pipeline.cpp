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

#include "credomain/pipeline.hpp"

#include <algorithm>
#include <set>

#include "credomain/annotator.hpp"
#include "credomain/errors.hpp"
#include "credomain/rdf.hpp"

namespace credomain {

namespace {

template <typename T, typename Key>
void sort_by(std::vector<T>& v, Key key) {
  std::stable_sort(v.begin(), v.end(), [&](const T& a, const T& b) { return key(a) < key(b); });
}

void sort_posts(std::vector<PostRecord>& posts) {
  sort_by(posts, [](const PostRecord& r) -> const std::string& { return r.post.id; });
}

}  // namespace

std::vector<PostRecord> stage_clean(std::vector<PostRecord> posts) {
  for (auto& r : posts) r.clean = clean_text(r.post.raw_text);
  sort_posts(posts);
  return posts;
}

std::vector<PostRecord> stage_classify(std::vector<PostRecord> posts,
                                       const TaxonomyClient& client) {
  for (auto& r : posts) {
    if (!r.clean) r.clean = clean_text(r.post.raw_text);
    r.classification = client.classify(r.post.id, r.clean->text);
    r.confident = filter_confident(r.classification->taxonomies);
  }
  sort_posts(posts);
  return posts;
}

std::vector<PostRecord> stage_infer_domains(std::vector<PostRecord> posts,
                                            HistoryStore& history) {
  sort_posts(posts);
  for (auto& r : posts) {
    if (!r.classification)
      throw DataError("post '" + r.post.id + "' has no classifier response; run classify first");
    std::vector<std::string> domains;
    history.update(r.post.user_id,
                   [&](UserDomainHistory& h) { domains = startup_infer(h, r.confident); });
    r.startup_domains = std::move(domains);
  }
  return posts;
}

std::vector<std::shared_ptr<const Ontology>> ontologies_for_user(
    const UserDomainHistory& history, const OntologyRegistry& registry,
    const AnnotateOptions& options) {
  if (!history.pinned.empty() || is_learning_ready(history, options.min_posts))
    return select_ontologies(history, registry, options.top_k);
  return registry.ontologies();
}

AnnotationRecord annotate_post(const PostRecord& post,
                               const std::vector<std::shared_ptr<const Ontology>>& ontologies,
                               const Ontology& primary) {
  if (!post.classification)
    throw DataError("post '" + post.post.id + "' has no classifier response; run classify first");
  CleanText clean = post.clean ? *post.clean : clean_text(post.post.raw_text);

  AnnotationRecord out;
  out.id = post.post.id;
  out.user = post.post.user_id;
  std::vector<EntityAnnotation> all;
  bool primary_annotates = false;
  std::set<std::string> seen_domains;
  auto add_domains = [&](const std::vector<std::string>& ds) {
    for (const auto& d : ds)
      if (seen_domains.insert(d).second) out.domains.push_back(d);
  };
  add_domains(classify_post_domains(post.confident, {}, primary));
  for (const auto& o : ontologies) {
    auto anns = annotate(clean, *o);
    if (o.get() == &primary && !anns.empty()) primary_annotates = true;
    add_domains(classify_post_domains(post.confident, anns, *o));
    for (auto& a : anns) {
      all.push_back(a);
      out.annotations.push_back({std::move(a), o->domain_name()});
    }
  }
  out.merged = merge_entities(post.classification->entities, all);
  out.category =
      category_of(classifier_says_domain(post.confident, primary.domain_name()), primary_annotates);
  return out;
}

std::vector<AnnotationRecord> stage_annotate(const std::vector<PostRecord>& posts,
                                             const OntologyRegistry& registry,
                                             const HistoryStore& history,
                                             const AnnotateOptions& options) {
  if (registry.empty()) throw ValidationError("no ontology registered");
  const Ontology& primary = *registry.ontologies().front();
  std::vector<AnnotationRecord> dump;
  dump.reserve(posts.size());
  for (const auto& p : posts) {
    auto ontologies = ontologies_for_user(history.get(p.post.user_id), registry, options);
    dump.push_back(annotate_post(p, ontologies, primary));
  }
  sort_by(dump, [](const AnnotationRecord& r) -> const std::string& { return r.id; });
  return dump;
}

std::vector<Triple> stage_enrich(const std::vector<AnnotationRecord>& dump,
                                 const OntologyRegistry& registry, const LinkTable& links) {
  std::vector<Triple> out;
  std::set<Triple> seen;
  auto add = [&](std::vector<Triple> ts) {
    for (auto& t : ts)
      if (seen.insert(t).second) out.push_back(std::move(t));
  };
  for (const auto& o : registry.ontologies()) add(schema_triples(*o));

  std::vector<const AnnotationRecord*> order;
  for (const auto& r : dump) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto* a, const auto* b) { return a->id < b->id; });
  for (const auto* r : order) {
    for (const auto& o : registry.ontologies()) {
      std::vector<EntityAnnotation> anns;
      for (const auto& ra : r->annotations)
        if (ra.ontology == o->domain_name()) anns.push_back(ra.annotation);
      if (!anns.empty()) add(enrich_post(r->id, anns, *o, links));
    }
    for (const auto& ra : r->annotations)
      if (!registry.find(ra.ontology))
        throw DataError("post '" + r->id + "' was annotated with unregistered ontology '" +
                        ra.ontology + "'");
    add(external_entity_triples(r->merged));
  }
  return out;
}

PipelineOutputs run_pipeline(PipelineInputs in) {
  if (!in.registry || !in.client) throw ValidationError("pipeline needs a registry and a client");
  PipelineOutputs out;
  out.cleaned = stage_clean(std::move(in.posts));
  out.classified = stage_classify(out.cleaned, *in.client);
  out.classified = stage_infer_domains(std::move(out.classified), in.history);
  out.dump = stage_annotate(out.classified, *in.registry, in.history, in.options);
  out.triples = stage_enrich(out.dump, *in.registry, in.links);
  out.history = std::move(in.history);
  return out;
}

void write_pipeline_outputs(const PipelineOutputs& o, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  write_file(dir / "cleaned.jsonl", to_jsonl(o.cleaned));
  write_file(dir / "classified.jsonl", to_jsonl(o.classified));
  write_file(dir / "history.json", o.history.to_json().dump(2) + "\n");
  write_file(dir / "annotations.jsonl", to_jsonl(o.dump));
  write_file(dir / "triples.nt", serialize_ntriples(o.triples));
  Repository repo;
  repo.insert(o.triples);
  repo.persist(dir / "repository.nt");
}

}  // namespace credomain

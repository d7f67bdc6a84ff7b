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

#ifndef CREDOMAIN_PIPELINE_HPP_
#define CREDOMAIN_PIPELINE_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "credomain/domain_inference.hpp"
#include "credomain/enrichment.hpp"
#include "credomain/records.hpp"
#include "credomain/repository.hpp"
#include "credomain/taxonomy_client.hpp"

namespace credomain {

struct AnnotateOptions {
  std::int64_t min_posts = kDefaultMinPosts;
  std::size_t top_k = 1;
};

// Stages operate on whole batches and return records sorted by post id.

// Fills PostRecord::clean.
std::vector<PostRecord> stage_clean(std::vector<PostRecord> posts);

// Fills classification and the confident labels; cleans first when needed.
std::vector<PostRecord> stage_classify(std::vector<PostRecord> posts,
                                       const TaxonomyClient& client);

// Start-up domain inference. Posts are taken in id order; each one adds its
// confident top-level domains to its user's history.
std::vector<PostRecord> stage_infer_domains(std::vector<PostRecord> posts,
                                            HistoryStore& history);

// The ontologies used to annotate a user's posts: the learning-stage
// selection once the user has enough history (or pinned domains), else every
// registered ontology.
std::vector<std::shared_ptr<const Ontology>> ontologies_for_user(
    const UserDomainHistory& history, const OntologyRegistry& registry,
    const AnnotateOptions& options);

// Annotates, merges and categorizes. The category is judged against the
// first registered ontology's domain. Requires classified records.
AnnotationRecord annotate_post(const PostRecord& post,
                               const std::vector<std::shared_ptr<const Ontology>>& ontologies,
                               const Ontology& primary);

std::vector<AnnotationRecord> stage_annotate(const std::vector<PostRecord>& posts,
                                             const OntologyRegistry& registry,
                                             const HistoryStore& history,
                                             const AnnotateOptions& options = {});

// Schema triples of every registered ontology, then per post (id order) the
// enrichment, interlinking and external-entity triples. Duplicates dropped.
std::vector<Triple> stage_enrich(const std::vector<AnnotationRecord>& dump,
                                 const OntologyRegistry& registry, const LinkTable& links);

struct PipelineInputs {
  std::vector<PostRecord> posts;
  const OntologyRegistry* registry = nullptr;
  const TaxonomyClient* client = nullptr;
  LinkTable links;
  HistoryStore history;
  AnnotateOptions options;
};

struct PipelineOutputs {
  std::vector<PostRecord> cleaned;
  std::vector<PostRecord> classified;
  std::vector<AnnotationRecord> dump;
  std::vector<Triple> triples;
  HistoryStore history;
};

PipelineOutputs run_pipeline(PipelineInputs inputs);

// Writes cleaned.jsonl, classified.jsonl, history.json, annotations.jsonl,
// triples.nt and repository.nt into `dir`.
void write_pipeline_outputs(const PipelineOutputs& outputs, const std::filesystem::path& dir);

}  // namespace credomain

#endif  // CREDOMAIN_PIPELINE_HPP_

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

#ifndef CREDOMAIN_RECORDS_HPP_
#define CREDOMAIN_RECORDS_HPP_

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "credomain/annotator.hpp"
#include "credomain/taxonomy_client.hpp"
#include "credomain/text_normalizer.hpp"
#include "json.hpp"

namespace credomain {

// One post as it moves through the clean -> classify -> infer-domains
// stages. Later fields are absent until their stage has run; every stage
// reads and writes the same JSON Lines shape.
struct PostRecord {
  Post post;
  std::optional<CleanText> clean;
  std::optional<ClassifierResponse> classification;
  std::vector<TaxonomyLabel> confident;   // filter_confident(classification)
  std::optional<std::vector<std::string>> startup_domains;
};

struct RecordedAnnotation {
  EntityAnnotation annotation;
  std::string ontology;  // domain of the ontology that produced it

  friend bool operator==(const RecordedAnnotation&, const RecordedAnnotation&) = default;
};

// One line of the annotation dump.
struct AnnotationRecord {
  std::string id;
  std::string user;
  std::vector<std::string> domains;
  Category category = Category::kNeither;
  std::vector<RecordedAnnotation> annotations;
  std::vector<MergedEntity> merged;

  friend bool operator==(const AnnotationRecord&, const AnnotationRecord&) = default;
};

struct GoldEntity {
  std::string surface;
  std::string concept_label;
};

struct GoldLabel {
  std::string post_id;
  bool is_domain = false;
  std::vector<GoldEntity> entities;
};

// Calls `fn(json)` for every non-blank line. Parse and schema
// errors surface as DataError naming `source` and the line.
void for_each_jsonl_line(std::string_view text, const std::string& source,
                         const std::function<void(const nlohmann::json&)>& fn);

// Dataset lines need "id", "user" and "text"; stage outputs add fields.
std::vector<PostRecord> parse_post_records(std::string_view text,
                                           const std::string& source = "<dataset>");
std::vector<PostRecord> read_post_records(const std::filesystem::path& path);
nlohmann::json to_json(const PostRecord& record);

nlohmann::json to_json(const AnnotationRecord& record);
AnnotationRecord annotation_record_from_json(const nlohmann::json& j);
std::vector<AnnotationRecord> parse_annotation_dump(std::string_view text,
                                                    const std::string& source = "<dump>");
std::vector<AnnotationRecord> read_annotation_dump(const std::filesystem::path& path);

std::vector<GoldLabel> parse_gold(std::string_view text, const std::string& source = "<gold>");
std::vector<GoldLabel> read_gold(const std::filesystem::path& path);

// One compact JSON object per line, LF-terminated.
template <typename Range>
std::string to_jsonl(const Range& records) {
  std::string out;
  for (const auto& r : records) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace credomain

#endif  // CREDOMAIN_RECORDS_HPP_

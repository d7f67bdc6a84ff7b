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

#ifndef CREDOMAIN_EVALUATION_HPP_
#define CREDOMAIN_EVALUATION_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "credomain/records.hpp"

namespace credomain {

// A metric value. `degenerate` is set when the denominator was zero; the
// value is then 0.
struct Ratio {
  double value = 0.0;
  bool degenerate = false;
};

// Throws InvalidCounts unless 0 <= relevant_retrieved <= total_retrieved.
Ratio precision(std::int64_t relevant_retrieved, std::int64_t total_retrieved);
// Throws InvalidCounts unless 0 <= relevant_retrieved <= total_relevant.
Ratio recall(std::int64_t relevant_retrieved, std::int64_t total_relevant);
// Harmonic mean; 0 when p + r == 0.
double f_measure(double p, double r);

struct EntityCounts {
  std::int64_t correct = 0;
  std::int64_t incorrect = 0;
  std::int64_t missing = 0;

  std::int64_t retrieved() const { return correct + incorrect; }
  std::int64_t total_relevant() const { return correct + missing; }

  friend bool operator==(const EntityCounts&, const EntityCounts&) = default;
};

struct Metrics {
  Ratio precision;
  Ratio recall;
  double f = 0.0;
};

// Throws InvalidCounts on negative counts.
Metrics metrics_from_counts(const EntityCounts& counts);

// Which extractions are scored.
enum class SourceFilter {
  kExternal,  // classifier entities, with the classifier's own type
  kOntology,  // ontology annotations, typed by concept name
  kCombined,  // the merged list
};

std::string_view to_string(SourceFilter filter);

// The (surface, type) pairs a post contributes under `filter`. Ontology
// annotations count once per element; the result is then deduplicated
// case-insensitively on the pair.
std::vector<std::pair<std::string, std::string>> extracted_entities(
    const AnnotationRecord& record, SourceFilter filter);

// An extraction is correct when a gold entity of the post has the same
// surface and concept (case-insensitive); gold entities no extraction hits
// are missing. When `only` is set, posts of other categories are skipped.
// Throws MissingGold for a dump post without a gold record.
EntityCounts entity_counts(const std::vector<AnnotationRecord>& dump,
                           const std::vector<GoldLabel>& gold, SourceFilter filter,
                           std::optional<Category> only = std::nullopt);

struct CategoryStats {
  std::int64_t size = 0;
  std::int64_t domain_true = 0;
  // round(100 * domain_true / size); absent when the category is empty.
  std::optional<std::int64_t> percent;
};

// Indexed by category - 1. Throws MissingGold.
std::array<CategoryStats, 4> category_report(const std::vector<AnnotationRecord>& dump,
                                             const std::vector<GoldLabel>& gold);

// round(100 * correct / sample_size). Throws InvalidCounts when
// sample_size <= 0 or correct < 0.
std::int64_t extraction_rate(std::int64_t correct, std::int64_t sample_size);

// Everything the report subcommand prints.
struct EvaluationReport {
  std::int64_t sample_size = 0;
  // [filter][category - 1]
  std::array<std::array<EntityCounts, 4>, 3> by_category{};
  std::array<EntityCounts, 3> totals{};
  std::array<Metrics, 3> metrics{};
  std::array<CategoryStats, 4> categories{};
  // Correct extractions both sources found, counted once in kCombined.
  std::int64_t source_overlap = 0;
};

EvaluationReport build_report(const std::vector<AnnotationRecord>& dump,
                              const std::vector<GoldLabel>& gold);
std::string render_markdown(const EvaluationReport& report);
std::string render_csv(const EvaluationReport& report);

}  // namespace credomain

#endif  // CREDOMAIN_EVALUATION_HPP_

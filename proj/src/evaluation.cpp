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

#include "credomain/evaluation.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "credomain/errors.hpp"

namespace credomain {

Ratio precision(std::int64_t relevant_retrieved, std::int64_t total_retrieved) {
  if (relevant_retrieved < 0 || relevant_retrieved > total_retrieved)
    throw InvalidCounts("precision needs 0 <= relevant_retrieved <= total_retrieved");
  if (total_retrieved == 0) return {0.0, true};
  return {static_cast<double>(relevant_retrieved) / static_cast<double>(total_retrieved), false};
}

Ratio recall(std::int64_t relevant_retrieved, std::int64_t total_relevant) {
  if (relevant_retrieved < 0 || relevant_retrieved > total_relevant)
    throw InvalidCounts("recall needs 0 <= relevant_retrieved <= total_relevant");
  if (total_relevant == 0) return {0.0, true};
  return {static_cast<double>(relevant_retrieved) / static_cast<double>(total_relevant), false};
}

double f_measure(double p, double r) {
  if (p + r == 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

Metrics metrics_from_counts(const EntityCounts& c) {
  if (c.correct < 0 || c.incorrect < 0 || c.missing < 0)
    throw InvalidCounts("negative entity count");
  Metrics m;
  m.precision = precision(c.correct, c.retrieved());
  m.recall = recall(c.correct, c.total_relevant());
  m.f = f_measure(m.precision.value, m.recall.value);
  return m;
}

std::string_view to_string(SourceFilter filter) {
  switch (filter) {
    case SourceFilter::kExternal: return "external";
    case SourceFilter::kOntology: return "ontology";
    case SourceFilter::kCombined: return "combined";
  }
  return "?";
}

namespace {

using Pair = std::pair<std::string, std::string>;

Pair folded(const Pair& p) { return {fold_case(p.first), fold_case(p.second)}; }

std::map<std::string, const GoldLabel*> index_gold(const std::vector<GoldLabel>& gold) {
  std::map<std::string, const GoldLabel*> out;
  for (const auto& g : gold) out.emplace(g.post_id, &g);
  return out;
}

const GoldLabel& gold_for(const std::map<std::string, const GoldLabel*>& index,
                          const std::string& id) {
  auto it = index.find(id);
  if (it == index.end()) throw MissingGold(id);
  return *it->second;
}

std::set<Pair> gold_pairs(const GoldLabel& g) {
  std::set<Pair> out;
  for (const auto& e : g.entities) out.insert(folded({e.surface, e.concept_label}));
  return out;
}

}  // namespace

std::vector<Pair> extracted_entities(const AnnotationRecord& record, SourceFilter filter) {
  std::vector<Pair> raw;
  switch (filter) {
    case SourceFilter::kExternal:
      for (const auto& m : record.merged) {
        if (m.source == EntitySource::kExternal) raw.emplace_back(m.surface, m.type_label);
        if (m.source == EntitySource::kBoth) raw.emplace_back(m.surface, m.external_type);
      }
      break;
    case SourceFilter::kOntology: {
      // One entry per matched element, under its first surface.
      std::set<std::string> elements;
      for (const auto& a : record.annotations)
        if (elements.insert(a.annotation.element.str()).second)
          raw.emplace_back(a.annotation.surface, a.annotation.concept_name());
      break;
    }
    case SourceFilter::kCombined:
      for (const auto& m : record.merged) raw.emplace_back(m.surface, m.type_label);
      break;
  }
  std::vector<Pair> out;
  std::set<Pair> seen;
  for (auto& p : raw)
    if (seen.insert(folded(p)).second) out.push_back(std::move(p));
  return out;
}

EntityCounts entity_counts(const std::vector<AnnotationRecord>& dump,
                           const std::vector<GoldLabel>& gold, SourceFilter filter,
                           std::optional<Category> only) {
  auto index = index_gold(gold);
  EntityCounts c;
  for (const auto& record : dump) {
    const GoldLabel& g = gold_for(index, record.id);
    if (only && record.category != *only) continue;
    auto expected = gold_pairs(g);
    std::set<Pair> hit;
    for (const auto& p : extracted_entities(record, filter)) {
      auto key = folded(p);
      if (expected.count(key)) {
        ++c.correct;
        hit.insert(key);
      } else {
        ++c.incorrect;
      }
    }
    c.missing += static_cast<std::int64_t>(expected.size() - hit.size());
  }
  return c;
}

std::array<CategoryStats, 4> category_report(const std::vector<AnnotationRecord>& dump,
                                             const std::vector<GoldLabel>& gold) {
  auto index = index_gold(gold);
  std::array<CategoryStats, 4> out{};
  for (const auto& record : dump) {
    const GoldLabel& g = gold_for(index, record.id);
    auto& s = out[static_cast<int>(record.category) - 1];
    ++s.size;
    if (g.is_domain) ++s.domain_true;
  }
  for (auto& s : out)
    if (s.size > 0)
      s.percent = std::llround(100.0 * static_cast<double>(s.domain_true) /
                               static_cast<double>(s.size));
  return out;
}

std::int64_t extraction_rate(std::int64_t correct, std::int64_t sample_size) {
  if (sample_size <= 0) throw InvalidCounts("sample size must be positive");
  if (correct < 0) throw InvalidCounts("correct count must not be negative");
  return std::llround(100.0 * static_cast<double>(correct) / static_cast<double>(sample_size));
}

EvaluationReport build_report(const std::vector<AnnotationRecord>& dump,
                              const std::vector<GoldLabel>& gold) {
  EvaluationReport r;
  r.sample_size = static_cast<std::int64_t>(dump.size());
  constexpr SourceFilter kFilters[] = {SourceFilter::kExternal, SourceFilter::kOntology,
                                       SourceFilter::kCombined};
  for (int f = 0; f < 3; ++f) {
    for (int c = 0; c < 4; ++c)
      r.by_category[f][c] = entity_counts(dump, gold, kFilters[f], static_cast<Category>(c + 1));
    r.totals[f] = entity_counts(dump, gold, kFilters[f]);
    r.metrics[f] = metrics_from_counts(r.totals[f]);
  }
  r.categories = category_report(dump, gold);

  auto index = index_gold(gold);
  for (const auto& record : dump) {
    auto expected = gold_pairs(gold_for(index, record.id));
    std::set<std::string> ext;
    for (const auto& p : extracted_entities(record, SourceFilter::kExternal))
      if (expected.count(folded(p))) ext.insert(fold_case(p.first));
    std::set<std::string> both;
    for (const auto& p : extracted_entities(record, SourceFilter::kOntology))
      if (expected.count(folded(p)) && ext.count(fold_case(p.first))) both.insert(fold_case(p.first));
    r.source_overlap += static_cast<std::int64_t>(both.size());
  }
  return r;
}

namespace {

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string pct_of(std::int64_t n, std::int64_t sample) {
  if (sample <= 0) return "n/a";
  return std::to_string(extraction_rate(n, sample)) + "%";
}

const char* kCategoryNames[4] = {"1 classified+annotated", "2 annotated only",
                                 "3 classified only", "4 neither"};

}  // namespace

std::string render_markdown(const EvaluationReport& r) {
  std::ostringstream os;
  os << "# Evaluation report\n\nSample size: " << r.sample_size << " posts\n\n";

  os << "## Correct extractions by category\n\n"
     << "| Category | External | Ontology | Combined |\n|---|---:|---:|---:|\n";
  for (int c = 0; c < 4; ++c)
    os << "| " << kCategoryNames[c] << " | " << r.by_category[0][c].correct << " | "
       << r.by_category[1][c].correct << " | " << r.by_category[2][c].correct << " |\n";
  os << "| Total | " << r.totals[0].correct << " | " << r.totals[1].correct << " | "
     << r.totals[2].correct << " |\n";
  os << "| % of sample | " << pct_of(r.totals[0].correct, r.sample_size) << " | "
     << pct_of(r.totals[1].correct, r.sample_size) << " | "
     << pct_of(r.totals[2].correct, r.sample_size) << " |\n\n";
  os << "Correct entities found by both sources (counted once in Combined): "
     << r.source_overlap << "\n\n";

  os << "## Incorrect external extractions by category\n\n"
     << "| Category | Incorrect |\n|---|---:|\n";
  for (int c = 0; c < 4; ++c)
    os << "| " << kCategoryNames[c] << " | " << r.by_category[0][c].incorrect << " |\n";
  os << "| Total | " << r.totals[0].incorrect << " |\n\n";

  os << "## Precision and recall\n\n"
     << "| Source | Correct | Incorrect | Missing | Retrieved | Relevant | Precision | Recall | F |\n"
     << "|---|---:|---:|---:|---:|---:|---:|---:|---:|\n";
  constexpr SourceFilter kFilters[] = {SourceFilter::kExternal, SourceFilter::kOntology,
                                       SourceFilter::kCombined};
  for (int f = 0; f < 3; ++f) {
    const auto& t = r.totals[f];
    const auto& m = r.metrics[f];
    os << "| " << to_string(kFilters[f]) << " | " << t.correct << " | " << t.incorrect << " | "
       << t.missing << " | " << t.retrieved() << " | " << t.total_relevant() << " | "
       << (m.precision.degenerate ? "n/a" : fixed4(m.precision.value)) << " | "
       << (m.recall.degenerate ? "n/a" : fixed4(m.recall.value)) << " | " << fixed4(m.f)
       << " |\n";
  }
  os << "\n## Domain posts by category\n\n"
     << "| Category | Posts | In domain | % |\n|---|---:|---:|---:|\n";
  for (int c = 0; c < 4; ++c) {
    const auto& s = r.categories[c];
    os << "| " << kCategoryNames[c] << " | " << s.size << " | " << s.domain_true << " | "
       << (s.percent ? std::to_string(*s.percent) + "%" : "n/a") << " |\n";
  }
  return os.str();
}

std::string render_csv(const EvaluationReport& r) {
  std::ostringstream os;
  os << "table,row,column,value\n";
  constexpr SourceFilter kFilters[] = {SourceFilter::kExternal, SourceFilter::kOntology,
                                       SourceFilter::kCombined};
  for (int f = 0; f < 3; ++f) {
    for (int c = 0; c < 4; ++c)
      os << "correct_by_category," << (c + 1) << ',' << to_string(kFilters[f]) << ','
         << r.by_category[f][c].correct << '\n';
    os << "correct_by_category,total," << to_string(kFilters[f]) << ',' << r.totals[f].correct
       << '\n';
  }
  for (int c = 0; c < 4; ++c)
    os << "incorrect_by_category," << (c + 1) << ",external," << r.by_category[0][c].incorrect
       << '\n';
  os << "incorrect_by_category,total,external," << r.totals[0].incorrect << '\n';
  for (int f = 0; f < 3; ++f) {
    const auto& t = r.totals[f];
    const auto& m = r.metrics[f];
    auto row = std::string("metrics,") + std::string(to_string(kFilters[f])) + ',';
    os << row << "correct," << t.correct << '\n'
       << row << "incorrect," << t.incorrect << '\n'
       << row << "missing," << t.missing << '\n'
       << row << "precision," << fixed4(m.precision.value) << '\n'
       << row << "recall," << fixed4(m.recall.value) << '\n'
       << row << "f," << fixed4(m.f) << '\n';
  }
  for (int c = 0; c < 4; ++c) {
    const auto& s = r.categories[c];
    os << "domain_by_category," << (c + 1) << ",posts," << s.size << '\n'
       << "domain_by_category," << (c + 1) << ",in_domain," << s.domain_true << '\n'
       << "domain_by_category," << (c + 1) << ",percent,"
       << (s.percent ? std::to_string(*s.percent) : "") << '\n';
  }
  os << "overlap,total,both," << r.source_overlap << '\n';
  return os.str();
}

}  // namespace credomain

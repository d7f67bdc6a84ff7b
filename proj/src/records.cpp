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

#include "credomain/records.hpp"

#include <fstream>
#include <set>

#include "credomain/errors.hpp"
#include "credomain/ontology.hpp"

namespace credomain {

using nlohmann::json;

void for_each_jsonl_line(std::string_view text, const std::string& source,
                         const std::function<void(const json&)>& fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    auto where = [&] { return source + ":" + std::to_string(line_no) + ": "; };
    try {
      fn(json::parse(line));
    } catch (const json::exception& e) {
      throw DataError(where() + e.what());
    } catch (const DataError& e) {
      throw DataError(where() + e.what());
    } catch (const ValidationError& e) {
      throw DataError(where() + e.what());
    } catch (const MalformedPath& e) {
      throw DataError(where() + e.what());
    }
  }
}

namespace {

std::vector<TaxonomyLabel> labels_from_json(const json& j) {
  std::vector<TaxonomyLabel> out;
  for (const auto& t : j)
    out.push_back(make_taxonomy_label(t.at("path").get<std::string>(),
                                      t.at("score").get<double>(),
                                      t.value("confident", "unknown")));
  return out;
}

json labels_to_json(const std::vector<TaxonomyLabel>& labels) {
  json out = json::array();
  for (const auto& t : labels)
    out.push_back({{"path", t.path}, {"score", t.score}, {"confident", t.confident}});
  return out;
}

PostRecord post_record_from_json(const json& j) {
  PostRecord r;
  r.post.id = j.at("id").get<std::string>();
  if (r.post.id.empty()) throw DataError("empty post id");
  r.post.user_id = j.at("user").get<std::string>();
  r.post.raw_text = j.at("text").get<std::string>();
  r.post.created_at = j.value("created_at", "");
  if (j.contains("clean_text")) {
    CleanText c;
    c.text = j.at("clean_text").get<std::string>();
    if (j.contains("tokens")) {
      for (const auto& t : j.at("tokens"))
        c.tokens.push_back({t.at(0).get<std::string>(), t.at(1).get<std::size_t>()});
    } else {
      c.tokens = tokenize(c.text);
    }
    for (const auto& t : c.tokens)
      if (t.offset + t.text.size() > c.text.size() ||
          c.text.compare(t.offset, t.text.size(), t.text) != 0)
        throw DataError("token '" + t.text + "' does not match clean_text");
    r.clean = std::move(c);
  }
  if (j.contains("taxonomies")) {
    ClassifierResponse resp = response_from_json(j, r.post.id);
    r.classification = std::move(resp);
    r.confident = j.contains("confident_taxonomies")
                      ? labels_from_json(j.at("confident_taxonomies"))
                      : filter_confident(r.classification->taxonomies);
  }
  if (j.contains("startup_domains"))
    r.startup_domains = j.at("startup_domains").get<std::vector<std::string>>();
  return r;
}

}  // namespace

std::vector<PostRecord> parse_post_records(std::string_view text, const std::string& source) {
  std::vector<PostRecord> out;
  std::set<std::string> ids;
  for_each_jsonl_line(text, source, [&](const json& j) {
    auto r = post_record_from_json(j);
    if (!ids.insert(r.post.id).second) throw DataError("duplicate post id '" + r.post.id + "'");
    out.push_back(std::move(r));
  });
  return out;
}

std::vector<PostRecord> read_post_records(const std::filesystem::path& path) {
  return parse_post_records(read_file(path), path.string());
}

json to_json(const PostRecord& r) {
  json j = {{"id", r.post.id}, {"user", r.post.user_id}, {"text", r.post.raw_text}};
  if (!r.post.created_at.empty()) j["created_at"] = r.post.created_at;
  if (r.clean) {
    j["clean_text"] = r.clean->text;
    json tokens = json::array();
    for (const auto& t : r.clean->tokens) tokens.push_back(json::array({t.text, t.offset}));
    j["tokens"] = std::move(tokens);
  }
  if (r.classification) {
    json c = response_to_json(*r.classification, false);
    j["taxonomies"] = c["taxonomies"];
    j["entities"] = c["entities"];
    j["confident_taxonomies"] = labels_to_json(r.confident);
  }
  if (r.startup_domains) j["startup_domains"] = *r.startup_domains;
  return j;
}

json to_json(const AnnotationRecord& r) {
  json anns = json::array();
  for (const auto& ra : r.annotations) {
    const auto& a = ra.annotation;
    json entry = {{"surface", a.surface},
                  {"kind", to_string(a.kind)},
                  {"element", a.element.str()},
                  {"concept", a.concept_iri ? a.concept_iri->str() : ""},
                  {"span", json::array({a.start, a.end})},
                  {"ontology", ra.ontology}};
    anns.push_back(std::move(entry));
  }
  json merged = json::array();
  for (const auto& m : r.merged) {
    json entry = {{"surface", m.surface}, {"type", m.type_label}, {"source", to_string(m.source)}};
    if (!m.external_type.empty()) entry["external_type"] = m.external_type;
    merged.push_back(std::move(entry));
  }
  return json{{"id", r.id},
              {"user", r.user},
              {"domains", r.domains},
              {"category", static_cast<int>(r.category)},
              {"annotations", std::move(anns)},
              {"merged", std::move(merged)}};
}

AnnotationRecord annotation_record_from_json(const json& j) {
  AnnotationRecord r;
  r.id = j.at("id").get<std::string>();
  r.user = j.value("user", "");
  r.domains = j.at("domains").get<std::vector<std::string>>();
  int category = j.at("category").get<int>();
  if (category < 1 || category > 4) throw DataError("category must be 1..4");
  r.category = static_cast<Category>(category);
  for (const auto& a : j.at("annotations")) {
    std::optional<Iri> concept_iri;
    auto c = a.value("concept", "");
    if (!c.empty()) concept_iri = Iri(c);
    std::size_t start = 0;
    std::size_t end = 0;
    if (a.contains("span")) {
      start = a.at("span").at(0).get<std::size_t>();
      end = a.at("span").at(1).get<std::size_t>();
    }
    EntityAnnotation ann{start,
                         end,
                         a.at("surface").get<std::string>(),
                         element_kind_from_string(a.at("kind").get<std::string>()),
                         Iri(a.at("element").get<std::string>()),
                         std::move(concept_iri)};
    r.annotations.push_back({std::move(ann), a.value("ontology", "")});
  }
  for (const auto& m : j.at("merged")) {
    r.merged.push_back({m.at("surface").get<std::string>(),
                        entity_source_from_string(m.at("source").get<std::string>()),
                        m.at("type").get<std::string>(), m.value("external_type", "")});
  }
  return r;
}

std::vector<AnnotationRecord> parse_annotation_dump(std::string_view text,
                                                    const std::string& source) {
  std::vector<AnnotationRecord> out;
  for_each_jsonl_line(text, source,
                      [&](const json& j) { out.push_back(annotation_record_from_json(j)); });
  return out;
}

std::vector<AnnotationRecord> read_annotation_dump(const std::filesystem::path& path) {
  return parse_annotation_dump(read_file(path), path.string());
}

std::vector<GoldLabel> parse_gold(std::string_view text, const std::string& source) {
  std::vector<GoldLabel> out;
  std::set<std::string> ids;
  for_each_jsonl_line(text, source, [&](const json& j) {
    GoldLabel g;
    g.post_id = j.at("id").get<std::string>();
    g.is_domain = j.at("is_domain").get<bool>();
    for (const auto& e : j.value("entities", json::array()))
      g.entities.push_back({e.at("surface").get<std::string>(), e.at("concept").get<std::string>()});
    if (!ids.insert(g.post_id).second)
      throw DataError("duplicate gold record '" + g.post_id + "'");
    out.push_back(std::move(g));
  });
  return out;
}

std::vector<GoldLabel> read_gold(const std::filesystem::path& path) {
  return parse_gold(read_file(path), path.string());
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out) throw IoError("error writing " + path.string());
}

}  // namespace credomain

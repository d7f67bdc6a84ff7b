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

// credomain: command-line driver for the annotation pipeline.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "httplib.h"
#include "json.hpp"

#include "credomain/errors.hpp"
#include "credomain/evaluation.hpp"
#include "credomain/ontology.hpp"
#include "credomain/pipeline.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Options {
  std::string dataset;
  std::vector<std::string> ontologies;
  std::string fixtures;
  std::string classifier_addr;
  std::string links;
  std::string gold;
  std::string history;
  std::string out;
  std::string dump;
  std::string repository;
  std::vector<std::string> triples;
  std::string query;
  std::string query_file;
  std::string counts;
  std::string format = "tsv";
  std::string serve_addr = "127.0.0.1:8088";
  std::int64_t min_posts = credomain::kDefaultMinPosts;
  std::size_t top_k = 1;
};

// Raised for argument combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::string& need(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string(flag) + " is required");
  return value;
}

std::pair<std::string, int> parse_addr(const std::string& addr) {
  auto colon = addr.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == addr.size())
    throw UsageError("address must be host:port, got '" + addr + "'");
  try {
    int port = std::stoi(addr.substr(colon + 1));
    if (port <= 0 || port > 65535) throw std::out_of_range("port");
    return {addr.substr(0, colon), port};
  } catch (const std::logic_error&) {
    throw UsageError("bad port in '" + addr + "'");
  }
}

void emit(const Options& o, const std::string& content) {
  if (o.out.empty() || o.out == "-") {
    std::cout << content;
  } else {
    credomain::write_file(o.out, content);
  }
}

credomain::OntologyRegistry load_registry(const Options& o) {
  if (o.ontologies.empty()) throw UsageError("--ontology is required");
  credomain::OntologyRegistry registry;
  for (const auto& path : o.ontologies)
    registry.add(std::make_shared<const credomain::Ontology>(credomain::load_ontology(path)));
  return registry;
}

credomain::HistoryStore load_history(const Options& o) {
  if (o.history.empty() || !fs::exists(o.history)) return {};
  return credomain::HistoryStore::load(o.history);
}

std::unique_ptr<credomain::TaxonomyClient> make_client(const Options& o) {
  if (!o.classifier_addr.empty()) {
    credomain::HttpClientConfig cfg;
    std::tie(cfg.host, cfg.port) = parse_addr(o.classifier_addr);
    return std::make_unique<credomain::HttpTaxonomyClient>(cfg);
  }
  return std::make_unique<credomain::FixtureTaxonomyClient>(
      credomain::FixtureTaxonomyClient::load(need(o.fixtures, "--fixtures")));
}

credomain::LinkTable load_links(const Options& o, const credomain::OntologyRegistry& registry) {
  credomain::LinkTable links;
  for (const auto& ont : registry.ontologies())
    credomain::merge_link_tables(links, credomain::link_table_from_ontology(*ont));
  if (!o.links.empty()) credomain::merge_link_tables(links, credomain::load_link_table(o.links));
  return links;
}

std::string format_rows(const std::vector<credomain::Triple>& rows, const std::string& format) {
  if (format == "json") return credomain::rows_to_json(rows).dump(2) + "\n";
  std::string out;
  for (const auto& t : rows) {
    out += credomain::to_ntriples_term(credomain::Term(t.subject)) + '\t' +
           credomain::to_ntriples_term(credomain::Term(t.predicate)) + '\t' +
           credomain::to_ntriples_term(t.object) + '\n';
  }
  return out;
}

json metrics_json(const credomain::EntityCounts& c) {
  auto m = credomain::metrics_from_counts(c);
  return {{"correct", c.correct},
          {"incorrect", c.incorrect},
          {"missing", c.missing},
          {"precision", m.precision.value},
          {"precision_degenerate", m.precision.degenerate},
          {"recall", m.recall.value},
          {"recall_degenerate", m.recall.degenerate},
          {"f", m.f}};
}

int run_evaluate(const Options& o) {
  if (!o.counts.empty()) {
    std::vector<std::int64_t> v;
    std::stringstream ss(o.counts);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        std::size_t used = 0;
        v.push_back(std::stoll(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::logic_error&) {
        throw UsageError("--counts expects integers correct,incorrect,missing");
      }
    }
    if (v.size() != 3) throw UsageError("--counts expects correct,incorrect,missing");
    emit(o, metrics_json({v[0], v[1], v[2]}).dump(2) + "\n");
    return 0;
  }
  auto dump = credomain::read_annotation_dump(need(o.dump, "--dump"));
  auto gold = credomain::read_gold(need(o.gold, "--gold"));
  json out;
  for (auto f : {credomain::SourceFilter::kExternal, credomain::SourceFilter::kOntology,
                 credomain::SourceFilter::kCombined})
    out["metrics"][std::string(credomain::to_string(f))] =
        metrics_json(credomain::entity_counts(dump, gold, f));
  json cats = json::array();
  auto report = credomain::category_report(dump, gold);
  for (int c = 0; c < 4; ++c) {
    json entry = {{"category", c + 1}, {"size", report[c].size},
                  {"in_domain", report[c].domain_true}};
    entry["percent"] = report[c].percent ? json(*report[c].percent) : json(nullptr);
    cats.push_back(std::move(entry));
  }
  out["categories"] = std::move(cats);
  emit(o, out.dump(2) + "\n");
  return 0;
}

int run_report(const Options& o) {
  auto dump = credomain::read_annotation_dump(need(o.dump, "--dump"));
  auto gold = credomain::read_gold(need(o.gold, "--gold"));
  auto report = credomain::build_report(dump, gold);
  const fs::path dir = need(o.out, "--out");
  fs::create_directories(dir);
  credomain::write_file(dir / "report.md", credomain::render_markdown(report));
  credomain::write_file(dir / "report.csv", credomain::render_csv(report));
  return 0;
}

int run_pipeline(const Options& o) {
  auto registry = load_registry(o);
  auto client = make_client(o);
  credomain::PipelineInputs in;
  in.posts = credomain::read_post_records(need(o.dataset, "--dataset"));
  in.registry = &registry;
  in.client = client.get();
  in.links = load_links(o, registry);
  in.history = load_history(o);
  in.options = {o.min_posts, o.top_k};
  auto outputs = credomain::run_pipeline(std::move(in));
  const fs::path dir = need(o.out, "--out");
  credomain::write_pipeline_outputs(outputs, dir);
  if (!o.gold.empty()) {
    auto report = credomain::build_report(outputs.dump, credomain::read_gold(o.gold));
    credomain::write_file(dir / "report.md", credomain::render_markdown(report));
    credomain::write_file(dir / "report.csv", credomain::render_csv(report));
  }
  return 0;
}

int run_serve(const Options& o) {
  auto repo = std::make_shared<credomain::Repository>();
  repo->load(need(o.repository, "--repository"));
  auto [host, port] = parse_addr(o.serve_addr);
  httplib::Server server;
  server.Post("/query", [repo](const httplib::Request& req, httplib::Response& res) {
    try {
      auto rows = repo->query(credomain::parse_query(req.body));
      res.set_content(credomain::rows_to_json(rows).dump(), "application/json");
    } catch (const credomain::Error& e) {
      res.status = 400;
      res.set_content(json{{"error", e.what()}}.dump(), "application/json");
    }
  });
  std::cerr << "serving " << repo->size() << " triples on " << host << ':' << port << '\n';
  if (!server.listen(host, port)) {
    std::cerr << "error: cannot listen on " << o.serve_addr << '\n';
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ontology-based entity annotation and domain classification for short posts"};
  app.set_config("--config", "", "key = value configuration file; flags override it");
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--dataset", o.dataset, "Posts as JSON Lines (raw or from an earlier stage)");
  app.add_option("--ontology", o.ontologies, "Ontology N-Triples file (repeatable; first is primary)");
  app.add_option("--fixtures", o.fixtures, "Classifier responses as JSON Lines");
  app.add_option("--classifier-addr", o.classifier_addr, "Live classifier host:port instead of fixtures");
  app.add_option("--links", o.links, "owl:sameAs link table (N-Triples)");
  app.add_option("--gold", o.gold, "Gold labels as JSON Lines");
  app.add_option("--history", o.history, "User domain history JSON");
  app.add_option("--out", o.out, "Output file, or directory for pipeline/report");
  app.add_option("--dump", o.dump, "Annotation dump from the annotate stage");
  app.add_option("--repository", o.repository, "Repository file written by load or pipeline");
  app.add_option("--min-posts", o.min_posts, "Posts needed before the learning stage")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--top-k", o.top_k, "Ontologies selected per user in the learning stage")
      ->check(CLI::PositiveNumber);
  app.add_option("--serve-addr", o.serve_addr, "host:port for serve");

  auto* clean = app.add_subcommand("clean", "Cleanse post text");
  auto* classify = app.add_subcommand("classify", "Attach classifier responses");
  auto* infer = app.add_subcommand("infer-domains", "Update user domain history");
  auto* annotate = app.add_subcommand("annotate", "Annotate posts and assign categories");
  auto* enrich = app.add_subcommand("enrich", "Emit enrichment and interlinking triples");
  auto* load = app.add_subcommand("load", "Build a repository file from triple files");
  load->add_option("triples", o.triples, "N-Triples files")->required();
  auto* query = app.add_subcommand("query", "Run a triple-pattern query");
  query->add_option("query", o.query, "Query text");
  query->add_option("--query-file", o.query_file, "Read the query from a file");
  query->add_option("--format", o.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
  auto* evaluate = app.add_subcommand("evaluate", "Precision, recall, F and category report");
  evaluate->add_option("--counts", o.counts, "correct,incorrect,missing instead of a dump");
  auto* report = app.add_subcommand("report", "Write report.md and report.csv");
  auto* pipeline = app.add_subcommand("pipeline", "Run every stage");
  auto* serve = app.add_subcommand("serve", "HTTP POST /query endpoint");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (clean->parsed()) {
      auto posts = credomain::stage_clean(credomain::read_post_records(need(o.dataset, "--dataset")));
      emit(o, credomain::to_jsonl(posts));
    } else if (classify->parsed()) {
      auto client = make_client(o);
      auto posts = credomain::stage_classify(
          credomain::read_post_records(need(o.dataset, "--dataset")), *client);
      emit(o, credomain::to_jsonl(posts));
    } else if (infer->parsed()) {
      auto history = load_history(o);
      auto posts = credomain::stage_infer_domains(
          credomain::read_post_records(need(o.dataset, "--dataset")), history);
      history.save(need(o.history, "--history"));
      emit(o, credomain::to_jsonl(posts));
    } else if (annotate->parsed()) {
      auto registry = load_registry(o);
      auto posts = credomain::read_post_records(need(o.dataset, "--dataset"));
      auto dump = credomain::stage_annotate(posts, registry, load_history(o),
                                            {o.min_posts, o.top_k});
      emit(o, credomain::to_jsonl(dump));
    } else if (enrich->parsed()) {
      auto registry = load_registry(o);
      auto dump = credomain::read_annotation_dump(need(o.dump, "--dump"));
      emit(o, credomain::serialize_ntriples(
                  credomain::stage_enrich(dump, registry, load_links(o, registry))));
    } else if (load->parsed()) {
      credomain::Repository repo;
      for (const auto& path : o.triples)
        repo.insert(credomain::parse_ntriples(credomain::read_file(path)));
      repo.persist(need(o.out, "--out"));
    } else if (query->parsed()) {
      std::string text = o.query;
      if (!o.query_file.empty()) text = credomain::read_file(o.query_file);
      if (text.empty()) throw UsageError("query text or --query-file is required");
      credomain::Repository repo;
      repo.load(need(o.repository, "--repository"));
      emit(o, format_rows(repo.query(credomain::parse_query(text)), o.format));
    } else if (evaluate->parsed()) {
      return run_evaluate(o);
    } else if (report->parsed()) {
      return run_report(o);
    } else if (pipeline->parsed()) {
      return run_pipeline(o);
    } else if (serve->parsed()) {
      return run_serve(o);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return 1;
  } catch (const credomain::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

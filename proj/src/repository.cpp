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

#include "credomain/repository.hpp"

#include <cctype>
#include <deque>
#include <filesystem>
#include <fstream>
#include <mutex>

#include "credomain/errors.hpp"
#include "credomain/ontology.hpp"

namespace credomain {

bool TriplePattern::matches(const Triple& t) const {
  return (!subject || *subject == t.subject) && (!predicate || *predicate == t.predicate) &&
         (!object || *object == t.object);
}

namespace {

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}

bool is_local_start(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class QueryParser {
 public:
  explicit QueryParser(std::string_view text) : text_(text) {}

  TriplePattern parse() {
    skip_ws();
    while (keyword_ahead("PREFIX")) {
      pos_ += 6;
      skip_ws();
      std::size_t at = pos_;
      std::string name = read_name();
      if (!consume(':')) fail(pos_, "expected ':' after prefix name");
      skip_ws();
      if (peek() != '<') fail(pos_, "expected <iri> in PREFIX declaration");
      Iri iri = read_iri();
      if (prefixes_.count(name)) fail(at, "prefix '" + name + "' declared twice");
      prefixes_.emplace(std::move(name), iri.str());
      skip_ws();
    }
    expect_keyword("SELECT");
    skip_ws();
    if (!consume('*')) fail(pos_, "only SELECT * is supported");
    skip_ws();
    expect_keyword("WHERE");
    skip_ws();
    if (!consume('{')) fail(pos_, "expected '{'");

    TriplePattern pattern;
    std::size_t subject_at = skip_ws_pos();
    auto subject = read_term("subject");
    std::size_t predicate_at = skip_ws_pos();
    auto predicate = read_term("predicate");
    skip_ws();
    auto object = read_term("object");
    skip_ws();
    consume('.');
    skip_ws();
    if (!consume('}')) {
      fail(pos_, at_end() ? "expected '}'" : "a pattern has exactly three terms");
    }
    skip_ws();
    if (!at_end()) fail(pos_, "unexpected content after '}'");

    if (subject && subject->is_literal()) fail(subject_at, "literal in subject position");
    if (predicate && predicate->is_literal())
      fail(predicate_at, "literal in predicate position");
    if (subject) pattern.subject = subject->iri();
    if (predicate) pattern.predicate = predicate->iri();
    pattern.object = std::move(object);
    return pattern;
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& reason) const {
    throw QueryParseError(at, reason);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void skip_ws() {
    while (!at_end()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (!at_end() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::size_t skip_ws_pos() {
    skip_ws();
    return pos_;
  }

  bool keyword_ahead(std::string_view kw) const {
    if (pos_ + kw.size() > text_.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i)
      if (std::toupper(static_cast<unsigned char>(text_[pos_ + i])) != kw[i]) return false;
    return !is_name_char(peek(kw.size())) && peek(kw.size()) != ':';
  }

  void expect_keyword(std::string_view kw) {
    if (!keyword_ahead(kw)) fail(pos_, "expected " + std::string(kw));
    pos_ += kw.size();
  }

  std::string read_name() {
    std::size_t start = pos_;
    if (!at_end() && is_name_start(peek())) {
      while (!at_end() && is_name_char(peek())) ++pos_;
      while (pos_ > start && text_[pos_ - 1] == '.') --pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string read_local() {
    std::size_t start = pos_;
    if (!at_end() && is_local_start(peek())) {
      while (!at_end() && is_name_char(peek())) ++pos_;
      while (pos_ > start && text_[pos_ - 1] == '.') --pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Iri read_iri() {
    std::size_t start = pos_;
    ++pos_;  // '<'
    auto close = text_.find('>', pos_);
    if (close == std::string_view::npos) fail(start, "unterminated IRI");
    std::string value(text_.substr(pos_, close - pos_));
    if (!Iri::is_valid(value)) fail(start, "malformed IRI <" + value + ">");
    pos_ = close + 1;
    return Iri(std::move(value));
  }

  std::string read_literal() {
    std::size_t start = pos_;
    ++pos_;  // '"'
    std::string value;
    while (true) {
      if (at_end()) fail(start, "unterminated literal");
      char c = text_[pos_++];
      if (c == '"') break;
      if (c == '\\') {
        if (at_end()) fail(start, "unterminated literal");
        char e = text_[pos_++];
        switch (e) {
          case '"': value.push_back('"'); break;
          case '\\': value.push_back('\\'); break;
          case 'n': value.push_back('\n'); break;
          case 'r': value.push_back('\r'); break;
          case 't': value.push_back('\t'); break;
          default: fail(pos_ - 2, std::string("invalid escape '\\") + e + "'");
        }
      } else {
        value.push_back(c);
      }
    }
    return value;
  }

  // True when the text after the current whitespace is a bare local name
  // followed by whitespace or '}', i.e. "Politics: labour".
  bool detached_local_ahead() const {
    std::size_t i = pos_;
    while (i < text_.size() && (text_[i] == ' ' || text_[i] == '\t')) ++i;
    if (i == pos_ || i >= text_.size() || !is_local_start(text_[i])) return false;
    while (i < text_.size() && is_name_char(text_[i])) ++i;
    return i >= text_.size() || std::isspace(static_cast<unsigned char>(text_[i])) ||
           text_[i] == '}';
  }

  // nullopt for a variable.
  std::optional<Term> read_term(const char* role) {
    std::size_t start = pos_;
    char c = peek();
    if (c == '\0' || c == '}' || c == '.')
      fail(start, std::string("missing ") + role + " (a pattern has exactly three terms)");
    if (c == '?' || c == '$') {
      ++pos_;
      if (read_name().empty()) fail(start, "empty variable name");
      return std::nullopt;
    }
    if (c == '<') return Term(read_iri());
    if (c == '"') return Term::literal(read_literal());
    if (is_name_start(c) || c == ':') {
      std::string prefix = read_name();
      if (!consume(':')) fail(start, "expected ':' in prefixed name '" + prefix + "'");
      std::string local = read_local();
      if (local.empty() && detached_local_ahead()) {
        skip_ws();
        local = read_local();
      }
      auto it = prefixes_.find(prefix);
      if (it == prefixes_.end()) throw UnknownPrefix(prefix);
      std::string iri = it->second + local;
      if (!Iri::is_valid(iri)) fail(start, "prefixed name expands to a malformed IRI");
      return Term(Iri(std::move(iri)));
    }
    fail(start, std::string("unexpected character '") + c + "' in " + role);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::map<std::string, std::string> prefixes_;
};

void add_indexed(std::map<Iri, std::set<Triple>>& index, const Triple& t) {
  index[t.subject].insert(t);
}

}  // namespace

TriplePattern parse_query(std::string_view text) { return QueryParser(text).parse(); }

std::size_t Repository::insert(const std::vector<Triple>& triples) {
  std::unique_lock lock(mutex_);
  std::size_t added = 0;
  for (const auto& t : triples) added += base_.insert(t).second ? 1 : 0;
  if (added > 0) rebuild_inferences();
  return added;
}

void Repository::rebuild_inferences() {
  visible_by_subject_.clear();
  lifted_by_subject_.clear();
  std::map<Iri, std::vector<Iri>> parents;
  for (const auto& t : base_) {
    add_indexed(visible_by_subject_, t);
    if (t.predicate == vocab::owl_same_as() && t.object.is_iri())
      add_indexed(visible_by_subject_, Triple{t.object.iri(), t.predicate, t.subject});
    if (t.predicate == vocab::rdfs_sub_class_of() && t.object.is_iri())
      parents[t.subject].push_back(t.object.iri());
  }
  for (const auto& t : base_) {
    if (t.predicate != vocab::rdf_type() || !t.object.is_iri()) continue;
    std::set<Iri> seen{t.object.iri()};
    std::deque<Iri> queue{t.object.iri()};
    while (!queue.empty()) {
      Iri c = queue.front();
      queue.pop_front();
      auto it = parents.find(c);
      if (it == parents.end()) continue;
      for (const auto& d : it->second) {
        if (!seen.insert(d).second) continue;
        queue.push_back(d);
        Triple lifted{t.subject, vocab::rdf_type(), d};
        if (!base_.count(lifted)) add_indexed(lifted_by_subject_, lifted);
      }
    }
  }
}

std::vector<Triple> Repository::query(const TriplePattern& pattern) const {
  std::shared_lock lock(mutex_);
  std::set<Triple> out;
  auto collect = [&](const std::map<Iri, std::set<Triple>>& index) {
    if (pattern.subject) {
      auto it = index.find(*pattern.subject);
      if (it == index.end()) return;
      for (const auto& t : it->second)
        if (pattern.matches(t)) out.insert(t);
      return;
    }
    for (const auto& [s, triples] : index)
      for (const auto& t : triples)
        if (pattern.matches(t)) out.insert(t);
  };
  collect(visible_by_subject_);
  if (pattern.predicate && *pattern.predicate == vocab::rdf_type()) collect(lifted_by_subject_);
  return {out.begin(), out.end()};
}

std::vector<Triple> Repository::describe(const Iri& subject) const {
  return query(TriplePattern{subject, std::nullopt, std::nullopt});
}

std::size_t Repository::size() const {
  std::shared_lock lock(mutex_);
  return base_.size();
}

std::vector<Triple> Repository::base_triples() const {
  std::shared_lock lock(mutex_);
  return {base_.begin(), base_.end()};
}

void Repository::persist(const std::filesystem::path& path) const {
  const std::string text = serialize_ntriples(base_triples());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << text;
    if (!out) throw IoError("error writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

void Repository::load(const std::filesystem::path& path) {
  std::string text = read_file(path);
  try {
    load_text(text);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.reason());
  }
}

void Repository::load_text(std::string_view ntriples) {
  auto triples = parse_ntriples(ntriples);  // throws before touching the store
  std::unique_lock lock(mutex_);
  base_ = std::set<Triple>(triples.begin(), triples.end());
  rebuild_inferences();
}

nlohmann::json rows_to_json(const std::vector<Triple>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : rows) {
    out.push_back({{"s", t.subject.str()},
                   {"p", t.predicate.str()},
                   {"o", t.object.lexical()},
                   {"o_kind", t.object.is_iri() ? "iri" : "literal"}});
  }
  return out;
}

}  // namespace credomain

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

#include "credomain/rdf.hpp"

#include <cctype>

#include "credomain/errors.hpp"
#include "utf8.hpp"

namespace credomain {

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (!is_valid(value_)) throw ValidationError("invalid IRI '" + value_ + "'");
}

bool Iri::is_valid(std::string_view value) {
  if (value.empty() || !std::isalpha(static_cast<unsigned char>(value[0])))
    return false;
  std::size_t i = 1;
  while (i < value.size()) {
    auto c = static_cast<unsigned char>(value[i]);
    if (!(std::isalnum(c) || c == '+' || c == '.' || c == '-')) break;
    ++i;
  }
  if (i >= value.size() || value[i] != ':') return false;
  for (char ch : value) {
    auto c = static_cast<unsigned char>(ch);
    if (c <= 0x20 || c == '<' || c == '>' || c == '"' || c == 0x7F)
      return false;
  }
  return true;
}

std::string Iri::local_name() const {
  auto hash = value_.rfind('#');
  if (hash != std::string::npos) return value_.substr(hash + 1);
  auto slash = value_.rfind('/');
  if (slash != std::string::npos) return value_.substr(slash + 1);
  return value_.substr(value_.find(':') + 1);
}

namespace vocab {

#define CREDOMAIN_VOCAB(fn, ns, local)                 \
  const Iri& fn() {                                    \
    static const Iri iri(std::string(ns) + (local));   \
    return iri;                                        \
  }

CREDOMAIN_VOCAB(rdf_type, kRdf, "type")
CREDOMAIN_VOCAB(rdfs_sub_class_of, kRdfs, "subClassOf")
CREDOMAIN_VOCAB(owl_same_as, kOwl, "sameAs")
CREDOMAIN_VOCAB(owl_inverse_of, kOwl, "inverseOf")
CREDOMAIN_VOCAB(owl_class, kOwl, "Class")
CREDOMAIN_VOCAB(owl_object_property, kOwl, "ObjectProperty")
CREDOMAIN_VOCAB(owl_datatype_property, kOwl, "DatatypeProperty")
CREDOMAIN_VOCAB(owl_named_individual, kOwl, "NamedIndividual")
CREDOMAIN_VOCAB(owl_ontology, kOwl, "Ontology")
CREDOMAIN_VOCAB(onto_resolved_name, kOnto, "ResolvedName")
CREDOMAIN_VOCAB(onto_website, kOnto, "Website")
CREDOMAIN_VOCAB(onto_value, kOnto, "value")
CREDOMAIN_VOCAB(onto_alias, kOnto, "alias")
CREDOMAIN_VOCAB(onto_trigger, kOnto, "trigger")
CREDOMAIN_VOCAB(onto_domain_tag, kOnto, "domainTag")
CREDOMAIN_VOCAB(onto_mentions, kOnto, "mentions")

#undef CREDOMAIN_VOCAB

Iri onto(std::string_view local) { return Iri(std::string(kOnto) + std::string(local)); }

}  // namespace vocab

namespace {

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no)
      : line_(line), line_no_(line_no) {}

  Triple parse() {
    Iri subject = parse_iri("subject");
    skip_ws();
    Iri predicate = parse_iri("predicate");
    skip_ws();
    if (pos_ >= line_.size()) fail("missing object");
    Term object = line_[pos_] == '"' ? Term(parse_literal())
                                     : Term(parse_iri("object"));
    skip_ws();
    if (pos_ < line_.size() && (line_[pos_] == '@' || line_[pos_] == '^'))
      fail("language tags and datatypes are not supported");
    if (pos_ >= line_.size() || line_[pos_] != '.')
      fail("missing terminal '.'");
    ++pos_;
    skip_ws();
    if (pos_ < line_.size()) fail("unexpected content after '.'");
    return Triple{std::move(subject), std::move(predicate), std::move(object)};
  }

  void skip_ws() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t'))
      ++pos_;
  }

 private:
  [[noreturn]] void fail(const std::string& reason) const {
    throw ParseError(line_no_, reason);
  }

  Iri parse_iri(const char* what) {
    if (pos_ >= line_.size()) fail(std::string("missing ") + what);
    if (line_[pos_] != '<') fail(std::string("expected '<' to open ") + what);
    auto close = line_.find('>', pos_ + 1);
    if (close == std::string_view::npos)
      fail(std::string("unterminated IRI in ") + what);
    std::string value(line_.substr(pos_ + 1, close - pos_ - 1));
    if (!Iri::is_valid(value))
      fail("malformed IRI <" + value + "> in " + what);
    pos_ = close + 1;
    return Iri(std::move(value));
  }

  unsigned parse_hex(std::size_t digits) {
    if (pos_ + digits > line_.size()) fail("truncated unicode escape");
    unsigned value = 0;
    for (std::size_t i = 0; i < digits; ++i) {
      auto c = static_cast<unsigned char>(line_[pos_ + i]);
      if (!std::isxdigit(c)) fail("invalid unicode escape");
      value = value * 16 +
              static_cast<unsigned>(std::isdigit(c) ? c - '0'
                                                    : std::tolower(c) - 'a' + 10);
    }
    pos_ += digits;
    return value;
  }

  Literal parse_literal() {
    ++pos_;  // opening quote
    std::string value;
    while (true) {
      if (pos_ >= line_.size()) fail("unterminated literal");
      char c = line_[pos_++];
      if (c == '"') break;
      if (c != '\\') {
        value.push_back(c);
        continue;
      }
      if (pos_ >= line_.size()) fail("unterminated literal");
      char e = line_[pos_++];
      switch (e) {
        case '"': value.push_back('"'); break;
        case '\\': value.push_back('\\'); break;
        case 'n': value.push_back('\n'); break;
        case 'r': value.push_back('\r'); break;
        case 't': value.push_back('\t'); break;
        case 'u':
        case 'U': {
          unsigned cp = parse_hex(e == 'u' ? 4 : 8);
          if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
            fail("unicode escape is not a scalar value");
          utf8::append(value, cp);
          break;
        }
        default:
          fail(std::string("invalid escape '\\") + e + "'");
      }
    }
    return Literal{std::move(value)};
  }

  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Triple> parse_ntriples(std::string_view text) {
  std::vector<Triple> triples;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') {
      LineParser parser(line.substr(first), line_no);
      triples.push_back(parser.parse());
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return triples;
}

std::string to_ntriples_term(const Term& term) {
  if (term.is_iri()) return "<" + term.iri().str() + ">";
  std::string out = "\"";
  for (char c : term.literal_value()) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

std::string serialize_ntriples(const std::vector<Triple>& triples) {
  std::string out;
  for (const auto& t : triples) {
    out += "<" + t.subject.str() + "> <" + t.predicate.str() + "> ";
    out += to_ntriples_term(t.object);
    out += " .\n";
  }
  return out;
}

}  // namespace credomain

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

#ifndef CREDOMAIN_RDF_HPP_
#define CREDOMAIN_RDF_HPP_

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace credomain {

// Absolute IRI: a scheme, ':' and no whitespace or '<', '>', '"'.
class Iri {
 public:
  // Throws ValidationError when `value` is not an absolute IRI.
  explicit Iri(std::string value);

  static bool is_valid(std::string_view value);

  const std::string& str() const { return value_; }

  // Fragment after '#', else the last path segment.
  std::string local_name() const;

  friend auto operator<=>(const Iri&, const Iri&) = default;
  friend bool operator==(const Iri&, const Iri&) = default;

 private:
  std::string value_;
};

struct Literal {
  std::string value;

  friend auto operator<=>(const Literal&, const Literal&) = default;
  friend bool operator==(const Literal&, const Literal&) = default;
};

// Triple object: IRI or plain literal. IRIs order before literals.
class Term {
 public:
  Term(Iri iri) : value_(std::move(iri)) {}  // NOLINT(runtime/explicit)
  Term(Literal literal) : value_(std::move(literal)) {}  // NOLINT

  static Term literal(std::string value) { return Term(Literal{std::move(value)}); }

  bool is_iri() const { return std::holds_alternative<Iri>(value_); }
  bool is_literal() const { return !is_iri(); }
  const Iri& iri() const { return std::get<Iri>(value_); }
  const std::string& literal_value() const {
    return std::get<Literal>(value_).value;
  }
  // IRI text or literal value, without N-Triples delimiters.
  const std::string& lexical() const {
    return is_iri() ? iri().str() : literal_value();
  }

  friend auto operator<=>(const Term&, const Term&) = default;
  friend bool operator==(const Term&, const Term&) = default;

 private:
  std::variant<Iri, Literal> value_;
};

struct Triple {
  Iri subject;
  Iri predicate;
  Term object;

  friend auto operator<=>(const Triple&, const Triple&) = default;
  friend bool operator==(const Triple&, const Triple&) = default;
};

namespace vocab {

inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kOnto = "http://www.semanticweb.org/owl/owlapi/turtle#";
// Instance namespace used by the bundled politics ontology and its queries.
inline constexpr std::string_view kPolitics =
    "http://www.semanticweb.org/ontologies/Politics.owl#";

const Iri& rdf_type();
const Iri& rdfs_sub_class_of();
const Iri& owl_same_as();
const Iri& owl_inverse_of();
const Iri& owl_class();
const Iri& owl_object_property();
const Iri& owl_datatype_property();
const Iri& owl_named_individual();
const Iri& owl_ontology();
const Iri& onto_resolved_name();
const Iri& onto_website();
const Iri& onto_value();
const Iri& onto_alias();
const Iri& onto_trigger();
const Iri& onto_domain_tag();
const Iri& onto_mentions();

Iri onto(std::string_view local);

}  // namespace vocab

// Line-oriented N-Triples subset:
//   <iri> <iri> (<iri> | "literal") .
// Blank lines and lines starting with '#' are skipped. Literal escapes:
// \" \\ \n \r \t \uXXXX \UXXXXXXXX. Throws ParseError with a 1-based line.
std::vector<Triple> parse_ntriples(std::string_view text);

std::string serialize_ntriples(const std::vector<Triple>& triples);
std::string to_ntriples_term(const Term& term);

}  // namespace credomain

#endif  // CREDOMAIN_RDF_HPP_

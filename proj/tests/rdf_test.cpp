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

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "credomain/errors.hpp"
#include "test_support.hpp"

namespace credomain {
namespace {

TEST(Iri, Validation) {
  EXPECT_TRUE(Iri::is_valid("http://x/a"));
  EXPECT_TRUE(Iri::is_valid("urn:isbn:1"));
  EXPECT_FALSE(Iri::is_valid(""));
  EXPECT_FALSE(Iri::is_valid("no-scheme"));
  EXPECT_FALSE(Iri::is_valid("http://x/a b"));
  EXPECT_FALSE(Iri::is_valid("1http://x"));
  EXPECT_THROW(Iri("relative/path"), ValidationError);
}

TEST(Iri, LocalName) {
  EXPECT_EQ(Iri("http://www.semanticweb.org/ontologies/Politics.owl#labour").local_name(),
            "labour");
  EXPECT_EQ(Iri("http://dbpedia.org/resource/Daniel_Andrews").local_name(), "Daniel_Andrews");
}

TEST(ParseNTriples, LiteralObject) {
  auto ts = parse_ntriples(R"(<http://x/a> <http://x/p> "v" .)");
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_TRUE(ts[0].object.is_literal());
  EXPECT_EQ(ts[0].object.literal_value(), "v");
}

TEST(ParseNTriples, EmptyInput) { EXPECT_TRUE(parse_ntriples("").empty()); }

TEST(ParseNTriples, MissingObjectReportsLine) {
  try {
    parse_ntriples("<http://x/a> <http://x/p>");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
}

TEST(ParseNTriples, CommentsBlankLinesAndLineNumbers) {
  std::string text =
      "# header\n"
      "\n"
      "<http://x/a> <http://x/p> <http://x/b> .\r\n"
      "   # indented comment\n"
      "<http://x/a> <http://x/p> \"unterminated .\n";
  try {
    parse_ntriples(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5u);
    EXPECT_NE(e.reason().find("unterminated"), std::string::npos);
  }
}

TEST(ParseNTriples, RejectsMalformedStatements) {
  for (const char* bad : {
           "<http://x/a> <http://x/p> <http://x/b>",
           "<http://x/a> <http://x/p> <http://x/b> . extra",
           "<relative> <http://x/p> <http://x/b> .",
           "<http://x/a> \"lit\" <http://x/b> .",
           "<http://x/a> <http://x/p> \"v\"@en .",
           "<http://x/a> <http://x/p> \"bad \\q escape\" .",
           "<http://x/a> <http://x/p> \"\\uD800\" .",
           "_:b0 <http://x/p> <http://x/b> .",
       }) {
    EXPECT_THROW(parse_ntriples(bad), ParseError) << bad;
  }
}

TEST(ParseNTriples, Escapes) {
  auto ts = parse_ntriples(R"(<http://x/a> <http://x/p> "q\"b\\n\nt\tu\u00e9U\U0001F600" .)");
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_EQ(ts[0].object.literal_value(), "q\"b\\n\nt\tué" "U\U0001F600");
}

TEST(SerializeNTriples, Shapes) {
  EXPECT_EQ(serialize_ntriples({}), "");
  Triple t{Iri("http://x/a"), Iri("http://x/p"), Term(Iri("http://x/b"))};
  EXPECT_EQ(serialize_ntriples({t}), "<http://x/a> <http://x/p> <http://x/b> .\n");
  Triple q{Iri("http://x/a"), Iri("http://x/p"), Term::literal("say \"hi\"")};
  EXPECT_EQ(serialize_ntriples({q}), "<http://x/a> <http://x/p> \"say \\\"hi\\\"\" .\n");
}

TEST(Term, IrisOrderBeforeLiterals) {
  EXPECT_LT(Term(Iri("http://z/z")), Term::literal("a"));
  EXPECT_LT(Term::literal("a"), Term::literal("b"));
}

std::string random_literal(std::mt19937_64& rng) {
  static const std::vector<std::string> pieces = {
      "a", "Z", " ", "\"", "\\", "\n", "\r", "\t", "é", "中", "\U0001F600", ".", "<", ">",
      "#", "\\n", "\\\"", "http://x"};
  std::string s;
  for (std::size_t i = test::uniform(rng, 0, 8); i > 0; --i) s += test::pick(rng, pieces);
  return s;
}

Iri random_iri(std::mt19937_64& rng) {
  static const std::vector<std::string> bases = {
      "http://x.example/", "https://www.semanticweb.org/owl/owlapi/turtle#", "urn:test:",
      "http://dbpedia.org/resource/"};
  static const std::vector<std::string> locals = {"a", "labour", "Daniel_Andrews", "m.0q96",
                                                  "p%20q", "x-y", "é"};
  return Iri(test::pick(rng, bases) + test::pick(rng, locals) +
             std::to_string(test::uniform(rng, 0, 9)));
}

TEST(NTriplesProperty, RoundTrip) {
  auto rng = test::make_rng(11);
  for (int i = 0; i < test::kPropertyCases; ++i) {
    std::vector<Triple> ts;
    for (std::size_t n = test::uniform(rng, 0, 6); n > 0; --n) {
      Term object = test::uniform(rng, 0, 1) ? Term(random_iri(rng))
                                             : Term::literal(random_literal(rng));
      ts.push_back({random_iri(rng), random_iri(rng), object});
    }
    std::string text = serialize_ntriples(ts);
    EXPECT_EQ(parse_ntriples(text), ts) << text;
  }
}

}  // namespace
}  // namespace credomain

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

#include "credomain/enrichment.hpp"

#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "credomain/errors.hpp"
#include "test_support.hpp"

namespace credomain {
namespace {

const Ontology& politics() {
  static const Ontology o = load_ontology(test::data_path("politics.nt"));
  return o;
}

const LinkTable& links() {
  static const LinkTable t = load_link_table(test::data_path("links.nt"));
  return t;
}

Iri onto(const std::string& local) { return vocab::onto(local); }
Iri pol(const std::string& local) { return Iri(std::string(vocab::kPolitics) + local); }

EntityAnnotation instance_annotation(const Iri& iri, const std::string& surface) {
  return {0, surface.size(), surface, ElementKind::kInstance, iri,
          politics().find_instance(iri)->concept_iri};
}

TEST(Enrich, LabourRows) {
  auto rows = enrich(instance_annotation(pol("labour"), "Labor"), politics());
  std::vector<Triple> expected = {
      {pol("labour"), vocab::rdf_type(), onto("PoliticalParty")},
      {pol("labour"), vocab::onto_resolved_name(), Term::literal("Australian Labor Party")},
      {pol("labour"), vocab::onto_website(), Term::literal("http://www.alp.org.au")},
      {pol("labour"), vocab::onto_value(), Term::literal("labour")},
  };
  EXPECT_EQ(rows, expected);
}

TEST(Enrich, DanielAndrewsKeepsInstanceSubclassRow) {
  auto rows = enrich(instance_annotation(pol("DanielAndrews"), "DanielAndrewsMP"), politics());
  std::vector<Triple> expected = {
      {pol("DanielAndrews"), vocab::rdf_type(), onto("Politician")},
      {pol("DanielAndrews"), vocab::rdfs_sub_class_of(), onto("Person")},
      {pol("DanielAndrews"), vocab::onto_resolved_name(), Term::literal("Daniel Andrews")},
      {pol("DanielAndrews"), vocab::onto_value(), Term::literal("danielandrewsmp")},
  };
  EXPECT_EQ(rows, expected);
}

TEST(Enrich, MinimalInstance) {
  std::vector<Triple> t = {
      {Iri("http://x/C"), vocab::rdf_type(), vocab::owl_class()},
      {Iri("http://x/i"), vocab::rdf_type(), Iri("http://x/C")},
      {Iri("http://x/i"), vocab::onto_resolved_name(), Term::literal("Eye")},
      {Iri("http://x/i"), vocab::onto_value(), Term::literal("eye")},
  };
  Ontology o = build_ontology(t, "d");
  EntityAnnotation a{0, 3, "Eye", ElementKind::kInstance, Iri("http://x/i"), std::nullopt};
  auto rows = enrich(a, o);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], t[1]);
  EXPECT_EQ(rows[1], t[2]);
  EXPECT_EQ(rows[2], t[3]);
}

TEST(Enrich, RejectsNonInstances) {
  EntityAnnotation trigger{0, 4, "Vote", ElementKind::kRelationTrigger, onto("voteFor"),
                           onto("voteFor")};
  EXPECT_THROW(enrich(trigger, politics()), NotAnInstance);
  EntityAnnotation cls{0, 10, "politician", ElementKind::kConcept, onto("Politician"),
                       onto("Politician")};
  EXPECT_THROW(enrich(cls, politics()), NotAnInstance);
  EntityAnnotation stranger{0, 1, "x", ElementKind::kInstance, Iri("http://elsewhere/x"),
                            std::nullopt};
  EXPECT_THROW(enrich(stranger, politics()), NotAnInstance);
}

TEST(Interlink, SortedSameAsRows) {
  auto rows = interlink(pol("labour"), links());
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].subject, pol("labour"));
    EXPECT_EQ(rows[i].predicate, vocab::owl_same_as());
    if (i > 0) EXPECT_LT(rows[i - 1], rows[i]);
  }
  EXPECT_EQ(rows[0].object, Term(Iri("http://dbpedia.org/resource/Australian_Labor_Party")));
  EXPECT_TRUE(interlink(pol("JenniferKanis"), links()).empty());
}

TEST(LinkTable, RejectsOtherPredicatesAndSelfLinks) {
  EXPECT_THROW(link_table_from_triples({{Iri("http://a/x"), vocab::rdf_type(), Iri("http://a/C")}}),
               ValidationError);
  EXPECT_THROW(link_table_from_triples({{Iri("http://a/x"), vocab::owl_same_as(), Iri("http://a/x")}}),
               ValidationError);
  EXPECT_THROW(
      link_table_from_triples({{Iri("http://a/x"), vocab::owl_same_as(), Term::literal("x")}}),
      ValidationError);
  LinkTable a = link_table_from_triples({{Iri("http://a/x"), vocab::owl_same_as(), Iri("http://b/x")}});
  merge_link_tables(a, link_table_from_triples(
                           {{Iri("http://a/x"), vocab::owl_same_as(), Iri("http://c/x")}}));
  EXPECT_EQ(a.at(Iri("http://a/x")).size(), 2u);
}

TEST(PostIri, PercentEncodes) {
  EXPECT_EQ(post_iri("p001").str(), std::string(vocab::kOnto) + "post/p001");
  EXPECT_EQ(post_iri("a b/c").str(), std::string(vocab::kOnto) + "post/a%20b%2Fc");
}

TEST(EnrichPost, CampaignPost) {
  auto anns = annotate(clean_text("Launched Jennifer Kanis for Melbourne Campaign today. Vote "
                                  "Labor in Melbourne. Labor!"),
                       politics());
  auto rows = enrich_post("p001", anns, politics(), links());
  Iri post = post_iri("p001");
  std::set<Triple> set(rows.begin(), rows.end());
  EXPECT_EQ(set.size(), rows.size());
  EXPECT_TRUE(set.count({post, vocab::onto_mentions(), pol("JenniferKanis")}));
  EXPECT_TRUE(set.count({post, vocab::onto_mentions(), pol("labour")}));
  EXPECT_TRUE(set.count({post, vocab::onto_trigger(), onto("voteFor")}));
  EXPECT_TRUE(set.count({pol("labour"), vocab::owl_same_as(), onto("Labor")}));
  EXPECT_TRUE(set.count({pol("JenniferKanis"), vocab::rdf_type(), onto("Politician")}));
  // mentions + 3 Kanis rows + trigger + mentions + 4 labour rows + 4 links.
  std::size_t kanis = enrich(anns[0], politics()).size();
  EXPECT_EQ(rows.size(), 1 + kanis + 1 + 1 + 4 + 4);
  EXPECT_EQ(rows.front(), (Triple{post, vocab::onto_mentions(), pol("JenniferKanis")}));
}

TEST(SchemaTriples, HierarchyAndConverse) {
  auto rows = schema_triples(politics());
  std::set<Triple> set(rows.begin(), rows.end());
  EXPECT_TRUE(set.count({onto("Politician"), vocab::rdfs_sub_class_of(), onto("Person")}));
  EXPECT_TRUE(set.count({onto("PoliticalParty"), vocab::rdfs_sub_class_of(), onto("Organisation")}));
  EXPECT_TRUE(set.count({onto("memberOf"), vocab::owl_inverse_of(), onto("ledBy")}));
  EXPECT_TRUE(set.count({pol("JenniferKanis"), onto("memberOf"), pol("labour")}));
}

TEST(ExternalEntityTriples, OnlyExternalEntries) {
  std::vector<MergedEntity> merged = {
      {"Melbourne", EntitySource::kExternal, "City", ""},
      {"Labor", EntitySource::kOntology, "PoliticalParty", ""},
      {"Jennifer Kanis", EntitySource::kBoth, "Politician", "Person"},
      {"Melbourne Campaign", EntitySource::kExternal, "Organization", ""},
  };
  auto rows = external_entity_triples(merged);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], (Triple{onto("entity/Melbourne"), vocab::rdf_type(), onto("City")}));
  EXPECT_EQ(rows[1], (Triple{onto("entity/Melbourne"), vocab::onto_resolved_name(),
                             Term::literal("Melbourne")}));
  EXPECT_EQ(rows[2].subject, onto("entity/Melbourne_Campaign"));
}

TEST(EnrichProperty, EveryInstanceEnrichesConsistently) {
  const Ontology& o = politics();
  for (const auto& [iri, inst] : o.instances()) {
    auto rows = enrich(instance_annotation(iri, inst.resolved_name), o);
    ASSERT_GE(rows.size(), 3u);
    EXPECT_EQ(rows.front(), (Triple{iri, vocab::rdf_type(), inst.concept_iri}));
    EXPECT_EQ(rows.back(), (Triple{iri, vocab::onto_value(), Term::literal(inst.primary_form)}));
    std::set<Triple> set(rows.begin(), rows.end());
    EXPECT_EQ(set.size(), rows.size());
    for (const auto& t : rows) EXPECT_EQ(t.subject, iri);
  }
}

TEST(EnrichPostProperty, RepeatedAnnotationsAddNothing) {
  auto rng = test::make_rng(61);
  std::vector<EntityAnnotation> pool;
  for (const auto& [iri, inst] : politics().instances())
    pool.push_back(instance_annotation(iri, inst.resolved_name));
  for (int i = 0; i < test::kPropertyCases; ++i) {
    std::vector<EntityAnnotation> anns;
    for (std::size_t n = test::uniform(rng, 0, 6); n > 0; --n) anns.push_back(test::pick(rng, pool));
    auto once = enrich_post("p", anns, politics(), links());
    auto twice_input = anns;
    twice_input.insert(twice_input.end(), anns.begin(), anns.end());
    EXPECT_EQ(enrich_post("p", twice_input, politics(), links()), once);
    std::set<Triple> set(once.begin(), once.end());
    EXPECT_EQ(set.size(), once.size());
  }
}

}  // namespace
}  // namespace credomain

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

#include "credomain/annotator.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "credomain/ontology.hpp"
#include "test_support.hpp"

namespace credomain {
namespace {

const Ontology& politics() {
  static const Ontology o = load_ontology(test::data_path("politics.nt"));
  return o;
}

Iri onto(const std::string& local) { return vocab::onto(local); }
Iri pol(const std::string& local) { return Iri(std::string(vocab::kPolitics) + local); }

const char* kCampaignPost =
    "Launched Jennifer Kanis for Melbourne Campaign today. Outcomes instead of ineffective "
    "self indulgent commentary. Vote Labor in Melbourne.";
const char* kTributePost =
    "Thoughts and prayers with Karen Overington's family today. Karen was true Labor, a true "
    "friend and will be truly missed by all of us.";

TEST(Annotate, CampaignPost) {
  auto clean = clean_text(kCampaignPost);
  auto anns = annotate(clean, politics());
  ASSERT_EQ(anns.size(), 3u);
  EXPECT_EQ(anns[0].surface, "Jennifer Kanis");
  EXPECT_EQ(anns[0].kind, ElementKind::kInstance);
  EXPECT_EQ(anns[0].element, pol("JenniferKanis"));
  EXPECT_EQ(anns[0].concept_name(), "Politician");
  EXPECT_EQ(anns[1].surface, "Vote");
  EXPECT_EQ(anns[1].kind, ElementKind::kRelationTrigger);
  EXPECT_EQ(anns[1].element, onto("voteFor"));
  EXPECT_EQ(anns[1].concept_name(), "voteFor");
  EXPECT_EQ(anns[2].surface, "Labor");
  EXPECT_EQ(anns[2].element, pol("labour"));
  EXPECT_EQ(anns[2].concept_name(), "PoliticalParty");
  for (const auto& a : anns) EXPECT_EQ(clean.text.substr(a.start, a.end - a.start), a.surface);
}

TEST(Annotate, TributePostOnlyLabor) {
  auto anns = annotate(clean_text(kTributePost), politics());
  ASSERT_EQ(anns.size(), 1u);
  EXPECT_EQ(anns[0].surface, "Labor");
  EXPECT_EQ(anns[0].concept_name(), "PoliticalParty");
}

TEST(Annotate, NoHits) {
  EXPECT_TRUE(annotate(clean_text("nothing to see here"), politics()).empty());
  EXPECT_TRUE(annotate(clean_text(""), politics()).empty());
}

TEST(Annotate, LongestMatchWins) {
  auto anns = annotate(clean_text("australian labor party"), politics());
  ASSERT_EQ(anns.size(), 1u);
  EXPECT_EQ(anns[0].surface, "australian labor party");
  EXPECT_EQ(anns[0].element, pol("labour"));
}

TEST(Annotate, HandleMatchesPrimaryForm) {
  auto anns = annotate(clean_text("Great to join @DanielAndrewsMP today"), politics());
  ASSERT_EQ(anns.size(), 1u);
  EXPECT_EQ(anns[0].element, pol("DanielAndrews"));
}

TEST(MergeEntities, CampaignPost) {
  auto anns = annotate(clean_text(kCampaignPost), politics());
  std::vector<ExternalEntity> ext = {{"Jennifer Kanis", "Person"},
                                     {"Melbourne Campaign", "Organization"},
                                     {"Melbourne", "City"}};
  auto merged = merge_entities(ext, anns);
  std::map<std::string, MergedEntity> by;
  for (const auto& m : merged) by.emplace(m.surface, m);
  ASSERT_EQ(merged.size(), 5u);
  EXPECT_EQ(by.at("Jennifer Kanis").type_label, "Politician");
  EXPECT_EQ(by.at("Jennifer Kanis").source, EntitySource::kBoth);
  EXPECT_EQ(by.at("Jennifer Kanis").external_type, "Person");
  EXPECT_EQ(by.at("Melbourne").type_label, "City");
  EXPECT_EQ(by.at("Melbourne").source, EntitySource::kExternal);
  EXPECT_EQ(by.at("Melbourne Campaign").type_label, "Organization");
  EXPECT_EQ(by.at("Labor").source, EntitySource::kOntology);
  EXPECT_EQ(by.at("Labor").type_label, "PoliticalParty");
  EXPECT_EQ(by.at("Vote").type_label, "voteFor");
}

TEST(MergeEntities, ExternalOnlyAndEmpty) {
  auto merged = merge_entities({{"Melbourne", "City"}}, {});
  ASSERT_EQ(merged.size(), 1u);
  EXPECT_EQ(merged[0].source, EntitySource::kExternal);
  EXPECT_EQ(merged[0].type_label, "City");
  EXPECT_TRUE(merge_entities({}, {}).empty());
}

TEST(ClassifyPostDomains, Examples) {
  auto labels = [](std::vector<std::string> paths) {
    std::vector<TaxonomyLabel> out;
    for (auto& p : paths) out.push_back(make_taxonomy_label(p, 0.5, "yes"));
    return out;
  };
  auto campaign = labels({"/travel/tourist destinations/australia and new zealand", "/society/work/unions"});
  EXPECT_EQ(classify_post_domains(campaign, annotate(clean_text(kCampaignPost), politics()), politics()),
            (std::vector<std::string>{"travel", "society", "politics"}));
  EXPECT_EQ(classify_post_domains(campaign, {}, politics()),
            (std::vector<std::string>{"travel", "society"}));
  auto p002 = labels({"/society/work/unions", "/family and parenting"});
  EXPECT_EQ(classify_post_domains(p002, annotate(clean_text(kTributePost), politics()), politics()),
            (std::vector<std::string>{"society", "family and parenting", "politics"}));
  auto already = labels({"/politics/elections"});
  EXPECT_EQ(classify_post_domains(already, annotate(clean_text("Vote"), politics()), politics()),
            std::vector<std::string>{"politics"});
}

TEST(CategoryOf, Bijection) {
  EXPECT_EQ(category_of(true, true), Category::kClassifiedAndAnnotated);
  EXPECT_EQ(category_of(false, true), Category::kAnnotatedOnly);
  EXPECT_EQ(category_of(true, false), Category::kClassifiedOnly);
  EXPECT_EQ(category_of(false, false), Category::kNeither);
  std::set<int> seen;
  for (bool a : {false, true})
    for (bool b : {false, true}) seen.insert(static_cast<int>(category_of(a, b)));
  EXPECT_EQ(seen, (std::set<int>{1, 2, 3, 4}));
}

// Random lexicon over a tiny vocabulary so that n-grams collide often.
const std::vector<std::string> kWords = {"alpha", "beta", "gamma", "delta", "Alpha", "BETA"};

struct Case {
  std::vector<Triple> triples;
  std::map<std::string, Iri> preferred;  // folded form -> smallest IRI
  std::string text;
};

Case random_case(std::mt19937_64& rng) {
  Case c;
  Iri concept_iri("http://x/C");
  c.triples.push_back({concept_iri, vocab::rdf_type(), vocab::owl_class()});
  std::size_t entries = test::uniform(rng, 1, 6);
  for (std::size_t e = 0; e < entries; ++e) {
    std::string form;
    for (std::size_t n = test::uniform(rng, 1, 3); n > 0; --n) {
      if (!form.empty()) form += ' ';
      form += test::pick(rng, kWords);
    }
    Iri inst("http://x/i" + std::to_string(e));
    c.triples.push_back({inst, vocab::rdf_type(), Term(concept_iri)});
    c.triples.push_back({inst, vocab::onto_resolved_name(), Term::literal(form)});
    std::string folded = fold_case(form);
    auto it = c.preferred.find(folded);
    if (it == c.preferred.end() || inst < it->second) c.preferred.insert_or_assign(folded, inst);
  }
  for (std::size_t n = test::uniform(rng, 0, 8); n > 0; --n) {
    if (!c.text.empty()) c.text += ' ';
    c.text += test::pick(rng, kWords);
  }
  return c;
}

struct Span {
  std::size_t first_token;
  std::size_t token_count;
  Iri element;
};

// Candidate matches found by substring search over the space-delimited
// folded text, then resolved leftmost-longest without the n-gram scan.
std::vector<Span> brute_force(const Case& c) {
  std::vector<std::string> toks;
  for (const auto& t : tokenize(c.text)) toks.push_back(fold_case(t.text));
  std::string hay = " ";
  std::vector<std::size_t> token_at;  // char position -> token index
  for (std::size_t i = 0; i < toks.size(); ++i) {
    token_at.resize(hay.size() + 1, i);
    hay += toks[i] + " ";
  }
  std::vector<Span> candidates;
  for (const auto& [form, iri] : c.preferred) {
    std::string needle = " " + form + " ";
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) {
      std::size_t first = token_at[pos + 1];
      std::size_t count = static_cast<std::size_t>(std::count(form.begin(), form.end(), ' ')) + 1;
      candidates.push_back({first, count, iri});
    }
  }
  std::vector<Span> chosen;
  std::size_t cursor = 0;
  for (;;) {
    const Span* best = nullptr;
    for (const auto& s : candidates) {
      if (s.first_token < cursor) continue;
      if (!best || s.first_token < best->first_token ||
          (s.first_token == best->first_token && s.token_count > best->token_count))
        best = &s;
    }
    if (!best) break;
    chosen.push_back(*best);
    cursor = best->first_token + best->token_count;
  }
  return chosen;
}

TEST(AnnotateProperty, MatchesBruteForceLeftmostLongest) {
  auto rng = test::make_rng(51);
  for (int i = 0; i < test::kPropertyCases; ++i) {
    Case c = random_case(rng);
    Ontology o = build_ontology(c.triples, "d");
    CleanText clean = clean_text(c.text);
    auto anns = annotate(clean, o);
    auto expected = brute_force(c);
    SCOPED_TRACE(c.text);
    ASSERT_EQ(anns.size(), expected.size());
    for (std::size_t k = 0; k < anns.size(); ++k) {
      const auto& tok = clean.tokens;
      EXPECT_EQ(anns[k].start, tok[expected[k].first_token].offset);
      const auto& last = tok[expected[k].first_token + expected[k].token_count - 1];
      EXPECT_EQ(anns[k].end, last.offset + last.text.size());
      EXPECT_EQ(anns[k].element, expected[k].element);
      if (k > 0) EXPECT_LT(anns[k - 1].end, anns[k].start);
    }
    EXPECT_EQ(annotate(clean, o), anns);
  }
}

TEST(MergeProperty, OrderIndependentAndIdempotent) {
  auto rng = test::make_rng(52);
  const std::vector<std::string> surfaces = {"Melbourne", "melbourne", "Labor", "Jennifer Kanis",
                                             "Vote", "Sydney"};
  const std::vector<std::string> types = {"City", "Person", "Organization"};
  for (int i = 0; i < test::kPropertyCases; ++i) {
    std::vector<ExternalEntity> ext;
    for (std::size_t n = test::uniform(rng, 0, 5); n > 0; --n)
      ext.push_back({test::pick(rng, surfaces), test::pick(rng, types)});
    std::string text;
    for (std::size_t n = test::uniform(rng, 0, 5); n > 0; --n) text += test::pick(rng, surfaces) + " ";
    auto anns = annotate(clean_text(text), politics());
    auto merged = merge_entities(ext, anns);
    auto shuffled = ext;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(merge_entities(shuffled, anns), merged);
    auto doubled = ext;
    doubled.insert(doubled.end(), ext.begin(), ext.end());
    EXPECT_EQ(merge_entities(doubled, anns), merged);
    std::set<std::string> keys;
    for (const auto& m : merged) EXPECT_TRUE(keys.insert(fold_case(m.surface)).second);
  }
}

}  // namespace
}  // namespace credomain

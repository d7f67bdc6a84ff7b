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

#include "credomain/text_normalizer.hpp"

#include <gtest/gtest.h>

#include <cstdint>

#include <string>
#include <utility>
#include <vector>

#include "test_support.hpp"

namespace credomain {
namespace {

TEST(CleanText, HandleHashtagAndUrl) {
  EXPECT_EQ(clean_text("@pwong Vote #Labor! http://t.co/x").text, "pwong Vote Labor");
}

TEST(CleanText, Empty) {
  auto c = clean_text("");
  EXPECT_EQ(c.text, "");
  EXPECT_TRUE(c.tokens.empty());
}

TEST(CleanText, RepairsCurlyApostropheMojibake) {
  EXPECT_EQ(clean_text("Karenâ€™s family").text, "Karen's family");
}

TEST(IsClean, Examples) {
  EXPECT_TRUE(is_clean("pwong Vote Labor"));
  EXPECT_FALSE(is_clean("#Labor"));
  EXPECT_TRUE(is_clean(""));
  EXPECT_FALSE(is_clean(" padded"));
}

// Pairs produced by encoding the intended character as UTF-8 and decoding
// the bytes as cp1252 (tests/oracles/frozen_values.py).
TEST(RepairMojibake, FrozenPairs) {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"â€™", "’"},
      {"â€œ", "“"},
      {"â€\xc2\x9d", "”"},
      {"â€“", "–"},
      {"â€”", "—"},
      {"â€¦", "…"},
      {"Ã©", "é"},
      {"Ã±", "ñ"},
      {"Ã¼", "ü"},
      {"Â£", "£"},
      {"â‚¬", "€"},
  };
  for (const auto& [broken, intended] : pairs) {
    EXPECT_EQ(repair_mojibake(broken), intended) << broken;
    EXPECT_EQ(repair_mojibake("x" + broken + "y"), "x" + intended + "y");
    EXPECT_LT(codepoint_count(intended), codepoint_count(broken));
  }
}

TEST(RepairMojibake, UnknownSequencesPassThrough) {
  for (std::string s : {"café", "naïve Ã x", "â alone", "plain ascii", ""})
    EXPECT_EQ(repair_mojibake(s), s);
}

TEST(CleanText, RemovesUrls) {
  EXPECT_EQ(clean_text("see www.alp.org.au now").text, "see now");
  EXPECT_EQ(clean_text("https://a.example/c?d=e,f end").text, "end");
  EXPECT_EQ(clean_text("HTTP://LOUD.example.org/x").text, "");
  EXPECT_FALSE(contains_url(clean_text("a http://x.y/z b www.q.r").text));
}

TEST(CleanText, KeepsIntraWordApostropheAndHyphen) {
  EXPECT_EQ(clean_text("e-commerce rock'n'roll").text, "e-commerce rock'n'roll");
  EXPECT_EQ(clean_text("Karen’s").text, "Karen's");
  EXPECT_EQ(clean_text("'quoted' - dash --").text, "quoted dash");
  EXPECT_EQ(clean_text("end-").text, "end");
}

TEST(CleanText, RemovesEmojiAndSymbols) {
  EXPECT_EQ(clean_text("Great \U0001F44F\U0001F3FD day ❤️").text, "Great day");
  EXPECT_EQ(clean_text("family \U0001F468‍\U0001F469‍\U0001F467 flag \U0001F1E6\U0001F1FA")
                .text,
            "family flag");
  // Currency and math symbols are neither punctuation nor emoji.
  EXPECT_EQ(clean_text("price $5 + 3 = 8 \u2122").text, "price $5 + 3 = 8");
}

TEST(CleanText, FullwidthMarkers) {
  EXPECT_EQ(clean_text("＠user ＃tag").text, "user tag");
}

TEST(CleanText, SlangAndCaseUntouched) {
  EXPECT_EQ(clean_text("LOL that was gr8").text, "LOL that was gr8");
}

TEST(CleanText, InvalidBytesBecomeValidUtf8) {
  auto c = clean_text("bad\xff\xfe bytes \xc3");
  EXPECT_EQ(to_valid_utf8(c.text), c.text);
  EXPECT_TRUE(is_clean(c.text));
  EXPECT_EQ(to_valid_utf8("a\xff"), "a�");
}

TEST(CleanText, TokenOffsets) {
  auto c = clean_text("  Vote \t  Labor\n");
  EXPECT_EQ(c.text, "Vote Labor");
  ASSERT_EQ(c.tokens.size(), 2u);
  EXPECT_EQ(c.tokens[0], (Token{"Vote", 0}));
  EXPECT_EQ(c.tokens[1], (Token{"Labor", 5}));
}

TEST(FoldCase, Lowercases) {
  EXPECT_EQ(fold_case("LABOR Ünion"), "labor ünion");
  EXPECT_EQ(fold_case(""), "");
}

// Random post-like strings built from fragments that exercise every rule.
std::string random_post(std::mt19937_64& rng) {
  static const std::vector<std::string> fragments = {
      "Vote", "Labor", "Jennifer", "Kanis", "e-commerce", "don't", "@user", "#tag", "@", "#",
      "http://t.co/abc", "https://x.example/p?q=1", "www.alp.org.au", "!", "?", ",", ".",
      "'", "-", "--", "’", "“", "—", "\U0001F44F", "\U0001F3FD", "❤",
      "️", "‍", "\U0001F1E6", "â€™", "â€”",
      "Ã©", "Â£", "â", "€", "\xff", "\xc3", "\xe2\x80",
      "été", "中文", "́", "＠", "＃", "\t", "\n", "  ",
      " ", " ", "lol", "123", "$", "+", "=", "_", "~", "®"};
  std::string s;
  std::size_t n = test::uniform(rng, 0, 14);
  for (std::size_t i = 0; i < n; ++i) {
    s += test::pick(rng, fragments);
    if (test::uniform(rng, 0, 2) == 0) s += ' ';
  }
  return s;
}

std::vector<char32_t> decode_all(const std::string& s) {
  std::vector<char32_t> out;
  for (std::size_t i = 0; i < s.size();) {
    unsigned char b = static_cast<unsigned char>(s[i]);
    int len = b < 0x80 ? 1 : b < 0xE0 ? 2 : b < 0xF0 ? 3 : 4;
    char32_t c = len == 1 ? b : len == 2 ? (b & 0x1F) : len == 3 ? (b & 0x0F) : (b & 0x07);
    for (int k = 1; k < len; ++k) c = (c << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
    out.push_back(c);
    i += static_cast<std::size_t>(len);
  }
  return out;
}

TEST(CleanTextProperty, IdempotentAndFreeOfForbiddenCharacters) {
  auto rng = test::make_rng(1);
  for (int i = 0; i < test::kPropertyCases; ++i) {
    std::string raw = random_post(rng);
    auto c = clean_text(raw);
    SCOPED_TRACE(raw);
    EXPECT_EQ(clean_text(c.text).text, c.text);
    EXPECT_TRUE(is_clean(c.text));
    EXPECT_EQ(to_valid_utf8(c.text), c.text);
    EXPECT_EQ(c.text.find('@'), std::string::npos);
    EXPECT_EQ(c.text.find('#'), std::string::npos);
    EXPECT_FALSE(contains_url(c.text));
    for (char32_t cp : decode_all(c.text)) EXPECT_FALSE(is_emoji_codepoint(cp)) << std::hex << static_cast<std::uint32_t>(cp);
    std::string joined;
    for (const auto& t : c.tokens) {
      EXPECT_EQ(c.text.compare(t.offset, t.text.size(), t.text), 0);
      if (!joined.empty()) joined += ' ';
      joined += t.text;
    }
    EXPECT_EQ(joined, c.text);
    for (std::size_t k = 1; k < c.tokens.size(); ++k)
      EXPECT_GT(c.tokens[k].offset, c.tokens[k - 1].offset + c.tokens[k - 1].text.size());
  }
}

TEST(CleanTextProperty, LengthNeverGrowsWithoutRepair) {
  auto rng = test::make_rng(2);
  for (int i = 0; i < test::kPropertyCases; ++i) {
    std::string raw = random_post(rng);
    auto c = clean_text(raw, CleanOptions{false});
    EXPECT_LE(codepoint_count(c.text), codepoint_count(to_valid_utf8(raw))) << raw;
    EXPECT_LE(codepoint_count(repair_mojibake(to_valid_utf8(raw))),
              codepoint_count(to_valid_utf8(raw)));
  }
}

}  // namespace
}  // namespace credomain

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

#ifndef CREDOMAIN_TEXT_NORMALIZER_HPP_
#define CREDOMAIN_TEXT_NORMALIZER_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace credomain {

// One raw social message.
struct Post {
  std::string id;
  std::string user_id;
  std::string raw_text;
  std::string created_at;  // ISO-8601, may be empty
};

struct Token {
  std::string text;
  std::size_t offset = 0;  // byte offset into CleanText::text

  friend bool operator==(const Token&, const Token&) = default;
};

struct CleanText {
  std::string text;
  std::vector<Token> tokens;
};

struct CleanOptions {
  bool repair_mojibake = true;
};

// Cleanses raw post text:
//   - cp1252 mojibake (e.g. "â€™") is repaired and invalid UTF-8 is replaced
//     with U+FFFD,
//   - URLs (scheme-prefixed or "www.") are removed,
//   - '@' and '#' markers are stripped, keeping the handle or tag word,
//   - punctuation is removed except apostrophes and hyphens between two
//     word characters, which are normalized to ASCII,
//   - emoji and other symbols (So, Sk, emoji blocks, joiners, selectors)
//     are removed,
//   - whitespace is collapsed to single spaces and trimmed.
// The passes run to a fixed point, so the result is idempotent.
CleanText clean_text(std::string_view raw, const CleanOptions& options = {});

bool is_clean(std::string_view text);

// Splits cleansed text on single spaces.
std::vector<Token> tokenize(std::string_view cleaned);

// Replaces invalid UTF-8 sequences with U+FFFD.
std::string to_valid_utf8(std::string_view bytes);

// Rewrites known cp1252-decoded UTF-8 sequences to the intended characters.
// Unknown sequences pass through.
std::string repair_mojibake(std::string_view utf8);

// Lowercase folding used for every case-insensitive comparison.
std::string fold_case(std::string_view utf8);

bool contains_url(std::string_view utf8);
bool is_emoji_codepoint(char32_t c);

std::size_t codepoint_count(std::string_view utf8);

}  // namespace credomain

#endif  // CREDOMAIN_TEXT_NORMALIZER_HPP_

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

#include <unicode/uchar.h>

#include <array>
#include <map>

#include "utf8.hpp"

namespace credomain {
namespace {

constexpr int kMaxPasses = 32;

// cp1252 code points for bytes 0x80..0x9F; zero marks bytes cp1252 leaves
// undefined, which decoders commonly pass through as C1 controls.
constexpr std::array<char32_t, 32> kCp1252High = {
    0x20AC, 0,      0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021,
    0x02C6, 0x2030, 0x0160, 0x2039, 0x0152, 0,      0x017D, 0,
    0,      0x2018, 0x2019, 0x201C, 0x201D, 0x2022, 0x2013, 0x2014,
    0x02DC, 0x2122, 0x0161, 0x203A, 0x0153, 0,      0x017E, 0x0178};

char32_t cp1252_byte(unsigned char b) {
  if (b >= 0x80 && b <= 0x9F) {
    char32_t c = kCp1252High[b - 0x80];
    return c != 0 ? c : static_cast<char32_t>(b);
  }
  return static_cast<char32_t>(b);
}

// Mojibake sequence -> intended code point, for every character whose UTF-8
// encoding spans bytes >= 0x80 and that commonly appears in posts: the
// Latin-1 supplement and the cp1252 extras (smart quotes, dashes, euro...).
class MojibakeTable {
 public:
  MojibakeTable() {
    for (char32_t c = 0xA0; c <= 0xFF; ++c) add(c);
    for (char32_t c : kCp1252High)
      if (c != 0) add(c);
  }

  // Longest key match at `pos`; returns matched length (0 if none).
  std::size_t match(std::u32string_view s, std::size_t pos,
                    char32_t* repaired) const {
    for (std::size_t len = max_len_; len >= 2; --len) {
      if (pos + len > s.size()) continue;
      auto it = table_.find(std::u32string(s.substr(pos, len)));
      if (it != table_.end()) {
        *repaired = it->second;
        return len;
      }
    }
    return 0;
  }

 private:
  void add(char32_t target) {
    std::string bytes;
    utf8::append(bytes, target);
    std::u32string key;
    for (unsigned char b : bytes) key.push_back(cp1252_byte(b));
    table_.emplace(std::move(key), target);
    max_len_ = std::max(max_len_, bytes.size());
  }

  std::map<std::u32string, char32_t> table_;
  std::size_t max_len_ = 0;
};

const MojibakeTable& mojibake_table() {
  static const MojibakeTable table;
  return table;
}

std::u32string repair(std::u32string_view s) {
  const auto& table = mojibake_table();
  std::u32string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    char32_t repaired = 0;
    std::size_t n = table.match(s, i, &repaired);
    if (n > 0) {
      out.push_back(repaired);
      i += n;
    } else {
      out.push_back(s[i++]);
    }
  }
  return out;
}

bool is_space(char32_t c) {
  return u_isUWhiteSpace(static_cast<UChar32>(c)) ||
         u_charType(static_cast<UChar32>(c)) == U_CONTROL_CHAR;
}

bool is_word_char(char32_t c) {
  auto cp = static_cast<UChar32>(c);
  if (u_isalpha(cp) || u_isdigit(cp)) return true;
  auto type = u_charType(cp);
  return type == U_NON_SPACING_MARK || type == U_COMBINING_SPACING_MARK;
}

bool is_punctuation(char32_t c) {
  switch (u_charType(static_cast<UChar32>(c))) {
    case U_DASH_PUNCTUATION:
    case U_START_PUNCTUATION:
    case U_END_PUNCTUATION:
    case U_CONNECTOR_PUNCTUATION:
    case U_OTHER_PUNCTUATION:
    case U_INITIAL_PUNCTUATION:
    case U_FINAL_PUNCTUATION:
      return true;
    default:
      return false;
  }
}

bool is_apostrophe(char32_t c) {
  return c == U'\'' || c == 0x2018 || c == 0x2019 || c == 0x02BC;
}

bool is_hyphen(char32_t c) { return c == U'-' || c == 0x2010 || c == 0x2011; }

bool is_marker(char32_t c) {
  return c == U'@' || c == U'#' || c == 0xFF20 || c == 0xFF03;
}

bool ascii_alpha(char32_t c) {
  return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z');
}

char32_t ascii_lower(char32_t c) {
  return (c >= U'A' && c <= U'Z') ? c + 32 : c;
}

// Length of a URL prefix ("scheme://" or "www.") starting at `pos`, or 0.
std::size_t url_prefix_at(std::u32string_view s, std::size_t pos) {
  if (pos + 4 <= s.size() && ascii_lower(s[pos]) == U'w' &&
      ascii_lower(s[pos + 1]) == U'w' && ascii_lower(s[pos + 2]) == U'w' &&
      s[pos + 3] == U'.')
    return 4;
  if (pos >= s.size() || !ascii_alpha(s[pos])) return 0;
  std::size_t i = pos + 1;
  while (i < s.size() && (ascii_alpha(s[i]) || (s[i] >= U'0' && s[i] <= U'9') ||
                          s[i] == U'+' || s[i] == U'.' || s[i] == U'-'))
    ++i;
  if (i + 3 <= s.size() && s[i] == U':' && s[i + 1] == U'/' &&
      s[i + 2] == U'/')
    return i + 3 - pos;
  return 0;
}

bool url_starts_at(std::u32string_view s, std::size_t pos) {
  if (pos > 0 && is_word_char(s[pos - 1])) return false;
  return url_prefix_at(s, pos) > 0;
}

// Blanks every URL through the end of its whitespace-delimited run.
std::u32string remove_urls(std::u32string_view s) {
  std::u32string out(s);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!url_starts_at(out, i)) continue;
    std::size_t j = i;
    while (j < out.size() && !is_space(out[j])) out[j++] = U' ';
    i = j;
  }
  return out;
}

std::u32string filter_characters(std::u32string_view s) {
  std::u32string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    char32_t c = s[i];
    if (is_marker(c)) continue;
    if (is_space(c)) {
      out.push_back(U' ');
      continue;
    }
    if (is_apostrophe(c) || is_hyphen(c)) {
      bool intra_word = i > 0 && i + 1 < s.size() && is_word_char(s[i - 1]) &&
                        is_word_char(s[i + 1]);
      if (intra_word)
        out.push_back(is_apostrophe(c) ? U'\'' : U'-');
      else
        out.push_back(U' ');
      continue;
    }
    if (is_punctuation(c) || is_emoji_codepoint(c)) {
      out.push_back(U' ');
      continue;
    }
    if (u_charType(static_cast<UChar32>(c)) == U_FORMAT_CHAR) continue;
    out.push_back(c);
  }
  return out;
}

std::u32string collapse_whitespace(std::u32string_view s) {
  std::u32string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char32_t c : s) {
    if (c == U' ') {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out.push_back(U' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::u32string clean_pass(std::u32string_view s, const CleanOptions& options) {
  std::u32string work = options.repair_mojibake ? repair(s) : std::u32string(s);
  work = remove_urls(work);
  work = filter_characters(work);
  return collapse_whitespace(work);
}

}  // namespace

bool is_emoji_codepoint(char32_t c) {
  if ((c >= 0x1F000 && c <= 0x1FAFF) || (c >= 0x2600 && c <= 0x27BF) ||
      (c >= 0x2B00 && c <= 0x2BFF) || (c >= 0xFE00 && c <= 0xFE0F) ||
      (c >= 0xE0020 && c <= 0xE007F) || c == 0x200D || c == 0x20E3)
    return true;
  auto type = u_charType(static_cast<UChar32>(c));
  return type == U_OTHER_SYMBOL || type == U_MODIFIER_SYMBOL;
}

std::string to_valid_utf8(std::string_view bytes) {
  return utf8::encode(utf8::decode(bytes));
}

std::string repair_mojibake(std::string_view text) {
  return utf8::encode(repair(utf8::decode(text)));
}

std::string fold_case(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : utf8::decode(text))
    utf8::append(out, static_cast<char32_t>(u_tolower(static_cast<UChar32>(c))));
  return out;
}

bool contains_url(std::string_view text) {
  std::u32string s = utf8::decode(text);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (url_starts_at(s, i)) return true;
  return false;
}

std::size_t codepoint_count(std::string_view text) {
  return utf8::decode(text).size();
}

std::vector<Token> tokenize(std::string_view cleaned) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < cleaned.size()) {
    while (i < cleaned.size() && cleaned[i] == ' ') ++i;
    std::size_t start = i;
    while (i < cleaned.size() && cleaned[i] != ' ') ++i;
    if (i > start)
      tokens.push_back({std::string(cleaned.substr(start, i - start)), start});
  }
  return tokens;
}

CleanText clean_text(std::string_view raw, const CleanOptions& options) {
  std::u32string current = utf8::decode(raw);
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    std::u32string next = clean_pass(current, options);
    if (next == current) break;
    current = std::move(next);
  }
  CleanText out;
  out.text = utf8::encode(current);
  out.tokens = tokenize(out.text);
  return out;
}

bool is_clean(std::string_view text) { return clean_text(text).text == text; }

}  // namespace credomain

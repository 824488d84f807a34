#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ctxa {

/// Decode a UTF-8 string into code points. Invalid byte sequences are
/// reported through `ok` (when non-null) and skipped; `byte_of` (when
/// non-null) receives the byte offset each code point starts at.
std::vector<char32_t> utf8_decode(std::string_view text, bool* ok = nullptr,
                                  std::vector<std::size_t>* byte_of = nullptr);

/// Encode code points back to UTF-8.
std::string utf8_encode(const std::vector<char32_t>& cps);

/// True if the whole string is well-formed UTF-8.
bool utf8_valid(std::string_view text);

/// Canonical surface-form normalization used for every label and token:
/// canonical composition (Latin ranges), lowercasing, underscores and
/// whitespace runs collapsed to single spaces, boundary punctuation
/// stripped per token (interior hyphens and apostrophes survive).
/// Idempotent; never throws on malformed input (bad bytes are dropped).
std::string normalize(std::string_view surface);

/// Lowercase a single code point (ASCII, Latin-1 Supplement, Latin Extended-A).
char32_t to_lower(char32_t cp);

/// True for code points that can appear inside a token: letters, digits,
/// and anything non-ASCII that is not in the known punctuation set.
bool is_word_char(char32_t cp);

/// True for the separators normalize() collapses: ASCII whitespace,
/// underscore, NBSP.
bool is_space_like(char32_t cp);

}  // namespace ctxa

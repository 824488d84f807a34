#include "ctxa/normalize.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace ctxa {

namespace {

// Canonical composition pairs for the Latin-1 Supplement and Latin
// Extended-A blocks: (base, combining mark) -> precomposed. Enough for
// the French/English material this tool targets; anything outside the
// table is left decomposed.
struct Composition {
  char32_t base;
  char32_t mark;
  char32_t composed;
};

constexpr Composition kCompositions[] = {
    // grave U+0300
    {U'A', 0x0300, 0x00C0}, {U'E', 0x0300, 0x00C8}, {U'I', 0x0300, 0x00CC},
    {U'O', 0x0300, 0x00D2}, {U'U', 0x0300, 0x00D9},
    {U'a', 0x0300, 0x00E0}, {U'e', 0x0300, 0x00E8}, {U'i', 0x0300, 0x00EC},
    {U'o', 0x0300, 0x00F2}, {U'u', 0x0300, 0x00F9},
    // acute U+0301
    {U'A', 0x0301, 0x00C1}, {U'E', 0x0301, 0x00C9}, {U'I', 0x0301, 0x00CD},
    {U'O', 0x0301, 0x00D3}, {U'U', 0x0301, 0x00DA}, {U'Y', 0x0301, 0x00DD},
    {U'a', 0x0301, 0x00E1}, {U'e', 0x0301, 0x00E9}, {U'i', 0x0301, 0x00ED},
    {U'o', 0x0301, 0x00F3}, {U'u', 0x0301, 0x00FA}, {U'y', 0x0301, 0x00FD},
    {U'C', 0x0301, 0x0106}, {U'c', 0x0301, 0x0107},
    {U'N', 0x0301, 0x0143}, {U'n', 0x0301, 0x0144},
    {U'S', 0x0301, 0x015A}, {U's', 0x0301, 0x015B},
    {U'Z', 0x0301, 0x0179}, {U'z', 0x0301, 0x017A},
    // circumflex U+0302
    {U'A', 0x0302, 0x00C2}, {U'E', 0x0302, 0x00CA}, {U'I', 0x0302, 0x00CE},
    {U'O', 0x0302, 0x00D4}, {U'U', 0x0302, 0x00DB},
    {U'a', 0x0302, 0x00E2}, {U'e', 0x0302, 0x00EA}, {U'i', 0x0302, 0x00EE},
    {U'o', 0x0302, 0x00F4}, {U'u', 0x0302, 0x00FB},
    // tilde U+0303
    {U'A', 0x0303, 0x00C3}, {U'N', 0x0303, 0x00D1}, {U'O', 0x0303, 0x00D5},
    {U'a', 0x0303, 0x00E3}, {U'n', 0x0303, 0x00F1}, {U'o', 0x0303, 0x00F5},
    // diaeresis U+0308
    {U'A', 0x0308, 0x00C4}, {U'E', 0x0308, 0x00CB}, {U'I', 0x0308, 0x00CF},
    {U'O', 0x0308, 0x00D6}, {U'U', 0x0308, 0x00DC},
    {U'a', 0x0308, 0x00E4}, {U'e', 0x0308, 0x00EB}, {U'i', 0x0308, 0x00EF},
    {U'o', 0x0308, 0x00F6}, {U'u', 0x0308, 0x00FC}, {U'y', 0x0308, 0x00FF},
    // ring above U+030A
    {U'A', 0x030A, 0x00C5}, {U'a', 0x030A, 0x00E5},
    // caron U+030C
    {U'C', 0x030C, 0x010C}, {U'c', 0x030C, 0x010D},
    {U'S', 0x030C, 0x0160}, {U's', 0x030C, 0x0161},
    {U'Z', 0x030C, 0x017D}, {U'z', 0x030C, 0x017E},
    // cedilla U+0327
    {U'C', 0x0327, 0x00C7}, {U'c', 0x0327, 0x00E7},
    {U'S', 0x0327, 0x015E}, {U's', 0x0327, 0x015F},
};

char32_t compose_pair(char32_t base, char32_t mark) {
  for (const auto& c : kCompositions)
    if (c.base == base && c.mark == mark) return c.composed;
  return 0;
}

// Non-ASCII punctuation that terminates tokens and is stripped at token
// boundaries.
bool is_unicode_punct(char32_t cp) {
  switch (cp) {
    case 0x00A1:  // inverted exclamation
    case 0x00AB:  // left guillemet
    case 0x00BB:  // right guillemet
    case 0x00BF:  // inverted question
    case 0x2010:  // hyphen (treated as punctuation boundary-only? no: mapped below)
    case 0x2013:  // en dash
    case 0x2014:  // em dash
    case 0x2018:  // left single quote
    case 0x201C:  // left double quote
    case 0x201D:  // right double quote
    case 0x2026:  // ellipsis
    case 0x2022:  // bullet
      return true;
    default:
      return false;
  }
}

bool is_ascii_alnum(char32_t cp) {
  return (cp >= U'0' && cp <= U'9') || (cp >= U'a' && cp <= U'z') ||
         (cp >= U'A' && cp <= U'Z');
}

// Letters and digits for boundary-stripping purposes.
bool is_alnum_like(char32_t cp) {
  if (cp < 0x80) return is_ascii_alnum(cp);
  if (is_space_like(cp) || is_unicode_punct(cp)) return false;
  if (cp >= 0x0300 && cp <= 0x036F) return true;  // combining marks ride along
  return true;
}

}  // namespace

bool is_space_like(char32_t cp) {
  switch (cp) {
    case U' ':
    case U'\t':
    case U'\r':
    case U'\n':
    case U'\f':
    case U'\v':
    case U'_':
    case 0x00A0:
      return true;
    default:
      return false;
  }
}

bool is_word_char(char32_t cp) {
  if (cp < 0x80) return is_ascii_alnum(cp);
  if (cp == 0x2019) return true;  // typographic apostrophe, mapped to '
  return !is_space_like(cp) && !is_unicode_punct(cp);
}

char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  // Latin-1 Supplement uppercase range, skipping the multiplication sign.
  if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
  // Latin Extended-A case pairs.
  if (cp >= 0x0100 && cp <= 0x0137) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp >= 0x0139 && cp <= 0x0148) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp >= 0x014A && cp <= 0x0177) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp == 0x0178) return 0x00FF;
  if (cp == 0x0179 || cp == 0x017B || cp == 0x017D) return cp + 1;
  return cp;
}

std::vector<char32_t> utf8_decode(std::string_view text, bool* ok,
                                  std::vector<std::size_t>* byte_of) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  if (ok) *ok = true;
  std::size_t i = 0;
  const auto* s = reinterpret_cast<const unsigned char*>(text.data());
  const std::size_t n = text.size();
  auto bad = [&](std::size_t advance) {
    if (ok) *ok = false;
    i += advance;
  };
  while (i < n) {
    const std::size_t start = i;
    const unsigned char b0 = s[i];
    char32_t cp = 0;
    std::size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      bad(1);
      continue;
    }
    if (i + len > n) {
      bad(1);
      continue;
    }
    bool valid = true;
    for (std::size_t k = 1; k < len; ++k) {
      if ((s[i + k] & 0xC0) != 0x80) {
        valid = false;
        break;
      }
      cp = (cp << 6) | (s[i + k] & 0x3F);
    }
    if (!valid) {
      bad(1);
      continue;
    }
    // Reject overlong encodings, surrogates, and out-of-range values.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      bad(1);
      continue;
    }
    out.push_back(cp);
    if (byte_of) byte_of->push_back(start);
    i += len;
  }
  return out;
}

std::string utf8_encode(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

bool utf8_valid(std::string_view text) {
  bool ok = false;
  utf8_decode(text, &ok);
  return ok;
}

std::string normalize(std::string_view surface) {
  std::vector<char32_t> cps = utf8_decode(surface);

  // Compose combining marks and fold the typographic apostrophe, then
  // lowercase.
  std::vector<char32_t> folded;
  folded.reserve(cps.size());
  for (char32_t cp : cps) {
    if (cp == 0x2019) cp = U'\'';
    if (cp >= 0x0300 && cp <= 0x036F && !folded.empty()) {
      if (char32_t composed = compose_pair(folded.back(), cp)) {
        folded.back() = composed;
        continue;
      }
    }
    folded.push_back(to_lower(cp));
  }

  // Build runs of token characters (letters, digits, hyphen, apostrophe);
  // every other code point separates tokens. Hyphens and apostrophes are
  // then trimmed off run boundaries so only interior ones survive. Joining
  // with single spaces keeps the result aligned with document tokenization.
  auto is_run_char = [](char32_t cp) {
    return is_alnum_like(cp) || cp == U'\'' || cp == U'-';
  };
  std::vector<char32_t> out;
  out.reserve(folded.size());
  std::size_t i = 0;
  const std::size_t n = folded.size();
  while (i < n) {
    while (i < n && !is_run_char(folded[i])) ++i;
    std::size_t j = i;
    while (j < n && is_run_char(folded[j])) ++j;
    std::size_t a = i, b = j;
    while (a < b && !is_alnum_like(folded[a])) ++a;
    while (b > a && !is_alnum_like(folded[b - 1])) --b;
    if (a < b) {
      if (!out.empty()) out.push_back(U' ');
      for (std::size_t k = a; k < b; ++k) out.push_back(folded[k]);
    }
    i = j;
  }
  return utf8_encode(out);
}

}  // namespace ctxa

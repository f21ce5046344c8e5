#include "quoteattr/text.hpp"

#include <array>
#include <cctype>

namespace quoteattr {

std::uint32_t decode_utf8(std::string_view text, std::size_t& i) {
  const auto* s = reinterpret_cast<const unsigned char*>(text.data());
  const std::size_t n = text.size();
  unsigned char c = s[i];
  if (c < 0x80) {
    ++i;
    return c;
  }
  std::size_t len = 0;
  std::uint32_t cp = 0;
  if ((c & 0xE0) == 0xC0) {
    len = 2;
    cp = c & 0x1F;
  } else if ((c & 0xF0) == 0xE0) {
    len = 3;
    cp = c & 0x0F;
  } else if ((c & 0xF8) == 0xF0) {
    len = 4;
    cp = c & 0x07;
  } else {
    ++i;
    return 0xFFFD;
  }
  if (i + len > n) {
    ++i;
    return 0xFFFD;
  }
  for (std::size_t k = 1; k < len; ++k) {
    unsigned char cc = s[i + k];
    if ((cc & 0xC0) != 0x80) {
      ++i;
      return 0xFFFD;
    }
    cp = (cp << 6) | (cc & 0x3F);
  }
  i += len;
  return cp;
}

void encode_utf8(std::uint32_t cp, std::string& out) {
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

std::size_t codepoint_count(std::string_view text) {
  std::size_t i = 0, n = 0;
  while (i < text.size()) {
    decode_utf8(text, i);
    ++n;
  }
  return n;
}

bool is_letter(std::uint32_t cp) {
  if (cp < 0x80) return std::isalpha(static_cast<int>(cp)) != 0;
  // Latin-1 supplement letters plus Latin Extended-A.
  if (cp >= 0xC0 && cp <= 0xFF && cp != 0xD7 && cp != 0xF7) return true;
  if (cp >= 0x100 && cp <= 0x17F) return true;
  return false;
}

bool is_upper(std::uint32_t cp) {
  if (cp < 0x80) return std::isupper(static_cast<int>(cp)) != 0;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return true;
  if (cp >= 0x100 && cp <= 0x17F) return (cp % 2) == 0 && cp != 0x131;
  return false;
}

bool is_lower(std::uint32_t cp) { return is_letter(cp) && !is_upper(cp); }

bool is_digit(std::uint32_t cp) { return cp < 0x80 && std::isdigit(static_cast<int>(cp)) != 0; }

bool is_space(std::uint32_t cp) {
  if (cp < 0x80) return std::isspace(static_cast<int>(cp)) != 0;
  return cp == 0xA0 || cp == 0x2009 || cp == 0x200A || cp == 0x2002 || cp == 0x2003;
}

namespace {

bool is_word_cp(std::uint32_t cp) { return is_letter(cp) || is_digit(cp); }

}  // namespace

std::string normalize_quotes(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  std::uint32_t prev = 0;
  while (i < text.size()) {
    std::size_t start = i;
    std::uint32_t cp = decode_utf8(text, i);
    if (cp == 0x201C || cp == 0x201D) {
      out.push_back('"');
    } else if (cp == 0x2019) {
      // Apostrophe only when wedged between word characters (don't, it's).
      std::size_t j = i;
      std::uint32_t next = j < text.size() ? decode_utf8(text, j) : 0;
      if (is_word_cp(prev) && is_word_cp(next)) {
        out.push_back('\'');
      } else {
        out.append(text.substr(start, i - start));
      }
    } else {
      out.append(text.substr(start, i - start));
    }
    prev = cp;
  }
  return out;
}

namespace {

struct Composition {
  char base;
  std::uint32_t mark;
  std::uint32_t composed;
};

// Common Latin base+combining-mark pairs with a precomposed form.
constexpr std::array<Composition, 42> kCompositions = {{
    {'a', 0x0300, 0xE0},  {'a', 0x0301, 0xE1},  {'a', 0x0302, 0xE2},
    {'a', 0x0303, 0xE3},  {'a', 0x0308, 0xE4},  {'a', 0x030A, 0xE5},
    {'e', 0x0300, 0xE8},  {'e', 0x0301, 0xE9},  {'e', 0x0302, 0xEA},
    {'e', 0x0308, 0xEB},  {'i', 0x0300, 0xEC},  {'i', 0x0301, 0xED},
    {'i', 0x0302, 0xEE},  {'i', 0x0308, 0xEF},  {'o', 0x0300, 0xF2},
    {'o', 0x0301, 0xF3},  {'o', 0x0302, 0xF4},  {'o', 0x0303, 0xF5},
    {'o', 0x0308, 0xF6},  {'u', 0x0300, 0xF9},  {'u', 0x0301, 0xFA},
    {'u', 0x0302, 0xFB},  {'u', 0x0308, 0xFC},  {'n', 0x0303, 0xF1},
    {'c', 0x0327, 0xE7},  {'y', 0x0301, 0xFD},  {'y', 0x0308, 0xFF},
    {'A', 0x0300, 0xC0},  {'A', 0x0301, 0xC1},  {'A', 0x0302, 0xC2},
    {'A', 0x0303, 0xC3},  {'A', 0x0308, 0xC4},  {'A', 0x030A, 0xC5},
    {'E', 0x0300, 0xC8},  {'E', 0x0301, 0xC9},  {'E', 0x0302, 0xCA},
    {'E', 0x0308, 0xCB},  {'O', 0x0301, 0xD3},  {'O', 0x0308, 0xD6},
    {'U', 0x0308, 0xDC},  {'N', 0x0303, 0xD1},  {'C', 0x0327, 0xC7},
}};

}  // namespace

std::string compose_latin(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t start = i;
    std::uint32_t cp = decode_utf8(text, i);
    if (cp < 0x80 && std::isalpha(static_cast<int>(cp)) && i < text.size()) {
      std::size_t j = i;
      std::uint32_t mark = decode_utf8(text, j);
      if (mark >= 0x0300 && mark <= 0x036F) {
        bool composed = false;
        for (const auto& c : kCompositions) {
          if (c.base == static_cast<char>(cp) && c.mark == mark) {
            encode_utf8(c.composed, out);
            composed = true;
            break;
          }
        }
        i = j;
        if (composed) continue;
        // No precomposed form: keep base, drop nothing.
        out.push_back(static_cast<char>(cp));
        std::size_t mark_start = start + 1;
        out.append(text.substr(mark_start, j - mark_start));
        continue;
      }
    }
    out.append(text.substr(start, i - start));
  }
  return out;
}

std::vector<Token> whitespace_tokens(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t start = i;
    std::uint32_t cp = decode_utf8(text, i);
    if (is_space(cp)) continue;
    std::size_t end = i, scan = i;
    while (scan < text.size()) {
      std::size_t before = scan;
      cp = decode_utf8(text, scan);
      if (is_space(cp)) {
        end = before;
        break;
      }
      end = scan;
    }
    tokens.push_back({start, end, text.substr(start, end - start)});
    i = end;
  }
  return tokens;
}

std::size_t count_whitespace_tokens(std::string_view text) {
  std::size_t count = 0;
  bool in_token = false;
  std::size_t i = 0;
  while (i < text.size()) {
    std::uint32_t cp = decode_utf8(text, i);
    if (is_space(cp)) {
      in_token = false;
    } else if (!in_token) {
      in_token = true;
      ++count;
    }
  }
  return count;
}

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool at_token_boundary(std::string_view text, std::size_t pos, std::size_t len) {
  if (pos > 0) {
    unsigned char before = static_cast<unsigned char>(text[pos - 1]);
    if (before < 0x80 && (std::isalnum(before) != 0)) return false;
    if (before >= 0x80) {
      // Walk back to the lead byte of the previous codepoint.
      std::size_t p = pos - 1;
      while (p > 0 && (static_cast<unsigned char>(text[p]) & 0xC0) == 0x80) --p;
      std::size_t tmp = p;
      if (is_word_cp(decode_utf8(text, tmp))) return false;
    }
  }
  std::size_t after = pos + len;
  if (after < text.size()) {
    std::size_t tmp = after;
    if (is_word_cp(decode_utf8(text, tmp))) return false;
  }
  return true;
}

}  // namespace quoteattr

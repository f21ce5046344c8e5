#pragma once

// UTF-8 text utilities: codepoint iteration, quote normalization and a
// small canonical-composition pass for Latin combining marks. All offsets
// throughout the library are byte offsets into UTF-8 strings.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace quoteattr {

// Decodes the codepoint starting at byte offset i. Advances i past the
// sequence. Invalid bytes decode as U+FFFD and advance by one.
std::uint32_t decode_utf8(std::string_view text, std::size_t& i);

// Appends cp to out as UTF-8.
void encode_utf8(std::uint32_t cp, std::string& out);

std::size_t codepoint_count(std::string_view text);

bool is_letter(std::uint32_t cp);
bool is_upper(std::uint32_t cp);
bool is_lower(std::uint32_t cp);
bool is_digit(std::uint32_t cp);
bool is_space(std::uint32_t cp);

// Maps curly double quotes (U+201C/U+201D) to '"' and curly apostrophes
// (U+2019) between word characters to '\''. Everything else is unchanged;
// the result has the same number of codepoints as the input.
std::string normalize_quotes(std::string_view text);

// Composes ASCII letter + combining mark pairs (U+0300..U+0327 subset)
// into their precomposed Latin-1 / Latin Extended-A forms so byte offsets
// assigned afterwards are stable across differently-encoded sources.
std::string compose_latin(std::string_view text);

struct Token {
  std::size_t start = 0;  // byte offset
  std::size_t end = 0;    // byte offset, exclusive
  std::string_view text;
};

// Splits on whitespace; punctuation stays attached to its word. Used for
// token counting and coarse scanning.
std::vector<Token> whitespace_tokens(std::string_view text);

std::size_t count_whitespace_tokens(std::string_view text);

std::string to_lower_ascii(std::string_view s);

// True when text[pos..pos+len) sits at token boundaries (neighbouring
// bytes are not letters or digits).
bool at_token_boundary(std::string_view text, std::size_t pos, std::size_t len);

}  // namespace quoteattr

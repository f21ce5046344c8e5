#pragma once

// Document model and corpus ingestion: loading, boilerplate stripping,
// normalization and rule-based paragraph/sentence segmentation.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "quoteattr/diag.hpp"

namespace quoteattr {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EncodingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyBodyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Half-open byte range into a document's text.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }
  bool contains(std::size_t pos) const { return pos >= start && pos < end; }
  bool operator==(const Span&) const = default;
};

struct RawDocument {
  std::string doc_id;
  std::string text;
  std::string source;
};

struct Document {
  std::string doc_id;
  std::string text;  // composed + quote-normalized; offsets index this
  std::vector<Span> paragraphs;
  std::vector<Span> sentences;
  std::vector<std::size_t> sentence_paragraph;  // sentence index -> paragraph index

  std::string_view slice(Span s) const {
    return std::string_view(text).substr(s.start, s.end - s.start);
  }
  // Sentence text without the inter-sentence whitespace that spans carry
  // so that they tile their paragraph exactly.
  std::string_view sentence_text(std::size_t sentence_idx) const;

  // Sentences overlapping [span.start, span.end), as a contiguous index range.
  std::pair<std::size_t, std::size_t> sentences_overlapping(Span span) const;
};

// Reads a UTF-8 text file. Rejects files that are unreadable or contain
// NUL bytes / invalid UTF-8.
RawDocument load_document(const std::string& path);

// Cuts a Gutenberg-style file down to the body between the "*** START OF"
// and "*** END OF" marker lines. Without markers the text passes through
// and a NoBoilerplateMarkers event is recorded. Throws EmptyBodyError if
// the markers enclose nothing.
RawDocument strip_boilerplate(const RawDocument& doc, Diagnostics* diag = nullptr);

struct SegmenterOptions {
  // Tokens treated as non-terminal before a period ("Mr.", "St.", ...).
  // Stored without the trailing period, matched case-sensitively.
  std::vector<std::string> abbreviations;
  bool single_quote_dialogue = false;
};

SegmenterOptions default_segmenter_options();

// Loads one abbreviation per line; '#' starts a comment.
std::vector<std::string> load_abbreviations(const std::string& path);

// Paragraphs split on blank lines; sentences split on terminal
// punctuation, except inside quoted spans and after known abbreviations.
// Sentence spans tile their paragraph (trailing whitespace belongs to the
// preceding sentence) so offsets are authoritative.
Document segment(const RawDocument& doc, const SegmenterOptions& opts = default_segmenter_options());

}  // namespace quoteattr

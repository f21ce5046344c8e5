#pragma once

// Quoted-utterance extraction by quotation-mark matching, including the
// Victorian multi-paragraph continuation convention (a paragraph ends
// with an unclosed quote and the next paragraph re-opens it).

#include <optional>
#include <string>
#include <vector>

#include "quoteattr/diag.hpp"
#include "quoteattr/document.hpp"

namespace quoteattr {

struct Utterance {
  int id = 0;
  Span span;  // content between the quote marks, marks excluded
  std::vector<int> sentence_ids;
  int paragraph_id = 0;
  std::optional<int> continuation_of;
  // True when the quote never closes in its paragraph (the close mark is
  // supplied by a continuation in the next paragraph).
  bool open_ended = false;
};

struct ExtractionOptions {
  bool single_quote_dialogue = false;
};

std::vector<Utterance> extract_utterances(const Document& doc,
                                          const ExtractionOptions& opts = {},
                                          Diagnostics* diag = nullptr);

struct UtteranceStats {
  std::size_t count = 0;
  std::optional<double> mean_tokens;
  double quote_paragraph_fraction = 0.0;
};

UtteranceStats utterance_stats(const Document& doc, const std::vector<Utterance>& utts);

}  // namespace quoteattr

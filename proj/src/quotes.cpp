#include "quoteattr/quotes.hpp"

#include <algorithm>

#include "quoteattr/text.hpp"

namespace quoteattr {

namespace {

struct RawQuote {
  Span span;        // content, marks excluded
  bool open_ended;  // unclosed at paragraph end
};

// Positions of dialogue quote marks within one paragraph.
std::vector<std::size_t> quote_mark_positions(const Document& doc, Span para,
                                              const ExtractionOptions& opts) {
  std::vector<std::size_t> marks;
  const std::string& text = doc.text;
  bool in_double = false;
  for (std::size_t i = para.start; i < para.end; ++i) {
    char c = text[i];
    if (c == '"') {
      marks.push_back(i);
      in_double = !in_double;
    } else if (opts.single_quote_dialogue && c == '\'' && !in_double) {
      bool word_internal = i > para.start && i + 1 < para.end &&
                           std::isalpha(static_cast<unsigned char>(text[i - 1])) &&
                           std::isalpha(static_cast<unsigned char>(text[i + 1]));
      if (!word_internal) marks.push_back(i);
    }
  }
  return marks;
}

}  // namespace

std::vector<Utterance> extract_utterances(const Document& doc, const ExtractionOptions& opts,
                                          Diagnostics* diag) {
  std::vector<Utterance> utterances;
  // id of the dangling (open-ended) utterance from the previous paragraph,
  // awaiting a paragraph-initial re-open.
  std::optional<int> pending_continuation;

  for (std::size_t p = 0; p < doc.paragraphs.size(); ++p) {
    Span para = doc.paragraphs[p];
    std::vector<std::size_t> marks = quote_mark_positions(doc, para, opts);

    bool starts_with_quote = !marks.empty() && marks.front() == para.start;
    std::optional<int> continuation_link;
    if (pending_continuation) {
      if (starts_with_quote) {
        continuation_link = pending_continuation;
      } else {
        // Dangling quote with no continuation: drop the span. It is
        // always the most recently added utterance.
        if (diag)
          diag->emit(EventKind::UnbalancedQuotes,
                     "doc=" + doc.doc_id + " paragraph=" + std::to_string(p - 1) +
                         " reason=no-continuation");
        utterances.pop_back();
      }
      pending_continuation.reset();
    }

    std::vector<RawQuote> quotes;
    std::size_t m = 0;
    while (m < marks.size()) {
      std::size_t open = marks[m];
      if (m + 1 < marks.size()) {
        quotes.push_back({{open + 1, marks[m + 1]}, false});
        m += 2;
      } else {
        // Dangling open mark: continuation candidate if it reaches the
        // paragraph end with content.
        if (open + 1 < para.end && p + 1 < doc.paragraphs.size()) {
          quotes.push_back({{open + 1, para.end}, true});
        } else if (diag) {
          diag->emit(EventKind::UnbalancedQuotes, "doc=" + doc.doc_id +
                                                      " paragraph=" + std::to_string(p) +
                                                      " reason=dangling-mark");
        }
        ++m;
      }
    }

    bool first_in_para = true;
    for (const RawQuote& q : quotes) {
      if (q.span.start >= q.span.end) {
        first_in_para = false;
        continue;  // empty quote ""
      }
      Utterance u;
      u.id = static_cast<int>(utterances.size());
      u.span = q.span;
      u.paragraph_id = static_cast<int>(p);
      u.open_ended = q.open_ended;
      auto range = doc.sentences_overlapping(q.span);
      for (std::size_t s = range.first; s < range.second; ++s)
        u.sentence_ids.push_back(static_cast<int>(s));
      if (first_in_para && continuation_link) u.continuation_of = continuation_link;
      if (q.open_ended) pending_continuation = u.id;
      utterances.push_back(std::move(u));
      first_in_para = false;
    }
  }

  return utterances;
}

UtteranceStats utterance_stats(const Document& doc, const std::vector<Utterance>& utts) {
  UtteranceStats st;
  st.count = utts.size();
  if (!utts.empty()) {
    std::size_t total_tokens = 0;
    for (const auto& u : utts) total_tokens += count_whitespace_tokens(doc.slice(u.span));
    st.mean_tokens = static_cast<double>(total_tokens) / static_cast<double>(utts.size());
  }
  if (!doc.paragraphs.empty()) {
    std::vector<bool> has_quote(doc.paragraphs.size(), false);
    for (const auto& u : utts) has_quote[static_cast<std::size_t>(u.paragraph_id)] = true;
    std::size_t with = static_cast<std::size_t>(std::count(has_quote.begin(), has_quote.end(), true));
    st.quote_paragraph_fraction =
        static_cast<double>(with) / static_cast<double>(doc.paragraphs.size());
  }
  return st;
}

}  // namespace quoteattr

#include "quoteattr/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "quoteattr/text.hpp"

namespace quoteattr {

std::string_view Document::sentence_text(std::size_t sentence_idx) const {
  Span s = sentences[sentence_idx];
  std::string_view v = slice(s);
  std::size_t b = 0, e = v.size();
  while (b < e && std::isspace(static_cast<unsigned char>(v[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(v[e - 1]))) --e;
  return v.substr(b, e - b);
}

std::pair<std::size_t, std::size_t> Document::sentences_overlapping(Span span) const {
  std::size_t first = sentences.size(), last = 0;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const Span& s = sentences[i];
    if (s.start < span.end && span.start < s.end) {
      first = std::min(first, i);
      last = std::max(last, i);
    }
  }
  if (first == sentences.size()) return {0, 0};
  return {first, last + 1};
}

RawDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failure: " + path);
  std::string text = buf.str();

  // Strip UTF-8 BOM.
  if (text.size() >= 3 && text.compare(0, 3, "\xEF\xBB\xBF") == 0) text.erase(0, 3);
  if (text.empty()) throw EncodingError("empty file: " + path);

  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '\0') throw EncodingError("NUL byte (binary content?) in " + path);
    std::size_t before = i;
    if (decode_utf8(text, i) == 0xFFFD && text.compare(before, i - before, "\xEF\xBF\xBD") != 0)
      throw EncodingError("invalid UTF-8 at byte " + std::to_string(before) + " in " + path);
  }

  std::size_t slash = path.find_last_of("/\\");
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  std::size_t dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  return RawDocument{name, std::move(text), path};
}

namespace {

std::string_view trim_view(std::string_view v) {
  std::size_t b = 0, e = v.size();
  while (b < e && std::isspace(static_cast<unsigned char>(v[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(v[e - 1]))) --e;
  return v.substr(b, e - b);
}

bool contains_icase(std::string_view haystack, std::string_view needle) {
  if (needle.size() > haystack.size()) return false;
  for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < needle.size(); ++j) {
      if (std::toupper(static_cast<unsigned char>(haystack[i + j])) !=
          std::toupper(static_cast<unsigned char>(needle[j]))) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

bool is_marker_line(std::string_view line, std::string_view keyword) {
  std::string_view t = trim_view(line);
  return t.substr(0, 3) == "***" && contains_icase(t, keyword);
}

}  // namespace

RawDocument strip_boilerplate(const RawDocument& doc, Diagnostics* diag) {
  std::size_t body_start = std::string::npos, body_end = std::string::npos;
  std::size_t pos = 0;
  const std::string& text = doc.text;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line(text.data() + pos, (eol == std::string::npos ? text.size() : eol) - pos);
    if (body_start == std::string::npos && is_marker_line(line, "START OF"))
      body_start = eol == std::string::npos ? text.size() : eol + 1;
    else if (body_end == std::string::npos && is_marker_line(line, "END OF") &&
             body_start != std::string::npos)
      body_end = pos;
    if (eol == std::string::npos) break;
    pos = eol + 1;
  }

  if (body_start == std::string::npos && body_end == std::string::npos) {
    if (diag) diag->emit(EventKind::NoBoilerplateMarkers, "doc=" + doc.doc_id);
    return doc;
  }
  std::size_t from = body_start == std::string::npos ? 0 : body_start;
  std::size_t to = body_end == std::string::npos ? text.size() : body_end;
  std::string body(trim_view(std::string_view(text).substr(from, to > from ? to - from : 0)));
  if (body.empty()) throw EmptyBodyError("boilerplate markers enclose empty body: " + doc.doc_id);
  return RawDocument{doc.doc_id, std::move(body), doc.source};
}

SegmenterOptions default_segmenter_options() {
  SegmenterOptions opts;
  opts.abbreviations = {"Mr",   "Mrs",  "Ms",  "Dr",  "St",  "Prof", "Rev", "Col",
                        "Gen",  "Capt", "Lt",  "Maj", "Sgt", "Hon",  "Sr",  "Jr",
                        "Messrs", "Mme", "Mlle", "vs", "etc", "viz",  "cf",  "Vol",
                        "no", "No", "ch", "Ch", "Esq", "Inc", "Co"};
  return opts;
}

std::vector<std::string> load_abbreviations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open abbreviation list: " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string_view t = trim_view(line);
    if (t.empty()) continue;
    std::string token(t);
    if (!token.empty() && token.back() == '.') token.pop_back();
    out.push_back(std::move(token));
  }
  return out;
}

namespace {

class SentenceScanner {
 public:
  SentenceScanner(std::string_view text, const SegmenterOptions& opts)
      : text_(text), opts_(opts) {}

  std::vector<Span> scan(Span para) {
    std::vector<Span> sentences;
    std::size_t sent_start = para.start;
    bool in_double = false, in_single = false;
    std::size_t i = para.start;
    while (i < para.end) {
      std::size_t cp_start = i;
      std::uint32_t cp = decode_utf8(text_, i);
      if (cp == '"') {
        in_double = !in_double;
        if (!in_double && cp_start > sent_start) {
          // Sentence may end at a close quote whose content ended with
          // terminal punctuation: "Go away!" Then he left.
          char prev = text_[cp_start - 1];
          if ((prev == '.' || prev == '!' || prev == '?') && boundary_after(i, para.end))
            emit_boundary(sentences, sent_start, i, para.end);
        }
        continue;
      }
      if (opts_.single_quote_dialogue && cp == '\'' && !in_double) {
        if (!in_single && looks_like_open_single(cp_start)) {
          in_single = true;
          continue;
        }
        if (in_single && looks_like_close_single(cp_start, i)) {
          in_single = false;
          continue;
        }
      }
      if (in_double || in_single) continue;
      if (cp == '.' || cp == '!' || cp == '?' || cp == 0x2026) {
        bool maybe_terminal = cp != '.' || period_is_terminal(cp_start, para);
        // Swallow punctuation runs ("?!", "...") and trailing brackets.
        while (i < para.end && (text_[i] == '.' || text_[i] == '!' || text_[i] == '?')) ++i;
        while (i < para.end && (text_[i] == ')' || text_[i] == ']')) ++i;
        if (maybe_terminal && boundary_after(i, para.end))
          emit_boundary(sentences, sent_start, i, para.end);
      }
    }
    if (sent_start < para.end) sentences.push_back({sent_start, para.end});
    return sentences;
  }

 private:
  void emit_boundary(std::vector<Span>& sentences, std::size_t& sent_start, std::size_t& i,
                     std::size_t para_end) {
    std::size_t b = i;
    while (b < para_end && std::isspace(static_cast<unsigned char>(text_[b]))) ++b;
    if (b >= para_end) return;  // trailing whitespace: fold into last sentence
    sentences.push_back({sent_start, b});
    sent_start = b;
    i = b;
  }

  bool boundary_after(std::size_t i, std::size_t para_end) const {
    std::size_t j = i;
    while (j < para_end && std::isspace(static_cast<unsigned char>(text_[j]))) ++j;
    if (j == i) return j >= para_end;  // need whitespace or paragraph end
    if (j >= para_end) return true;
    std::size_t tmp = j;
    std::uint32_t next = decode_utf8(text_, tmp);
    return !is_lower(next);
  }

  bool period_is_terminal(std::size_t dot, const Span& para) const {
    // Number: 3.14
    if (dot > para.start && dot + 1 < para.end &&
        std::isdigit(static_cast<unsigned char>(text_[dot - 1])) &&
        std::isdigit(static_cast<unsigned char>(text_[dot + 1])))
      return false;
    // Preceding token of letters.
    std::size_t tok_end = dot, tok_start = dot;
    while (tok_start > para.start) {
      std::size_t p = tok_start - 1;
      while (p > para.start && (static_cast<unsigned char>(text_[p]) & 0xC0) == 0x80) --p;
      std::size_t tmp = p;
      if (!is_letter(decode_utf8(text_, tmp))) break;
      tok_start = p;
    }
    if (tok_start == tok_end) return true;
    std::string_view token = text_.substr(tok_start, tok_end - tok_start);
    for (const auto& abbr : opts_.abbreviations)
      if (token == abbr) return false;
    // Single-letter initials (E. Bennet, e.g.) except the pronoun "I".
    if (codepoint_count(token) == 1 && token != "I") return false;
    return true;
  }

  bool looks_like_open_single(std::size_t pos) const {
    if (pos == 0) return true;
    unsigned char prev = static_cast<unsigned char>(text_[pos - 1]);
    return std::isspace(prev) || prev == '(' || prev == '"';
  }

  bool looks_like_close_single(std::size_t pos, std::size_t after) const {
    // Closing quote must not be an intra-word apostrophe.
    if (pos > 0 && std::isalpha(static_cast<unsigned char>(text_[pos - 1])) &&
        after < text_.size() && std::isalpha(static_cast<unsigned char>(text_[after])))
      return false;
    return true;
  }

  std::string_view text_;
  const SegmenterOptions& opts_;
};

}  // namespace

Document segment(const RawDocument& raw, const SegmenterOptions& opts) {
  Document doc;
  doc.doc_id = raw.doc_id;
  doc.text = normalize_quotes(compose_latin(raw.text));

  const std::string& text = doc.text;
  std::size_t pos = 0;
  std::size_t block_start = std::string::npos;
  auto close_block = [&](std::size_t block_end) {
    if (block_start == std::string::npos) return;
    std::string_view block = std::string_view(text).substr(block_start, block_end - block_start);
    std::string_view t = trim_view(block);
    if (t.empty()) {
      block_start = std::string::npos;
      return;
    }
    std::size_t s = block_start + static_cast<std::size_t>(t.data() - block.data());
    doc.paragraphs.push_back({s, s + t.size()});
    block_start = std::string::npos;
  };

  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::size_t line_end = eol == std::string::npos ? text.size() : eol;
    bool blank = trim_view(std::string_view(text).substr(pos, line_end - pos)).empty();
    if (blank) {
      close_block(pos);
    } else if (block_start == std::string::npos) {
      block_start = pos;
    }
    if (eol == std::string::npos) {
      close_block(text.size());
      break;
    }
    pos = eol + 1;
  }

  SentenceScanner scanner(text, opts);
  for (std::size_t p = 0; p < doc.paragraphs.size(); ++p) {
    for (Span s : scanner.scan(doc.paragraphs[p])) {
      doc.sentences.push_back(s);
      doc.sentence_paragraph.push_back(p);
    }
  }
  return doc;
}

}  // namespace quoteattr

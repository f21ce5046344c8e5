#pragma once

// Person-mention detection (named + pronominal), substring alias merging
// and gender inference. The named recognizer is an interface; the shipped
// implementation is a capitalization heuristic with honorific awareness
// and a sentence-initial stoplist, standing in for a model-based NER.

#include <memory>
#include <string>
#include <vector>

#include "quoteattr/diag.hpp"
#include "quoteattr/document.hpp"
#include "quoteattr/lexicons.hpp"
#include "quoteattr/quotes.hpp"

namespace quoteattr {

enum class MentionKind { Named, Pronoun };

struct Mention {
  int id = 0;
  Span span;
  std::string surface;  // internal whitespace collapsed
  MentionKind kind = MentionKind::Named;
  Person person = Person::None;  // pronouns only
  Gender gender = Gender::Unknown;
  bool subject_pronoun = false;  // "she"/"he"/"I"..., usable as a speaker slot
  bool in_quote = false;         // inside an utterance span; set by callers
};

struct CharacterEntity {
  int id = 0;
  std::string canonical;  // longest alias surface
  std::vector<std::string> aliases;
  std::vector<int> mention_ids;
  Gender gender = Gender::Unknown;
};

struct SentenceRange {
  std::size_t first = 0;
  std::size_t end = 0;  // exclusive
};

class MentionRecognizer {
 public:
  virtual ~MentionRecognizer() = default;
  virtual std::vector<Mention> named_mentions(const Document& doc, SentenceRange range) const = 0;
};

// Capitalized-token-sequence heuristic. A capitalized token in a
// sentence-initial-like position (start of sentence, after .!? or after a
// quote mark) is only accepted when it is not on the stoplist.
class HeuristicRecognizer : public MentionRecognizer {
 public:
  explicit HeuristicRecognizer(const Lexicons& lex) : lex_(&lex) {}
  std::vector<Mention> named_mentions(const Document& doc, SentenceRange range) const override;

 private:
  const Lexicons* lex_;
};

// Restricts the heuristic recognizer to surfaces that are token-boundary
// substrings of a fixed candidate list. Used during benchmark evaluation,
// where candidate speakers are given.
class GazetteerRecognizer : public MentionRecognizer {
 public:
  GazetteerRecognizer(const Lexicons& lex, std::vector<std::string> candidates);
  std::vector<Mention> named_mentions(const Document& doc, SentenceRange range) const override;

 private:
  Lexicons lex_copy_;
  HeuristicRecognizer inner_;
  std::vector<std::vector<std::string>> candidate_cores_;
};

// Honorific-stripped name tokens, the unit of alias comparison.
std::vector<std::string> core_tokens(const std::string& surface, const Lexicons& lex);
std::string core_key(const std::string& surface, const Lexicons& lex);

// Named mentions via the recognizer plus every pronoun-lexicon match in
// the window, in document order.
std::vector<Mention> detect_mentions(const Document& doc, SentenceRange range,
                                     const MentionRecognizer& recognizer, const Lexicons& lex);

void mark_quote_membership(std::vector<Mention>& mentions, const std::vector<Utterance>& utts);

// Merges named mentions into alias clusters: surfaces merge when one is a
// contiguous token subsequence of the other ("Gardiner" under
// "Mrs. Gardiner"), transitively closed. A surface contained in two
// unmerged longer surfaces ("Bennet" under both "Mr. Bennet" and
// "Mrs. Bennet") stays separate and an AmbiguousMerge event is recorded.
std::vector<CharacterEntity> merge_aliases(const std::vector<Mention>& mentions,
                                           const Lexicons& lex, Diagnostics* diag = nullptr);

// Document-level gender evidence: honorifics on mention surfaces plus
// narration subject pronouns (he/she) attached to their nearest preceding
// narration named mention within three sentences.
class GenderOracle {
 public:
  GenderOracle() = default;
  static GenderOracle build(const Document& doc, const std::vector<Utterance>& utts,
                            const MentionRecognizer& recognizer, const Lexicons& lex);

  Gender core_gender(const std::string& core) const;
  Gender entity_gender(const CharacterEntity& entity, const Lexicons& lex) const;

 private:
  struct Tally {
    int honorific_male = 0, honorific_female = 0;
    int pronoun_male = 0, pronoun_female = 0;
  };
  std::unordered_map<std::string, Tally> tallies_;
};

// Honorific lexicon first, then pronoun-adjacency majority, else unknown.
Gender infer_gender(const CharacterEntity& entity, const Document& doc,
                    const std::vector<Utterance>& utts, const MentionRecognizer& recognizer,
                    const Lexicons& lex);

}  // namespace quoteattr

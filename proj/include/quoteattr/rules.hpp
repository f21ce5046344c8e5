#pragma once

// The three attribution heuristics. Each one inspects a document and
// emits votes for or against (utterance, character) pairs; aggregation
// tallies them later. Direct speaker patterns with a pronoun in the
// speaker slot ("said she") become markers that local coreference turns
// into votes.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quoteattr/diag.hpp"
#include "quoteattr/document.hpp"
#include "quoteattr/lexicons.hpp"
#include "quoteattr/mentions.hpp"
#include "quoteattr/quotes.hpp"

namespace quoteattr {

enum class RuleKind { Direct, Coref, Alternation };
enum class VoteOrigin { NamedDirect, DirectPronoun, UtterancePronoun, Alternation };

const char* rule_name(RuleKind r);
const char* origin_name(VoteOrigin o);

struct Vote {
  int utterance_id = 0;
  int entity_id = 0;
  bool in_favor = true;
  RuleKind rule = RuleKind::Direct;
  VoteOrigin origin = VoteOrigin::NamedDirect;
  // byte position of the evidence (pattern or antecedent); used as a
  // proximity tie-break. npos for alternation votes.
  std::size_t anchor = static_cast<std::size_t>(-1);
  std::string note;
};

// "said she" / "she replied" next to a quote: the pronoun that needs an
// antecedent before it can vote.
struct DirectPronounMarker {
  int utterance_id = 0;
  int mention_id = 0;
  Gender gender = Gender::Unknown;
};

// Everything the rules need to look at one document.
struct DocInputs {
  const Document* doc = nullptr;
  const std::vector<Utterance>* utts = nullptr;
  const std::vector<Mention>* mentions = nullptr;      // whole doc, quote-marked
  const std::vector<CharacterEntity>* entities = nullptr;
  const GenderOracle* oracle = nullptr;
  const Lexicons* lex = nullptr;

  int entity_of_mention(int mention_id) const;
};

// Speech-verb patterns adjacent to a quote, four shapes:
//   <QUOTE> verb NAME   |   <QUOTE> NAME verb
//   NAME verb, <QUOTE>  |   NAME verb that <QUOTE>
// plus the sandwich form "Q1," said NAME, "Q2." which covers both
// neighbours. NAME is a named mention or a subject pronoun; subject
// pronouns yield markers instead of votes.
std::vector<Vote> direct_speaker_rule(const DocInputs& in,
                                      std::vector<DirectPronounMarker>* markers,
                                      Diagnostics* diag = nullptr);

// Nearest gender-compatible named narration mention within the pronoun's
// three-sentence window; an intervening same-gender pronoun is followed
// as a chain link (bounded hops). Returns the antecedent mention id.
std::optional<int> resolve_pronoun(const DocInputs& in, int pronoun_mention_id, int max_hops = 4);

// Turns markers into votes via resolve_pronoun, and adds weaker votes
// from bare narration subject pronouns in the host paragraph of
// utterances that have no direct pattern.
std::vector<Vote> pronoun_coref_rule(const DocInputs& in,
                                     const std::vector<DirectPronounMarker>& markers,
                                     const std::vector<int>& utts_with_direct,
                                     Diagnostics* diag = nullptr);

// Two-party dialogue alternation over runs of consecutive quote-bearing
// paragraphs: a paragraph with a known speaker votes for that speaker two
// paragraphs away and against it in adjacent paragraphs. Runs with more
// than two known parties are left alone.
std::vector<Vote> alternation_rule(const DocInputs& in,
                                   const std::vector<std::optional<int>>& attribution);

// Drops duplicate (utterance, entity, rule, polarity) votes, keeping the
// first one emitted.
std::vector<Vote> dedupe_votes(std::vector<Vote> votes);

}  // namespace quoteattr

#include "quoteattr/rules.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "quoteattr/text.hpp"

namespace quoteattr {

const char* rule_name(RuleKind r) {
  switch (r) {
    case RuleKind::Direct: return "direct";
    case RuleKind::Coref: return "coref";
    case RuleKind::Alternation: return "alternation";
  }
  return "?";
}

const char* origin_name(VoteOrigin o) {
  switch (o) {
    case VoteOrigin::NamedDirect: return "named_direct";
    case VoteOrigin::DirectPronoun: return "direct_pronoun";
    case VoteOrigin::UtterancePronoun: return "utterance_pronoun";
    case VoteOrigin::Alternation: return "alternation";
  }
  return "?";
}

int DocInputs::entity_of_mention(int mention_id) const {
  for (const auto& e : *entities) {
    if (std::binary_search(e.mention_ids.begin(), e.mention_ids.end(), mention_id))
      return e.id;
  }
  return -1;
}

namespace {

constexpr std::size_t kNoAnchor = static_cast<std::size_t>(-1);

// punctuation allowed between pattern elements ("Q," said he)
bool tight_filler(std::uint32_t cp) {
  return is_space(cp) || cp == ',' || cp == ';' || cp == ':' || cp == '-' || cp == 0x2014 ||
         cp == 0x2013 || cp == '\'' || cp == '_';
}
// additionally allowed after a complete pattern ("said he.")
bool loose_filler(std::uint32_t cp) {
  return tight_filler(cp) || cp == '.' || cp == '!' || cp == '?';
}

std::size_t skip_tight(const std::string& text, std::size_t a, std::size_t b) {
  std::size_t i = a;
  while (i < b) {
    std::size_t j = i;
    std::uint32_t cp = decode_utf8(text, j);
    if (!tight_filler(cp)) break;
    i = j;
  }
  return i;
}

bool all_loose(const std::string& text, std::size_t a, std::size_t b) {
  std::size_t i = a;
  while (i < b) {
    std::uint32_t cp = decode_utf8(text, i);
    if (!loose_filler(cp)) return false;
  }
  return true;
}

bool all_tight(const std::string& text, std::size_t a, std::size_t b) {
  std::size_t i = a;
  while (i < b) {
    std::uint32_t cp = decode_utf8(text, i);
    if (!tight_filler(cp)) return false;
  }
  return true;
}

struct Word {
  Span span;
  std::string lower;
};

std::vector<Word> words_in(const std::string& text, std::size_t a, std::size_t b) {
  std::vector<Word> out;
  std::size_t i = a;
  while (i < b) {
    std::size_t start = i;
    std::uint32_t cp = decode_utf8(text, i);
    if (!is_letter(cp)) continue;
    std::size_t end = i;
    while (i < b) {
      std::size_t j = i;
      std::uint32_t c = decode_utf8(text, j);
      if (is_letter(c)) {
        i = j;
        end = i;
        continue;
      }
      if ((c == '\'' || c == '-') && j < b) {
        std::size_t k = j;
        std::uint32_t nxt = decode_utf8(text, k);
        if (is_letter(nxt)) {
          i = j;
          continue;
        }
      }
      break;
    }
    Word w;
    w.span = Span{start, end};
    w.lower = to_lower_ascii(std::string_view(text).substr(start, end - start));
    out.push_back(std::move(w));
  }
  return out;
}

// Per-call view of the mention list with positional lookups.
struct MentionIndex {
  const std::vector<Mention>* mentions;
  std::unordered_map<std::size_t, int> by_start;
  std::unordered_map<std::size_t, int> by_end;

  explicit MentionIndex(const std::vector<Mention>& ms) : mentions(&ms) {
    for (const auto& m : ms) {
      by_start[m.span.start] = m.id;
      by_end[m.span.end] = m.id;
    }
  }
  const Mention* starting_at(std::size_t pos) const {
    auto it = by_start.find(pos);
    return it == by_start.end() ? nullptr : &(*mentions)[it->second];
  }
  const Mention* ending_at(std::size_t pos) const {
    auto it = by_end.find(pos);
    return it == by_end.end() ? nullptr : &(*mentions)[it->second];
  }
};

enum class SlotKind { None, Named, Pronoun, BadPronoun };

SlotKind classify_slot(const Mention* m) {
  if (!m || m->in_quote) return SlotKind::None;
  if (m->kind == MentionKind::Named) return SlotKind::Named;
  if (!m->subject_pronoun) return SlotKind::None;
  if (m->person == Person::Third && m->gender != Gender::Unknown) return SlotKind::Pronoun;
  return SlotKind::BadPronoun;  // "said I", "said they": a speaker, but unresolvable
}

struct PatternHit {
  const Mention* slot = nullptr;
  SlotKind kind = SlotKind::None;
  std::size_t pattern_end = 0;  // byte offset just past the matched tokens
  std::size_t anchor = kNoAnchor;
};

}  // namespace

std::vector<Vote> direct_speaker_rule(const DocInputs& in, std::vector<DirectPronounMarker>* markers,
                                      Diagnostics* diag) {
  const Document& doc = *in.doc;
  const auto& utts = *in.utts;
  const Lexicons& lex = *in.lex;
  MentionIndex midx(*in.mentions);
  std::vector<Vote> votes;

  std::map<int, std::vector<int>> by_para;
  for (const auto& u : utts) by_para[u.paragraph_id].push_back(u.id);

  auto is_verb = [&](const std::string& lower) { return lex.is_speech_verb(lower); };

  auto emit = [&](int utt_id, const PatternHit& hit) {
    if (hit.kind == SlotKind::Named) {
      int ent = in.entity_of_mention(hit.slot->id);
      if (ent < 0) return;
      Vote v;
      v.utterance_id = utt_id;
      v.entity_id = ent;
      v.in_favor = true;
      v.rule = RuleKind::Direct;
      v.origin = VoteOrigin::NamedDirect;
      v.anchor = hit.anchor;
      v.note = "name=" + hit.slot->surface;
      votes.push_back(std::move(v));
    } else if (hit.kind == SlotKind::Pronoun) {
      if (markers)
        markers->push_back({utt_id, hit.slot->id, hit.slot->gender});
    } else if (hit.kind == SlotKind::BadPronoun) {
      if (diag)
        diag->emit(EventKind::UnresolvedDirectPronoun,
                   "utt=" + std::to_string(utt_id) + " pronoun=" + hit.slot->surface);
    }
  };

  // forward shapes in [a, b): "verb NAME" or "NAME verb" at the very start
  auto match_forward = [&](std::size_t a, std::size_t b) -> PatternHit {
    PatternHit hit;
    std::size_t pos = skip_tight(doc.text, a, b);
    if (pos >= b) return hit;
    // NAME verb
    if (const Mention* m = midx.starting_at(pos)) {
      SlotKind k = classify_slot(m);
      if (k != SlotKind::None && m->span.end <= b) {
        auto ws = words_in(doc.text, m->span.end, b);
        if (!ws.empty() && is_verb(ws[0].lower) &&
            all_tight(doc.text, m->span.end, ws[0].span.start)) {
          hit.slot = m;
          hit.kind = k;
          hit.pattern_end = ws[0].span.end;
          hit.anchor = m->span.start;
          return hit;
        }
      }
    }
    // verb NAME
    auto ws = words_in(doc.text, pos, b);
    if (!ws.empty() && ws[0].span.start == pos && is_verb(ws[0].lower)) {
      std::size_t p2 = skip_tight(doc.text, ws[0].span.end, b);
      if (const Mention* m = midx.starting_at(p2)) {
        SlotKind k = classify_slot(m);
        if (k != SlotKind::None && m->span.end <= b) {
          hit.slot = m;
          hit.kind = k;
          hit.pattern_end = m->span.end;
          hit.anchor = m->span.start;
          return hit;
        }
      }
    }
    return hit;
  };

  // backward shapes in [a, b): "... NAME verb" or "... NAME verb that"
  // ending flush against the quote
  auto match_backward = [&](std::size_t a, std::size_t b) -> PatternHit {
    PatternHit hit;
    auto ws = words_in(doc.text, a, b);
    if (ws.empty()) return hit;
    const Word& last = ws.back();
    if (!all_tight(doc.text, last.span.end, b)) return hit;

    auto name_then_verb = [&](std::size_t verb_word) -> PatternHit {
      PatternHit h;
      const Word& wv = ws[verb_word];
      if (!is_verb(wv.lower)) return h;
      // the mention must end tight against the verb
      for (std::size_t e = wv.span.start; e > a; --e) {
        if (!all_tight(doc.text, e, wv.span.start)) break;
        if (const Mention* m = midx.ending_at(e)) {
          if (m->span.start < a) break;
          SlotKind k = classify_slot(m);
          if (k == SlotKind::None) break;
          h.slot = m;
          h.kind = k;
          h.pattern_end = wv.span.end;
          h.anchor = m->span.start;
          return h;
        }
      }
      return h;
    };

    if (is_verb(last.lower)) {
      PatternHit h = name_then_verb(ws.size() - 1);
      if (h.kind != SlotKind::None) return h;
    }
    if (last.lower == "that" && ws.size() >= 2 &&
        all_tight(doc.text, ws[ws.size() - 2].span.end, last.span.start)) {
      PatternHit h = name_then_verb(ws.size() - 2);
      if (h.kind != SlotKind::None) {
        h.pattern_end = last.span.end;
        return h;
      }
    }
    return hit;
  };

  for (const auto& [para_id, ids] : by_para) {
    Span para = doc.paragraphs[static_cast<std::size_t>(para_id)];
    for (std::size_t k = 0; k < ids.size(); ++k) {
      const Utterance& u = utts[static_cast<std::size_t>(ids[k])];
      bool has_open = u.span.start > para.start && doc.text[u.span.start - 1] == '"';
      bool has_close = !u.open_ended && u.span.end < para.end && doc.text[u.span.end] == '"';

      if (has_close) {
        std::size_t a = u.span.end + 1;
        std::size_t b = para.end;
        const Utterance* next = nullptr;
        if (k + 1 < ids.size()) {
          next = &utts[static_cast<std::size_t>(ids[k + 1])];
          b = next->span.start > 0 ? next->span.start - 1 : next->span.start;
        }
        PatternHit hit = match_forward(a, b);
        if (hit.kind != SlotKind::None) {
          emit(u.id, hit);
          // "Q1," said NAME, "Q2."  — nothing but filler up to the next quote
          if (next && all_loose(doc.text, hit.pattern_end, b)) emit(next->id, hit);
        }
      }
      if (has_open) {
        std::size_t b = u.span.start - 1;
        std::size_t a = para.start;
        if (k > 0) {
          const Utterance& prev = utts[static_cast<std::size_t>(ids[k - 1])];
          a = prev.span.end < para.end && doc.text[prev.span.end] == '"' ? prev.span.end + 1
                                                                         : prev.span.end;
        }
        PatternHit hit = match_backward(a, b);
        if (hit.kind != SlotKind::None) emit(u.id, hit);
      }
    }
  }
  return dedupe_votes(std::move(votes));
}

std::optional<int> resolve_pronoun(const DocInputs& in, int pronoun_mention_id, int max_hops) {
  const auto& ms = *in.mentions;
  if (pronoun_mention_id < 0 || static_cast<std::size_t>(pronoun_mention_id) >= ms.size())
    return std::nullopt;
  const Mention& p = ms[static_cast<std::size_t>(pronoun_mention_id)];
  if (p.kind != MentionKind::Pronoun || p.person != Person::Third) return std::nullopt;

  auto sentence_of = [&](std::size_t pos) {
    return in.doc->sentences_overlapping(Span{pos, pos + 1}).first;
  };
  std::size_t psent = sentence_of(p.span.start);

  for (int k = pronoun_mention_id; k-- > 0;) {
    const Mention& c = ms[static_cast<std::size_t>(k)];
    if (c.in_quote) continue;
    std::size_t csent = sentence_of(c.span.start);
    if (csent + 2 < psent) break;  // outside the three-sentence window
    if (c.kind == MentionKind::Named) {
      Gender g = in.oracle ? in.oracle->core_gender(core_key(c.surface, *in.lex))
                           : Gender::Unknown;
      if (p.gender == Gender::Unknown || g == Gender::Unknown || g == p.gender) return c.id;
      continue;  // wrong gender, keep looking further back
    }
    if (c.person == Person::Third && c.gender != Gender::Unknown && c.gender == p.gender &&
        max_hops > 0) {
      auto chained = resolve_pronoun(in, c.id, max_hops - 1);
      if (chained) return chained;
    }
  }
  return std::nullopt;
}

std::vector<Vote> pronoun_coref_rule(const DocInputs& in,
                                     const std::vector<DirectPronounMarker>& markers,
                                     const std::vector<int>& utts_with_direct, Diagnostics* diag) {
  std::vector<Vote> votes;
  const auto& ms = *in.mentions;
  const auto& utts = *in.utts;

  for (const auto& mk : markers) {
    auto ante = resolve_pronoun(in, mk.mention_id);
    if (!ante) {
      if (diag)
        diag->emit(EventKind::UnresolvedDirectPronoun,
                   "utt=" + std::to_string(mk.utterance_id) +
                       " pronoun=" + ms[static_cast<std::size_t>(mk.mention_id)].surface);
      continue;
    }
    int ent = in.entity_of_mention(*ante);
    if (ent < 0) continue;
    Vote v;
    v.utterance_id = mk.utterance_id;
    v.entity_id = ent;
    v.in_favor = true;
    v.rule = RuleKind::Coref;
    v.origin = VoteOrigin::DirectPronoun;
    v.anchor = ms[static_cast<std::size_t>(mk.mention_id)].span.start;
    v.note = "antecedent=" + ms[static_cast<std::size_t>(*ante)].surface;
    votes.push_back(std::move(v));
  }

  // fallback: nearest narration subject pronoun in the host paragraph of
  // utterances the direct rule said nothing about
  for (const auto& u : utts) {
    if (std::binary_search(utts_with_direct.begin(), utts_with_direct.end(), u.id)) continue;
    const Mention* best = nullptr;
    std::size_t best_dist = kNoAnchor;
    Span para = in.doc->paragraphs[static_cast<std::size_t>(u.paragraph_id)];
    for (const auto& m : ms) {
      if (m.span.start < para.start) continue;
      if (m.span.start >= para.end) break;
      if (m.in_quote || m.kind != MentionKind::Pronoun) continue;
      if (!m.subject_pronoun || m.person != Person::Third || m.gender == Gender::Unknown) continue;
      std::size_t dist = m.span.end <= u.span.start ? u.span.start - m.span.end
                         : m.span.start >= u.span.end ? m.span.start - u.span.end
                                                      : kNoAnchor;
      if (dist < best_dist) {
        best_dist = dist;
        best = &m;
      }
    }
    if (!best) continue;
    auto ante = resolve_pronoun(in, best->id);
    if (!ante) continue;
    int ent = in.entity_of_mention(*ante);
    if (ent < 0) continue;
    Vote v;
    v.utterance_id = u.id;
    v.entity_id = ent;
    v.in_favor = true;
    v.rule = RuleKind::Coref;
    v.origin = VoteOrigin::UtterancePronoun;
    v.anchor = best->span.start;
    v.note = "antecedent=" + ms[static_cast<std::size_t>(*ante)].surface;
    votes.push_back(std::move(v));
  }
  return dedupe_votes(std::move(votes));
}

std::vector<Vote> alternation_rule(const DocInputs& in,
                                   const std::vector<std::optional<int>>& attribution) {
  const auto& utts = *in.utts;
  std::vector<Vote> votes;

  std::map<int, std::vector<int>> by_para;
  for (const auto& u : utts) by_para[u.paragraph_id].push_back(u.id);
  if (by_para.empty()) return votes;

  // paragraph speaker: the single attributed entity among its utterances
  std::map<int, std::optional<int>> para_speaker;
  for (const auto& [p, ids] : by_para) {
    std::optional<int> speaker;
    bool conflict = false;
    for (int id : ids) {
      const auto& a = attribution[static_cast<std::size_t>(id)];
      if (!a) continue;
      if (speaker && *speaker != *a) conflict = true;
      speaker = a;
    }
    para_speaker[p] = conflict ? std::nullopt : speaker;
  }

  // maximal runs of consecutive quote-bearing paragraphs
  std::vector<int> paras;
  for (const auto& [p, ids] : by_para) paras.push_back(p);
  std::size_t i = 0;
  while (i < paras.size()) {
    std::size_t j = i;
    while (j + 1 < paras.size() && paras[j + 1] == paras[j] + 1) ++j;
    // run = paras[i..j]
    std::set<int> parties;
    for (std::size_t k = i; k <= j; ++k)
      if (para_speaker[paras[k]]) parties.insert(*para_speaker[paras[k]]);
    if (!parties.empty() && parties.size() <= 2) {
      for (std::size_t k = i; k <= j; ++k) {
        auto speaker = para_speaker[paras[k]];
        if (!speaker) continue;
        auto vote_run = [&](std::size_t t, bool favor) {
          for (int id : by_para[paras[t]]) {
            Vote v;
            v.utterance_id = id;
            v.entity_id = *speaker;
            v.in_favor = favor;
            v.rule = RuleKind::Alternation;
            v.origin = VoteOrigin::Alternation;
            v.note = "from_para=" + std::to_string(paras[k]);
            votes.push_back(std::move(v));
          }
        };
        if (k >= i + 2) vote_run(k - 2, true);
        if (k + 2 <= j) vote_run(k + 2, true);
        if (k >= i + 1) vote_run(k - 1, false);
        if (k + 1 <= j) vote_run(k + 1, false);
      }
    }
    i = j + 1;
  }
  return dedupe_votes(std::move(votes));
}

std::vector<Vote> dedupe_votes(std::vector<Vote> votes) {
  std::vector<Vote> out;
  std::set<std::tuple<int, int, int, bool>> seen;
  for (auto& v : votes) {
    auto key = std::make_tuple(v.utterance_id, v.entity_id, static_cast<int>(v.rule), v.in_favor);
    if (seen.insert(key).second) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace quoteattr

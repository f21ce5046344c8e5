#include "quoteattr/mentions.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "quoteattr/text.hpp"

namespace quoteattr {
namespace {

struct WordTok {
  Span span;
  std::string surface;  // with a glued trailing '.' for honorifics/initials
  std::size_t sentence = 0;
  bool cap = false;
  bool all_caps = false;
  bool suspect = false;  // sentence-initial-like position
  const PronounInfo* pronoun = nullptr;
};

bool is_name_char(std::uint32_t cp) { return is_letter(cp); }

// Words are letter runs with internal apostrophes/hyphens. Possessive
// suffixes ('s, trailing ') are cut off; a trailing period is glued on
// when the result is a known honorific or a single-letter initial.
std::vector<WordTok> tokenize_sentence(const Document& doc, std::size_t sentence_idx,
                                       const Lexicons& lex) {
  std::vector<WordTok> out;
  Span sent = doc.sentences[sentence_idx];
  const std::string& text = doc.text;

  std::size_t i = sent.start;
  std::size_t first_nonspace = sent.end;
  {
    std::size_t j = sent.start;
    while (j < sent.end) {
      std::size_t k = j;
      std::uint32_t cp = decode_utf8(text, k);
      if (!is_space(cp)) {
        first_nonspace = j;
        break;
      }
      j = k;
    }
  }

  while (i < sent.end) {
    std::size_t start = i;
    std::uint32_t cp = decode_utf8(text, i);
    if (!is_name_char(cp)) continue;

    WordTok tok;
    tok.span.start = start;
    tok.sentence = sentence_idx;
    tok.cap = is_upper(cp);
    bool any_lower = is_lower(cp);
    std::size_t letters = 1;
    std::size_t end = i;
    while (i < sent.end) {
      std::size_t probe = i;
      std::uint32_t c = decode_utf8(text, probe);
      if (is_name_char(c)) {
        any_lower = any_lower || is_lower(c);
        ++letters;
        i = probe;
        end = i;
        continue;
      }
      if ((c == '\'' || c == '-') && probe < sent.end) {
        std::size_t after = probe;
        std::uint32_t nxt = decode_utf8(text, after);
        if (is_name_char(nxt)) {
          i = probe;  // consume separator, keep scanning letters
          continue;
        }
      }
      break;
    }
    tok.span.end = end;
    tok.surface = text.substr(tok.span.start, tok.span.end - tok.span.start);

    // possessive clipping: "Elizabeth's" -> "Elizabeth", "James'" -> "James"
    if (tok.surface.size() > 2 && tok.surface.compare(tok.surface.size() - 2, 2, "'s") == 0) {
      tok.surface.resize(tok.surface.size() - 2);
      tok.span.end -= 2;
    } else if (tok.surface.size() > 1 && tok.surface.back() == '\'') {
      tok.surface.pop_back();
      tok.span.end -= 1;
    }

    // glue a trailing period onto honorifics and single-letter initials
    if (tok.span.end < sent.end && text[tok.span.end] == '.') {
      bool initial = letters == 1 && tok.cap;
      if (lex.is_honorific(tok.surface + ".") || initial) {
        tok.surface += '.';
        tok.span.end += 1;
        i = tok.span.end;
      }
    }

    tok.all_caps = tok.cap && letters > 1 && !any_lower;

    // sentence-initial, or right after terminal punctuation / a quote mark
    if (tok.span.start == first_nonspace) {
      tok.suspect = true;
    } else {
      std::size_t j = tok.span.start;
      while (j > sent.start) {
        --j;
        unsigned char c = static_cast<unsigned char>(text[j]);
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        tok.suspect = (c == '.' || c == '!' || c == '?' || c == ':' || c == '"' || c == '\'');
        break;
      }
    }

    auto it = lex.pronouns.find(to_lower_ascii(tok.surface));
    if (it != lex.pronouns.end()) tok.pronoun = &it->second;

    out.push_back(std::move(tok));
  }
  return out;
}

std::vector<WordTok> tokenize_range(const Document& doc, SentenceRange range, const Lexicons& lex) {
  std::vector<WordTok> out;
  for (std::size_t s = range.first; s < range.end && s < doc.sentences.size(); ++s) {
    auto toks = tokenize_sentence(doc, s, lex);
    out.insert(out.end(), toks.begin(), toks.end());
  }
  return out;
}

bool whitespace_gap(const std::string& text, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') return false;
  }
  return true;
}

bool name_like(const WordTok& tok, const Lexicons& lex) {
  if (tok.pronoun) return false;
  if (!tok.cap || tok.all_caps) return false;
  if (tok.surface.size() == 1) return false;  // bare single capital
  (void)lex;
  return true;
}

std::string collapse_ws(std::string_view raw) {
  std::string out;
  bool in_ws = false;
  for (char c : raw) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u == ' ' || u == '\t' || u == '\n' || u == '\r') {
      in_ws = true;
      continue;
    }
    if (in_ws && !out.empty()) out += ' ';
    in_ws = false;
    out += c;
  }
  return out;
}

}  // namespace

std::vector<std::string> core_tokens(const std::string& surface, const Lexicons& lex) {
  std::vector<std::string> toks;
  std::size_t i = 0;
  while (i < surface.size()) {
    while (i < surface.size() && surface[i] == ' ') ++i;
    std::size_t j = i;
    while (j < surface.size() && surface[j] != ' ') ++j;
    if (j > i) toks.emplace_back(surface.substr(i, j - i));
    i = j;
  }
  std::vector<std::string> core;
  for (auto& t : toks) {
    if (lex.is_honorific(t) || lex.is_honorific(t + ".")) continue;
    core.push_back(t);
  }
  if (core.empty()) return toks;  // honorific-only surface, keep as-is
  return core;
}

std::string core_key(const std::string& surface, const Lexicons& lex) {
  auto toks = core_tokens(surface, lex);
  std::string key;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (i) key += ' ';
    key += toks[i];
  }
  return key;
}

std::vector<Mention> HeuristicRecognizer::named_mentions(const Document& doc,
                                                         SentenceRange range) const {
  const Lexicons& lex = *lex_;
  std::vector<Mention> out;
  for (std::size_t s = range.first; s < range.end && s < doc.sentences.size(); ++s) {
    auto toks = tokenize_sentence(doc, s, lex);
    std::size_t i = 0;
    while (i < toks.size()) {
      const WordTok& t = toks[i];
      bool honor = t.cap && lex.is_honorific(t.surface);
      bool starter = honor || name_like(t, lex);
      if (starter && t.suspect && !honor &&
          lex.stoplist.count(to_lower_ascii(t.surface)) > 0) {
        starter = false;
      }
      if (!starter || t.pronoun) {
        ++i;
        continue;
      }
      // extend: adjacent honorifics / name-like tokens / particle + name
      std::size_t j = i;
      bool has_name = !honor && !(t.surface.size() <= 2 && t.surface.back() == '.');
      while (j + 1 < toks.size()) {
        const WordTok& prev = toks[j];
        const WordTok& next = toks[j + 1];
        if (!whitespace_gap(doc.text, prev.span.end, next.span.start)) break;
        bool next_honor = next.cap && lex.is_honorific(next.surface);
        if (next_honor || name_like(next, lex)) {
          if (!next_honor) has_name = true;
          ++j;
          continue;
        }
        // lowercase particle needs a name-like token right after it
        if (!next.cap && lex.name_particles.count(next.surface) > 0 && j + 2 < toks.size()) {
          const WordTok& after = toks[j + 2];
          if (name_like(after, lex) &&
              whitespace_gap(doc.text, next.span.end, after.span.start)) {
            has_name = true;
            j += 2;
            continue;
          }
        }
        break;
      }
      if (!has_name) {  // bare honorific(s) without a name
        i = j + 1;
        continue;
      }
      Mention m;
      m.span = Span{toks[i].span.start, toks[j].span.end};
      m.surface = collapse_ws(doc.slice(m.span));
      // clipped possessives end mid-word in the raw slice; rebuild from tokens
      if (toks[j].span.end != toks[j].span.start + toks[j].surface.size() ||
          m.surface.size() != toks[j].span.end - toks[i].span.start) {
        std::string rebuilt;
        for (std::size_t k = i; k <= j; ++k) {
          if (k > i) rebuilt += ' ';
          rebuilt += toks[k].surface;
        }
        m.surface = std::move(rebuilt);
      }
      m.kind = MentionKind::Named;
      out.push_back(std::move(m));
      i = j + 1;
    }
  }
  return out;
}

GazetteerRecognizer::GazetteerRecognizer(const Lexicons& lex, std::vector<std::string> candidates)
    : lex_copy_(lex), inner_(lex_copy_) {
  for (const auto& c : candidates) candidate_cores_.push_back(core_tokens(collapse_ws(c), lex_copy_));
}

namespace {
bool contiguous_subseq(const std::vector<std::string>& sub, const std::vector<std::string>& seq) {
  if (sub.empty() || sub.size() > seq.size()) return false;
  for (std::size_t i = 0; i + sub.size() <= seq.size(); ++i) {
    bool ok = true;
    for (std::size_t k = 0; k < sub.size(); ++k) {
      if (seq[i + k] != sub[k]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}
}  // namespace

std::vector<Mention> GazetteerRecognizer::named_mentions(const Document& doc,
                                                         SentenceRange range) const {
  auto all = inner_.named_mentions(doc, range);
  std::vector<Mention> kept;
  for (auto& m : all) {
    auto core = core_tokens(m.surface, lex_copy_);
    for (const auto& cand : candidate_cores_) {
      if (contiguous_subseq(core, cand)) {
        kept.push_back(std::move(m));
        break;
      }
    }
  }
  return kept;
}

std::vector<Mention> detect_mentions(const Document& doc, SentenceRange range,
                                     const MentionRecognizer& recognizer, const Lexicons& lex) {
  std::vector<Mention> out = recognizer.named_mentions(doc, range);
  for (const auto& tok : tokenize_range(doc, range, lex)) {
    if (!tok.pronoun) continue;
    Mention m;
    m.span = tok.span;
    m.surface = tok.surface;
    m.kind = MentionKind::Pronoun;
    m.person = tok.pronoun->person;
    m.gender = tok.pronoun->gender;
    m.subject_pronoun = tok.pronoun->subject;
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(),
            [](const Mention& a, const Mention& b) { return a.span.start < b.span.start; });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].id = static_cast<int>(i);
  return out;
}

void mark_quote_membership(std::vector<Mention>& mentions, const std::vector<Utterance>& utts) {
  for (auto& m : mentions) {
    m.in_quote = false;
    for (const auto& u : utts) {
      if (u.span.contains(m.span.start)) {
        m.in_quote = true;
        break;
      }
    }
  }
}

std::vector<CharacterEntity> merge_aliases(const std::vector<Mention>& mentions,
                                           const Lexicons& lex, Diagnostics* diag) {
  (void)lex;
  struct Group {
    std::vector<std::string> tokens;  // full surface tokens, honorifics included
    std::vector<int> mention_ids;
    std::map<std::string, int> surfaces;  // surface -> count
    int first_mention = 0;
  };
  std::map<std::string, Group> groups;  // keyed by full token sequence
  for (const auto& m : mentions) {
    if (m.kind != MentionKind::Named) continue;
    std::string key = m.surface;
    auto [it, fresh] = groups.try_emplace(key);
    Group& g = it->second;
    if (fresh) {
      std::size_t i = 0;
      while (i < key.size()) {
        std::size_t j = key.find(' ', i);
        if (j == std::string::npos) j = key.size();
        if (j > i) g.tokens.push_back(key.substr(i, j - i));
        i = j + 1;
      }
      g.first_mention = m.id;
    }
    g.mention_ids.push_back(m.id);
    g.surfaces[m.surface]++;
    g.first_mention = std::min(g.first_mention, m.id);
  }

  // longest surfaces first; ties broken lexicographically for determinism
  std::vector<const std::string*> order;
  for (auto& [key, g] : groups) order.push_back(&key);
  std::sort(order.begin(), order.end(), [&](const std::string* a, const std::string* b) {
    std::size_t na = groups[*a].tokens.size(), nb = groups[*b].tokens.size();
    if (na != nb) return na > nb;
    return *a < *b;
  });

  std::unordered_map<std::string, std::string> parent;
  auto find_root = [&](std::string key) {
    while (parent[key] != key) key = parent[key];
    return key;
  };

  std::vector<const std::string*> processed;
  for (const std::string* keyp : order) {
    const Group& g = groups[*keyp];
    parent[*keyp] = *keyp;
    std::vector<std::string> roots;
    for (const std::string* superp : processed) {
      const Group& sg = groups[*superp];
      if (sg.tokens.size() <= g.tokens.size()) continue;
      if (!contiguous_subseq(g.tokens, sg.tokens)) continue;
      std::string r = find_root(*superp);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    if (roots.size() == 1) {
      parent[*keyp] = roots[0];
    } else if (roots.size() > 1) {
      std::string detail = "surface=\"" + *keyp + "\" candidates=" + std::to_string(roots.size());
      if (diag) diag->emit(EventKind::AmbiguousMerge, detail);
    }
    processed.push_back(keyp);
  }

  // collect clusters
  std::map<std::string, std::vector<const std::string*>> clusters;
  for (const std::string* keyp : order) clusters[find_root(*keyp)].push_back(keyp);

  std::vector<CharacterEntity> entities;
  for (auto& [root, members] : clusters) {
    CharacterEntity e;
    int first = INT32_MAX;
    std::map<std::string, int> surface_counts;
    for (const std::string* keyp : members) {
      const Group& g = groups[*keyp];
      first = std::min(first, g.first_mention);
      e.mention_ids.insert(e.mention_ids.end(), g.mention_ids.begin(), g.mention_ids.end());
      for (auto& [surf, n] : g.surfaces) surface_counts[surf] += n;
    }
    for (auto& [surf, n] : surface_counts) e.aliases.push_back(surf);
    std::sort(e.mention_ids.begin(), e.mention_ids.end());
    // canonical: most tokens, then longest, then lexicographically first
    e.canonical = e.aliases.front();
    auto rank = [&](const std::string& s) {
      std::size_t toks = 1 + std::count(s.begin(), s.end(), ' ');
      return std::pair<std::size_t, std::size_t>(toks, codepoint_count(s));
    };
    for (const auto& a : e.aliases) {
      auto ra = rank(a), rc = rank(e.canonical);
      if (ra > rc || (ra == rc && a < e.canonical)) e.canonical = a;
    }
    e.id = first;  // temporary: order key
    entities.push_back(std::move(e));
  }
  std::sort(entities.begin(), entities.end(),
            [](const CharacterEntity& a, const CharacterEntity& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < entities.size(); ++i) entities[i].id = static_cast<int>(i);
  return entities;
}

GenderOracle GenderOracle::build(const Document& doc, const std::vector<Utterance>& utts,
                                 const MentionRecognizer& recognizer, const Lexicons& lex) {
  GenderOracle oracle;
  SentenceRange all{0, doc.sentences.size()};
  auto mentions = detect_mentions(doc, all, recognizer, lex);
  mark_quote_membership(mentions, utts);

  auto sentence_of = [&](std::size_t pos) {
    auto [first, last] = doc.sentences_overlapping(Span{pos, pos + 1});
    (void)last;
    return first;
  };

  for (std::size_t i = 0; i < mentions.size(); ++i) {
    const Mention& m = mentions[i];
    if (m.in_quote) continue;
    if (m.kind == MentionKind::Named) {
      // honorific evidence directly from the surface
      for (const auto& tok : [&] {
             std::vector<std::string> ts;
             std::size_t a = 0;
             while (a < m.surface.size()) {
               std::size_t b = m.surface.find(' ', a);
               if (b == std::string::npos) b = m.surface.size();
               ts.push_back(m.surface.substr(a, b - a));
               a = b + 1;
             }
             return ts;
           }()) {
        auto it = lex.honorifics.find(tok);
        if (it == lex.honorifics.end()) continue;
        Tally& t = oracle.tallies_[m.surface];
        if (it->second == Gender::Male) t.honorific_male++;
        if (it->second == Gender::Female) t.honorific_female++;
      }
      continue;
    }
    // narration subject pronoun -> nearest preceding narration name within 3 sentences
    if (m.person != Person::Third || !m.subject_pronoun || m.gender == Gender::Unknown) continue;
    std::size_t psent = sentence_of(m.span.start);
    const Mention* target = nullptr;
    for (std::size_t k = i; k-- > 0;) {
      const Mention& cand = mentions[k];
      if (cand.span.end > m.span.start) continue;
      if (cand.kind != MentionKind::Named || cand.in_quote) continue;
      std::size_t csent = sentence_of(cand.span.start);
      if (psent >= 2 && csent < psent - 2) break;
      target = &cand;
      break;
    }
    if (!target) continue;
    Tally& t = oracle.tallies_[target->surface];
    if (m.gender == Gender::Male) t.pronoun_male++;
    if (m.gender == Gender::Female) t.pronoun_female++;
  }
  return oracle;
}

Gender GenderOracle::core_gender(const std::string& core) const {
  int hm = 0, hf = 0, pm = 0, pf = 0;
  for (const auto& [surface, t] : tallies_) {
    // match on the honorific-stripped remainder of the surface
    std::string stripped = core_key(surface, default_lexicons());
    if (stripped != core) continue;
    hm += t.honorific_male;
    hf += t.honorific_female;
    pm += t.pronoun_male;
    pf += t.pronoun_female;
  }
  if (hm != hf) return hm > hf ? Gender::Male : Gender::Female;
  if (pm != pf) return pm > pf ? Gender::Male : Gender::Female;
  return Gender::Unknown;
}

Gender GenderOracle::entity_gender(const CharacterEntity& entity, const Lexicons& lex) const {
  int hm = 0, hf = 0, pm = 0, pf = 0;
  for (const auto& alias : entity.aliases) {
    auto it = tallies_.find(alias);
    if (it != tallies_.end()) {
      hm += it->second.honorific_male;
      hf += it->second.honorific_female;
      pm += it->second.pronoun_male;
      pf += it->second.pronoun_female;
      continue;
    }
    // alias seen only inside quotes still carries its honorific
    std::size_t a = 0;
    while (a < alias.size()) {
      std::size_t b = alias.find(' ', a);
      if (b == std::string::npos) b = alias.size();
      auto hit = lex.honorifics.find(alias.substr(a, b - a));
      if (hit != lex.honorifics.end()) {
        if (hit->second == Gender::Male) hm++;
        if (hit->second == Gender::Female) hf++;
      }
      a = b + 1;
    }
  }
  if (hm != hf) return hm > hf ? Gender::Male : Gender::Female;
  if (pm != pf) return pm > pf ? Gender::Male : Gender::Female;
  return Gender::Unknown;
}

Gender infer_gender(const CharacterEntity& entity, const Document& doc,
                    const std::vector<Utterance>& utts, const MentionRecognizer& recognizer,
                    const Lexicons& lex) {
  auto oracle = GenderOracle::build(doc, utts, recognizer, lex);
  return oracle.entity_gender(entity, lex);
}

}  // namespace quoteattr

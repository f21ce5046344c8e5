#include "quoteattr/aggregate.hpp"

#include <algorithm>
#include <map>

namespace quoteattr {

const char* category_name(Category c) {
  switch (c) {
    case Category::Explicit: return "explicit";
    case Category::Anaphoric: return "anaphoric";
    case Category::Implicit: return "implicit";
    case Category::Unattributed: return "unattributed";
  }
  return "?";
}

namespace {

constexpr std::size_t kFar = static_cast<std::size_t>(-1);

std::size_t anchor_distance(const Utterance& u, std::size_t anchor) {
  if (anchor == kFar) return kFar;
  if (anchor <= u.span.start) return u.span.start - anchor;
  if (anchor >= u.span.end) return anchor - u.span.end;
  return 0;
}

int rule_priority(RuleKind r) {
  switch (r) {
    case RuleKind::Direct: return 3;
    case RuleKind::Coref: return 2;
    case RuleKind::Alternation: return 1;
  }
  return 0;
}

Category category_for(VoteOrigin origin) {
  switch (origin) {
    case VoteOrigin::NamedDirect: return Category::Explicit;
    case VoteOrigin::DirectPronoun: return Category::Anaphoric;
    case VoteOrigin::UtterancePronoun:
    case VoteOrigin::Alternation: return Category::Implicit;
  }
  return Category::Implicit;
}

}  // namespace

std::vector<std::optional<int>> named_direct_override(const DocInputs& in,
                                                      const std::vector<Vote>& votes) {
  const auto& utts = *in.utts;
  std::vector<std::optional<int>> forced(utts.size());
  std::vector<std::size_t> best_dist(utts.size(), kFar);
  for (const auto& v : votes) {
    if (v.origin != VoteOrigin::NamedDirect || !v.in_favor) continue;
    const Utterance& u = utts[static_cast<std::size_t>(v.utterance_id)];
    std::size_t d = anchor_distance(u, v.anchor);
    auto& cur = forced[static_cast<std::size_t>(v.utterance_id)];
    if (!cur || d < best_dist[static_cast<std::size_t>(v.utterance_id)]) {
      cur = v.entity_id;
      best_dist[static_cast<std::size_t>(v.utterance_id)] = d;
    }
  }
  return forced;
}

std::vector<Vote> gender_filter(const DocInputs& in, std::vector<Vote> votes,
                                const std::vector<DirectPronounMarker>& markers,
                                Diagnostics* diag) {
  if (markers.empty()) return votes;
  std::map<int, Gender> utt_gender;
  for (const auto& mk : markers) {
    if (mk.gender == Gender::Unknown) continue;
    utt_gender.emplace(mk.utterance_id, mk.gender);  // first marker wins
  }
  if (utt_gender.empty()) return votes;

  std::vector<Gender> entity_gender;
  for (const auto& e : *in.entities)
    entity_gender.push_back(in.oracle ? in.oracle->entity_gender(e, *in.lex) : Gender::Unknown);

  auto incompatible = [&](const Vote& v) {
    auto it = utt_gender.find(v.utterance_id);
    if (it == utt_gender.end()) return false;
    Gender g = entity_gender[static_cast<std::size_t>(v.entity_id)];
    return g != Gender::Unknown && g != it->second;
  };

  // back off per utterance if filtering would remove every favor vote
  std::map<int, std::pair<int, int>> favor_counts;  // utt -> (kept, dropped)
  for (const auto& v : votes) {
    if (!v.in_favor) continue;
    auto& c = favor_counts[v.utterance_id];
    (incompatible(v) ? c.second : c.first)++;
  }
  std::vector<Vote> out;
  for (auto& v : votes) {
    if (incompatible(v)) {
      auto c = favor_counts[v.utterance_id];
      if (c.first > 0) continue;  // drop: compatible favor votes remain
      if (v.in_favor && diag) {
        diag->emit(EventKind::GenderFilterEmpty, "utt=" + std::to_string(v.utterance_id));
        diag = nullptr;  // one event per call is enough for auditing
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Attribution> tally_votes(const DocInputs& in, const std::vector<Vote>& votes,
                                     const std::vector<Attribution>* frozen) {
  const auto& utts = *in.utts;
  auto forced = named_direct_override(in, votes);

  struct Tally {
    int net = 0;
    int best_priority = 0;
    std::size_t best_dist = kFar;
    VoteOrigin best_origin = VoteOrigin::Alternation;
  };
  std::vector<std::map<int, Tally>> per_utt(utts.size());
  for (const auto& v : votes) {
    Tally& t = per_utt[static_cast<std::size_t>(v.utterance_id)][v.entity_id];
    t.net += v.in_favor ? 1 : -1;
    if (!v.in_favor) continue;
    int pr = rule_priority(v.rule);
    std::size_t d = anchor_distance(utts[static_cast<std::size_t>(v.utterance_id)], v.anchor);
    if (pr > t.best_priority || (pr == t.best_priority && d < t.best_dist)) {
      t.best_priority = pr;
      t.best_dist = d;
      t.best_origin = v.origin;
    }
  }

  std::vector<Attribution> out(utts.size());
  for (std::size_t i = 0; i < utts.size(); ++i) {
    Attribution& a = out[i];
    a.utterance_id = static_cast<int>(i);
    if (frozen && (*frozen)[i].entity_id) {
      a = (*frozen)[i];
      continue;
    }
    if (forced[i]) {
      a.entity_id = forced[i];
      a.category = Category::Explicit;
      a.deciding_origin = VoteOrigin::NamedDirect;
      a.net_votes = per_utt[i][*forced[i]].net;
      continue;
    }
    const Tally* best = nullptr;
    int best_ent = -1;
    for (const auto& [ent, t] : per_utt[i]) {
      if (t.net <= 0 || t.best_priority == 0) continue;  // needs a positive net and a favor vote
      if (!best) {
        best = &t;
        best_ent = ent;
        continue;
      }
      bool better;
      if (t.net != best->net)
        better = t.net > best->net;
      else if (t.best_priority != best->best_priority)
        better = t.best_priority > best->best_priority;
      else if (t.best_dist != best->best_dist)
        better = t.best_dist < best->best_dist;
      else
        better = ent < best_ent;
      if (better) {
        best = &t;
        best_ent = ent;
      }
    }
    if (best) {
      a.entity_id = best_ent;
      a.category = category_for(best->best_origin);
      a.deciding_origin = best->best_origin;
      a.net_votes = best->net;
    }
  }
  return out;
}

std::vector<Attribution> aggregate(const DocInputs& in, const VoteSet& vs,
                                   const AggregateOptions& opts, Diagnostics* diag) {
  std::vector<Vote> base = vs.votes;
  if (opts.gender_filtering) base = gender_filter(in, std::move(base), vs.markers, diag);

  std::vector<Attribution> current = tally_votes(in, base);
  if (!opts.use_alternation) return current;

  for (int round = 0; round < opts.max_rounds; ++round) {
    std::vector<std::optional<int>> ids(current.size());
    for (std::size_t i = 0; i < current.size(); ++i) ids[i] = current[i].entity_id;
    auto alt = alternation_rule(in, ids);
    if (alt.empty()) break;
    std::vector<Vote> all = base;
    all.insert(all.end(), alt.begin(), alt.end());
    auto next = tally_votes(in, all, &current);
    bool changed = false;
    for (std::size_t i = 0; i < next.size(); ++i) {
      if (next[i].entity_id != current[i].entity_id) {
        changed = true;
        break;
      }
    }
    current = std::move(next);
    if (!changed) break;
  }
  return current;
}

void propagate_continuations(const DocInputs& in, std::vector<Attribution>& attribution,
                             Diagnostics* diag) {
  const auto& utts = *in.utts;
  for (std::size_t i = 0; i < utts.size(); ++i) {
    const auto& u = utts[i];
    if (!u.continuation_of) continue;
    Attribution& parent = attribution[static_cast<std::size_t>(*u.continuation_of)];
    Attribution& child = attribution[i];
    if (parent.entity_id && !child.entity_id) {
      child.entity_id = parent.entity_id;
      child.category = parent.category;
      child.deciding_origin = parent.deciding_origin;
    } else if (parent.entity_id && child.entity_id && *parent.entity_id != *child.entity_id) {
      if (diag)
        diag->emit(EventKind::ContinuationConflict,
                   "utt=" + std::to_string(u.id) + " parent=" + std::to_string(*u.continuation_of));
    }
  }
}

}  // namespace quoteattr

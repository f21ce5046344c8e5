#pragma once

// Soft-inference vote tallying: net favor minus against per candidate,
// highest net wins, with named-direct patterns overriding everything.
// Attribution and alternation feed each other, so aggregation iterates to
// a fixpoint; settled utterances are frozen and never flip.

#include <optional>
#include <vector>

#include "quoteattr/diag.hpp"
#include "quoteattr/rules.hpp"

namespace quoteattr {

enum class Category { Explicit, Anaphoric, Implicit, Unattributed };
const char* category_name(Category c);

struct Attribution {
  int utterance_id = 0;
  std::optional<int> entity_id;
  Category category = Category::Unattributed;
  int net_votes = 0;
  VoteOrigin deciding_origin = VoteOrigin::NamedDirect;  // valid when attributed
};

struct VoteSet {
  std::vector<Vote> votes;  // direct + coref; alternation is recomputed inside
  std::vector<DirectPronounMarker> markers;
};

struct AggregateOptions {
  bool use_alternation = true;
  bool gender_filtering = true;
  int max_rounds = 64;
};

// Per-utterance forced winner from named-direct votes (nearest pattern
// wins if several name different people).
std::vector<std::optional<int>> named_direct_override(const DocInputs& in,
                                                      const std::vector<Vote>& votes);

// When a "said she"-style marker fixes the speaker's gender, votes for
// characters of the other known gender are dropped. If that would leave
// an utterance with no favor votes at all, the filter backs off for that
// utterance and a GenderFilterEmpty event is recorded.
std::vector<Vote> gender_filter(const DocInputs& in, std::vector<Vote> votes,
                                const std::vector<DirectPronounMarker>& markers,
                                Diagnostics* diag = nullptr);

// One voting round over a fixed vote list. `frozen` entries keep their
// existing decision. Vote order does not affect the result.
std::vector<Attribution> tally_votes(const DocInputs& in, const std::vector<Vote>& votes,
                                     const std::vector<Attribution>* frozen = nullptr);

// Full aggregation: gender filter, tally, then alternate-and-retally
// until no new utterance gets attributed.
std::vector<Attribution> aggregate(const DocInputs& in, const VoteSet& vs,
                                   const AggregateOptions& opts = {}, Diagnostics* diag = nullptr);

// Multi-paragraph continuations inherit the speaker of the segment they
// continue; a disagreement is kept as-is and logged.
void propagate_continuations(const DocInputs& in, std::vector<Attribution>& attribution,
                             Diagnostics* diag = nullptr);

}  // namespace quoteattr

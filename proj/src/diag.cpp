#include "quoteattr/diag.hpp"

namespace quoteattr {

const char* event_name(EventKind kind) {
  switch (kind) {
    case EventKind::NoBoilerplateMarkers: return "NoBoilerplateMarkers";
    case EventKind::UnbalancedQuotes: return "UnbalancedQuotes";
    case EventKind::AmbiguousMerge: return "AmbiguousMerge";
    case EventKind::GenderFilterEmpty: return "GenderFilterEmpty";
    case EventKind::ContinuationConflict: return "ContinuationConflict";
    case EventKind::UnresolvedDirectPronoun: return "UnresolvedDirectPronoun";
  }
  return "Unknown";
}

}  // namespace quoteattr

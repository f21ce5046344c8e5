#pragma once

#include <string>
#include <vector>

namespace quoteattr {

// Structured audit events emitted while processing a corpus. The CLI
// prints them as "event=Name key=value ..." lines; tests inspect them.
enum class EventKind {
  NoBoilerplateMarkers,
  UnbalancedQuotes,
  AmbiguousMerge,
  GenderFilterEmpty,
  ContinuationConflict,
  UnresolvedDirectPronoun,
};

const char* event_name(EventKind kind);

struct Event {
  EventKind kind;
  std::string detail;  // free-form "key=value" pairs
};

struct Diagnostics {
  std::vector<Event> events;

  void emit(EventKind kind, std::string detail) { events.push_back({kind, std::move(detail)}); }

  std::size_t count(EventKind kind) const {
    std::size_t n = 0;
    for (const auto& e : events)
      if (e.kind == kind) ++n;
    return n;
  }
};

}  // namespace quoteattr

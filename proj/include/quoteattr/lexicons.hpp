#pragma once

// Lexical resources for mention detection and the direct-speaker rule:
// person pronouns, gendered honorifics, a sentence-initial stoplist and
// the speech-verb list. Defaults are compiled in; each table can be
// replaced from a data file.

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace quoteattr {

enum class Person { None, First, Second, Third };
enum class Gender { Unknown, Male, Female };

const char* person_name(Person p);
const char* gender_name(Gender g);

struct PronounInfo {
  Person person = Person::None;
  Gender gender = Gender::Unknown;
  bool subject = false;  // can fill the speaker slot in "said she"
};

struct Lexicons {
  std::unordered_map<std::string, PronounInfo> pronouns;   // lowercase surface
  std::unordered_map<std::string, Gender> honorifics;      // exact surface, "Mr." style
  std::unordered_set<std::string> stoplist;                // sentence-initial skip words
  std::unordered_set<std::string> speech_verbs;            // lowercase
  std::unordered_set<std::string> name_particles;          // "de", "van", ...

  bool is_pronoun(const std::string& lower) const { return pronouns.count(lower) > 0; }
  bool is_speech_verb(const std::string& lower) const { return speech_verbs.count(lower) > 0; }
  bool is_honorific(const std::string& surface) const { return honorifics.count(surface) > 0; }
};

const Lexicons& default_lexicons();

// File loaders; formats are line-oriented with '#' comments.
// pronouns:   surface<TAB>person<TAB>gender[<TAB>subject]
// honorifics: surface<TAB>gender
// stoplist / speech verbs: one token per line.
std::unordered_map<std::string, PronounInfo> load_pronouns(const std::string& path);
std::unordered_map<std::string, Gender> load_honorifics(const std::string& path);
std::unordered_set<std::string> load_wordlist(const std::string& path);

}  // namespace quoteattr

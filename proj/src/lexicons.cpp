#include "quoteattr/lexicons.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "quoteattr/document.hpp"

namespace quoteattr {

const char* person_name(Person p) {
  switch (p) {
    case Person::None: return "none";
    case Person::First: return "first";
    case Person::Second: return "second";
    case Person::Third: return "third";
  }
  return "none";
}

const char* gender_name(Gender g) {
  switch (g) {
    case Gender::Unknown: return "unknown";
    case Gender::Male: return "male";
    case Gender::Female: return "female";
  }
  return "unknown";
}

namespace {

Lexicons build_defaults() {
  Lexicons lex;

  auto p = [&](const char* s, Person person, Gender g, bool subject) {
    lex.pronouns[s] = PronounInfo{person, g, subject};
  };
  p("i", Person::First, Gender::Unknown, true);
  p("me", Person::First, Gender::Unknown, false);
  p("my", Person::First, Gender::Unknown, false);
  p("mine", Person::First, Gender::Unknown, false);
  p("myself", Person::First, Gender::Unknown, false);
  p("we", Person::First, Gender::Unknown, true);
  p("us", Person::First, Gender::Unknown, false);
  p("our", Person::First, Gender::Unknown, false);
  p("ours", Person::First, Gender::Unknown, false);
  p("ourselves", Person::First, Gender::Unknown, false);
  p("you", Person::Second, Gender::Unknown, true);
  p("your", Person::Second, Gender::Unknown, false);
  p("yours", Person::Second, Gender::Unknown, false);
  p("yourself", Person::Second, Gender::Unknown, false);
  p("he", Person::Third, Gender::Male, true);
  p("him", Person::Third, Gender::Male, false);
  p("his", Person::Third, Gender::Male, false);
  p("himself", Person::Third, Gender::Male, false);
  p("she", Person::Third, Gender::Female, true);
  p("her", Person::Third, Gender::Female, false);
  p("hers", Person::Third, Gender::Female, false);
  p("herself", Person::Third, Gender::Female, false);
  p("they", Person::Third, Gender::Unknown, true);
  p("them", Person::Third, Gender::Unknown, false);
  p("their", Person::Third, Gender::Unknown, false);
  p("theirs", Person::Third, Gender::Unknown, false);
  p("themselves", Person::Third, Gender::Unknown, false);

  auto h = [&](const char* s, Gender g) { lex.honorifics[s] = g; };
  h("Mr.", Gender::Male);
  h("Mr", Gender::Male);
  h("Mister", Gender::Male);
  h("Mrs.", Gender::Female);
  h("Mrs", Gender::Female);
  h("Ms.", Gender::Female);
  h("Miss", Gender::Female);
  h("Mistress", Gender::Female);
  h("Madam", Gender::Female);
  h("Madame", Gender::Female);
  h("Mme.", Gender::Female);
  h("Mlle.", Gender::Female);
  h("Sir", Gender::Male);
  h("Lady", Gender::Female);
  h("Lord", Gender::Male);
  h("Master", Gender::Male);
  h("Dame", Gender::Female);
  h("Uncle", Gender::Male);
  h("Aunt", Gender::Female);
  h("Count", Gender::Male);
  h("Countess", Gender::Female);
  h("Duke", Gender::Male);
  h("Duchess", Gender::Female);
  h("Baron", Gender::Male);
  h("Baroness", Gender::Female);
  h("Prince", Gender::Male);
  h("Princess", Gender::Female);
  h("King", Gender::Male);
  h("Queen", Gender::Female);
  h("Dr.", Gender::Unknown);
  h("Doctor", Gender::Unknown);
  h("Prof.", Gender::Unknown);
  h("Professor", Gender::Unknown);
  h("Rev.", Gender::Unknown);
  h("Reverend", Gender::Unknown);
  h("Captain", Gender::Unknown);
  h("Capt.", Gender::Unknown);
  h("Colonel", Gender::Unknown);
  h("Col.", Gender::Unknown);
  h("Major", Gender::Unknown);
  h("General", Gender::Unknown);
  h("Admiral", Gender::Unknown);
  h("Sergeant", Gender::Unknown);
  h("Squire", Gender::Male);
  h("St.", Gender::Unknown);

  static const char* kStoplist[] = {
      // articles, determiners, quantifiers
      "The", "A", "An", "This", "That", "These", "Those", "Some", "Any", "All", "No",
      "Each", "Every", "Either", "Neither", "Both", "Few", "Many", "Much", "More",
      "Most", "Several", "Such", "Another", "Other", "Others", "None", "Nothing",
      "Something", "Anything", "Everything", "Nobody", "Somebody", "Anybody",
      "Everybody", "Someone", "Anyone", "Everyone", "One", "Two", "Three", "Four",
      "Five", "Six", "Seven", "Eight", "Nine", "Ten",
      // conjunctions, prepositions
      "And", "But", "Or", "Nor", "For", "Yet", "So", "If", "Though", "Although",
      "Because", "Since", "Unless", "Until", "While", "Whilst", "Whereas", "After",
      "Before", "At", "By", "In", "Into", "Of", "On", "Upon", "To", "From", "With",
      "Without", "Within", "Between", "Among", "Amongst", "Through", "During",
      "Against", "About", "Above", "Below", "Under", "Over", "Toward", "Towards",
      "Besides", "Beyond", "Except", "Near", "Off", "Out", "Up", "Down", "As",
      // auxiliaries, modals, common verbs at sentence start
      "Is", "Are", "Was", "Were", "Be", "Been", "Being", "Am", "Do", "Does", "Did",
      "Have", "Has", "Had", "Will", "Would", "Shall", "Should", "Can", "Could",
      "May", "Might", "Must", "Ought", "Let", "Come", "Go", "Stop", "Wait", "Look",
      "Listen", "Say", "Tell", "Take", "Make", "Think", "Know", "See", "Suppose",
      "Consider", "Remember", "Forget", "Depend", "Pray",
      // adverbs, discourse markers, interjections
      "Oh", "Ah", "Alas", "Well", "Why", "How", "What", "When", "Where", "Who",
      "Whom", "Whose", "Which", "Yes", "Nay", "Aye", "True", "False", "Indeed",
      "Perhaps", "Certainly", "Surely", "However", "Nevertheless", "Meanwhile",
      "Moreover", "Besides", "Therefore", "Thus", "Hence", "Then", "There", "Here",
      "Now", "Soon", "Never", "Always", "Sometimes", "Often", "Again", "Once",
      "Twice", "Still", "Just", "Even", "Only", "Almost", "Nearly", "Scarcely",
      "Hardly", "Quite", "Rather", "Very", "Too", "Also", "Suddenly", "Presently",
      "Finally", "Immediately", "Instantly", "Directly", "Shortly", "Lately",
      "Today", "Tomorrow", "Yesterday", "Tonight", "First", "Secondly", "Last",
      "Next", "Instead", "Otherwise", "Anyhow", "Anyway", "Nonsense", "Good",
      "Dear", "Poor", "Happily", "Unhappily", "Fortunately", "Unfortunately",
      "Accordingly", "Consequently", "Doubtless", "Possibly", "Probably",
      "Chapter", "Volume", "Book", "Part",
      // polite forms and vocatives that begin dialogue sentences
      "Sirs", "Gentlemen", "Ladies", "Friend", "Friends", "Mamma", "Papa",
      "Mother", "Father", "Brother", "Sister", "Cousin", "Child", "Children",
      "Darling", "Dearest", "Heaven", "Heavens", "God", "Lud", "Fie", "Hush",
      "Bless", "Thank", "Thanks", "Farewell", "Goodbye", "Hello", "Hark", "Behold",
      "Ay", "Um", "Er", "Hm", "Tut", "Pshaw", "Pooh", "Bah", "Humph", "Nonsense",
      "Impossible", "Excellent", "Capital", "Delightful", "Wonderful", "Terrible",
      "Monstrous", "Absurd", "Ridiculous", "Enough", "Silence", "Patience",
      "Courage", "Mercy", "Help", "Stay", "Run", "Hold", "Mind", "Beware",
  };
  for (const char* s : kStoplist) lex.stoplist.insert(s);

  static const char* kSpeechVerbs[] = {
      "said",      "replied",  "cried",       "asked",    "answered", "exclaimed",
      "whispered", "muttered", "observed",    "continued", "added",   "returned",
      "remarked",  "interrupted", "shouted",  "murmured", "demanded", "inquired",
  };
  for (const char* s : kSpeechVerbs) lex.speech_verbs.insert(s);

  for (const char* s : {"de", "da", "du", "la", "le", "van", "von", "der", "di"})
    lex.name_particles.insert(s);

  return lex;
}

Person parse_person(const std::string& s) {
  if (s == "first") return Person::First;
  if (s == "second") return Person::Second;
  if (s == "third") return Person::Third;
  return Person::None;
}

Gender parse_gender(const std::string& s) {
  if (s == "male" || s == "m") return Gender::Male;
  if (s == "female" || s == "f") return Gender::Female;
  return Gender::Unknown;
}

std::vector<std::vector<std::string>> read_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon file: " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '\t')) fields.push_back(field);
    if (!fields.empty()) rows.push_back(std::move(fields));
  }
  return rows;
}

}  // namespace

const Lexicons& default_lexicons() {
  static const Lexicons lex = build_defaults();
  return lex;
}

std::unordered_map<std::string, PronounInfo> load_pronouns(const std::string& path) {
  std::unordered_map<std::string, PronounInfo> out;
  for (const auto& row : read_table(path)) {
    if (row.size() < 3) continue;
    PronounInfo info;
    info.person = parse_person(row[1]);
    info.gender = parse_gender(row[2]);
    info.subject = row.size() > 3 && row[3] == "subject";
    out[row[0]] = info;
  }
  return out;
}

std::unordered_map<std::string, Gender> load_honorifics(const std::string& path) {
  std::unordered_map<std::string, Gender> out;
  for (const auto& row : read_table(path)) {
    if (row.empty()) continue;
    out[row[0]] = row.size() > 1 ? parse_gender(row[1]) : Gender::Unknown;
  }
  return out;
}

std::unordered_set<std::string> load_wordlist(const std::string& path) {
  std::unordered_set<std::string> out;
  for (const auto& row : read_table(path)) out.insert(row[0]);
  return out;
}

}  // namespace quoteattr

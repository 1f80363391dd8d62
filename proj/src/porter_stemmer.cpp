// Porter, "An algorithm for suffix stripping" (1980), the published rule set
// without the later departures of the reference C implementation.

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "qgeval/text.hpp"

namespace qgeval {
namespace {

class PorterWord {
 public:
  explicit PorterWord(std::string_view token) : w_(token) {}

  std::string release() && { return std::move(w_); }

  void step1a() {
    if (ends("sses")) {
      chop(2);
    } else if (ends("ies")) {
      chop(2);
    } else if (ends("ss")) {
      // unchanged
    } else if (ends("s")) {
      chop(1);
    }
  }

  void step1b() {
    bool cleanup = false;
    if (ends("eed")) {
      if (measure(size() - 3) > 0) chop(1);
    } else if (ends("ed")) {
      if (has_vowel(size() - 2)) {
        chop(2);
        cleanup = true;
      }
    } else if (ends("ing")) {
      if (has_vowel(size() - 3)) {
        chop(3);
        cleanup = true;
      }
    }
    if (!cleanup) return;

    if (ends("at") || ends("bl") || ends("iz")) {
      w_ += 'e';
    } else if (double_consonant(size())) {
      const char last = w_.back();
      if (last != 'l' && last != 's' && last != 'z') chop(1);
    } else if (measure(size()) == 1 && cvc(size())) {
      w_ += 'e';
    }
  }

  void step1c() {
    if (ends("y") && has_vowel(size() - 1)) w_.back() = 'i';
  }

  void step2() {
    static constexpr std::array<std::pair<std::string_view, std::string_view>, 20>
        rules{{{"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
               {"anci", "ance"},   {"izer", "ize"},    {"abli", "able"},
               {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
               {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
               {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
               {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
               {"iviti", "ive"},   {"biliti", "ble"}}};
    replace_longest(rules, [this](std::size_t stem) { return measure(stem) > 0; });
  }

  void step3() {
    static constexpr std::array<std::pair<std::string_view, std::string_view>, 7>
        rules{{{"icate", "ic"},
               {"ative", ""},
               {"alize", "al"},
               {"iciti", "ic"},
               {"ical", "ic"},
               {"ful", ""},
               {"ness", ""}}};
    replace_longest(rules, [this](std::size_t stem) { return measure(stem) > 0; });
  }

  void step4() {
    static constexpr std::array<std::pair<std::string_view, std::string_view>, 19>
        rules{{{"al", ""},   {"ance", ""}, {"ence", ""}, {"er", ""},
               {"ic", ""},   {"able", ""}, {"ible", ""}, {"ant", ""},
               {"ement", ""}, {"ment", ""}, {"ent", ""},  {"ion", ""},
               {"ou", ""},   {"ism", ""},  {"ate", ""},  {"iti", ""},
               {"ous", ""},  {"ive", ""},  {"ize", ""}}};
    replace_longest(rules, [this](std::size_t stem) {
      if (measure(stem) <= 1) return false;
      // "ion" additionally requires the stem to end in s or t.
      if (w_.compare(stem, std::string_view::npos, "ion") == 0) {
        return stem > 0 && (w_[stem - 1] == 's' || w_[stem - 1] == 't');
      }
      return true;
    });
  }

  void step5a() {
    if (!ends("e")) return;
    const std::size_t stem = size() - 1;
    const int m = measure(stem);
    if (m > 1 || (m == 1 && !cvc(stem))) chop(1);
  }

  void step5b() {
    if (measure(size()) > 1 && double_consonant(size()) && w_.back() == 'l') {
      chop(1);
    }
  }

 private:
  std::size_t size() const { return w_.size(); }

  bool ends(std::string_view suffix) const {
    return w_.size() >= suffix.size() &&
           std::string_view(w_).substr(w_.size() - suffix.size()) == suffix;
  }

  void chop(std::size_t n) { w_.resize(w_.size() - n); }

  bool consonant(std::size_t i) const {
    switch (w_[i]) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
        return false;
      case 'y':
        return i == 0 || !consonant(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in w_[0, len).
  int measure(std::size_t len) const {
    int m = 0;
    std::size_t i = 0;
    while (i < len && consonant(i)) ++i;
    while (i < len) {
      while (i < len && !consonant(i)) ++i;
      if (i >= len) break;
      while (i < len && consonant(i)) ++i;
      ++m;
    }
    return m;
  }

  bool has_vowel(std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i) {
      if (!consonant(i)) return true;
    }
    return false;
  }

  bool double_consonant(std::size_t len) const {
    return len >= 2 && w_[len - 1] == w_[len - 2] && consonant(len - 1);
  }

  bool cvc(std::size_t len) const {
    if (len < 3) return false;
    if (!consonant(len - 1) || consonant(len - 2) || !consonant(len - 3)) {
      return false;
    }
    const char c = w_[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
  }

  // Only the longest matching suffix is considered; if its condition fails
  // the step leaves the word alone.
  template <typename Rules, typename Cond>
  void replace_longest(const Rules& rules, Cond&& condition) {
    const std::pair<std::string_view, std::string_view>* best = nullptr;
    for (const auto& rule : rules) {
      if (ends(rule.first) && (!best || rule.first.size() > best->first.size())) {
        best = &rule;
      }
    }
    if (!best) return;
    const std::size_t stem = size() - best->first.size();
    if (condition(stem)) {
      w_.resize(stem);
      w_ += best->second;
    }
  }

  std::string w_;
};

}  // namespace

std::string stem(std::string_view token) {
  PorterWord word(token);
  word.step1a();
  word.step1b();
  word.step1c();
  word.step2();
  word.step3();
  word.step4();
  word.step5a();
  word.step5b();
  return std::move(word).release();
}

}  // namespace qgeval

#include "phonofuse/stemmer.hpp"

#include <array>
#include <utility>

namespace phonofuse {

namespace {

bool is_plain_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

// Consonant test on w[i]. A 'y' after a consonant is a vowel, a 'y' at the
// start or after a vowel is a consonant.
bool is_consonant(std::string_view w, std::size_t i) {
  if (is_plain_vowel(w[i])) return false;
  if (w[i] != 'y') return true;
  bool consonant = true;
  for (std::size_t k = 0; k <= i; ++k) {
    if (is_plain_vowel(w[k]))
      consonant = false;
    else if (w[k] == 'y')
      consonant = k == 0 || !consonant;
    else
      consonant = true;
  }
  return consonant;
}

bool has_vowel(std::string_view w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!is_consonant(w, i)) return true;
  return false;
}

// *d: ends with a double consonant.
bool ends_double_consonant(std::string_view w) {
  const auto n = w.size();
  return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

// *o: ends consonant-vowel-consonant, last consonant not w, x or y.
bool ends_cvc(std::string_view w) {
  const auto n = w.size();
  if (n < 3) return false;
  if (!is_consonant(w, n - 3) || is_consonant(w, n - 2) || !is_consonant(w, n - 1)) return false;
  const char last = w[n - 1];
  return last != 'w' && last != 'x' && last != 'y';
}

bool ends_with(std::string_view w, std::string_view suffix) {
  return w.size() >= suffix.size() && w.substr(w.size() - suffix.size()) == suffix;
}

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
};

// Applies the rule with the longest matching suffix (the tables below are
// ordered so the first match is the longest). When its condition fails the
// word is left alone.
template <std::size_t N>
bool apply_longest(std::string& w, const std::array<Rule, N>& rules, int min_measure) {
  for (const auto& rule : rules) {
    if (!ends_with(w, rule.suffix)) continue;
    std::string_view base(w.data(), w.size() - rule.suffix.size());
    if (measure(base) <= min_measure) return false;
    w.resize(base.size());
    w.append(rule.replacement);
    return true;
  }
  return false;
}

void step1a(std::string& w) {
  if (ends_with(w, "sses")) {
    w.resize(w.size() - 2);
  } else if (ends_with(w, "ies")) {
    w.resize(w.size() - 2);
  } else if (ends_with(w, "ss")) {
    // unchanged
  } else if (ends_with(w, "s")) {
    w.pop_back();
  }
}

void step1b(std::string& w) {
  if (ends_with(w, "eed")) {
    if (measure(std::string_view(w).substr(0, w.size() - 3)) > 0) w.pop_back();
    return;
  }
  std::size_t cut = 0;
  if (ends_with(w, "ed") && has_vowel(std::string_view(w).substr(0, w.size() - 2)))
    cut = 2;
  else if (ends_with(w, "ing") && has_vowel(std::string_view(w).substr(0, w.size() - 3)))
    cut = 3;
  if (cut == 0) return;
  w.resize(w.size() - cut);

  if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
    w.push_back('e');
  } else if (ends_double_consonant(w)) {
    const char last = w.back();
    if (last != 'l' && last != 's' && last != 'z') w.pop_back();
  } else if (measure(w) == 1 && ends_cvc(w)) {
    w.push_back('e');
  }
}

void step1c(std::string& w) {
  if (ends_with(w, "y") && has_vowel(std::string_view(w).substr(0, w.size() - 1)))
    w.back() = 'i';
}

void step2(std::string& w) {
  static constexpr std::array<Rule, 20> rules = {{
      {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},   {"anci", "ance"},
      {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},     {"entli", "ent"},
      {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
      {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
      {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},   {"biliti", "ble"},
  }};
  apply_longest(w, rules, 0);
}

void step3(std::string& w) {
  static constexpr std::array<Rule, 7> rules = {{
      {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
      {"ical", "ic"},  {"ful", ""},   {"ness", ""},
  }};
  apply_longest(w, rules, 0);
}

void step4(std::string& w) {
  static constexpr std::array<std::string_view, 19> suffixes = {
      "al",  "ance", "ence", "er", "ic",  "able", "ible", "ant", "ement", "ment",
      "ent", "ion",  "ou",   "ism", "ate", "iti", "ous",  "ive", "ize"};
  for (auto suffix : suffixes) {
    if (!ends_with(w, suffix)) continue;
    std::string_view base(w.data(), w.size() - suffix.size());
    bool ok = measure(base) > 1;
    if (suffix == "ion") ok = ok && !base.empty() && (base.back() == 's' || base.back() == 't');
    if (ok) w.resize(base.size());
    return;
  }
}

void step5a(std::string& w) {
  if (!ends_with(w, "e")) return;
  std::string_view base(w.data(), w.size() - 1);
  const int m = measure(base);
  if (m > 1 || (m == 1 && !ends_cvc(base))) w.pop_back();
}

void step5b(std::string& w) {
  if (measure(w) > 1 && ends_double_consonant(w) && w.back() == 'l') w.pop_back();
}

}  // namespace

int measure(std::string_view word) {
  int m = 0;
  bool prev_vowel = false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const bool vowel = !is_consonant(word, i);
    if (prev_vowel && !vowel) ++m;
    prev_vowel = vowel;
  }
  return m;
}

std::string stem(std::string_view word) {
  std::string w(word);
  if (w.size() <= 2) return w;
  step1a(w);
  step1b(w);
  step1c(w);
  step2(w);
  step3(w);
  step4(w);
  step5a(w);
  step5b(w);
  return w;
}

}  // namespace phonofuse

#include "phonofuse/text_normalize.hpp"

namespace phonofuse {

const std::vector<std::string_view>& default_stop_words() {
  // Function words only. "about" is left out because it is also a keyword
  // category in word-level corpora.
  static const std::vector<std::string_view> words = {
      // articles and determiners
      "a", "an", "the", "this", "that", "these", "those", "some", "any", "each", "every",
      "all", "both", "either", "neither", "no", "such", "own", "same", "other",
      // pronouns
      "i", "me", "my", "mine", "myself", "we", "us", "our", "ours", "ourselves", "you",
      "your", "yours", "yourself", "yourselves", "he", "him", "his", "himself", "she",
      "her", "hers", "herself", "it", "its", "itself", "they", "them", "their", "theirs",
      "themselves", "what", "which", "who", "whom", "whose",
      // auxiliaries and modals
      "am", "is", "are", "was", "were", "be", "been", "being", "have", "has", "had",
      "having", "do", "does", "did", "doing", "will", "would", "shall", "should", "can",
      "could", "may", "might", "must", "ought",
      // prepositions
      "of", "in", "on", "at", "by", "for", "with", "against", "between", "into",
      "through", "during", "before", "after", "above", "below", "to", "from", "up",
      "down", "out", "off", "over", "under", "onto", "upon", "within", "without",
      "toward", "towards", "across", "along", "among", "around", "behind", "beside",
      "via", "like",
      // conjunctions
      "and", "but", "or", "nor", "so", "than", "if", "then", "because", "as", "until",
      "while", "though", "although", "whether",
      // adverbs and particles
      "too", "very", "there", "here", "when", "where", "why", "how", "more", "most",
      "only", "just", "not", "now", "also", "again", "once", "further", "yet", "ever",
      "oh", "um", "uh",
  };
  return words;
}

const std::vector<std::pair<std::string_view, std::string_view>>& default_contractions() {
  static const std::vector<std::pair<std::string_view, std::string_view>> table = {
      {"ain't", "am not"},       {"aren't", "are not"},       {"can't", "can not"},
      {"couldn't", "could not"}, {"didn't", "did not"},       {"doesn't", "does not"},
      {"don't", "do not"},       {"hadn't", "had not"},       {"hasn't", "has not"},
      {"haven't", "have not"},   {"isn't", "is not"},         {"mightn't", "might not"},
      {"mustn't", "must not"},   {"needn't", "need not"},     {"shan't", "shall not"},
      {"shouldn't", "should not"}, {"wasn't", "was not"},     {"weren't", "were not"},
      {"won't", "will not"},     {"wouldn't", "would not"},   {"i'm", "i am"},
      {"i've", "i have"},        {"i'll", "i will"},          {"i'd", "i would"},
      {"you're", "you are"},     {"you've", "you have"},      {"you'll", "you will"},
      {"you'd", "you would"},    {"he's", "he is"},           {"he'll", "he will"},
      {"she's", "she is"},       {"she'll", "she will"},      {"it's", "it is"},
      {"we're", "we are"},       {"we've", "we have"},        {"we'll", "we will"},
      {"they're", "they are"},   {"they've", "they have"},    {"they'll", "they will"},
      {"that's", "that is"},     {"there's", "there is"},     {"what's", "what is"},
      {"who's", "who is"},       {"where's", "where is"},     {"here's", "here is"},
      {"let's", "let us"},
  };
  return table;
}

}  // namespace phonofuse

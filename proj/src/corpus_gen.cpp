#include "phonofuse/corpus_gen.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "phonofuse/errors.hpp"

namespace phonofuse {

namespace {

constexpr std::string_view kConsonants = "bcdfghjklmnpqrstvwxz";

bool is_vowel_letter(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y'; }

bool ends_with(std::string_view w, std::string_view s) {
  return w.size() >= s.size() && w.substr(w.size() - s.size()) == s;
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t SplitMix64::below(std::size_t n) {
  if (n == 0) throw std::invalid_argument("SplitMix64::below(0)");
  return static_cast<std::size_t>(next() % n);
}

double SplitMix64::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::string corrupt_word(std::string_view word, Corruption kind, SplitMix64& rng) {
  std::string w(word);
  switch (kind) {
    case Corruption::None:
      return w;
    case Corruption::Drop:
      return {};
    case Corruption::SuffixSwap:
      if (ends_with(w, "ed")) return w.substr(0, w.size() - 2) + "ing";
      if (ends_with(w, "ing")) return w.substr(0, w.size() - 3) + "ed";
      return w + "ing";
    case Corruption::Plural:
      if (ends_with(w, "s") || ends_with(w, "x") || ends_with(w, "z") || ends_with(w, "ch") ||
          ends_with(w, "sh"))
        return w + "es";
      return w + "s";
    case Corruption::ConsonantSubstitution: {
      std::vector<std::size_t> positions;
      for (std::size_t i = 0; i < w.size(); ++i)
        if (!is_vowel_letter(w[i])) positions.push_back(i);
      if (positions.empty()) return w;
      const auto pos = positions[rng.below(positions.size())];
      char replacement = w[pos];
      while (replacement == w[pos]) replacement = kConsonants[rng.below(kConsonants.size())];
      w[pos] = replacement;
      return w;
    }
  }
  return w;
}

std::vector<CorpusCategory> generate_corpus(const CorpusRecipe& recipe, std::uint64_t seed) {
  static constexpr Corruption kKeywordNoise[] = {Corruption::SuffixSwap, Corruption::Plural,
                                                 Corruption::ConsonantSubstitution, Corruption::Drop};
  static constexpr Corruption kFillerNoise[] = {Corruption::SuffixSwap, Corruption::Plural,
                                                Corruption::ConsonantSubstitution};
  SplitMix64 rng(seed);
  std::vector<CorpusCategory> corpus;
  for (const auto& cat : recipe.categories) {
    if (cat.sentences.empty())
      throw std::invalid_argument("recipe category '" + cat.keyword + "' has no sentences");
    std::string name = cat.keyword;
    std::transform(name.begin(), name.end(), name.begin(),
                   [](char c) { return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c; });
    CorpusCategory out{name, cat.keyword, {}};
    for (std::size_t s = 0; s < recipe.samples_per_category; ++s) {
      const auto& sentence = cat.sentences[rng.below(cat.sentences.size())];
      std::string text;
      for (const auto& word : split_words(sentence)) {
        Corruption kind = Corruption::None;
        if (word == cat.keyword) {
          if (rng.unit() < recipe.keyword_corruption) kind = kKeywordNoise[rng.below(std::size(kKeywordNoise))];
        } else if (rng.unit() < recipe.filler_corruption) {
          kind = kFillerNoise[rng.below(std::size(kFillerNoise))];
        }
        auto noisy = corrupt_word(word, kind, rng);
        if (noisy.empty()) continue;
        if (!text.empty()) text.push_back(' ');
        text += noisy;
      }
      char id[16];
      std::snprintf(id, sizeof id, "s%03zu", s);
      out.samples.push_back({id, std::move(text)});
    }
    corpus.push_back(std::move(out));
  }
  return corpus;
}

CorpusRecipe random_recipe(std::span<const std::string> keywords,
                           std::span<const std::string> vocabulary, std::size_t n_categories,
                           std::size_t samples_per_category, std::uint64_t seed) {
  if (keywords.size() < n_categories)
    throw std::invalid_argument("random_recipe: not enough keywords");
  if (vocabulary.empty()) throw std::invalid_argument("random_recipe: empty vocabulary");
  SplitMix64 rng(seed);
  std::vector<std::string> pool(keywords.begin(), keywords.end());
  CorpusRecipe recipe;
  recipe.samples_per_category = samples_per_category;
  recipe.keyword_corruption = 0.3 + 0.6 * rng.unit();
  recipe.filler_corruption = 0.4 * rng.unit();
  for (std::size_t c = 0; c < n_categories; ++c) {
    const auto pick = rng.below(pool.size());
    CleanSentences cat{pool[pick], {}};
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    const std::size_t n_sentences = 2 + rng.below(3);
    for (std::size_t k = 0; k < n_sentences; ++k) {
      const std::size_t length = 3 + rng.below(8);
      const std::size_t slot = rng.below(length);
      std::string sentence;
      for (std::size_t i = 0; i < length; ++i) {
        if (!sentence.empty()) sentence.push_back(' ');
        sentence += i == slot ? cat.keyword : vocabulary[rng.below(vocabulary.size())];
      }
      cat.sentences.push_back(std::move(sentence));
    }
    recipe.categories.push_back(std::move(cat));
  }
  return recipe;
}

void write_corpus(const std::vector<CorpusCategory>& corpus, const std::filesystem::path& root) {
  std::error_code ec;
  for (const auto& cat : corpus) {
    const auto dir = root / cat.name;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
    for (const auto& sample : cat.samples) {
      std::ofstream out(dir / (sample.id + ".txt"), std::ios::binary | std::ios::trunc);
      if (!out) throw IoError("cannot write sample " + sample.id + " under " + dir.string());
      out << sample.text.value_or("") << '\n';
    }
  }
}

}  // namespace phonofuse

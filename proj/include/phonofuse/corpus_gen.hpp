#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phonofuse/eval.hpp"

namespace phonofuse {

/// SplitMix64; the same sequence on every platform for a given seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, n); n must be positive.
  std::size_t below(std::size_t n);
  /// Uniform in [0, 1).
  double unit();

 private:
  std::uint64_t state_;
};

// Transcription noise applied to single words.
enum class Corruption {
  None,
  SuffixSwap,             // "-ed" <-> "-ing"; other words gain "-ing"
  Plural,                 // "-s" / "-es" appended
  ConsonantSubstitution,  // one consonant replaced, vowels kept
  Drop,                   // word removed
};

std::string corrupt_word(std::string_view word, Corruption kind, SplitMix64& rng);

struct CleanSentences {
  std::string keyword;
  std::vector<std::string> sentences;  // each contains the keyword
};

struct CorpusRecipe {
  std::vector<CleanSentences> categories;
  std::size_t samples_per_category = 10;
  double keyword_corruption = 0.6;
  double filler_corruption = 0.2;
};

/// Noisy transcripts built from the recipe's clean sentences; identical
/// for identical (recipe, seed).
std::vector<CorpusCategory> generate_corpus(const CorpusRecipe& recipe, std::uint64_t seed);

/// A recipe of `n_categories` distinct keywords with filler sentences drawn
/// from `vocabulary`.
CorpusRecipe random_recipe(std::span<const std::string> keywords,
                           std::span<const std::string> vocabulary, std::size_t n_categories,
                           std::size_t samples_per_category, std::uint64_t seed);

/// Writes `<root>/<KEYWORD>/<id>.txt`, the layout load_dataset reads.
void write_corpus(const std::vector<CorpusCategory>& corpus, const std::filesystem::path& root);

}  // namespace phonofuse

#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "phonofuse/pronlex.hpp"
#include "phonofuse/text_normalize.hpp"

namespace phonofuse {

enum class PhonemeClass : std::uint8_t { Vowel, Plosive, Fricative, Affricate, Nasal, Liquid, Glide };

inline constexpr std::size_t kPhonemeClassCount = 7;

std::string_view to_string(PhonemeClass c);
/// Case-insensitive class name ("vowel", "Plosive", ...).
PhonemeClass parse_phoneme_class(std::string_view name);

/// Manner of articulation. HH counts as a fricative, W and Y as glides.
PhonemeClass classify(Symbol s);
/// Same, from the symbol text; throws ClassificationError for anything
/// outside the 39-symbol inventory.
PhonemeClass classify(std::string_view symbol);

/// Non-empty set of phoneme classes.
class ClassSet {
 public:
  ClassSet(std::initializer_list<PhonemeClass> classes);
  /// Comma-separated names, e.g. "vowel,plosive".
  static ClassSet parse(std::string_view spec);

  static ClassSet vowel_plosive() { return {PhonemeClass::Vowel, PhonemeClass::Plosive}; }
  static ClassSet vowel_fricative() { return {PhonemeClass::Vowel, PhonemeClass::Fricative}; }

  bool contains(PhonemeClass c) const noexcept { return bits_ & bit(c); }
  bool is_subset_of(const ClassSet& other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  std::uint8_t bits() const noexcept { return bits_; }
  std::string str() const;

  friend bool operator==(const ClassSet&, const ClassSet&) = default;

 private:
  explicit ClassSet(std::uint8_t bits);
  static std::uint8_t bit(PhonemeClass c) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(c)); }
  std::uint8_t bits_ = 0;
};

/// First letter of a vowel symbol: AH -> 'A', IY -> 'I'. Throws
/// std::invalid_argument for consonants.
char vowel_letter(Symbol s);

/// A vowel rendered as its letter, or a consonant kept as its full ARPAbet
/// symbol. Compared as a whole, so S never matches inside SH.
class PatternSymbol {
 public:
  static PatternSymbol vowel(char letter);
  static PatternSymbol consonant(Symbol s);

  bool is_vowel() const noexcept { return code_ < 5; }
  std::string_view text() const;
  /// Class of the phonemes this symbol can stand for.
  PhonemeClass phoneme_class() const;

  friend bool operator==(PatternSymbol, PatternSymbol) = default;

 private:
  explicit PatternSymbol(std::uint8_t code) : code_(code) {}
  std::uint8_t code_;  // 0..4 = A E I O U, 5 + Symbol otherwise
};

struct PrunedPattern {
  std::vector<PatternSymbol> symbols;

  bool empty() const noexcept { return symbols.empty(); }
  std::size_t size() const noexcept { return symbols.size(); }
  /// "A G I A T" with the default separator, "AGIAT" with "".
  std::string str(std::string_view sep = " ") const;

  friend bool operator==(const PrunedPattern&, const PrunedPattern&) = default;
};

PrunedPattern prune(std::span<const Symbol> phonemes, const ClassSet& classes);

struct PhonemeStream {
  SymbolSeq symbols;
  std::size_t oov_count = 0;
};

/// Concatenated variant-1 phonemes of every in-vocabulary token, stress
/// removed. Out-of-vocabulary tokens are counted and skipped.
PhonemeStream phonemize_stream(const NormalizedTranscript& transcript, const Lexicon& lexicon);

}  // namespace phonofuse

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace phonofuse {

// The 39 ARPAbet base symbols used by the CMU pronouncing dictionary, in
// alphabetical order.
enum class Symbol : std::uint8_t {
  AA, AE, AH, AO, AW, AY, B, CH, D, DH, EH, ER, EY, F, G, HH, IH, IY, JH, K,
  L, M, N, NG, OW, OY, P, R, S, SH, T, TH, UH, UW, V, W, Y, Z, ZH
};

inline constexpr std::size_t kSymbolCount = 39;

const std::array<Symbol, kSymbolCount>& all_symbols();
std::string_view to_string(Symbol s);
std::optional<Symbol> parse_symbol(std::string_view text);
/// The 15 symbols whose name starts with a vowel letter.
bool is_vowel_symbol(Symbol s);

struct Phoneme {
  Symbol base;
  std::optional<std::uint8_t> stress;  // 0, 1 or 2, vowels only

  /// "AH0" -> {AH, 0}. Returns nullopt for unknown symbols, stress on a
  /// consonant or a stress digit outside 0..2.
  static std::optional<Phoneme> parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const Phoneme&, const Phoneme&) = default;
};

using PhonemeSeq = std::vector<Phoneme>;
using SymbolSeq = std::vector<Symbol>;

struct Pronunciation {
  std::string word;
  int variant = 1;
  PhonemeSeq phonemes;

  friend bool operator==(const Pronunciation&, const Pronunciation&) = default;
};

struct ParseReport {
  std::size_t lines = 0;
  std::size_t entries = 0;
  std::size_t comments = 0;
  std::size_t blank = 0;
  std::size_t malformed = 0;     // bad symbol, bad variant index, orphan variant
  std::size_t undecodable = 0;   // non-ASCII bytes
};

/// Word -> pronunciation variants. Immutable once built.
class Lexicon {
 public:
  Lexicon() = default;

  const Pronunciation* lookup(std::string_view word) const;
  std::span<const Pronunciation> variants(std::string_view word) const;
  bool contains(std::string_view word) const { return lookup(word) != nullptr; }

  std::size_t headword_count() const noexcept { return entries_.size(); }
  std::size_t pronunciation_count() const noexcept;

 private:
  friend class LexiconBuilder;
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::unordered_map<std::string, std::vector<Pronunciation>, Hash, std::equal_to<>> entries_;
};

struct ParsedLexicon {
  Lexicon lexicon;
  ParseReport report;
};

/// Reads `WORD  PH PH ...` lines (cmudict-0.7b layout; the lowercase
/// single-space layout of later releases is accepted too). Bad lines are
/// skipped and counted. Throws DataError when nothing parses.
ParsedLexicon parse_cmudict(std::istream& in);
ParsedLexicon load_cmudict(const std::filesystem::path& path);

/// Variant-1 pronunciation or nullopt when the word is out of vocabulary.
std::optional<Pronunciation> lookup(const Lexicon& lexicon, std::string_view word);

SymbolSeq strip_stress(std::span<const Phoneme> phonemes);

/// `WORD(2)  PH PH` as it appears in cmudict-0.7b.
std::string to_cmudict_line(const Pronunciation& p);

std::string join_symbols(std::span<const Symbol> symbols, std::string_view sep = " ");
std::string join_phonemes(std::span<const Phoneme> phonemes, std::string_view sep = " ");

/// The mini lexicon compiled into the library; covers every word the
/// bundled fixtures use.
const Lexicon& bundled_lexicon();
std::string_view bundled_lexicon_text();

}  // namespace phonofuse

#include "phonofuse/phonology.hpp"

#include <array>
#include <stdexcept>

#include "phonofuse/errors.hpp"

namespace phonofuse {

namespace {

constexpr std::array<std::string_view, kPhonemeClassCount> kClassNames = {
    "vowel", "plosive", "fricative", "affricate", "nasal", "liquid", "glide"};

constexpr std::string_view kVowelLetters = "AEIOU";

char lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

}  // namespace

std::string_view to_string(PhonemeClass c) { return kClassNames.at(static_cast<std::size_t>(c)); }

PhonemeClass parse_phoneme_class(std::string_view name) {
  std::string lowered;
  for (char c : name) lowered.push_back(lower(c));
  for (std::size_t i = 0; i < kClassNames.size(); ++i)
    if (kClassNames[i] == lowered) return static_cast<PhonemeClass>(i);
  throw std::invalid_argument("unknown phoneme class '" + std::string(name) + "'");
}

PhonemeClass classify(Symbol s) {
  using enum Symbol;
  switch (s) {
    case AA: case AE: case AH: case AO: case AW: case AY: case EH: case ER:
    case EY: case IH: case IY: case OW: case OY: case UH: case UW:
      return PhonemeClass::Vowel;
    case P: case B: case T: case D: case K: case G:
      return PhonemeClass::Plosive;
    case F: case V: case TH: case DH: case S: case Z: case SH: case ZH: case HH:
      return PhonemeClass::Fricative;
    case CH: case JH:
      return PhonemeClass::Affricate;
    case M: case N: case NG:
      return PhonemeClass::Nasal;
    case L: case R:
      return PhonemeClass::Liquid;
    case W: case Y:
      return PhonemeClass::Glide;
  }
  throw ClassificationError("unclassifiable phoneme");
}

PhonemeClass classify(std::string_view symbol) {
  auto s = parse_symbol(symbol);
  if (!s) throw ClassificationError("unknown phoneme symbol '" + std::string(symbol) + "'");
  return classify(*s);
}

ClassSet::ClassSet(std::uint8_t bits) : bits_(bits) {
  if (bits_ == 0) throw std::invalid_argument("phoneme class set must not be empty");
}

ClassSet::ClassSet(std::initializer_list<PhonemeClass> classes) {
  for (auto c : classes) bits_ |= bit(c);
  if (bits_ == 0) throw std::invalid_argument("phoneme class set must not be empty");
}

ClassSet ClassSet::parse(std::string_view spec) {
  std::uint8_t bits = 0;
  std::size_t i = 0;
  while (i <= spec.size()) {
    auto comma = spec.find(',', i);
    if (comma == std::string_view::npos) comma = spec.size();
    auto name = spec.substr(i, comma - i);
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    if (!name.empty()) bits |= bit(parse_phoneme_class(name));
    i = comma + 1;
  }
  return ClassSet(bits);
}

std::string ClassSet::str() const {
  std::string out;
  for (std::size_t i = 0; i < kPhonemeClassCount; ++i) {
    if (!(bits_ & (1u << i))) continue;
    if (!out.empty()) out.push_back(',');
    out.append(kClassNames[i]);
  }
  return out;
}

char vowel_letter(Symbol s) {
  if (classify(s) != PhonemeClass::Vowel)
    throw std::invalid_argument("not a vowel: " + std::string(to_string(s)));
  return to_string(s).front();
}

PatternSymbol PatternSymbol::vowel(char letter) {
  auto pos = kVowelLetters.find(letter);
  if (pos == std::string_view::npos)
    throw std::invalid_argument(std::string("not a vowel letter: ") + letter);
  return PatternSymbol(static_cast<std::uint8_t>(pos));
}

PatternSymbol PatternSymbol::consonant(Symbol s) {
  if (classify(s) == PhonemeClass::Vowel)
    throw std::invalid_argument("not a consonant: " + std::string(to_string(s)));
  return PatternSymbol(static_cast<std::uint8_t>(5 + static_cast<unsigned>(s)));
}

std::string_view PatternSymbol::text() const {
  if (is_vowel()) return kVowelLetters.substr(code_, 1);
  return to_string(static_cast<Symbol>(code_ - 5));
}

PhonemeClass PatternSymbol::phoneme_class() const {
  if (is_vowel()) return PhonemeClass::Vowel;
  return classify(static_cast<Symbol>(code_ - 5));
}

std::string PrunedPattern::str(std::string_view sep) const {
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) out.append(sep);
    out.append(symbols[i].text());
  }
  return out;
}

PrunedPattern prune(std::span<const Symbol> phonemes, const ClassSet& classes) {
  PrunedPattern out;
  for (Symbol s : phonemes) {
    const auto c = classify(s);
    if (!classes.contains(c)) continue;
    out.symbols.push_back(c == PhonemeClass::Vowel ? PatternSymbol::vowel(vowel_letter(s))
                                                   : PatternSymbol::consonant(s));
  }
  return out;
}

PhonemeStream phonemize_stream(const NormalizedTranscript& transcript, const Lexicon& lexicon) {
  PhonemeStream out;
  for (const auto& token : transcript.tokens) {
    const auto* p = lexicon.lookup(token.str());
    if (!p) {
      ++out.oov_count;
      continue;
    }
    for (const auto& ph : p->phonemes) out.symbols.push_back(ph.base);
  }
  return out;
}

}  // namespace phonofuse

#include <doctest.h>

#include <random>

#include "phonofuse/errors.hpp"
#include "phonofuse/phonology.hpp"
#include "test_util.hpp"

using namespace phonofuse;

namespace {

SymbolSeq symbols(std::initializer_list<const char*> names) {
  SymbolSeq out;
  for (const char* n : names) out.push_back(*parse_symbol(n));
  return out;
}

SymbolSeq word_symbols(const char* word) {
  const auto* p = bundled_lexicon().lookup(word);
  REQUIRE_MESSAGE(p != nullptr, word);
  return strip_stress(p->phonemes);
}

bool is_subsequence(const std::vector<std::string>& small, const std::vector<std::string>& big) {
  std::size_t j = 0;
  for (const auto& s : big)
    if (j < small.size() && small[j] == s) ++j;
  return j == small.size();
}

std::vector<std::string> texts(const PrunedPattern& p) {
  std::vector<std::string> out;
  for (auto s : p.symbols) out.emplace_back(s.text());
  return out;
}

// Independent rendering of the full (unpruned) sequence.
std::vector<std::string> rendered(const SymbolSeq& seq) {
  std::vector<std::string> out;
  for (auto s : seq) {
    std::string t(to_string(s));
    out.push_back(is_vowel_symbol(s) ? t.substr(0, 1) : t);
  }
  return out;
}

}  // namespace

TEST_CASE("classify") {
  CHECK(classify("T") == PhonemeClass::Plosive);
  CHECK(classify("S") == PhonemeClass::Fricative);
  CHECK(classify("N") == PhonemeClass::Nasal);
  CHECK(classify("HH") == PhonemeClass::Fricative);
  CHECK(classify("CH") == PhonemeClass::Affricate);
  CHECK(classify("R") == PhonemeClass::Liquid);
  CHECK(classify("W") == PhonemeClass::Glide);
  CHECK(classify("AH") == PhonemeClass::Vowel);
  CHECK_THROWS_AS(classify("QQ"), ClassificationError);
  CHECK_THROWS_AS(classify("ah"), ClassificationError);
}

TEST_CASE("classification is total and partitions the inventory") {
  std::array<std::size_t, kPhonemeClassCount> sizes{};
  for (auto s : all_symbols()) {
    const auto c = classify(s);
    ++sizes[static_cast<std::size_t>(c)];
    CHECK((c == PhonemeClass::Vowel) == is_vowel_symbol(s));
  }
  // vowel, plosive, fricative, affricate, nasal, liquid, glide
  CHECK(sizes == std::array<std::size_t, kPhonemeClassCount>{15, 6, 9, 2, 3, 2, 2});
}

TEST_CASE("vowel_letter") {
  CHECK(vowel_letter(Symbol::AH) == 'A');
  CHECK(vowel_letter(Symbol::IY) == 'I');
  CHECK(vowel_letter(Symbol::EH) == 'E');
  CHECK(vowel_letter(Symbol::ER) == 'E');
  CHECK(vowel_letter(Symbol::OY) == 'O');
  CHECK(vowel_letter(Symbol::UW) == 'U');
  CHECK_THROWS_AS(vowel_letter(Symbol::T), std::invalid_argument);
}

TEST_CASE("ClassSet") {
  CHECK(ClassSet::parse("vowel,plosive") == ClassSet::vowel_plosive());
  CHECK(ClassSet::parse(" Plosive , VOWEL ") == ClassSet::vowel_plosive());
  CHECK(ClassSet::parse("vowel,fricative").str() == "vowel,fricative");
  CHECK_THROWS_AS(ClassSet::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(ClassSet::parse(","), std::invalid_argument);
  CHECK_THROWS_AS(ClassSet::parse("vowel,stop"), std::invalid_argument);
  CHECK_THROWS_AS(ClassSet({}), std::invalid_argument);
  CHECK(ClassSet({PhonemeClass::Vowel}).is_subset_of(ClassSet::vowel_plosive()));
  CHECK_FALSE(ClassSet::vowel_fricative().is_subset_of(ClassSet::vowel_plosive()));
}

TEST_CASE("PatternSymbol keeps whole consonant symbols") {
  CHECK(PatternSymbol::vowel('A').text() == "A");
  CHECK(PatternSymbol::consonant(Symbol::SH).text() == "SH");
  CHECK(PatternSymbol::consonant(Symbol::S) != PatternSymbol::consonant(Symbol::SH));
  CHECK(PatternSymbol::consonant(Symbol::T).phoneme_class() == PhonemeClass::Plosive);
  CHECK_THROWS_AS(PatternSymbol::vowel('Y'), std::invalid_argument);
  CHECK_THROWS_AS(PatternSymbol::consonant(Symbol::AH), std::invalid_argument);
}

TEST_CASE("prune: keyword patterns") {
  const auto vp = ClassSet::vowel_plosive();
  const auto vf = ClassSet::vowel_fricative();
  CHECK(prune(symbols({"AH", "N", "AW", "N", "S", "T"}), vp).str("") == "AAT");
  CHECK(prune(symbols({"AH", "G", "R", "IY", "M", "AH", "N", "T"}), vp).str("") == "AGIAT");
  CHECK(prune(symbols({"AH", "F", "EH", "R", "Z"}), vp).str("") == "AE");
  CHECK(prune(symbols({"AH", "F", "EH", "R", "Z"}), vf).str() == "A F E Z");
  CHECK(prune({}, vp).empty());

  // Same answers straight from the bundled dictionary.
  CHECK(prune(word_symbols("announced"), vp).str() == "A A T");
  CHECK(prune(word_symbols("agreement"), vp).str() == "A G I A T");
  CHECK(prune(word_symbols("affairs"), vp).str() == "A E");
  CHECK(prune(word_symbols("announced"), vf).str() == "A A S");
  CHECK(prune(word_symbols("agreement"), vf).str() == "A I A");
  CHECK(prune(word_symbols("affairs"), vf).str() == "A F E Z");
}

TEST_CASE("prune properties") {
  std::mt19937 rng(7);
  const auto& inventory = all_symbols();
  const std::vector<ClassSet> sets = {
      ClassSet::vowel_plosive(), ClassSet::vowel_fricative(), ClassSet({PhonemeClass::Vowel}),
      ClassSet({PhonemeClass::Nasal, PhonemeClass::Glide})};
  const ClassSet everything = {PhonemeClass::Vowel, PhonemeClass::Plosive, PhonemeClass::Fricative,
                               PhonemeClass::Affricate, PhonemeClass::Nasal, PhonemeClass::Liquid,
                               PhonemeClass::Glide};
  for (int iter = 0; iter < 500; ++iter) {
    SymbolSeq seq(std::uniform_int_distribution<std::size_t>(0, 20)(rng));
    for (auto& s : seq) s = inventory[std::uniform_int_distribution<std::size_t>(0, 38)(rng)];
    const auto full = rendered(seq);
    CHECK(texts(prune(seq, everything)) == full);
    for (const auto& set : sets) {
      const auto pruned = prune(seq, set);
      CHECK(pruned.size() <= seq.size());
      CHECK(is_subsequence(texts(pruned), full));
      for (auto s : pruned.symbols) CHECK(set.contains(s.phoneme_class()));
      // Adding classes only ever keeps more symbols.
      if (set.contains(PhonemeClass::Vowel))
        CHECK(is_subsequence(texts(prune(seq, {PhonemeClass::Vowel})), texts(pruned)));
      CHECK(is_subsequence(texts(pruned), texts(prune(seq, everything))));
    }
  }
}

TEST_CASE("phonemize_stream") {
  const auto& lex = bundled_lexicon();
  using testutil::tokens;
  auto s = phonemize_stream({"", tokens({"significant"})}, lex);
  CHECK(join_symbols(s.symbols) == "S IH G N IH F IH K AH N T");
  CHECK(s.oov_count == 0);

  s = phonemize_stream({"", {}}, lex);
  CHECK(s.symbols.empty());
  CHECK(s.oov_count == 0);

  s = phonemize_stream({"", tokens({"zzzzqqq", "about"})}, lex);
  CHECK(join_symbols(s.symbols) == "AH B AW T");
  CHECK(s.oov_count == 1);

  // Words run together with no boundary marker.
  s = phonemize_stream({"", tokens({"about", "it"})}, lex);
  CHECK(join_symbols(s.symbols) == "AH B AW T IH T");
}

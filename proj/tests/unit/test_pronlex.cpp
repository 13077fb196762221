#include <doctest.h>

#include <sstream>

#include "phonofuse/errors.hpp"
#include "phonofuse/pronlex.hpp"
#include "test_util.hpp"

using namespace phonofuse;

namespace {

ParsedLexicon parse(const std::string& text) {
  std::istringstream in(text);
  return parse_cmudict(in);
}

Phoneme ph(Symbol s, std::optional<std::uint8_t> stress = std::nullopt) { return {s, stress}; }

}  // namespace

TEST_CASE("symbol inventory") {
  CHECK(all_symbols().size() == 39);
  std::size_t vowels = 0;
  for (auto s : all_symbols()) {
    CHECK(parse_symbol(to_string(s)) == s);
    if (is_vowel_symbol(s)) ++vowels;
  }
  CHECK(vowels == 15);
  CHECK_FALSE(parse_symbol("AX").has_value());
  CHECK_FALSE(parse_symbol("ah").has_value());
  CHECK_FALSE(parse_symbol("").has_value());
}

TEST_CASE("Phoneme::parse") {
  CHECK(Phoneme::parse("AH0") == ph(Symbol::AH, 0));
  CHECK(Phoneme::parse("AW1") == ph(Symbol::AW, 1));
  CHECK(Phoneme::parse("IY2") == ph(Symbol::IY, 2));
  CHECK(Phoneme::parse("T") == ph(Symbol::T));
  CHECK(Phoneme::parse("AH") == ph(Symbol::AH));
  CHECK_FALSE(Phoneme::parse("AH3").has_value());
  CHECK_FALSE(Phoneme::parse("T1").has_value());
  CHECK_FALSE(Phoneme::parse("XX").has_value());
  CHECK_FALSE(Phoneme::parse("").has_value());
  CHECK(Phoneme::parse("AW1")->str() == "AW1");
}

TEST_CASE("parse_cmudict: single entry") {
  const auto parsed = parse("ABOUT  AH0 B AW1 T\n");
  const auto* p = parsed.lexicon.lookup("about");
  REQUIRE(p != nullptr);
  CHECK(p->word == "about");
  CHECK(p->variant == 1);
  CHECK(p->phonemes == PhonemeSeq{ph(Symbol::AH, 0), ph(Symbol::B), ph(Symbol::AW, 1), ph(Symbol::T)});
  CHECK(parsed.report.entries == 1);
  CHECK(parsed.report.lines == 1);
}

TEST_CASE("parse_cmudict: comments, blanks and variants") {
  const auto parsed = parse(";;; comment\n\nA  AH0\nA(2)  EY1\nABOUT  AH0 B AW1 T\n");
  CHECK(parsed.report.comments == 1);
  CHECK(parsed.report.blank == 1);
  CHECK(parsed.report.entries == 3);
  CHECK(parsed.report.malformed == 0);
  CHECK(parsed.lexicon.headword_count() == 2);
  CHECK(parsed.lexicon.pronunciation_count() == 3);
  const auto variants = parsed.lexicon.variants("a");
  REQUIRE(variants.size() == 2);
  CHECK(variants[0].variant == 1);
  CHECK(variants[0].phonemes == PhonemeSeq{ph(Symbol::AH, 0)});
  CHECK(variants[1].variant == 2);
  CHECK(variants[1].phonemes == PhonemeSeq{ph(Symbol::EY, 1)});
  // Lookup always answers with variant 1, whatever the line order.
  const auto reordered = parse("A(2)  EY1\nA  AH0\n");
  CHECK(reordered.lexicon.lookup("a")->variant == 1);
}

TEST_CASE("parse_cmudict: newer lowercase layout") {
  const auto parsed = parse("about ah0 b aw1 t\nabout AH0 B AW1 T\n");
  // Lowercase phonemes are not in the inventory; the uppercase line wins.
  CHECK(parsed.report.malformed == 1);
  const auto layout = parse("about AH0 B AW1 T\na AH0\na(2) EY1 # old form\n");
  CHECK(layout.report.malformed == 0);
  CHECK(layout.lexicon.variants("a").size() == 2);
  CHECK(layout.lexicon.lookup("about")->phonemes.size() == 4);
}

TEST_CASE("parse_cmudict: bad lines are skipped and counted") {
  const std::string text =
      "ABOUT  AH0 B AW1 T\n"
      "BROKEN\n"                     // no phonemes
      "BAD  AH0 QQ\n"                // unknown symbol
      "BAD2  T1\n"                   // stress on a consonant
      "WORD(1)  W ER1 D\n"           // explicit variant 1 is not a variant form
      "WORD(x)  W ER1 D\n"           // bad index
      "ABOUT  AH0 B AW1 T\n"         // duplicate variant
      "ORPHAN(2)  AO1 R F AH0 N\n"   // no variant 1
      "CAF\xC3\x89  K AE0 F EY1\n";  // non-ASCII
  const auto parsed = parse(text);
  CHECK(parsed.report.lines == 9);
  CHECK(parsed.report.entries == 1);
  CHECK(parsed.report.malformed == 7);
  CHECK(parsed.report.undecodable == 1);
  CHECK(parsed.lexicon.headword_count() == 1);
  CHECK_FALSE(parsed.lexicon.contains("orphan"));
  CHECK_FALSE(parsed.lexicon.contains("bad"));
}

TEST_CASE("parse_cmudict: nothing parsable is fatal") {
  CHECK_THROWS_WITH_AS(parse(""), doctest::Contains("empty lexicon"), DataError);
  CHECK_THROWS_WITH_AS(parse(";;; only a comment\n\n"), doctest::Contains("empty lexicon"), DataError);
  CHECK_THROWS_AS(load_cmudict("/nonexistent/cmudict.dict"), IoError);
}

TEST_CASE("to_cmudict_line round-trips") {
  const std::string text = "A  AH0\nA(2)  EY1\nABOUT  AH0 B AW1 T\nSIGNIFICANT  S IH0 G N IH1 F IH0 K AH0 N T\n";
  const auto parsed = parse(text);
  std::string rebuilt;
  for (const char* w : {"a", "about", "significant"})
    for (const auto& p : parsed.lexicon.variants(w)) rebuilt += to_cmudict_line(p) + "\n";
  CHECK(rebuilt == text);
}

TEST_CASE("lookup and strip_stress") {
  const auto& lex = bundled_lexicon();
  const auto about = lookup(lex, "about");
  REQUIRE(about.has_value());
  CHECK(join_phonemes(about->phonemes) == "AH0 B AW1 T");
  CHECK(strip_stress(about->phonemes) == SymbolSeq{Symbol::AH, Symbol::B, Symbol::AW, Symbol::T});
  CHECK(strip_stress({}).empty());
  const PhonemeSeq iy{ph(Symbol::IY, 2)};
  CHECK(strip_stress(iy) == SymbolSeq{Symbol::IY});

  const auto sig = lookup(lex, "significant");
  REQUIRE(sig.has_value());
  CHECK(join_symbols(strip_stress(sig->phonemes)) == "S IH G N IH F IH K AH N T");
  CHECK(join_phonemes(sig->phonemes) == "S IH0 G N IH1 F IH0 K AH0 N T");

  CHECK_FALSE(lookup(lex, "zzzzqqq").has_value());
  CHECK_FALSE(lookup(lex, "sunderkand").has_value());
  CHECK(lex.variants("zzzzqqq").empty());
}

TEST_CASE("bundled lexicon") {
  const auto& lex = bundled_lexicon();
  CHECK(lex.headword_count() == 59);
  CHECK(lex.pronunciation_count() == 78);
  std::istringstream in{std::string(bundled_lexicon_text())};
  const auto parsed = parse_cmudict(in);
  CHECK(parsed.report.malformed == 0);
  CHECK(parsed.report.undecodable == 0);
  CHECK(parsed.report.entries == 78);
  for (const char* w : {"announced", "agreement", "affairs", "president", "about", "a"})
    CHECK_MESSAGE(lex.contains(w), w);
}

TEST_CASE("load_cmudict from a file") {
  testutil::TempDir dir;
  testutil::write_file(dir.path() / "d.dict", "ABOUT  AH0 B AW1 T\r\nA  AH0\r\n");
  const auto parsed = load_cmudict(dir.path() / "d.dict");
  CHECK(parsed.lexicon.headword_count() == 2);
  CHECK(parsed.lexicon.lookup("a")->phonemes == PhonemeSeq{ph(Symbol::AH, 0)});
}

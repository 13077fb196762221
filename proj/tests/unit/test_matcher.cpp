#include <doctest.h>

#include <random>

#include "phonofuse/errors.hpp"
#include "phonofuse/matcher.hpp"
#include "phonofuse/stemmer.hpp"
#include "test_util.hpp"

using namespace phonofuse;
using testutil::tokens;

namespace {

PrunedPattern pattern(std::string_view spaced) {
  PrunedPattern out;
  std::size_t i = 0;
  while (i < spaced.size()) {
    auto j = spaced.find(' ', i);
    if (j == std::string_view::npos) j = spaced.size();
    const auto piece = spaced.substr(i, j - i);
    if (piece.size() == 1 && std::string_view("AEIOU").find(piece[0]) != std::string_view::npos)
      out.symbols.push_back(PatternSymbol::vowel(piece[0]));
    else
      out.symbols.push_back(PatternSymbol::consonant(*parse_symbol(piece)));
    i = j + 1;
  }
  return out;
}

// Brute force: try every start index, take a match and jump past it.
std::size_t scan_oracle(const std::vector<int>& hay, const std::vector<int>& needle) {
  std::size_t count = 0;
  std::size_t i = 0;
  while (i + needle.size() <= hay.size()) {
    bool match = true;
    for (std::size_t k = 0; k < needle.size(); ++k)
      if (hay[i + k] != needle[k]) match = false;
    if (match) {
      ++count;
      i += needle.size();
    } else {
      ++i;
    }
  }
  return count;
}

NormalizedTranscript transcript(std::initializer_list<const char*> ws) { return {"t", tokens(ws)}; }

}  // namespace

TEST_CASE("channel names") {
  for (auto c : kAllChannels) CHECK(parse_channel(to_string(c)) == c);
  CHECK_THROWS_AS(parse_channel("fused"), std::invalid_argument);
  CHECK(ChannelSet::all().str() == "baseline,stem,vowel_plosive,vowel_fricative");
  CHECK(ChannelSet::parse("stem,vowel_plosive") == ChannelSet::of({Channel::Stem, Channel::VowelPlosive}));
  CHECK_THROWS_AS(ChannelSet::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(ChannelSet::parse("stem,bogus"), std::invalid_argument);
  CHECK_FALSE(ChannelSet::of({Channel::Baseline}).has_fusion_member());
  CHECK_FALSE(is_fusion_member(Channel::Baseline));
}

TEST_CASE("baseline_count") {
  CHECK(baseline_count(tokens({"significance", "significant", "null", "null", "a", "significant"}),
                       "significant") == 2);
  CHECK(baseline_count({}, "significant") == 0);
  CHECK(baseline_count(tokens({"significance"}), "significant") == 0);
}

TEST_CASE("stem_count") {
  CHECK(stem_count(transcript({"significance", "significant"}), "significant") == 2);
  CHECK(stem_count(transcript({"vice"}), "significant") == 0);
  CHECK(stem_count(transcript({"absolutely"}), "absolute") == 1);
  CHECK(stem_count(transcript({"announcing", "announced", "announce"}), "announced") == 3);
}

TEST_CASE("pattern_count") {
  CHECK(pattern_count(pattern("A G I A T A G I A T"), pattern("A G I A T")) == 2);
  CHECK(pattern_count(pattern("A A A"), pattern("A A")) == 1);
  CHECK(pattern_count(pattern("S I G"), pattern("A A T")) == 0);
  CHECK(pattern_count(pattern("A A A A"), pattern("A A")) == 2);
  CHECK(pattern_count(PrunedPattern{}, pattern("A")) == 0);
  // Whole-symbol comparison: S does not match SH.
  CHECK(pattern_count(pattern("A SH"), pattern("A S")) == 0);
  CHECK_THROWS_AS(pattern_count(pattern("A"), PrunedPattern{}), std::invalid_argument);
}

TEST_CASE("pattern_count agrees with a brute-force scan") {
  std::mt19937 rng(12345);
  const std::vector<PatternSymbol> alphabet = {PatternSymbol::vowel('A'), PatternSymbol::vowel('E'),
                                               PatternSymbol::consonant(Symbol::T)};
  for (int iter = 0; iter < 1000; ++iter) {
    std::vector<int> hay(std::uniform_int_distribution<std::size_t>(0, 30)(rng));
    std::vector<int> needle(std::uniform_int_distribution<std::size_t>(1, 4)(rng));
    std::uniform_int_distribution<int> pick(0, 2);
    for (auto& x : hay) x = pick(rng);
    for (auto& x : needle) x = pick(rng);
    PrunedPattern h, n;
    for (int x : hay) h.symbols.push_back(alphabet[x]);
    for (int x : needle) n.symbols.push_back(alphabet[x]);
    REQUIRE(pattern_count(h, n) == scan_oracle(hay, needle));
  }
}

TEST_CASE("fuse: exhaustive truth table") {
  for (unsigned mask = 0; mask < 256; ++mask) {
    std::array<ChannelResult, 4> results;
    bool expected = false;
    for (std::size_t i = 0; i < 4; ++i) {
      const auto c = kAllChannels[i];
      const bool detected = mask & (1u << i);
      const bool available = mask & (1u << (i + 4));
      results[i] = available ? ChannelResult::from_count(c, detected ? 1 : 0) : ChannelResult::unavailable(c);
      if (is_fusion_member(c) && available && detected) expected = true;
    }
    CHECK(fuse(results) == expected);
  }
}

TEST_CASE("detect") {
  const auto& lex = bundled_lexicon();
  const DetectConfig config;

  SUBCASE("shared stem") {
    const auto r = detect(transcript({"significance"}), "significant", lex, config);
    CHECK(r[Channel::Stem].detected);
    CHECK_FALSE(r[Channel::Baseline].detected);
    CHECK(r.fused_detected);
  }
  SUBCASE("empty transcript") {
    const auto r = detect(NormalizedTranscript{}, "announced", lex, config);
    for (auto c : kAllChannels) CHECK(r[c].count == 0);
    CHECK_FALSE(r.fused_detected);
  }
  SUBCASE("out-of-vocabulary keyword") {
    const auto r = detect(transcript({"sunderkand", "about"}), "sunderkand", lex, config);
    CHECK_FALSE(r[Channel::VowelPlosive].available);
    CHECK_FALSE(r[Channel::VowelFricative].available);
    CHECK(r[Channel::Stem].available);
    CHECK(r.fused_detected == r[Channel::Stem].detected);
    CHECK(r.oov_count == 1);
    const auto miss = detect(transcript({"about"}), "sunderkand", lex, config);
    CHECK_FALSE(miss.fused_detected);
  }
  SUBCASE("match across a word boundary") {
    // "one mountain town": W AH N M AW N T AH N T AW N -> A A T A A
    const auto r = detect(transcript({"one", "mountain", "town"}), "announced", lex, config);
    CHECK(r[Channel::VowelPlosive].count == 1);
    CHECK(r.fused_detected);
  }
  SUBCASE("disabled channels") {
    DetectConfig stem_only;
    stem_only.channels = ChannelSet::of({Channel::Stem});
    const auto r = detect(transcript({"announced"}), "announced", lex, stem_only);
    CHECK_FALSE(r[Channel::Baseline].available);
    CHECK_FALSE(r[Channel::VowelPlosive].available);
    CHECK(r[Channel::Stem].detected);
    CHECK(r.fused_detected);

    DetectConfig baseline_only;
    baseline_only.channels = ChannelSet::of({Channel::Baseline});
    CHECK_THROWS_AS(baseline_only.validate(), std::invalid_argument);
  }
  SUBCASE("invalid keywords") {
    CHECK_THROWS_AS(detect(transcript({"x"}), "the", lex, config), InvalidKeyword);
    CHECK_THROWS_AS(detect(transcript({"x"}), "", lex, config), InvalidKeyword);
    CHECK_THROWS_AS(detect(transcript({"x"}), "vice president", lex, config), InvalidKeyword);
    CHECK_THROWS_AS(detect(transcript({"x"}), "null", lex, config), InvalidKeyword);
    CHECK(normalize_keyword("Announced", config.normalize).str() == "announced");
  }
}

TEST_CASE("prepare_keyword") {
  const auto p = prepare_keyword("AGREEMENT", bundled_lexicon(), DetectConfig{});
  CHECK(p.token.str() == "agreement");
  CHECK(p.stem == "agreement");
  REQUIRE(p.vowel_plosive.has_value());
  CHECK(p.vowel_plosive->str("") == "AGIAT");
  REQUIRE(p.vowel_fricative.has_value());
  CHECK(p.vowel_fricative->str("") == "AIA");
}

TEST_CASE("dominance on random transcripts") {
  const auto& lex = bundled_lexicon();
  const DetectConfig config;
  const std::vector<std::string> vocab = {"announced", "agreement", "affairs", "about", "sun",
                                          "bounced", "trade", "mountain", "fair", "sunderkand",
                                          "agree", "significant", "five", "zero", "plans"};
  std::mt19937 rng(99);
  for (int iter = 0; iter < 300; ++iter) {
    NormalizedTranscript t;
    const auto n = std::uniform_int_distribution<std::size_t>(0, 8)(rng);
    for (std::size_t i = 0; i < n; ++i)
      t.tokens.emplace_back(vocab[std::uniform_int_distribution<std::size_t>(0, vocab.size() - 1)(rng)]);
    for (const char* kw : {"announced", "agreement", "affairs", "sunderkand"}) {
      const auto r = detect(t, kw, lex, config);
      if (!r[Channel::Baseline].detected) continue;
      CHECK(r[Channel::Stem].detected);
      for (auto c : {Channel::VowelPlosive, Channel::VowelFricative})
        if (r[c].available) CHECK(r[c].detected);
      CHECK(r.fused_detected);
    }
  }
}

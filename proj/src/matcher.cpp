#include "phonofuse/matcher.hpp"

#include <algorithm>
#include <stdexcept>

#include "phonofuse/errors.hpp"
#include "phonofuse/stemmer.hpp"

namespace phonofuse {

namespace {

constexpr std::array<std::string_view, 4> kChannelNames = {"baseline", "stem", "vowel_plosive",
                                                           "vowel_fricative"};

std::optional<PrunedPattern> needle_for(const Pronunciation* p, const ClassSet& classes) {
  if (!p) return std::nullopt;
  auto needle = prune(strip_stress(p->phonemes), classes);
  if (needle.empty()) return std::nullopt;
  return needle;
}

}  // namespace

std::string_view to_string(Channel c) { return kChannelNames.at(static_cast<std::size_t>(c)); }

Channel parse_channel(std::string_view name) {
  for (std::size_t i = 0; i < kChannelNames.size(); ++i)
    if (kChannelNames[i] == name) return static_cast<Channel>(i);
  throw std::invalid_argument("unknown channel '" + std::string(name) + "'");
}

ChannelSet ChannelSet::of(std::initializer_list<Channel> channels) {
  std::uint8_t bits = 0;
  for (auto c : channels) bits |= static_cast<std::uint8_t>(1u << static_cast<unsigned>(c));
  return ChannelSet(bits);
}

ChannelSet ChannelSet::parse(std::string_view spec) {
  std::uint8_t bits = 0;
  std::size_t i = 0;
  while (i <= spec.size()) {
    auto comma = spec.find(',', i);
    if (comma == std::string_view::npos) comma = spec.size();
    auto name = spec.substr(i, comma - i);
    if (!name.empty()) bits |= static_cast<std::uint8_t>(1u << static_cast<unsigned>(parse_channel(name)));
    i = comma + 1;
  }
  if (bits == 0) throw std::invalid_argument("channel list must not be empty");
  return ChannelSet(bits);
}

std::string ChannelSet::str() const {
  std::string out;
  for (auto c : kAllChannels) {
    if (!contains(c)) continue;
    if (!out.empty()) out.push_back(',');
    out.append(to_string(c));
  }
  return out;
}

bool fuse(std::span<const ChannelResult> results) {
  return std::any_of(results.begin(), results.end(), [](const ChannelResult& r) {
    return is_fusion_member(r.channel) && r.available && r.detected;
  });
}

void DetectConfig::validate() const {
  if (channels.empty()) throw std::invalid_argument("no detection channel enabled");
  if (!channels.has_fusion_member())
    throw std::invalid_argument("fusion needs at least one of stem, vowel_plosive, vowel_fricative");
  normalize.validate();
}

Token normalize_keyword(std::string_view raw, const NormalizeConfig& config) {
  auto tokens = tokenize(raw, config);
  if (tokens.size() != 1)
    throw InvalidKeyword("keyword '" + std::string(raw) + "' does not normalize to a single word");
  if (config.is_removed(tokens.front().str()))
    throw InvalidKeyword("keyword '" + std::string(raw) + "' is a stop word");
  return std::move(tokens.front());
}

KeywordProfile prepare_keyword(std::string_view raw, const Lexicon& lexicon,
                               const DetectConfig& config) {
  Token token = normalize_keyword(raw, config.normalize);
  const auto* pron = lexicon.lookup(token.str());
  std::string stemmed = stem(token.str());
  return KeywordProfile{std::move(token), std::move(stemmed),
                        needle_for(pron, ClassSet::vowel_plosive()),
                        needle_for(pron, ClassSet::vowel_fricative())};
}

std::size_t baseline_count(std::span<const Token> tokens, std::string_view keyword) {
  return static_cast<std::size_t>(std::count_if(
      tokens.begin(), tokens.end(), [&](const Token& t) { return t.str() == keyword; }));
}

std::size_t stem_count(const NormalizedTranscript& transcript, std::string_view keyword) {
  const std::string target = stem(keyword);
  return static_cast<std::size_t>(
      std::count_if(transcript.tokens.begin(), transcript.tokens.end(),
                    [&](const Token& t) { return stem(t.str()) == target; }));
}

std::size_t pattern_count(const PrunedPattern& stream, const PrunedPattern& needle) {
  if (needle.empty()) throw std::invalid_argument("pattern_count: empty needle");
  std::size_t count = 0;
  auto it = stream.symbols.begin();
  const auto end = stream.symbols.end();
  while (true) {
    it = std::search(it, end, needle.symbols.begin(), needle.symbols.end());
    if (it == end) break;
    ++count;
    it += static_cast<std::ptrdiff_t>(needle.size());
  }
  return count;
}

DetectionOutcome detect(const NormalizedTranscript& transcript, const KeywordProfile& keyword,
                        const Lexicon& lexicon, const DetectConfig& config) {
  DetectionOutcome out;
  out.keyword = keyword.token.str();
  out.source_id = transcript.source_id;

  const auto& channels = config.channels;
  auto set = [&](Channel c, auto&& count_fn) {
    auto& slot = out.channels[static_cast<std::size_t>(c)];
    slot = channels.contains(c) ? ChannelResult::from_count(c, count_fn())
                                : ChannelResult::unavailable(c);
  };

  set(Channel::Baseline, [&] { return baseline_count(transcript.tokens, keyword.token.str()); });
  set(Channel::Stem, [&] {
    return static_cast<std::size_t>(
        std::count_if(transcript.tokens.begin(), transcript.tokens.end(),
                      [&](const Token& t) { return stem(t.str()) == keyword.stem; }));
  });

  // Always phonemized: the OOV tally is reported even with phoneme channels off.
  const PhonemeStream stream = phonemize_stream(transcript, lexicon);
  out.oov_count = stream.oov_count;

  auto phoneme_channel = [&](Channel c, const std::optional<PrunedPattern>& needle,
                             const ClassSet& classes) {
    auto& slot = out.channels[static_cast<std::size_t>(c)];
    if (!channels.contains(c) || !needle) {
      slot = ChannelResult::unavailable(c);
      return;
    }
    slot = ChannelResult::from_count(c, pattern_count(prune(stream.symbols, classes), *needle));
  };
  phoneme_channel(Channel::VowelPlosive, keyword.vowel_plosive, ClassSet::vowel_plosive());
  phoneme_channel(Channel::VowelFricative, keyword.vowel_fricative, ClassSet::vowel_fricative());

  out.fused_detected = fuse(out.channels);
  return out;
}

DetectionOutcome detect(const NormalizedTranscript& transcript, std::string_view keyword,
                        const Lexicon& lexicon, const DetectConfig& config) {
  return detect(transcript, prepare_keyword(keyword, lexicon, config), lexicon, config);
}

}  // namespace phonofuse

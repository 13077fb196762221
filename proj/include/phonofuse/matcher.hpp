#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "phonofuse/phonology.hpp"
#include "phonofuse/pronlex.hpp"
#include "phonofuse/text_normalize.hpp"

namespace phonofuse {

enum class Channel : std::uint8_t { Baseline, Stem, VowelPlosive, VowelFricative };

inline constexpr std::array<Channel, 4> kAllChannels = {
    Channel::Baseline, Channel::Stem, Channel::VowelPlosive, Channel::VowelFricative};

/// "baseline", "stem", "vowel_plosive", "vowel_fricative".
std::string_view to_string(Channel c);
Channel parse_channel(std::string_view name);

/// Channels that take part in the fused decision. The baseline is only
/// reported next to them.
constexpr bool is_fusion_member(Channel c) { return c != Channel::Baseline; }

class ChannelSet {
 public:
  constexpr ChannelSet() = default;
  static ChannelSet all() { return ChannelSet(0b1111); }
  static ChannelSet of(std::initializer_list<Channel> channels);
  /// Comma-separated channel names; throws std::invalid_argument.
  static ChannelSet parse(std::string_view spec);

  bool contains(Channel c) const noexcept { return bits_ & (1u << static_cast<unsigned>(c)); }
  bool empty() const noexcept { return bits_ == 0; }
  bool has_fusion_member() const noexcept { return bits_ & 0b1110; }
  std::string str() const;

  friend bool operator==(const ChannelSet&, const ChannelSet&) = default;

 private:
  constexpr explicit ChannelSet(std::uint8_t bits) : bits_(bits) {}
  std::uint8_t bits_ = 0;
};

struct ChannelResult {
  Channel channel = Channel::Baseline;
  std::size_t count = 0;
  bool detected = false;
  bool available = false;

  static ChannelResult from_count(Channel c, std::size_t count) { return {c, count, count >= 1, true}; }
  static ChannelResult unavailable(Channel c) { return {c, 0, false, false}; }

  friend bool operator==(const ChannelResult&, const ChannelResult&) = default;
};

/// Logical OR over the available fusion members.
bool fuse(std::span<const ChannelResult> results);

struct DetectionOutcome {
  std::string keyword;
  std::string source_id;
  std::array<ChannelResult, 4> channels;
  bool fused_detected = false;
  std::size_t oov_count = 0;

  const ChannelResult& operator[](Channel c) const { return channels[static_cast<std::size_t>(c)]; }
};

struct DetectConfig {
  NormalizeConfig normalize = NormalizeConfig::defaults();
  ChannelSet channels = ChannelSet::all();

  /// Throws std::invalid_argument when no fusion member is enabled or the
  /// normalization tables are malformed.
  void validate() const;
};

/// Runs a raw keyword through the transcript normalizer; it has to come
/// out as exactly one token that is not removed as a stop word.
Token normalize_keyword(std::string_view raw, const NormalizeConfig& config);

/// Everything about a keyword that does not depend on the transcript.
struct KeywordProfile {
  Token token;
  std::string stem;
  std::optional<PrunedPattern> vowel_plosive;    // nullopt: OOV or empty needle
  std::optional<PrunedPattern> vowel_fricative;
};

KeywordProfile prepare_keyword(std::string_view raw, const Lexicon& lexicon,
                               const DetectConfig& config);

/// Tokens exactly equal to the keyword.
std::size_t baseline_count(std::span<const Token> tokens, std::string_view keyword);
/// Tokens whose Porter stem equals the keyword's.
std::size_t stem_count(const NormalizedTranscript& transcript, std::string_view keyword);
/// Non-overlapping left-to-right occurrences of `needle` in `stream`.
/// The needle must not be empty.
std::size_t pattern_count(const PrunedPattern& stream, const PrunedPattern& needle);

DetectionOutcome detect(const NormalizedTranscript& transcript, const KeywordProfile& keyword,
                        const Lexicon& lexicon, const DetectConfig& config);

/// Throws InvalidKeyword.
DetectionOutcome detect(const NormalizedTranscript& transcript, std::string_view keyword,
                        const Lexicon& lexicon, const DetectConfig& config);

}  // namespace phonofuse

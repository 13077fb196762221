#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace phonofuse {

/// One lowercase word of a normalized transcript. Only a-z, never empty.
class Token {
 public:
  /// Throws std::invalid_argument unless `surface` is a non-empty run of a-z.
  explicit Token(std::string surface);

  const std::string& str() const noexcept { return surface_; }
  static bool is_valid(std::string_view s) noexcept;

  friend bool operator==(const Token&, const Token&) = default;
  friend auto operator<=>(const Token&, const Token&) = default;

 private:
  std::string surface_;
};

using TokenList = std::vector<Token>;

struct NormalizedTranscript {
  std::string source_id;
  TokenList tokens;
};

struct NormalizeConfig {
  std::set<std::string, std::less<>> stop_words;
  std::map<std::string, std::string, std::less<>> contractions;
  std::set<std::string, std::less<>> remove_marker_tokens;

  /// Built-in stop words, contraction table and {"null"} markers.
  static NormalizeConfig defaults();

  /// Throws std::invalid_argument when an entry breaks the casing or
  /// apostrophe rules.
  void validate() const;

  bool is_removed(std::string_view word) const;
};

const std::vector<std::string_view>& default_stop_words();
const std::vector<std::pair<std::string_view, std::string_view>>& default_contractions();

/// Lowercases, expands contractions, splits on anything that is not a
/// letter and spells out digit runs.
TokenList tokenize(std::string_view raw_text,
                   const NormalizeConfig& config = NormalizeConfig::defaults());

/// English cardinal naming for 0..999,999,999 without hyphens or "and".
/// Leading zeros are ignored. Throws ParseError for anything else.
TokenList number_to_words(std::string_view numeral);

TokenList remove_stop_words(const TokenList& tokens, const NormalizeConfig& config);

NormalizedTranscript normalize(std::string_view raw_text, const NormalizeConfig& config,
                               std::string source_id = {});

/// One word per line, '#' starts a comment.
std::set<std::string, std::less<>> load_stop_words(const std::filesystem::path& path);

/// Lines of `contracted<TAB>expansion`.
std::map<std::string, std::string, std::less<>> load_contractions(
    const std::filesystem::path& path);

std::string join(const TokenList& tokens, std::string_view sep = " ");

}  // namespace phonofuse

#include "phonofuse/text_normalize.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <stdexcept>

#include "phonofuse/errors.hpp"

namespace phonofuse {

namespace {

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

constexpr std::array<std::string_view, 20> kOnes = {
    "zero",    "one",     "two",       "three",    "four",     "five",    "six",
    "seven",   "eight",   "nine",      "ten",      "eleven",   "twelve",  "thirteen",
    "fourteen", "fifteen", "sixteen",  "seventeen", "eighteen", "nineteen"};

constexpr std::array<std::string_view, 10> kTens = {
    "", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety"};

void append_below_thousand(unsigned n, TokenList& out) {
  if (n >= 100) {
    out.emplace_back(std::string(kOnes[n / 100]));
    out.emplace_back("hundred");
    n %= 100;
  }
  if (n >= 20) {
    out.emplace_back(std::string(kTens[n / 10]));
    n %= 10;
  }
  if (n > 0) out.emplace_back(std::string(kOnes[n]));
}

// Lowercase ASCII and fold typographic single quotes to '\''.
std::string fold(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (i + 2 < raw.size() && static_cast<unsigned char>(raw[i]) == 0xE2 &&
        static_cast<unsigned char>(raw[i + 1]) == 0x80 &&
        (static_cast<unsigned char>(raw[i + 2]) == 0x98 ||
         static_cast<unsigned char>(raw[i + 2]) == 0x99)) {
      out.push_back('\'');
      i += 2;
      continue;
    }
    out.push_back(ascii_lower(raw[i]));
  }
  return out;
}

std::string expand_contractions(const std::string& text, const NormalizeConfig& config) {
  if (config.contractions.empty()) return text;
  std::string out;
  out.reserve(text.size() + 16);
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_lower(text[i]) && text[i] != '\'') {
      out.push_back(text[i++]);
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && (is_lower(text[j]) || text[j] == '\'')) ++j;
    std::string_view run(text.data() + i, j - i);
    // Quoting apostrophes around the word are not part of it.
    std::size_t lead = 0;
    while (lead < run.size() && run[lead] == '\'') ++lead;
    std::size_t trail = run.size();
    while (trail > lead && run[trail - 1] == '\'') --trail;
    std::string_view core = run.substr(lead, trail - lead);
    if (auto it = config.contractions.find(core); it != config.contractions.end()) {
      out.append(" ");
      out.append(it->second);
      out.append(" ");
    } else {
      out.append(run);
    }
    i = j;
  }
  return out;
}

void append_numeral(std::string_view digits, TokenList& out) {
  std::size_t first = digits.find_first_not_of('0');
  std::size_t significant = first == std::string_view::npos ? 0 : digits.size() - first;
  if (significant <= 9) {
    auto words = number_to_words(digits);
    out.insert(out.end(), std::make_move_iterator(words.begin()),
               std::make_move_iterator(words.end()));
    return;
  }
  for (char d : digits) out.emplace_back(std::string(kOnes[static_cast<unsigned>(d - '0')]));
}

}  // namespace

Token::Token(std::string surface) : surface_(std::move(surface)) {
  if (!is_valid(surface_)) throw std::invalid_argument("invalid token '" + surface_ + "'");
}

bool Token::is_valid(std::string_view s) noexcept {
  return !s.empty() && std::all_of(s.begin(), s.end(), is_lower);
}

NormalizeConfig NormalizeConfig::defaults() {
  NormalizeConfig config;
  for (auto w : default_stop_words()) config.stop_words.emplace(w);
  for (auto [k, v] : default_contractions()) config.contractions.emplace(k, v);
  config.remove_marker_tokens.emplace("null");
  return config;
}

void NormalizeConfig::validate() const {
  auto lowercase = [](std::string_view s) {
    return std::none_of(s.begin(), s.end(), [](char c) { return c >= 'A' && c <= 'Z'; });
  };
  for (const auto& w : stop_words)
    if (!lowercase(w)) throw std::invalid_argument("stop word not lowercase: " + w);
  for (const auto& w : remove_marker_tokens)
    if (!lowercase(w)) throw std::invalid_argument("marker token not lowercase: " + w);
  for (const auto& [k, v] : contractions) {
    if (!lowercase(k) || !lowercase(v))
      throw std::invalid_argument("contraction not lowercase: " + k);
    if (k.find('\'') == std::string::npos)
      throw std::invalid_argument("contraction key has no apostrophe: " + k);
    if (v.find('\'') != std::string::npos)
      throw std::invalid_argument("contraction expansion has an apostrophe: " + v);
  }
}

bool NormalizeConfig::is_removed(std::string_view word) const {
  return stop_words.contains(word) || remove_marker_tokens.contains(word);
}

TokenList number_to_words(std::string_view numeral) {
  if (numeral.empty() || !std::all_of(numeral.begin(), numeral.end(), is_digit))
    throw ParseError("not a numeral: '" + std::string(numeral) + "'");
  std::size_t first = numeral.find_first_not_of('0');
  if (first == std::string_view::npos) return {Token("zero")};
  std::string_view digits = numeral.substr(first);
  if (digits.size() > 9)
    throw ParseError("numeral out of range [0, 999999999]: '" + std::string(numeral) + "'");

  unsigned long value = 0;
  for (char d : digits) value = value * 10 + static_cast<unsigned>(d - '0');

  TokenList out;
  const auto millions = static_cast<unsigned>(value / 1'000'000);
  const auto thousands = static_cast<unsigned>(value / 1'000 % 1'000);
  const auto rest = static_cast<unsigned>(value % 1'000);
  if (millions) {
    append_below_thousand(millions, out);
    out.emplace_back("million");
  }
  if (thousands) {
    append_below_thousand(thousands, out);
    out.emplace_back("thousand");
  }
  append_below_thousand(rest, out);
  return out;
}

TokenList tokenize(std::string_view raw_text, const NormalizeConfig& config) {
  const std::string text = expand_contractions(fold(raw_text), config);
  TokenList tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = i;
    if (is_lower(text[i])) {
      while (j < text.size() && is_lower(text[j])) ++j;
      tokens.emplace_back(text.substr(i, j - i));
    } else if (is_digit(text[i])) {
      while (j < text.size() && is_digit(text[j])) ++j;
      append_numeral(std::string_view(text).substr(i, j - i), tokens);
    } else {
      j = i + 1;
    }
    i = j;
  }
  return tokens;
}

TokenList remove_stop_words(const TokenList& tokens, const NormalizeConfig& config) {
  TokenList out;
  out.reserve(tokens.size());
  std::copy_if(tokens.begin(), tokens.end(), std::back_inserter(out),
               [&](const Token& t) { return !config.is_removed(t.str()); });
  return out;
}

NormalizedTranscript normalize(std::string_view raw_text, const NormalizeConfig& config,
                               std::string source_id) {
  return {std::move(source_id), remove_stop_words(tokenize(raw_text, config), config)};
}

std::set<std::string, std::less<>> load_stop_words(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read stop-word file " + path.string());
  std::set<std::string, std::less<>> words;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    std::string word = line.substr(b, e - b + 1);
    std::transform(word.begin(), word.end(), word.begin(), ascii_lower);
    words.insert(std::move(word));
  }
  return words;
}

std::map<std::string, std::string, std::less<>> load_contractions(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read contraction file " + path.string());
  std::map<std::string, std::string, std::less<>> table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size())
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                       ": expected 'contracted<TAB>expansion'");
    std::string key = fold(line.substr(0, tab));
    std::string value = fold(line.substr(tab + 1));
    if (key.find('\'') == std::string::npos || value.find('\'') != std::string::npos)
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                       ": key needs an apostrophe and the expansion must not have one");
    table.insert_or_assign(std::move(key), std::move(value));
  }
  return table;
}

std::string join(const TokenList& tokens, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.append(sep);
    out.append(tokens[i].str());
  }
  return out;
}

}  // namespace phonofuse
